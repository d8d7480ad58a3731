//! ASCII, SVG and JSON pictures of a slice of the growth diagram. All three
//! are drawn from the same [`RenderData`].

use std::fmt::Write as _;

use affine_growth::{EdgeCoordinate, GrowthRegion};
use affine_permutation::AffinePermutation;
use classical_rs::TileKind;
use serde::Serialize;

use crate::CliError;

/// Line colors 1..12, cycling past 12: the eight Okabe-Ito colors then four
/// from Paul Tol's muted scheme.
pub const PALETTE: [&str; 12] = [
    "#0072B2", "#D55E00", "#009E73", "#CC79A7", "#E69F00", "#56B4E9", "#F0E442", "#000000", "#882255", "#44AA99",
    "#999933", "#AA4499",
];

const UNCOLORED: &str = "#BBBBBB";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Ascii,
    Svg,
    Json,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RenderSpec {
    pub format: Format,
    /// Inclusive range of standard windows; None picks one up to N₀ + 1.
    pub windows: Option<(i64, i64)>,
    pub show_colors: bool,
    pub show_labels: bool,
    pub show_partitions: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EdgeData {
    pub orientation: char,
    pub row: i64,
    pub col: i64,
    pub label: usize,
    pub color: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TileData {
    pub row: i64,
    pub col: i64,
    pub kind: char,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CornerPartition {
    pub window: i64,
    pub row: i64,
    pub col: i64,
    pub lambda: Vec<usize>,
}

/// Rows `row_lines.0 ..= row_lines.1` and columns `0 ..= cols` of vertex lines.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RenderData {
    pub w: String,
    pub n: usize,
    pub windows: (i64, i64),
    pub row_lines: (i64, i64),
    pub cols: i64,
    pub tiles: Vec<TileData>,
    pub edges: Vec<EdgeData>,
    pub partitions: Vec<CornerPartition>,
}

fn kind_char(k: TileKind) -> char {
    match k {
        TileKind::Empty => 'e',
        TileKind::Marked => 'X',
        TileKind::Bump => 'b',
        TileKind::Cross => 'c',
    }
}

/// Collects the slice. The region reaches two windows further down so that
/// horizontal colors near the bottom are resolved.
pub fn render_data(w: &AffinePermutation, windows: Option<(i64, i64)>) -> Result<RenderData, CliError> {
    let n = w.n() as i64;
    let (a, b) = match windows {
        Some(r) => r,
        None => {
            let n0 = dars::forward(w)?.n0;
            let probe = GrowthRegion::build(w, n0 + 1)?;
            let top = probe.row_range().0;
            ((top.div_euclid(n) + i64::from(top.rem_euclid(n) != 0) + 1).max(1), n0 + 1)
        }
    };
    if b < a {
        return Err(CliError::Usage(format!("empty window range {a}..{b}")));
    }
    let region = GrowthRegion::build(w, b + 2)?;
    let (top, _) = region.row_range();
    if (a - 1) * n < top {
        return Err(CliError::Usage(format!("window {a} lies above the computed region (top row line {top})")));
    }
    let (r0, r1) = ((a - 1) * n, b * n);
    // every mark in these rows lies in columns 1..=cols
    let cols = (1..=region.col_range().1).filter(|&c| (r0 + 1..=r1).contains(&w.evaluate(c))).max().unwrap_or(n).max(n);
    let mut tiles = Vec::new();
    let mut edges = Vec::new();
    for r in r0..=r1 {
        for c in 1..=cols {
            if r > r0 {
                tiles.push(TileData { row: r, col: c, kind: kind_char(region.tile(r, c).expect("in region")) });
            }
            let e = EdgeCoordinate::h(r, c);
            edges.push(EdgeData { orientation: 'H', row: r, col: c, label: region.label(e).expect("in region"), color: region.edge_color(e) });
        }
        if r > r0 {
            for c in 0..=cols {
                let e = EdgeCoordinate::v(r, c);
                edges.push(EdgeData { orientation: 'V', row: r, col: c, label: region.label(e).expect("in region"), color: region.edge_color(e) });
            }
        }
    }
    let partitions = (a..=b + 1)
        .map(|m| -> Result<CornerPartition, CliError> {
            Ok(CornerPartition { window: m, row: (m - 1) * n, col: n, lambda: region.lambda(m)?.parts().to_vec() })
        })
        .collect::<Result<_, _>>()?;
    Ok(RenderData { w: w.to_string(), n: w.n(), windows: (a, b), row_lines: (r0, r1), cols, tiles, edges, partitions })
}

impl RenderData {
    fn edge(&self, o: char, r: i64, c: i64) -> Option<&EdgeData> {
        // edges are stored row by row: H(r, 1..=cols) then V(r, 0..=cols)
        self.edges.iter().find(|e| e.orientation == o && e.row == r && e.col == c)
    }

    fn tile(&self, r: i64, c: i64) -> Option<&TileData> {
        self.tiles.iter().find(|t| t.row == r && t.col == c)
    }
}

/// Text of an edge: "." for label 0, the label, and "/color" when asked.
pub fn edge_token(e: &EdgeData, spec: &RenderSpec) -> String {
    if !spec.show_labels {
        return if e.orientation == 'H' { "-".into() } else { "|".into() };
    }
    if e.label == 0 {
        return ".".into();
    }
    match (spec.show_colors, e.color) {
        (true, Some(c)) => format!("{}/{c}", e.label),
        (true, None) => format!("{}/?", e.label),
        (false, _) => e.label.to_string(),
    }
}

/// Width of every field in the ASCII grid.
pub const FIELD: usize = 5;

/// Vertex lines alternate with tile lines. Fields of width [`FIELD`] alternate
/// between vertex columns (vertices, vertical edges) and tile columns
/// (horizontal edges, tile symbols), after a row number of width [`FIELD`].
pub fn ascii(data: &RenderData, spec: &RenderSpec) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "w = {}  windows {}..{}  columns 1..{}", data.w, data.windows.0, data.windows.1, data.cols);
    let (r0, r1) = data.row_lines;
    for r in r0..=r1 {
        if r > r0 {
            let _ = write!(out, "{:>FIELD$}", "");
            for c in 0..=data.cols {
                if c > 0 {
                    let sym = match data.tile(r, c).map(|t| t.kind) {
                        Some('X') => "X",
                        Some('b') => "b",
                        Some('c') => "c",
                        _ => "",
                    };
                    let _ = write!(out, "{sym:^FIELD$}");
                }
                let tok = data.edge('V', r, c).map(|e| edge_token(e, spec)).unwrap_or_default();
                let _ = write!(out, "{tok:^FIELD$}");
            }
            out.push('\n');
        }
        let _ = write!(out, "{r:>FIELD$}");
        for c in 0..=data.cols {
            if c > 0 {
                let tok = data.edge('H', r, c).map(|e| edge_token(e, spec)).unwrap_or_default();
                let _ = write!(out, "{tok:^FIELD$}");
            }
            let _ = write!(out, "{:^FIELD$}", "+");
        }
        out.push('\n');
    }
    if spec.show_partitions {
        for p in &data.partitions {
            let parts: Vec<String> = p.lambda.iter().map(usize::to_string).collect();
            let _ = writeln!(out, "lambda^{} at ({},{}) = ({})", p.window, p.row, p.col, parts.join(","));
        }
    }
    out
}

pub fn palette_color(color: Option<usize>) -> &'static str {
    color.map_or(UNCOLORED, |c| PALETTE[(c - 1) % PALETTE.len()])
}

/// Tiles are `SCALE` pixels; row lines increase downward.
const SCALE: f64 = 36.0;
const MARGIN: f64 = 48.0;

pub fn svg(data: &RenderData, spec: &RenderSpec) -> String {
    let (r0, r1) = data.row_lines;
    let x = |c: f64| MARGIN + c * SCALE;
    let y = |r: f64| MARGIN + (r - r0 as f64) * SCALE;
    let width = x(data.cols as f64) + MARGIN;
    let height = y(r1 as f64) + MARGIN;
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}" font-family="monospace" font-size="9">"#
    );
    let _ = writeln!(out, "<title>growth diagram of {} windows {}..{}</title>", data.w, data.windows.0, data.windows.1);
    for r in r0..=r1 {
        let stroke = if r.rem_euclid(data.n as i64) == 0 { "#666" } else { "#DDD" };
        let _ = writeln!(out, r#"<line x1="{}" y1="{}" x2="{}" y2="{}" stroke="{stroke}"/>"#, x(0.0), y(r as f64), x(data.cols as f64), y(r as f64));
        let _ = writeln!(out, r#"<text x="{}" y="{}" text-anchor="end">{r}</text>"#, x(0.0) - 6.0, y(r as f64) + 3.0);
    }
    for c in 0..=data.cols {
        let stroke = if c % data.n as i64 == 0 { "#666" } else { "#DDD" };
        let _ = writeln!(out, r#"<line x1="{}" y1="{}" x2="{}" y2="{}" stroke="{stroke}"/>"#, x(c as f64), y(r0 as f64), x(c as f64), y(r1 as f64));
    }
    // shadow-line segments join edge midpoints inside each tile
    for t in &data.tiles {
        let (r, c) = (t.row as f64, t.col as f64);
        let north = (x(c - 0.5), y(r - 1.0), data.edge('H', t.row - 1, t.col));
        let south = (x(c - 0.5), y(r), data.edge('H', t.row, t.col));
        let east = (x(c), y(r - 0.5), data.edge('V', t.row, t.col));
        let west = (x(c - 1.0), y(r - 0.5), data.edge('V', t.row, t.col - 1));
        let pairs = match t.kind {
            'b' => vec![(north, east), (west, south)],
            'c' => vec![(north, south), (west, east)],
            'X' => vec![(west, south)],
            _ => vec![],
        };
        for (a, b) in pairs {
            let color = b.2.and_then(|e| e.color).or(a.2.and_then(|e| e.color));
            let _ = writeln!(
                out,
                r#"<line x1="{}" y1="{}" x2="{}" y2="{}" stroke="{}" stroke-width="2.5" stroke-linecap="round"/>"#,
                a.0,
                a.1,
                b.0,
                b.1,
                if spec.show_colors { palette_color(color) } else { "#333" }
            );
        }
        if t.kind == 'X' {
            let _ = writeln!(out, r##"<circle cx="{}" cy="{}" r="5" fill="#000" data-mark="{} {}"/>"##, x(c - 0.5), y(r - 0.5), t.row, t.col);
        }
    }
    if spec.show_labels {
        for e in data.edges.iter().filter(|e| e.label > 0) {
            let (px, py) = match e.orientation {
                'H' => (x(e.col as f64 - 0.5) + 3.0, y(e.row as f64) - 3.0),
                _ => (x(e.col as f64) + 3.0, y(e.row as f64 - 0.5) - 3.0),
            };
            let color = e.color.map_or(String::new(), |c| c.to_string());
            let _ = writeln!(
                out,
                r#"<text x="{px}" y="{py}" data-edge="{} {} {}" data-label="{}" data-color="{color}">{}</text>"#,
                e.orientation,
                e.row,
                e.col,
                e.label,
                edge_token(e, spec)
            );
        }
    }
    if spec.show_partitions {
        for p in &data.partitions {
            let parts: Vec<String> = p.lambda.iter().map(usize::to_string).collect();
            let _ = writeln!(
                out,
                r##"<text x="{}" y="{}" fill="#B00">({})</text>"##,
                x(p.col as f64) + 4.0,
                y(p.row as f64) + 11.0,
                parts.join(",")
            );
        }
    }
    out.push_str("</svg>\n");
    out
}

pub fn render(w: &AffinePermutation, spec: &RenderSpec) -> Result<String, CliError> {
    let data = render_data(w, spec.windows)?;
    Ok(match spec.format {
        Format::Ascii => ascii(&data, spec),
        Format::Svg => svg(&data, spec),
        Format::Json => serde_json::to_string_pretty(&data).expect("plain data serializes") + "\n",
    })
}
