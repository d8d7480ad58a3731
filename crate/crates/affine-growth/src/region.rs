use std::collections::HashMap;
use std::fmt::Write as _;

use affine_permutation::AffinePermutation;
use classical_rs::{dual_rule, TileKind};
use combinatorics_core::Partition;

use crate::GrowthError;

/// Most tiles a single region may hold.
pub const MAX_TILES: usize = 40_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Orientation {
    Horizontal,
    Vertical,
}

/// H(r, c) is the edge from vertex (r, c-1) to (r, c), the south edge of tile (r, c).
/// V(r, c) is the edge from vertex (r-1, c) to (r, c), the east edge of tile (r, c).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EdgeCoordinate {
    pub orientation: Orientation,
    pub row: i64,
    pub col: i64,
}

impl EdgeCoordinate {
    pub fn h(row: i64, col: i64) -> Self {
        EdgeCoordinate { orientation: Orientation::Horizontal, row, col }
    }

    pub fn v(row: i64, col: i64) -> Self {
        EdgeCoordinate { orientation: Orientation::Vertical, row, col }
    }
}

/// A path through the diagram and the color of the line carrying it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShadowTrace {
    pub path: Vec<EdgeCoordinate>,
    pub color: usize,
}

/// Rows `r_top + 1 ..= r_bot` and columns `1 ..= c_hi` of the affine growth diagram.
///
/// Marks east of `c_hi` sit below `r_bot` and every line runs south-east, so the
/// zero labels on row line `r_top` and column line `c_hi` are exact.
#[derive(Debug, Clone)]
pub struct GrowthRegion {
    w: AffinePermutation,
    n: usize,
    r_top: i64,
    r_bot: i64,
    c_hi: i64,
    h: Vec<usize>,
    v: Vec<usize>,
    tiles: Vec<TileKind>,
    vcolors: Vec<Option<usize>>,
    hcolors: Vec<Option<usize>>,
}

impl GrowthRegion {
    /// Sweeps the region whose last row is `n * last_window`.
    pub fn build(w: &AffinePermutation, last_window: i64) -> Result<Self, GrowthError> {
        let n = w.n();
        let ni = n as i64;
        let r_bot = ni * last_window;
        // w(j) >= j - D, so columns past r_bot + D never reach the region
        let d = w.window().iter().zip(1..).map(|(&v, j): (&i64, i64)| (v - j).abs()).max().unwrap_or(0);
        let c_hi = (1..=(r_bot + d + ni).max(ni)).rev().find(|&j| w.evaluate(j) <= r_bot).unwrap_or(ni).max(ni);
        let r_top = ((1..=c_hi).map(|j| w.evaluate(j)).min().unwrap_or(1) - 1).min(r_bot);
        let rows = (r_bot - r_top) as usize;
        let cols = c_hi as usize;
        if rows.saturating_mul(cols) > MAX_TILES {
            return Err(GrowthError::RegionTooLarge { rows, cols });
        }
        let mut region = GrowthRegion {
            w: w.clone(),
            n,
            r_top,
            r_bot,
            c_hi,
            h: vec![0; (rows + 1) * cols],
            v: vec![0; rows * (cols + 1)],
            tiles: vec![TileKind::Empty; rows * cols],
            vcolors: vec![None; rows * (cols + 1)],
            hcolors: vec![None; (rows + 1) * cols],
        };
        region.sweep();
        region.color_vertical();
        region.color_horizontal();
        Ok(region)
    }

    fn hi(&self, r: i64, c: i64) -> usize {
        (r - self.r_top) as usize * self.c_hi as usize + (c - 1) as usize
    }

    fn vi(&self, r: i64, c: i64) -> usize {
        (r - self.r_top - 1) as usize * (self.c_hi as usize + 1) + c as usize
    }

    fn ti(&self, r: i64, c: i64) -> usize {
        (r - self.r_top - 1) as usize * self.c_hi as usize + (c - 1) as usize
    }

    fn sweep(&mut self) {
        for r in self.r_top + 1..=self.r_bot {
            for c in (1..=self.c_hi).rev() {
                let north = self.h[self.hi(r - 1, c)];
                let east = self.v[self.vi(r, c)];
                let (south, west, kind) = dual_rule(north, east, self.w.evaluate(c) == r);
                let (a, b, t) = (self.hi(r, c), self.vi(r, c - 1), self.ti(r, c));
                self.h[a] = south;
                self.v[b] = west;
                self.tiles[t] = kind;
            }
        }
    }

    fn color_vertical(&mut self) {
        for c in 0..=self.c_hi {
            let mut seen: HashMap<usize, usize> = HashMap::new();
            for r in self.r_top + 1..=self.r_bot {
                let k = self.vi(r, c);
                let label = self.v[k];
                if label > 0 {
                    let count = seen.entry(label).or_insert(0);
                    *count += 1;
                    self.vcolors[k] = Some(*count);
                }
            }
        }
    }

    /// A line entering a bump from the north leaves east, so it takes that
    /// vertical color; through a cross it keeps going south.
    fn color_horizontal(&mut self) {
        for r in (self.r_top..self.r_bot).rev() {
            for c in 1..=self.c_hi {
                let k = self.hi(r, c);
                if self.h[k] == 0 {
                    continue;
                }
                self.hcolors[k] = match self.tiles[self.ti(r + 1, c)] {
                    TileKind::Bump => self.vcolors[self.vi(r + 1, c)],
                    TileKind::Cross => self.hcolors[self.hi(r + 1, c)],
                    TileKind::Empty | TileKind::Marked => None,
                };
            }
        }
    }

    pub fn w(&self) -> &AffinePermutation {
        &self.w
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn row_range(&self) -> (i64, i64) {
        (self.r_top, self.r_bot)
    }

    pub fn col_range(&self) -> (i64, i64) {
        (1, self.c_hi)
    }

    /// Last window whose rows lie in the region.
    pub fn last_window(&self) -> i64 {
        self.r_bot.div_euclid(self.n as i64)
    }

    pub fn contains_edge(&self, e: EdgeCoordinate) -> bool {
        match e.orientation {
            Orientation::Horizontal => (self.r_top..=self.r_bot).contains(&e.row) && (1..=self.c_hi).contains(&e.col),
            Orientation::Vertical => (self.r_top + 1..=self.r_bot).contains(&e.row) && (0..=self.c_hi).contains(&e.col),
        }
    }

    pub fn label(&self, e: EdgeCoordinate) -> Option<usize> {
        if !self.contains_edge(e) {
            return None;
        }
        Some(match e.orientation {
            Orientation::Horizontal => self.h[self.hi(e.row, e.col)],
            Orientation::Vertical => self.v[self.vi(e.row, e.col)],
        })
    }

    pub fn h_label(&self, r: i64, c: i64) -> Option<usize> {
        self.label(EdgeCoordinate::h(r, c))
    }

    pub fn v_label(&self, r: i64, c: i64) -> Option<usize> {
        self.label(EdgeCoordinate::v(r, c))
    }

    pub fn tile(&self, r: i64, c: i64) -> Option<TileKind> {
        if (self.r_top + 1..=self.r_bot).contains(&r) && (1..=self.c_hi).contains(&c) {
            Some(self.tiles[self.ti(r, c)])
        } else {
            None
        }
    }

    /// Gamma(i, j): each vertical edge labeled k > 0 on column line j at or
    /// above row i adds a box to column k.
    pub fn vertex_partition(&self, i: i64, j: i64) -> Result<Partition, GrowthError> {
        if !(self.r_top..=self.r_bot).contains(&i) || !(0..=self.c_hi).contains(&j) {
            return Err(GrowthError::OutOfRegion(format!("vertex ({i},{j})")));
        }
        let mut cols: Vec<usize> = Vec::new();
        for r in self.r_top + 1..=i {
            let label = self.v[self.vi(r, j)];
            if label > 0 {
                if cols.len() < label {
                    cols.resize(label, 0);
                }
                cols[label - 1] += 1;
            }
        }
        Partition::from_column_lengths(&cols)
            .map_err(|_| GrowthError::Inconsistent(format!("column counts {cols:?} at ({i},{j})")))
    }

    /// Color of a vertical edge: one more than the number of edges with the same
    /// label above it on its column line.
    pub fn vertical_edge_color(&self, r: i64, c: i64) -> Result<usize, GrowthError> {
        let e = EdgeCoordinate::v(r, c);
        if !self.contains_edge(e) {
            return Err(GrowthError::OutOfRegion(format!("{e:?}")));
        }
        self.vcolors[self.vi(r, c)].ok_or(GrowthError::Uncolored(e))
    }

    /// Color of a horizontal edge, or None when its line leaves the region
    /// before reaching a vertical edge (or the label is 0).
    pub fn horizontal_edge_color(&self, r: i64, c: i64) -> Option<usize> {
        self.contains_edge(EdgeCoordinate::h(r, c)).then(|| self.hcolors[self.hi(r, c)]).flatten()
    }

    /// Color of any edge with a nonzero label, if determined inside the region.
    pub fn edge_color(&self, e: EdgeCoordinate) -> Option<usize> {
        match e.orientation {
            Orientation::Horizontal => self.horizontal_edge_color(e.row, e.col),
            Orientation::Vertical => self.vertical_edge_color(e.row, e.col).ok(),
        }
    }

    /// Follows the line through `start` south-east until it crosses a vertical edge.
    pub fn trace_shadow_line(&self, start: EdgeCoordinate) -> Result<ShadowTrace, GrowthError> {
        match self.label(start) {
            None => return Err(GrowthError::OutOfRegion(format!("{start:?}"))),
            Some(0) => return Err(GrowthError::Uncolored(start)),
            Some(_) => {}
        }
        let mut path = vec![start];
        let mut e = start;
        loop {
            if e.orientation == Orientation::Vertical {
                let color = self.vertical_edge_color(e.row, e.col)?;
                return Ok(ShadowTrace { path, color });
            }
            let below = self.tile(e.row + 1, e.col).ok_or(GrowthError::TraceLeftRegion(start))?;
            e = match below {
                TileKind::Bump => EdgeCoordinate::v(e.row + 1, e.col),
                TileKind::Cross => EdgeCoordinate::h(e.row + 1, e.col),
                TileKind::Empty | TileKind::Marked => {
                    return Err(GrowthError::Inconsistent(format!("line enters {below:?} tile at {e:?}")))
                }
            };
            path.push(e);
        }
    }

    /// One line per edge, "H r c label [color]" or "V r c label [color]", sorted.
    pub fn dump(&self) -> String {
        let mut edges: Vec<EdgeCoordinate> = Vec::new();
        for r in self.r_top..=self.r_bot {
            for c in 1..=self.c_hi {
                edges.push(EdgeCoordinate::h(r, c));
            }
        }
        for r in self.r_top + 1..=self.r_bot {
            for c in 0..=self.c_hi {
                edges.push(EdgeCoordinate::v(r, c));
            }
        }
        edges.sort();
        let mut out = String::new();
        for e in edges {
            let tag = if e.orientation == Orientation::Horizontal { "H" } else { "V" };
            let label = self.label(e).expect("edge in region");
            let _ = write!(out, "{tag} {} {} {label}", e.row, e.col);
            if let Some(color) = self.edge_color(e) {
                let _ = write!(out, " {color}");
            }
            out.push('\n');
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> AffinePermutation {
        s.parse().unwrap()
    }

    #[test]
    fn two_by_two_hand_sweep() {
        let r = GrowthRegion::build(&w("2,1"), 1).unwrap();
        assert_eq!(r.tile(1, 2), Some(TileKind::Marked));
        assert_eq!(r.tile(2, 1), Some(TileKind::Marked));
        assert_eq!(r.v_label(1, 1), Some(1));
        assert_eq!(r.h_label(1, 1), Some(0));
        assert_eq!(r.h_label(2, 1), Some(1));
    }

    #[test]
    fn worked_example_corner_partition() {
        let r = GrowthRegion::build(&w("10,3,-3,12"), 8).unwrap();
        assert_eq!(r.vertex_partition(24, 4).unwrap().parts(), &[6, 6, 5]);
        let colors: Vec<usize> = (25..=28).map(|i| r.vertical_edge_color(i, 4).unwrap()).collect();
        assert_eq!(colors, vec![1, 2, 1, 3]);
        let north: Vec<usize> = (1..=4).map(|i| r.horizontal_edge_color(24, 5 - i).unwrap()).collect();
        assert_eq!(north, vec![1, 1, 2, 3]);
    }

    #[test]
    fn partitions_empty_north_east_of_marks() {
        let r = GrowthRegion::build(&w("10,3,-3,12"), 4).unwrap();
        let (top, _) = r.row_range();
        for j in 0..=r.col_range().1 {
            assert!(r.vertex_partition(top, j).unwrap().is_empty());
        }
        assert!(r.vertex_partition(top - 1, 0).is_err());
    }

    #[test]
    fn identity_marks_on_diagonal() {
        let r = GrowthRegion::build(&AffinePermutation::identity(3).unwrap(), 4).unwrap();
        for i in 1..=12 {
            assert_eq!(r.tile(i, i), Some(TileKind::Marked));
        }
        let (top, bot) = r.row_range();
        assert_eq!((top, bot), (0, 12));
        for i in 1..=12 {
            for j in 1..=r.col_range().1 {
                assert!(r.h_label(i, j).unwrap() <= 1 || i > j);
            }
        }
    }

    #[test]
    fn traces_agree_with_colors() {
        let r = GrowthRegion::build(&w("10,3,-3,12"), 10).unwrap();
        let (top, bot) = r.row_range();
        for row in top..bot {
            for c in 1..=r.col_range().1 {
                let e = EdgeCoordinate::h(row, c);
                if r.label(e) == Some(0) {
                    continue;
                }
                match r.trace_shadow_line(e) {
                    Ok(t) => {
                        assert_eq!(Some(t.color), r.horizontal_edge_color(row, c));
                        let last = *t.path.last().unwrap();
                        assert_eq!(r.label(last), r.label(e));
                    }
                    Err(GrowthError::TraceLeftRegion(_)) => assert_eq!(r.horizontal_edge_color(row, c), None),
                    Err(other) => panic!("{other}"),
                }
            }
        }
        let v = EdgeCoordinate::v(25, 4);
        assert_eq!(r.trace_shadow_line(v).unwrap().path, vec![v]);
    }

    #[test]
    fn dump_lines_sorted() {
        let r = GrowthRegion::build(&w("2,1"), 1).unwrap();
        let dump = r.dump();
        assert!(dump.lines().any(|l| l == "V 1 1 1 1"));
        assert!(dump.lines().any(|l| l == "H 1 1 0"));
    }
}
