use combinatorics_core::StandardTableau;

use crate::growth::{tableaux_from_labels, EdgeLabels};
use crate::perm::FinitePermutation;

/// One shadow line, given by its poles (row, column) sorted by column.
/// Rows strictly decrease along the line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShadowLine {
    pub poles: Vec<(usize, usize)>,
}

impl ShadowLine {
    /// Corners where the line turns from east to north; these seed the next pass.
    pub fn corners(&self) -> Vec<(usize, usize)> {
        self.poles.windows(2).map(|p| (p[0].0, p[1].1)).collect()
    }

    /// Edges crossed by the line inside an n x n grid, as (is_horizontal, i, j).
    pub fn crossed_edges(&self, n: usize) -> Vec<(bool, usize, usize)> {
        let mut out = Vec::new();
        let (r1, c1) = self.poles[0];
        out.extend((r1..=n).map(|i| (true, i, c1)));
        for p in self.poles.windows(2) {
            let ((ra, ca), (rb, cb)) = (p[0], p[1]);
            out.extend((ca..cb).map(|j| (false, ra, j)));
            out.extend((rb..ra).map(|i| (true, i, cb)));
        }
        let (rm, cm) = *self.poles.last().expect("nonempty line");
        out.extend((cm..=n).map(|j| (false, rm, j)));
        out
    }
}

/// Splits points into successive shadow lines: each line is the set of points
/// with no other remaining point strictly north-west of it.
fn lines_of(mut points: Vec<(usize, usize)>) -> Vec<ShadowLine> {
    let mut lines = Vec::new();
    while !points.is_empty() {
        let (mut poles, rest): (Vec<(usize, usize)>, Vec<(usize, usize)>) = points
            .iter()
            .partition(|&&(r, c)| !points.iter().any(|&(r2, c2)| r2 < r && c2 < c));
        poles.sort_by_key(|p| p.1);
        lines.push(ShadowLine { poles });
        points = rest;
    }
    lines
}

/// All passes of the shadow construction; pass k + 1 starts from the corners of pass k.
pub fn shadow_passes(w: &FinitePermutation) -> Vec<Vec<ShadowLine>> {
    let mut points: Vec<(usize, usize)> = (1..=w.n()).map(|j| (w.at(j), j)).collect();
    let mut passes = Vec::new();
    while !points.is_empty() {
        let lines = lines_of(points);
        points = lines.iter().flat_map(ShadowLine::corners).collect();
        passes.push(lines);
    }
    passes
}

/// Edge labels where every edge crossed by a line of pass k is labeled k.
pub fn shadow_edge_labels(w: &FinitePermutation) -> EdgeLabels {
    let n = w.n();
    let mut labels = EdgeLabels::zeros(n);
    for (k, pass) in shadow_passes(w).iter().enumerate() {
        for line in pass {
            for (horizontal, i, j) in line.crossed_edges(n) {
                if horizontal {
                    labels.h[i][j] = k + 1;
                } else {
                    labels.v[i][j] = k + 1;
                }
            }
        }
    }
    labels
}

pub fn rs_shadow(w: &FinitePermutation) -> (StandardTableau, StandardTableau) {
    tableaux_from_labels(&shadow_edge_labels(w))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::growth::growth_diagram;

    #[test]
    fn worked_example_passes() {
        let w: FinitePermutation = "365214".parse().unwrap();
        let passes = shadow_passes(&w);
        let counts: Vec<usize> = passes.iter().map(Vec::len).collect();
        assert_eq!(counts, vec![2, 2, 1, 1]);
        assert_eq!(passes[0][0].poles, vec![(3, 1), (2, 4), (1, 5)]);
        let (p, q) = rs_shadow(&w);
        assert_eq!(p.to_string(), "1,4/2,5/3/6");
        assert_eq!(q.to_string(), "1,2/3,6/4/5");
    }

    #[test]
    fn identity_is_one_pass() {
        let passes = shadow_passes(&FinitePermutation::identity(5));
        assert_eq!(passes.len(), 1);
        assert_eq!(passes[0].len(), 5);
        assert_eq!(rs_shadow(&FinitePermutation::identity(5)).0.to_string(), "1,2,3,4,5");
    }

    #[test]
    fn labels_match_growth_for_s5() {
        for w in FinitePermutation::all(5) {
            assert_eq!(shadow_edge_labels(&w), growth_diagram(&w).labels, "{w}");
        }
    }
}
