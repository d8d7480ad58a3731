use classical_rs::{dual_rule, TileKind};
use combinatorics_core::SkewTableau;

use crate::DarsError;

/// The n x n diagram whose north boundary (right to left) carries the columns
/// of Q and whose east boundary (top to bottom) carries the columns of P.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OmegaDiagram {
    pub n: usize,
    /// `h[r][c]`: south edge of tile (r, c), r in 0..=n, c in 1..=n (index 0 unused).
    pub h: Vec<Vec<usize>>,
    /// `v[r][c]`: east edge of tile (r, c), r in 1..=n (index 0 unused), c in 0..=n.
    pub v: Vec<Vec<usize>>,
    pub tiles: Vec<Vec<TileKind>>,
    /// Boundary colors: rows of Q (north, right to left) and of P (east).
    pub north_colors: Vec<usize>,
    pub east_colors: Vec<usize>,
    /// Color class of each edge; `None` for classes touching no boundary edge.
    h_class: Vec<Vec<usize>>,
    v_class: Vec<Vec<usize>>,
    class_color: Vec<Option<usize>>,
    /// Classes that received two different boundary colors.
    pub conflicts: Vec<(usize, usize)>,
}

impl OmegaDiagram {
    pub fn is_saturated(&self) -> bool {
        self.conflicts.is_empty()
    }

    pub fn h_color(&self, r: usize, c: usize) -> Option<usize> {
        self.class_color[self.h_class[r][c]]
    }

    pub fn v_color(&self, r: usize, c: usize) -> Option<usize> {
        self.class_color[self.v_class[r][c]]
    }
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn find(&mut self, x: usize) -> usize {
        let mut x = x;
        while self.0[x] != x {
            self.0[x] = self.0[self.0[x]];
            x = self.0[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (a, b) = (self.find(a), self.find(b));
        self.0[a] = b;
    }
}

/// Fills the diagram with the dual rules and propagates boundary colors.
///
/// Lines are joined through tiles as usual, and at a bump both lines are put
/// in one class: colors spread along repel chains.
pub fn build_omega(p: &SkewTableau, q: &SkewTableau) -> Result<OmegaDiagram, DarsError> {
    if p.inner() != q.inner() || p.outer() != q.outer() || p.size() != q.size() {
        return Err(DarsError::ShapeMismatch(format!("{:?} vs {:?}", p.outer(), q.outer())));
    }
    let n = p.size();
    let mut h = vec![vec![0; n + 1]; n + 1];
    let mut v = vec![vec![0; n + 1]; n + 1];
    let mut tiles = vec![vec![TileKind::Empty; n + 1]; n + 1];
    let (col_q, col_p) = (q.column_word(), p.column_word());
    for i in 1..=n {
        h[0][n - i + 1] = col_q[i - 1];
        v[i][n] = col_p[i - 1];
    }
    for r in 1..=n {
        for c in (1..=n).rev() {
            let (s, w, kind) = dual_rule(h[r - 1][c], v[r][c], false);
            h[r][c] = s;
            v[r][c - 1] = w;
            tiles[r][c] = kind;
        }
    }

    let hid = |r: usize, c: usize| r * (n + 1) + c;
    let vid = |r: usize, c: usize| (n + 1) * (n + 1) + r * (n + 1) + c;
    let mut uf = UnionFind((0..2 * (n + 1) * (n + 1)).collect());
    for r in 1..=n {
        for c in 1..=n {
            let (north, east, south, west) = (hid(r - 1, c), vid(r, c), hid(r, c), vid(r, c - 1));
            if tiles[r][c] == TileKind::Bump {
                uf.union(north, east);
                uf.union(west, south);
                uf.union(north, west);
            } else {
                uf.union(north, south);
                uf.union(west, east);
            }
        }
    }

    let (row_q, row_p) = (q.row_word(), p.row_word());
    let mut class_color = vec![None; 2 * (n + 1) * (n + 1)];
    let mut conflicts = Vec::new();
    for i in 1..=n {
        for (edge, color) in [(hid(0, n - i + 1), row_q[i - 1]), (vid(i, n), row_p[i - 1])] {
            let k = uf.find(edge);
            match class_color[k] {
                Some(c) if c != color => conflicts.push((c, color)),
                _ => class_color[k] = Some(color),
            }
        }
    }
    let h_class = (0..=n).map(|r| (0..=n).map(|c| uf.find(hid(r, c))).collect()).collect();
    let v_class = (0..=n).map(|r| (0..=n).map(|c| uf.find(vid(r, c))).collect()).collect();
    Ok(OmegaDiagram {
        n,
        h,
        v,
        tiles,
        north_colors: row_q,
        east_colors: row_p,
        h_class,
        v_class,
        class_color,
        conflicts,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use combinatorics_core::looparrowright;

    fn skew(lambda: &str, t: &str) -> SkewTableau {
        looparrowright(&lambda.parse().unwrap(), &t.parse().unwrap())
    }

    #[test]
    fn not_saturated_fixture() {
        let o = build_omega(&skew("2,1", "1,4/2,3"), &skew("2,1", "2,3/1,4")).unwrap();
        assert!(!o.is_saturated());
    }

    #[test]
    fn saturated_fixture() {
        let o = build_omega(&skew("4,3", "1,3,4/2"), &skew("4,3", "1,2,3/4")).unwrap();
        assert!(o.is_saturated());
        assert_eq!(o.h_color(0, 4), Some(1));
    }

    #[test]
    fn single_row_is_saturated_despite_bumps() {
        for n in 1..=5 {
            let t = skew("", &(1..=n).map(|x| x.to_string()).collect::<Vec<_>>().join(","));
            let o = build_omega(&t, &t).unwrap();
            assert!(o.is_saturated());
            // label 1 meets label 1 at the north-east tile
            assert_eq!(o.tiles[1][n], TileKind::Bump);
            for c in 1..=n {
                assert_eq!(o.h_color(n, c).unwrap_or(1), 1);
            }
        }
    }

    #[test]
    fn shape_mismatch_is_an_error() {
        assert!(build_omega(&skew("1", "1,2"), &skew("", "1,2")).is_err());
    }
}
