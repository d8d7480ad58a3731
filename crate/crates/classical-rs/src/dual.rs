//! Dual growth: labels start at 0 on the north and east boundary and are pushed
//! south-west through each tile.

use combinatorics_core::StandardTableau;

use crate::growth::EdgeLabels;
use crate::perm::FinitePermutation;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TileKind {
    Empty,
    Marked,
    Bump,
    Cross,
}

/// Given the north and east labels of a tile, returns (south, west, kind).
pub fn dual_rule(north: usize, east: usize, marked: bool) -> (usize, usize, TileKind) {
    if marked {
        debug_assert!(north == 0 && east == 0, "marked tile with labels {north},{east}");
        return (1, 1, TileKind::Marked);
    }
    if north == east {
        if north == 0 {
            (0, 0, TileKind::Empty)
        } else {
            (north + 1, north + 1, TileKind::Bump)
        }
    } else {
        (north, east, TileKind::Cross)
    }
}

/// Given the south and west labels of a tile, returns (north, east, kind).
pub fn reverse_dual_rule(south: usize, west: usize) -> (usize, usize, TileKind) {
    match (south, west) {
        (0, 0) => (0, 0, TileKind::Empty),
        (1, 1) => (0, 0, TileKind::Marked),
        (s, w) if s == w => (s - 1, s - 1, TileKind::Bump),
        (s, w) => (s, w, TileKind::Cross),
    }
}

/// Dual growth labels on the n x n rock diagram of `w`.
pub fn dual_edge_labels(w: &FinitePermutation) -> EdgeLabels {
    let n = w.n();
    let mut labels = EdgeLabels::zeros(n);
    for i in 1..=n {
        for j in (1..=n).rev() {
            let (s, west, _) = dual_rule(labels.h[i - 1][j], labels.v[i][j], w.at(j) == i);
            labels.h[i][j] = s;
            labels.v[i][j - 1] = west;
        }
    }
    labels
}

/// (P', Q'): P' from the west boundary read top to bottom, Q' from the south
/// boundary read right to left. A label is the column of the entry.
pub fn dual_rs(w: &FinitePermutation) -> (StandardTableau, StandardTableau) {
    let n = w.n();
    let labels = dual_edge_labels(w);
    let west: Vec<usize> = (1..=n).map(|i| labels.v[i][0]).collect();
    let south: Vec<usize> = (1..=n).rev().map(|j| labels.h[n][j]).collect();
    (
        StandardTableau::from_column_sequence(&west).expect("west boundary is a standard column sequence"),
        StandardTableau::from_column_sequence(&south).expect("south boundary is a standard column sequence"),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use combinatorics_core::evacuation;

    #[test]
    fn rules_are_mutually_inverse() {
        for n in 0..6 {
            for e in 0..6 {
                let (s, w, kind) = dual_rule(n, e, false);
                let (n2, e2, kind2) = reverse_dual_rule(s, w);
                assert_eq!(kind, kind2);
                assert_eq!((n2, e2), (n, e));
            }
        }
        assert_eq!(reverse_dual_rule(1, 1).2, TileKind::Marked);
    }

    #[test]
    fn worked_example_is_self_dual() {
        let w: FinitePermutation = "365214".parse().unwrap();
        let (p, q) = dual_rs(&w);
        assert_eq!(p.to_string(), "1,4/2,5/3/6");
        assert_eq!(q.to_string(), "1,2/3,6/4/5");
        assert_eq!(evacuation(&q), q);
    }

    #[test]
    fn identity_single_rows() {
        let (p, q) = dual_rs(&FinitePermutation::identity(4));
        assert_eq!(p.to_string(), "1,2,3,4");
        assert_eq!(q.to_string(), "1,2,3,4");
    }
}
