use combinatorics_core::StandardTableau;

use crate::perm::FinitePermutation;

/// Row-inserts `x`, returning the row (0-based) where a new cell was created.
pub fn row_insert<T: Ord + Copy>(rows: &mut Vec<Vec<T>>, mut x: T) -> usize {
    for (r, row) in rows.iter_mut().enumerate() {
        let k = row.partition_point(|&y| y <= x);
        if k == row.len() {
            row.push(x);
            return r;
        }
        std::mem::swap(&mut row[k], &mut x);
    }
    rows.push(vec![x]);
    rows.len() - 1
}

/// Schensted row insertion of w(1), ..., w(n); returns (P, Q).
pub fn rs_insertion(w: &FinitePermutation) -> (StandardTableau, StandardTableau) {
    let mut p: Vec<Vec<usize>> = Vec::new();
    let mut q_rows = Vec::with_capacity(w.n());
    for &x in w.values() {
        q_rows.push(row_insert(&mut p, x) + 1);
    }
    let q = StandardTableau::from_row_sequence(&q_rows).expect("recording tableau is standard");
    (StandardTableau::new(p).expect("insertion tableau is standard"), q)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tab(s: &str) -> StandardTableau {
        s.parse().unwrap()
    }

    #[test]
    fn worked_example() {
        let (p, q) = rs_insertion(&"365214".parse().unwrap());
        assert_eq!(p, tab("1,4/2,5/3/6"));
        assert_eq!(q, tab("1,2/3,6/4/5"));
    }

    #[test]
    fn extremes() {
        let (p, q) = rs_insertion(&FinitePermutation::identity(5));
        assert_eq!(p, tab("1,2,3,4,5"));
        assert_eq!(q, p);
        let (p, q) = rs_insertion(&FinitePermutation::longest(4));
        assert_eq!(p, tab("1/2/3/4"));
        assert_eq!(q, p);
    }
}
