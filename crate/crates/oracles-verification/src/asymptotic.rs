//! P̄ and its evacuation read off ordinary row insertion of w(1), w(2), ...,
//! with no growth diagram involved.

use std::collections::HashMap;

use affine_permutation::AffinePermutation;
use classical_rs::row_insert;
use combinatorics_core::{evacuation, StandardTableau, Tabloid};

use crate::OracleError;

/// Blocks of n insertions tried before giving up.
pub const DEFAULT_BLOCK_CAP: usize = 40;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AsymptoticTabloid {
    /// `row_of_residue[k-1]`: row holding the values congruent to k mod n.
    pub row_of_residue: Vec<usize>,
    /// Number of insertions after which the assignment was accepted.
    pub stabilization_witness: usize,
}

impl AsymptoticTabloid {
    pub fn to_tabloid(&self) -> Result<Tabloid, OracleError> {
        Tabloid::from_row_of(&self.row_of_residue).map_err(OracleError::from)
    }
}

fn row_map(rows: &[Vec<i64>]) -> HashMap<i64, usize> {
    rows.iter().enumerate().flat_map(|(r, row)| row.iter().map(move |&v| (v, r + 1))).collect()
}

fn counts(row_of: &[usize]) -> Vec<usize> {
    let max = row_of.iter().copied().max().unwrap_or(0);
    (1..=max).map(|r| row_of.iter().filter(|&&x| x == r).count()).collect()
}

pub fn ptabloid_oracle(w: &AffinePermutation) -> Result<Tabloid, OracleError> {
    ptabloid_oracle_from(w, 0, DEFAULT_BLOCK_CAP)?.to_tabloid()
}

/// Inserts w(start + 1), w(start + 2), ... one block of n at a time. After a
/// block, the n values just below everything still to come are complete; their
/// rows by residue are accepted once two consecutive blocks agree and the row
/// counts match how the rows grew during the block.
pub fn ptabloid_oracle_from(w: &AffinePermutation, start: i64, cap: usize) -> Result<AsymptoticTabloid, OracleError> {
    let n = w.n();
    let ni = n as i64;
    let mut rows: Vec<Vec<i64>> = Vec::new();
    let mut prev: Option<Vec<usize>> = None;
    let mut t = start;
    for block in 1..=cap {
        let before: Vec<usize> = rows.iter().map(Vec::len).collect();
        for _ in 0..n {
            t += 1;
            row_insert(&mut rows, w.evaluate(t));
        }
        let mut growth: Vec<usize> =
            rows.iter().enumerate().map(|(i, r)| r.len() - before.get(i).copied().unwrap_or(0)).collect();
        while growth.last() == Some(&0) {
            growth.pop();
        }
        let m = (t + 1..=t + ni).map(|s| w.evaluate(s)).min().expect("n >= 1");
        let map = row_map(&rows);
        let Some(cur) = residue_rows(&map, m - ni, n, |x| (x - 1).rem_euclid(ni) as usize) else {
            continue;
        };
        if counts(&cur) != growth {
            prev = None;
            continue;
        }
        if prev.as_ref() == Some(&cur) {
            return Ok(AsymptoticTabloid { row_of_residue: cur, stabilization_witness: block * n });
        }
        prev = Some(cur);
    }
    Err(OracleError::NoStabilization { insertions: cap * n })
}

/// Rows of x0 .. x0 + n - 1 by residue slot, if all are present.
fn residue_rows(map: &HashMap<i64, usize>, x0: i64, n: usize, slot: impl Fn(i64) -> usize) -> Option<Vec<usize>> {
    let mut cur = vec![0; n];
    for x in x0..x0 + n as i64 {
        cur[slot(x)] = *map.get(&x)?;
    }
    Some(cur)
}

pub fn affine_evacuation_of(w: &AffinePermutation) -> Result<Tabloid, OracleError> {
    affine_evacuation_with_cap(w, DEFAULT_BLOCK_CAP)?.to_tabloid()
}

/// Evacuates each prefix insertion tableau. Entry e of the evacuated tableau
/// stands for the value of rank N + 1 - e, and value x for residue n + 1 - x.
/// The lowest n consecutive values present are read; two equal consecutive
/// readings with weakly decreasing row counts are accepted.
pub fn affine_evacuation_with_cap(w: &AffinePermutation, cap: usize) -> Result<AsymptoticTabloid, OracleError> {
    let n = w.n();
    let ni = n as i64;
    let mut rows: Vec<Vec<i64>> = Vec::new();
    let mut prev: Option<Vec<usize>> = None;
    let mut t = 0;
    for block in 1..=cap {
        for _ in 0..n {
            t += 1;
            row_insert(&mut rows, w.evaluate(t));
        }
        let mut values: Vec<i64> = rows.iter().flatten().copied().collect();
        values.sort_unstable();
        let rank: HashMap<i64, usize> = values.iter().enumerate().map(|(i, &v)| (v, i + 1)).collect();
        let standard = StandardTableau::new(rows.iter().map(|r| r.iter().map(|v| rank[v]).collect()).collect())
            .expect("insertion tableau is standard after ranking");
        let total = values.len();
        let evac = evacuation(&standard);
        let map: HashMap<i64, usize> = evac
            .rows()
            .iter()
            .enumerate()
            .flat_map(|(r, row)| row.iter().map(move |&e| (e, r + 1)))
            .map(|(e, r)| (values[total - e], r))
            .collect();
        let Some(x0) = (values[0]..=values[total - 1]).find(|&x| (x..x + ni).all(|y| map.contains_key(&y))) else {
            continue;
        };
        let cur = residue_rows(&map, x0, n, |x| (ni - x).rem_euclid(ni) as usize).expect("window present");
        if counts(&cur).windows(2).any(|p| p[0] < p[1]) {
            prev = None;
            continue;
        }
        if prev.as_ref() == Some(&cur) {
            return Ok(AsymptoticTabloid { row_of_residue: cur, stabilization_witness: block * n });
        }
        prev = Some(cur);
    }
    Err(OracleError::NoStabilization { insertions: cap * n })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> AffinePermutation {
        s.parse().unwrap()
    }

    #[test]
    fn worked_example_rows() {
        assert_eq!(ptabloid_oracle(&w("10,3,-3,12")).unwrap().to_string(), "1,3/2/4");
    }

    #[test]
    fn identity_is_one_row() {
        let id = AffinePermutation::identity(4).unwrap();
        assert_eq!(ptabloid_oracle(&id).unwrap(), Tabloid::single_row(4));
        assert_eq!(affine_evacuation_of(&id).unwrap(), Tabloid::single_row(4));
    }

    #[test]
    fn start_offset_does_not_matter() {
        let x = w("10,3,-3,12");
        let base = ptabloid_oracle_from(&x, 0, DEFAULT_BLOCK_CAP).unwrap();
        for start in 1..4 {
            assert_eq!(ptabloid_oracle_from(&x, start, DEFAULT_BLOCK_CAP).unwrap().row_of_residue, base.row_of_residue);
        }
    }

    #[test]
    fn early_agreement_needs_shape_guard() {
        // two equal readings appear before the rows settle into a tabloid shape
        let x = w("3,-4,4");
        assert_eq!(ptabloid_oracle(&x).unwrap(), dars_pbar(&x));
    }

    fn dars_pbar(x: &AffinePermutation) -> Tabloid {
        dars::forward(x).unwrap().pbar
    }

    #[test]
    fn cap_is_an_error() {
        assert!(matches!(ptabloid_oracle_from(&w("10,3,-3,12"), 0, 1), Err(OracleError::NoStabilization { .. })));
    }
}
