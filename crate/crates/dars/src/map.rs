use affine_growth::{first_stable_window_with_cap, DEFAULT_WINDOW_CAP};
use affine_permutation::AffinePermutation;
use classical_rs::{reverse_dual_rule, TileKind};
use combinatorics_core::{looparrowright, Tabloid};

use crate::validate::validate;
use crate::{DarsError, DarsTuple};

pub fn forward(w: &AffinePermutation) -> Result<DarsTuple, DarsError> {
    forward_with_cap(w, DEFAULT_WINDOW_CAP)
}

/// P̄ rows from the east colors of the first stable window, Q̄ rows from its
/// north colors (right to left), λ at its north-east corner.
pub fn forward_with_cap(w: &AffinePermutation, cap: i64) -> Result<DarsTuple, DarsError> {
    let found = first_stable_window_with_cap(w, cap)?;
    let s = &found.summary;
    let colors = |c: &[Option<usize>]| -> Result<Tabloid, DarsError> {
        let row_of: Option<Vec<usize>> = c.iter().copied().collect();
        let row_of = row_of.ok_or_else(|| DarsError::Inconsistent(format!("uncolored boundary edge in window {}", s.m)))?;
        Tabloid::from_row_of(&row_of).map_err(DarsError::from)
    };
    Ok(DarsTuple { pbar: colors(&s.east_colors)?, qbar: colors(&s.north_colors)?, lambda: s.lambda.clone(), n0: found.m })
}

pub fn inverse(t: &DarsTuple) -> Result<AffinePermutation, DarsError> {
    inverse_with_cap(t, DEFAULT_WINDOW_CAP)
}

/// Rebuilds w window by window, walking up from window N₀ - 1 with the
/// reverse rules until a window is entirely zero and every column is marked.
pub fn inverse_with_cap(t: &DarsTuple, cap: i64) -> Result<AffinePermutation, DarsError> {
    let report = validate(t);
    if let Some(c) = report.first_failure() {
        return Err(DarsError::InvalidTuple { condition: c.condition.label(), detail: c.detail.clone() });
    }
    let n = t.n();
    let p = looparrowright(&t.lambda, &t.pbar);
    let q = looparrowright(&t.lambda, &t.qbar);

    // periodicity: window m - 1 has south = north of window m and west = east of window m
    let mut south = q.column_word();
    let mut west = p.column_word();
    let ni = n as i64;
    let mut marks: Vec<Option<i64>> = vec![None; n];
    let mut m = t.n0 - 1;
    for _ in 0..cap {
        // h[c] is the label below column c while walking up
        let mut h = vec![0; n + 1];
        for i in 1..=n {
            h[n - i + 1] = south[i - 1];
        }
        let mut all_zero = true;
        let mut east = vec![0; n];
        for r in (1..=n).rev() {
            let mut west_label = west[r - 1];
            for (c, hc) in h.iter_mut().enumerate().skip(1) {
                let (s, w) = (*hc, west_label);
                if s != 0 || w != 0 {
                    all_zero = false;
                }
                let (nl, el, kind) = reverse_dual_rule(s, w);
                if kind == TileKind::Marked {
                    if marks[c - 1].is_some() {
                        return Err(DarsError::Reconstruction(format!("column {c} marked twice")));
                    }
                    marks[c - 1] = Some((m - 1) * ni + r as i64);
                }
                *hc = nl;
                west_label = el;
            }
            east[r - 1] = west_label;
        }
        if all_zero && marks.iter().all(Option::is_some) {
            let window: Vec<i64> = marks.iter().map(|x| x.expect("all marked")).collect();
            return AffinePermutation::new(window).map_err(|e| DarsError::Reconstruction(e.to_string()));
        }
        south = (1..=n).map(|i| h[n - i + 1]).collect();
        west = east;
        m -= 1;
    }
    Err(DarsError::Reconstruction(format!("no all-zero window within {cap} windows above N0 = {}", t.n0)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> AffinePermutation {
        s.parse().unwrap()
    }

    #[test]
    fn worked_example_forward() {
        let t = forward(&w("10,3,-3,12")).unwrap();
        assert_eq!(t.pbar.to_string(), "1,3/2/4");
        assert_eq!(t.qbar.to_string(), "1,2/3/4");
        assert_eq!(t.lambda.parts(), &[6, 6, 5]);
        assert_eq!(t.n0, 7);
        assert_eq!(inverse(&t).unwrap(), w("10,3,-3,12"));
    }

    #[test]
    fn embedded_permutation_has_empty_lambda() {
        let t = forward(&w("3,6,5,2,1,4")).unwrap();
        assert!(t.lambda.is_empty());
        assert_eq!(t.n0, 2);
    }

    #[test]
    fn identity_gives_single_rows() {
        let id = AffinePermutation::identity(3).unwrap();
        let t = forward(&id).unwrap();
        assert_eq!(t.pbar, Tabloid::single_row(3));
        assert_eq!(t.qbar, Tabloid::single_row(3));
        assert_eq!(t.lambda.size() as i64, 3 * (t.n0 - 2));
        assert_eq!(inverse(&t).unwrap(), id);
    }

    #[test]
    fn invalid_tuple_names_condition() {
        let t = DarsTuple::new("2/1".parse().unwrap(), "2/1".parse().unwrap(), "1".parse().unwrap(), 3);
        match inverse(&t) {
            Err(DarsError::InvalidTuple { condition, .. }) => assert_eq!(condition, "(2)(b)"),
            other => panic!("{other:?}"),
        }
    }
}
