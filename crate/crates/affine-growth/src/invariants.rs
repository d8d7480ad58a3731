use std::collections::HashSet;

use affine_permutation::AffinePermutation;
use classical_rs::{row_insert, TileKind};
use combinatorics_core::{dominates, Partition};

use crate::region::GrowthRegion;
use crate::window::{first_full_window, first_stable_window};
use crate::GrowthError;

/// Windows past the first stable one that must stay stable.
const PERSISTENCE: i64 = 3;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantCheck {
    pub name: &'static str,
    pub checked: usize,
    /// First few failures.
    pub failures: Vec<String>,
}

impl InvariantCheck {
    fn new(name: &'static str) -> Self {
        InvariantCheck { name, checked: 0, failures: Vec::new() }
    }

    fn record(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok && self.failures.len() < 5 {
            self.failures.push(detail());
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantReport {
    pub w: AffinePermutation,
    pub first_stable: i64,
    pub checks: Vec<InvariantCheck>,
}

impl InvariantReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(InvariantCheck::passed)
    }
}

/// Shape of the row insertion of w(k) for k > j with w(k) <= i, in order of k.
pub fn insertion_shape(w: &AffinePermutation, i: i64, j: i64) -> Partition {
    let drift = w.window().iter().zip(1..).map(|(&v, k): (&i64, i64)| k - v).max().unwrap_or(0);
    let mut rows: Vec<Vec<i64>> = Vec::new();
    // w(k) >= k - drift, so nothing past i + drift qualifies
    for k in j + 1..=i + drift {
        let v = w.evaluate(k);
        if v <= i {
            row_insert(&mut rows, v);
        }
    }
    Partition::new(rows.iter().map(Vec::len).collect()).expect("insertion rows are weakly decreasing")
}

/// Runs every structural check on a region reaching a few windows past the
/// first stable one.
pub fn check_invariants(w: &AffinePermutation) -> Result<InvariantReport, GrowthError> {
    let n = w.n() as i64;
    let stable = first_stable_window(w)?;
    let m0 = stable.m;
    let region = GrowthRegion::build(w, m0 + PERSISTENCE + 2)?;
    let (top, bot) = region.row_range();
    let (_, c_hi) = region.col_range();

    let mut rows_bound = InvariantCheck::new("at most n rows");
    let mut oracle = InvariantCheck::new("vertex partition equals insertion shape");
    for j in 0..=c_hi {
        for i in top..=bot {
            let p = region.vertex_partition(i, j)?;
            rows_bound.record(p.len() <= w.n(), || format!("Gamma({i},{j}) = {p}"));
            if j <= 2 * n {
                let q = insertion_shape(w, i, j);
                oracle.record(p == q, || format!("Gamma({i},{j}) = {p}, insertion gives {q}"));
            }
        }
    }

    let mut colors = InvariantCheck::new("at most n colors per column line");
    for j in 0..=c_hi {
        let distinct: HashSet<usize> = (top + 1..=bot).filter_map(|r| region.vertical_edge_color(r, j).ok()).collect();
        colors.record(distinct.len() <= w.n(), || format!("column line {j} has colors {distinct:?}"));
    }

    let mut crossing = InvariantCheck::new("smaller color has larger label at crossings");
    for r in top + 1..=bot {
        for c in 1..=c_hi {
            if region.tile(r, c) != Some(TileKind::Cross) {
                continue;
            }
            let (north, east) = (region.h_label(r - 1, c).unwrap_or(0), region.v_label(r, c).unwrap_or(0));
            if north == 0 || east == 0 {
                continue;
            }
            let (Some(cn), Ok(ce)) = (region.horizontal_edge_color(r - 1, c), region.vertical_edge_color(r, c)) else {
                continue;
            };
            let ok = (cn < ce && north > east) || (ce < cn && east > north);
            crossing.record(ok, || format!("tile ({r},{c}): north {north}/{cn}, east {east}/{ce}"));
        }
    }

    // the multiplicity rule runs per column line; a line crossing several
    // column lines has to get the same color on each
    let mut along = InvariantCheck::new("color constant along lines");
    for r in top + 1..=bot {
        for c in 1..=c_hi {
            let (a, b) = match region.tile(r, c) {
                Some(TileKind::Cross) => (region.vertical_edge_color(r, c).ok(), region.vertical_edge_color(r, c - 1).ok()),
                Some(TileKind::Bump) => (region.vertical_edge_color(r, c - 1).ok(), region.horizontal_edge_color(r, c)),
                _ => continue,
            };
            if let (Some(a), Some(b)) = (a, b) {
                along.record(a == b, || format!("tile ({r},{c}): colors {a} and {b}"));
            }
        }
    }

    let mut periodic = InvariantCheck::new("periodicity");
    for r in top + 1..=bot - n {
        for c in 1..=c_hi - n {
            let here = tile_data(&region, r, c);
            let there = tile_data(&region, r + n, c + n);
            periodic.record(here == there, || format!("tile ({r},{c}) {here:?} vs ({},{}) {there:?}", r + n, c + n));
        }
    }

    let mut chain = InvariantCheck::new("mu dominance chain");
    let mut equivalence = InvariantCheck::new("color stability equals mu stability");
    let last = region.last_window();
    for m in first_full_window(w)..last {
        let s = region.window_summary(m)?;
        if let Some(mu_stable) = s.is_stable {
            equivalence.record(mu_stable == s.color_stable(), || {
                format!("window {m}: mu stable {mu_stable}, east {:?}, west {:?}", s.east_colors, s.west_colors)
            });
            let next = region.mu(m + 1)?;
            chain.record(dominates(&next, &s.mu).unwrap_or(false), || format!("window {m}: {} then {next}", s.mu));
        }
    }

    let mut persistence = InvariantCheck::new("stability persists");
    for m in m0..=m0 + PERSISTENCE {
        let s = region.window_summary(m)?;
        persistence.record(s.is_stable == Some(true), || format!("window {m} after stable window {m0}"));
    }

    Ok(InvariantReport {
        w: w.clone(),
        first_stable: m0,
        checks: vec![rows_bound, oracle, colors, crossing, along, periodic, chain, equivalence, persistence],
    })
}

type TileData = (Option<TileKind>, Option<usize>, Option<usize>, Option<usize>, Option<usize>);

fn tile_data(region: &GrowthRegion, r: i64, c: i64) -> TileData {
    (region.tile(r, c), region.h_label(r - 1, c), region.v_label(r, c), region.h_label(r, c), region.v_label(r, c - 1))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn worked_example_satisfies_all() {
        let report = check_invariants(&"10,3,-3,12".parse().unwrap()).unwrap();
        for c in &report.checks {
            assert!(c.passed(), "{}: {:?}", c.name, c.failures);
            assert!(c.checked > 0, "{}", c.name);
        }
        assert_eq!(report.first_stable, 7);
    }

    #[test]
    fn insertion_shape_small_cases() {
        let w: AffinePermutation = "2,1".parse().unwrap();
        // w(1..) = 2,1,4,3,...; k > 0 with w(k) <= 2 gives the word 2,1
        assert_eq!(insertion_shape(&w, 2, 0).parts(), &[1, 1]);
        assert!(insertion_shape(&w, 0, 0).is_empty());
        assert_eq!(insertion_shape(&w, 4, 0).parts(), &[2, 2]);
    }
}
