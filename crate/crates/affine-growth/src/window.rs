use affine_permutation::AffinePermutation;
use classical_rs::TileKind;
use combinatorics_core::{Composition, Partition};

use crate::region::GrowthRegion;
use crate::GrowthError;

/// Windows searched past the first full one before giving up.
pub const DEFAULT_WINDOW_CAP: i64 = 64;

/// Boundary data of window m: rows (m-1)n+1 ..= mn, columns 1 ..= n.
/// North and south sequences run right to left, east and west top to bottom.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WindowSummary {
    pub m: i64,
    pub north_labels: Vec<usize>,
    pub east_labels: Vec<usize>,
    pub west_labels: Vec<usize>,
    pub south_labels: Vec<usize>,
    pub north_colors: Vec<Option<usize>>,
    pub east_colors: Vec<Option<usize>>,
    pub west_colors: Vec<Option<usize>>,
    pub lambda: Partition,
    /// lambda^{m+1} - lambda^m, padded to n entries.
    pub mu: Composition,
    pub is_full: bool,
    /// None when window m + 1 is not in the region.
    pub is_stable: Option<bool>,
}

impl WindowSummary {
    /// Stability read off the colors: east colors equal west colors and each
    /// color occurs at least as often as the next one.
    pub fn color_stable(&self) -> bool {
        if !self.is_full || self.east_colors != self.west_colors || self.east_colors.iter().any(Option::is_none) {
            return false;
        }
        let max = self.east_colors.iter().flatten().copied().max().unwrap_or(0);
        let counts: Vec<usize> =
            (1..=max).map(|c| self.east_colors.iter().filter(|&&x| x == Some(c)).count()).collect();
        counts.windows(2).all(|p| p[0] >= p[1])
    }
}

impl GrowthRegion {
    pub fn lambda(&self, m: i64) -> Result<Partition, GrowthError> {
        self.vertex_partition((m - 1) * self.n() as i64, self.n() as i64)
    }

    /// lambda^{m+1} - lambda^m with n entries.
    pub fn mu(&self, m: i64) -> Result<Composition, GrowthError> {
        let (a, b) = (self.lambda(m)?, self.lambda(m + 1)?);
        Composition::difference(&b, &a, self.n())
            .ok_or_else(|| GrowthError::Inconsistent(format!("lambda^{m} = {a} not inside lambda^{} = {b}", m + 1)))
    }

    pub fn window_summary(&self, m: i64) -> Result<WindowSummary, GrowthError> {
        let n = self.n() as i64;
        let (top, _) = self.row_range();
        if (m - 1) * n < top || m > self.last_window() {
            return Err(GrowthError::OutOfRegion(format!("window {m}")));
        }
        let base = (m - 1) * n;
        let label = |l: Option<usize>| l.expect("window inside region");
        let north_labels = (1..=n).map(|i| label(self.h_label(base, n - i + 1))).collect();
        let south_labels = (1..=n).map(|i| label(self.h_label(base + n, n - i + 1))).collect();
        let east_labels = (1..=n).map(|i| label(self.v_label(base + i, n))).collect();
        let west_labels = (1..=n).map(|i| label(self.v_label(base + i, 0))).collect();
        let north_colors = (1..=n).map(|i| self.horizontal_edge_color(base, n - i + 1)).collect();
        let east_colors = (1..=n).map(|i| self.vertical_edge_color(base + i, n).ok()).collect();
        let west_colors = (1..=n).map(|i| self.vertical_edge_color(base + i, 0).ok()).collect();
        let is_full = (base + 1..=base + n)
            .all(|r| (1..=n).all(|c| matches!(self.tile(r, c), Some(TileKind::Bump | TileKind::Cross))));
        let mu = self.mu(m)?;
        let is_stable = if m + 1 <= self.last_window() {
            let next = self.mu(m + 1)?;
            Some(is_full && mu == next && mu.is_partition())
        } else {
            None
        };
        Ok(WindowSummary {
            m,
            north_labels,
            east_labels,
            west_labels,
            south_labels,
            north_colors,
            east_colors,
            west_colors,
            lambda: self.lambda(m)?,
            mu,
            is_full,
            is_stable,
        })
    }
}

/// First window below every mark in columns 1 ..= n.
pub fn first_full_window(w: &AffinePermutation) -> i64 {
    let n = w.n() as i64;
    let max = w.window().iter().copied().max().unwrap_or(0);
    max.div_euclid(n) + i64::from(max.rem_euclid(n) != 0) + 1
}

#[derive(Debug, Clone)]
pub struct StableWindow {
    pub m: i64,
    pub summary: WindowSummary,
    /// Contains windows m, m + 1 and m + 2.
    pub region: GrowthRegion,
}

pub fn first_stable_window(w: &AffinePermutation) -> Result<StableWindow, GrowthError> {
    first_stable_window_with_cap(w, DEFAULT_WINDOW_CAP)
}

/// Searches full windows from the first full one, growing the region by
/// 4, 8, 16, ... extra windows up to `cap`.
pub fn first_stable_window_with_cap(w: &AffinePermutation, cap: i64) -> Result<StableWindow, GrowthError> {
    let first = first_full_window(w);
    let mut extra = 4;
    let mut last_chain;
    loop {
        let count = first + extra.min(cap);
        let region = GrowthRegion::build(w, count)?;
        let mut chain = Vec::new();
        for m in first..=count - 2 {
            let summary = region.window_summary(m)?;
            chain.push(summary.mu.to_string());
            if summary.is_stable != Some(true) {
                continue;
            }
            // a north line still unresolved needs more rows below
            if summary.north_colors.iter().any(Option::is_none) {
                break;
            }
            return Ok(StableWindow { m, summary, region });
        }
        last_chain = chain.join(" ");
        if extra >= cap {
            break;
        }
        extra *= 2;
    }
    Err(GrowthError::NoStableWindow { windows: first + cap, first, chain: last_chain })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> AffinePermutation {
        s.parse().unwrap()
    }

    #[test]
    fn worked_example_window_seven() {
        let found = first_stable_window(&w("10,3,-3,12")).unwrap();
        assert_eq!(found.m, 7);
        let s = &found.summary;
        assert_eq!(s.lambda.parts(), &[6, 6, 5]);
        assert_eq!(s.mu.parts(), &[2, 1, 1, 0]);
        assert_eq!(s.east_colors, vec![Some(1), Some(2), Some(1), Some(3)]);
        assert_eq!(s.north_colors, vec![Some(1), Some(1), Some(2), Some(3)]);
        assert!(s.is_full && s.color_stable());
        let later = found.region.window_summary(8).unwrap();
        assert_eq!(later.is_stable, Some(true));
    }

    #[test]
    fn embedded_finite_permutations_stabilize_at_two() {
        for s in ["365214", "21", "123", "4321"] {
            let p = AffinePermutation::from_finite(&s.chars().map(|c| c.to_digit(10).unwrap() as usize).collect::<Vec<_>>()).unwrap();
            assert_eq!(first_stable_window(&p).unwrap().m, 2, "{s}");
        }
    }

    #[test]
    fn windows_with_marks_are_not_full() {
        let r = GrowthRegion::build(&w("10,3,-3,12"), 8).unwrap();
        for m in 1..=3 {
            assert!(!r.window_summary(m).unwrap().is_full);
        }
        assert!(r.window_summary(9).is_err());
        assert_eq!(r.window_summary(8).unwrap().is_stable, None);
    }

    #[test]
    fn first_full_window_rounds_up() {
        assert_eq!(first_full_window(&w("10,3,-3,12")), 4);
        assert_eq!(first_full_window(&w("2,1")), 2);
        assert_eq!(first_full_window(&w("3,0")), 3);
    }

    #[test]
    fn cap_is_reported() {
        let err = first_stable_window_with_cap(&w("10,3,-3,12"), 2).unwrap_err();
        assert!(matches!(err, GrowthError::NoStableWindow { .. }), "{err}");
    }
}
