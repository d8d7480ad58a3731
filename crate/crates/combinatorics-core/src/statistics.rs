//! Statistics on column words and the smallest inner shapes they admit.

use std::collections::BTreeSet;

use crate::error::CoreError;
use crate::partition::Partition;

/// Smallest d >= 0 such that, for every i > 0, at least i copies of `low`
/// precede the (d+i)-th copy of `low + 1`.
pub fn d_statistic(a: &[usize], low: usize) -> Result<usize, CoreError> {
    let mut lows = 0usize;
    let mut highs = 0usize;
    let mut d = 0usize;
    for &v in a {
        if v == low {
            lows += 1;
        } else if v == low + 1 {
            highs += 1;
            d = d.max(highs.saturating_sub(lows));
        } else {
            return Err(CoreError::ValueOutOfRange { value: v, low });
        }
    }
    Ok(d)
}

fn same_content(a: &[usize], b: &[usize]) -> bool {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    x.sort_unstable();
    y.sort_unstable();
    x == y
}

/// max(d(a), d(b)) for two words with the same content.
pub fn delta_statistic(a: &[usize], b: &[usize], low: usize) -> Result<usize, CoreError> {
    if !same_content(a, b) {
        return Err(CoreError::ContentMismatch);
    }
    Ok(d_statistic(a, low)?.max(d_statistic(b, low)?))
}

fn restrict(t: &[usize], b: usize) -> Vec<usize> {
    t.iter().copied().filter(|&v| v == b || v + 1 == b).collect()
}

/// Column lengths from per-value statistics: column k gets the sum of the
/// statistics of all values b >= k + 1.
fn shape_from(values: &BTreeSet<usize>, stat: impl Fn(usize) -> usize) -> Partition {
    let max = values.iter().next_back().copied().unwrap_or(0);
    let mut cols = vec![0usize; max.saturating_sub(1)];
    let mut acc = 0;
    for b in (2..=max).rev() {
        if values.contains(&b) {
            acc += stat(b);
        }
        cols[b - 2] = acc;
    }
    Partition::from_column_lengths(&cols).expect("column lengths decrease")
}

/// Smallest inner shape of a skew standard tableau whose entry i lies in column t[i-1].
pub fn minimal_inner_shape(t: &[usize]) -> Partition {
    let values: BTreeSet<usize> = t.iter().copied().collect();
    shape_from(&values, |b| d_statistic(&restrict(t, b), b - 1).expect("restricted word"))
}

/// Smallest common inner shape for two column words with the same content.
pub fn minimal_inner_shape_pair(t: &[usize], u: &[usize]) -> Result<Partition, CoreError> {
    if !same_content(t, u) {
        return Err(CoreError::ContentMismatch);
    }
    let values: BTreeSet<usize> = t.iter().copied().collect();
    Ok(shape_from(&values, |b| {
        delta_statistic(&restrict(t, b), &restrict(u, b), b - 1).expect("restricted words")
    }))
}
