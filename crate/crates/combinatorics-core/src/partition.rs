use std::fmt;
use std::str::FromStr;

use crate::error::CoreError;

/// Integer partition with trailing zeros removed.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Result<Self, CoreError> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(CoreError::NotPartition(parts));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Builds the partition whose conjugate has the given parts.
    pub fn from_column_lengths(cols: &[usize]) -> Result<Self, CoreError> {
        Ok(Partition::new(cols.to_vec())?.conjugate())
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Part `k` (0-based), zero past the end.
    pub fn part(&self, k: usize) -> usize {
        self.parts.get(k).copied().unwrap_or(0)
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.part(0);
        let parts = (1..=width)
            .map(|c| self.parts.iter().take_while(|&&p| p >= c).count())
            .collect();
        Partition { parts }
    }

    /// Length of column `c` (1-based).
    pub fn column_length(&self, c: usize) -> usize {
        self.parts.iter().take_while(|&&p| p >= c).count()
    }

    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }

    pub fn add(&self, other: &Partition) -> Partition {
        let len = self.len().max(other.len());
        Partition {
            parts: (0..len).map(|k| self.part(k) + other.part(k)).collect(),
        }
    }

    /// Componentwise `self - other`, if that is again a partition.
    pub fn checked_sub(&self, other: &Partition) -> Option<Partition> {
        if other.len() > self.len() {
            return None;
        }
        let mut parts = Vec::with_capacity(self.len());
        for k in 0..self.len() {
            parts.push(self.part(k).checked_sub(other.part(k))?);
        }
        Partition::new(parts).ok()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", s.join(","))
    }
}

impl FromStr for Partition {
    type Err = CoreError;

    /// Accepts "6,6,5"; the empty string, "0" and "()" give the empty partition.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim().trim_start_matches(['(', '[']).trim_end_matches([')', ']']);
        if s.trim().is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|x| x.trim().parse::<usize>().map_err(|e| CoreError::Parse(format!("{x:?}: {e}"))))
            .collect::<Result<Vec<_>, _>>()?;
        Partition::new(parts)
    }
}

/// Finite sequence of nonnegative integers with a fixed length.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Composition {
    parts: Vec<usize>,
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Self {
        Composition { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn total(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn is_partition(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] >= w[1])
    }

    pub fn to_partition(&self) -> Option<Partition> {
        if self.is_partition() {
            Partition::new(self.parts.clone()).ok()
        } else {
            None
        }
    }

    /// `outer - inner` padded to `len` entries, or None if some entry is negative.
    pub fn difference(outer: &Partition, inner: &Partition, len: usize) -> Option<Composition> {
        let len = len.max(outer.len()).max(inner.len());
        let mut parts = Vec::with_capacity(len);
        for k in 0..len {
            parts.push(outer.part(k).checked_sub(inner.part(k))?);
        }
        Some(Composition { parts })
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

/// Dominance order: every prefix sum of `a` is at least that of `b`.
pub fn dominates(a: &Composition, b: &Composition) -> Result<bool, CoreError> {
    if a.total() != b.total() {
        return Err(CoreError::Incomparable(a.total(), b.total()));
    }
    let len = a.parts.len().max(b.parts.len());
    let (mut sa, mut sb) = (0, 0);
    for k in 0..len {
        sa += a.parts.get(k).copied().unwrap_or(0);
        sb += b.parts.get(k).copied().unwrap_or(0);
        if sa < sb {
            return Ok(false);
        }
    }
    Ok(true)
}

/// All partitions of `k`, largest first part first.
pub fn partitions_of(k: usize) -> Vec<Partition> {
    fn rec(k: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if k == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        for p in (1..=k.min(max)).rev() {
            cur.push(p);
            rec(k - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(k, k, &mut Vec::new(), &mut out);
    out
}
