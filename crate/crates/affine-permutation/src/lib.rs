//! The extended affine symmetric group in window notation.
//!
//! An element is a bijection w of Z with w(q + n) = w(q) + n, stored by its
//! window [w(1), ..., w(n)].

use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AffineError {
    #[error("n must be at least 2 (got {0}); type A_0 is degenerate")]
    RankTooSmall(usize),
    #[error("window {0:?} repeats a residue mod n")]
    NotBijective(Vec<i64>),
    #[error("mismatched ranks {0} and {1}")]
    RankMismatch(usize, usize),
    #[error("generator index {r} out of range 0..{n}")]
    BadGenerator { r: usize, n: usize },
    #[error("a - b = {diff} differs from the index {index}")]
    IndexMismatch { diff: i64, index: i64 },
    #[error("enumeration bound too large: {0} candidates")]
    BoundTooLarge(u128),
    #[error("parse error: {0}")]
    Parse(String),
}

/// Largest number of windows an enumeration may scan.
pub const ENUMERATION_LIMIT: u128 = 50_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AffinePermutation {
    window: Vec<i64>,
}

impl AffinePermutation {
    pub fn new(window: Vec<i64>) -> Result<Self, AffineError> {
        let n = window.len();
        if n < 2 {
            return Err(AffineError::RankTooSmall(n));
        }
        let mut seen = vec![false; n];
        for &v in &window {
            let r = v.rem_euclid(n as i64) as usize;
            if seen[r] {
                return Err(AffineError::NotBijective(window));
            }
            seen[r] = true;
        }
        Ok(AffinePermutation { window })
    }

    pub fn identity(n: usize) -> Result<Self, AffineError> {
        Self::translation(n, 0)
    }

    /// tau_i : q -> q + i.
    pub fn translation(n: usize, i: i64) -> Result<Self, AffineError> {
        Self::new((1..=n as i64).map(|q| q + i).collect())
    }

    /// Embeds a permutation of 1..=n given in one-line notation.
    pub fn from_finite(values: &[usize]) -> Result<Self, AffineError> {
        Self::new(values.iter().map(|&v| v as i64).collect())
    }

    pub fn n(&self) -> usize {
        self.window.len()
    }

    pub fn window(&self) -> &[i64] {
        &self.window
    }

    /// w(q) = w(r) + n k where q = r + n k with r in 1..=n.
    pub fn evaluate(&self, q: i64) -> i64 {
        let n = self.n() as i64;
        let k = (q - 1).div_euclid(n);
        let r = (q - 1).rem_euclid(n) as usize;
        self.window[r] + n * k
    }

    /// The integer i with sum_j (w(j) - j) = n i.
    pub fn index(&self) -> i64 {
        let n = self.n() as i64;
        let s: i64 = self.window.iter().zip(1..).map(|(&v, j)| v - j).sum();
        s / n
    }

    /// (self * other)(q) = self(other(q)).
    pub fn compose(&self, other: &Self) -> Result<Self, AffineError> {
        if self.n() != other.n() {
            return Err(AffineError::RankMismatch(self.n(), other.n()));
        }
        Ok(AffinePermutation {
            window: other.window.iter().map(|&v| self.evaluate(v)).collect(),
        })
    }

    pub fn inverse(&self) -> Self {
        let n = self.n() as i64;
        let mut out = vec![0; self.n()];
        for (j, &v) in (1..).zip(&self.window) {
            let k = (v - 1).div_euclid(n);
            let r = (v - 1).rem_euclid(n) as usize;
            out[r] = j - n * k;
        }
        AffinePermutation { window: out }
    }

    /// Right multiplication by s_r, swapping w(p) and w(p+1) for p = r mod n.
    pub fn simple_reflection(&self, r: usize) -> Result<Self, AffineError> {
        let n = self.n();
        if r >= n {
            return Err(AffineError::BadGenerator { r, n });
        }
        let mut w = self.window.clone();
        if r == 0 {
            let first = w[0];
            w[0] = w[n - 1] - n as i64;
            w[n - 1] = first + n as i64;
        } else {
            w.swap(r - 1, r);
        }
        Ok(AffinePermutation { window: w })
    }

    /// The diagram automorphism: conjugation by q -> n + 1 - q, so that
    /// r(w)(j) = n + 1 - w(n + 1 - j). Sends s_k to s_{n-k} and negates the index.
    pub fn dynkin_reflection(&self) -> Self {
        let n = self.n();
        let window = (1..=n).map(|j| n as i64 + 1 - self.window[n - j]).collect();
        AffinePermutation { window }
    }

    /// Coxeter length of the coset representative: sum over i < j in 1..=n of
    /// |floor((w(j) - w(i)) / n)|. Translations have length 0.
    pub fn coxeter_length(&self) -> usize {
        let n = self.n() as i64;
        let mut len = 0;
        for i in 0..self.n() {
            for j in i + 1..self.n() {
                len += (self.window[j] - self.window[i]).div_euclid(n).unsigned_abs() as usize;
            }
        }
        len
    }

    /// (#{t > b : w(t) <= a}, #{t <= b : w(t) > a}) for a - b equal to the index.
    pub fn balance_counts(&self, a: i64, b: i64) -> Result<(usize, usize), AffineError> {
        let index = self.index();
        if a - b != index {
            return Err(AffineError::IndexMismatch { diff: a - b, index });
        }
        // |w(t) - t| is bounded by the largest window displacement, so both
        // sets sit inside a finite range around b
        let d = self
            .window
            .iter()
            .zip(1..)
            .map(|(&v, j): (&i64, i64)| (v - j).abs())
            .max()
            .unwrap_or(0);
        let reach = d + index.abs() + 1;
        let above = (b + 1..=b + reach).filter(|&t| self.evaluate(t) <= a).count();
        let below = (b - reach..=b).filter(|&t| self.evaluate(t) > a).count();
        Ok((above, below))
    }
}

impl fmt::Display for AffinePermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.window.iter().map(|v| v.to_string()).collect();
        write!(f, "[{}]", s.join(","))
    }
}

impl FromStr for AffinePermutation {
    type Err = AffineError;

    /// Accepts "[10,3,-3,12]" and "10,3,-3,12".
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let inner = s.trim().trim_start_matches('[').trim_end_matches(']');
        let window = inner
            .split(',')
            .map(|x| x.trim().parse::<i64>().map_err(|e| AffineError::Parse(format!("{x:?}: {e}"))))
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(window)
    }
}

/// Every window with entries in `lo..=hi`, optionally restricted to one index,
/// in lexicographic order of windows.
pub fn enumerate_box(n: usize, lo: i64, hi: i64, index: Option<i64>) -> Result<Vec<AffinePermutation>, AffineError> {
    if n < 2 {
        return Err(AffineError::RankTooSmall(n));
    }
    if hi < lo {
        return Ok(Vec::new());
    }
    let width = (hi - lo + 1) as u128;
    let total = width.checked_pow(n as u32).unwrap_or(u128::MAX);
    if total > ENUMERATION_LIMIT {
        return Err(AffineError::BoundTooLarge(total));
    }
    let mut out = Vec::new();
    let mut cur = vec![lo; n];
    loop {
        if let Ok(w) = AffinePermutation::new(cur.clone()) {
            if index.is_none_or(|i| w.index() == i) {
                out.push(w);
            }
        }
        let mut k = n;
        loop {
            if k == 0 {
                return Ok(out);
            }
            k -= 1;
            if cur[k] < hi {
                cur[k] += 1;
                break;
            }
            cur[k] = lo;
        }
    }
}

/// Breadth-first ball of Coxeter length at most `max_len` around tau_index,
/// generated by right multiplication with s_0, ..., s_{n-1}. Elements come in
/// order of length, then discovery.
pub fn enumerate_by_length(n: usize, index: i64, max_len: usize) -> Result<Vec<AffinePermutation>, AffineError> {
    let start = AffinePermutation::translation(n, index)?;
    let mut seen: HashSet<AffinePermutation> = HashSet::from([start.clone()]);
    let mut out = Vec::new();
    let mut queue = VecDeque::from([(start, 0usize)]);
    while let Some((w, d)) = queue.pop_front() {
        out.push(w.clone());
        if out.len() as u128 > ENUMERATION_LIMIT {
            return Err(AffineError::BoundTooLarge(out.len() as u128));
        }
        if d == max_len {
            continue;
        }
        for r in 0..n {
            let next = w.simple_reflection(r)?;
            if seen.insert(next.clone()) {
                queue.push_back((next, d + 1));
            }
        }
    }
    Ok(out)
}
