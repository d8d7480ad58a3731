use std::fmt;
use std::str::FromStr;

use crate::ClassicalError;

/// A permutation of 1..=n in one-line notation.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FinitePermutation {
    values: Vec<usize>,
}

impl FinitePermutation {
    pub fn new(values: Vec<usize>) -> Result<Self, ClassicalError> {
        let n = values.len();
        let mut seen = vec![false; n + 1];
        for &v in &values {
            if v == 0 || v > n || seen[v] {
                return Err(ClassicalError::NotPermutation(values));
            }
            seen[v] = true;
        }
        Ok(FinitePermutation { values })
    }

    pub fn identity(n: usize) -> Self {
        FinitePermutation { values: (1..=n).collect() }
    }

    /// The longest element n, n-1, ..., 1.
    pub fn longest(n: usize) -> Self {
        FinitePermutation { values: (1..=n).rev().collect() }
    }

    pub fn n(&self) -> usize {
        self.values.len()
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    /// w(j) for j in 1..=n.
    pub fn at(&self, j: usize) -> usize {
        self.values[j - 1]
    }

    pub fn inverse(&self) -> Self {
        let mut out = vec![0; self.n()];
        for (j, &v) in self.values.iter().enumerate() {
            out[v - 1] = j + 1;
        }
        FinitePermutation { values: out }
    }

    /// (self * other)(j) = self(other(j)).
    pub fn compose(&self, other: &Self) -> Self {
        FinitePermutation { values: other.values.iter().map(|&v| self.at(v)).collect() }
    }

    /// All permutations of 1..=n in lexicographic order.
    pub fn all(n: usize) -> Vec<FinitePermutation> {
        let mut out = Vec::new();
        let mut cur: Vec<usize> = (1..=n).collect();
        loop {
            out.push(FinitePermutation { values: cur.clone() });
            let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) else { break };
            let j = (i..n).rev().find(|&j| cur[j] > cur[i - 1]).expect("successor exists");
            cur.swap(i - 1, j);
            cur[i..].reverse();
        }
        out
    }
}

impl fmt::Display for FinitePermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.values.iter().map(|v| v.to_string()).collect();
        write!(f, "{}", s.join(","))
    }
}

impl FromStr for FinitePermutation {
    type Err = ClassicalError;

    /// Parses "3,6,5,2,1,4"; a comma-free string of digits such as "365214" is read digit by digit.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim().trim_start_matches('[').trim_end_matches(']');
        let values = if s.contains(',') {
            s.split(',')
                .map(|x| x.trim().parse::<usize>().map_err(|e| ClassicalError::Parse(format!("{x:?}: {e}"))))
                .collect::<Result<Vec<_>, _>>()?
        } else {
            s.chars()
                .map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(|| ClassicalError::Parse(s.to_string())))
                .collect::<Result<Vec<_>, _>>()?
        };
        FinitePermutation::new(values)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_forms() {
        let a: FinitePermutation = "3,6,5,2,1,4".parse().unwrap();
        let b: FinitePermutation = "365214".parse().unwrap();
        assert_eq!(a, b);
        assert_eq!(a.to_string(), "3,6,5,2,1,4");
        assert!("1,1".parse::<FinitePermutation>().is_err());
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(FinitePermutation::all(0).len(), 1);
        assert_eq!(FinitePermutation::all(4).len(), 24);
        assert_eq!(FinitePermutation::all(6).len(), 720);
    }

    #[test]
    fn inverse_and_compose() {
        let w: FinitePermutation = "365214".parse().unwrap();
        assert_eq!(w.compose(&w.inverse()), FinitePermutation::identity(6));
    }
}
