use std::fmt;
use std::str::FromStr;

use crate::error::CoreError;
use crate::partition::Partition;

/// Row-strict filling of a partition shape by 1..=n, rows read as sets.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tabloid {
    rows: Vec<Vec<usize>>,
    n: usize,
}

impl Tabloid {
    /// Rows may be given in any order internally; they are sorted. Row sizes
    /// must weakly decrease and the rows must cover 1..=n exactly once.
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self, CoreError> {
        let mut rows = rows;
        for r in rows.iter_mut() {
            r.sort_unstable();
        }
        while rows.last().is_some_and(|r| r.is_empty()) {
            rows.pop();
        }
        if rows.windows(2).any(|w| w[0].len() < w[1].len()) {
            return Err(CoreError::InvalidTabloid(format!("row sizes not weakly decreasing: {rows:?}")));
        }
        let n: usize = rows.iter().map(Vec::len).sum();
        let mut seen = vec![false; n + 1];
        for &x in rows.iter().flatten() {
            if x == 0 || x > n || seen[x] {
                return Err(CoreError::InvalidTabloid(format!("entries are not 1..={n}: {rows:?}")));
            }
            seen[x] = true;
        }
        Ok(Tabloid { rows, n })
    }

    /// Builds a tabloid from `row_of[i-1]` = row (1-based) of entry i.
    pub fn from_row_of(row_of: &[usize]) -> Result<Self, CoreError> {
        let nrows = row_of.iter().copied().max().unwrap_or(0);
        let mut rows = vec![Vec::new(); nrows];
        for (i, &r) in row_of.iter().enumerate() {
            if r == 0 {
                return Err(CoreError::InvalidTabloid("row index 0".into()));
            }
            rows[r - 1].push(i + 1);
        }
        if rows.iter().any(Vec::is_empty) {
            return Err(CoreError::InvalidTabloid(format!("empty row in {row_of:?}")));
        }
        Tabloid::new(rows)
    }

    /// Single-row tabloid {1..n}.
    pub fn single_row(n: usize) -> Self {
        let rows = if n == 0 { vec![] } else { vec![(1..=n).collect()] };
        Tabloid { rows, n }
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn shape(&self) -> Partition {
        Partition::new(self.rows.iter().map(Vec::len).collect()).expect("tabloid shape is a partition")
    }

    /// Row (1-based) containing `x`.
    pub fn row_of(&self, x: usize) -> Option<usize> {
        self.rows.iter().position(|r| r.binary_search(&x).is_ok()).map(|k| k + 1)
    }

    /// Row index of every entry 1..=n.
    pub fn row_word(&self) -> Vec<usize> {
        let mut out = vec![0; self.n];
        for (k, r) in self.rows.iter().enumerate() {
            for &x in r {
                out[x - 1] = k + 1;
            }
        }
        out
    }

    /// All tabloids of shape `shape`, in lexicographic order of rows.
    pub fn all_of_shape(shape: &Partition) -> Vec<Tabloid> {
        fn rec(remaining: &[usize], shape: &[usize], cur: &mut Vec<Vec<usize>>, out: &mut Vec<Vec<Vec<usize>>>) {
            let Some((&k, rest)) = shape.split_first() else {
                out.push(cur.clone());
                return;
            };
            for pick in combinations(remaining, k) {
                let left: Vec<usize> = remaining.iter().copied().filter(|x| !pick.contains(x)).collect();
                cur.push(pick);
                rec(&left, rest, cur, out);
                cur.pop();
            }
        }
        let n = shape.size();
        let all: Vec<usize> = (1..=n).collect();
        let mut out = Vec::new();
        rec(&all, shape.parts(), &mut Vec::new(), &mut out);
        out.into_iter().map(|rows| Tabloid { rows, n }).collect()
    }
}

fn combinations(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if items.len() < k {
        return vec![];
    }
    let mut out = Vec::new();
    for (i, &x) in items.iter().enumerate() {
        for mut tail in combinations(&items[i + 1..], k - 1) {
            tail.insert(0, x);
            out.push(tail);
        }
    }
    out
}

impl fmt::Display for Tabloid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","))
            .collect();
        write!(f, "{}", rows.join("/"))
    }
}

impl FromStr for Tabloid {
    type Err = CoreError;

    /// Parses "1,3/2/4".
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() {
            return Tabloid::new(vec![]);
        }
        let rows = s
            .split('/')
            .map(|row| {
                row.split(',')
                    .filter(|x| !x.trim().is_empty())
                    .map(|x| x.trim().parse::<usize>().map_err(|e| CoreError::Parse(format!("{x:?}: {e}"))))
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        Tabloid::new(rows)
    }
}
