use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use crate::error::CoreError;
use crate::partition::Partition;
use crate::tabloid::Tabloid;

/// Filling of a skew shape by 1..=m. `cells[e-1]` is the (row, column) of
/// entry e, both 1-based. The inner shape is stored as row lengths and is not
/// required to be a partition, so that shape checks can be done after the fact.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SkewTableau {
    inner: Vec<usize>,
    cells: Vec<(usize, usize)>,
}

impl SkewTableau {
    pub fn new(inner: Vec<usize>, cells: Vec<(usize, usize)>) -> Self {
        SkewTableau { inner, cells }
    }

    pub fn size(&self) -> usize {
        self.cells.len()
    }

    pub fn inner(&self) -> &[usize] {
        &self.inner
    }

    pub fn inner_part(&self, r: usize) -> usize {
        self.inner.get(r - 1).copied().unwrap_or(0)
    }

    pub fn cell_of(&self, e: usize) -> (usize, usize) {
        self.cells[e - 1]
    }

    pub fn cells(&self) -> &[(usize, usize)] {
        &self.cells
    }

    /// Column index of entries 1..=m.
    pub fn column_word(&self) -> Vec<usize> {
        self.cells.iter().map(|c| c.1).collect()
    }

    /// Row index of entries 1..=m.
    pub fn row_word(&self) -> Vec<usize> {
        self.cells.iter().map(|c| c.0).collect()
    }

    fn num_rows(&self) -> usize {
        self.cells.iter().map(|c| c.0).max().unwrap_or(0).max(self.inner.len())
    }

    /// Entries of each row in column order.
    pub fn rows(&self) -> Vec<Vec<usize>> {
        let mut rows = vec![Vec::new(); self.num_rows()];
        for (e, &(r, _)) in self.cells.iter().enumerate() {
            rows[r - 1].push(e + 1);
        }
        for row in rows.iter_mut() {
            row.sort_by_key(|&e| self.cells[e - 1].1);
        }
        rows
    }

    /// Outer row lengths, when each row's cells sit contiguously right after the inner part.
    pub fn outer(&self) -> Option<Vec<usize>> {
        let rows = self.rows();
        let mut out = Vec::with_capacity(rows.len());
        for (k, row) in rows.iter().enumerate() {
            let start = self.inner_part(k + 1);
            for (off, &e) in row.iter().enumerate() {
                if self.cells[e - 1].1 != start + off + 1 {
                    return None;
                }
            }
            out.push(start + row.len());
        }
        Some(out)
    }

    /// True iff inner and outer are partitions and rows and columns strictly increase.
    pub fn is_standard(&self) -> bool {
        if self.inner.windows(2).any(|w| w[0] < w[1]) {
            return false;
        }
        let Some(outer) = self.outer() else { return false };
        if outer.windows(2).any(|w| w[0] < w[1]) {
            return false;
        }
        let at: HashMap<(usize, usize), usize> =
            self.cells.iter().enumerate().map(|(e, &c)| (c, e + 1)).collect();
        self.cells.iter().enumerate().all(|(e, &(r, c))| {
            let e = e + 1;
            at.get(&(r, c + 1)).is_none_or(|&x| x > e) && at.get(&(r + 1, c)).is_none_or(|&x| x > e)
        })
    }

    /// Moves the cells of column `c` up one row, shrinking the inner column by one.
    /// None if the inner shape has no removable corner in column `c`.
    pub fn slide_column_up(&self, c: usize) -> Option<SkewTableau> {
        let inner = Partition::new(self.inner.clone()).ok()?;
        let col_len = inner.column_length(c);
        if col_len == 0 || inner.part(col_len - 1) != c {
            return None;
        }
        let mut new_inner = self.inner.clone();
        new_inner[col_len - 1] -= 1;
        let cells = self
            .cells
            .iter()
            .map(|&(r, cc)| if cc == c { (r - 1, cc) } else { (r, cc) })
            .collect();
        Some(SkewTableau { inner: new_inner, cells })
    }
}

/// Places row i of `pbar` in row i of (lambda + mu)/lambda, increasing left to right.
/// The result need not be column strict.
pub fn looparrowright(lambda: &Partition, pbar: &Tabloid) -> SkewTableau {
    let mut cells = vec![(0, 0); pbar.n()];
    for (k, row) in pbar.rows().iter().enumerate() {
        let start = lambda.part(k);
        for (off, &x) in row.iter().enumerate() {
            cells[x - 1] = (k + 1, start + off + 1);
        }
    }
    let inner = lambda.parts().to_vec();
    SkewTableau { inner, cells }
}

/// The tabloid whose rows are the row contents of `t`.
pub fn row_content_tabloid(t: &SkewTableau) -> Result<Tabloid, CoreError> {
    let mut rows = t.rows();
    while rows.last().is_some_and(|r| r.is_empty()) {
        rows.pop();
    }
    Tabloid::new(rows)
}

/// Standard Young tableau of straight shape.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct StandardTableau {
    rows: Vec<Vec<usize>>,
}

impl StandardTableau {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self, CoreError> {
        let n: usize = rows.iter().map(Vec::len).sum();
        let mut seen = vec![false; n + 1];
        for &x in rows.iter().flatten() {
            if x == 0 || x > n || seen[x] {
                return Err(CoreError::InvalidTableau(format!("entries are not 1..={n}")));
            }
            seen[x] = true;
        }
        if rows.iter().any(Vec::is_empty) || rows.windows(2).any(|w| w[0].len() < w[1].len()) {
            return Err(CoreError::InvalidTableau(format!("not a partition shape: {rows:?}")));
        }
        for (k, row) in rows.iter().enumerate() {
            if row.windows(2).any(|w| w[0] >= w[1]) {
                return Err(CoreError::InvalidTableau(format!("row {} not increasing", k + 1)));
            }
            if k > 0 && row.iter().zip(&rows[k - 1]).any(|(b, a)| a >= b) {
                return Err(CoreError::InvalidTableau(format!("column not increasing at row {}", k + 1)));
            }
        }
        Ok(StandardTableau { rows })
    }

    /// Tableau in which entry i is appended to row `row_of[i-1]`.
    pub fn from_row_sequence(row_of: &[usize]) -> Result<Self, CoreError> {
        let mut rows: Vec<Vec<usize>> = Vec::new();
        for (i, &r) in row_of.iter().enumerate() {
            if r == 0 || r > rows.len() + 1 {
                return Err(CoreError::InvalidTableau(format!("row sequence {row_of:?}")));
            }
            if r > rows.len() {
                rows.push(Vec::new());
            }
            rows[r - 1].push(i + 1);
        }
        StandardTableau::new(rows)
    }

    /// Tableau in which entry i is appended to column `col_of[i-1]`.
    pub fn from_column_sequence(col_of: &[usize]) -> Result<Self, CoreError> {
        let mut heights: Vec<usize> = Vec::new();
        let mut rows: Vec<Vec<usize>> = Vec::new();
        for (i, &c) in col_of.iter().enumerate() {
            if c == 0 || c > heights.len() + 1 {
                return Err(CoreError::InvalidTableau(format!("column sequence {col_of:?}")));
            }
            if c > heights.len() {
                heights.push(0);
            }
            heights[c - 1] += 1;
            let r = heights[c - 1];
            if r > rows.len() {
                rows.push(Vec::new());
            }
            if rows[r - 1].len() != c - 1 {
                return Err(CoreError::InvalidTableau(format!("column sequence {col_of:?}")));
            }
            rows[r - 1].push(i + 1);
        }
        StandardTableau::new(rows)
    }

    pub fn single_row(n: usize) -> Self {
        let rows = if n == 0 { vec![] } else { vec![(1..=n).collect()] };
        StandardTableau { rows }
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn shape(&self) -> Partition {
        Partition::new(self.rows.iter().map(Vec::len).collect()).expect("valid shape")
    }

    pub fn transpose(&self) -> StandardTableau {
        let width = self.rows.first().map_or(0, Vec::len);
        let rows = (0..width)
            .map(|c| self.rows.iter().take_while(|r| r.len() > c).map(|r| r[c]).collect())
            .collect();
        StandardTableau { rows }
    }

    pub fn as_skew(&self) -> SkewTableau {
        let mut cells = vec![(0, 0); self.size()];
        for (r, row) in self.rows.iter().enumerate() {
            for (c, &x) in row.iter().enumerate() {
                cells[x - 1] = (r + 1, c + 1);
            }
        }
        SkewTableau::new(vec![], cells)
    }

    /// Every standard tableau with `n` cells.
    pub fn all_of_size(n: usize) -> Vec<StandardTableau> {
        fn rec(i: usize, n: usize, rows: &mut Vec<Vec<usize>>, out: &mut Vec<StandardTableau>) {
            if i > n {
                out.push(StandardTableau { rows: rows.clone() });
                return;
            }
            for r in 0..=rows.len() {
                let ok = if r == rows.len() { true } else { r == 0 || rows[r - 1].len() > rows[r].len() };
                if !ok {
                    continue;
                }
                if r == rows.len() {
                    rows.push(vec![i]);
                    rec(i + 1, n, rows, out);
                    rows.pop();
                } else {
                    rows[r].push(i);
                    rec(i + 1, n, rows, out);
                    rows[r].pop();
                }
            }
        }
        let mut out = Vec::new();
        rec(1, n, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for StandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","))
            .collect();
        write!(f, "{}", rows.join("/"))
    }
}

impl FromStr for StandardTableau {
    type Err = CoreError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t: Tabloid = s.parse()?;
        StandardTableau::new(t.rows().to_vec())
    }
}

/// Schutzenberger evacuation: repeatedly delete the corner entry 1, slide the
/// hole out by jeu de taquin and write N, N-1, ... into the vacated cells.
pub fn evacuation(t: &StandardTableau) -> StandardTableau {
    let n = t.size();
    let mut work: Vec<Vec<usize>> = t.rows.clone();
    let mut out: Vec<Vec<usize>> = t.rows.iter().map(|r| vec![0; r.len()]).collect();
    for label in (1..=n).rev() {
        let (mut i, mut j) = (0, 0);
        loop {
            let down = work.get(i + 1).and_then(|r| r.get(j)).copied();
            let right = work[i].get(j + 1).copied();
            match (down, right) {
                (None, None) => break,
                (Some(d), Some(r)) if d < r => {
                    work[i][j] = d;
                    i += 1;
                }
                (Some(d), None) => {
                    work[i][j] = d;
                    i += 1;
                }
                (_, Some(r)) => {
                    work[i][j] = r;
                    j += 1;
                }
            }
        }
        work[i].pop();
        if work[i].is_empty() {
            work.pop();
        }
        out[i][j] = label;
    }
    StandardTableau { rows: out }
}
