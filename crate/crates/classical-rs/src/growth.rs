use combinatorics_core::{Partition, StandardTableau};

use crate::perm::FinitePermutation;

/// Edge labels on the (n+1) x (n+1) vertex grid. `h[i][j]` labels the horizontal
/// edge from vertex (i, j-1) to (i, j); `v[i][j]` the vertical edge from
/// (i-1, j) to (i, j). Entries with j = 0 in `h` and i = 0 in `v` are unused.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeLabels {
    pub n: usize,
    pub h: Vec<Vec<usize>>,
    pub v: Vec<Vec<usize>>,
}

impl EdgeLabels {
    pub fn zeros(n: usize) -> Self {
        EdgeLabels { n, h: vec![vec![0; n + 1]; n + 1], v: vec![vec![0; n + 1]; n + 1] }
    }
}

/// Vertex (i, j) carries the shape of the insertion tableau of the values
/// at most i among positions at most j.
#[derive(Debug, Clone)]
pub struct ClassicalGrowthDiagram {
    pub n: usize,
    pub shapes: Vec<Vec<Partition>>,
    pub labels: EdgeLabels,
}

/// Row (1-based) of the single box of `big` / `small`, or 0 when equal.
fn added_row(small: &Partition, big: &Partition) -> usize {
    (0..big.len()).find(|&k| big.part(k) != small.part(k)).map_or(0, |k| k + 1)
}

fn with_box(p: &Partition, row: usize) -> Partition {
    let mut parts = p.parts().to_vec();
    if row > parts.len() {
        parts.push(0);
    }
    parts[row - 1] += 1;
    Partition::new(parts).expect("box added at a corner")
}

/// Fomin's local rule for the south-east corner of a tile given its other three corners.
pub fn vertex_rule(nw: &Partition, ne: &Partition, sw: &Partition, marked: bool) -> Partition {
    if ne != sw {
        let len = ne.len().max(sw.len());
        return Partition::new((0..len).map(|k| ne.part(k).max(sw.part(k))).collect()).expect("union");
    }
    if ne == nw {
        return if marked { with_box(nw, 1) } else { nw.clone() };
    }
    with_box(ne, added_row(nw, ne) + 1)
}

pub fn growth_diagram(w: &FinitePermutation) -> ClassicalGrowthDiagram {
    let n = w.n();
    let mut shapes = vec![vec![Partition::empty(); n + 1]; n + 1];
    for i in 1..=n {
        for j in 1..=n {
            let rho = vertex_rule(&shapes[i - 1][j - 1], &shapes[i - 1][j], &shapes[i][j - 1], w.at(j) == i);
            shapes[i][j] = rho;
        }
    }
    let mut labels = EdgeLabels::zeros(n);
    for i in 0..=n {
        for j in 1..=n {
            labels.h[i][j] = added_row(&shapes[i][j - 1], &shapes[i][j]);
        }
    }
    for i in 1..=n {
        for j in 0..=n {
            labels.v[i][j] = added_row(&shapes[i - 1][j], &shapes[i][j]);
        }
    }
    ClassicalGrowthDiagram { n, shapes, labels }
}

/// Reads P from the right boundary (value i enters row v[i][n]) and Q from the
/// bottom boundary (position j enters row h[n][j]).
pub fn tableaux_from_labels(labels: &EdgeLabels) -> (StandardTableau, StandardTableau) {
    let n = labels.n;
    let p_rows: Vec<usize> = (1..=n).map(|i| labels.v[i][n]).collect();
    let q_rows: Vec<usize> = (1..=n).map(|j| labels.h[n][j]).collect();
    (
        StandardTableau::from_row_sequence(&p_rows).expect("right boundary is a standard row sequence"),
        StandardTableau::from_row_sequence(&q_rows).expect("bottom boundary is a standard row sequence"),
    )
}

pub fn rs_growth(w: &FinitePermutation) -> (StandardTableau, StandardTableau) {
    tableaux_from_labels(&growth_diagram(w).labels)
}
