//! The ±1 adjacency matrix of a canonically labeled graph and its band structure.
//!
//! Entry `(i, j)` is `+1` when `x_i ~ y_j` and `-1` otherwise. The *offset*
//! of a position is `j - i mod n`. Offsets `0` and `n-1` carry the Hamilton
//! edges; offsets `1` and `n-2` are the positions whose edges would close a
//! shortcut cycle; the remaining offsets `2..=n-3` form the *band*.

use thiserror::Error;

use crate::graph::{wrap, BalancedBipartiteGraph};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SignedError {
    #[error("graph is not canonically labeled: x{i} y{j} is missing")]
    NotCanonical { i: usize, j: usize },
    #[error("band of length {got} does not fit n = {n}")]
    BadBand { n: usize, got: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SignedAdjacencyMatrix {
    n: usize,
    a: Vec<i8>,
}

/// `+1` / `-1`, rendered as `+` / `-`.
pub fn sign_char(s: i8) -> char {
    if s > 0 {
        '+'
    } else {
        '-'
    }
}

impl SignedAdjacencyMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Entry `a^i_j` with both indices taken modulo `n`.
    pub fn get(&self, i: i64, j: i64) -> i8 {
        let (i, j) = (wrap(i, self.n), wrap(j, self.n));
        self.a[(i - 1) * self.n + (j - 1)]
    }

    /// Entry at row `i`, offset `d` (column `i + d`).
    pub fn at_offset(&self, i: i64, d: i64) -> i8 {
        self.get(i, i + d)
    }

    pub fn row_sum(&self, i: usize) -> i64 {
        (1..=self.n as i64).map(|j| self.get(i as i64, j) as i64).sum()
    }

    pub fn col_sum(&self, j: usize) -> i64 {
        (1..=self.n as i64).map(|i| self.get(i, j as i64) as i64).sum()
    }

    pub fn line_sums_zero(&self) -> bool {
        (1..=self.n).all(|k| self.row_sum(k) == 0 && self.col_sum(k) == 0)
    }

    /// Rebuilds the full matrix from the band of row 1, `(a^1_3, ..., a^1_{n-2})`.
    ///
    /// Band entries alternate in sign along each diagonal,
    /// `a^i_{i+d} = (-1)^{i-1} a^1_{1+d}`, and the border is fixed:
    /// offsets `0, n-1` are `+1`, offsets `1, n-2` are `-1`. Requires even
    /// `n >= 6` so that the diagonals close up consistently.
    pub fn from_first_row(n: usize, band: &[i8]) -> Result<Self, SignedError> {
        if n < 6 || n % 2 != 0 || band.len() != n - 4 || band.iter().any(|&s| s != 1 && s != -1) {
            return Err(SignedError::BadBand { n, got: band.len() });
        }
        let mut a = vec![0i8; n * n];
        for i in 1..=n {
            let sign = if i % 2 == 1 { 1 } else { -1 };
            for d in 0..n {
                let v = match d {
                    0 => 1,
                    1 => -1,
                    _ if d == n - 1 => 1,
                    _ if d == n - 2 => -1,
                    _ => sign * band[d - 2],
                };
                let j = wrap((i + d) as i64, n);
                a[(i - 1) * n + (j - 1)] = v;
            }
        }
        Ok(Self { n, a })
    }

    /// Band of row 1: `(a^1_3, ..., a^1_{n-2})`.
    pub fn first_row_band(&self) -> Vec<i8> {
        (3..=self.n as i64 - 2).map(|j| self.get(1, j)).collect()
    }

    /// The graph whose `+1` entries are edges.
    pub fn to_graph(&self) -> BalancedBipartiteGraph {
        let n = self.n;
        let rows = (0..n)
            .map(|i| (0..n).fold(0u64, |acc, j| acc | u64::from(self.a[i * n + j] > 0) << j))
            .collect();
        BalancedBipartiteGraph::from_rows(n, rows)
    }
}

/// The signed matrix of a canonically labeled graph.
pub fn signed_matrix(g: &BalancedBipartiteGraph) -> Result<SignedAdjacencyMatrix, SignedError> {
    let n = g.n();
    for i in 1..=n as i64 {
        for j in [i, i - 1] {
            if !g.has_edge_mod(i, j) {
                return Err(SignedError::NotCanonical {
                    i: i as usize,
                    j: wrap(j, n),
                });
            }
        }
    }
    Ok(unchecked_signed_matrix(g))
}

/// The ±1 image of the adjacency matrix with no labeling requirement.
pub(crate) fn unchecked_signed_matrix(g: &BalancedBipartiteGraph) -> SignedAdjacencyMatrix {
    let n = g.n();
    let mut a = Vec::with_capacity(n * n);
    for i in 1..=n {
        for j in 1..=n {
            a.push(if g.has_edge(i, j) { 1 } else { -1 });
        }
    }
    SignedAdjacencyMatrix { n, a }
}
