//! Balanced bipartite graphs with colour classes `X = {x_1..x_n}` and
//! `Y = {y_1..y_n}`, plus the plain-text edge-list format.
//!
//! All public indices are 1-based. Internally a vertex also has an
//! *ordinal* in `0..2n` (`x_i -> i-1`, `y_j -> n+j-1`) so that vertex sets
//! fit in a single `u64` mask.

use std::fmt;

use serde::ser::{Serialize, SerializeTuple, Serializer};
use thiserror::Error;

/// Largest supported class size. Vertex sets are `u64` masks over `2n` ordinals.
pub const MAX_N: usize = 32;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("class size n = {0} is outside 1..={MAX_N}")]
    InvalidN(usize),
    #[error("edge ({i}, {j}) has an index outside 1..={n}")]
    IndexOutOfRange { i: usize, j: usize, n: usize },
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

/// Maps any integer onto `1..=n` modulo `n` (0 means `n`).
pub fn wrap(i: i64, n: usize) -> usize {
    let n = n as i64;
    (((i - 1) % n + n) % n + 1) as usize
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    X,
    Y,
}

/// A vertex `x_i` or `y_j` (1-based).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Vertex {
    X(usize),
    Y(usize),
}

impl Vertex {
    pub fn side(self) -> Side {
        match self {
            Vertex::X(_) => Side::X,
            Vertex::Y(_) => Side::Y,
        }
    }

    pub fn index(self) -> usize {
        match self {
            Vertex::X(i) | Vertex::Y(i) => i,
        }
    }

    pub(crate) fn ordinal(self, n: usize) -> usize {
        match self {
            Vertex::X(i) => i - 1,
            Vertex::Y(j) => n + j - 1,
        }
    }

    pub(crate) fn from_ordinal(v: usize, n: usize) -> Vertex {
        if v < n {
            Vertex::X(v + 1)
        } else {
            Vertex::Y(v - n + 1)
        }
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Vertex::X(i) => write!(f, "x{i}"),
            Vertex::Y(j) => write!(f, "y{j}"),
        }
    }
}

/// Serialized as `["x", i]` / `["y", j]`.
impl Serialize for Vertex {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut t = serializer.serialize_tuple(2)?;
        match self {
            Vertex::X(i) => {
                t.serialize_element("x")?;
                t.serialize_element(i)?;
            }
            Vertex::Y(j) => {
                t.serialize_element("y")?;
                t.serialize_element(j)?;
            }
        }
        t.end()
    }
}

/// Bipartite graph of order `2n` stored as `n` rows of `n` adjacency bits.
///
/// Bit `j-1` of row `i-1` is set iff `x_i ~ y_j`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BalancedBipartiteGraph {
    n: usize,
    rows: Vec<u64>,
}

impl fmt::Debug for BalancedBipartiteGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BalancedBipartiteGraph(n = {})", self.n)?;
        for i in 1..=self.n {
            let row: String = (1..=self.n)
                .map(|j| if self.has_edge(i, j) { '1' } else { '.' })
                .collect();
            writeln!(f, "  x{i:<2} {row}")?;
        }
        Ok(())
    }
}

impl BalancedBipartiteGraph {
    /// The edgeless graph on `2n` vertices.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if n == 0 || n > MAX_N {
            return Err(GraphError::InvalidN(n));
        }
        Ok(Self { n, rows: vec![0; n] })
    }

    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Self::empty(n)?;
        for &(i, j) in edges {
            if i == 0 || j == 0 || i > n || j > n {
                return Err(GraphError::IndexOutOfRange { i, j, n });
            }
            if g.has_edge(i, j) {
                return Err(GraphError::DuplicateEdge(i, j));
            }
            g.rows[i - 1] |= 1 << (j - 1);
        }
        Ok(g)
    }

    /// Builds a graph from raw row masks (bit `j-1` of `rows[i-1]` is `x_i ~ y_j`).
    pub(crate) fn from_rows(n: usize, rows: Vec<u64>) -> Self {
        debug_assert_eq!(rows.len(), n);
        Self { n, rows }
    }

    /// Builds the circulant graph with `x_i ~ y_{i+d}` for every offset `d`.
    pub fn circulant(n: usize, offsets: &[i64]) -> Result<Self, GraphError> {
        let mut edges = Vec::with_capacity(n * offsets.len());
        for i in 1..=n {
            for &d in offsets {
                edges.push((i, wrap(i as i64 + d, n)));
            }
        }
        Self::from_edge_list(n, &edges)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> usize {
        2 * self.n
    }

    /// `x_i ~ y_j`, 1-based. Out-of-range indices are simply not edges.
    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        i >= 1 && j >= 1 && i <= self.n && j <= self.n && self.rows[i - 1] >> (j - 1) & 1 == 1
    }

    /// Edge test with indices taken modulo `n`.
    pub fn has_edge_mod(&self, i: i64, j: i64) -> bool {
        self.has_edge(wrap(i, self.n), wrap(j, self.n))
    }

    pub fn adjacent(&self, u: Vertex, v: Vertex) -> bool {
        match (u, v) {
            (Vertex::X(i), Vertex::Y(j)) | (Vertex::Y(j), Vertex::X(i)) => self.has_edge(i, j),
            _ => false,
        }
    }

    pub fn add_edge(&mut self, i: usize, j: usize) -> Result<(), GraphError> {
        let n = self.n;
        if i == 0 || j == 0 || i > n || j > n {
            return Err(GraphError::IndexOutOfRange { i, j, n });
        }
        if self.has_edge(i, j) {
            return Err(GraphError::DuplicateEdge(i, j));
        }
        self.rows[i - 1] |= 1 << (j - 1);
        Ok(())
    }

    pub fn degree(&self, v: Vertex) -> usize {
        match v {
            Vertex::X(i) => self.rows[i - 1].count_ones() as usize,
            Vertex::Y(j) => self.rows.iter().filter(|r| *r >> (j - 1) & 1 == 1).count(),
        }
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones() as usize).sum()
    }

    /// True iff every vertex has degree `n/2` (so `n` must be even).
    pub fn is_half_regular(&self) -> bool {
        if self.n % 2 != 0 {
            return false;
        }
        let k = self.n / 2;
        (1..=self.n).all(|i| self.degree(Vertex::X(i)) == k && self.degree(Vertex::Y(i)) == k)
    }

    /// Edges sorted by `(i, j)`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.size());
        for i in 1..=self.n {
            for j in 1..=self.n {
                if self.has_edge(i, j) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// Row mask of `x_i`.
    pub(crate) fn row(&self, i: usize) -> u64 {
        self.rows[i - 1]
    }

    /// Neighbourhood masks over ordinals `0..2n`.
    pub(crate) fn ordinal_neighbours(&self) -> Vec<u64> {
        let n = self.n;
        let mut nbr = vec![0u64; 2 * n];
        for i in 0..n {
            let row = self.rows[i];
            nbr[i] = row << n;
            for j in 0..n {
                if row >> j & 1 == 1 {
                    nbr[n + j] |= 1 << i;
                }
            }
        }
        nbr
    }

    /// True iff `x_i ~ y_i` and `x_{i+1} ~ y_i` for every `i` (mod `n`), i.e.
    /// the Hamilton cycle reads `x_1 y_1 x_2 y_2 ... x_n y_n x_1`.
    pub fn is_canonically_labeled(&self) -> bool {
        let n = self.n as i64;
        n >= 2 && (1..=n).all(|i| self.has_edge_mod(i, i) && self.has_edge_mod(i + 1, i))
    }

    /// Renders the graph in the edge-list text format.
    pub fn to_edge_list(&self) -> String {
        let mut s = format!("{}\n", self.n);
        for (i, j) in self.edges() {
            s.push_str(&format!("{i} {j}\n"));
        }
        s
    }

    /// Parses the edge-list text format.
    ///
    /// The first non-comment line is `n`; every further non-comment line is
    /// `i j` (ASCII decimal, one space) meaning `x_i ~ y_j`. Lines starting
    /// with `#` are comments. The final newline is optional.
    pub fn parse_edge_list(text: &str) -> Result<Self, GraphError> {
        let mut lines: Vec<&str> = text.split('\n').collect();
        if lines.last() == Some(&"") {
            lines.pop();
        }
        let mut n = None;
        let mut edges = Vec::new();
        for (idx, line) in lines.iter().enumerate() {
            let lineno = idx + 1;
            if line.starts_with('#') {
                continue;
            }
            let err = |message: &str| GraphError::Parse {
                line: lineno,
                message: message.to_string(),
            };
            match n {
                None => n = Some(parse_decimal(line).ok_or_else(|| err("expected class size `n`"))?),
                Some(_) => {
                    let (a, b) = line
                        .split_once(' ')
                        .ok_or_else(|| err("expected `i j` separated by one space"))?;
                    let i = parse_decimal(a).ok_or_else(|| err("bad x-index"))?;
                    let j = parse_decimal(b).ok_or_else(|| err("bad y-index"))?;
                    edges.push((i, j));
                }
            }
        }
        let n = n.ok_or(GraphError::Parse {
            line: lines.len().max(1),
            message: "missing class size line".to_string(),
        })?;
        Self::from_edge_list(n, &edges)
    }
}

fn parse_decimal(s: &str) -> Option<usize> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.parse().ok()
}
