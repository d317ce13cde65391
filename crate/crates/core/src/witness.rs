//! Explicit cycles that can be checked edge by edge against a graph.

use std::fmt;

use serde::Serialize;

use crate::graph::{BalancedBipartiteGraph, Vertex};

/// A closed walk `v_1 v_2 ... v_L v_1` given as its vertex sequence.
///
/// Construction does not check anything; [`validate_cycle`] is the certificate.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct CycleWitness {
    vertices: Vec<Vertex>,
}

impl CycleWitness {
    pub fn new(vertices: Vec<Vertex>) -> Self {
        Self { vertices }
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.vertices.contains(&v)
    }

    /// Vertices of `g` that the cycle does not visit, X side first.
    pub fn omitted(&self, n: usize) -> Vec<Vertex> {
        (1..=n)
            .map(Vertex::X)
            .chain((1..=n).map(Vertex::Y))
            .filter(|v| !self.contains(*v))
            .collect()
    }

    /// Applies a vertex relabeling to every entry.
    pub fn map(&self, f: impl Fn(Vertex) -> Vertex) -> Self {
        Self::new(self.vertices.iter().map(|&v| f(v)).collect())
    }
}

impl fmt::Display for CycleWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, v) in self.vertices.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// True iff `c` is a cycle of `g` of exactly `expected_length` vertices:
/// distinct in-range vertices, alternating sides, every consecutive pair
/// (including the wrap-around) an edge.
pub fn validate_cycle(g: &BalancedBipartiteGraph, c: &CycleWitness, expected_length: usize) -> bool {
    let vs = c.vertices();
    let len = vs.len();
    if len != expected_length || len < 4 || len % 2 != 0 {
        return false;
    }
    let n = g.n();
    let mut seen = 0u64;
    for &v in vs {
        if v.index() == 0 || v.index() > n {
            return false;
        }
        let bit = 1u64 << v.ordinal(n);
        if seen & bit != 0 {
            return false;
        }
        seen |= bit;
    }
    (0..len).all(|k| {
        let (u, v) = (vs[k], vs[(k + 1) % len]);
        u.side() != v.side() && g.adjacent(u, v)
    })
}
