//! Small named graphs used throughout the tests and examples.

use crate::graph::BalancedBipartiteGraph;
use crate::signed::SignedAdjacencyMatrix;

fn circulant(n: usize, offsets: &[i64]) -> BalancedBipartiteGraph {
    BalancedBipartiteGraph::circulant(n, offsets).expect("fixture offsets are distinct")
}

/// n = 6, `x_i ~ y_i, y_{i-1}, y_{i+3}`.
pub fn g6() -> BalancedBipartiteGraph {
    circulant(6, &[0, -1, 3])
}

/// n = 6, `x_i ~ y_i, y_{i-1}, y_{i+1}`.
pub fn g6b() -> BalancedBipartiteGraph {
    circulant(6, &[0, -1, 1])
}

/// n = 8, `x_i ~ y_i, y_{i-1}, y_{i+1}, y_{i+4}`.
pub fn g8m() -> BalancedBipartiteGraph {
    circulant(8, &[0, -1, 1, 4])
}

/// n = 8 graph rebuilt from the first-row band `(+, +, -, -)`; it has no
/// shortcut chords, so only the structural construction applies.
pub fn g8s() -> BalancedBipartiteGraph {
    from_band(8, &[1, 1, -1, -1])
}

/// n = 8 graph rebuilt from the first-row band `(-, +, +, -)`.
pub fn g8s_variant() -> BalancedBipartiteGraph {
    from_band(8, &[-1, 1, 1, -1])
}

pub fn from_band(n: usize, band: &[i8]) -> BalancedBipartiteGraph {
    SignedAdjacencyMatrix::from_first_row(n, band)
        .expect("valid band")
        .to_graph()
}

/// Two disjoint copies of `K_{3,3}`.
pub fn gdis() -> BalancedBipartiteGraph {
    BalancedBipartiteGraph::from_edge_list(6, &two_blocks()).expect("valid edges")
}

/// Two copies of `K_{3,3}` joined by the single edge `x_3 y_4`.
pub fn ges() -> BalancedBipartiteGraph {
    let mut edges = two_blocks();
    edges.push((3, 4));
    BalancedBipartiteGraph::from_edge_list(6, &edges).expect("valid edges")
}

pub fn k33() -> BalancedBipartiteGraph {
    complete(3)
}

pub fn complete(n: usize) -> BalancedBipartiteGraph {
    let edges: Vec<_> = (1..=n).flat_map(|i| (1..=n).map(move |j| (i, j))).collect();
    BalancedBipartiteGraph::from_edge_list(n, &edges).expect("valid edges")
}

fn two_blocks() -> Vec<(usize, usize)> {
    let mut edges = Vec::new();
    for block in [0, 3] {
        for i in 1..=3 {
            for j in 1..=3 {
                edges.push((block + i, block + j));
            }
        }
    }
    edges
}
