//! Hamilton cycle search and relabeling along a Hamilton cycle.

use thiserror::Error;

use crate::graph::{BalancedBipartiteGraph, Vertex};
use crate::witness::CycleWitness;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LabelingError {
    #[error("invalid Hamilton labeling: {0}")]
    InvalidLabeling(String),
}

/// A Hamilton cycle written as `x_{xo[1]} y_{yo[1]} x_{xo[2]} ... y_{yo[n]} x_{xo[1]}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HamiltonLabeling {
    x_order: Vec<usize>,
    y_order: Vec<usize>,
}

impl HamiltonLabeling {
    /// Wraps the two orders without checking them against any graph.
    pub fn new(x_order: Vec<usize>, y_order: Vec<usize>) -> Self {
        Self { x_order, y_order }
    }

    /// The labeling `x_1 y_1 x_2 y_2 ... x_n y_n`.
    pub fn identity(n: usize) -> Self {
        Self::new((1..=n).collect(), (1..=n).collect())
    }

    pub fn x_order(&self) -> &[usize] {
        &self.x_order
    }

    pub fn y_order(&self) -> &[usize] {
        &self.y_order
    }

    pub fn as_cycle(&self) -> CycleWitness {
        CycleWitness::new(
            self.x_order
                .iter()
                .zip(&self.y_order)
                .flat_map(|(&i, &j)| [Vertex::X(i), Vertex::Y(j)])
                .collect(),
        )
    }

    /// Checks both orders are permutations of `1..=n` and that all `2n`
    /// consecutive pairs are edges of `g`.
    pub fn check(&self, g: &BalancedBipartiteGraph) -> Result<(), LabelingError> {
        let n = g.n();
        for (name, order) in [("x", &self.x_order), ("y", &self.y_order)] {
            if order.len() != n {
                return Err(LabelingError::InvalidLabeling(format!(
                    "{name}-order has length {} instead of {n}",
                    order.len()
                )));
            }
            let mut seen = vec![false; n + 1];
            for &v in order {
                if v == 0 || v > n || seen[v] {
                    return Err(LabelingError::InvalidLabeling(format!(
                        "{name}-order is not a permutation of 1..={n}"
                    )));
                }
                seen[v] = true;
            }
        }
        for k in 0..n {
            let x = self.x_order[k];
            let y = self.y_order[k];
            let x_next = self.x_order[(k + 1) % n];
            if !g.has_edge(x, y) {
                return Err(LabelingError::InvalidLabeling(format!("x{x} y{y} is not an edge")));
            }
            if !g.has_edge(x_next, y) {
                return Err(LabelingError::InvalidLabeling(format!(
                    "y{y} x{x_next} is not an edge"
                )));
            }
        }
        Ok(())
    }

    /// Maps a vertex of the relabeled graph back to the original graph.
    pub fn to_original(&self, v: Vertex) -> Vertex {
        match v {
            Vertex::X(i) => Vertex::X(self.x_order[i - 1]),
            Vertex::Y(j) => Vertex::Y(self.y_order[j - 1]),
        }
    }
}

/// Finds a Hamilton cycle by depth-first extension from `x_1`, trying
/// neighbours in ascending index order. The first cycle found is returned,
/// so the answer is deterministic.
pub fn find_hamilton_cycle(g: &BalancedBipartiteGraph) -> Option<HamiltonLabeling> {
    let n = g.n();
    let all = full_mask(2 * n);
    let path = hamilton_path_within(g, all)?;
    let mut x_order = Vec::with_capacity(n);
    let mut y_order = Vec::with_capacity(n);
    for v in path {
        match v {
            Vertex::X(i) => x_order.push(i),
            Vertex::Y(j) => y_order.push(j),
        }
    }
    Some(HamiltonLabeling::new(x_order, y_order))
}

/// Hamilton cycle of the subgraph induced on the ordinals in `allowed`,
/// starting from its lowest-index X vertex.
pub(crate) fn hamilton_path_within(g: &BalancedBipartiteGraph, allowed: u64) -> Option<Vec<Vertex>> {
    let n = g.n();
    let x_side = full_mask(n);
    let xs = allowed & x_side;
    let ys = allowed & !x_side;
    if xs.count_ones() != ys.count_ones() || xs.count_ones() < 2 {
        return None;
    }
    let nbr = g.ordinal_neighbours();
    let start = xs.trailing_zeros() as usize;
    let mut search = HamiltonSearch {
        nbr: &nbr,
        allowed,
        start,
        path: Vec::with_capacity(allowed.count_ones() as usize),
    };
    search.path.push(start);
    if search.extend(1u64 << start) {
        Some(search.path.iter().map(|&v| Vertex::from_ordinal(v, n)).collect())
    } else {
        None
    }
}

/// Searches for a cycle visiting every vertex in `allowed` and returns it as a witness.
pub(crate) fn hamilton_witness_within(g: &BalancedBipartiteGraph, allowed: u64) -> Option<CycleWitness> {
    hamilton_path_within(g, allowed).map(CycleWitness::new)
}

pub(crate) fn full_mask(bits: usize) -> u64 {
    if bits >= 64 {
        u64::MAX
    } else {
        (1u64 << bits) - 1
    }
}

struct HamiltonSearch<'a> {
    nbr: &'a [u64],
    allowed: u64,
    start: usize,
    path: Vec<usize>,
}

impl HamiltonSearch<'_> {
    fn extend(&mut self, visited: u64) -> bool {
        let end = *self.path.last().expect("path starts non-empty");
        let remaining = self.allowed & !visited;
        if remaining == 0 {
            return self.nbr[end] >> self.start & 1 == 1;
        }
        let mut candidates = self.nbr[end] & remaining;
        while candidates != 0 {
            let v = candidates.trailing_zeros() as usize;
            candidates &= candidates - 1;
            let visited = visited | 1 << v;
            if !self.feasible(v, visited) {
                continue;
            }
            self.path.push(v);
            if self.extend(visited) {
                return true;
            }
            self.path.pop();
        }
        false
    }

    /// Degree and connectivity prune after the path has been extended to `end`.
    fn feasible(&self, end: usize, visited: u64) -> bool {
        let remaining = self.allowed & !visited;
        if remaining == 0 {
            return self.nbr[end] >> self.start & 1 == 1;
        }
        if self.nbr[self.start] & remaining == 0 {
            return false;
        }
        // every unvisited vertex still needs two usable neighbours
        let open = remaining | 1 << end | 1 << self.start;
        let mut rest = remaining;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if (self.nbr[v] & open & !(1 << v)).count_ones() < 2 {
                return false;
            }
        }
        // the unvisited vertices must all be reachable from `end`
        let mut reached = 1u64 << end;
        let mut frontier = reached;
        while frontier != 0 {
            let mut next = 0;
            let mut f = frontier;
            while f != 0 {
                let v = f.trailing_zeros() as usize;
                f &= f - 1;
                next |= self.nbr[v] & remaining;
            }
            frontier = next & !reached;
            reached |= next;
        }
        reached & remaining == remaining
    }
}

/// Renumbers `g` so that the cycle described by `h` becomes
/// `x_1 y_1 x_2 y_2 ... x_n y_n x_1`: new `x_i` is old `x_{xo[i]}`, new `y_j`
/// is old `y_{yo[j]}`.
pub fn relabel_along_hamilton(
    g: &BalancedBipartiteGraph,
    h: &HamiltonLabeling,
) -> Result<BalancedBipartiteGraph, LabelingError> {
    h.check(g)?;
    let n = g.n();
    let rows = (1..=n)
        .map(|i| {
            let old = g.row(h.x_order[i - 1]);
            (1..=n).fold(0u64, |acc, j| acc | (old >> (h.y_order[j - 1] - 1) & 1) << (j - 1))
        })
        .collect();
    Ok(BalancedBipartiteGraph::from_rows(n, rows))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::witness::validate_cycle;

    #[test]
    fn g6_search_returns_identity_labeling() {
        let g = fixtures::g6();
        let h = find_hamilton_cycle(&g).unwrap();
        assert_eq!(h, HamiltonLabeling::identity(6));
        assert!(h.check(&g).is_ok());
        assert!(validate_cycle(&g, &h.as_cycle(), 12));
    }

    #[test]
    fn disconnected_and_bridged_graphs_are_not_hamiltonian() {
        assert_eq!(find_hamilton_cycle(&fixtures::gdis()), None);
        assert_eq!(find_hamilton_cycle(&fixtures::ges()), None);
    }

    #[test]
    fn k33_is_hamiltonian() {
        let h = find_hamilton_cycle(&fixtures::k33()).unwrap();
        assert_eq!(h, HamiltonLabeling::identity(3));
    }

    #[test]
    fn identity_relabel_is_noop() {
        let g = fixtures::g6();
        assert_eq!(relabel_along_hamilton(&g, &HamiltonLabeling::identity(6)).unwrap(), g);
    }

    #[test]
    fn rotated_labeling_lands_in_canonical_position() {
        let g = fixtures::g6();
        let h = HamiltonLabeling::new(vec![3, 4, 5, 6, 1, 2], vec![3, 4, 5, 6, 1, 2]);
        let r = relabel_along_hamilton(&g, &h).unwrap();
        assert!(r.is_canonically_labeled());
        assert!(r.is_half_regular());
        // G6 is circulant, so a rotation is an automorphism
        assert_eq!(r, g);
    }

    #[test]
    fn reversed_labeling_of_g6() {
        // x1 y6 x6 y5 x5 ... reads the canonical cycle backwards
        let g = fixtures::g6();
        let h = HamiltonLabeling::new(vec![1, 6, 5, 4, 3, 2], vec![6, 5, 4, 3, 2, 1]);
        let r = relabel_along_hamilton(&g, &h).unwrap();
        assert!(r.is_canonically_labeled());
        assert_eq!(r.size(), 18);
        assert_ne!(r, g);
    }

    #[test]
    fn labeling_with_non_edge_is_rejected() {
        let g = fixtures::g6();
        let h = HamiltonLabeling::new(vec![1, 2, 3, 4, 5, 6], vec![2, 1, 3, 4, 5, 6]);
        assert!(matches!(relabel_along_hamilton(&g, &h), Err(LabelingError::InvalidLabeling(_))));
        let not_perm = HamiltonLabeling::new(vec![1, 1, 3, 4, 5, 6], vec![1, 2, 3, 4, 5, 6]);
        assert!(not_perm.check(&g).is_err());
    }

    #[test]
    fn hamilton_within_subgraph() {
        // G8m minus {x2, y1}: the Condition1b cycle exists
        let g = fixtures::g8m();
        let allowed = full_mask(16) & !(1 << 1) & !(1 << 8);
        let w = hamilton_witness_within(&g, allowed).unwrap();
        assert!(validate_cycle(&g, &w, 14));
        assert!(!w.contains(Vertex::X(2)) && !w.contains(Vertex::Y(1)));
    }
}
