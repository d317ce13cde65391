//! Brute-force cycle search and bipancyclicity predicates.
//!
//! The search here shares no code with the Hamilton search in
//! [`crate::hamilton`] so that each can be used to check the other.

use std::collections::BTreeSet;

use serde::{Serialize, Serializer};

use crate::extract::{validate_class_member, ExtractError};
use crate::graph::{BalancedBipartiteGraph, Vertex};
use crate::hamilton::{full_mask, hamilton_witness_within};
use crate::witness::{validate_cycle, CycleWitness};

/// Finds a simple cycle with exactly `len` vertices.
///
/// Candidate cycles are anchored at their lowest-ordinal vertex (always an
/// X vertex) and extended depth-first in ascending order; a branch is cut
/// when the anchor is no longer reachable within the remaining budget.
pub fn find_cycle_of_length(g: &BalancedBipartiteGraph, len: usize) -> Option<CycleWitness> {
    let n = g.n();
    if len < 4 || len % 2 != 0 || len > 2 * n {
        return None;
    }
    let nbr = g.ordinal_neighbours();
    for anchor in 0..n {
        // only vertices above the anchor may be used
        let usable = full_mask(2 * n) & !full_mask(anchor + 1);
        let mut search = CycleSearch {
            nbr: &nbr,
            anchor,
            usable,
            len,
            path: vec![anchor],
        };
        if search.extend(1 << anchor) {
            let w = CycleWitness::new(search.path.iter().map(|&v| Vertex::from_ordinal(v, n)).collect());
            debug_assert!(validate_cycle(g, &w, len));
            return Some(w);
        }
    }
    None
}

pub fn has_cycle_of_length(g: &BalancedBipartiteGraph, len: usize) -> bool {
    find_cycle_of_length(g, len).is_some()
}

struct CycleSearch<'a> {
    nbr: &'a [u64],
    anchor: usize,
    usable: u64,
    len: usize,
    path: Vec<usize>,
}

impl CycleSearch<'_> {
    fn extend(&mut self, visited: u64) -> bool {
        let end = *self.path.last().expect("non-empty path");
        let depth = self.path.len();
        if depth == self.len {
            return self.nbr[end] >> self.anchor & 1 == 1;
        }
        let free = self.usable & !visited;
        let mut candidates = self.nbr[end] & free;
        while candidates != 0 {
            let v = candidates.trailing_zeros() as usize;
            candidates &= candidates - 1;
            let steps_left = self.len - depth; // edges still to walk after reaching v, incl. closing edge
            if self.distance_home(v, free & !(1 << v), steps_left) {
                self.path.push(v);
                if self.extend(visited | 1 << v) {
                    return true;
                }
                self.path.pop();
            }
        }
        false
    }

    /// Can `from` get back to the anchor in at most `budget` steps through `free`?
    fn distance_home(&self, from: usize, free: u64, budget: usize) -> bool {
        let home = 1u64 << self.anchor;
        let mut reached = 1u64 << from;
        let mut frontier = reached;
        for _ in 0..budget {
            let mut next = 0u64;
            let mut f = frontier;
            while f != 0 {
                let v = f.trailing_zeros() as usize;
                f &= f - 1;
                next |= self.nbr[v];
            }
            if next & home != 0 {
                return true;
            }
            frontier = next & free & !reached;
            if frontier == 0 {
                return false;
            }
            reached |= frontier;
        }
        false
    }
}

/// Set of even cycle lengths in `4..=2n` present in a graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PancyclicityReport {
    pub lengths_present: BTreeSet<usize>,
    pub is_bipancyclic: bool,
}

/// Tests every even length `4, 6, .., 2n` independently.
pub fn is_bipancyclic(g: &BalancedBipartiteGraph) -> PancyclicityReport {
    let lengths_present: BTreeSet<usize> = (4..=2 * g.n())
        .step_by(2)
        .filter(|&len| has_cycle_of_length(g, len))
        .collect();
    let is_bipancyclic = lengths_present.len() == (4..=2 * g.n()).step_by(2).count();
    PancyclicityReport {
        lengths_present,
        is_bipancyclic,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum NotApplicableReason {
    NotHamiltonian,
    SizeTooSmall,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SizePrediction {
    PredictBipancyclic,
    NotApplicable(NotApplicableReason),
}

/// The size criterion: a hamiltonian balanced bipartite graph with more than
/// `n^2/2` edges is bipancyclic.
pub fn es_predict(g: &BalancedBipartiteGraph) -> SizePrediction {
    let n = g.n();
    if !has_cycle_of_length(g, 2 * n) {
        return SizePrediction::NotApplicable(NotApplicableReason::NotHamiltonian);
    }
    if 2 * g.size() > n * n {
        SizePrediction::PredictBipancyclic
    } else {
        SizePrediction::NotApplicable(NotApplicableReason::SizeTooSmall)
    }
}

/// `true`, `false`, or `"not_applicable"` in JSON.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Confirmation {
    Evaluated(bool),
    NotApplicable,
}

impl Serialize for Confirmation {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            Confirmation::Evaluated(b) => serializer.serialize_bool(*b),
            Confirmation::NotApplicable => serializer.serialize_str("not_applicable"),
        }
    }
}

/// Result of looking for a `(2n-2)`-cycle that omits an adjacent pair.
///
/// `bipancyclic_confirmed` stays `NotApplicable` until
/// [`check_second_assertion`] evaluates it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SecondAssertionReport {
    pub pair: Option<(Vertex, Vertex)>,
    pub witness: Option<CycleWitness>,
    pub subgraph_size: Option<usize>,
    pub bipancyclic_confirmed: Confirmation,
}

/// Scans edges `x' y'` in `(x, y)` order and returns the first whose removal
/// leaves a hamiltonian graph on the other `2n - 2` vertices.
pub fn find_near_hamilton_omitting_adjacent_pair(
    g: &BalancedBipartiteGraph,
) -> Result<SecondAssertionReport, ExtractError> {
    validate_class_member(g)?;
    let n = g.n();
    for (i, j) in g.edges() {
        let (xv, yv) = (Vertex::X(i), Vertex::Y(j));
        let allowed = full_mask(2 * n) & !(1 << xv.ordinal(n)) & !(1 << yv.ordinal(n));
        if let Some(witness) = hamilton_witness_within(g, allowed) {
            let subgraph_size = g
                .edges()
                .into_iter()
                .filter(|&(a, b)| a != i && b != j)
                .count();
            return Ok(SecondAssertionReport {
                pair: Some((xv, yv)),
                witness: Some(witness),
                subgraph_size: Some(subgraph_size),
                bipancyclic_confirmed: Confirmation::NotApplicable,
            });
        }
    }
    Ok(SecondAssertionReport {
        pair: None,
        witness: None,
        subgraph_size: None,
        bipancyclic_confirmed: Confirmation::NotApplicable,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SecondAssertionOutcome {
    BipancyclicConfirmed,
    Inconclusive,
    Refuted,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SecondAssertionCheck {
    pub outcome: SecondAssertionOutcome,
    #[serde(flatten)]
    pub report: SecondAssertionReport,
    pub pancyclicity: Option<PancyclicityReport>,
}

/// If some `(2n-2)`-cycle omits an adjacent pair, the graph must be bipancyclic.
pub fn check_second_assertion(g: &BalancedBipartiteGraph) -> Result<SecondAssertionCheck, ExtractError> {
    let mut report = find_near_hamilton_omitting_adjacent_pair(g)?;
    if report.pair.is_none() {
        return Ok(SecondAssertionCheck {
            outcome: SecondAssertionOutcome::Inconclusive,
            report,
            pancyclicity: None,
        });
    }
    let pan = is_bipancyclic(g);
    report.bipancyclic_confirmed = Confirmation::Evaluated(pan.is_bipancyclic);
    let outcome = if pan.is_bipancyclic {
        SecondAssertionOutcome::BipancyclicConfirmed
    } else {
        SecondAssertionOutcome::Refuted
    };
    Ok(SecondAssertionCheck {
        outcome,
        report,
        pancyclicity: Some(pan),
    })
}
