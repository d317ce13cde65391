//! Long cycles in hamiltonian `n/2`-regular balanced bipartite graphs.
//!
//! Every hamiltonian `n/2`-regular bipartite graph of order `2n > 8` has a
//! cycle of length `2n - 2`. This crate turns that fact into an algorithm
//! that returns an explicit, machine-checked cycle ([`extract`]), and
//! provides the tooling to verify it over whole classes of graphs:
//!
//! * [`graph`]: the graph type, 1-based vertices and the edge-list format;
//! * [`hamilton`]: Hamilton cycle search and relabeling along a cycle;
//! * [`signed`]: the ±1 adjacency matrix and its band structure;
//! * [`witness`]: cycles as certificates;
//! * [`extract`](mod@extract): the three extraction branches;
//! * [`oracle`]: brute-force cycle search and bipancyclicity checks;
//! * [`census`]: exhaustive and random generation, and the verification driver;
//! * [`cli`]: the command-line front end.
//!
//! ```
//! use bipancyclic::{extract, fixtures, validate_cycle, Method};
//!
//! let g = fixtures::g6();
//! let report = extract(&g).unwrap();
//! assert_eq!(report.method, Method::Condition2);
//! assert!(validate_cycle(&g, &report.witness, 10));
//! ```

pub mod census;
pub mod cli;
pub mod extract;
pub mod fixtures;
pub mod graph;
pub mod hamilton;
pub mod oracle;
pub mod signed;
pub mod witness;

pub use extract::{
    check_structural_constraints, extract, extract_by_condition1, extract_by_condition2, extract_structural,
    structural_pivot, validate_class_member, ExtractError, ExtractionReport, Law, Method, StructuralCheck,
};
pub use graph::{wrap, BalancedBipartiteGraph, GraphError, Side, Vertex, MAX_N};
pub use hamilton::{find_hamilton_cycle, relabel_along_hamilton, HamiltonLabeling, LabelingError};
pub use oracle::{
    check_second_assertion, es_predict, find_cycle_of_length, find_near_hamilton_omitting_adjacent_pair,
    has_cycle_of_length, is_bipancyclic, Confirmation, NotApplicableReason, PancyclicityReport,
    SecondAssertionCheck, SecondAssertionOutcome, SecondAssertionReport, SizePrediction,
};
pub use signed::{signed_matrix, SignedAdjacencyMatrix, SignedError};
pub use witness::{validate_cycle, CycleWitness};
