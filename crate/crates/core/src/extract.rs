//! Extraction of a cycle of length `2n - 2` from a hamiltonian `n/2`-regular
//! balanced bipartite graph.
//!
//! With the Hamilton cycle normalized to `x_1 y_1 ... x_n y_n x_1`, a long
//! cycle comes from one of three places, tried in this order:
//!
//! 1. a chord `x_i y_{i-2}` or `x_i y_{i+1}`, which shortcuts two Hamilton
//!    vertices ([`extract_by_condition1`]);
//! 2. a pair of parallel chords `x_i y_j`, `x_{i+1} y_{j+1}` with
//!    `j - i mod n` in `2..=n-3` ([`extract_by_condition2`]);
//! 3. otherwise the signed adjacency matrix is rigid enough that a pivot
//!    `(i0, k)` with `a^{i0}_{i0+k} = a^{i0+k}_{i0} = +1` must exist
//!    ([`extract_structural`]).
//!
//! Every witness is checked with [`validate_cycle`] before it is returned.

use serde::Serialize;
use thiserror::Error;

use crate::graph::{wrap, BalancedBipartiteGraph, Vertex};
use crate::hamilton::{find_hamilton_cycle, relabel_along_hamilton, HamiltonLabeling};
use crate::signed::{unchecked_signed_matrix, SignedAdjacencyMatrix};
use crate::witness::{validate_cycle, CycleWitness};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExtractError {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("graph is not n/2-regular")]
    NotRegular,
    #[error("structural precondition failed: {0}")]
    PreconditionFailed(String),
    #[error("graph is not an n/2-regular balanced bipartite graph")]
    NotBalancedRegular,
    #[error("not hamiltonian")]
    NotHamiltonian,
    #[error("order 2n = {} is at most 8", 2 * .0)]
    TooSmall(usize),
    #[error("theorem violation: {0}")]
    TheoremViolation(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Condition1a,
    Condition1b,
    Condition2,
    Structural,
}

impl Method {
    pub const ALL: [Method; 4] = [
        Method::Condition1a,
        Method::Condition1b,
        Method::Condition2,
        Method::Structural,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Method::Condition1a => "condition1a",
            Method::Condition1b => "condition1b",
            Method::Condition2 => "condition2",
            Method::Structural => "structural",
        }
    }
}

/// A certified cycle of length `2n - 2` and how it was found.
///
/// `indices` are `[i]` for the condition-1 branches, `[i, j]` for
/// condition 2 and `[i0, k, l]` for the structural branch (`l = (n-4)/4`).
/// They refer to the Hamilton-normalized labeling stored in `labeling`;
/// `cycle` and `omitted` use the labels of the input graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExtractionReport {
    pub n: usize,
    pub method: Method,
    pub indices: Vec<usize>,
    #[serde(rename = "cycle")]
    pub witness: CycleWitness,
    pub omitted: (Vertex, Vertex),
    pub omitted_adjacent: bool,
    #[serde(skip)]
    pub labeling: HamiltonLabeling,
}

impl ExtractionReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

fn require_canonical_even(g: &BalancedBipartiteGraph) -> Result<(), ExtractError> {
    let n = g.n();
    if n < 6 || n % 2 != 0 {
        return Err(ExtractError::InvalidInput(format!("n = {n} must be even and at least 6")));
    }
    if !g.is_canonically_labeled() {
        return Err(ExtractError::InvalidInput(
            "graph is not canonically labeled along a Hamilton cycle".into(),
        ));
    }
    Ok(())
}

/// Packages a witness found in a canonically labeled graph, certifying it first.
fn certified(
    g: &BalancedBipartiteGraph,
    method: Method,
    indices: Vec<usize>,
    witness: CycleWitness,
) -> Result<ExtractionReport, ExtractError> {
    let n = g.n();
    if !validate_cycle(g, &witness, 2 * n - 2) {
        return Err(ExtractError::TheoremViolation(format!(
            "{} witness {witness} failed validation",
            method.name()
        )));
    }
    let omitted = match witness.omitted(n)[..] {
        [x @ Vertex::X(_), y @ Vertex::Y(_)] => (x, y),
        _ => unreachable!("a validated alternating cycle of length 2n-2 omits one vertex per side"),
    };
    Ok(ExtractionReport {
        n,
        method,
        indices,
        witness,
        omitted,
        omitted_adjacent: g.adjacent(omitted.0, omitted.1),
        labeling: HamiltonLabeling::identity(n),
    })
}

fn x(i: i64, n: usize) -> Vertex {
    Vertex::X(wrap(i, n))
}

fn y(j: i64, n: usize) -> Vertex {
    Vertex::Y(wrap(j, n))
}

/// Looks for a chord `x_i y_{i-2}` (1a) or `x_i y_{i+1}` (1b), lowest `i`
/// first and 1a before 1b.
///
/// 1a gives `x_i y_i x_{i+1} ... x_{i-2} y_{i-2}` omitting `{x_{i-1}, y_{i-1}}`;
/// 1b gives `x_i y_{i+1} x_{i+2} ... x_{i-1} y_{i-1}` omitting `{x_{i+1}, y_i}`.
pub fn extract_by_condition1(g: &BalancedBipartiteGraph) -> Result<Option<ExtractionReport>, ExtractError> {
    require_canonical_even(g)?;
    let n = g.n();
    let nn = n as i64;
    for i in 1..=nn {
        if g.has_edge_mod(i, i - 2) {
            let mut w = Vec::with_capacity(2 * n - 2);
            for t in 0..=nn - 2 {
                w.push(x(i + t, n));
                w.push(y(i + t, n));
            }
            return certified(g, Method::Condition1a, vec![i as usize], CycleWitness::new(w)).map(Some);
        }
        if g.has_edge_mod(i, i + 1) {
            let mut w = Vec::with_capacity(2 * n - 2);
            w.push(x(i, n));
            w.push(y(i + 1, n));
            for t in 2..=nn - 1 {
                w.push(x(i + t, n));
                w.push(y(i + t, n));
            }
            return certified(g, Method::Condition1b, vec![i as usize], CycleWitness::new(w)).map(Some);
        }
    }
    Ok(None)
}

/// Looks for chords `x_i y_j` and `x_{i+1} y_{j+1}` with `j - i mod n` in
/// `2..=n-3`, lowest `i` then lowest offset first.
///
/// The cycle runs `x_i y_j`, back along the Hamilton cycle to `x_{i+1}`,
/// across to `y_{j+1}`, then forward to `x_i`; it omits `{x_{j+1}, y_i}`.
pub fn extract_by_condition2(g: &BalancedBipartiteGraph) -> Result<Option<ExtractionReport>, ExtractError> {
    require_canonical_even(g)?;
    let n = g.n();
    let nn = n as i64;
    for i in 1..=nn {
        for d in 2..=nn - 3 {
            let j = i + d;
            if !(g.has_edge_mod(i, j) && g.has_edge_mod(i + 1, j + 1)) {
                continue;
            }
            let mut w = Vec::with_capacity(2 * n - 2);
            w.push(x(i, n));
            for m in (i + 1..=j).rev() {
                w.push(y(m, n));
                w.push(x(m, n));
            }
            w.push(y(j + 1, n));
            for m in j + 2..=i + nn - 1 {
                w.push(x(m, n));
                w.push(y(m, n));
            }
            let indices = vec![i as usize, wrap(j, n)];
            return certified(g, Method::Condition2, indices, CycleWitness::new(w)).map(Some);
        }
    }
    Ok(None)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Law {
    Holds,
    ViolatedAt { i: usize, j: usize },
}

impl Law {
    pub fn holds(self) -> bool {
        self == Law::Holds
    }
}

/// Which of the signed-matrix laws hold for a canonically labeled regular graph.
///
/// * `law3`: `a^i_{i-1} = a^i_i = +1` and `a^i_{i-2} = a^i_{i+1} = -1`;
/// * `law4`: on the band, `a^i_j = +1` implies `a^{i+1}_{j+1} = -1`;
/// * `law5`: on the band, `a^i_j = -1` implies `a^{i+1}_{j+1} = +1`;
/// * `identity6_fails_at`: first row `i0` whose even-offset band sum
///   (offsets `2, 4, .., n-4`) or odd-offset band sum (`3, 5, .., n-3`) is
///   non-zero;
/// * `l = (n-4)/4` when `n ≡ 0 (mod 4)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StructuralCheck {
    pub n: usize,
    pub law3: Law,
    pub law4: Law,
    pub law5: Law,
    pub line_sums_zero: bool,
    pub identity6_fails_at: Option<usize>,
    pub l: Option<usize>,
}

impl StructuralCheck {
    pub fn identity6_holds(&self) -> bool {
        self.identity6_fails_at.is_none()
    }

    pub fn passes_fully(&self) -> bool {
        self.law3.holds()
            && self.law4.holds()
            && self.law5.holds()
            && self.line_sums_zero
            && self.identity6_holds()
            && self.l.is_some()
    }

    fn first_failure(&self) -> String {
        let laws = [("law (3)", self.law3), ("law (4)", self.law4), ("law (5)", self.law5)];
        for (name, law) in laws {
            if let Law::ViolatedAt { i, j } = law {
                return format!("{name} fails at (i={i}, j={j})");
            }
        }
        if !self.line_sums_zero {
            return "line sums are not all zero".into();
        }
        if let Some(i0) = self.identity6_fails_at {
            return format!("band parity sums are non-zero in row {i0}");
        }
        format!("n = {} is not divisible by 4", self.n)
    }
}

pub fn check_structural_constraints(g: &BalancedBipartiteGraph) -> Result<StructuralCheck, ExtractError> {
    if !g.is_half_regular() || g.n() < 6 {
        return Err(ExtractError::NotRegular);
    }
    Ok(structural_check_of(&unchecked_signed_matrix(g)))
}

pub(crate) fn structural_check_of(m: &SignedAdjacencyMatrix) -> StructuralCheck {
    let n = m.n();
    let nn = n as i64;
    let at = |i: i64, d: i64| m.at_offset(i, d);
    let violation = |i: i64, d: i64| Law::ViolatedAt {
        i: i as usize,
        j: wrap(i + d, n),
    };

    let mut law3 = Law::Holds;
    'rows: for i in 1..=nn {
        for (d, want) in [(nn - 1, 1), (0, 1), (nn - 2, -1), (1, -1)] {
            if at(i, d) != want {
                law3 = violation(i, d);
                break 'rows;
            }
        }
    }

    let band_law = |from: i8| {
        for i in 1..=nn {
            for d in 2..=nn - 3 {
                if at(i, d) == from && at(i + 1, d) == from {
                    return violation(i, d);
                }
            }
        }
        Law::Holds
    };
    let law4 = band_law(1);
    let law5 = band_law(-1);

    let identity6_fails_at = (1..=nn)
        .find(|&i0| {
            let even: i64 = (2..=nn - 4).step_by(2).map(|d| at(i0, d) as i64).sum();
            let odd: i64 = (3..=nn - 3).step_by(2).map(|d| at(i0, d) as i64).sum();
            even != 0 || odd != 0
        })
        .map(|i0| i0 as usize);

    StructuralCheck {
        n,
        law3,
        law4,
        law5,
        line_sums_zero: m.line_sums_zero(),
        identity6_fails_at,
        l: (n % 4 == 0 && n >= 8).then(|| (n - 4) / 4),
    }
}

/// The pivot `(i0, k)` of the structural construction.
///
/// `i0` is 1 when `a^1_3 = -1` and 2 otherwise; `k` is the smallest value in
/// `3..=n-3` with `a^{i0}_{i0+k} = a^{i0+k}_{i0} = +1`. Returns `None` when
/// `a^{i0}_{i0+2} = -1`, `a^{i0-1}_{i0+1} = +1` cannot both be confirmed or
/// no `k` exists.
pub fn structural_pivot(m: &SignedAdjacencyMatrix) -> Option<(usize, usize)> {
    let nn = m.n() as i64;
    let i0: i64 = if m.get(1, 3) == -1 { 1 } else { 2 };
    if m.get(i0, i0 + 2) != -1 || m.get(i0 - 1, i0 + 1) != 1 {
        return None;
    }
    (3..=nn - 3)
        .find(|&k| m.get(i0, i0 + k) == 1 && m.get(i0 + k, i0) == 1)
        .map(|k| (i0 as usize, k as usize))
}

/// Structural branch: requires every law of [`check_structural_constraints`].
///
/// Returns `x_{i0-1} y_{i0+1} x_{i0+2} ... y_{i0+k-1} x_{i0+k} y_{i0} x_{i0}
/// y_{i0+k} x_{i0+k+1} ... y_{i0-2}`, omitting `{x_{i0+1}, y_{i0-1}}`.
pub fn extract_structural(g: &BalancedBipartiteGraph) -> Result<ExtractionReport, ExtractError> {
    let n = g.n();
    let check = check_structural_constraints(g)
        .map_err(|e| ExtractError::PreconditionFailed(e.to_string()))?;
    if !check.passes_fully() {
        return Err(ExtractError::PreconditionFailed(check.first_failure()));
    }
    let m = unchecked_signed_matrix(g);
    let (i0, k) = structural_pivot(&m).ok_or_else(|| {
        ExtractError::TheoremViolation("no structural pivot (i0, k) exists".into())
    })?;
    let (i0, k) = (i0 as i64, k as i64);
    let nn = n as i64;
    let mut w = Vec::with_capacity(2 * n - 2);
    w.push(x(i0 - 1, n));
    w.push(y(i0 + 1, n));
    for t in i0 + 2..=i0 + k - 1 {
        w.push(x(t, n));
        w.push(y(t, n));
    }
    w.push(x(i0 + k, n));
    w.push(y(i0, n));
    w.push(x(i0, n));
    w.push(y(i0 + k, n));
    for t in i0 + k + 1..=i0 + nn - 2 {
        w.push(x(t, n));
        w.push(y(t, n));
    }
    let l = check.l.expect("checked above");
    certified(g, Method::Structural, vec![i0 as usize, k as usize, l], CycleWitness::new(w))
}

/// Checks that `g` is a hamiltonian `n/2`-regular balanced bipartite graph
/// of order `2n > 8` and returns one of its Hamilton labelings.
pub fn validate_class_member(g: &BalancedBipartiteGraph) -> Result<HamiltonLabeling, ExtractError> {
    let n = g.n();
    if 2 * n <= 8 {
        return Err(ExtractError::TooSmall(n));
    }
    if !g.is_half_regular() {
        return Err(ExtractError::NotBalancedRegular);
    }
    find_hamilton_cycle(g).ok_or(ExtractError::NotHamiltonian)
}

/// Finds a certified cycle of length `2n - 2` in a class member.
pub fn extract(g: &BalancedBipartiteGraph) -> Result<ExtractionReport, ExtractError> {
    let labeling = validate_class_member(g)?;
    let canon = relabel_along_hamilton(g, &labeling)
        .map_err(|e| ExtractError::TheoremViolation(e.to_string()))?;
    let report = match extract_by_condition1(&canon)? {
        Some(r) => r,
        None => match extract_by_condition2(&canon)? {
            Some(r) => r,
            None => extract_structural(&canon).map_err(|e| match e {
                ExtractError::PreconditionFailed(why) => ExtractError::TheoremViolation(format!(
                    "no shortcut chords, yet the structural laws fail: {why}"
                )),
                other => other,
            })?,
        },
    };
    let witness = report.witness.map(|v| labeling.to_original(v));
    let omitted = (
        labeling.to_original(report.omitted.0),
        labeling.to_original(report.omitted.1),
    );
    if !validate_cycle(g, &witness, 2 * g.n() - 2) {
        return Err(ExtractError::TheoremViolation(
            "witness failed validation after relabeling".into(),
        ));
    }
    Ok(ExtractionReport {
        witness,
        omitted,
        omitted_adjacent: g.adjacent(omitted.0, omitted.1),
        labeling,
        ..report
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use Vertex::{X, Y};

    fn cycle(spec: &str) -> Vec<Vertex> {
        spec.split_whitespace()
            .map(|t| {
                let i = t[1..].parse().unwrap();
                if t.starts_with('x') {
                    X(i)
                } else {
                    Y(i)
                }
            })
            .collect()
    }

    #[test]
    fn g8m_fires_condition1b_at_one() {
        let r = extract_by_condition1(&fixtures::g8m()).unwrap().unwrap();
        assert_eq!(r.method, Method::Condition1b);
        assert_eq!(r.indices, vec![1]);
        assert_eq!(r.witness.len(), 14);
        assert_eq!(r.omitted, (X(2), Y(1)));
        assert!(r.omitted_adjacent);
    }

    #[test]
    fn g6b_fires_condition1b_at_one() {
        let r = extract_by_condition1(&fixtures::g6b()).unwrap().unwrap();
        assert_eq!(r.method, Method::Condition1b);
        assert_eq!(r.witness.len(), 10);
        assert_eq!(r.omitted, (X(2), Y(1)));
    }

    #[test]
    fn condition1a_cycle_shape() {
        // C6-like canonical cycle with one extra chord x3 y1 (offset -2), n = 6
        let mut g = BalancedBipartiteGraph::circulant(6, &[0, -1]).unwrap();
        g.add_edge(3, 1).unwrap();
        let r = extract_by_condition1(&g).unwrap().unwrap();
        assert_eq!(r.method, Method::Condition1a);
        assert_eq!(r.indices, vec![3]);
        assert_eq!(r.witness.vertices(), cycle("x3 y3 x4 y4 x5 y5 x6 y6 x1 y1").as_slice());
        assert_eq!(r.omitted, (X(2), Y(2)));
        assert!(r.omitted_adjacent);
    }

    #[test]
    fn g6_has_no_condition1_violation() {
        assert_eq!(extract_by_condition1(&fixtures::g6()).unwrap(), None);
    }

    #[test]
    fn g6_fires_condition2_at_one_four() {
        let r = extract_by_condition2(&fixtures::g6()).unwrap().unwrap();
        assert_eq!(r.method, Method::Condition2);
        assert_eq!(r.indices, vec![1, 4]);
        assert_eq!(r.witness.vertices(), cycle("x1 y4 x4 y3 x3 y2 x2 y5 x6 y6").as_slice());
        assert_eq!(r.omitted, (X(5), Y(1)));
        assert!(!r.omitted_adjacent);
    }

    #[test]
    fn g6b_and_g8s_have_no_condition2_violation() {
        assert_eq!(extract_by_condition2(&fixtures::g6b()).unwrap(), None);
        assert_eq!(extract_by_condition2(&fixtures::g8s()).unwrap(), None);
        assert_eq!(extract_by_condition1(&fixtures::g8s()).unwrap(), None);
    }

    #[test]
    fn condition_scans_reject_bad_input() {
        let odd = BalancedBipartiteGraph::circulant(7, &[0, -1, 2]).unwrap();
        assert!(matches!(extract_by_condition1(&odd), Err(ExtractError::InvalidInput(_))));
        let small = BalancedBipartiteGraph::circulant(4, &[0, -1]).unwrap();
        assert!(matches!(extract_by_condition2(&small), Err(ExtractError::InvalidInput(_))));
        let not_canonical = BalancedBipartiteGraph::circulant(6, &[0, 2, 3]).unwrap();
        assert!(matches!(extract_by_condition1(&not_canonical), Err(ExtractError::InvalidInput(_))));
    }

    #[test]
    fn structural_check_on_fixtures() {
        let s = check_structural_constraints(&fixtures::g8s()).unwrap();
        assert!(s.passes_fully(), "{s:?}");
        assert_eq!(s.l, Some(1));

        let s = check_structural_constraints(&fixtures::g6()).unwrap();
        assert_eq!(s.law4, Law::ViolatedAt { i: 1, j: 4 });
        assert!(s.law3.holds());
        assert_eq!(s.l, None);

        let s = check_structural_constraints(&fixtures::g6b()).unwrap();
        assert_eq!(s.law3, Law::ViolatedAt { i: 1, j: 2 });

        assert_eq!(
            check_structural_constraints(&fixtures::ges()),
            Err(ExtractError::NotRegular)
        );
    }

    #[test]
    fn g8s_structural_witness() {
        let r = extract_structural(&fixtures::g8s()).unwrap();
        assert_eq!(r.indices, vec![2, 4, 1]);
        assert_eq!(
            r.witness.vertices(),
            cycle("x1 y3 x4 y4 x5 y5 x6 y2 x2 y6 x7 y7 x8 y8").as_slice()
        );
        assert_eq!(r.omitted, (X(3), Y(1)));
        assert!(!r.omitted_adjacent);
    }

    #[test]
    fn g8s_variant_pivots_at_one_three() {
        let r = extract_structural(&fixtures::g8s_variant()).unwrap();
        assert_eq!(&r.indices[..2], &[1, 3]);
        assert_eq!(r.omitted, (X(2), Y(8)));
    }

    #[test]
    fn structural_needs_n_divisible_by_four() {
        assert!(matches!(
            extract_structural(&fixtures::g6()),
            Err(ExtractError::PreconditionFailed(_))
        ));
    }

    #[test]
    fn extract_branch_selection() {
        assert_eq!(extract(&fixtures::g6()).unwrap().method, Method::Condition2);
        let r = extract(&fixtures::g8m()).unwrap();
        assert_eq!((r.method, r.indices.clone()), (Method::Condition1b, vec![1]));
        let r = extract(&fixtures::g8s()).unwrap();
        assert_eq!((r.method, &r.indices[..2]), (Method::Structural, &[2usize, 4][..]));
        assert_eq!(extract(&fixtures::gdis()), Err(ExtractError::NotHamiltonian));
        assert_eq!(extract(&fixtures::ges()), Err(ExtractError::NotBalancedRegular));
        assert_eq!(
            extract(&BalancedBipartiteGraph::circulant(4, &[0, -1]).unwrap()),
            Err(ExtractError::TooSmall(4))
        );
    }

    #[test]
    fn extract_maps_witness_back_to_input_labels() {
        // swap the labels of x1/x3 and y2/y5 in G6
        let g = fixtures::g6();
        let sx = |i: usize| match i { 1 => 3, 3 => 1, v => v };
        let sy = |j: usize| match j { 2 => 5, 5 => 2, v => v };
        let edges: Vec<_> = g.edges().into_iter().map(|(i, j)| (sx(i), sy(j))).collect();
        let h = BalancedBipartiteGraph::from_edge_list(6, &edges).unwrap();
        let r = extract(&h).unwrap();
        assert!(validate_cycle(&h, &r.witness, 10));
        assert!(r.labeling.check(&h).is_ok());
        assert!(!r.witness.contains(r.omitted.0) && !r.witness.contains(r.omitted.1));
    }

    #[test]
    fn json_shape() {
        let r = extract(&fixtures::g6()).unwrap();
        assert_eq!(
            r.to_json(),
            r#"{"n":6,"method":"condition2","indices":[1,4],"cycle":[["x",1],["y",4],["x",4],["y",3],["x",3],["y",2],["x",2],["y",5],["x",6],["y",6]],"omitted":[["x",5],["y",1]],"omitted_adjacent":false}"#
        );
    }
}
