//! Exhaustive verification over [`super::enumerate_class`].

use rayon::prelude::*;
use serde::Serialize;

use crate::extract::{extract, Method};
use crate::graph::BalancedBipartiteGraph;
use crate::oracle::{check_second_assertion, has_cycle_of_length, SecondAssertionOutcome};
use crate::witness::validate_cycle;

use super::{check_n, independent_class_count, CensusError, ClassEnumeration, CLASS_CAP};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyOptions {
    /// Worker threads; `1` runs inline.
    pub jobs: usize,
    /// Lifts [`CLASS_CAP`].
    pub allow_large: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self {
            jobs: 1,
            allow_large: false,
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct MethodHistogram {
    pub condition1a: u64,
    pub condition1b: u64,
    pub condition2: u64,
    pub structural: u64,
}

impl MethodHistogram {
    fn bump(&mut self, m: Method) {
        match m {
            Method::Condition1a => self.condition1a += 1,
            Method::Condition1b => self.condition1b += 1,
            Method::Condition2 => self.condition2 += 1,
            Method::Structural => self.structural += 1,
        }
    }

    fn merge(&mut self, o: &Self) {
        self.condition1a += o.condition1a;
        self.condition1b += o.condition1b;
        self.condition2 += o.condition2;
        self.structural += o.structural;
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct SecondAssertionTally {
    pub bipancyclic_confirmed: u64,
    pub inconclusive: u64,
    pub refuted: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Failure {
    /// 1-based position in the enumeration stream.
    pub member: u64,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationSummary {
    pub n: usize,
    pub members: u64,
    pub independent_count: u64,
    pub count_agrees: bool,
    pub methods: MethodHistogram,
    pub oracle_agreements: u64,
    pub second_assertion: SecondAssertionTally,
    pub failures: Vec<Failure>,
}

impl VerificationSummary {
    pub fn is_clean(&self) -> bool {
        self.count_agrees && self.failures.is_empty()
    }
}

/// Everything [`verify_theorem`] learns about one member.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MemberOutcome {
    pub method: Option<Method>,
    pub oracle_agrees: bool,
    pub second_assertion: Option<SecondAssertionOutcome>,
    pub problems: Vec<String>,
}

/// Runs extraction, the brute-force cross-check and the second-assertion
/// check on one class member.
pub fn check_member(g: &BalancedBipartiteGraph) -> MemberOutcome {
    let n = g.n();
    let mut problems = Vec::new();
    let method = match extract(g) {
        Ok(r) => {
            if !validate_cycle(g, &r.witness, 2 * n - 2) {
                problems.push(format!("{} witness does not validate", r.method.name()));
            }
            if r.method == Method::Structural && n % 4 != 0 {
                problems.push("structural branch used with n not divisible by 4".into());
            }
            let must_be_adjacent = r.method != Method::Structural && r.method != Method::Condition2;
            if must_be_adjacent && !r.omitted_adjacent {
                problems.push(format!("{} omitted a non-adjacent pair", r.method.name()));
            }
            if r.method == Method::Structural && r.omitted_adjacent {
                problems.push("structural omitted an adjacent pair".into());
            }
            Some(r.method)
        }
        Err(e) => {
            problems.push(format!("extract: {e}"));
            None
        }
    };
    let oracle_agrees = has_cycle_of_length(g, 2 * n - 2) == method.is_some();
    if !oracle_agrees {
        problems.push("brute-force search disagrees with extraction".into());
    }
    let second_assertion = match check_second_assertion(g) {
        Ok(c) => {
            match c.outcome {
                SecondAssertionOutcome::Refuted => problems.push("second assertion refuted".into()),
                SecondAssertionOutcome::BipancyclicConfirmed => {
                    let complete = c.pancyclicity.as_ref().is_some_and(|p| {
                        (4..=2 * n).step_by(2).all(|len| p.lengths_present.contains(&len))
                    });
                    if !complete {
                        problems.push("confirmation lacks some cycle length".into());
                    }
                    if c.report.subgraph_size != Some(n * n / 2 - n + 1) {
                        problems.push("subgraph size differs from n^2/2 - n + 1".into());
                    }
                }
                SecondAssertionOutcome::Inconclusive => {}
            }
            Some(c.outcome)
        }
        Err(e) => {
            problems.push(format!("second assertion: {e}"));
            None
        }
    };
    MemberOutcome {
        method,
        oracle_agrees,
        second_assertion,
        problems,
    }
}

#[derive(Default)]
struct Partial {
    members: u64,
    methods: MethodHistogram,
    oracle_agreements: u64,
    tally: SecondAssertionTally,
    failures: Vec<Failure>,
}

impl Partial {
    fn run(members: impl Iterator<Item = BalancedBipartiteGraph>) -> Self {
        let mut p = Partial::default();
        for g in members {
            p.members += 1;
            let o = check_member(&g);
            if let Some(m) = o.method {
                p.methods.bump(m);
            }
            p.oracle_agreements += u64::from(o.oracle_agrees);
            match o.second_assertion {
                Some(SecondAssertionOutcome::BipancyclicConfirmed) => p.tally.bipancyclic_confirmed += 1,
                Some(SecondAssertionOutcome::Inconclusive) => p.tally.inconclusive += 1,
                Some(SecondAssertionOutcome::Refuted) => p.tally.refuted += 1,
                None => {}
            }
            if !o.problems.is_empty() {
                p.failures.push(Failure {
                    member: p.members,
                    reason: o.problems.join("; "),
                });
            }
        }
        p
    }
}

/// Verifies every member of the class for `n` in `{6, 8}`.
pub fn verify_theorem(n: usize) -> Result<VerificationSummary, CensusError> {
    verify_theorem_with(n, VerifyOptions::default())
}

/// With `jobs > 1` the stream is split by the first chord row; partial
/// results are merged in stream order, so the summary does not depend on `jobs`.
pub fn verify_theorem_with(n: usize, opts: VerifyOptions) -> Result<VerificationSummary, CensusError> {
    check_n(n, (!opts.allow_large).then_some(CLASS_CAP))?;
    let stream = super::enumerate_class_uncapped(n)?;
    let partials: Vec<Partial> = if opts.jobs <= 1 {
        vec![Partial::run(stream)]
    } else {
        let parts: Vec<ClassEnumeration> = stream.partitions(1);
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(opts.jobs)
            .build()
            .expect("thread pool");
        pool.install(|| parts.into_par_iter().map(Partial::run).collect())
    };

    let mut members = 0;
    let mut methods = MethodHistogram::default();
    let mut oracle_agreements = 0;
    let mut tally = SecondAssertionTally::default();
    let mut failures = Vec::new();
    for p in partials {
        failures.extend(p.failures.into_iter().map(|f| Failure {
            member: members + f.member,
            ..f
        }));
        members += p.members;
        methods.merge(&p.methods);
        oracle_agreements += p.oracle_agreements;
        tally.bipancyclic_confirmed += p.tally.bipancyclic_confirmed;
        tally.inconclusive += p.tally.inconclusive;
        tally.refuted += p.tally.refuted;
    }
    let independent_count = independent_class_count(n)? as u64;
    Ok(VerificationSummary {
        n,
        members,
        independent_count,
        count_agrees: members == independent_count,
        methods,
        oracle_agreements,
        second_assertion: tally,
        failures,
    })
}
