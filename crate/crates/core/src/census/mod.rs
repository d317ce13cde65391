//! Whole-class generation: every labeled hamiltonian `n/2`-regular graph
//! with a fixed Hamilton cycle, the constrained sign-matrix sweep, random
//! members, and the exhaustive verification driver built on them.

mod count;
mod enumerate;
mod matrix;
mod random;
mod verify;

use thiserror::Error;

pub use count::{chord_allowed_matrix, count_chord_completions, independent_class_count, permanent};
pub use enumerate::{enumerate_class, enumerate_class_uncapped, ClassEnumeration};
pub use matrix::{
    constrained_matrix_census, constrained_matrix_census_uncapped, MatrixCandidate, MatrixCensusResult,
    PivotOutcome,
};
pub use random::{augmented_member, random_member};
pub use verify::{
    check_member, verify_theorem, verify_theorem_with, Failure, MemberOutcome, MethodHistogram,
    SecondAssertionTally, VerificationSummary, VerifyOptions,
};

/// Largest `n` enumerated exhaustively unless the cap is explicitly lifted.
pub const CLASS_CAP: usize = 8;
/// Largest `n` for the first-row sign sweep unless the cap is explicitly lifted.
pub const MATRIX_CAP: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CensusError {
    #[error("unsupported n = {n}: {reason}")]
    UnsupportedN { n: usize, reason: String },
}

pub(crate) fn check_n(n: usize, cap: Option<usize>) -> Result<(), CensusError> {
    let fail = |reason: &str| {
        Err(CensusError::UnsupportedN {
            n,
            reason: reason.to_string(),
        })
    };
    if n % 2 != 0 {
        return fail("n/2-regularity needs even n");
    }
    if n < 6 {
        return fail("the class starts at order 2n > 8");
    }
    if n > crate::graph::MAX_N {
        return fail("exceeds the largest representable class size");
    }
    match cap {
        Some(cap) if n > cap => fail(&format!("above the documented cap of {cap}")),
        _ => Ok(()),
    }
}

/// Number of chords per row: each vertex has two Hamilton edges and `n/2` edges in total.
pub(crate) fn chords_per_row(n: usize) -> usize {
    n / 2 - 2
}

/// Columns (0-based bit mask) row `i` (0-based) may use for chords: every
/// column except the Hamilton positions `y_{i+1}` and `y_i`.
pub(crate) fn allowed_columns(n: usize, i: usize) -> u64 {
    let all = crate::hamilton::full_mask(n);
    all & !(1 << i) & !(1 << ((i + n - 1) % n))
}

/// Row masks of the canonical Hamilton cycle `x_i ~ y_i, y_{i-1}`.
pub(crate) fn hamilton_rows(n: usize) -> Vec<u64> {
    (0..n).map(|i| !allowed_columns(n, i) & crate::hamilton::full_mask(n)).collect()
}
