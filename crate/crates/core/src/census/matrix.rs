//! Sweep over all first-row sign vectors of the rigid band structure.

use serde::{Serialize, Serializer};

use crate::extract::{structural_check_of, structural_pivot};
use crate::signed::SignedAdjacencyMatrix;

use super::{check_n, CensusError, MATRIX_CAP};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PivotOutcome {
    Found { i0: usize, k: usize },
    Failure,
}

impl Serialize for PivotOutcome {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match *self {
            PivotOutcome::Found { i0, k } => (i0, k).serialize(serializer),
            PivotOutcome::Failure => serializer.serialize_str("failure"),
        }
    }
}

impl Serialize for SignedAdjacencyMatrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let n = self.n() as i64;
        let rows: Vec<Vec<i8>> = (1..=n).map(|i| (1..=n).map(|j| self.get(i, j)).collect()).collect();
        rows.serialize(serializer)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MatrixCandidate {
    /// `(a^1_3, ..., a^1_{n-2})`.
    pub first_row: Vec<i8>,
    pub matrix: SignedAdjacencyMatrix,
    /// All `2n` row and column sums vanish.
    pub column_sums_ok: bool,
    pub extraction: PivotOutcome,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MatrixCensusResult {
    pub n: usize,
    /// Number of first-row sign vectors examined.
    pub swept: u64,
    pub candidates: Vec<MatrixCandidate>,
}

impl MatrixCensusResult {
    /// Candidates whose line sums vanish but admit no pivot.
    pub fn violations(&self) -> usize {
        self.candidates
            .iter()
            .filter(|c| c.column_sums_ok && c.extraction == PivotOutcome::Failure)
            .count()
    }
}

/// Sweeps every band `(a^1_3, ..., a^1_{n-2})` in `{+1, -1}^{n-4}`, rebuilds
/// the full matrix, and keeps the rows whose even-offset and odd-offset band
/// sums both vanish in every row. For `n ≡ 2 (mod 4)` no vector survives.
pub fn constrained_matrix_census(n: usize) -> Result<MatrixCensusResult, CensusError> {
    check_n(n, Some(MATRIX_CAP))?;
    Ok(sweep(n))
}

pub fn constrained_matrix_census_uncapped(n: usize) -> Result<MatrixCensusResult, CensusError> {
    check_n(n, None)?;
    Ok(sweep(n))
}

fn sweep(n: usize) -> MatrixCensusResult {
    let width = n - 4;
    let mut candidates = Vec::new();
    // vector index bit b (from the most significant end) set means a^1_{3+b} = -1,
    // so the sweep starts at (+, +, ..., +)
    for code in 0u64..1 << width {
        let band: Vec<i8> = (0..width)
            .map(|b| if code >> (width - 1 - b) & 1 == 1 { -1 } else { 1 })
            .collect();
        let matrix = SignedAdjacencyMatrix::from_first_row(n, &band).expect("even n >= 6");
        let check = structural_check_of(&matrix);
        if !check.identity6_holds() {
            continue;
        }
        let extraction = match structural_pivot(&matrix) {
            Some((i0, k)) => PivotOutcome::Found { i0, k },
            None => PivotOutcome::Failure,
        };
        candidates.push(MatrixCandidate {
            first_row: band,
            column_sums_ok: check.line_sums_zero,
            matrix,
            extraction,
        });
    }
    MatrixCensusResult {
        n,
        swept: 1 << width,
        candidates,
    }
}
