//! Sweep all first rows of the constrained signed matrices.

use bipancyclic::census::{constrained_matrix_census, PivotOutcome};
use bipancyclic::signed::sign_char;

fn main() {
    for n in [6, 8, 10, 12] {
        let r = constrained_matrix_census(n).unwrap();
        println!("n = {n}: swept {} first rows, {} candidates", r.swept, r.candidates.len());
        for c in r.candidates.iter().take(6) {
            let row: String = c.first_row.iter().map(|&s| sign_char(s)).collect();
            let pivot = match c.extraction {
                PivotOutcome::Found { i0, k } => format!("({i0}, {k})"),
                PivotOutcome::Failure => "none".into(),
            };
            println!("  {row} line sums zero {} pivot {pivot}", c.column_sums_ok);
        }
    }
}
