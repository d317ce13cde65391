//! Signed adjacency matrices: line sums, propagation laws and the pivot.

use bipancyclic::extract::{check_structural_constraints, structural_pivot};
use bipancyclic::signed::sign_char;
use bipancyclic::{fixtures, signed_matrix};

fn main() {
    for (name, g) in [("G8s", fixtures::g8s()), ("G8m", fixtures::g8m())] {
        let m = signed_matrix(&g).unwrap();
        println!("{name}:");
        for i in 1..=g.n() as i64 {
            let row: String = (1..=g.n() as i64).map(|j| sign_char(m.get(i, j))).collect();
            println!("  {row}");
        }
        println!("  line sums zero: {}", m.line_sums_zero());
        let c = check_structural_constraints(&g).unwrap();
        println!("  laws 3/4/5: {:?} {:?} {:?}", c.law3, c.law4, c.law5);
        println!("  all constraints hold: {}", c.passes_fully());
        println!("  pivot (i0, k): {:?}", structural_pivot(&m));
    }
}
