//! Enumerate the class for small n and compare with independent counts.

use std::time::Instant;

use bipancyclic::census::{chord_allowed_matrix, enumerate_class, independent_class_count, permanent};

fn main() {
    println!("menage permanents: {:?}", (3..=7).map(|n| permanent(&chord_allowed_matrix(n))).collect::<Vec<_>>());
    for n in [6, 8] {
        let start = Instant::now();
        let members = enumerate_class(n).unwrap().count();
        println!(
            "n = {n}: {members} members, independent count {}, {:.2?}",
            independent_class_count(n).unwrap(),
            start.elapsed()
        );
    }
    println!("n = 10: independent count {}", independent_class_count(10).unwrap());
}
