//! Seeded random class members, verified one by one.

use bipancyclic::census::{check_member, random_member};

fn main() {
    for n in [6, 8, 10, 12, 16] {
        let mut methods = std::collections::BTreeMap::new();
        for seed in 0..20 {
            let g = random_member(n, seed).unwrap();
            let o = check_member(&g);
            assert!(o.problems.is_empty(), "{:?}", o.problems);
            *methods.entry(o.method.unwrap().name()).or_insert(0) += 1;
        }
        println!("n = {n}: {methods:?}");
    }
}
