//! Cycle spectrum and the edge-count criterion for bipancyclicity.

use bipancyclic::census::augmented_member;
use bipancyclic::{es_predict, find_cycle_of_length, fixtures, is_bipancyclic};

fn main() {
    let cases = [
        ("GDIS", fixtures::gdis()),
        ("GES", fixtures::ges()),
        ("G6", fixtures::g6()),
        ("augmented", augmented_member(6, 3, 11).unwrap()),
    ];
    for (name, g) in cases {
        let r = is_bipancyclic(&g);
        println!(
            "{name}: size {} lengths {:?} bipancyclic {} size criterion {:?}",
            g.size(),
            r.lengths_present,
            r.is_bipancyclic,
            es_predict(&g)
        );
    }
    if let Some(w) = find_cycle_of_length(&fixtures::g6(), 8) {
        println!("an 8-cycle in G6: {w}");
    }
}
