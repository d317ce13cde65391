//! Find a Hamilton cycle in a scrambled graph and relabel along it.

use bipancyclic::census::random_member;
use bipancyclic::{find_hamilton_cycle, relabel_along_hamilton, BalancedBipartiteGraph};

fn main() {
    let g = random_member(8, 2024).unwrap();
    // reverse the X labels and rotate the Y labels
    let edges: Vec<_> = g.edges().into_iter().map(|(i, j)| (9 - i, j % 8 + 1)).collect();
    let scrambled = BalancedBipartiteGraph::from_edge_list(8, &edges).unwrap();
    println!("scrambled is canonical: {}", scrambled.is_canonically_labeled());

    let h = find_hamilton_cycle(&scrambled).expect("members are hamiltonian");
    println!("hamilton cycle: {}", h.as_cycle());
    let canon = relabel_along_hamilton(&scrambled, &h).unwrap();
    println!("relabeled is canonical: {}", canon.is_canonically_labeled());
    print!("{}", canon.to_edge_list());
}
