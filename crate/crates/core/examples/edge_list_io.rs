//! Read and write the edge-list format.

use bipancyclic::{fixtures, BalancedBipartiteGraph};

fn main() {
    let text = "# a 4-cycle plus one chord\n3\n1 1\n2 1\n2 2\n3 2\n3 3\n1 3\n1 2\n";
    let g = BalancedBipartiteGraph::parse_edge_list(text).unwrap();
    println!("n {} size {} canonical {}", g.n(), g.size(), g.is_canonically_labeled());
    print!("{}", g.to_edge_list());

    for bad in ["3\n1 4\n", "3\n1  2\n", "0\n"] {
        println!("{:?} -> {}", bad, BalancedBipartiteGraph::parse_edge_list(bad).unwrap_err());
    }
    let g6 = fixtures::g6();
    assert_eq!(BalancedBipartiteGraph::parse_edge_list(&g6.to_edge_list()).unwrap(), g6);
}
