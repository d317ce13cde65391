//! Extract a cycle of length 2n - 2 from a regular hamiltonian member and
//! show which branch produced it.

use bipancyclic::{extract, fixtures, validate_cycle};

fn main() {
    for (name, g) in [("G6", fixtures::g6()), ("G8m", fixtures::g8m()), ("G8s", fixtures::g8s())] {
        let r = extract(&g).expect("fixture is a class member");
        let n = g.n();
        println!("{name}: method {} indices {:?}", r.method.name(), r.indices);
        println!("  cycle   {}", r.witness);
        println!("  omitted {} {} (adjacent: {})", r.omitted.0, r.omitted.1, r.omitted_adjacent);
        assert!(validate_cycle(&g, &r.witness, 2 * n - 2));
    }
    println!("{}", extract(&fixtures::g6()).unwrap().to_json());
}
