//! Look for a near-Hamilton cycle that omits an adjacent pair, and confirm
//! that the graph is bipancyclic whenever one exists.

use bipancyclic::census::enumerate_class;
use bipancyclic::{check_second_assertion, fixtures, SecondAssertionOutcome};

fn main() {
    let c = check_second_assertion(&fixtures::g8m()).unwrap();
    println!("{}", serde_json::to_string(&c).unwrap());

    let mut confirmed = 0;
    let mut other = 0;
    for g in enumerate_class(6).unwrap() {
        match check_second_assertion(&g).unwrap().outcome {
            SecondAssertionOutcome::BipancyclicConfirmed => confirmed += 1,
            _ => other += 1,
        }
    }
    println!("n = 6: {confirmed} confirmed, {other} other");
}
