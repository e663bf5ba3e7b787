//! Orbits of hyperbolic axes. In the punctured-torus group they form
//! laminations; in the level-2 congruence group every axis orbit crosses
//! itself.

use lamkit::constructions::geodesic_lift_lamination;
use lamkit::group::GroupAction;
use lamkit::lamination::{check_collection, CollectionMode, Materialized};

fn main() {
    let torus = GroupAction::moebius(&[("a", [1, 1, 1, 2]), ("b", [1, -1, -1, 2])]).unwrap();
    let mut lams = vec![];
    for w in ["a", "b", "a.b"] {
        let word = torus.parse_word(w).unwrap();
        let lam = geodesic_lift_lamination(&torus, &word, 5).unwrap().expect_unlinked().unwrap();
        println!("torus {w}: {} leaves", lam.len());
        lams.push(lam);
    }
    let cert = check_collection(&lams, CollectionMode::Transverse, None).unwrap();
    println!("pairwise transverse: {:?}", cert.verdict);

    let sanov = GroupAction::moebius(&[("A", [1, 2, 0, 1]), ("B", [1, 0, 2, 1])]).unwrap();
    let ab = sanov.parse_word("A.B").unwrap();
    match geodesic_lift_lamination(&sanov, &ab, 6).unwrap() {
        Materialized::Lamination(l) => println!("Sanov A.B: {} leaves", l.len()),
        Materialized::Linked(w) => println!("Sanov A.B crosses itself: {}", serde_json::to_string(&w).unwrap()),
    }
}
