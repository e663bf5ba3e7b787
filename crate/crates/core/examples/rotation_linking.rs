//! Every chord eventually crosses one of its images under an irrational
//! rotation, so no rotation-invariant lamination exists.

use lamkit::circle::{Chord, CirclePoint};
use lamkit::constructions::RotationLinkingSearch;
use lamkit::scalar::Qs;

fn main() {
    let alpha = Qs::golden() - Qs::one();
    let search = RotationLinkingSearch::new(alpha, 1000).unwrap();
    for (a, b) in [(0, 1), (1, 3), (0, 40), (7, 500)] {
        let (a, b) = (CirclePoint::angle_ratio(a, 1000), CirclePoint::angle_ratio(b + 1, 1000));
        let chord = Chord::new(a, b).unwrap();
        let w = search.witness(&chord).unwrap().expect("found below 1000");
        println!("{chord}: {}", serde_json::to_string(&w).unwrap());
        assert!(w.validate().unwrap());
    }
}
