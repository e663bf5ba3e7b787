//! A circle map with alternating attracting and repelling fixed points.
//! Chords between different basins converge to the attracting polygon.

use lamkit::circle::{Chord, CirclePoint};
use lamkit::constructions::{chord_distance, chord_orbit, pa_like_map, strict_col2_probe};
use lamkit::scalar::Qs;

fn main() {
    let points = vec![Qs::zero(), Qs::ratio(1, 5), Qs::ratio(1, 2), Qs::ratio(3, 4)];
    let s = pa_like_map(points, vec![true, false, true, false]).unwrap();
    println!("attracting polygon: {:?}", s.attracting_polygon.leaves().iter().map(|c| c.to_string()).collect::<Vec<_>>());
    println!("repelling polygon:  {:?}", s.repelling_polygon.leaves().iter().map(|c| c.to_string()).collect::<Vec<_>>());

    let seed = Chord::new(CirclePoint::angle_ratio(1, 10), CirclePoint::angle_ratio(3, 5)).unwrap();
    let orbit = chord_orbit(&s.map, &seed, 60).unwrap();
    for (n, c) in orbit.iter().enumerate().step_by(15) {
        let d = s.attracting_polygon.leaves().iter().map(|p| chord_distance(c, p).unwrap()).min().unwrap();
        println!("step {n:>2}: {c}  distance to polygon {:.2e}", d.to_f64());
    }

    let probe = strict_col2_probe(&s, &seed, 3).unwrap();
    println!("third lamination probe: {}", serde_json::to_string(&probe).unwrap());
}
