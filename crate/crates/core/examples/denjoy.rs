//! Blow up the golden rotation along the orbit of 0 and check the
//! semi-conjugacy with the rotation.

use lamkit::constructions::denjoy;
use lamkit::maps::CircleMap;
use lamkit::scalar::{rat, Qs};

fn main() {
    let alpha = Qs::golden() - Qs::one();
    let s = denjoy(alpha.clone(), Qs::zero(), 3).unwrap();
    println!("boundary leaves: {}", s.lamination.len());
    println!("central gap sides, by orbit index: {:?}", s.side_indices);

    let rot = CircleMap::rotation(alpha.clone());
    let p = s.circle.interval_point(-1, rat(1, 3)).unwrap();
    let q = s.map.apply(&p).unwrap();
    println!("{p} -> {q}");
    assert_eq!(s.circle.collapse(&q).unwrap(), rot.apply(&s.circle.collapse(&p).unwrap()).unwrap());

    let r = s.map.rotation_number(10_000).unwrap();
    println!("rotation number in {r}, alpha ~ {:.6}", alpha.to_f64());
}
