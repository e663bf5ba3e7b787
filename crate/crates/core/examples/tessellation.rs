//! Reflect the central gap of the blow-up across its sides, level by level.

use lamkit::constructions::{denjoy, denjoy_tessellation, density_in_order, tessellation_leaf_count};
use lamkit::scalar::Qs;

fn main() {
    let s = denjoy(Qs::golden() - Qs::one(), Qs::zero(), 3).unwrap();
    for depth in 0..=3 {
        let t = denjoy_tessellation(&s, depth, None).unwrap();
        println!(
            "depth {depth}: {} leaves (formula {}), dense in order: {}",
            t.lamination.len(),
            tessellation_leaf_count(t.sides as u64, depth),
            density_in_order(&t)
        );
    }
    let one = denjoy_tessellation(&s, 1, Some(0)).unwrap();
    println!("reflecting across side 0 only: {} leaves", one.lamination.len());
}
