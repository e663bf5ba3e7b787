//! Farey edges with denominators up to 8 on [0, 1], and the faces they cut.
//!
//! cargo run --example farey

use lamkit::constructions::farey;
use lamkit::lamination::{gaps, very_full_stats};
use lamkit::scalar::rat;

fn main() {
    let lam = farey(8, &rat(0, 1), &rat(1, 1)).unwrap();
    println!("{} leaves", lam.len());
    for c in lam.leaves().iter().take(8) {
        println!("  {c}");
    }
    let faces = gaps(&lam);
    let triangles = faces.iter().filter(|g| g.chords.len() == 3 && g.is_ideal_polygon()).count();
    let lunes = faces.iter().filter(|g| g.is_lune()).count();
    println!("{} faces: {triangles} ideal triangles, {lunes} lunes", faces.len());
    println!("{:?}", very_full_stats(&faces));
}
