use lamkit::circle::{Arc, CirclePoint};
use lamkit::group::{north_south_diagnostic, triple_discontinuity};
use lamkit::maps::CircleMap;
use lamkit::scalar::Qs;

fn main() {
    // north-south dynamics of hyperbolic powers
    let h = CircleMap::moebius(2, 1, 1, 1).unwrap();
    let powers: Vec<CircleMap> = (1..=8).map(|k| h.power(k).unwrap()).collect();
    let ns = north_south_diagnostic(&powers, &Qs::ratio(1, 100)).unwrap();
    for (k, e) in ns.entries.iter().enumerate() {
        println!("h^{}: attracting {} repelling {} diameter {:.3e}", k + 1, e.attracting, e.repelling, e.diameter.to_f64());
    }

    // returns to three arcs: rotations keep coming back, hyperbolic powers do not
    let arcs = [0, 1, 2].map(|k| {
        let a = Qs::ratio(k, 3);
        Arc::new(CirclePoint::angle(a.clone()), CirclePoint::angle(a + Qs::ratio(1, 10))).unwrap()
    });
    let alpha = Qs::golden() - Qs::one();
    for n in [10, 40, 160] {
        let fam: Vec<CircleMap> = (1..=n).map(|k| CircleMap::rotation(&alpha * &Qs::integer(k))).collect();
        println!("rotations 1..{n}: {} returns", triple_discontinuity(&fam, &arcs).unwrap().return_count);
    }
}
