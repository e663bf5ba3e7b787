//! Glue two disks along their polygon laminations and count the classes a
//! map fixes.

use lamkit::constructions::regular_pa_like;
use lamkit::moore::{induced_fixed_classes, looseness_check, moore_complex};

fn main() {
    let s = regular_pa_like(6).unwrap();
    for lam in [&s.attracting_polygon, &s.repelling_polygon] {
        println!("loose: {}", looseness_check(lam).is_proven());
    }
    let mc = moore_complex(&s.attracting_polygon, &s.repelling_polygon).unwrap();
    for (k, class) in mc.classes.iter().enumerate() {
        let pts: Vec<String> = class.iter().map(|p| p.to_string()).collect();
        println!("class {k}: {pts:?} from {:?}", mc.class_origin[k]);
    }
    println!("{:?}", induced_fixed_classes(&mc, &s.map).unwrap());
}
