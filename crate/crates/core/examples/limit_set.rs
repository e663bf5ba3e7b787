//! Fixed-point clouds: dense for the modular group, with a free arc for a
//! Schottky group.

use lamkit::group::{fixed_point_cloud, CloudOptions, GroupAction};
use lamkit::scalar::Qs;

fn main() {
    let modular = GroupAction::modular();
    let opts = CloudOptions { window: Some((Qs::zero(), Qs::one())), epsilon: Some(Qs::ratio(1, 20)) };
    for radius in [6, 8, 10, 12] {
        let r = fixed_point_cloud(&modular, radius, 6, &opts).unwrap();
        println!("modular radius {radius}: ball {}, cloud {}, 1/20-dense on [0, 1]: {:?}", r.ball_size, r.cloud.len(), r.epsilon_dense);
    }

    let schottky = GroupAction::moebius(&[("A", [25, 0, 0, 1]), ("B", [13, -12, -12, 13])]).unwrap();
    let r = fixed_point_cloud(&schottky, 4, 2, &CloudOptions::default()).unwrap();
    let (a, b) = r.largest_gap.clone().unwrap();
    println!(
        "Schottky: cloud {}, widest free arc {a} .. {b} of length {:.4}, at least 1/10: {}",
        r.cloud.len(),
        r.largest_gap_length.unwrap(),
        r.largest_gap_at_least(&Qs::ratio(1, 10)).unwrap()
    );
}
