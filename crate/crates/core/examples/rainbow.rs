//! Endpoint certificates at rationals, nested rainbows at irrationals.

use lamkit::circle::CirclePoint;
use lamkit::constructions::farey;
use lamkit::lamination::{rainbow, Rainbow};
use lamkit::scalar::{rat, Qs};

fn main() {
    let points = [
        ("3/7", CirclePoint::rational(3, 7)),
        ("inf", CirclePoint::infinity()),
        ("golden", CirclePoint::real(Qs::golden())),
        ("sqrt2", CirclePoint::real(Qs::sqrt_rational(&rat(2, 1)).unwrap())),
    ];
    for q in [10, 40] {
        let lam = farey(q, &rat(-2, 1), &rat(2, 1)).unwrap();
        for (name, p) in &points {
            match rainbow(&lam, p).unwrap() {
                Rainbow::EndpointCertificate(c) => println!("Q={q} {name}: endpoint of {c}"),
                Rainbow::RainbowChain(chain) => {
                    println!("Q={q} {name}: rainbow of {} leaves, innermost {}", chain.len(), chain.last().unwrap())
                }
                Rainbow::Unknown => println!("Q={q} {name}: unknown"),
            }
        }
    }
}
