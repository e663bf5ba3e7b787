//! Write an SVG of a Farey lamination to the path given, or to farey.svg.

use lamkit::constructions::farey;
use lamkit::render::{render_svg, ChordStyle, Payload, RenderOptions};
use lamkit::report::LaminationDoc;
use lamkit::scalar::rat;

fn main() {
    let out = std::env::args().nth(1).unwrap_or_else(|| "farey.svg".into());
    let lam = farey(12, &rat(-3, 1), &rat(3, 1)).unwrap();
    let payload = Payload::Lamination(LaminationDoc::from(&lam));
    let opts = RenderOptions { size: 800.0, style: ChordStyle::Geodesic };
    std::fs::write(&out, render_svg(&payload, &opts).unwrap()).unwrap();
    println!("{} leaves -> {out}", lam.len());
}
