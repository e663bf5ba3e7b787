//! SVG drawings of laminations in the Poincaré disk.
//!
//! Projective and angle points are placed by their circle coordinate `u` at
//! angle `2 pi u` (so `inf` sits at angle 0 and `0` at angle `pi`). Models
//! without a metric chart are spread evenly in cyclic order. Drawing uses
//! floating point and is not part of any certificate.

use std::collections::BTreeMap;
use std::f64::consts::PI;
use std::fmt::Write as _;

use serde_json::Value;

use crate::circle::{Chord, CirclePoint};
use crate::error::{Error, Result};
use crate::report::{LaminationDoc, Report};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum ChordStyle {
    #[default]
    Geodesic,
    Straight,
}

#[derive(Clone, Debug)]
pub struct RenderOptions {
    pub size: f64,
    pub style: ChordStyle,
}

impl Default for RenderOptions {
    fn default() -> Self {
        Self { size: 600.0, style: ChordStyle::Geodesic }
    }
}

/// What `render` accepts.
#[derive(Clone, Debug)]
pub enum Payload {
    Lamination(LaminationDoc),
    Report(Box<Report>),
}

impl Payload {
    /// Reports are recognised by their `checks` field, laminations by
    /// `leaves`.
    pub fn from_json(text: &str) -> Result<Self> {
        let v: Value = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        if v.get("checks").is_some() {
            Ok(Payload::Report(Box::new(Report::from_json(text)?)))
        } else if v.get("leaves").is_some() {
            Ok(Payload::Lamination(serde_json::from_value(v).map_err(|e| Error::Parse(e.to_string()))?))
        } else {
            Err(Error::Invalid("unsupported payload: expected a lamination or a report".into()))
        }
    }
}

struct Layout {
    rank: BTreeMap<CirclePoint, f64>,
}

impl Layout {
    fn new<'a>(points: impl Iterator<Item = &'a CirclePoint>) -> Self {
        let mut pts: Vec<&CirclePoint> = points.filter(|p| p.circle_coordinate().is_none()).collect();
        pts.sort();
        pts.dedup();
        let n = pts.len().max(1) as f64;
        let rank = pts.into_iter().enumerate().map(|(i, p)| (p.clone(), (i as f64 + 0.5) / n)).collect();
        Layout { rank }
    }

    fn turn(&self, p: &CirclePoint) -> f64 {
        match p.circle_coordinate() {
            Some(u) => u.to_f64(),
            None => self.rank[p],
        }
    }
}

struct Canvas {
    c: f64,
    r: f64,
    style: ChordStyle,
    out: String,
}

impl Canvas {
    fn xy(&self, turn: f64) -> (f64, f64) {
        let t = 2.0 * PI * turn;
        (self.c + self.r * t.cos(), self.c - self.r * t.sin())
    }

    fn chord(&mut self, layout: &Layout, ch: &Chord, class: &str) {
        let (a, b) = (layout.turn(ch.lo()), layout.turn(ch.hi()));
        let (x1, y1) = self.xy(a);
        let (x2, y2) = self.xy(b);
        let mut delta = (b - a).rem_euclid(1.0);
        if delta > 0.5 {
            delta = 1.0 - delta;
        }
        let half = PI * delta;
        let d = if self.style == ChordStyle::Straight || (0.5 - delta).abs() < 1e-9 || half < 1e-9 {
            format!("M {x1:.3} {y1:.3} L {x2:.3} {y2:.3}")
        } else {
            // the geodesic is an arc of the circle orthogonal to the boundary
            let rg = self.r * half.tan();
            let mid = {
                let (mx, my) = ((x1 + x2) / 2.0 - self.c, (y1 + y2) / 2.0 - self.c);
                let len = (mx * mx + my * my).sqrt();
                (mx / len, my / len)
            };
            let dist = self.r / half.cos();
            let (gx, gy) = (self.c + mid.0 * dist, self.c + mid.1 * dist);
            let cross = (x1 - gx) * (y2 - gy) - (y1 - gy) * (x2 - gx);
            let sweep = u8::from(cross > 0.0);
            format!("M {x1:.3} {y1:.3} A {rg:.3} {rg:.3} 0 0 {sweep} {x2:.3} {y2:.3}")
        };
        let _ = writeln!(self.out, r#"  <path class="{class}" d="{d}"/>"#);
    }
}

fn chain_of(v: &Value) -> Option<Vec<Chord>> {
    serde_json::from_value(v.get("chain")?.clone()).ok()
}

/// Deterministic SVG for a lamination, or for the laminations and rainbow
/// chains recorded in a report. Every leaf becomes one `class="leaf"` path
/// and every rainbow chord one `class="rainbow"` path.
pub fn render_svg(payload: &Payload, opts: &RenderOptions) -> Result<String> {
    let (layers, chains): (Vec<(String, Vec<Chord>)>, Vec<Vec<Chord>>) = match payload {
        Payload::Lamination(doc) => (vec![(String::new(), doc.leaves.clone())], vec![]),
        Payload::Report(r) => {
            let layers = r.laminations.iter().map(|(n, d)| (n.clone(), d.leaves.clone())).collect();
            let chains = r
                .checks
                .iter()
                .filter(|c| c.check == "rainbow")
                .filter_map(|c| chain_of(&c.certificate.detail))
                .collect();
            (layers, chains)
        }
    };
    let all = layers.iter().flat_map(|(_, l)| l).chain(chains.iter().flatten());
    let layout = Layout::new(all.flat_map(|c| c.endpoints()));
    let size = opts.size;
    let mut cv = Canvas { c: size / 2.0, r: size / 2.0 - 10.0, style: opts.style, out: String::new() };
    let _ = writeln!(
        cv.out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" viewBox="0 0 {size} {size}">"#
    );
    let _ = writeln!(
        cv.out,
        r#"  <style>.leaf{{fill:none;stroke:#234;stroke-width:0.6}}.rainbow{{fill:none;stroke:#c33;stroke-width:1.6}}.disk{{fill:#f8f8f4;stroke:#000}}</style>"#
    );
    let _ = writeln!(cv.out, r#"  <circle class="disk" cx="{0}" cy="{0}" r="{1}"/>"#, cv.c, cv.r);
    for (name, leaves) in &layers {
        if !name.is_empty() {
            let _ = writeln!(cv.out, r#"  <g data-lamination="{name}">"#);
        }
        for c in leaves {
            cv.chord(&layout, c, "leaf");
        }
        if !name.is_empty() {
            cv.out.push_str("  </g>\n");
        }
    }
    for chain in &chains {
        for c in chain {
            cv.chord(&layout, c, "rainbow");
        }
    }
    cv.out.push_str("</svg>\n");
    Ok(cv.out)
}

/// Number of elements with the given class in an SVG produced here.
pub fn count_class(svg: &str, class: &str) -> usize {
    svg.matches(&format!(r#"class="{class}""#)).count()
}
