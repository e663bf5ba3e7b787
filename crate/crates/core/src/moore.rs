//! Gluing two laminated disks along their boundary and collapsing leaves and
//! resolved polygons to points.
//!
//! Only faces whose boundary arcs have all closed up (ideal polygons) merge
//! their vertices. Lunes with an open frontier arc never merge, so the
//! classes may miss identifications of the limiting relation but never
//! invent them.
//! Upper semicontinuity and non-separation of the classes are not checked.

use std::collections::BTreeMap;

use serde_json::json;

use crate::certificate::{Certificate, Witness};
use crate::circle::{Chord, CirclePoint};
use crate::error::{Error, Result};
use crate::lamination::{gaps, Lamination};
use crate::maps::CircleMap;

/// Proven when every point with several incident leaves has them all on the
/// boundary of one face.
pub fn looseness_check(lam: &Lamination) -> Certificate {
    let faces = gaps(lam);
    let mut faces_of: BTreeMap<&Chord, Vec<usize>> = BTreeMap::new();
    for (f, g) in faces.iter().enumerate() {
        for c in &g.chords {
            faces_of.entry(c).or_default().push(f);
        }
    }
    let mut at: BTreeMap<&CirclePoint, Vec<&Chord>> = BTreeMap::new();
    for c in lam.leaves() {
        for p in c.endpoints() {
            at.entry(p).or_default().push(c);
        }
    }
    let mut checked = 0usize;
    for (v, leaves) in &at {
        if leaves.len() < 2 {
            continue;
        }
        checked += 1;
        let common = faces_of[leaves[0]].iter().any(|f| leaves.iter().all(|c| faces_of[c].contains(f)));
        if common {
            continue;
        }
        let shares = |a: &Chord, b: &Chord| faces_of[a].iter().any(|f| faces_of[b].contains(f));
        let pair = leaves
            .iter()
            .enumerate()
            .flat_map(|(i, a)| leaves[i + 1..].iter().map(move |b| (*a, *b)))
            .find(|(a, b)| !shares(a, b))
            .unwrap_or((leaves[0], leaves[1]));
        return Certificate::refuted(
            Witness::LoosenessViolation { vertex: (*v).clone(), first: pair.0.clone(), second: pair.1.clone() },
            json!({ "faces": faces.len() }),
        );
    }
    Certificate::proven(json!({ "faces": faces.len(), "shared_vertices": checked }))
}

struct UnionFind {
    parent: Vec<usize>,
    rank: Vec<u8>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        Self { parent: (0..n).collect(), rank: vec![0; n] }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (a, b) = (self.find(a), self.find(b));
        if a == b {
            return;
        }
        match self.rank[a].cmp(&self.rank[b]) {
            std::cmp::Ordering::Less => self.parent[a] = b,
            std::cmp::Ordering::Greater => self.parent[b] = a,
            std::cmp::Ordering::Equal => {
                self.parent[b] = a;
                self.rank[a] += 1;
            }
        }
    }
}

/// The partition of the endpoints of two laminations, one on each disk,
/// generated by leaves and resolved polygons.
#[derive(Clone, Debug)]
pub struct MooreComplex {
    pub disks: [Lamination; 2],
    /// Sorted classes, ordered by their least point.
    pub classes: Vec<Vec<CirclePoint>>,
    /// What merged each class, e.g. `disk 0 leaf (0, 1/2)`.
    pub class_origin: Vec<Vec<String>>,
    class_of: BTreeMap<CirclePoint, usize>,
}

impl MooreComplex {
    pub fn class_of(&self, p: &CirclePoint) -> Option<usize> {
        self.class_of.get(p).copied()
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn largest_class(&self) -> usize {
        self.classes.iter().map(Vec::len).max().unwrap_or(0)
    }
}

/// Builds the classes by union-find. Both laminations must be loose.
pub fn moore_complex(lam1: &Lamination, lam2: &Lamination) -> Result<MooreComplex> {
    if lam1.model() != lam2.model() {
        return Err(Error::ModelMismatch { expected: lam1.model(), found: lam2.model() });
    }
    for (i, l) in [lam1, lam2].into_iter().enumerate() {
        let cert = looseness_check(l);
        if let Some(w) = cert.witness() {
            return Err(Error::NotLoose(format!("disk {i}: {w:?}")));
        }
    }
    let mut index: BTreeMap<CirclePoint, usize> = BTreeMap::new();
    for p in lam1.endpoints().into_iter().chain(lam2.endpoints()) {
        let n = index.len();
        index.entry(p).or_insert(n);
    }
    let mut uf = UnionFind::new(index.len());
    let mut merges: Vec<(usize, String)> = Vec::new();
    for (d, lam) in [lam1, lam2].into_iter().enumerate() {
        for c in lam.leaves() {
            let (a, b) = (index[c.lo()], index[c.hi()]);
            uf.union(a, b);
            merges.push((a, format!("disk {d} leaf {c}")));
        }
        for g in gaps(lam).into_iter().filter(|g| g.chords.len() >= 3 && g.is_ideal_polygon()) {
            let first = index[g.chords[0].lo()];
            for c in &g.chords {
                uf.union(first, index[c.lo()]);
                uf.union(first, index[c.hi()]);
            }
            merges.push((first, format!("disk {d} polygon with {} sides", g.chords.len())));
        }
    }
    let mut by_root: BTreeMap<usize, Vec<CirclePoint>> = BTreeMap::new();
    for (p, &i) in &index {
        by_root.entry(uf.find(i)).or_default().push(p.clone());
    }
    let mut classes: Vec<Vec<CirclePoint>> = by_root.into_values().collect();
    classes.sort();
    let mut class_of = BTreeMap::new();
    for (k, c) in classes.iter().enumerate() {
        for p in c {
            class_of.insert(p.clone(), k);
        }
    }
    let mut class_origin = vec![Vec::new(); classes.len()];
    let points: Vec<&CirclePoint> = {
        let mut v: Vec<(&CirclePoint, usize)> = index.iter().map(|(p, &i)| (p, i)).collect();
        v.sort_by_key(|&(_, i)| i);
        v.into_iter().map(|(p, _)| p).collect()
    };
    for (i, label) in merges {
        class_origin[class_of[points[i]]].push(label);
    }
    Ok(MooreComplex { disks: [lam1.clone(), lam2.clone()], classes, class_origin, class_of })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FixedClasses {
    /// Classes mapped onto themselves, by index.
    Counted { count: usize, classes: Vec<usize> },
    /// The identity fixes every class.
    AllFixed,
    /// The map does not preserve the materialized leaves.
    Unknown { reason: String },
}

fn image(m: &CircleMap, c: &Chord) -> Result<Chord> {
    Chord::new(m.apply(c.lo())?, m.apply(c.hi())?)
}

/// Classes `C` with `m(C) = C`, provided `m` maps each disk's leaves into
/// that disk's leaves.
pub fn induced_fixed_classes(mc: &MooreComplex, m: &CircleMap) -> Result<FixedClasses> {
    if m.is_identity() {
        return Ok(FixedClasses::AllFixed);
    }
    for (d, lam) in mc.disks.iter().enumerate() {
        for c in lam.leaves() {
            let img = image(m, c)?;
            if !lam.contains(&img) {
                return Ok(FixedClasses::Unknown { reason: format!("disk {d}: image of {c} is {img}, not a leaf") });
            }
        }
    }
    let mut fixed = Vec::new();
    for (k, class) in mc.classes.iter().enumerate() {
        let mut imgs = class.iter().map(|p| m.apply(p)).collect::<Result<Vec<_>>>()?;
        imgs.sort();
        if &imgs == class {
            fixed.push(k);
        }
    }
    Ok(FixedClasses::Counted { count: fixed.len(), classes: fixed })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circle::Model;
    use crate::constructions::{axis, farey, regular_pa_like};
    use crate::scalar::{rat, Qs};

    fn ang(a: i64, b: i64, c: i64, d: i64) -> Chord {
        Chord::new(CirclePoint::angle_ratio(a, b), CirclePoint::angle_ratio(c, d)).unwrap()
    }

    fn lam(chords: Vec<Chord>) -> Lamination {
        Lamination::new(Model::Angle, chords, "").unwrap().expect_unlinked().unwrap()
    }

    #[test]
    fn looseness() {
        assert!(looseness_check(&lam(vec![ang(0, 1, 1, 2)])).is_proven());
        let f = farey(3, &rat(0, 1), &rat(1, 1)).unwrap();
        let cert = looseness_check(&f);
        let Some(Witness::LoosenessViolation { vertex, first, second }) = cert.witness() else {
            panic!("Farey is not loose")
        };
        assert_eq!(vertex, &CirclePoint::rational(0, 1));
        let inf = Chord::new(CirclePoint::rational(0, 1), CirclePoint::infinity()).unwrap();
        assert!(first == &inf || second == &inf);
        // three leaves fanning out of 0 with no face holding all of them
        assert!(looseness_check(&lam(vec![ang(0, 1, 1, 4), ang(0, 1, 1, 2), ang(0, 1, 3, 4)])).is_refuted());
        // a resolved triangle is fine
        assert!(looseness_check(&lam(vec![ang(0, 1, 1, 3), ang(1, 3, 2, 3), ang(0, 1, 2, 3)])).is_proven());
    }

    #[test]
    fn two_single_chords() {
        let mc = moore_complex(&lam(vec![ang(0, 1, 1, 2)]), &lam(vec![ang(1, 4, 3, 4)])).unwrap();
        assert_eq!(mc.len(), 2);
        assert_eq!(mc.classes[0], vec![CirclePoint::angle_ratio(0, 1), CirclePoint::angle_ratio(1, 2)]);
        let s = regular_pa_like(4).unwrap();
        let FixedClasses::Counted { count, .. } = induced_fixed_classes(&mc, &s.map).unwrap() else {
            panic!("leaf sets are invariant")
        };
        assert_eq!(count, 2);
        assert_eq!(induced_fixed_classes(&mc, &CircleMap::rotation(Qs::zero())).unwrap(), FixedClasses::AllFixed);
    }

    #[test]
    fn polygons_collapse() {
        let s = regular_pa_like(6).unwrap();
        let mc = moore_complex(&s.attracting_polygon, &s.repelling_polygon).unwrap();
        assert_eq!(mc.len(), 2);
        let att = mc.class_of(&CirclePoint::angle_ratio(0, 1)).unwrap();
        assert_eq!(mc.classes[att].len(), 3);
        assert!(mc.class_origin[att].iter().any(|o| o.contains("polygon")));
        let FixedClasses::Counted { count, .. } = induced_fixed_classes(&mc, &s.map).unwrap() else { panic!() };
        assert_eq!(count, 2);
    }

    #[test]
    fn rejects_non_loose() {
        let fan = lam(vec![ang(0, 1, 1, 4), ang(0, 1, 1, 2), ang(0, 1, 3, 4)]);
        assert!(matches!(moore_complex(&fan, &lam(vec![])), Err(Error::NotLoose(_))));
    }

    #[test]
    fn hyperbolic_axis() {
        let h = CircleMap::moebius(2, 1, 1, 1).unwrap();
        let a = Lamination::new(Model::ProjectiveLine, vec![axis(&h).unwrap()], "").unwrap().expect_unlinked().unwrap();
        let mc = moore_complex(&a, &Lamination::empty(Model::ProjectiveLine)).unwrap();
        let FixedClasses::Counted { count, classes } = induced_fixed_classes(&mc, &h).unwrap() else { panic!() };
        assert_eq!(count, 1);
        assert_eq!(mc.classes[classes[0]].len(), 2);
        // a parabolic map moves the axis, so there is no answer
        let p = CircleMap::moebius(1, 1, 0, 1).unwrap();
        assert!(matches!(induced_fixed_classes(&mc, &p).unwrap(), FixedClasses::Unknown { .. }));
    }
}
