//! Finitely generated actions on the circle: words, balls, element classes,
//! fixed-point clouds and convergence diagnostics.

use std::collections::HashSet;
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::circle::{circle_distance, Arc, CirclePoint, Model};
use crate::error::{Error, Result};
use crate::maps::{CircleMap, FixedPointRecord, MoebiusMap, SideBehavior};
use crate::scalar::Qs;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter {
    pub generator: usize,
    pub inverse: bool,
}

impl Letter {
    pub fn inverted(self) -> Self {
        Letter { generator: self.generator, inverse: !self.inverse }
    }
}

/// A freely reduced word. `l1 l2 ... lk` denotes the map `l1 ∘ l2 ∘ ... ∘ lk`.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word {
    letters: Vec<Letter>,
}

impl Word {
    pub fn identity() -> Self {
        Word::default()
    }

    pub fn new(letters: impl IntoIterator<Item = Letter>) -> Self {
        let mut out: Vec<Letter> = Vec::new();
        for l in letters {
            if out.last() == Some(&l.inverted()) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        Word { letters: out }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        Word::new(self.letters.iter().chain(&other.letters).copied())
    }

    pub fn inverse(&self) -> Word {
        Word { letters: self.letters.iter().rev().map(|l| l.inverted()).collect() }
    }

    pub fn power(&self, k: u32) -> Word {
        (0..k).fold(Word::identity(), |acc, _| acc.concat(self))
    }
}

#[derive(Clone, Debug)]
pub struct Generator {
    pub name: String,
    pub map: CircleMap,
}

#[derive(Clone, Debug)]
pub struct GroupAction {
    generators: Vec<Generator>,
    inverses: Vec<CircleMap>,
    pub assume_free: bool,
}

impl GroupAction {
    pub fn new(generators: Vec<(String, CircleMap)>, assume_free: bool) -> Result<Self> {
        if generators.is_empty() {
            return Err(Error::Invalid("an action needs at least one generator".into()));
        }
        let mut names = HashSet::new();
        for (name, m) in &generators {
            if name.is_empty() || name.contains(['.', '^', ' ']) {
                return Err(Error::Invalid(format!("bad generator name `{name}`")));
            }
            if !names.insert(name.clone()) {
                return Err(Error::Invalid(format!("duplicate generator `{name}`")));
            }
            if m.model() != generators[0].1.model() {
                return Err(Error::ModelMismatch { expected: generators[0].1.model(), found: m.model() });
            }
        }
        let inverses = generators.iter().map(|(_, m)| m.inverse()).collect();
        let generators = generators.into_iter().map(|(name, map)| Generator { name, map }).collect();
        Ok(Self { generators, inverses, assume_free })
    }

    pub fn moebius(gens: &[(&str, [i64; 4])]) -> Result<Self> {
        let gens = gens
            .iter()
            .map(|(n, [a, b, c, d])| Ok((n.to_string(), CircleMap::moebius(*a, *b, *c, *d)?)))
            .collect::<Result<Vec<_>>>()?;
        Self::new(gens, false)
    }

    /// `S = [[0,-1],[1,0]]` and `T = [[1,1],[0,1]]`.
    pub fn modular() -> Self {
        Self::moebius(&[("S", [0, -1, 1, 0]), ("T", [1, 1, 0, 1])]).expect("modular generators")
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn model(&self) -> Model {
        self.generators[0].map.model()
    }

    /// Letters in canonical order: each generator, then its inverse.
    pub fn alphabet(&self) -> Vec<Letter> {
        (0..self.generators.len())
            .flat_map(|g| [Letter { generator: g, inverse: false }, Letter { generator: g, inverse: true }])
            .collect()
    }

    pub fn letter_map(&self, l: Letter) -> &CircleMap {
        if l.inverse {
            &self.inverses[l.generator]
        } else {
            &self.generators[l.generator].map
        }
    }

    pub fn evaluate(&self, w: &Word) -> Result<CircleMap> {
        let Some((first, rest)) = w.letters.split_first() else {
            return self.generators[0].map.power(0);
        };
        rest.iter().try_fold(self.letter_map(*first).clone(), |acc, l| acc.compose(self.letter_map(*l)))
    }

    /// Parses `"A.B^-1.A^3"`; `"e"` or `""` is the identity.
    pub fn parse_word(&self, s: &str) -> Result<Word> {
        let s = s.trim();
        if s.is_empty() || s == "e" {
            return Ok(Word::identity());
        }
        let mut letters = Vec::new();
        for tok in s.split('.') {
            let (name, exp) = match tok.split_once('^') {
                Some((n, e)) => (n, e.parse::<i64>().map_err(|_| Error::Parse(format!("bad exponent in `{tok}`")))?),
                None => (tok, 1),
            };
            let generator = self
                .generators
                .iter()
                .position(|g| g.name == name)
                .ok_or_else(|| Error::Parse(format!("unknown generator `{name}` in `{s}`")))?;
            let l = Letter { generator, inverse: exp < 0 };
            letters.extend(std::iter::repeat_n(l, exp.unsigned_abs() as usize));
        }
        Ok(Word::new(letters))
    }

    pub fn format_word(&self, w: &Word) -> String {
        if w.is_empty() {
            return "e".into();
        }
        let parts: Vec<String> = w
            .letters
            .iter()
            .map(|l| {
                let n = &self.generators[l.generator].name;
                if l.inverse {
                    format!("{n}^-1")
                } else {
                    n.clone()
                }
            })
            .collect();
        parts.join(".")
    }

    fn all_moebius(&self) -> bool {
        self.generators.iter().all(|g| matches!(g.map, CircleMap::Moebius(_)))
    }
}

/// Non-identity elements of a word ball in length-lexicographic order.
#[derive(Clone, Debug)]
pub struct Ball {
    pub elements: Vec<(Word, CircleMap)>,
    /// Whether elements were deduplicated by exact map equality.
    pub deduplicated: bool,
}

/// All freely reduced words of length `1..=radius`. For Möbius actions not
/// flagged free, words whose map already appeared (or is the identity) are
/// dropped and not extended.
pub fn enumerate_ball(a: &GroupAction, radius: u32) -> Result<Ball> {
    let dedup = !a.assume_free && a.all_moebius();
    let mut seen: HashSet<MoebiusMap> = HashSet::new();
    if dedup {
        seen.insert(MoebiusMap::identity());
    }
    let alphabet = a.alphabet();
    let mut elements: Vec<(Word, CircleMap)> = Vec::new();
    let mut frontier: Vec<(Word, CircleMap)> = vec![];
    for depth in 1..=radius {
        let candidates: Vec<Result<(Word, CircleMap)>> = if depth == 1 {
            alphabet.iter().map(|l| Ok((Word::new([*l]), a.letter_map(*l).clone()))).collect()
        } else {
            frontier
                .par_iter()
                .flat_map_iter(|(w, m)| {
                    let last = *w.letters.last().expect("non-empty");
                    alphabet.iter().filter(move |l| **l != last.inverted()).map(move |l| {
                        let word = Word::new(w.letters.iter().copied().chain([*l]));
                        Ok((word, m.compose(a.letter_map(*l))?))
                    })
                })
                .collect()
        };
        let mut next = Vec::new();
        for c in candidates {
            let (w, m) = c?;
            if dedup {
                let CircleMap::Moebius(mm) = &m else { unreachable!() };
                if !seen.insert(mm.clone()) {
                    continue;
                }
            }
            next.push((w, m));
        }
        elements.extend(next.iter().cloned());
        frontier = next;
    }
    Ok(Ball { elements, deduplicated: dedup })
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ElementClass {
    Torsion(u32),
    Elliptic,
    Parabolic,
    Hyperbolic,
    PseudoAnosovLike { power: u32, fixed: usize },
    Other(String),
}

fn pattern(recs: &[FixedPointRecord]) -> String {
    let c = |s: SideBehavior| match s {
        SideBehavior::Attracting => 'a',
        SideBehavior::Repelling => 'r',
    };
    let parts: Vec<String> = recs.iter().map(|r| format!("{}{}", c(r.left), c(r.right))).collect();
    parts.join(" ")
}

fn classify_pattern(recs: &[FixedPointRecord], power: u32) -> ElementClass {
    let n = recs.len();
    let alternating = recs.iter().all(FixedPointRecord::is_two_sided)
        && (0..n).all(|i| recs[i].left != recs[(i + 1) % n].left);
    match n {
        1 if power == 1 && !recs[0].is_two_sided() => ElementClass::Parabolic,
        2 if power == 1 && alternating => ElementClass::Hyperbolic,
        n if n >= 4 && n % 2 == 0 && alternating => ElementClass::PseudoAnosovLike { power, fixed: n },
        _ => ElementClass::Other(format!("power {power} fixes {n} points: {}", pattern(recs))),
    }
}

/// Classifies by the fixed points of the first power (up to `power_bound`)
/// that is the identity or has fixed points.
pub fn classify_map(g: &CircleMap, power_bound: u32) -> Result<ElementClass> {
    if power_bound == 0 {
        return Err(Error::Invalid("power bound must be positive".into()));
    }
    if !g.is_orientation_preserving() {
        return Ok(ElementClass::Other("orientation reversing".into()));
    }
    let mut gk = g.clone();
    for k in 1..=power_bound {
        if k > 1 {
            gk = g.compose(&gk)?;
        }
        if gk.is_identity() {
            return Ok(ElementClass::Torsion(k));
        }
        let recs = match gk.fixed_points() {
            Ok(r) => r,
            Err(Error::NonIsolatedFixedPoints) => {
                return Ok(ElementClass::Other(format!("power {k} fixes an interval")));
            }
            Err(e) => return Err(e),
        };
        if !recs.is_empty() {
            return Ok(classify_pattern(&recs, k));
        }
    }
    Ok(ElementClass::Elliptic)
}

pub fn classify_element(a: &GroupAction, w: &Word, power_bound: u32) -> Result<ElementClass> {
    classify_map(&a.evaluate(w)?, power_bound)
}

#[derive(Clone, Debug)]
pub struct CloudPoint {
    pub point: CirclePoint,
    /// A word whose map fixes `point`.
    pub witness: Word,
}

#[derive(Clone, Debug, Default)]
pub struct CloudOptions {
    /// A window `[lo, hi]` in the chart coordinate (real value or angle).
    pub window: Option<(Qs, Qs)>,
    pub epsilon: Option<Qs>,
}

#[derive(Clone, Debug)]
pub struct LimitSetReport {
    pub cloud: Vec<CloudPoint>,
    pub ball_size: usize,
    pub deduplicated: bool,
    pub window: Option<(Qs, Qs)>,
    pub epsilon: Option<Qs>,
    pub epsilon_dense: Option<bool>,
    /// The widest arc between cyclically consecutive cloud points, measured in
    /// the circle coordinate.
    pub largest_gap: Option<(CirclePoint, CirclePoint)>,
    pub largest_gap_length: Option<f64>,
}

impl LimitSetReport {
    /// Exact test that the largest gap has circle length at least `delta`.
    pub fn largest_gap_at_least(&self, delta: &Qs) -> Result<bool> {
        let Some((s, e)) = &self.largest_gap else {
            return Ok(!self.cloud.is_empty() || delta <= &Qs::one());
        };
        let (u, v) = (coordinate(s)?, coordinate(e)?);
        let v = if v <= u { v + Qs::one() } else { v };
        Ok(v >= u.try_add(delta)?)
    }
}

fn coordinate(p: &CirclePoint) -> Result<Qs> {
    p.circle_coordinate().ok_or_else(|| Error::Invalid(format!("no circle coordinate in {:?}", p.model())))
}

/// Fixed points of every ball element, taking for each element the first
/// power up to `power_bound` that has any.
pub fn fixed_point_cloud(a: &GroupAction, radius: u32, power_bound: u32, opts: &CloudOptions) -> Result<LimitSetReport> {
    let ball = enumerate_ball(a, radius)?;
    let per: Vec<Result<Vec<CloudPoint>>> = ball
        .elements
        .par_iter()
        .map(|(w, m)| {
            let mut gk = m.clone();
            for k in 1..=power_bound {
                if k > 1 {
                    gk = m.compose(&gk)?;
                }
                if gk.is_identity() || !gk.is_orientation_preserving() {
                    break;
                }
                match gk.fixed_points() {
                    Ok(recs) if !recs.is_empty() => {
                        let witness = w.power(k);
                        return Ok(recs.into_iter().map(|r| CloudPoint { point: r.point, witness: witness.clone() }).collect());
                    }
                    Ok(_) => {}
                    Err(Error::NonIsolatedFixedPoints) => break,
                    Err(e) => return Err(e),
                }
            }
            Ok(vec![])
        })
        .collect();
    let mut cloud: Vec<CloudPoint> = Vec::new();
    let mut seen = HashSet::new();
    for pts in per {
        for p in pts? {
            if seen.insert(p.point.clone()) {
                cloud.push(p);
            }
        }
    }
    cloud.sort_by(|x, y| x.point.cmp(&y.point));

    let epsilon_dense = match (&opts.window, &opts.epsilon) {
        (Some((lo, hi)), Some(eps)) => Some(window_dense(&cloud, lo, hi, eps)?),
        _ => None,
    };
    let (largest_gap, largest_gap_length) = largest_gap(&cloud)?;
    Ok(LimitSetReport {
        ball_size: ball.elements.len(),
        deduplicated: ball.deduplicated,
        cloud,
        window: opts.window.clone(),
        epsilon: opts.epsilon.clone(),
        epsilon_dense,
        largest_gap,
        largest_gap_length,
    })
}

/// Every point of `[lo, hi]` is within `eps` of a cloud point in the window.
fn window_dense(cloud: &[CloudPoint], lo: &Qs, hi: &Qs, eps: &Qs) -> Result<bool> {
    let mut xs: Vec<&Qs> = cloud.iter().filter_map(|c| c.point.chart()).filter(|x| lo <= *x && *x <= hi).collect();
    xs.sort();
    let Some(first) = xs.first() else { return Ok(false) };
    if **first > lo.try_add(eps)? {
        return Ok(false);
    }
    if hi > &xs[xs.len() - 1].try_add(eps)? {
        return Ok(false);
    }
    let two_eps = eps.try_add(eps)?;
    for w in xs.windows(2) {
        if w[1] > &w[0].try_add(&two_eps)? {
            return Ok(false);
        }
    }
    Ok(true)
}

fn largest_gap(cloud: &[CloudPoint]) -> Result<(Option<(CirclePoint, CirclePoint)>, Option<f64>)> {
    if cloud.is_empty() {
        return Ok((None, None));
    }
    let Some(us) = cloud.iter().map(|c| c.point.circle_coordinate()).collect::<Option<Vec<Qs>>>() else {
        return Ok((None, None));
    };
    let mut order: Vec<usize> = (0..us.len()).collect();
    order.sort_by(|&i, &j| us[i].cmp(&us[j]));
    // lengths may mix fields, so rank them by floating enclosures
    let mut best = (f64::MIN, 0usize);
    for k in 0..order.len() {
        let (i, j) = (order[k], order[(k + 1) % order.len()]);
        let mut len = us[j].to_f64() - us[i].to_f64();
        if len <= 0.0 {
            len += 1.0;
        }
        if len > best.0 {
            best = (len, k);
        }
    }
    let (i, j) = (order[best.1], order[(best.1 + 1) % order.len()]);
    Ok((Some((cloud[i].point.clone(), cloud[j].point.clone())), Some(best.0)))
}

/// Result of counting returns of a finite family to a product of three arcs.
#[derive(Clone, Debug)]
pub struct TripleReport {
    pub return_count: usize,
    /// Indices of the returning elements.
    pub witnesses: Vec<usize>,
}

fn image_arc(g: &CircleMap, a: &Arc) -> Result<Arc> {
    let (s, e) = (g.apply(&a.start)?, g.apply(&a.end)?);
    if g.is_orientation_preserving() {
        Arc::new(s, e)
    } else {
        Arc::new(e, s)
    }
}

/// Counts the elements `g` mapping some triple of `A0 x A1 x A2` (up to
/// cyclic relabelling) back into it.
pub fn triple_discontinuity(elements: &[CircleMap], arcs: &[Arc; 3]) -> Result<TripleReport> {
    for i in 0..3 {
        for j in i + 1..3 {
            if arcs[i].intersects(&arcs[j]) {
                return Err(Error::Invalid(format!("arcs {i} and {j} meet")));
            }
        }
    }
    let hits: Vec<Result<bool>> = elements
        .par_iter()
        .map(|g| {
            let imgs = arcs.iter().map(|a| image_arc(g, a)).collect::<Result<Vec<_>>>()?;
            Ok((0..3).any(|s| (0..3).all(|i| imgs[i].intersects(&arcs[(i + s) % 3]))))
        })
        .collect();
    let mut witnesses = Vec::new();
    for (i, h) in hits.into_iter().enumerate() {
        if h? {
            witnesses.push(i);
        }
    }
    Ok(TripleReport { return_count: witnesses.len(), witnesses })
}

#[derive(Clone, Debug)]
pub struct NorthSouthEntry {
    pub attracting: CirclePoint,
    pub repelling: CirclePoint,
    /// Circle length of `g` applied to the complement of the
    /// `epsilon`-neighbourhood of `repelling`.
    pub diameter: Qs,
}

#[derive(Clone, Debug)]
pub struct NorthSouthReport {
    pub entries: Vec<NorthSouthEntry>,
    pub non_increasing: bool,
    pub strictly_decreasing: bool,
}

impl NorthSouthReport {
    /// Whether some element contracts below `1 - 2 epsilon`.
    pub fn any_contraction(&self, epsilon: &Qs) -> bool {
        let full = Qs::one() - epsilon * &Qs::integer(2);
        self.entries.iter().any(|e| e.diameter < full)
    }
}

fn ns_candidate(g: &CircleMap, b: &CirclePoint, eps: &Qs) -> Result<Qs> {
    let model = b.model();
    let ub = coordinate(b)?;
    let s = CirclePoint::from_circle_coordinate(model, &ub.try_add(eps)?)?;
    let e = CirclePoint::from_circle_coordinate(model, &ub.try_sub(eps)?)?;
    let (gs, ge) = (coordinate(&g.apply(&s)?)?, coordinate(&g.apply(&e)?)?);
    let d = ge.try_sub(&gs)?;
    Ok(if d <= Qs::zero() { d + Qs::one() } else { d })
}

/// For each map, the repelling candidate `b` whose complement neighbourhood
/// is contracted most, and the resulting image length.
pub fn north_south_diagnostic(sequence: &[CircleMap], eps: &Qs) -> Result<NorthSouthReport> {
    if eps <= &Qs::zero() || eps >= &Qs::ratio(1, 4) {
        return Err(Error::Invalid("epsilon must lie in (0, 1/4)".into()));
    }
    let entries = sequence
        .par_iter()
        .map(|g| {
            if !g.is_orientation_preserving() {
                return Err(Error::NotOrientationPreserving);
            }
            let recs = match g.fixed_points() {
                Ok(r) => r,
                Err(Error::AllFixed) => vec![],
                Err(e) => return Err(e),
            };
            let model = g.model();
            let mut candidates: Vec<CirclePoint> = recs.iter().map(|r| r.point.clone()).collect();
            if candidates.is_empty() {
                for k in 0..8 {
                    candidates.push(CirclePoint::from_circle_coordinate(model, &Qs::ratio(k, 8))?);
                }
            }
            let mut best: Option<(Qs, CirclePoint)> = None;
            for b in candidates {
                let d = ns_candidate(g, &b, eps)?;
                if best.as_ref().is_none_or(|(bd, _)| &d < bd) {
                    best = Some((d, b));
                }
            }
            let (diameter, repelling) = best.expect("candidates");
            let attracting = if let Some(r) = recs.iter().find(|r| r.is_attracting()) {
                r.point.clone()
            } else if recs.len() == 1 {
                recs[0].point.clone()
            } else {
                let ub = coordinate(&repelling)?;
                g.apply(&CirclePoint::from_circle_coordinate(model, &ub.try_add(&Qs::ratio(1, 2))?)?)?
            };
            Ok(NorthSouthEntry { attracting, repelling, diameter })
        })
        .collect::<Result<Vec<_>>>()?;
    let non_increasing = entries.windows(2).all(|w| w[1].diameter <= w[0].diameter);
    let strictly_decreasing = entries.windows(2).all(|w| w[1].diameter < w[0].diameter);
    Ok(NorthSouthReport { entries, non_increasing, strictly_decreasing })
}

/// Distance on the circle between two points with exact coordinates.
pub fn point_distance(p: &CirclePoint, q: &CirclePoint) -> Result<Qs> {
    Ok(circle_distance(&coordinate(p)?, &coordinate(q)?))
}

impl fmt::Display for ElementClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ElementClass::Torsion(k) => write!(f, "torsion of order {k}"),
            ElementClass::Elliptic => write!(f, "elliptic"),
            ElementClass::Parabolic => write!(f, "parabolic"),
            ElementClass::Hyperbolic => write!(f, "hyperbolic"),
            ElementClass::PseudoAnosovLike { power, fixed } => write!(f, "pseudo-Anosov-like ({power}, {fixed})"),
            ElementClass::Other(s) => write!(f, "other: {s}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn free2() -> GroupAction {
        let mut a = GroupAction::moebius(&[("A", [1, 2, 0, 1]), ("B", [1, 0, 2, 1])]).unwrap();
        a.assume_free = true;
        a
    }

    #[test]
    fn free_ball_counts() {
        assert_eq!(enumerate_ball(&free2(), 1).unwrap().elements.len(), 4);
        assert_eq!(enumerate_ball(&free2(), 2).unwrap().elements.len(), 16);
    }

    #[test]
    fn modular_ball_is_smaller_after_dedup() {
        let ball = enumerate_ball(&GroupAction::modular(), 4).unwrap();
        assert!(ball.deduplicated);
        assert!(ball.elements.len() < 4 + 12 + 36 + 108);
        // S and S^-1 are the same projective map
        let first: Vec<String> = ball.elements.iter().take(3).map(|(w, _)| GroupAction::modular().format_word(w)).collect();
        assert_eq!(first, ["S", "T", "T^-1"]);
    }

    #[test]
    fn word_parsing() {
        let a = GroupAction::modular();
        let w = a.parse_word("S.T^-1.T.S^-1").unwrap();
        assert!(w.is_empty());
        let w = a.parse_word("S.T^-1").unwrap();
        assert_eq!(a.format_word(&w), "S.T^-1");
        assert!(a.parse_word("X").is_err());
    }

    #[test]
    fn classification_examples() {
        let m = GroupAction::modular();
        let t = m.parse_word("T").unwrap();
        assert_eq!(classify_element(&m, &t, 12).unwrap(), ElementClass::Parabolic);
        assert_eq!(classify_element(&m, &m.parse_word("S").unwrap(), 12).unwrap(), ElementClass::Torsion(2));
        assert_eq!(classify_element(&m, &m.parse_word("S.T").unwrap(), 12).unwrap(), ElementClass::Torsion(3));
        let f = free2();
        assert_eq!(classify_element(&f, &f.parse_word("A.B").unwrap(), 6).unwrap(), ElementClass::Hyperbolic);
    }

    #[test]
    fn single_parabolic_cloud() {
        let a = GroupAction::moebius(&[("T", [1, 1, 0, 1])]).unwrap();
        for r in 1..4 {
            let rep = fixed_point_cloud(&a, r, 4, &CloudOptions::default()).unwrap();
            assert_eq!(rep.cloud.len(), 1);
            assert!(rep.cloud[0].point.is_infinity());
        }
    }

    #[test]
    fn identity_returns_once() {
        let id = CircleMap::moebius(1, 0, 0, 1).unwrap();
        let arcs = [
            Arc::new(CirclePoint::rational(0, 1), CirclePoint::rational(1, 1)).unwrap(),
            Arc::new(CirclePoint::rational(2, 1), CirclePoint::rational(3, 1)).unwrap(),
            Arc::new(CirclePoint::rational(-3, 1), CirclePoint::rational(-2, 1)).unwrap(),
        ];
        assert_eq!(triple_discontinuity(&[id], &arcs).unwrap().return_count, 1);
    }
}
