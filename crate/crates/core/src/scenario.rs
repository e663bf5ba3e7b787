//! Scenario files: a circle model, generators, seeds and an ordered list of
//! checks. See `docs/scenario.md` for the schema.
//!
//! Points are decoded in the context of a model: a bare scalar is a real
//! number on the projective line, an angle on the angle circle and a base
//! point on the blown-up circle.

use std::collections::{BTreeMap, BTreeSet};
use std::time::Instant;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::certificate::Certificate;
use crate::circle::{Arc, Chord, CirclePoint, Model};
use crate::codec::{point_from_value, scalar_from_value};
use crate::constructions::{
    denjoy, denjoy_tessellation, density_in_order, farey, geodesic_lift_lamination, interval_boundary, pa_like_map,
    RotationLinkingSearch,
};
use crate::error::{Error, Result};
use crate::group::{classify_map, fixed_point_cloud, north_south_diagnostic, triple_discontinuity, CloudOptions, ElementClass, GroupAction, Word};
use crate::lamination::{
    check_collection, coverage_report, gaps, materialize, rainbow, rational_or_infinity, very_full_stats, CollectionMode,
    Lamination, Materialized, Rainbow, Recipe,
};
use crate::maps::{ArcAffineInvolution, BlownCircle, BlowupRotation, CircleMap, PiecewiseAffine, TreeShift};
use crate::moore::{induced_fixed_classes, looseness_check, moore_complex, FixedClasses};
use crate::report::{CheckReport, LaminationDoc, Report, Timings};
use crate::scalar::{Qs, Rational};

pub const SCENARIO_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Scenario {
    pub version: u32,
    #[serde(default)]
    pub name: String,
    pub model: Model,
    /// Restricts every scalar to `Q(sqrt(radicand))`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub radicand: Option<u64>,
    #[serde(default)]
    pub generators: Vec<GeneratorSpec>,
    /// Skip deduplication of ball elements.
    #[serde(default)]
    pub assume_free: bool,
    #[serde(default)]
    pub seeds: Vec<[Value; 2]>,
    #[serde(default = "default_depth")]
    pub depth: u32,
    #[serde(default)]
    pub cusp_oracle: CuspOracle,
    /// Copy every stored lamination into the report.
    #[serde(default)]
    pub include_laminations: bool,
    #[serde(default)]
    pub checks: Vec<CheckSpec>,
}

fn default_depth() -> u32 {
    3
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CuspOracle {
    #[default]
    None,
    RationalsAndInfinity,
    Points(Vec<Value>),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum GeneratorSpec {
    /// `x -> (a x + b) / (c x + d)` with `matrix = [a, b, c, d]`.
    Moebius { name: String, matrix: [Value; 4] },
    Rotation { name: String, alpha: Value },
    /// Lift knots `[x, X]`.
    PiecewiseAffine { name: String, knots: Vec<[Value; 2]> },
    PaLike { name: String, points: Vec<Value>, attracting: Vec<bool> },
    BlowupRotation { name: String, alpha: Value, #[serde(default = "zero")] base: Value, truncation: u32 },
    Involution { name: String, a: Value, b: Value },
    TreeShift { name: String, sides: u32, shift: i64 },
}

fn zero() -> Value {
    json!(0)
}

impl GeneratorSpec {
    pub fn name(&self) -> &str {
        match self {
            GeneratorSpec::Moebius { name, .. }
            | GeneratorSpec::Rotation { name, .. }
            | GeneratorSpec::PiecewiseAffine { name, .. }
            | GeneratorSpec::PaLike { name, .. }
            | GeneratorSpec::BlowupRotation { name, .. }
            | GeneratorSpec::Involution { name, .. }
            | GeneratorSpec::TreeShift { name, .. } => name,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "check", rename_all = "snake_case", deny_unknown_fields)]
pub enum CheckSpec {
    Farey {
        qmax: u32,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        window: Option<[Value; 2]>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        store_as: Option<String>,
    },
    /// Orbit of the scenario seeds (or the given ones) under the generators.
    Materialize {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        seeds: Option<Vec<[Value; 2]>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        depth: Option<u32>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        store_as: Option<String>,
    },
    GeodesicLift {
        word: String,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        radius: Option<u32>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        store_as: Option<String>,
    },
    /// Stores `<store_as>.attracting` and `<store_as>.repelling`.
    Polygons { generator: String, store_as: String },
    Denjoy {
        alpha: Value,
        #[serde(default = "zero")]
        base: Value,
        truncation: u32,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        store_as: Option<String>,
    },
    Tessellation {
        alpha: Value,
        #[serde(default = "zero")]
        base: Value,
        truncation: u32,
        depth: u32,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        only_side: Option<i64>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        store_as: Option<String>,
    },
    Gaps { lamination: String },
    Rainbow {
        lamination: String,
        point: Value,
        #[serde(default = "one_u32")]
        min_chain: u32,
    },
    Coverage { lamination: String, epsilon: Value, window: [Value; 2] },
    Collection { laminations: Vec<String>, mode: CollectionMode },
    Looseness { lamination: String },
    Moore { laminations: [String; 2], word: String },
    Classify {
        word: String,
        #[serde(default = "default_power_bound")]
        power_bound: u32,
    },
    RotationLinking {
        alpha: Value,
        chord: [Value; 2],
        #[serde(default = "default_n_max")]
        n_max: u64,
    },
    RotationNumber {
        word: String,
        iterations: u32,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        contains: Option<Value>,
    },
    LimitSet {
        radius: u32,
        #[serde(default = "default_power_bound")]
        power_bound: u32,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        epsilon: Option<Value>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        window: Option<[Value; 2]>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        min_gap: Option<Value>,
    },
    NorthSouth { words: Vec<String>, epsilon: Value },
    Triple {
        words: Vec<String>,
        arcs: [[Value; 2]; 3],
        #[serde(default, skip_serializing_if = "Option::is_none")]
        max_returns: Option<usize>,
    },
}

fn one_u32() -> u32 {
    1
}

fn default_power_bound() -> u32 {
    12
}

fn default_n_max() -> u64 {
    1000
}

impl CheckSpec {
    pub fn kind(&self) -> String {
        serde_json::to_value(self)
            .ok()
            .and_then(|v| v.get("check").and_then(Value::as_str).map(str::to_owned))
            .unwrap_or_default()
    }

    fn reads(&self) -> Vec<&str> {
        match self {
            CheckSpec::Gaps { lamination }
            | CheckSpec::Rainbow { lamination, .. }
            | CheckSpec::Coverage { lamination, .. }
            | CheckSpec::Looseness { lamination } => vec![lamination],
            CheckSpec::Collection { laminations, .. } => laminations.iter().map(String::as_str).collect(),
            CheckSpec::Moore { laminations, .. } => laminations.iter().map(String::as_str).collect(),
            _ => vec![],
        }
    }

    /// Names of the laminations this check stores.
    pub fn writes(&self) -> Vec<String> {
        match self {
            CheckSpec::Farey { store_as, .. }
            | CheckSpec::Materialize { store_as, .. }
            | CheckSpec::GeodesicLift { store_as, .. }
            | CheckSpec::Denjoy { store_as, .. }
            | CheckSpec::Tessellation { store_as, .. } => store_as.iter().cloned().collect(),
            CheckSpec::Polygons { store_as, .. } => vec![format!("{store_as}.attracting"), format!("{store_as}.repelling")],
            _ => vec![],
        }
    }

    fn words(&self) -> Vec<&str> {
        match self {
            CheckSpec::GeodesicLift { word, .. }
            | CheckSpec::Moore { word, .. }
            | CheckSpec::Classify { word, .. }
            | CheckSpec::RotationNumber { word, .. } => vec![word],
            CheckSpec::NorthSouth { words, .. } | CheckSpec::Triple { words, .. } => {
                words.iter().map(String::as_str).collect()
            }
            _ => vec![],
        }
    }
}

impl Scenario {
    pub fn from_json(text: &str) -> Result<Self> {
        let s: Scenario = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        Ok(s)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("scenario serializes")
    }
}

/// A bare scalar means a point in the given model; objects and `"inf"` are
/// self-describing.
pub fn decode_point(model: Model, v: &Value) -> Result<CirclePoint> {
    let p = match (model, v) {
        (Model::Angle, Value::String(s)) if s != "inf" => CirclePoint::angle(scalar_from_value(v)?),
        (Model::Angle, Value::Number(_)) => CirclePoint::angle(scalar_from_value(v)?),
        (Model::Angle, Value::Object(m)) if m.contains_key("surd") || m.contains_key("rational") => {
            CirclePoint::angle(scalar_from_value(v)?)
        }
        (Model::BlownUp, Value::String(_) | Value::Number(_)) => {
            CirclePoint::BlownUp(crate::circle::BlownPoint::Base(scalar_from_value(v)?.fract()))
        }
        _ => point_from_value(v)?,
    };
    if p.model() != model {
        return Err(Error::ModelMismatch { expected: model, found: p.model() });
    }
    Ok(p)
}

pub fn decode_chord(model: Model, v: &[Value; 2]) -> Result<Chord> {
    Chord::new(decode_point(model, &v[0])?, decode_point(model, &v[1])?)
}

fn decode_rational(v: &Value) -> Result<Rational> {
    let q = scalar_from_value(v)?;
    q.as_rational().cloned().ok_or_else(|| Error::Parse(format!("expected a rational, got {q}")))
}

/// The scalar parser also accepts the keyword `golden` for `(sqrt(5) - 1) / 2`.
pub fn decode_angle(v: &Value) -> Result<Qs> {
    if v.as_str() == Some("golden") {
        return Ok(Qs::golden() - Qs::one());
    }
    scalar_from_value(v)
}

fn build_generator(g: &GeneratorSpec) -> Result<CircleMap> {
    Ok(match g {
        GeneratorSpec::Moebius { matrix, .. } => {
            let [a, b, c, d] = matrix;
            CircleMap::Moebius(crate::maps::MoebiusMap::new(
                scalar_from_value(a)?,
                scalar_from_value(b)?,
                scalar_from_value(c)?,
                scalar_from_value(d)?,
            )?)
        }
        GeneratorSpec::Rotation { alpha, .. } => CircleMap::rotation(decode_angle(alpha)?),
        GeneratorSpec::PiecewiseAffine { knots, .. } => CircleMap::PiecewiseAffine(PiecewiseAffine::new(
            knots.iter().map(|[x, y]| Ok((scalar_from_value(x)?, scalar_from_value(y)?))).collect::<Result<_>>()?,
        )?),
        GeneratorSpec::PaLike { points, attracting, .. } => {
            let pts = points.iter().map(scalar_from_value).collect::<Result<Vec<_>>>()?;
            pa_like_map(pts, attracting.clone())?.map
        }
        GeneratorSpec::BlowupRotation { alpha, base, truncation, .. } => CircleMap::BlowupRotation(BlowupRotation::new(
            BlownCircle::new(decode_angle(alpha)?, scalar_from_value(base)?, *truncation)?,
        )),
        GeneratorSpec::Involution { a, b, .. } => {
            CircleMap::ArcAffineInvolution(ArcAffineInvolution::new(scalar_from_value(a)?, scalar_from_value(b)?)?)
        }
        GeneratorSpec::TreeShift { sides, shift, .. } => {
            if *sides == 0 {
                return Err(Error::Invalid("a tree shift needs at least one side".into()));
            }
            CircleMap::TreeAutomorphism(TreeShift { sides: *sides, shift: *shift })
        }
    })
}

/// Collects every scalar-looking leaf of a JSON value.
fn scalars_in(v: &Value, out: &mut Vec<Qs>) {
    match v {
        Value::String(_) | Value::Number(_) => {
            if let Ok(q) = decode_angle(v) {
                out.push(q);
            }
        }
        Value::Object(m) if m.contains_key("surd") || m.contains_key("rational") => {
            if let Ok(q) = scalar_from_value(v) {
                out.push(q);
            }
        }
        Value::Object(m) => m.values().for_each(|x| scalars_in(x, out)),
        Value::Array(a) => a.iter().for_each(|x| scalars_in(x, out)),
        _ => {}
    }
}

/// A validated scenario ready to run.
pub struct Prepared {
    pub scenario: Scenario,
    pub action: Option<GroupAction>,
    pub seeds: Vec<Chord>,
    pa_specs: BTreeMap<String, (Vec<Qs>, Vec<bool>)>,
}

/// Checks everything that can be checked without running: version, field,
/// generator models, seeds, words and lamination names.
pub fn prepare(scenario: Scenario) -> Result<Prepared> {
    if scenario.version != SCENARIO_VERSION {
        return Err(Error::Parse(format!("unsupported scenario version {}", scenario.version)));
    }
    if let Some(d) = scenario.radicand {
        let mut all = Vec::new();
        scalars_in(&serde_json::to_value(&scenario.generators)?, &mut all);
        scalars_in(&serde_json::to_value(&scenario.seeds)?, &mut all);
        scalars_in(&serde_json::to_value(&scenario.checks)?, &mut all);
        if let Some(q) = all.iter().find(|q| !q.is_rational() && q.radicand() != d) {
            return Err(Error::UnsupportedField(q.radicand(), d));
        }
    }
    let mut names = BTreeSet::new();
    let mut gens = Vec::new();
    let mut pa_specs = BTreeMap::new();
    for g in &scenario.generators {
        if !names.insert(g.name().to_owned()) {
            return Err(Error::Invalid(format!("duplicate generator `{}`", g.name())));
        }
        let m = build_generator(g)?;
        if m.model() != scenario.model {
            return Err(Error::ModelMismatch { expected: scenario.model, found: m.model() });
        }
        if let GeneratorSpec::PaLike { name, points, attracting } = g {
            let pts = points.iter().map(scalar_from_value).collect::<Result<Vec<_>>>()?;
            pa_specs.insert(name.clone(), (pts, attracting.clone()));
        }
        gens.push((g.name().to_owned(), m));
    }
    let action = if gens.is_empty() { None } else { Some(GroupAction::new(gens, scenario.assume_free)?) };
    let seeds = scenario.seeds.iter().map(|c| decode_chord(scenario.model, c)).collect::<Result<Vec<_>>>()?;

    let mut stored: BTreeSet<String> = BTreeSet::new();
    for (i, c) in scenario.checks.iter().enumerate() {
        for r in c.reads() {
            if !stored.contains(r) {
                return Err(Error::Invalid(format!("check {i} reads `{r}` before it is stored")));
            }
        }
        for w in c.words() {
            let a = action.as_ref().ok_or_else(|| Error::Invalid(format!("check {i} needs generators")))?;
            a.parse_word(w)?;
        }
        match c {
            CheckSpec::Polygons { generator, .. } if !pa_specs.contains_key(generator) => {
                return Err(Error::Invalid(format!("`{generator}` is not a pa_like generator")));
            }
            CheckSpec::Materialize { seeds: None, .. } if seeds.is_empty() => {
                return Err(Error::Invalid(format!("check {i} materializes but the scenario has no seeds")));
            }
            CheckSpec::Moore { .. } | CheckSpec::LimitSet { .. } if action.is_none() => {
                return Err(Error::Invalid(format!("check {i} needs generators")));
            }
            _ => {}
        }
        stored.extend(c.writes());
    }
    Ok(Prepared { scenario, action, seeds, pa_specs })
}

/// What one check produced.
pub struct Outcome {
    pub certificate: Certificate,
    pub counts: BTreeMap<String, u64>,
    pub stored: Vec<(String, Lamination)>,
}

impl Outcome {
    fn new(certificate: Certificate) -> Self {
        Self { certificate, counts: BTreeMap::new(), stored: vec![] }
    }

    fn count(mut self, k: &str, v: usize) -> Self {
        self.counts.insert(k.into(), v as u64);
        self
    }

    fn store(mut self, name: &Option<String>, lam: &Lamination) -> Self {
        if let Some(n) = name {
            self.stored.push((n.clone(), lam.clone()));
        }
        self
    }
}

/// Runs the checks in order.
pub struct Runner {
    pub prepared: Prepared,
    pub laminations: BTreeMap<String, Lamination>,
}

fn lamination_outcome(m: Materialized, store_as: &Option<String>, depth: u32) -> Outcome {
    match m {
        Materialized::Lamination(l) => Outcome::new(Certificate::proven(json!({ "note": l.note(), "depth": depth })))
            .count("leaves", l.len())
            .store(store_as, &l),
        Materialized::Linked(w) => Outcome::new(Certificate::refuted(w, json!({ "depth": depth }))),
    }
}

fn chord_list(cs: &[Chord]) -> Value {
    serde_json::to_value(cs).expect("chords serialize")
}

impl Runner {
    pub fn new(prepared: Prepared) -> Self {
        Self { prepared, laminations: BTreeMap::new() }
    }

    fn model(&self) -> Model {
        self.prepared.scenario.model
    }

    fn action(&self) -> Result<&GroupAction> {
        self.prepared.action.as_ref().ok_or_else(|| Error::Invalid("the scenario has no generators".into()))
    }

    fn word(&self, w: &str) -> Result<(Word, CircleMap)> {
        let a = self.action()?;
        let word = a.parse_word(w)?;
        let m = a.evaluate(&word)?;
        Ok((word, m))
    }

    fn lam(&self, name: &str) -> Result<&Lamination> {
        self.laminations.get(name).ok_or_else(|| Error::Invalid(format!("no lamination `{name}`")))
    }

    pub fn execute(&mut self, check: &CheckSpec) -> Result<Outcome> {
        let depth = self.prepared.scenario.depth;
        Ok(match check {
            CheckSpec::Farey { qmax, window, store_as } => {
                let (lo, hi) = match window {
                    Some([a, b]) => (decode_rational(a)?, decode_rational(b)?),
                    None => (Rational::from_integer(0.into()), Rational::from_integer(1.into())),
                };
                let l = farey(*qmax, &lo, &hi)?;
                Outcome::new(Certificate::proven(json!({ "qmax": qmax, "window": [lo.to_string(), hi.to_string()] })))
                    .count("leaves", l.len())
                    .store(store_as, &l)
            }
            CheckSpec::Materialize { seeds, depth: d, store_as } => {
                let seeds = match seeds {
                    Some(s) => s.iter().map(|c| decode_chord(self.model(), c)).collect::<Result<Vec<_>>>()?,
                    None => self.prepared.seeds.clone(),
                };
                let d = d.unwrap_or(depth);
                let m = materialize(&Recipe { seeds, action: self.prepared.action.clone(), depth: d })?;
                lamination_outcome(m, store_as, d)
            }
            CheckSpec::GeodesicLift { word, radius, store_as } => {
                let r = radius.unwrap_or(depth);
                let w = self.action()?.parse_word(word)?;
                lamination_outcome(geodesic_lift_lamination(self.action()?, &w, r)?, store_as, r)
            }
            CheckSpec::Polygons { generator, store_as } => {
                let (pts, flags) = self.prepared.pa_specs[generator].clone();
                let spec = pa_like_map(pts, flags)?;
                let a = &spec.attracting_polygon;
                let r = &spec.repelling_polygon;
                let fixed = |c: &Chord| -> Result<bool> { Ok(&Chord::new(spec.map.apply(c.lo())?, spec.map.apply(c.hi())?)? == c) };
                let mut invariant = true;
                for c in a.leaves().iter().chain(r.leaves()) {
                    invariant &= fixed(c)?;
                }
                let cert = if invariant {
                    Certificate::proven(json!({ "attracting": chord_list(a.leaves()), "repelling": chord_list(r.leaves()) }))
                } else {
                    Certificate::unknown(0, json!({ "reason": "polygon chords moved" }))
                };
                let mut o = Outcome::new(cert).count("leaves", a.len() + r.len());
                o.stored.push((format!("{store_as}.attracting"), a.clone()));
                o.stored.push((format!("{store_as}.repelling"), r.clone()));
                o
            }
            CheckSpec::Denjoy { alpha, base, truncation, store_as } => {
                let s = denjoy(decode_angle(alpha)?, scalar_from_value(base)?, *truncation)?;
                let t = *truncation as i64;
                let mut shifts = true;
                for j in -t..t {
                    let c = interval_boundary(&s.circle, j)?;
                    let img = Chord::new(s.map.apply(c.lo())?, s.map.apply(c.hi())?)?;
                    shifts &= img == interval_boundary(&s.circle, j + 1)?;
                }
                let detail = json!({
                    "sides": s.side_indices,
                    "boundary_shift_exact": shifts,
                    "central_gap_sides": s.central_gap.chords.len(),
                });
                let cert = if shifts && s.central_gap.chords.len() == s.lamination.len() {
                    Certificate::proven(detail)
                } else {
                    Certificate::unknown(*truncation, detail)
                };
                Outcome::new(cert).count("leaves", s.lamination.len()).store(store_as, &s.lamination)
            }
            CheckSpec::Tessellation { alpha, base, truncation, depth: d, only_side, store_as } => {
                let s = denjoy(decode_angle(alpha)?, scalar_from_value(base)?, *truncation)?;
                let t = denjoy_tessellation(&s, *d, *only_side)?;
                // a single reflected branch is not expected to be dense
                let dense = only_side.is_none().then(|| density_in_order(&t));
                let detail = json!({ "sides": t.sides, "depth": d, "density_in_order": dense });
                let cert = if dense != Some(false) { Certificate::proven(detail) } else { Certificate::unknown(*d, detail) };
                Outcome::new(cert).count("leaves", t.lamination.len()).store(store_as, &t.lamination)
            }
            CheckSpec::Gaps { lamination } => {
                let l = self.lam(lamination)?;
                let faces = gaps(l);
                let stats = very_full_stats(&faces);
                let mut by_chords: BTreeMap<String, usize> = BTreeMap::new();
                for f in &faces {
                    *by_chords.entry(f.chords.len().to_string()).or_default() += 1;
                }
                let resolved = faces.iter().all(|f| f.is_lune() || (f.chords.len() >= 3 && f.is_ideal_polygon()));
                let detail = json!({
                    "faces_by_chord_count": by_chords,
                    "ideal_polygons": stats.ideal_polygons,
                    "frontier_lunes": stats.frontier_lunes,
                    "max_chords_per_face": stats.max_chords_per_face,
                    "euler": faces.len() == l.len() + 1,
                });
                let cert = if resolved { Certificate::proven(detail) } else { Certificate::unknown(l.depth().unwrap_or(0), detail) };
                Outcome::new(cert).count("leaves", l.len()).count("faces", faces.len())
            }
            CheckSpec::Rainbow { lamination, point, min_chain } => {
                let l = self.lam(lamination)?;
                let p = decode_point(l.model(), point)?;
                let d = l.depth().unwrap_or(0);
                match rainbow(l, &p)? {
                    Rainbow::EndpointCertificate(c) => {
                        Outcome::new(Certificate::proven(json!({ "kind": "endpoint", "point": p, "leaf": c })))
                    }
                    Rainbow::RainbowChain(chain) if chain.len() >= *min_chain as usize => Outcome::new(
                        Certificate::proven(json!({ "kind": "rainbow", "point": p, "chain": chord_list(&chain) })),
                    )
                    .count("chain", chain.len()),
                    Rainbow::RainbowChain(chain) => Outcome::new(Certificate::unknown(
                        d,
                        json!({ "kind": "short_rainbow", "point": p, "chain": chord_list(&chain) }),
                    ))
                    .count("chain", chain.len()),
                    Rainbow::Unknown => Outcome::new(Certificate::unknown(d, json!({ "kind": "unknown", "point": p }))),
                }
            }
            CheckSpec::Coverage { lamination, epsilon, window } => {
                let l = self.lam(lamination)?;
                let eps = scalar_from_value(epsilon)?;
                let (lo, hi) = (scalar_from_value(&window[0])?, scalar_from_value(&window[1])?);
                let r = coverage_report(l, &eps, (&lo, &hi))?;
                let detail = json!({
                    "dense": r.dense,
                    "boundary_full": r.boundary_full,
                    "worst_gap": r.worst_gap,
                    "missing_short_leaf": r.missing_short_leaf,
                });
                Outcome::new(if r.dense && r.boundary_full {
                    Certificate::proven(detail)
                } else {
                    Certificate::unknown(l.depth().unwrap_or(0), detail)
                })
            }
            CheckSpec::Collection { laminations, mode } => {
                let lams = laminations.iter().map(|n| self.lam(n).cloned()).collect::<Result<Vec<_>>>()?;
                let pts = match &self.prepared.scenario.cusp_oracle {
                    CuspOracle::Points(ps) => ps.iter().map(|v| decode_point(self.model(), v)).collect::<Result<BTreeSet<_>>>()?,
                    _ => BTreeSet::new(),
                };
                let listed = |p: &CirclePoint| pts.contains(p);
                let oracle: Option<&dyn Fn(&CirclePoint) -> bool> = match &self.prepared.scenario.cusp_oracle {
                    CuspOracle::None => None,
                    CuspOracle::RationalsAndInfinity => Some(&rational_or_infinity),
                    CuspOracle::Points(_) => Some(&listed),
                };
                Outcome::new(check_collection(&lams, *mode, oracle)?)
            }
            CheckSpec::Looseness { lamination } => Outcome::new(looseness_check(self.lam(lamination)?)),
            CheckSpec::Moore { laminations, word } => {
                let (l1, l2) = (self.lam(&laminations[0])?, self.lam(&laminations[1])?);
                for l in [l1, l2] {
                    let c = looseness_check(l);
                    if c.is_refuted() {
                        return Ok(Outcome::new(c));
                    }
                }
                let mc = moore_complex(l1, l2)?;
                let (_, m) = self.word(word)?;
                let parabolic = classify_map(&m, 1).ok() == Some(ElementClass::Parabolic);
                let caveat = "only class finiteness is certified; upper semicontinuity and non-separation are not";
                let mut detail = json!({
                    "classes": mc.len(),
                    "largest_class": mc.largest_class(),
                    "caveat": caveat,
                });
                if parabolic {
                    detail["parabolic"] = json!("the map is parabolic, outside the verified hypotheses");
                }
                let o = match induced_fixed_classes(&mc, &m)? {
                    FixedClasses::Counted { count, classes } => {
                        detail["fixed_classes"] =
                            json!(classes.iter().map(|&k| mc.classes[k].clone()).collect::<Vec<_>>());
                        detail["fixed_count"] = json!(count);
                        let cert = if count <= 2 { Certificate::proven(detail) } else { Certificate::unknown(depth, detail) };
                        Outcome::new(cert).count("fixed_classes", count)
                    }
                    FixedClasses::AllFixed => {
                        detail["fixed_count"] = json!("all");
                        Outcome::new(Certificate::unknown(depth, detail))
                    }
                    FixedClasses::Unknown { reason } => {
                        detail["reason"] = json!(reason);
                        Outcome::new(Certificate::unknown(depth, detail))
                    }
                };
                o.count("classes", mc.len())
            }
            CheckSpec::Classify { word, power_bound } => {
                let (_, m) = self.word(word)?;
                let class = classify_map(&m, *power_bound)?;
                let mut detail = json!({ "word": word, "class": class });
                if let CircleMap::Moebius(mm) = &m {
                    detail["trace"] = json!(mm.trace());
                    detail["matrix"] = json!(mm.entries());
                }
                if let Ok(recs) = m.fixed_points() {
                    detail["fixed_points"] = json!(recs
                        .iter()
                        .map(|r| json!({ "point": r.point, "left": r.left, "right": r.right }))
                        .collect::<Vec<_>>());
                }
                Outcome::new(Certificate::proven(detail))
            }
            CheckSpec::RotationLinking { alpha, chord, n_max } => {
                let c = decode_chord(Model::Angle, chord)?;
                let search = RotationLinkingSearch::new(decode_angle(alpha)?, *n_max)?;
                match search.witness(&c)? {
                    Some(w) => Outcome::new(Certificate::refuted(w, json!({ "n_max": n_max }))),
                    None => Outcome::new(Certificate::unknown(*n_max as u32, json!({ "chord": c }))),
                }
            }
            CheckSpec::RotationNumber { word, iterations, contains } => {
                let (_, m) = self.word(word)?;
                let r = m.rotation_number(*iterations)?;
                let mut detail = json!({ "lo": r.lo.to_string(), "hi": r.hi.to_string() });
                let ok = match contains {
                    Some(v) => {
                        let x = decode_angle(v)?;
                        detail["contains"] = json!(x);
                        r.contains(&x)
                    }
                    None => true,
                };
                Outcome::new(if ok { Certificate::proven(detail) } else { Certificate::unknown(*iterations, detail) })
            }
            CheckSpec::LimitSet { radius, power_bound, epsilon, window, min_gap } => {
                let opts = CloudOptions {
                    window: match window {
                        Some([a, b]) => Some((scalar_from_value(a)?, scalar_from_value(b)?)),
                        None => None,
                    },
                    epsilon: epsilon.as_ref().map(scalar_from_value).transpose()?,
                };
                let r = fixed_point_cloud(self.action()?, *radius, *power_bound, &opts)?;
                let gap_ok = match min_gap {
                    Some(v) => Some(r.largest_gap_at_least(&scalar_from_value(v)?)?),
                    None => None,
                };
                let detail = json!({
                    "ball_size": r.ball_size,
                    "cloud": r.cloud.len(),
                    "epsilon_dense": r.epsilon_dense,
                    "largest_gap": r.largest_gap.as_ref().map(|(a, b)| [a, b]),
                    "largest_gap_length": r.largest_gap_length,
                    "gap_at_least_min": gap_ok,
                });
                let ok = r.epsilon_dense != Some(false) && gap_ok != Some(false);
                Outcome::new(if ok { Certificate::proven(detail) } else { Certificate::unknown(*radius, detail) })
                    .count("cloud", r.cloud.len())
            }
            CheckSpec::NorthSouth { words, epsilon } => {
                let maps = words.iter().map(|w| Ok(self.word(w)?.1)).collect::<Result<Vec<_>>>()?;
                let eps = scalar_from_value(epsilon)?;
                let r = north_south_diagnostic(&maps, &eps)?;
                let detail = json!({
                    "diameters": r.entries.iter().map(|e| e.diameter.clone()).collect::<Vec<_>>(),
                    "strictly_decreasing": r.strictly_decreasing,
                });
                Outcome::new(if r.strictly_decreasing {
                    Certificate::proven(detail)
                } else {
                    Certificate::unknown(words.len() as u32, detail)
                })
            }
            CheckSpec::Triple { words, arcs, max_returns } => {
                let maps = words.iter().map(|w| Ok(self.word(w)?.1)).collect::<Result<Vec<_>>>()?;
                let arc = |v: &[Value; 2]| Arc::new(decode_point(self.model(), &v[0])?, decode_point(self.model(), &v[1])?);
                let arcs = [arc(&arcs[0])?, arc(&arcs[1])?, arc(&arcs[2])?];
                let r = triple_discontinuity(&maps, &arcs)?;
                let detail = json!({ "return_count": r.return_count, "witnesses": r.witnesses });
                let ok = max_returns.is_none_or(|m| r.return_count <= m);
                Outcome::new(if ok { Certificate::proven(detail) } else { Certificate::unknown(words.len() as u32, detail) })
                    .count("returns", r.return_count)
            }
        })
    }
}

/// Validates and runs a scenario. Failures inside a check become `Unknown`
/// outcomes carrying the error; validation failures are returned as errors.
pub fn run_scenario(scenario: Scenario) -> Result<Report> {
    let started = Instant::now();
    let prepared = prepare(scenario)?;
    let include = prepared.scenario.include_laminations;
    let name = prepared.scenario.name.clone();
    let checks = prepared.scenario.checks.clone();
    let mut runner = Runner::new(prepared);
    let mut reports = Vec::new();
    let mut per_check = Vec::new();
    for (index, check) in checks.iter().enumerate() {
        let t = Instant::now();
        let outcome = match runner.execute(check) {
            Ok(o) => o,
            Err(e) => Outcome::new(Certificate::unknown(0, json!({ "error": e.to_string() }))),
        };
        per_check.push(t.elapsed().as_secs_f64() * 1e3);
        let stored: Vec<String> = outcome.stored.iter().map(|(n, _)| n.clone()).collect();
        for (n, l) in outcome.stored {
            runner.laminations.insert(n, l);
        }
        reports.push(CheckReport { index, check: check.kind(), stored, certificate: outcome.certificate, counts: outcome.counts });
    }
    let laminations = if include {
        runner.laminations.iter().map(|(n, l)| (n.clone(), LaminationDoc::from(l))).collect()
    } else {
        BTreeMap::new()
    };
    let timings = Timings { total_ms: started.elapsed().as_secs_f64() * 1e3, per_check_ms: per_check };
    Ok(Report::new(name, reports, laminations, timings))
}
