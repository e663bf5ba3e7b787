//! Finite laminations: materialization, faces, collections, rainbows and
//! coverage audits.

mod collection;
mod coverage;
mod gaps;
mod rainbow;

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;

use crate::certificate::Witness;
use crate::circle::{Chord, CirclePoint, Model};
use crate::error::{Error, Result};
use crate::group::{enumerate_ball, GroupAction};

pub use collection::{check_collection, rational_or_infinity, CollectionMode};
pub use coverage::{coverage_report, CoverageReport};
pub use gaps::{gaps, very_full_stats, ArcStatus, Gap, GapArc, VeryFullStats};
pub use rainbow::{rainbow, Rainbow};

/// A finite set of pairwise unlinked chords, sorted and deduplicated.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lamination {
    model: Model,
    leaves: Vec<Chord>,
    origins: Vec<String>,
    depth: Option<u32>,
    note: String,
}

/// Result of building a lamination from chords that might cross.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Materialized {
    Lamination(Lamination),
    Linked(Witness),
}

impl Materialized {
    pub fn lamination(self) -> Option<Lamination> {
        match self {
            Materialized::Lamination(l) => Some(l),
            Materialized::Linked(_) => None,
        }
    }

    /// The lamination, or an error describing the crossing.
    pub fn expect_unlinked(self) -> Result<Lamination> {
        match self {
            Materialized::Lamination(l) => Ok(l),
            Materialized::Linked(w) => Err(Error::Invalid(format!("chords cross: {w:?}"))),
        }
    }
}

/// Indices of two crossing chords, if any, by one sorted sweep.
///
/// Chords are opened at `lo` and closed at `hi`; at a shared position
/// closings go first (most recently opened first), then openings (longest
/// first). Chords are unlinked exactly when every closing finds its chord on
/// top of the stack.
pub fn find_linked_pair(chords: &[Chord]) -> Option<(usize, usize)> {
    #[derive(PartialEq, Eq)]
    enum Ev {
        Close,
        Open,
    }
    let mut events: Vec<(&CirclePoint, Ev, usize)> = Vec::with_capacity(2 * chords.len());
    for (i, c) in chords.iter().enumerate() {
        events.push((c.lo(), Ev::Open, i));
        events.push((c.hi(), Ev::Close, i));
    }
    events.sort_by(|a, b| {
        a.0.cmp(b.0).then_with(|| match (&a.1, &b.1) {
            (Ev::Close, Ev::Open) => Ordering::Less,
            (Ev::Open, Ev::Close) => Ordering::Greater,
            // later opened closes first
            (Ev::Close, Ev::Close) => chords[b.2].lo().cmp(chords[a.2].lo()),
            // longer opens first
            (Ev::Open, Ev::Open) => chords[b.2].hi().cmp(chords[a.2].hi()),
        })
    });
    let mut stack: Vec<usize> = Vec::new();
    for (_, ev, i) in events {
        match ev {
            Ev::Open => stack.push(i),
            Ev::Close => {
                let top = stack.pop().expect("opened before closed");
                if top != i {
                    return Some((i, top));
                }
            }
        }
    }
    None
}

impl Lamination {
    /// Builds from chords with provenance labels; crossing chords give
    /// [`Materialized::Linked`].
    pub fn with_origins(model: Model, chords: Vec<(Chord, String)>, depth: Option<u32>, note: impl Into<String>) -> Result<Materialized> {
        let mut map: BTreeMap<Chord, String> = BTreeMap::new();
        for (c, o) in chords {
            if c.model() != model {
                return Err(Error::ModelMismatch { expected: model, found: c.model() });
            }
            map.entry(c).or_insert(o);
        }
        let (leaves, origins): (Vec<Chord>, Vec<String>) = map.into_iter().unzip();
        if let Some((i, j)) = find_linked_pair(&leaves) {
            return Ok(Materialized::Linked(Witness::LinkedLeaves {
                first: leaves[i].clone(),
                second: leaves[j].clone(),
                first_origin: Some(origins[i].clone()),
                second_origin: Some(origins[j].clone()),
            }));
        }
        Ok(Materialized::Lamination(Lamination { model, leaves, origins, depth, note: note.into() }))
    }

    pub fn new(model: Model, chords: Vec<Chord>, note: impl Into<String>) -> Result<Materialized> {
        let chords = chords.into_iter().map(|c| (c, String::new())).collect();
        Self::with_origins(model, chords, None, note)
    }

    pub fn empty(model: Model) -> Self {
        Lamination { model, leaves: vec![], origins: vec![], depth: None, note: String::new() }
    }

    pub fn model(&self) -> Model {
        self.model
    }

    pub fn leaves(&self) -> &[Chord] {
        &self.leaves
    }

    pub fn len(&self) -> usize {
        self.leaves.len()
    }

    pub fn is_empty(&self) -> bool {
        self.leaves.is_empty()
    }

    /// Provenance label of a leaf (the word that produced it, if known).
    pub fn origin(&self, i: usize) -> &str {
        &self.origins[i]
    }

    pub fn depth(&self) -> Option<u32> {
        self.depth
    }

    pub fn set_depth(&mut self, depth: u32) {
        self.depth = Some(depth);
    }

    pub fn note(&self) -> &str {
        &self.note
    }

    pub fn contains(&self, c: &Chord) -> bool {
        self.leaves.binary_search(c).is_ok()
    }

    pub fn endpoints(&self) -> BTreeSet<CirclePoint> {
        self.leaves.iter().flat_map(|c| c.endpoints().map(Clone::clone)).collect()
    }

    pub fn is_subset_of(&self, other: &Lamination) -> bool {
        self.leaves.iter().all(|c| other.contains(c))
    }

    /// Leaves having `p` as an endpoint.
    pub fn leaves_at<'a>(&'a self, p: &'a CirclePoint) -> impl Iterator<Item = &'a Chord> + 'a {
        self.leaves.iter().filter(move |c| c.has_endpoint(p))
    }
}

/// Seed leaves pushed through a word ball.
#[derive(Clone, Debug)]
pub struct Recipe {
    pub seeds: Vec<Chord>,
    pub action: Option<GroupAction>,
    pub depth: u32,
}

/// The images of every seed under the identity and every word of length at
/// most `depth`, or a crossing pair with the words that produced it.
pub fn materialize(recipe: &Recipe) -> Result<Materialized> {
    let Some(first) = recipe.seeds.first() else {
        return Err(Error::Invalid("a recipe needs at least one seed".into()));
    };
    let model = first.model();
    let mut chords: Vec<(Chord, String)> =
        recipe.seeds.iter().enumerate().map(|(i, c)| (c.clone(), format!("seed {i}"))).collect();
    if let Some(action) = &recipe.action {
        if action.model() != model {
            return Err(Error::ModelMismatch { expected: model, found: action.model() });
        }
        let ball = enumerate_ball(action, recipe.depth)?;
        let images: Vec<Result<Vec<(Chord, String)>>> = ball
            .elements
            .par_iter()
            .map(|(w, g)| {
                let name = action.format_word(w);
                recipe
                    .seeds
                    .iter()
                    .enumerate()
                    .map(|(i, c)| {
                        let img = Chord::new(g.apply(c.lo())?, g.apply(c.hi())?)?;
                        Ok((img, format!("{name}(seed {i})")))
                    })
                    .collect()
            })
            .collect();
        for im in images {
            chords.extend(im?);
        }
    }
    let note = format!("orbit of {} seed(s) under words of length <= {}", recipe.seeds.len(), recipe.depth);
    Lamination::with_origins(model, chords, Some(recipe.depth), note)
}
