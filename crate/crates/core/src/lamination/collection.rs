use serde::{Deserialize, Serialize};
use serde_json::json;

use super::Lamination;
use crate::certificate::{Certificate, Witness};
use crate::circle::CirclePoint;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CollectionMode {
    /// No leaf in common.
    Transverse,
    /// No endpoint in common.
    StronglyTransverse,
    /// No leaf in common, and every shared endpoint is a cusp.
    PantsLike,
}

/// Pairwise audit of materialized laminations. Refutations are final;
/// `Proven` holds for the materialized leaves, whose depth is recorded in
/// the detail.
pub fn check_collection(
    lams: &[Lamination],
    mode: CollectionMode,
    cusp: Option<&dyn Fn(&CirclePoint) -> bool>,
) -> Result<Certificate> {
    if mode == CollectionMode::PantsLike && cusp.is_none() {
        return Err(Error::Invalid("pants-like mode needs a cusp oracle".into()));
    }
    if let Some(l) = lams.iter().find(|l| l.model() != lams[0].model()) {
        return Err(Error::ModelMismatch { expected: lams[0].model(), found: l.model() });
    }
    let depth = lams.iter().filter_map(Lamination::depth).min();
    let endpoints: Vec<_> = lams.iter().map(Lamination::endpoints).collect();
    let mut shared_total = 0usize;
    let mut pairs = 0usize;
    for i in 0..lams.len() {
        for j in i + 1..lams.len() {
            pairs += 1;
            let (small, big) = if lams[i].len() <= lams[j].len() { (&lams[i], &lams[j]) } else { (&lams[j], &lams[i]) };
            if let Some(leaf) = small.leaves().iter().find(|c| big.contains(c)) {
                return Ok(Certificate::refuted(
                    Witness::SharedLeaf { leaf: leaf.clone(), laminations: [i, j] },
                    json!({ "mode": mode, "depth": depth }),
                ));
            }
            for p in endpoints[i].intersection(&endpoints[j]) {
                shared_total += 1;
                let bad = match mode {
                    CollectionMode::Transverse => None,
                    CollectionMode::StronglyTransverse => Some(Witness::SharedEndpoint { point: p.clone(), laminations: [i, j] }),
                    CollectionMode::PantsLike => (!cusp.expect("checked")(p))
                        .then(|| Witness::NonCuspSharedEndpoint { point: p.clone(), laminations: [i, j] }),
                };
                if let Some(w) = bad {
                    return Ok(Certificate::refuted(w, json!({ "mode": mode, "depth": depth })));
                }
            }
        }
    }
    Ok(Certificate::proven(json!({
        "mode": mode,
        "depth": depth,
        "pairs": pairs,
        "leaves": lams.iter().map(Lamination::len).collect::<Vec<_>>(),
        "shared_endpoints": shared_total,
    })))
}

/// The cusp oracle "rational or infinity" for projective points.
pub fn rational_or_infinity(p: &CirclePoint) -> bool {
    p.is_infinity() || p.chart().is_some_and(|x| x.is_rational())
}
