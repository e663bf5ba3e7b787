use super::Lamination;
use crate::error::{Error, Result};
use crate::scalar::Qs;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverageReport {
    /// Every window point lies within `epsilon` of a leaf endpoint.
    pub dense: bool,
    /// Every window point lies within `epsilon` of a leaf shorter than
    /// `epsilon`.
    pub boundary_full: bool,
    /// The widest stretch of the window without endpoints.
    pub worst_gap: Option<(Qs, Qs)>,
    /// A window point with no short leaf nearby.
    pub missing_short_leaf: Option<Qs>,
}

fn widest(stretches: &[(Qs, Qs)]) -> Option<(Qs, Qs)> {
    stretches
        .iter()
        .max_by(|a, b| (a.1.to_f64() - a.0.to_f64()).total_cmp(&(b.1.to_f64() - b.0.to_f64())))
        .cloned()
}

/// Exact density and boundary-fullness audit over a window `[lo, hi]` of
/// the chart coordinate (real value or angle).
pub fn coverage_report(lam: &Lamination, epsilon: &Qs, window: (&Qs, &Qs)) -> Result<CoverageReport> {
    let (lo, hi) = window;
    if epsilon <= &Qs::zero() || lo >= hi {
        return Err(Error::Invalid("coverage needs epsilon > 0 and a nondegenerate window".into()));
    }
    let mut xs: Vec<Qs> = lam.endpoints().iter().filter_map(|p| p.chart().cloned()).filter(|x| lo <= x && x <= hi).collect();
    xs.sort();

    // density: gaps between consecutive endpoints, padded by the window ends
    let mut stretches = Vec::new();
    let mut dense = true;
    if xs.is_empty() {
        dense = false;
        stretches.push((lo.clone(), hi.clone()));
    } else {
        let two_eps = epsilon.try_add(epsilon)?;
        if xs[0] > lo.try_add(epsilon)? {
            dense = false;
        }
        if hi > &xs[xs.len() - 1].try_add(epsilon)? {
            dense = false;
        }
        stretches.push((lo.clone(), xs[0].clone()));
        for w in xs.windows(2) {
            if w[1] > w[0].try_add(&two_eps)? {
                dense = false;
            }
            stretches.push((w[0].clone(), w[1].clone()));
        }
        stretches.push((xs[xs.len() - 1].clone(), hi.clone()));
    }

    // boundary-fullness: union of (u - eps, v + eps) over short leaves
    let mut cover: Vec<(Qs, Qs)> = Vec::new();
    for c in lam.leaves() {
        if let (Some(u), Some(v)) = (c.lo().chart(), c.hi().chart()) {
            let (u, v) = if u < v { (u, v) } else { (v, u) };
            if v < &u.try_add(epsilon)? {
                cover.push((u.try_sub(epsilon)?, v.try_add(epsilon)?));
            }
        }
    }
    cover.sort();
    // `x` is the least window point not yet known to be covered
    let mut x = lo.clone();
    let mut reach: Option<Qs> = None;
    let mut i = 0;
    let missing = loop {
        while i < cover.len() && cover[i].0 < x {
            if reach.as_ref().is_none_or(|r| &cover[i].1 > r) {
                reach = Some(cover[i].1.clone());
            }
            i += 1;
        }
        match &reach {
            Some(r) if r > &x => {
                x = r.clone();
                if &x > hi {
                    break None;
                }
            }
            _ => break Some(x),
        }
    };
    Ok(CoverageReport {
        dense,
        boundary_full: missing.is_none(),
        worst_gap: widest(&stretches),
        missing_short_leaf: missing,
    })
}
