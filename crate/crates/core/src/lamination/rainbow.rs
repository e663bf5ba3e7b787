use super::Lamination;
use crate::circle::{Chord, CirclePoint};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Rainbow {
    /// `p` is an endpoint of this leaf.
    EndpointCertificate(Chord),
    /// Leaves nested towards `p`, outermost first; consecutive leaves may
    /// share an endpoint.
    RainbowChain(Vec<Chord>),
    Unknown,
}

impl Rainbow {
    pub fn chain_len(&self) -> usize {
        match self {
            Rainbow::RainbowChain(c) => c.len(),
            _ => 0,
        }
    }
}

/// Endpoint certificate if `p` is a leaf endpoint, otherwise the longest
/// chain of leaves nested around `p`.
///
/// Cutting the circle at `p`, every leaf becomes an interval `[r1, r2]`
/// with `p` outside it; a chain closing in on `p` is a sequence of
/// intervals each containing the previous one, found as a longest
/// non-decreasing subsequence.
pub fn rainbow(lam: &Lamination, p: &CirclePoint) -> Result<Rainbow> {
    if p.model() != lam.model() {
        return Err(Error::ModelMismatch { expected: lam.model(), found: p.model() });
    }
    if let Some(c) = lam.leaves_at(p).next() {
        return Ok(Rainbow::EndpointCertificate(c.clone()));
    }
    let key = |x: &CirclePoint| (x < p, x.clone());
    let mut items: Vec<((bool, CirclePoint), (bool, CirclePoint), usize)> = lam
        .leaves()
        .iter()
        .enumerate()
        .map(|(i, c)| {
            let (a, b) = (key(c.lo()), key(c.hi()));
            if a < b {
                (a, b, i)
            } else {
                (b, a, i)
            }
        })
        .collect();
    // r1 decreasing, then r2 increasing; then look for r2 non-decreasing
    items.sort_by(|x, y| y.0.cmp(&x.0).then_with(|| x.1.cmp(&y.1)));
    let mut tails: Vec<usize> = Vec::new();
    let mut prev: Vec<Option<usize>> = vec![None; items.len()];
    for k in 0..items.len() {
        let pos = tails.partition_point(|&t| items[t].1 <= items[k].1);
        if pos > 0 {
            prev[k] = Some(tails[pos - 1]);
        }
        if pos == tails.len() {
            tails.push(k);
        } else {
            tails[pos] = k;
        }
    }
    let Some(&last) = tails.last() else {
        return Ok(Rainbow::Unknown);
    };
    let mut chain = vec![];
    let mut at = Some(last);
    while let Some(k) = at {
        chain.push(lam.leaves()[items[k].2].clone());
        at = prev[k];
    }
    // `chain` now runs from the leaf closest to p outwards
    chain.reverse();
    Ok(Rainbow::RainbowChain(chain))
}
