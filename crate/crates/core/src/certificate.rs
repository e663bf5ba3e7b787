//! Verdicts with checkable witnesses.

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::circle::{linked, Chord, CirclePoint, Linkage};
use crate::error::Result;
use crate::scalar::Qs;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum Witness {
    /// Two produced chords that cross.
    LinkedLeaves {
        first: Chord,
        second: Chord,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        first_origin: Option<String>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        second_origin: Option<String>,
    },
    /// A leaf common to two laminations of a collection.
    SharedLeaf { leaf: Chord, laminations: [usize; 2] },
    /// An endpoint common to two laminations of a collection.
    SharedEndpoint { point: CirclePoint, laminations: [usize; 2] },
    /// A shared endpoint rejected by the cusp oracle.
    NonCuspSharedEndpoint { point: CirclePoint, laminations: [usize; 2] },
    /// Two leaves at `vertex` that do not bound a common gap.
    LoosenessViolation { vertex: CirclePoint, first: Chord, second: Chord },
    /// `chord` and its image under rotation by `n * alpha` cross.
    RotationLinking { chord: Chord, alpha: Qs, n: u64, image: Chord },
}

impl Witness {
    /// Re-checks everything the witness determines on its own with the
    /// circle predicates. Witnesses that refer to a collection only get
    /// their shape checked here.
    pub fn validate(&self) -> Result<bool> {
        Ok(match self {
            Witness::LinkedLeaves { first, second, .. } => linked(first, second)? == Linkage::Linked,
            Witness::SharedLeaf { laminations: [i, j], .. }
            | Witness::SharedEndpoint { laminations: [i, j], .. }
            | Witness::NonCuspSharedEndpoint { laminations: [i, j], .. } => i != j,
            Witness::LoosenessViolation { vertex, first, second } => {
                first != second && first.has_endpoint(vertex) && second.has_endpoint(vertex)
            }
            Witness::RotationLinking { chord, alpha, n, image } => {
                let shift = alpha.try_mul(&Qs::integer(*n as i64))?;
                let rot = |p: &CirclePoint| -> Result<CirclePoint> {
                    match p {
                        CirclePoint::Angle(x) => Ok(CirclePoint::angle(x.try_add(&shift)?)),
                        _ => Err(crate::error::Error::Invalid("rotation witness needs angle points".into())),
                    }
                };
                let expected = Chord::new(rot(chord.lo())?, rot(chord.hi())?)?;
                &expected == image && linked(chord, image)? == Linkage::Linked
            }
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case", deny_unknown_fields)]
pub enum Verdict {
    Proven,
    Refuted { witness: Witness },
    UnknownAtDepth { depth: u32 },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Certificate {
    pub verdict: Verdict,
    #[serde(default)]
    pub detail: Value,
}

impl Certificate {
    pub fn proven(detail: Value) -> Self {
        Certificate { verdict: Verdict::Proven, detail }
    }

    pub fn refuted(witness: Witness, detail: Value) -> Self {
        Certificate { verdict: Verdict::Refuted { witness }, detail }
    }

    pub fn unknown(depth: u32, detail: Value) -> Self {
        Certificate { verdict: Verdict::UnknownAtDepth { depth }, detail }
    }

    pub fn is_proven(&self) -> bool {
        self.verdict == Verdict::Proven
    }

    pub fn is_refuted(&self) -> bool {
        matches!(self.verdict, Verdict::Refuted { .. })
    }

    pub fn witness(&self) -> Option<&Witness> {
        match &self.verdict {
            Verdict::Refuted { witness } => Some(witness),
            _ => None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn linked_witness_round_trip() {
        let c = |a: i64, b: i64| Chord::new(CirclePoint::angle_ratio(a, 8), CirclePoint::angle_ratio(b, 8)).unwrap();
        let w = Witness::LinkedLeaves { first: c(0, 4), second: c(2, 6), first_origin: None, second_origin: Some("A".into()) };
        let cert = Certificate::refuted(w.clone(), json!({"depth": 1}));
        let back: Certificate = serde_json::from_str(&serde_json::to_string(&cert).unwrap()).unwrap();
        assert_eq!(back, cert);
        assert!(back.witness().unwrap().validate().unwrap());
        let bogus = Witness::LinkedLeaves { first: c(0, 1), second: c(2, 6), first_origin: None, second_origin: None };
        assert!(!bogus.validate().unwrap());
    }

    #[test]
    fn rotation_witness_checks_the_image() {
        let alpha = Qs::golden() - Qs::one();
        let chord = Chord::new(CirclePoint::angle_ratio(0, 1), CirclePoint::angle_ratio(1, 2)).unwrap();
        let image = Chord::new(CirclePoint::angle(alpha.clone()), CirclePoint::angle(&alpha + &Qs::ratio(1, 2))).unwrap();
        let w = Witness::RotationLinking { chord: chord.clone(), alpha: alpha.clone(), n: 1, image: image.clone() };
        assert!(w.validate().unwrap());
        let w = Witness::RotationLinking { chord, alpha, n: 2, image };
        assert!(!w.validate().unwrap());
    }
}
