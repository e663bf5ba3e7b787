use crate::circle::{Chord, CirclePoint};
use crate::error::{Error, Result};
use crate::group::{GroupAction, Word};
use crate::lamination::{materialize, Materialized, Recipe};
use crate::maps::{CircleMap, MoebiusClass};

/// The axis of a hyperbolic Möbius map, from repelling to attracting point.
pub fn axis(g: &CircleMap) -> Result<Chord> {
    let CircleMap::Moebius(m) = g else {
        return Err(Error::NotHyperbolic);
    };
    match m.classify()? {
        MoebiusClass::Hyperbolic { attracting, repelling } => {
            Chord::new(CirclePoint::Projective(repelling), CirclePoint::Projective(attracting))
        }
        _ => Err(Error::NotHyperbolic),
    }
}

/// Orbit of the axis of `word` under all words of length at most `radius`.
///
/// The axes of conjugates `h w h^-1` are the `h`-images of the axis of `w`,
/// so this is the lift of the closed geodesic of `w` seen up to `radius`.
/// Self-crossing lifts come back as [`Materialized::Linked`].
pub fn geodesic_lift_lamination(action: &GroupAction, word: &Word, radius: u32) -> Result<Materialized> {
    let g = action.evaluate(word)?;
    let seed = axis(&g)?;
    materialize(&Recipe { seeds: vec![seed], action: Some(action.clone()), depth: radius })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parabolic_word_has_no_axis() {
        let a = GroupAction::moebius(&[("A", [1, 2, 0, 1]), ("B", [1, 0, 2, 1])]).unwrap();
        let w = a.parse_word("A.B^-1").unwrap();
        assert!(matches!(geodesic_lift_lamination(&a, &w, 2), Err(Error::NotHyperbolic)));
    }

    #[test]
    fn simple_curve_on_punctured_torus() {
        let a = GroupAction::moebius(&[("a", [1, 1, 1, 2]), ("b", [1, -1, -1, 2])]).unwrap();
        for w in ["a", "b", "a.b", "a.b^-1"] {
            let word = a.parse_word(w).unwrap();
            let lam = geodesic_lift_lamination(&a, &word, 4).unwrap();
            assert!(matches!(lam, Materialized::Lamination(_)), "{w}");
        }
    }

    #[test]
    fn pants_curves_cross_themselves() {
        let a = GroupAction::moebius(&[("A", [1, 2, 0, 1]), ("B", [1, 0, 2, 1])]).unwrap();
        let w = a.parse_word("A.B").unwrap();
        let Materialized::Linked(wit) = geodesic_lift_lamination(&a, &w, 4).unwrap() else {
            panic!("expected a crossing");
        };
        assert!(wit.validate().unwrap());
    }
}
