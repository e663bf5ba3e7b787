//! Standard laminations and maps: Farey, geodesic lifts, Denjoy blow-ups
//! and pseudo-Anosov-like circle maps.

mod denjoy;
mod farey;
mod geodesic;
mod pa_like;

pub use denjoy::{
    denjoy, denjoy_tessellation, density_in_order, interval_boundary, rotation_linking_witness,
    tessellation_leaf_count, DenjoyScenario, RotationLinkingSearch, Tessellation,
};
pub use farey::{as_fraction, farey, farey_determinant, lowest_terms, max_denominator};
pub use geodesic::{axis, geodesic_lift_lamination};
pub use pa_like::{chord_distance, chord_orbit, pa_like_map, polygon, regular_pa_like, strict_col2_probe, PaLikeMap};
