//! Classify a few elements of PSL(2, Z) and print the fixed points.

use lamkit::group::{classify_element, GroupAction};

fn main() {
    let g = GroupAction::modular();
    for w in ["S", "S.T", "T^3", "S.T^2", "T.S.T^-2", "S.T.S.T.S.T"] {
        let word = g.parse_word(w).unwrap();
        let class = classify_element(&g, &word, 12).unwrap();
        let fixed: Vec<String> = g
            .evaluate(&word)
            .unwrap()
            .fixed_points()
            .map(|v| v.iter().map(|r| r.point.to_string()).collect())
            .unwrap_or_default();
        println!("{w:<14} {class:?} fixed {fixed:?}");
    }
}
