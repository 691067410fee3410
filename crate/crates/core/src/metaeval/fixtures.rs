//! Worked examples on objects `1..=9` and features `1'`, `2'`, `3'`.
//!
//! Each fixture is a scenario whose `worse` side is G1 and `better` side is
//! G2. All biclusters use every feature.

use super::generators::{embed, gen_ragbag, numbered_universe};
use super::scenario::{Condition, Scenario};

fn fixture(condition: Condition, label: &str, gold: &[Vec<usize>], g1: &[Vec<usize>], g2: &[Vec<usize>]) -> Scenario {
    let universe = numbered_universe(9, 3);
    let x = universe.all_features();
    Scenario::new(
        condition,
        label,
        embed(&universe, gold, &x),
        embed(&universe, g2, &x),
        Some(embed(&universe, g1, &x)),
    )
}

/// Homogeneity example.
///
/// G1 = {1}, {2}, {3,4,5}, {7,8,9}, {6} and G2 = {1,2}, {3,4,5}, {7,8,9}, {6}
/// against C = {1..6}, {7,8}, {9}. G2 merges two pure clusters of the same
/// class, so the premises it satisfies are those of completeness.
pub fn table1_homogeneity() -> Scenario {
    fixture(
        Condition::A1,
        "table 1 homogeneity fixture",
        &[vec![1, 2, 3, 4, 5, 6], vec![7, 8], vec![9]],
        &[vec![1], vec![2], vec![3, 4, 5], vec![7, 8, 9], vec![6]],
        &[vec![1, 2], vec![3, 4, 5], vec![7, 8, 9], vec![6]],
    )
}

/// Rag bag example.
///
/// G1 = {1..4}, {5..9} and G2 = {1..5}, {6..9} against
/// C = {1}, {2}, {3}, {4}, {5}, {6..9}.
pub fn table1_ragbag() -> Scenario {
    let mut s = gen_ragbag(4).expect("n = 4 is valid");
    s.label = "table 1 rag bag fixture".into();
    s
}

/// Expected rounded scores for (G1, G2) in each fixture.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ExpectedRow {
    pub measure: &'static str,
    pub homogeneity: (f64, f64),
    pub ragbag: (f64, f64),
}

pub const TABLE1_EXPECTED: [ExpectedRow; 3] = [
    ExpectedRow {
        measure: "ce",
        homogeneity: (0.556, 0.556),
        ragbag: (0.556, 0.556),
    },
    ExpectedRow {
        measure: "rnia",
        homogeneity: (1.0, 1.0),
        ragbag: (1.0, 1.0),
    },
    ExpectedRow {
        measure: "e4sc",
        homogeneity: (0.544, 0.606),
        ragbag: (0.543, 0.533),
    },
];

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixtures_share_the_nine_by_three_universe() {
        for s in [table1_homogeneity(), table1_ragbag()] {
            assert_eq!(s.gold.universe().n_objects(), 9);
            assert_eq!(s.gold.universe().n_features(), 3);
            assert_eq!(s.better.universe(), s.gold.universe());
        }
    }
}
