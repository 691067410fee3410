use crate::baseline::Orientation;
use crate::model::Biclustering;

use super::measure::Measure;
use super::scenario::{Relation, Scenario};

/// Margin by which a strictly-better score must win.
pub const STRICT_MARGIN: f64 = 1e-12;
/// Tolerance for equal-score relations.
pub const EQUAL_TOLERANCE: f64 = 1e-9;

#[derive(Clone, Debug, PartialEq)]
pub enum Outcome {
    Pass,
    Fail,
    /// The measure could not be evaluated; the message says why.
    Error(String),
}

/// Result of checking one measure on one scenario, with the scores seen.
#[derive(Clone, Debug, PartialEq)]
pub struct Verdict {
    pub outcome: Outcome,
    pub better: Option<f64>,
    pub worse: Option<f64>,
}

impl Verdict {
    pub fn passed(&self) -> bool {
        self.outcome == Outcome::Pass
    }
}

fn exceeds(measure: Measure, a: f64, b: f64) -> bool {
    match measure.orientation() {
        Orientation::Similarity => a - b > STRICT_MARGIN,
        Orientation::Dissimilarity => b - a > STRICT_MARGIN,
    }
}

/// Checks the scenario's relation for `measure`.
pub fn check(measure: Measure, scenario: &Scenario) -> Verdict {
    let mut verdict = Verdict {
        outcome: Outcome::Pass,
        better: None,
        worse: None,
    };
    let score = |candidate: &Biclustering, gold: &Biclustering| measure.value(candidate, gold);

    let needs_better = scenario.relation != Relation::NotOptimum;
    if needs_better {
        match score(&scenario.better, &scenario.gold) {
            Ok(v) => verdict.better = Some(v),
            Err(e) => {
                verdict.outcome = Outcome::Error(format!("better side: {e}"));
                return verdict;
            }
        }
    }
    if let Some(worse) = &scenario.worse {
        match score(worse, scenario.gold_for_worse()) {
            Ok(v) => verdict.worse = Some(v),
            Err(e) => {
                verdict.outcome = Outcome::Error(format!("worse side: {e}"));
                return verdict;
            }
        }
    }

    let optimum = measure.optimum();
    let ok = match (scenario.relation, verdict.better, verdict.worse) {
        (Relation::StrictlyBetter, Some(b), Some(w)) => exceeds(measure, b, w),
        (Relation::EqualScore, Some(b), Some(w)) => (b - w).abs() <= EQUAL_TOLERANCE,
        (Relation::OptimumIffIdentical, Some(b), w) => b == optimum && w.map_or(true, |w| w != optimum),
        (Relation::NotOptimum, _, Some(w)) => w != optimum,
        _ => {
            verdict.outcome = Outcome::Error("scenario lacks a side its relation needs".into());
            return verdict;
        }
    };
    if !ok {
        verdict.outcome = Outcome::Fail;
    }
    verdict
}
