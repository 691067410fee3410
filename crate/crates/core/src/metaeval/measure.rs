use std::fmt;
use std::str::FromStr;

use crate::baseline::{self, Orientation, Score};
use crate::bcubed::{self, PrecisionRecall};
use crate::error::ScoreError;
use crate::micro::micro_transform;
use crate::model::Biclustering;

/// Every measure the harness and the CLI can evaluate on biclusterings.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Measure {
    Ce,
    Rnia,
    Rand,
    Vi,
    E4sc,
    BcubedF1,
    CiceF1,
    MociceF1,
}

/// A measure value plus precision/recall for the BCubed family.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Evaluation {
    pub score: Score,
    pub components: Option<PrecisionRecall>,
}

impl Measure {
    pub const ALL: [Measure; 8] = [
        Measure::Ce,
        Measure::Rnia,
        Measure::Rand,
        Measure::Vi,
        Measure::E4sc,
        Measure::BcubedF1,
        Measure::CiceF1,
        Measure::MociceF1,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Measure::Ce => "ce",
            Measure::Rnia => "rnia",
            Measure::Rand => "rand",
            Measure::Vi => "vi",
            Measure::E4sc => "e4sc",
            Measure::BcubedF1 => "bcubed-f1",
            Measure::CiceF1 => "cice-f1",
            Measure::MociceF1 => "mocice-f1",
        }
    }

    pub fn orientation(self) -> Orientation {
        match self {
            Measure::Vi => Orientation::Dissimilarity,
            _ => Orientation::Similarity,
        }
    }

    /// Best attainable value: 1 for similarities, 0 for VI.
    pub fn optimum(self) -> f64 {
        match self.orientation() {
            Orientation::Similarity => 1.0,
            Orientation::Dissimilarity => 0.0,
        }
    }

    /// Scores `candidate` against `gold` through the micro-objects
    /// transformation. CE and RNIA come back as similarities.
    pub fn evaluate(self, candidate: &Biclustering, gold: &Biclustering) -> Result<Evaluation, ScoreError> {
        if self == Measure::MociceF1 {
            let pr = bcubed::mocice(candidate, gold)?;
            return Ok(Evaluation {
                score: Score::similarity(pr.f1()),
                components: Some(pr),
            });
        }
        let g = micro_transform(candidate);
        let c = micro_transform(gold);
        let plain = |score: Score| Evaluation {
            score,
            components: None,
        };
        let with_components = |pr: PrecisionRecall| Evaluation {
            score: Score::similarity(pr.f1()),
            components: Some(pr),
        };
        match self {
            Measure::Ce => baseline::ce(&g, &c).map(plain),
            Measure::Rnia => baseline::rnia(&g, &c).map(plain),
            Measure::Rand => baseline::rand(&g, &c).map(plain),
            Measure::Vi => baseline::vi(&g, &c).map(plain),
            Measure::E4sc => baseline::e4sc(&g, &c).map(plain),
            Measure::BcubedF1 => bcubed::bcubed(&g, &c).map(with_components),
            Measure::CiceF1 => bcubed::cice(&g, &c).map(with_components),
            Measure::MociceF1 => unreachable!(),
        }
    }

    pub fn value(self, candidate: &Biclustering, gold: &Biclustering) -> Result<f64, ScoreError> {
        Ok(self.evaluate(candidate, gold)?.score.value())
    }
}

impl fmt::Display for Measure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("unknown measure `{0}`")]
pub struct UnknownMeasure(pub String);

impl FromStr for Measure {
    type Err = UnknownMeasure;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let key = s.trim().to_ascii_lowercase().replace('_', "-");
        Measure::ALL
            .into_iter()
            .find(|m| m.name() == key)
            .ok_or_else(|| UnknownMeasure(s.to_owned()))
    }
}
