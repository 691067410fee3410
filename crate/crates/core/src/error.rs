use thiserror::Error;

use crate::model::{FeatureId, ObjectId};

/// Errors raised while building or transforming the data model.
#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum ModelError {
    #[error("object `{0}` is declared twice")]
    DuplicateObject(ObjectId),
    #[error("feature `{0}` is declared twice")]
    DuplicateFeature(FeatureId),
    #[error("cluster {position} lists the same member twice")]
    DuplicateMember { position: usize },
    #[error("object `{id}` in cluster {position} is not in the universe")]
    UnknownObject { id: ObjectId, position: usize },
    #[error("feature `{id}` in cluster {position} is not in the universe")]
    UnknownFeature { id: FeatureId, position: usize },
    #[error("{operation} requires a positive factor, got {factor}")]
    NonPositiveFactor {
        operation: &'static str,
        factor: usize,
    },
}

/// Which argument of a measure an error refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Candidate,
    Gold,
}

impl std::fmt::Display for Side {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Side::Candidate => "candidate",
            Side::Gold => "gold standard",
        })
    }
}

/// Errors raised when a measure's preconditions do not hold.
#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum ScoreError {
    #[error("score is undefined: {0}")]
    Undefined(&'static str),
    #[error("{side} is not a partition: clusters {first} and {second} overlap")]
    NotAPartition {
        side: Side,
        first: usize,
        second: usize,
    },
    #[error("coverage assumption violated: an item clustered by the {covered} is not clustered by the {uncovered}")]
    Coverage { covered: Side, uncovered: Side },
    #[error("contract violation: {0}")]
    Contract(&'static str),
}
