//! External evaluation of biclusterings and clusterings.
//!
//! Biclusterings are compared through the micro-objects transformation:
//! every bicluster becomes the set of `(object, feature)` pairs it covers,
//! and the resulting clusterings are scored with measures for traditional
//! clusterings. Provided measures are CE, RNIA, Rand's index, VI, E4SC,
//! BCubed F1, CICE-BCubed F1 and MOCICE-BCubed F1.
//!
//! [`metaeval`] builds scenarios for the homogeneity, completeness, rag
//! bag, size-versus-quantity and perfect-match conditions on clusterings
//! and for the five biclustering conditions (non-intersection penalty,
//! background independence, scale and copy invariance, multiple cluster
//! coverage), and checks any measure against them.

pub mod baseline;
pub mod bcubed;
pub mod error;
mod indexed;
pub mod matching;
pub mod metaeval;
pub mod micro;
pub mod model;
pub mod structural;

pub use baseline::{ce, e4sc, rand, rnia, set_precision, vi, MatchingResult, Orientation, Range, Score};
pub use bcubed::{
    bcubed_f1, cice_f1, cice_precision, cice_recall, cii, mocice, mocice_f1, mocice_precision,
    mocice_recall, tau, varsigma, PrecisionRecall,
};
pub use error::{ModelError, ScoreError, Side};
pub use micro::{as_biclustering, clustered_universe, micro_transform, MicroClustering, MicroObject};
pub use model::{Bicluster, Biclustering, Clustering, FeatureId, ObjectId, Universe};
pub use structural::{copy, scale};
