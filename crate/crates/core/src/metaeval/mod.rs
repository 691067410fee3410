//! Meta-evaluation: scenario generators for the ten formal conditions,
//! a premise validator, per-scenario checks and compliance reports.

mod check;
pub mod fixtures;
pub mod generators;
mod measure;
pub mod premises;
mod report;
mod scenario;

pub use check::{check, Outcome, Verdict, EQUAL_TOLERANCE, STRICT_MARGIN};
pub use generators::{generate, GenerationError};
pub use measure::{Evaluation, Measure, UnknownMeasure};
pub use premises::{validate, PremiseViolation};
pub use report::{
    round3, run, table1, Cell, ComplianceReport, GoldenCell, Witness, DEFAULT_BASE_SEED, DEFAULT_SEEDS,
};
pub use scenario::{Condition, Relation, Scenario, UnknownCondition};
