use std::fmt;
use std::str::FromStr;

use crate::model::Biclustering;

/// Meta-evaluation conditions. `A*` apply to clusterings embedded as
/// biclusterings, `B*` to biclusterings.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Condition {
    A1,
    A2,
    A3,
    A4,
    A5,
    B1,
    B2,
    B3,
    B4,
    B5,
}

impl Condition {
    pub const ALL: [Condition; 10] = [
        Condition::A1,
        Condition::A2,
        Condition::A3,
        Condition::A4,
        Condition::A5,
        Condition::B1,
        Condition::B2,
        Condition::B3,
        Condition::B4,
        Condition::B5,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Condition::A1 => "A1",
            Condition::A2 => "A2",
            Condition::A3 => "A3",
            Condition::A4 => "A4",
            Condition::A5 => "A5",
            Condition::B1 => "B1",
            Condition::B2 => "B2",
            Condition::B3 => "B3",
            Condition::B4 => "B4",
            Condition::B5 => "B5",
        }
    }

    pub fn title(self) -> &'static str {
        match self {
            Condition::A1 => "homogeneity",
            Condition::A2 => "completeness",
            Condition::A3 => "rag bag",
            Condition::A4 => "cluster size vs quantity",
            Condition::A5 => "perfect match",
            Condition::B1 => "penalty for non-intersection area",
            Condition::B2 => "background independence",
            Condition::B3 => "scale invariance",
            Condition::B4 => "copy invariance",
            Condition::B5 => "multiple cluster coverage penalty",
        }
    }

    pub fn relation(self) -> Relation {
        match self {
            Condition::A1 | Condition::A2 | Condition::A3 | Condition::A4 | Condition::B1 => {
                Relation::StrictlyBetter
            }
            Condition::A5 => Relation::OptimumIffIdentical,
            Condition::B2 | Condition::B3 | Condition::B4 => Relation::EqualScore,
            Condition::B5 => Relation::NotOptimum,
        }
    }
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("unknown condition `{0}`")]
pub struct UnknownCondition(pub String);

impl FromStr for Condition {
    type Err = UnknownCondition;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let key = s.trim().to_ascii_uppercase().replace('.', "");
        Condition::ALL
            .into_iter()
            .find(|c| c.id() == key)
            .ok_or_else(|| UnknownCondition(s.to_owned()))
    }
}

/// What a measure must do on a scenario.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    /// `better` scores strictly better than `worse`.
    StrictlyBetter,
    /// `(better, gold)` and `(worse, worse_gold)` score the same.
    EqualScore,
    /// `better` (identical to gold) reaches the optimum and `worse`, when
    /// present, does not.
    OptimumIffIdentical,
    /// `worse` does not reach the optimum.
    NotOptimum,
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Relation::StrictlyBetter => "strictly-better",
            Relation::EqualScore => "equal-score",
            Relation::OptimumIffIdentical => "optimum-iff-identical",
            Relation::NotOptimum => "not-optimum",
        })
    }
}

/// One instantiation of a condition's premises.
///
/// For equal-score relations `better` and `worse` are simply the two sides
/// being compared, and `worse` is scored against `worse_gold` when set.
#[derive(Clone, Debug, PartialEq)]
pub struct Scenario {
    pub condition: Condition,
    pub relation: Relation,
    /// Human-readable origin, e.g. `"seed 17"` or `"table 1 fixture"`.
    pub label: String,
    pub gold: Biclustering,
    pub better: Biclustering,
    pub worse: Option<Biclustering>,
    pub worse_gold: Option<Biclustering>,
}

impl Scenario {
    pub(crate) fn new(
        condition: Condition,
        label: impl Into<String>,
        gold: Biclustering,
        better: Biclustering,
        worse: Option<Biclustering>,
    ) -> Self {
        Self {
            condition,
            relation: condition.relation(),
            label: label.into(),
            gold,
            better,
            worse,
            worse_gold: None,
        }
    }

    /// Gold standard against which `worse` is scored.
    pub fn gold_for_worse(&self) -> &Biclustering {
        self.worse_gold.as_ref().unwrap_or(&self.gold)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn condition_ids_parse() {
        for c in Condition::ALL {
            assert_eq!(c.id().parse::<Condition>().unwrap(), c);
        }
        assert_eq!("b.3".parse::<Condition>().unwrap(), Condition::B3);
        assert!("C1".parse::<Condition>().is_err());
    }
}
