use rayon::prelude::*;

use super::check::{check, Verdict};
use super::fixtures::{self, TABLE1_EXPECTED};
use super::generators::{generate, GenerationError};
use super::measure::Measure;
use super::scenario::{Condition, Scenario};

pub const DEFAULT_SEEDS: u64 = 100;
pub const DEFAULT_BASE_SEED: u64 = 20_240_601;

/// The verdict on one scenario, kept as a cell's witness.
#[derive(Clone, Debug, PartialEq)]
pub struct Witness {
    pub label: String,
    pub verdict: Verdict,
}

/// Outcome of one measure on every scenario of one condition.
#[derive(Clone, Debug, PartialEq)]
pub struct Cell {
    pub measure: Measure,
    pub condition: Condition,
    pub passed: usize,
    pub total: usize,
    /// First failing scenario, or the first scenario when all pass.
    pub witness: Option<Witness>,
}

impl Cell {
    pub fn passes(&self) -> bool {
        self.passed == self.total
    }

    fn evaluate(measure: Measure, condition: Condition, scenarios: &[Scenario]) -> Cell {
        let verdicts: Vec<Verdict> = scenarios.par_iter().map(|s| check(measure, s)).collect();
        let passed = verdicts.iter().filter(|v| v.passed()).count();
        let pick = verdicts.iter().position(|v| !v.passed()).unwrap_or(0);
        let witness = verdicts.into_iter().nth(pick).map(|verdict| Witness {
            label: scenarios[pick].label.clone(),
            verdict,
        });
        Cell {
            measure,
            condition,
            passed,
            total: scenarios.len(),
            witness,
        }
    }
}

/// One published score compared with the computed one.
#[derive(Clone, Debug, PartialEq)]
pub struct GoldenCell {
    pub measure: Measure,
    pub fixture: &'static str,
    /// `"G1"` (worse) or `"G2"` (better).
    pub side: &'static str,
    pub expected: f64,
    pub actual: f64,
}

impl GoldenCell {
    pub fn matches(&self) -> bool {
        (round3(self.actual) - self.expected).abs() <= 0.0005
    }
}

/// Half-up rounding to three decimals.
pub fn round3(x: f64) -> f64 {
    // The small nudge absorbs representation error such as 0.5555 being
    // stored just below its decimal value.
    ((x * 1000.0) + 0.5 + 1e-9).floor() / 1000.0
}

/// Measures by conditions, in the order requested.
#[derive(Clone, Debug, PartialEq)]
pub struct ComplianceReport {
    pub measures: Vec<Measure>,
    pub conditions: Vec<Condition>,
    /// Row-major: `cells[m * conditions.len() + c]`.
    pub cells: Vec<Cell>,
    /// Published scores, filled only by [`table1`].
    pub golden: Vec<GoldenCell>,
}

impl ComplianceReport {
    pub fn cell(&self, measure: Measure, condition: Condition) -> Option<&Cell> {
        let m = self.measures.iter().position(|&x| x == measure)?;
        let c = self.conditions.iter().position(|&x| x == condition)?;
        self.cells.get(m * self.conditions.len() + c)
    }

    pub fn row(&self, measure: Measure) -> impl Iterator<Item = &Cell> {
        self.cells.iter().filter(move |c| c.measure == measure)
    }

    pub fn golden_mismatches(&self) -> impl Iterator<Item = &GoldenCell> {
        self.golden.iter().filter(|g| !g.matches())
    }

    fn assemble(measures: &[Measure], suites: &[(Condition, Vec<Scenario>)]) -> Self {
        let pairs: Vec<(Measure, usize)> = measures
            .iter()
            .flat_map(|&m| (0..suites.len()).map(move |c| (m, c)))
            .collect();
        // Collecting an indexed parallel iterator keeps the row-major order.
        let cells = pairs
            .into_par_iter()
            .map(|(m, c)| Cell::evaluate(m, suites[c].0, &suites[c].1))
            .collect();
        ComplianceReport {
            measures: measures.to_vec(),
            conditions: suites.iter().map(|(c, _)| *c).collect(),
            cells,
            golden: Vec::new(),
        }
    }
}

/// Runs every measure on the generated scenarios of every condition.
pub fn run(measures: &[Measure], conditions: &[Condition], seeds: u64, base_seed: u64) -> Result<ComplianceReport, GenerationError> {
    let suites = conditions
        .par_iter()
        .map(|&c| generate(c, seeds, base_seed).map(|s| (c, s)))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(ComplianceReport::assemble(measures, &suites))
}

/// The two worked fixtures, as columns `A1` (homogeneity) and `A3` (rag
/// bag), plus the published scores of any CE, RNIA or E4SC row.
pub fn table1(measures: &[Measure]) -> ComplianceReport {
    let homogeneity = fixtures::table1_homogeneity();
    let ragbag = fixtures::table1_ragbag();
    let suites = vec![(Condition::A1, vec![homogeneity]), (Condition::A3, vec![ragbag])];
    let mut report = ComplianceReport::assemble(measures, &suites);

    for row in TABLE1_EXPECTED {
        let Ok(measure) = row.measure.parse::<Measure>() else {
            continue;
        };
        if !measures.contains(&measure) {
            continue;
        }
        for (condition, fixture, (g1, g2)) in [
            (Condition::A1, "homogeneity", row.homogeneity),
            (Condition::A3, "rag bag", row.ragbag),
        ] {
            let verdict = &report.cell(measure, condition).and_then(|c| c.witness.as_ref()).expect("one scenario per column").verdict;
            for (side, expected, actual) in [("G1", g1, verdict.worse), ("G2", g2, verdict.better)] {
                report.golden.push(GoldenCell {
                    measure,
                    fixture,
                    side,
                    expected,
                    actual: actual.unwrap_or(f64::NAN),
                });
            }
        }
    }
    report
}
