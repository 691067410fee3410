//! Text and TSV renderings of scores and compliance reports.

use std::fmt::Write as _;

use bieval::metaeval::{round3, ComplianceReport, Condition, Measure, Outcome, Witness};
use bieval::PrecisionRecall;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Tsv,
}

/// A computed score, ready to print.
#[derive(Clone, Debug, PartialEq)]
pub struct ScoreLine {
    pub measure: Measure,
    pub orientation: String,
    pub value: f64,
    pub components: Option<PrecisionRecall>,
}

pub fn score(line: &ScoreLine, format: Format) -> String {
    let mut out = String::new();
    match format {
        Format::Text => {
            let _ = writeln!(out, "measure: {}", line.measure);
            let _ = writeln!(out, "orientation: {}", line.orientation);
            let _ = writeln!(out, "value: {:.6}", line.value);
            if let Some(pr) = line.components {
                let _ = writeln!(out, "precision: {:.6}", pr.precision);
                let _ = writeln!(out, "recall: {:.6}", pr.recall);
            }
        }
        Format::Tsv => {
            out.push_str("measure\torientation\tvalue\tprecision\trecall\n");
            let (p, r) = match line.components {
                Some(pr) => (format!("{:.6}", pr.precision), format!("{:.6}", pr.recall)),
                None => (String::new(), String::new()),
            };
            let _ = writeln!(out, "{}\t{}\t{:.6}\t{p}\t{r}", line.measure, line.orientation, line.value);
        }
    }
    out
}

fn opt(x: Option<f64>) -> String {
    x.map_or_else(|| "-".to_owned(), |v| format!("{v:.6}"))
}

fn witness_text(w: &Witness) -> String {
    match &w.verdict.outcome {
        Outcome::Error(message) => format!("{}: error: {message}", w.label),
        _ => format!(
            "{}: better {} worse {}",
            w.label,
            opt(w.verdict.better),
            opt(w.verdict.worse)
        ),
    }
}

/// Compliance matrix with one row per measure and one column per condition.
pub fn compliance(report: &ComplianceReport, format: Format) -> String {
    let mut out = String::new();
    match format {
        Format::Text => {
            let width = report.measures.iter().map(|m| m.name().len()).max().unwrap_or(0).max(7);
            let _ = write!(out, "{:<width$}", "measure");
            for c in &report.conditions {
                let _ = write!(out, "  {:<14}", c.id());
            }
            out.push('\n');
            for &m in &report.measures {
                let _ = write!(out, "{:<width$}", m.name());
                for cell in report.row(m) {
                    let verdict = if cell.passes() { "pass" } else { "FAIL" };
                    let _ = write!(out, "  {:<14}", format!("{verdict} {}/{}", cell.passed, cell.total));
                }
                out.push('\n');
            }
            let failing: Vec<_> = report.cells.iter().filter(|c| !c.passes()).collect();
            if !failing.is_empty() {
                out.push_str("\nfirst failure per cell:\n");
                for cell in failing {
                    if let Some(w) = &cell.witness {
                        let _ = writeln!(out, "  {} {}: {}", cell.measure, cell.condition, witness_text(w));
                    }
                }
            }
        }
        Format::Tsv => {
            out.push_str("measure\tcondition\tverdict\tpassed\ttotal\twitness\tbetter\tworse\n");
            for cell in &report.cells {
                let (label, better, worse) = match &cell.witness {
                    Some(w) => (w.label.as_str(), opt(w.verdict.better), opt(w.verdict.worse)),
                    None => ("", "-".to_owned(), "-".to_owned()),
                };
                let _ = writeln!(
                    out,
                    "{}\t{}\t{}\t{}\t{}\t{label}\t{better}\t{worse}",
                    cell.measure,
                    cell.condition,
                    if cell.passes() { "pass" } else { "fail" },
                    cell.passed,
                    cell.total
                );
            }
        }
    }
    out
}

fn fixture_name(c: Condition) -> &'static str {
    match c {
        Condition::A1 => "homogeneity",
        _ => "rag bag",
    }
}

/// The two worked fixtures: G1 and G2 scores per measure, failing cells
/// marked with `*`, then the comparison with the published values.
pub fn table1(report: &ComplianceReport, format: Format) -> String {
    let mut out = String::new();
    let scores = |m: Measure, c: Condition| {
        let cell = report.cell(m, c).expect("table covers both fixtures");
        let v = &cell.witness.as_ref().expect("one scenario").verdict;
        (v.worse, v.better, cell.passes())
    };
    let published = |m: Measure, c: Condition, side: &str| {
        report
            .golden
            .iter()
            .find(|g| g.measure == m && g.fixture == fixture_name(c) && g.side == side)
    };
    match format {
        Format::Text => {
            let width = report.measures.iter().map(|m| m.name().len()).max().unwrap_or(0).max(7);
            let _ = writeln!(out, "{:<width$}  {:<16}  {:<16}", "measure", "homogeneity", "rag bag");
            let _ = writeln!(out, "{:<width$}  {:<7} {:<8}  {:<7} {:<8}", "", "G1", "G2", "G1", "G2");
            for &m in &report.measures {
                let _ = write!(out, "{:<width$}", m.name());
                for c in &report.conditions {
                    let (g1, g2, pass) = scores(m, *c);
                    let mark = if pass { " " } else { "*" };
                    let show = |x: Option<f64>| x.map_or_else(|| "-".to_owned(), |v| format!("{:.3}", round3(v)));
                    let _ = write!(out, "  {:<7} {:<8}", show(g1), format!("{}{mark}", show(g2)));
                }
                out.push('\n');
            }
            out.push_str("* the measure does not score G2 strictly better than G1\n");
            if !report.golden.is_empty() {
                out.push_str("\npublished values:\n");
                for g in &report.golden {
                    let status = if g.matches() { "ok" } else { "MISMATCH" };
                    let _ = writeln!(
                        out,
                        "  {} {} {}: {:.3} (published {:.3}, exact {:.6}) {status}",
                        g.measure,
                        g.fixture,
                        g.side,
                        round3(g.actual),
                        g.expected,
                        g.actual
                    );
                }
            }
        }
        Format::Tsv => {
            out.push_str("measure\tfixture\tside\tscore\tverdict\tpublished\tmatch\n");
            for &m in &report.measures {
                for &c in &report.conditions {
                    let (g1, g2, pass) = scores(m, c);
                    for (side, v) in [("G1", g1), ("G2", g2)] {
                        let (expected, matched) = match published(m, c, side) {
                            Some(g) => (format!("{:.3}", g.expected), if g.matches() { "yes" } else { "no" }),
                            None => (String::new(), ""),
                        };
                        let _ = writeln!(
                            out,
                            "{m}\t{}\t{side}\t{}\t{}\t{expected}\t{matched}",
                            fixture_name(c),
                            opt(v),
                            if pass { "pass" } else { "fail" }
                        );
                    }
                }
            }
        }
    }
    out
}
