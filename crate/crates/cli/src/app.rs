use std::path::{Path, PathBuf};

use bieval::metaeval::{
    self, Condition, GenerationError, Measure, UnknownCondition, UnknownMeasure, DEFAULT_BASE_SEED, DEFAULT_SEEDS,
};
use bieval::{baseline, micro_transform, Biclustering, ScoreError};
use clap::{Args, Parser, Subcommand, ValueEnum};
use thiserror::Error;

use crate::format::{parse_biclustering, FormatError};
use crate::render::{self, Format, ScoreLine};

#[derive(Debug, Parser)]
#[command(name = "bieval", version, about = "Score biclusterings and meta-evaluate clustering measures")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Score a candidate biclustering against a gold standard.
    Score(ScoreArgs),
    /// Check measures against the formal conditions.
    Metaeval(MetaevalArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OrientationArg {
    /// CE and RNIA as `1 - error`.
    Similarity,
    /// CE and RNIA as the error itself.
    Raw,
}

#[derive(Debug, Args)]
pub struct ScoreArgs {
    #[arg(long, value_parser = parse_measure)]
    pub measure: Measure,
    #[arg(long)]
    pub candidate: PathBuf,
    #[arg(long)]
    pub gold: PathBuf,
    #[arg(long, value_enum, default_value = "similarity")]
    pub orientation: OrientationArg,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct MetaevalArgs {
    /// Comma-separated measure names; all measures when omitted.
    #[arg(long, value_delimiter = ',', value_parser = parse_measure)]
    pub measures: Vec<Measure>,
    /// Comma-separated condition ids such as `A1,B3`; all when omitted.
    #[arg(long, value_delimiter = ',', value_parser = parse_condition)]
    pub conditions: Vec<Condition>,
    /// Seeded scenarios per condition.
    #[arg(long, default_value_t = DEFAULT_SEEDS)]
    pub seeds: u64,
    /// Base seed for scenario generation.
    #[arg(long, env = "BIEVAL_SEED", default_value_t = DEFAULT_BASE_SEED)]
    pub seed: u64,
    /// Only the two worked fixtures, compared with their published scores.
    #[arg(long)]
    pub table1: bool,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
}

fn parse_measure(s: &str) -> Result<Measure, UnknownMeasure> {
    s.parse()
}

fn parse_condition(s: &str) -> Result<Condition, UnknownCondition> {
    s.parse()
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Format { path: PathBuf, source: FormatError },
    #[error(transparent)]
    Score(#[from] ScoreError),
    #[error(transparent)]
    Generation(#[from] GenerationError),
    #[error("{0} published value(s) not reproduced")]
    GoldenMismatch(usize, String),
}

impl CliError {
    /// Process exit status; each failure class has its own code.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Io { .. } => 3,
            CliError::Format { .. } => 4,
            CliError::Score(ScoreError::NotAPartition { .. }) => 5,
            CliError::Score(ScoreError::Coverage { .. }) => 6,
            CliError::Score(ScoreError::Undefined(_)) => 7,
            CliError::Score(ScoreError::Contract(_)) => 8,
            CliError::GoldenMismatch(..) => 9,
            CliError::Generation(_) => 10,
        }
    }

    /// Output that should still be printed despite the failure.
    pub fn report(&self) -> Option<&str> {
        match self {
            CliError::GoldenMismatch(_, report) => Some(report),
            _ => None,
        }
    }
}

pub fn read_biclustering(path: &Path) -> Result<Biclustering, CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_owned(),
        source,
    })?;
    parse_biclustering(&text)
        .map(|doc| doc.biclustering())
        .map_err(|source| CliError::Format {
            path: path.to_owned(),
            source,
        })
}

pub fn score(args: &ScoreArgs) -> Result<String, CliError> {
    let candidate = read_biclustering(&args.candidate)?;
    let gold = read_biclustering(&args.gold)?;
    let raw = args.orientation == OrientationArg::Raw;
    let line = match args.measure {
        Measure::Ce | Measure::Rnia if raw => {
            let (g, c) = (micro_transform(&candidate), micro_transform(&gold));
            let s = if args.measure == Measure::Ce {
                baseline::ce_raw(&g, &c)?
            } else {
                baseline::rnia_raw(&g, &c)?
            };
            ScoreLine {
                measure: args.measure,
                orientation: s.orientation().to_string(),
                value: s.value(),
                components: None,
            }
        }
        m => {
            let e = m.evaluate(&candidate, &gold)?;
            ScoreLine {
                measure: m,
                orientation: e.score.orientation().to_string(),
                value: e.score.value(),
                components: e.components,
            }
        }
    };
    Ok(render::score(&line, args.format))
}

pub fn metaeval(args: &MetaevalArgs) -> Result<String, CliError> {
    let measures = if args.measures.is_empty() {
        Measure::ALL.to_vec()
    } else {
        args.measures.clone()
    };
    if args.table1 {
        let report = metaeval::table1(&measures);
        let text = render::table1(&report, args.format);
        let mismatches = report.golden_mismatches().count();
        return if mismatches == 0 {
            Ok(text)
        } else {
            Err(CliError::GoldenMismatch(mismatches, text))
        };
    }
    let conditions = if args.conditions.is_empty() {
        Condition::ALL.to_vec()
    } else {
        args.conditions.clone()
    };
    let report = metaeval::run(&measures, &conditions, args.seeds, args.seed)?;
    Ok(render::compliance(&report, args.format))
}

pub fn run(cli: &Cli) -> Result<String, CliError> {
    match &cli.command {
        Command::Score(args) => score(args),
        Command::Metaeval(args) => metaeval(args),
    }
}
