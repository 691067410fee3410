//! Line-oriented text format for biclusterings.
//!
//! ```text
//! objects: 1,2,3
//! features: a,b
//! bicluster first | objects: 1,2 | features: a
//! bicluster second | objects: 3
//! ```
//!
//! A record without a `features` clause is a traditional cluster and uses
//! every declared feature. Blank lines and lines starting with `#` are
//! skipped. The serializer writes ids in universe order, so a file already
//! in that order round-trips byte for byte.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::sync::Arc;

use bieval::{Bicluster, Biclustering, FeatureId, ObjectId, Universe};
use indexmap::IndexSet;
use thiserror::Error;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: unknown {kind} `{id}`")]
    UnknownId { line: usize, kind: &'static str, id: String },
    #[error("line {line}: duplicate {kind} `{id}`")]
    DuplicateId { line: usize, kind: &'static str, id: String },
}

/// One body line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Record {
    pub name: String,
    pub bicluster: Bicluster,
    /// The line had no `features` clause.
    pub features_omitted: bool,
}

/// A parsed file: its universe and records in file order.
#[derive(Clone, Debug, PartialEq)]
pub struct Document {
    pub universe: Arc<Universe>,
    pub records: Vec<Record>,
}

impl Document {
    pub fn biclustering(&self) -> Biclustering {
        let biclusters = self.records.iter().map(|r| r.bicluster.clone()).collect();
        Biclustering::new(Arc::clone(&self.universe), biclusters).expect("records were checked against the universe")
    }

    /// Records named `b1`, `b2`, ... with explicit feature clauses.
    pub fn from_biclustering(b: &Biclustering) -> Self {
        Document {
            universe: b.shared_universe(),
            records: b
                .iter()
                .enumerate()
                .map(|(i, bc)| Record {
                    name: format!("b{}", i + 1),
                    bicluster: bc.clone(),
                    features_omitted: false,
                })
                .collect(),
        }
    }
}

fn syntax(line: usize, message: impl Into<String>) -> FormatError {
    FormatError::Syntax {
        line,
        message: message.into(),
    }
}

fn valid_id(id: &str) -> bool {
    !id.is_empty() && !id.chars().any(|c| c.is_whitespace() || c == ',' || c == '|')
}

/// Splits `key: a,b,c` into its ids, checking the key.
fn keyed_list<'a>(text: &'a str, key: &str, line: usize) -> Result<Vec<&'a str>, FormatError> {
    let rest = text
        .trim()
        .strip_prefix(key)
        .and_then(|r| r.strip_prefix(':'))
        .ok_or_else(|| syntax(line, format!("expected `{key}:`")))?
        .trim();
    if rest.is_empty() {
        return Ok(Vec::new());
    }
    rest.split(',')
        .map(|id| {
            let id = id.trim();
            if valid_id(id) {
                Ok(id)
            } else {
                Err(syntax(line, format!("invalid id `{id}` in `{key}` list")))
            }
        })
        .collect()
}

fn header<T: From<String> + Clone + std::hash::Hash + Eq>(
    text: &str,
    key: &str,
    kind: &'static str,
    line: usize,
) -> Result<IndexSet<T>, FormatError> {
    let mut out = IndexSet::new();
    for id in keyed_list(text, key, line)? {
        if !out.insert(T::from(id.to_owned())) {
            return Err(FormatError::DuplicateId {
                line,
                kind,
                id: id.to_owned(),
            });
        }
    }
    Ok(out)
}

fn part<T: Ord>(
    ids: Vec<&str>,
    kind: &'static str,
    line: usize,
    known: impl Fn(&str) -> Option<T>,
) -> Result<BTreeSet<T>, FormatError> {
    let mut out = BTreeSet::new();
    for id in ids {
        let value = known(id).ok_or_else(|| FormatError::UnknownId {
            line,
            kind,
            id: id.to_owned(),
        })?;
        if !out.insert(value) {
            return Err(FormatError::DuplicateId {
                line,
                kind,
                id: id.to_owned(),
            });
        }
    }
    Ok(out)
}

pub fn parse_biclustering(text: &str) -> Result<Document, FormatError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l))
        .filter(|(_, l)| !l.trim().is_empty() && !l.trim_start().starts_with('#'));

    let (n, first) = lines.next().ok_or_else(|| syntax(1, "missing `objects:` header"))?;
    let objects: IndexSet<ObjectId> = header(first, "objects", "object", n)?;
    let (n, second) = lines.next().ok_or_else(|| syntax(n + 1, "missing `features:` header"))?;
    let features: IndexSet<FeatureId> = header(second, "features", "feature", n)?;
    let universe = Arc::new(
        Universe::new(objects.iter().cloned(), features.iter().cloned()).expect("headers reject duplicates"),
    );

    let mut records = Vec::new();
    for (n, line) in lines {
        let mut clauses = line.split('|');
        let head = clauses.next().unwrap_or_default().trim();
        let name = head
            .strip_prefix("bicluster")
            .filter(|rest| rest.starts_with(char::is_whitespace))
            .map(str::trim)
            .filter(|name| valid_id(name))
            .ok_or_else(|| syntax(n, "expected `bicluster <name>`"))?;
        let object_clause = clauses.next().ok_or_else(|| syntax(n, "missing `objects:` clause"))?;
        let object_part = part(keyed_list(object_clause, "objects", n)?, "object", n, |id| {
            let id = ObjectId::from(id);
            universe.contains_object(&id).then_some(id)
        })?;
        let feature_clause = clauses.next();
        if clauses.next().is_some() {
            return Err(syntax(n, "too many clauses"));
        }
        let (feature_part, features_omitted) = match feature_clause {
            Some(clause) => {
                let ids = keyed_list(clause, "features", n)?;
                let set = part(ids, "feature", n, |id| {
                    let id = FeatureId::from(id);
                    universe.contains_feature(&id).then_some(id)
                })?;
                (set, false)
            }
            None => (universe.all_features(), true),
        };
        records.push(Record {
            name: name.to_owned(),
            bicluster: Bicluster {
                objects: object_part,
                features: feature_part,
            },
            features_omitted,
        });
    }
    Ok(Document { universe, records })
}

fn write_list<'a>(out: &mut String, key: &str, ids: impl Iterator<Item = &'a str>) {
    out.push_str(key);
    out.push(':');
    let ids: Vec<&str> = ids.collect();
    if !ids.is_empty() {
        out.push(' ');
        out.push_str(&ids.join(","));
    }
}

pub fn serialize(doc: &Document) -> String {
    let u = &doc.universe;
    let mut out = String::new();
    write_list(&mut out, "objects", u.objects().map(ObjectId::as_str));
    out.push('\n');
    write_list(&mut out, "features", u.features().map(FeatureId::as_str));
    out.push('\n');
    for r in &doc.records {
        let _ = write!(out, "bicluster {} | ", r.name);
        let objects = u.objects().filter(|o| r.bicluster.objects.contains(*o));
        write_list(&mut out, "objects", objects.map(ObjectId::as_str));
        if !r.features_omitted {
            out.push_str(" | ");
            let features = u.features().filter(|f| r.bicluster.features.contains(*f));
            write_list(&mut out, "features", features.map(FeatureId::as_str));
        }
        out.push('\n');
    }
    out
}
