//! Micro-object measures: CE, RNIA, Rand's index, VI and E4SC.
//!
//! All take two clusterings over the same item type, normally the
//! micro-clusterings of a candidate and a gold biclustering. Empty
//! clusters are ignored. CE and RNIA are dissimilarities in `[0, 1]` and
//! are reported as `1 - d` by [`ce`] and [`rnia`]; VI stays a
//! dissimilarity because it is unbounded.

use std::collections::{BTreeSet, HashMap};

use crate::error::{ScoreError, Side};
use crate::indexed::{contingency, intern, CompensatedSum, IndexedPair};
use crate::matching::max_weight_assignment;
use crate::model::Clustering;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Orientation {
    Similarity,
    Dissimilarity,
}

impl std::fmt::Display for Orientation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Orientation::Similarity => "similarity",
            Orientation::Dissimilarity => "dissimilarity",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Range {
    /// `[0, 1]`
    Unit,
    /// `[0, ∞)`
    NonNegative,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Score {
    value: f64,
    orientation: Orientation,
    range: Range,
}

impl Score {
    pub fn similarity(value: f64) -> Self {
        debug_assert!((0.0..=1.0).contains(&value), "similarity {value} out of range");
        Self {
            value,
            orientation: Orientation::Similarity,
            range: Range::Unit,
        }
    }

    pub fn unit_dissimilarity(value: f64) -> Self {
        debug_assert!((0.0..=1.0).contains(&value), "dissimilarity {value} out of range");
        Self {
            value,
            orientation: Orientation::Dissimilarity,
            range: Range::Unit,
        }
    }

    pub fn unbounded_dissimilarity(value: f64) -> Self {
        debug_assert!(value >= 0.0);
        Self {
            value,
            orientation: Orientation::Dissimilarity,
            range: Range::NonNegative,
        }
    }

    pub fn value(&self) -> f64 {
        self.value
    }

    pub fn orientation(&self) -> Orientation {
        self.orientation
    }

    pub fn range(&self) -> Range {
        self.range
    }

    /// `1 - d` for a `[0, 1]` dissimilarity; `None` for unbounded ones.
    pub fn to_similarity(self) -> Option<Score> {
        match (self.orientation, self.range) {
            (Orientation::Similarity, _) => Some(self),
            (Orientation::Dissimilarity, Range::Unit) => Some(Score::similarity(1.0 - self.value)),
            (Orientation::Dissimilarity, Range::NonNegative) => None,
        }
    }
}

/// Best one-to-one cluster/class matching by micro-object overlap.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatchingResult {
    /// `(cluster position, class position)` pairs with a nonzero overlap.
    pub pairs: Vec<(usize, usize)>,
    pub dmax: usize,
}

fn matching_of(pair: &IndexedPair) -> MatchingResult {
    let table = contingency(pair);
    let weights: Vec<Vec<u64>> = table
        .iter()
        .map(|row| row.iter().map(|&n| n as u64).collect())
        .collect();
    let (assignment, total) = max_weight_assignment(&weights);
    let pairs = assignment
        .iter()
        .enumerate()
        .filter_map(|(g, c)| c.map(|c| (g, c)))
        .filter(|&(g, c)| table[g][c] > 0)
        .map(|(g, c)| (pair.candidate.positions[g], pair.gold.positions[c]))
        .collect();
    MatchingResult {
        pairs,
        dmax: total as usize,
    }
}

pub fn best_matching<T: Ord>(g: &Clustering<T>, c: &Clustering<T>) -> MatchingResult {
    matching_of(&intern(g, c))
}

/// Clustering Error `(|U| - D_max) / |U|` as a dissimilarity.
///
/// With overlapping clusters an item counts in `|U|` as often as the side
/// covering it more often does, which keeps `D_max <= |U|`. Without overlap
/// this is the plain size of the union.
pub fn ce_raw<T: Ord>(g: &Clustering<T>, c: &Clustering<T>) -> Result<Score, ScoreError> {
    let pair = intern(g, c);
    if pair.n_items == 0 {
        return Err(ScoreError::Undefined("both clusterings are empty"));
    }
    let u = pair
        .candidate
        .membership
        .iter()
        .zip(&pair.gold.membership)
        .map(|(a, b)| a.len().max(b.len()))
        .sum::<usize>() as f64;
    let dmax = matching_of(&pair).dmax as f64;
    Ok(Score::unit_dissimilarity((u - dmax) / u))
}

pub fn ce<T: Ord>(g: &Clustering<T>, c: &Clustering<T>) -> Result<Score, ScoreError> {
    Ok(ce_raw(g, c)?.to_similarity().expect("CE is bounded"))
}

/// Relative Non-Intersecting Area `(|U| - |I|) / |U|` as a dissimilarity.
pub fn rnia_raw<T: Ord>(g: &Clustering<T>, c: &Clustering<T>) -> Result<Score, ScoreError> {
    let pair = intern(g, c);
    if pair.n_items == 0 {
        return Err(ScoreError::Undefined("both clusterings are empty"));
    }
    let both = (0..pair.n_items as u32)
        .filter(|&i| pair.candidate.is_clustered(i) && pair.gold.is_clustered(i))
        .count();
    let u = pair.n_items as f64;
    Ok(Score::unit_dissimilarity((u - both as f64) / u))
}

pub fn rnia<T: Ord>(g: &Clustering<T>, c: &Clustering<T>) -> Result<Score, ScoreError> {
    Ok(rnia_raw(g, c)?.to_similarity().expect("RNIA is bounded"))
}

/// Per-item labels after singleton completion. Unclustered items get a
/// fresh label of their own.
fn partition_labels(pair: &IndexedPair, side: Side) -> Result<Vec<usize>, ScoreError> {
    let indexed = match side {
        Side::Candidate => &pair.candidate,
        Side::Gold => &pair.gold,
    };
    let mut next = indexed.clusters.len();
    let mut labels = Vec::with_capacity(pair.n_items);
    for memb in &indexed.membership {
        match memb.as_slice() {
            [] => {
                labels.push(next);
                next += 1;
            }
            [k] => labels.push(*k as usize),
            [a, b, ..] => {
                return Err(ScoreError::NotAPartition {
                    side,
                    first: indexed.positions[*a as usize],
                    second: indexed.positions[*b as usize],
                })
            }
        }
    }
    Ok(labels)
}

struct Completed {
    n: usize,
    candidate_sizes: HashMap<usize, usize>,
    gold_sizes: HashMap<usize, usize>,
    joint: HashMap<(usize, usize), usize>,
}

fn completed_partitions<T: Ord>(g: &Clustering<T>, c: &Clustering<T>) -> Result<Completed, ScoreError> {
    let pair = intern(g, c);
    let lg = partition_labels(&pair, Side::Candidate)?;
    let lc = partition_labels(&pair, Side::Gold)?;
    let mut out = Completed {
        n: pair.n_items,
        candidate_sizes: HashMap::new(),
        gold_sizes: HashMap::new(),
        joint: HashMap::new(),
    };
    for (&a, &b) in lg.iter().zip(&lc) {
        *out.candidate_sizes.entry(a).or_default() += 1;
        *out.gold_sizes.entry(b).or_default() += 1;
        *out.joint.entry((a, b)).or_default() += 1;
    }
    Ok(out)
}

fn pairs(n: usize) -> u128 {
    let n = n as u128;
    n * n.saturating_sub(1) / 2
}

/// Rand's index `(N00 + N11) / N` over unordered distinct pairs of the
/// joint clustered universe, after singleton completion of both sides.
pub fn rand<T: Ord>(g: &Clustering<T>, c: &Clustering<T>) -> Result<Score, ScoreError> {
    let p = completed_partitions(g, c)?;
    if p.n < 2 {
        return Err(ScoreError::Undefined("fewer than two clustered items"));
    }
    let total = pairs(p.n);
    let n11: u128 = p.joint.values().map(|&n| pairs(n)).sum();
    let same_g: u128 = p.candidate_sizes.values().map(|&n| pairs(n)).sum();
    let same_c: u128 = p.gold_sizes.values().map(|&n| pairs(n)).sum();
    let n00 = total + n11 - same_g - same_c;
    Ok(Score::similarity((n00 + n11) as f64 / total as f64))
}

/// Variation of information in bits, after singleton completion.
pub fn vi<T: Ord>(g: &Clustering<T>, c: &Clustering<T>) -> Result<Score, ScoreError> {
    let p = completed_partitions(g, c)?;
    if p.n == 0 {
        return Err(ScoreError::Undefined("both clusterings are empty"));
    }
    let mut cells: Vec<(&(usize, usize), &usize)> = p.joint.iter().collect();
    cells.sort_unstable();
    let mut sum = CompensatedSum::default();
    for (&(a, b), &nab) in cells {
        let ga = p.candidate_sizes[&a] as f64;
        let cb = p.gold_sizes[&b] as f64;
        let nab = nab as f64;
        sum.add(nab * (ga * cb / (nab * nab)).log2());
    }
    Ok(Score::unbounded_dissimilarity((sum.value() / p.n as f64).max(0.0)))
}

/// `|a ∩ b| / |a|`; recall is the same with the arguments swapped.
pub fn set_precision<T: Ord>(a: &BTreeSet<T>, b: &BTreeSet<T>) -> Result<f64, ScoreError> {
    if a.is_empty() {
        return Err(ScoreError::Undefined("precision of an empty set"));
    }
    Ok(a.intersection(b).count() as f64 / a.len() as f64)
}

fn set_f1(inter: usize, a: usize, b: usize) -> f64 {
    if inter == 0 {
        return 0.0;
    }
    let p = inter as f64 / a as f64;
    let r = inter as f64 / b as f64;
    2.0 * p * r / (p + r)
}

fn harmonic(a: f64, b: f64) -> f64 {
    if a + b == 0.0 {
        0.0
    } else {
        2.0 * a * b / (a + b)
    }
}

/// Mean over the rows of `table` of the best F1 in the row.
/// Ties inside the max do not matter since only the value is used.
fn macro_f1(table: &[Vec<usize>], row_sizes: &[usize], col_sizes: &[usize], transpose: bool) -> f64 {
    let (rows, cols) = if transpose {
        (col_sizes.len(), row_sizes.len())
    } else {
        (row_sizes.len(), col_sizes.len())
    };
    let mut sum = CompensatedSum::default();
    for r in 0..rows {
        let best = (0..cols)
            .map(|c| {
                if transpose {
                    set_f1(table[c][r], col_sizes[r], row_sizes[c])
                } else {
                    set_f1(table[r][c], row_sizes[r], col_sizes[c])
                }
            })
            .fold(0.0, f64::max);
        sum.add(best);
    }
    sum.value() / rows as f64
}

/// E4SC: harmonic mean of the candidate's and the gold standard's
/// macro-averaged best-match F1.
pub fn e4sc<T: Ord>(g: &Clustering<T>, c: &Clustering<T>) -> Result<Score, ScoreError> {
    let pair = intern(g, c);
    if pair.candidate.clusters.is_empty() {
        return Err(ScoreError::Undefined("candidate has no nonempty cluster"));
    }
    if pair.gold.clusters.is_empty() {
        return Err(ScoreError::Undefined("gold standard has no nonempty cluster"));
    }
    let table = contingency(&pair);
    let gs: Vec<usize> = pair.candidate.clusters.iter().map(Vec::len).collect();
    let cs: Vec<usize> = pair.gold.clusters.iter().map(Vec::len).collect();
    let forward = macro_f1(&table, &gs, &cs, false);
    let backward = macro_f1(&table, &gs, &cs, true);
    Ok(Score::similarity(harmonic(forward, backward)))
}
