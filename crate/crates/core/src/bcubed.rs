//! BCubed, CICE-BCubed and MOCICE-BCubed precision, recall and F1.
//!
//! Every measure here is a pairwise BCubed summation. For an item `x` of
//! the candidate's clustered universe, precision averages `ς(x, y)` over
//! every `y` sharing a cluster with `x` (including `x` itself), and the
//! per-item averages are averaged again. Recall is the dual over the gold
//! standard's clustered universe with `τ`.
//!
//! `ς` and `τ` count shared clusters and shared classes by position, so
//! duplicate clusters weigh twice. CICE multiplies by the Cluster Identity
//! Index `Φ`, the average over shared clusters of the best Jaccard
//! coefficient against shared classes; plain BCubed fixes `Φ = 1`.
//!
//! MOCICE runs the CICE summation on the micro-clusterings of two
//! biclusterings, with each sum taken over its own side's clustered
//! universe. CICE and BCubed on traditional clusterings require both
//! sides to cluster the same items.

use crate::error::{ScoreError, Side};
use crate::indexed::{intern, intersect_into, intersection_len, CompensatedSum, IndexedPair};
use crate::micro::micro_transform;
use crate::model::{Biclustering, Clustering};

/// Whether the Cluster Identity Index is applied.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Identity {
    /// CICE-BCubed: `Φ` as defined.
    Cluster,
    /// Plain BCubed: `Φ ≡ 1`.
    None,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PrecisionRecall {
    pub precision: f64,
    pub recall: f64,
}

impl PrecisionRecall {
    /// Harmonic mean, 0 when both components are 0.
    pub fn f1(&self) -> f64 {
        let (p, r) = (self.precision, self.recall);
        if p + r == 0.0 {
            0.0
        } else {
            2.0 * p * r / (p + r)
        }
    }
}

/// Shared-membership bookkeeping for one (candidate, gold) pair.
///
/// Items are dense indices; clusters and classes are positions among the
/// nonempty ones.
pub struct PairContext {
    pair: IndexedPair,
    /// Row-major `|clusters| × |classes|` Jaccard coefficients.
    jaccard: Vec<f64>,
    identity: Identity,
}

impl PairContext {
    fn build(pair: IndexedPair, identity: Identity) -> Self {
        let n_classes = pair.gold.clusters.len();
        let mut jaccard = Vec::new();
        if identity == Identity::Cluster {
            jaccard.reserve(pair.candidate.clusters.len() * n_classes);
            for g in &pair.candidate.clusters {
                for c in &pair.gold.clusters {
                    let inter = intersection_len(g, c);
                    let union = g.len() + c.len() - inter;
                    jaccard.push(inter as f64 / union as f64);
                }
            }
        }
        Self {
            pair,
            jaccard,
            identity,
        }
    }

    pub fn new<T: Ord>(g: &Clustering<T>, c: &Clustering<T>, identity: Identity) -> Self {
        Self::build(intern(g, c), identity)
    }

    /// Candidate clusters containing `x`.
    pub fn g_clusters_of(&self, x: u32) -> &[u32] {
        &self.pair.candidate.membership[x as usize]
    }

    /// Gold classes containing `x`.
    pub fn c_classes_of(&self, x: u32) -> &[u32] {
        &self.pair.gold.membership[x as usize]
    }

    pub fn shared_g(&self, x: u32, y: u32) -> usize {
        intersection_len(self.g_clusters_of(x), self.g_clusters_of(y))
    }

    pub fn shared_c(&self, x: u32, y: u32) -> usize {
        intersection_len(self.c_classes_of(x), self.c_classes_of(y))
    }

    fn phi_with(&self, x: u32, y: u32, gs: &mut Vec<u32>, cs: &mut Vec<u32>) -> f64 {
        if self.identity == Identity::None {
            return 1.0;
        }
        intersect_into(self.g_clusters_of(x), self.g_clusters_of(y), gs);
        intersect_into(self.c_classes_of(x), self.c_classes_of(y), cs);
        debug_assert!(!gs.is_empty() && !cs.is_empty());
        let n_classes = self.pair.gold.clusters.len();
        let mut sum = 0.0;
        for &g in gs.iter() {
            let row = &self.jaccard[g as usize * n_classes..(g as usize + 1) * n_classes];
            sum += cs.iter().map(|&c| row[c as usize]).fold(0.0, f64::max);
        }
        sum / gs.len() as f64
    }

    /// Cluster Identity Index of an item pair. Both shared sets must be
    /// nonempty.
    pub fn cii(&self, x: u32, y: u32) -> Result<f64, ScoreError> {
        if self.shared_g(x, y) == 0 || self.shared_c(x, y) == 0 {
            return Err(ScoreError::Contract(
                "pair must share a candidate cluster and a gold class",
            ));
        }
        Ok(self.phi_with(x, y, &mut Vec::new(), &mut Vec::new()))
    }

    fn pair_score(&self, x: u32, y: u32, by: Side, gs: &mut Vec<u32>, cs: &mut Vec<u32>) -> f64 {
        let sg = self.shared_g(x, y);
        let sc = self.shared_c(x, y);
        let denom = match by {
            Side::Candidate => sg,
            Side::Gold => sc,
        };
        debug_assert!(denom > 0);
        let m = sg.min(sc);
        if m == 0 {
            return 0.0;
        }
        m as f64 * self.phi_with(x, y, gs, cs) / denom as f64
    }

    /// `ς(x, y)`; requires `x` and `y` to share a candidate cluster.
    pub fn varsigma(&self, x: u32, y: u32) -> Result<f64, ScoreError> {
        if self.shared_g(x, y) == 0 {
            return Err(ScoreError::Contract("pair must share a candidate cluster"));
        }
        Ok(self.pair_score(x, y, Side::Candidate, &mut Vec::new(), &mut Vec::new()))
    }

    /// `τ(x, y)`; requires `x` and `y` to share a gold class.
    pub fn tau(&self, x: u32, y: u32) -> Result<f64, ScoreError> {
        if self.shared_c(x, y) == 0 {
            return Err(ScoreError::Contract("pair must share a gold class"));
        }
        Ok(self.pair_score(x, y, Side::Gold, &mut Vec::new(), &mut Vec::new()))
    }

    /// Pairwise summation over the clustered universe of `side`:
    /// precision for the candidate, recall for the gold standard.
    /// `None` when that universe is empty.
    fn summation(&self, side: Side) -> Option<f64> {
        let (own, n_items) = match side {
            Side::Candidate => (&self.pair.candidate, self.pair.n_items),
            Side::Gold => (&self.pair.gold, self.pair.n_items),
        };
        let clustered = own.n_clustered();
        if clustered == 0 {
            return None;
        }
        let mut stamp = vec![u32::MAX; n_items];
        let mut reach = Vec::new();
        let (mut gs, mut cs) = (Vec::new(), Vec::new());
        let mut total = CompensatedSum::default();
        for x in own.clustered_items() {
            reach.clear();
            for &k in &own.membership[x as usize] {
                for &y in &own.clusters[k as usize] {
                    if stamp[y as usize] != x {
                        stamp[y as usize] = x;
                        reach.push(y);
                    }
                }
            }
            reach.sort_unstable();
            let mut inner = CompensatedSum::default();
            for &y in &reach {
                inner.add(self.pair_score(x, y, side, &mut gs, &mut cs));
            }
            total.add(inner.value() / reach.len() as f64);
        }
        Some(total.value() / clustered as f64)
    }

    pub fn precision(&self) -> Option<f64> {
        self.summation(Side::Candidate)
    }

    pub fn recall(&self) -> Option<f64> {
        self.summation(Side::Gold)
    }

    /// Dense index of an item, if it occurs in either clustering.
    pub fn item_index<T: Ord>(g: &Clustering<T>, c: &Clustering<T>, item: &T) -> Option<u32> {
        let all: std::collections::BTreeSet<&T> = g.iter().chain(c.iter()).flatten().collect();
        all.iter().position(|&t| t == item).map(|i| i as u32)
    }
}

fn item_pair<T: Ord>(g: &Clustering<T>, c: &Clustering<T>, o: &T, p: &T) -> Result<(u32, u32), ScoreError> {
    let x = PairContext::item_index(g, c, o).ok_or(ScoreError::Contract("item is not clustered"))?;
    let y = PairContext::item_index(g, c, p).ok_or(ScoreError::Contract("item is not clustered"))?;
    Ok((x, y))
}

/// Cluster Identity Index `Φ(o, o')`.
pub fn cii<T: Ord>(o: &T, p: &T, g: &Clustering<T>, c: &Clustering<T>) -> Result<f64, ScoreError> {
    let (x, y) = item_pair(g, c, o, p)?;
    PairContext::new(g, c, Identity::Cluster).cii(x, y)
}

pub fn varsigma<T: Ord>(o: &T, p: &T, g: &Clustering<T>, c: &Clustering<T>) -> Result<f64, ScoreError> {
    let (x, y) = item_pair(g, c, o, p)?;
    PairContext::new(g, c, Identity::Cluster).varsigma(x, y)
}

pub fn tau<T: Ord>(o: &T, p: &T, g: &Clustering<T>, c: &Clustering<T>) -> Result<f64, ScoreError> {
    let (x, y) = item_pair(g, c, o, p)?;
    PairContext::new(g, c, Identity::Cluster).tau(x, y)
}

/// Precision and recall on two clusterings that cluster the same items.
pub fn covered<T: Ord>(g: &Clustering<T>, c: &Clustering<T>, identity: Identity) -> Result<PrecisionRecall, ScoreError> {
    let pair = intern(g, c);
    for item in 0..pair.n_items as u32 {
        match (pair.candidate.is_clustered(item), pair.gold.is_clustered(item)) {
            (true, false) => {
                return Err(ScoreError::Coverage {
                    covered: Side::Candidate,
                    uncovered: Side::Gold,
                })
            }
            (false, true) => {
                return Err(ScoreError::Coverage {
                    covered: Side::Gold,
                    uncovered: Side::Candidate,
                })
            }
            _ => {}
        }
    }
    let ctx = PairContext::build(pair, identity);
    match (ctx.precision(), ctx.recall()) {
        (Some(precision), Some(recall)) => Ok(PrecisionRecall { precision, recall }),
        _ => Err(ScoreError::Undefined("no clustered items")),
    }
}

pub fn cice<T: Ord>(g: &Clustering<T>, c: &Clustering<T>) -> Result<PrecisionRecall, ScoreError> {
    covered(g, c, Identity::Cluster)
}

pub fn cice_precision<T: Ord>(g: &Clustering<T>, c: &Clustering<T>) -> Result<f64, ScoreError> {
    Ok(cice(g, c)?.precision)
}

pub fn cice_recall<T: Ord>(g: &Clustering<T>, c: &Clustering<T>) -> Result<f64, ScoreError> {
    Ok(cice(g, c)?.recall)
}

pub fn cice_f1<T: Ord>(g: &Clustering<T>, c: &Clustering<T>) -> Result<f64, ScoreError> {
    Ok(cice(g, c)?.f1())
}

pub fn bcubed<T: Ord>(g: &Clustering<T>, c: &Clustering<T>) -> Result<PrecisionRecall, ScoreError> {
    covered(g, c, Identity::None)
}

pub fn bcubed_f1<T: Ord>(g: &Clustering<T>, c: &Clustering<T>) -> Result<f64, ScoreError> {
    Ok(bcubed(g, c)?.f1())
}

fn micro_context(gb: &Biclustering, cb: &Biclustering) -> PairContext {
    PairContext::new(&micro_transform(gb), &micro_transform(cb), Identity::Cluster)
}

/// MOCICE-BCubed precision and recall of a candidate biclustering.
pub fn mocice(gb: &Biclustering, cb: &Biclustering) -> Result<PrecisionRecall, ScoreError> {
    let ctx = micro_context(gb, cb);
    let precision = ctx
        .precision()
        .ok_or(ScoreError::Undefined("candidate clusters no micro-object"))?;
    let recall = ctx
        .recall()
        .ok_or(ScoreError::Undefined("gold standard clusters no micro-object"))?;
    Ok(PrecisionRecall { precision, recall })
}

pub fn mocice_precision(gb: &Biclustering, cb: &Biclustering) -> Result<f64, ScoreError> {
    micro_context(gb, cb)
        .precision()
        .ok_or(ScoreError::Undefined("candidate clusters no micro-object"))
}

pub fn mocice_recall(gb: &Biclustering, cb: &Biclustering) -> Result<f64, ScoreError> {
    micro_context(gb, cb)
        .recall()
        .ok_or(ScoreError::Undefined("gold standard clusters no micro-object"))
}

pub fn mocice_f1(gb: &Biclustering, cb: &Biclustering) -> Result<f64, ScoreError> {
    Ok(mocice(gb, cb)?.f1())
}
