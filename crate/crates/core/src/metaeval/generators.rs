//! Scenario generators, one per condition.
//!
//! Conditions on traditional clusterings (`A1`-`A4`) are built on numbered
//! objects `"1", "2", ...` and embedded as biclusterings that share one
//! feature subset `X`. Features are named `"1'", "2'", ...`. Every
//! generator is a pure function of its parameters; the `random` parameter
//! constructors draw from a caller-supplied RNG.

use std::collections::BTreeSet;
use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::micro::micro_transform;
use crate::model::{Bicluster, Biclustering, FeatureId, ObjectId, Universe};
use crate::structural;

use super::fixtures;
use super::scenario::{Condition, Scenario};

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum GenerationError {
    #[error("invalid {condition} parameters: {reason}")]
    Params {
        condition: Condition,
        reason: String,
    },
}

fn invalid<T>(condition: Condition, reason: impl Into<String>) -> Result<T, GenerationError> {
    Err(GenerationError::Params {
        condition,
        reason: reason.into(),
    })
}

pub fn feature_name(k: usize) -> FeatureId {
    FeatureId::new(format!("{k}'"))
}

/// Objects `"1"..="n"` and features `"1'"..="m'"`.
pub fn numbered_universe(n_objects: usize, n_features: usize) -> Arc<Universe> {
    Arc::new(
        Universe::new(1..=n_objects, (1..=n_features).map(feature_name))
            .expect("numbered ids are unique"),
    )
}

fn feature_subset(x: &[usize]) -> BTreeSet<FeatureId> {
    x.iter().map(|&k| feature_name(k)).collect()
}

/// Embeds clusters of object numbers as biclusters sharing `x`.
pub fn embed(universe: &Arc<Universe>, parts: &[Vec<usize>], x: &BTreeSet<FeatureId>) -> Biclustering {
    let biclusters = parts
        .iter()
        .map(|p| Bicluster {
            objects: p.iter().map(|&o| ObjectId::from(o)).collect(),
            features: x.clone(),
        })
        .collect();
    Biclustering::new(Arc::clone(universe), biclusters).expect("embedded parts lie in the universe")
}

fn check_x(condition: Condition, n_features: usize, x: &[usize]) -> Result<(), GenerationError> {
    if n_features == 0 || x.is_empty() {
        return invalid(condition, "feature subset X must be nonempty");
    }
    let distinct: BTreeSet<_> = x.iter().collect();
    if distinct.len() != x.len() || x.iter().any(|&k| k == 0 || k > n_features) {
        return invalid(condition, "X must list distinct features in 1..=n_features");
    }
    Ok(())
}

fn random_x<R: Rng>(rng: &mut R) -> (usize, Vec<usize>) {
    let n_features = rng.gen_range(1..=3);
    let mut x: Vec<usize> = (1..=n_features).filter(|_| rng.gen_bool(0.6)).collect();
    if x.is_empty() {
        x.push(rng.gen_range(1..=n_features));
    }
    (n_features, x)
}

/// Random partition of `items` into nonempty clusters.
fn random_partition<R: Rng>(mut items: Vec<usize>, rng: &mut R) -> Vec<Vec<usize>> {
    items.shuffle(rng);
    let mut out = Vec::new();
    while !items.is_empty() {
        let k = rng.gen_range(1..=items.len());
        let mut part: Vec<usize> = items.drain(..k).collect();
        part.sort_unstable();
        out.push(part);
    }
    out
}

/// Consecutive class blocks: class `i` holds objects `starts[i]..starts[i]+sizes[i]`.
fn class_blocks(sizes: &[usize]) -> Vec<Vec<usize>> {
    let mut next = 1;
    sizes
        .iter()
        .map(|&s| {
            let block: Vec<usize> = (next..next + s).collect();
            next += s;
            block
        })
        .collect()
}

fn check_rest(condition: Condition, rest: &[Vec<usize>], expected: &BTreeSet<usize>) -> Result<(), GenerationError> {
    let mut seen = BTreeSet::new();
    for part in rest {
        if part.is_empty() {
            return invalid(condition, "remaining clusters must be nonempty");
        }
        for &o in part {
            if !seen.insert(o) {
                return invalid(condition, format!("object {o} appears twice in the remaining clusters"));
            }
        }
    }
    if &seen != expected {
        return invalid(condition, "remaining clusters must partition the remaining objects");
    }
    Ok(())
}

/// A1: the worse clustering has one cluster mixing two classes; the better
/// one splits it into its two pure parts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomogeneityParams {
    pub class_sizes: Vec<usize>,
    /// Indices of the two classes meeting in the mixed cluster.
    pub mixed: (usize, usize),
    /// How many leading members of each mixed class the cluster takes.
    pub take: (usize, usize),
    /// Clusters over all remaining objects, identical on both sides.
    pub rest: Vec<Vec<usize>>,
    pub n_features: usize,
    pub x: Vec<usize>,
}

impl HomogeneityParams {
    pub fn minimal() -> Self {
        Self {
            class_sizes: vec![1, 1],
            mixed: (0, 1),
            take: (1, 1),
            rest: vec![],
            n_features: 1,
            x: vec![1],
        }
    }

    pub fn random<R: Rng>(rng: &mut R) -> Self {
        let n_classes = rng.gen_range(2..=5);
        let class_sizes: Vec<usize> = (0..n_classes).map(|_| rng.gen_range(1..=4)).collect();
        let picked: Vec<usize> = rand::seq::index::sample(rng, n_classes, 2).into_vec();
        let mixed = (picked[0], picked[1]);
        let take = (
            rng.gen_range(1..=class_sizes[mixed.0]),
            rng.gen_range(1..=class_sizes[mixed.1]),
        );
        let blocks = class_blocks(&class_sizes);
        let used: BTreeSet<usize> = blocks[mixed.0][..take.0]
            .iter()
            .chain(&blocks[mixed.1][..take.1])
            .copied()
            .collect();
        let remaining: Vec<usize> = blocks.iter().flatten().copied().filter(|o| !used.contains(o)).collect();
        let rest = random_partition(remaining, rng);
        let (n_features, x) = random_x(rng);
        Self {
            class_sizes,
            mixed,
            take,
            rest,
            n_features,
            x,
        }
    }
}

pub fn gen_homogeneity(p: &HomogeneityParams, label: &str) -> Result<Scenario, GenerationError> {
    let cond = Condition::A1;
    check_x(cond, p.n_features, &p.x)?;
    let n_classes = p.class_sizes.len();
    if p.class_sizes.iter().any(|&s| s == 0) {
        return invalid(cond, "class sizes must be at least 1");
    }
    if p.mixed.0 == p.mixed.1 || p.mixed.0 >= n_classes || p.mixed.1 >= n_classes {
        return invalid(cond, "mixed classes must be two distinct existing classes");
    }
    if p.take.0 == 0 || p.take.1 == 0 {
        return invalid(cond, "each side of the split must take at least one object");
    }
    if p.take.0 > p.class_sizes[p.mixed.0] || p.take.1 > p.class_sizes[p.mixed.1] {
        return invalid(cond, "split takes more objects than the class holds");
    }
    let blocks = class_blocks(&p.class_sizes);
    let first: Vec<usize> = blocks[p.mixed.0][..p.take.0].to_vec();
    let second: Vec<usize> = blocks[p.mixed.1][..p.take.1].to_vec();
    let used: BTreeSet<usize> = first.iter().chain(&second).copied().collect();
    let remaining: BTreeSet<usize> = blocks.iter().flatten().copied().filter(|o| !used.contains(o)).collect();
    check_rest(cond, &p.rest, &remaining)?;

    let universe = numbered_universe(p.class_sizes.iter().sum(), p.n_features);
    let x = feature_subset(&p.x);
    let mut mixed: Vec<usize> = used.into_iter().collect();
    mixed.sort_unstable();
    let mut worse = p.rest.clone();
    worse.push(mixed);
    let mut better = p.rest.clone();
    better.push(first);
    better.push(second);
    Ok(Scenario::new(
        cond,
        label,
        embed(&universe, &blocks, &x),
        embed(&universe, &better, &x),
        Some(embed(&universe, &worse, &x)),
    ))
}

/// A2: the worse clustering splits part of one class over two clusters;
/// the better one merges them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompletenessParams {
    pub class_sizes: Vec<usize>,
    pub class: usize,
    /// Sizes of the two pure clusters, taken from the class's leading members.
    pub take: (usize, usize),
    pub rest: Vec<Vec<usize>>,
    pub n_features: usize,
    pub x: Vec<usize>,
}

impl CompletenessParams {
    pub fn minimal() -> Self {
        Self {
            class_sizes: vec![2],
            class: 0,
            take: (1, 1),
            rest: vec![],
            n_features: 1,
            x: vec![1],
        }
    }

    pub fn random<R: Rng>(rng: &mut R) -> Self {
        let n_classes = rng.gen_range(1..=5);
        let mut class_sizes: Vec<usize> = (0..n_classes).map(|_| rng.gen_range(1..=4)).collect();
        let class = rng.gen_range(0..n_classes);
        if class_sizes[class] < 2 {
            class_sizes[class] = rng.gen_range(2..=4);
        }
        let first = rng.gen_range(1..class_sizes[class]);
        let second = rng.gen_range(1..=class_sizes[class] - first);
        let blocks = class_blocks(&class_sizes);
        let used: BTreeSet<usize> = blocks[class][..first + second].iter().copied().collect();
        let remaining: Vec<usize> = blocks.iter().flatten().copied().filter(|o| !used.contains(o)).collect();
        let rest = random_partition(remaining, rng);
        let (n_features, x) = random_x(rng);
        Self {
            class_sizes,
            class,
            take: (first, second),
            rest,
            n_features,
            x,
        }
    }
}

pub fn gen_completeness(p: &CompletenessParams, label: &str) -> Result<Scenario, GenerationError> {
    let cond = Condition::A2;
    check_x(cond, p.n_features, &p.x)?;
    if p.class_sizes.iter().any(|&s| s == 0) {
        return invalid(cond, "class sizes must be at least 1");
    }
    if p.class >= p.class_sizes.len() {
        return invalid(cond, "class index out of range");
    }
    if p.take.0 == 0 || p.take.1 == 0 {
        return invalid(cond, "both pure clusters must be nonempty");
    }
    if p.take.0 + p.take.1 > p.class_sizes[p.class] {
        return invalid(cond, "pure clusters take more objects than the class holds");
    }
    let blocks = class_blocks(&p.class_sizes);
    let first = blocks[p.class][..p.take.0].to_vec();
    let second = blocks[p.class][p.take.0..p.take.0 + p.take.1].to_vec();
    let merged: Vec<usize> = first.iter().chain(&second).copied().collect();
    let used: BTreeSet<usize> = merged.iter().copied().collect();
    let remaining: BTreeSet<usize> = blocks.iter().flatten().copied().filter(|o| !used.contains(o)).collect();
    check_rest(cond, &p.rest, &remaining)?;

    let universe = numbered_universe(p.class_sizes.iter().sum(), p.n_features);
    let x = feature_subset(&p.x);
    let mut worse = p.rest.clone();
    worse.push(first);
    worse.push(second);
    let mut better = p.rest.clone();
    better.push(merged);
    Ok(Scenario::new(
        cond,
        label,
        embed(&universe, &blocks, &x),
        embed(&universe, &better, &x),
        Some(embed(&universe, &worse, &x)),
    ))
}

/// A3: a clean cluster of `n` same-class objects holds one intruder; the
/// better clustering moves the intruder to a noise cluster of `n` objects
/// from `n` distinct classes.
///
/// Objects `1..=n` are noise, `n + 1` is the intruder and
/// `n + 2..=2n + 1` form the clean class. `clean_extra` further members
/// of the clean class sit in a cluster of their own.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RagBagParams {
    pub n: usize,
    pub clean_extra: usize,
    pub n_features: usize,
    pub x: Vec<usize>,
}

impl RagBagParams {
    pub fn new(n: usize) -> Self {
        Self {
            n,
            clean_extra: 0,
            n_features: 3,
            x: vec![1, 2, 3],
        }
    }

    pub fn random<R: Rng>(rng: &mut R) -> Self {
        let (n_features, x) = random_x(rng);
        Self {
            n: rng.gen_range(2..=7),
            clean_extra: rng.gen_range(0..=2),
            n_features,
            x,
        }
    }
}

pub fn gen_ragbag_with(p: &RagBagParams, label: &str) -> Result<Scenario, GenerationError> {
    let cond = Condition::A3;
    check_x(cond, p.n_features, &p.x)?;
    if p.n < 2 {
        return invalid(cond, "rag bag needs n >= 2");
    }
    let n = p.n;
    let noise: Vec<usize> = (1..=n).collect();
    let intruder = n + 1;
    let clean: Vec<usize> = (n + 2..=2 * n + 1).collect();
    let extra: Vec<usize> = (2 * n + 2..2 * n + 2 + p.clean_extra).collect();
    let n_objects = 2 * n + 1 + p.clean_extra;

    let mut gold: Vec<Vec<usize>> = noise.iter().map(|&o| vec![o]).collect();
    gold.push(vec![intruder]);
    gold.push(clean.iter().chain(&extra).copied().collect());

    let mut worse = vec![noise.clone(), clean.iter().copied().chain([intruder]).collect()];
    let mut better = vec![noise.iter().copied().chain([intruder]).collect(), clean.clone()];
    for side in [&mut worse, &mut better] {
        for part in side.iter_mut() {
            part.sort_unstable();
        }
        if !extra.is_empty() {
            side.push(extra.clone());
        }
    }
    let universe = numbered_universe(n_objects, p.n_features);
    let x = feature_subset(&p.x);
    Ok(Scenario::new(
        cond,
        label,
        embed(&universe, &gold, &x),
        embed(&universe, &better, &x),
        Some(embed(&universe, &worse, &x)),
    ))
}

/// Rag bag with `n` noise objects over three features. `n = 4` gives the
/// Table 1 fixture.
pub fn gen_ragbag(n: usize) -> Result<Scenario, GenerationError> {
    gen_ragbag_with(&RagBagParams::new(n), &format!("n = {n}"))
}

/// A4: breaking `r` two-object clusters into singletons is worse than
/// splitting one off a large `r + 1` cluster.
///
/// Objects `1..=r+1` form the large class; each two-object cluster is its
/// own class.
pub fn gen_size_vs_quantity_with(r: usize, n_features: usize, x: &[usize], label: &str) -> Result<Scenario, GenerationError> {
    let cond = Condition::A4;
    check_x(cond, n_features, x)?;
    if r < 2 {
        return invalid(cond, "size versus quantity needs r >= 2");
    }
    let large: Vec<usize> = (1..=r + 1).collect();
    let pairs: Vec<Vec<usize>> = (0..r).map(|t| vec![r + 2 + 2 * t, r + 3 + 2 * t]).collect();
    let n_objects = 3 * r + 1;

    let mut gold = vec![large.clone()];
    gold.extend(pairs.iter().cloned());
    let mut worse = vec![large.clone()];
    worse.extend(pairs.iter().flatten().map(|&o| vec![o]));
    let mut better = vec![large[..r].to_vec(), vec![large[r]]];
    better.extend(pairs.iter().cloned());

    let universe = numbered_universe(n_objects, n_features);
    let x = feature_subset(x);
    Ok(Scenario::new(
        cond,
        label,
        embed(&universe, &gold, &x),
        embed(&universe, &better, &x),
        Some(embed(&universe, &worse, &x)),
    ))
}

pub fn gen_size_vs_quantity(r: usize) -> Result<Scenario, GenerationError> {
    gen_size_vs_quantity_with(r, 1, &[1], &format!("r = {r}"))
}

/// A random biclustering with `count` biclusters, each with nonempty parts.
pub fn random_biclustering<R: Rng>(universe: &Arc<Universe>, count: usize, rng: &mut R) -> Biclustering {
    let objects: Vec<ObjectId> = universe.objects().cloned().collect();
    let features: Vec<FeatureId> = universe.features().cloned().collect();
    let biclusters = (0..count)
        .map(|_| Bicluster {
            objects: random_nonempty_subset(&objects, rng),
            features: random_nonempty_subset(&features, rng),
        })
        .collect();
    Biclustering::new(Arc::clone(universe), biclusters).expect("drawn from the universe")
}

fn random_nonempty_subset<T: Ord + Clone, R: Rng>(items: &[T], rng: &mut R) -> BTreeSet<T> {
    let mut out: BTreeSet<T> = items.iter().filter(|_| rng.gen_bool(0.5)).cloned().collect();
    if out.is_empty() {
        out.insert(items.choose(rng).expect("nonempty pool").clone());
    }
    out
}

fn micro_identity(b: &Biclustering) -> Vec<BTreeSet<crate::micro::MicroObject>> {
    micro_transform(b).canonical_multiset()
}

/// Every single-step edit of `b`: toggling one object or feature of a
/// bicluster, moving an object between biclusters, dropping or duplicating
/// a bicluster, and adding a one-cell bicluster.
pub fn single_step_perturbations(b: &Biclustering) -> Vec<Biclustering> {
    let universe = b.shared_universe();
    let base = b.biclusters();
    let mut out: Vec<Vec<Bicluster>> = Vec::new();
    for (i, bc) in base.iter().enumerate() {
        for o in universe.objects() {
            let mut v = base.to_vec();
            if !v[i].objects.remove(o) {
                v[i].objects.insert(o.clone());
            }
            out.push(v);
        }
        for f in universe.features() {
            let mut v = base.to_vec();
            if !v[i].features.remove(f) {
                v[i].features.insert(f.clone());
            }
            out.push(v);
        }
        for o in &bc.objects {
            for j in (0..base.len()).filter(|&j| j != i) {
                let mut v = base.to_vec();
                v[i].objects.remove(o);
                v[j].objects.insert(o.clone());
                out.push(v);
            }
        }
        let mut dropped = base.to_vec();
        dropped.remove(i);
        out.push(dropped);
        let mut doubled = base.to_vec();
        doubled.push(bc.clone());
        out.push(doubled);
    }
    for o in universe.objects() {
        for f in universe.features() {
            let mut v = base.to_vec();
            v.push(Bicluster {
                objects: [o.clone()].into(),
                features: [f.clone()].into(),
            });
            out.push(v);
        }
    }
    out.into_iter()
        .map(|v| Biclustering::new(Arc::clone(&universe), v).expect("edits stay in the universe"))
        .collect()
}

/// A5: `gold` against itself, then against every distinct single-step
/// perturbation that still clusters some micro-object.
pub fn gen_perfect_match(gold: &Biclustering, label: &str) -> Result<Vec<Scenario>, GenerationError> {
    let cond = Condition::A5;
    let identity = micro_identity(gold);
    if identity.is_empty() {
        return invalid(cond, "gold standard must cluster at least one micro-object");
    }
    let mut out = vec![Scenario::new(cond, format!("{label} identical"), gold.clone(), gold.clone(), None)];
    let mut seen = BTreeSet::new();
    for (k, p) in single_step_perturbations(gold).into_iter().enumerate() {
        let id = micro_identity(&p);
        if id.is_empty() || id == identity || !seen.insert(id) {
            continue;
        }
        out.push(Scenario::new(
            cond,
            format!("{label} perturbation {k}"),
            gold.clone(),
            gold.clone(),
            Some(p),
        ));
    }
    Ok(out)
}

/// Where B.1 places the added objects.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Placement {
    /// A new bicluster of the added objects with these features.
    NewBicluster(BTreeSet<FeatureId>),
    /// Inside the bicluster at this position.
    Existing(usize),
}

/// B1: `candidate` versus `candidate` plus objects no one clusters.
pub fn gen_b1(
    candidate: &Biclustering,
    gold: &Biclustering,
    added: &[ObjectId],
    placement: &Placement,
    label: &str,
) -> Result<Scenario, GenerationError> {
    let cond = Condition::B1;
    if added.is_empty() {
        return invalid(cond, "at least one object must be added");
    }
    let clustered: BTreeSet<ObjectId> = candidate
        .clustered_objects()
        .into_iter()
        .chain(gold.clustered_objects())
        .collect();
    for o in added {
        if clustered.contains(o) || !candidate.universe().contains_object(o) {
            return invalid(cond, format!("object `{o}` must be an unclustered universe object"));
        }
    }
    let mut biclusters = candidate.biclusters().to_vec();
    match placement {
        Placement::NewBicluster(features) => {
            if features.is_empty() {
                return invalid(cond, "new bicluster needs features");
            }
            biclusters.push(Bicluster {
                objects: added.iter().cloned().collect(),
                features: features.clone(),
            });
        }
        Placement::Existing(i) => {
            let Some(target) = biclusters.get_mut(*i) else {
                return invalid(cond, "bicluster position out of range");
            };
            if target.features.is_empty() {
                return invalid(cond, "target bicluster has no features");
            }
            target.objects.extend(added.iter().cloned());
        }
    }
    let worse = Biclustering::new(candidate.shared_universe(), biclusters).map_err(|e| GenerationError::Params {
        condition: cond,
        reason: e.to_string(),
    })?;
    Ok(Scenario::new(cond, label, gold.clone(), candidate.clone(), Some(worse)))
}

/// B2: the same pair on a universe enlarged with unclustered objects
/// (`"bg1", ...`) and, as a separate sub-scenario, unclustered features
/// (`"bg1'", ...`).
pub fn gen_b2(
    candidate: &Biclustering,
    gold: &Biclustering,
    extra_objects: usize,
    extra_features: usize,
    label: &str,
) -> Result<Vec<Scenario>, GenerationError> {
    let cond = Condition::B2;
    if extra_objects == 0 && extra_features == 0 {
        return invalid(cond, "background must add objects or features");
    }
    if candidate.universe() != gold.universe() {
        return invalid(cond, "candidate and gold must share a universe");
    }
    let base = candidate.universe();
    let objects: Vec<ObjectId> = (1..=extra_objects).map(|k| ObjectId::new(format!("bg{k}"))).collect();
    let features: Vec<FeatureId> = (1..=extra_features).map(|k| FeatureId::new(format!("bg{k}'"))).collect();
    let mut out = Vec::new();
    let variants = [
        ("objects", objects.clone(), Vec::new()),
        ("features", Vec::new(), features.clone()),
    ];
    for (kind, o, f) in variants {
        if o.is_empty() && f.is_empty() {
            continue;
        }
        let enlarged = Arc::new(base.enlarged(o, f).map_err(|e| GenerationError::Params {
            condition: cond,
            reason: e.to_string(),
        })?);
        let mut s = Scenario::new(
            cond,
            format!("{label} background {kind}"),
            gold.clone(),
            candidate.clone(),
            Some(candidate.on_universe(Arc::clone(&enlarged)).expect("superset universe")),
        );
        s.worse_gold = Some(gold.on_universe(enlarged).expect("superset universe"));
        out.push(s);
    }
    Ok(out)
}

fn transformed(
    cond: Condition,
    candidate: &Biclustering,
    gold: &Biclustering,
    k: usize,
    label: &str,
    op: fn(&Biclustering, usize) -> Result<Biclustering, crate::error::ModelError>,
) -> Result<Scenario, GenerationError> {
    let wrap = |e: crate::error::ModelError| GenerationError::Params {
        condition: cond,
        reason: e.to_string(),
    };
    let mut s = Scenario::new(cond, label, gold.clone(), candidate.clone(), Some(op(candidate, k).map_err(wrap)?));
    s.worse_gold = Some(op(gold, k).map_err(wrap)?);
    Ok(s)
}

/// B3: the pair against its `k`-scaled version.
pub fn gen_b3(candidate: &Biclustering, gold: &Biclustering, k: usize, label: &str) -> Result<Scenario, GenerationError> {
    transformed(Condition::B3, candidate, gold, k, label, structural::scale)
}

/// B4: the pair against the disjoint union of `k` copies.
pub fn gen_b4(candidate: &Biclustering, gold: &Biclustering, k: usize, label: &str) -> Result<Scenario, GenerationError> {
    transformed(Condition::B4, candidate, gold, k, label, structural::copy)
}

/// B5: one bicluster spanning the union of `t >= 2` gold biclusters.
pub fn gen_b5(gold: &Biclustering, label: &str) -> Result<Scenario, GenerationError> {
    let cond = Condition::B5;
    if gold.len() < 2 {
        return invalid(cond, "gold standard needs at least two biclusters");
    }
    if gold.iter().any(|b| b.area() == 0) {
        return invalid(cond, "gold biclusters must have nonempty parts");
    }
    let cover = Bicluster {
        objects: gold.iter().flat_map(|b| b.objects.iter().cloned()).collect(),
        features: gold.iter().flat_map(|b| b.features.iter().cloned()).collect(),
    };
    let candidate = Biclustering::new(gold.shared_universe(), vec![cover]).expect("union stays in the universe");
    Ok(Scenario::new(cond, label, gold.clone(), gold.clone(), Some(candidate)))
}

/// Deterministic RNG for one (condition, seed) cell.
pub fn scenario_rng(condition: Condition, base_seed: u64, seed: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(base_seed.wrapping_add(seed));
    rng.set_stream(condition as u64 + 1);
    rng
}

fn random_pair<R: Rng>(rng: &mut R) -> (Biclustering, Biclustering) {
    let universe = numbered_universe(rng.gen_range(2..=5), rng.gen_range(1..=3));
    let g = rng.gen_range(1..=3);
    let c = rng.gen_range(1..=3);
    (random_biclustering(&universe, g, rng), random_biclustering(&universe, c, rng))
}

fn seeded(condition: Condition, base_seed: u64, seed: u64) -> Result<Vec<Scenario>, GenerationError> {
    let mut rng = scenario_rng(condition, base_seed, seed);
    let label = format!("seed {seed}");
    let one = |s: Scenario| vec![s];
    Ok(match condition {
        Condition::A1 => one(gen_homogeneity(&HomogeneityParams::random(&mut rng), &label)?),
        Condition::A2 => one(gen_completeness(&CompletenessParams::random(&mut rng), &label)?),
        Condition::A3 => {
            let p = RagBagParams::random(&mut rng);
            one(gen_ragbag_with(&p, &format!("{label} n = {} clean extra = {}", p.n, p.clean_extra))?)
        }
        Condition::A4 => {
            let r = rng.gen_range(2..=6);
            let (n_features, x) = random_x(&mut rng);
            one(gen_size_vs_quantity_with(r, n_features, &x, &format!("{label} r = {r}"))?)
        }
        Condition::A5 => {
            let universe = numbered_universe(rng.gen_range(2..=4), rng.gen_range(1..=3));
            let count = rng.gen_range(1..=3);
            gen_perfect_match(&random_biclustering(&universe, count, &mut rng), &label)?
        }
        Condition::B1 => {
            let n = rng.gen_range(2..=5);
            let extra = rng.gen_range(1..=2);
            let n_features = rng.gen_range(1..=3);
            let universe = numbered_universe(n + extra, n_features);
            let inner = numbered_universe(n, n_features);
            let gold = random_biclustering(&inner, rng.gen_range(1..=3), &mut rng)
                .on_universe(Arc::clone(&universe))
                .expect("subset universe");
            // Start from the gold standard so the pair shares micro-objects,
            // then apply a few edits restricted to the inner objects.
            let mut candidate = gold.clone();
            for _ in 0..rng.gen_range(0..=2) {
                let options: Vec<Biclustering> = single_step_perturbations(&candidate.on_universe(Arc::clone(&inner)).expect("inner"))
                    .into_iter()
                    .filter(|p| {
                        let pm = micro_transform(p).clustered_universe();
                        let gm = micro_transform(&gold).clustered_universe();
                        !pm.is_disjoint(&gm)
                    })
                    .collect();
                if let Some(next) = options.choose(&mut rng) {
                    candidate = next.on_universe(Arc::clone(&universe)).expect("superset universe");
                }
            }
            let added: Vec<ObjectId> = (n + 1..=n + extra)
                .filter(|_| rng.gen_bool(0.7))
                .map(ObjectId::from)
                .collect();
            let added = if added.is_empty() { vec![ObjectId::from(n + 1)] } else { added };
            let with_features: Vec<usize> = candidate
                .iter()
                .enumerate()
                .filter(|(_, b)| !b.features.is_empty())
                .map(|(i, _)| i)
                .collect();
            let placement = if rng.gen_bool(0.5) && !with_features.is_empty() {
                Placement::Existing(*with_features.choose(&mut rng).expect("nonempty"))
            } else {
                let features: Vec<FeatureId> = universe.features().cloned().collect();
                Placement::NewBicluster(random_nonempty_subset(&features, &mut rng))
            };
            one(gen_b1(&candidate, &gold, &added, &placement, &label)?)
        }
        Condition::B2 => {
            let (candidate, gold) = random_pair(&mut rng);
            let (o, f) = (rng.gen_range(1..=3), rng.gen_range(1..=3));
            gen_b2(&candidate, &gold, o, f, &label)?
        }
        Condition::B3 => {
            let (candidate, gold) = random_pair(&mut rng);
            let k = rng.gen_range(2..=3);
            one(gen_b3(&candidate, &gold, k, &format!("{label} k = {k}"))?)
        }
        Condition::B4 => {
            let (candidate, gold) = random_pair(&mut rng);
            let k = rng.gen_range(2..=3);
            one(gen_b4(&candidate, &gold, k, &format!("{label} k = {k}"))?)
        }
        Condition::B5 => {
            let universe = numbered_universe(rng.gen_range(2..=5), rng.gen_range(1..=3));
            let t = rng.gen_range(2..=4);
            one(gen_b5(&random_biclustering(&universe, t, &mut rng), &label)?)
        }
    })
}

/// Fixed instances emitted for a condition before the seeded ones.
pub fn fixed_scenarios(condition: Condition) -> Vec<Scenario> {
    let out: Result<Vec<Scenario>, GenerationError> = (|| {
        Ok(match condition {
            Condition::A1 => vec![gen_homogeneity(&HomogeneityParams::minimal(), "minimal")?],
            Condition::A2 => {
                let mut inverted = fixtures::table1_homogeneity();
                inverted.condition = Condition::A2;
                inverted.label = "table 1 homogeneity fixture (merge)".into();
                vec![gen_completeness(&CompletenessParams::minimal(), "minimal")?, inverted]
            }
            Condition::A3 => vec![gen_ragbag(2)?, fixtures::table1_ragbag()],
            Condition::A4 => vec![gen_size_vs_quantity(2)?],
            Condition::A5 => {
                let universe = numbered_universe(2, 1);
                let gold = embed(&universe, &[vec![1], vec![2]], &feature_subset(&[1]));
                gen_perfect_match(&gold, "minimal")?
            }
            Condition::B1 => {
                let universe = numbered_universe(3, 1);
                let x = feature_subset(&[1]);
                let gold = embed(&universe, &[vec![1, 2]], &x);
                vec![gen_b1(&gold, &gold, &["3".into()], &Placement::NewBicluster(x), "minimal")?]
            }
            Condition::B2 => {
                let f = fixtures::table1_homogeneity();
                gen_b2(f.worse.as_ref().expect("fixture"), &f.gold, 2, 2, "table 1 homogeneity fixture")?
            }
            Condition::B3 => {
                let f = fixtures::table1_homogeneity();
                vec![gen_b3(&f.better, &f.gold, 1, "table 1 homogeneity fixture k = 1")?]
            }
            Condition::B4 => {
                let f = fixtures::table1_homogeneity();
                vec![gen_b4(f.worse.as_ref().expect("fixture"), &f.gold, 2, "table 1 homogeneity fixture k = 2")?]
            }
            Condition::B5 => {
                let universe = numbered_universe(2, 1);
                let gold = embed(&universe, &[vec![1], vec![2]], &feature_subset(&[1]));
                vec![gen_b5(&gold, "minimal")?]
            }
        })
    })();
    out.expect("fixed parameters are valid")
}

/// Fixed instances plus `seeds` seeded instances of one condition.
pub fn generate(condition: Condition, seeds: u64, base_seed: u64) -> Result<Vec<Scenario>, GenerationError> {
    let mut out = fixed_scenarios(condition);
    for seed in 0..seeds {
        out.extend(seeded(condition, base_seed, seed)?);
    }
    Ok(out)
}
