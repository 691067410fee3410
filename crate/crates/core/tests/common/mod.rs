//! From-scratch reference computations and random instance builders
//! shared by the integration tests. Nothing here calls into the measures
//! under test.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use bieval::{Bicluster, Biclustering, Clustering, FeatureId, ObjectId, Universe};
use rand::seq::SliceRandom;
use rand::Rng;

pub type Set = BTreeSet<u32>;

pub fn clustering(parts: &[Set]) -> Clustering<u32> {
    Clustering::new(parts.to_vec())
}

/// Largest total overlap of a one-to-one matching, by trying every
/// injective partial assignment of `g` clusters to `c` classes.
pub fn exhaustive_dmax(g: &[Set], c: &[Set]) -> usize {
    fn go(i: usize, g: &[Set], c: &[Set], used: &mut Vec<bool>) -> usize {
        if i == g.len() {
            return 0;
        }
        let mut best = go(i + 1, g, c, used);
        for j in 0..c.len() {
            if !used[j] {
                used[j] = true;
                let w = g[i].intersection(&c[j]).count();
                best = best.max(w + go(i + 1, g, c, used));
                used[j] = false;
            }
        }
        best
    }
    go(0, g, c, &mut vec![false; c.len()])
}

/// Size of the union with each item counted as often as the side that
/// covers it more often.
pub fn multiset_union_size(g: &[Set], c: &[Set]) -> usize {
    let items: BTreeSet<u32> = g.iter().chain(c).flatten().copied().collect();
    items
        .iter()
        .map(|x| {
            let in_g = g.iter().filter(|p| p.contains(x)).count();
            let in_c = c.iter().filter(|p| p.contains(x)).count();
            in_g.max(in_c)
        })
        .sum()
}

/// Rand's index over all unordered pairs of items, from label vectors.
pub fn pairwise_rand(a: &[usize], b: &[usize]) -> f64 {
    let n = a.len();
    let mut agree = 0usize;
    let mut total = 0usize;
    for i in 0..n {
        for j in i + 1..n {
            total += 1;
            if (a[i] == a[j]) == (b[i] == b[j]) {
                agree += 1;
            }
        }
    }
    agree as f64 / total as f64
}

/// Variation of information in bits by direct summation over the joint
/// distribution of labels.
pub fn direct_vi(a: &[usize], b: &[usize]) -> f64 {
    let n = a.len() as f64;
    let mut joint: BTreeMap<(usize, usize), f64> = BTreeMap::new();
    let mut pa: BTreeMap<usize, f64> = BTreeMap::new();
    let mut pb: BTreeMap<usize, f64> = BTreeMap::new();
    for (&x, &y) in a.iter().zip(b) {
        *joint.entry((x, y)).or_default() += 1.0 / n;
        *pa.entry(x).or_default() += 1.0 / n;
        *pb.entry(y).or_default() += 1.0 / n;
    }
    let mut vi = 0.0;
    for (&(x, y), &r) in &joint {
        vi -= r * ((r / pa[&x]).log2() + (r / pb[&y]).log2());
    }
    vi
}

pub fn labels_to_parts(labels: &[usize]) -> Vec<Set> {
    let mut parts: BTreeMap<usize, Set> = BTreeMap::new();
    for (i, &l) in labels.iter().enumerate() {
        parts.entry(l).or_default().insert(i as u32);
    }
    parts.into_values().collect()
}

/// Extended BCubed precision by the defining double sum, over the items
/// of `g` (candidate) against `c` (gold). `identity` swaps the cluster
/// identity index for 1.
pub fn naive_extended_precision(g: &[Set], c: &[Set], identity: bool) -> f64 {
    let items: Set = g.iter().flatten().copied().collect();
    let of = |parts: &[Set], x: u32| -> Vec<usize> { (0..parts.len()).filter(|&i| parts[i].contains(&x)).collect() };
    let mut total = 0.0;
    for &x in &items {
        let gx = of(g, x);
        let mut sum = 0.0;
        let mut count = 0;
        for &y in &items {
            let gy = of(g, y);
            let shared_g: Vec<usize> = gx.iter().copied().filter(|i| gy.contains(i)).collect();
            if shared_g.is_empty() {
                continue;
            }
            count += 1;
            let cx = of(c, x);
            let cy = of(c, y);
            let shared_c: Vec<usize> = cx.iter().copied().filter(|i| cy.contains(i)).collect();
            let phi = if identity {
                1.0
            } else if shared_c.is_empty() {
                0.0
            } else {
                let mut acc = 0.0;
                for &gi in &shared_g {
                    let best = shared_c
                        .iter()
                        .map(|&ci| {
                            let inter = g[gi].intersection(&c[ci]).count() as f64;
                            let uni = g[gi].union(&c[ci]).count() as f64;
                            inter / uni
                        })
                        .fold(0.0, f64::max);
                    acc += best;
                }
                acc / shared_g.len() as f64
            };
            let m = shared_g.len().min(shared_c.len()) as f64;
            sum += m * phi / shared_g.len() as f64;
        }
        total += sum / count as f64;
    }
    total / items.len() as f64
}

/// Extended BCubed recall: precision with the roles of the sides swapped
/// in the normalisation, keeping the identity index oriented from `g`.
pub fn naive_extended_recall(g: &[Set], c: &[Set], identity: bool) -> f64 {
    let items: Set = c.iter().flatten().copied().collect();
    let of = |parts: &[Set], x: u32| -> Vec<usize> { (0..parts.len()).filter(|&i| parts[i].contains(&x)).collect() };
    let mut total = 0.0;
    for &x in &items {
        let cx = of(c, x);
        let mut sum = 0.0;
        let mut count = 0;
        for &y in &items {
            let cy = of(c, y);
            let shared_c: Vec<usize> = cx.iter().copied().filter(|i| cy.contains(i)).collect();
            if shared_c.is_empty() {
                continue;
            }
            count += 1;
            let gx = of(g, x);
            let gy = of(g, y);
            let shared_g: Vec<usize> = gx.iter().copied().filter(|i| gy.contains(i)).collect();
            let phi = if identity {
                1.0
            } else if shared_g.is_empty() {
                0.0
            } else {
                let mut acc = 0.0;
                for &gi in &shared_g {
                    let best = shared_c
                        .iter()
                        .map(|&ci| {
                            let inter = g[gi].intersection(&c[ci]).count() as f64;
                            let uni = g[gi].union(&c[ci]).count() as f64;
                            inter / uni
                        })
                        .fold(0.0, f64::max);
                    acc += best;
                }
                acc / shared_g.len() as f64
            };
            let m = shared_g.len().min(shared_c.len()) as f64;
            sum += m * phi / shared_c.len() as f64;
        }
        total += sum / count as f64;
    }
    total / items.len() as f64
}

pub fn harmonic(p: f64, r: f64) -> f64 {
    if p + r == 0.0 {
        0.0
    } else {
        2.0 * p * r / (p + r)
    }
}

pub fn random_labels<R: Rng>(n: usize, max_labels: usize, rng: &mut R) -> Vec<usize> {
    (0..n).map(|_| rng.gen_range(0..max_labels)).collect()
}

/// Random overlapping clustering of `0..n` where every item lies in at
/// least one of at most `max_clusters` clusters.
pub fn random_cover<R: Rng>(n: u32, max_clusters: usize, rng: &mut R) -> Vec<Set> {
    let k = rng.gen_range(1..=max_clusters);
    let mut parts = vec![Set::new(); k];
    for x in 0..n {
        parts[rng.gen_range(0..k)].insert(x);
        for p in parts.iter_mut() {
            if rng.gen_bool(0.15) {
                p.insert(x);
            }
        }
    }
    parts.retain(|p| !p.is_empty());
    parts
}

/// Random clusters over `0..n` without any coverage constraint.
pub fn random_sets<R: Rng>(n: u32, max_clusters: usize, rng: &mut R) -> Vec<Set> {
    let k = rng.gen_range(1..=max_clusters);
    (0..k)
        .map(|_| {
            let mut s: Set = (0..n).filter(|_| rng.gen_bool(0.4)).collect();
            if s.is_empty() {
                s.insert(rng.gen_range(0..n));
            }
            s
        })
        .collect()
}

pub fn universe(n_objects: usize, n_features: usize) -> Arc<Universe> {
    Arc::new(Universe::new(0..n_objects, (0..n_features).map(|f| format!("f{f}"))).unwrap())
}

pub fn object_clustering(parts: &[Set]) -> Clustering<ObjectId> {
    parts
        .iter()
        .map(|p| p.iter().map(|&o| ObjectId::from(o as usize)).collect())
        .collect()
}

fn nonempty_subset<T: Clone + Ord, R: Rng>(pool: &[T], rng: &mut R) -> BTreeSet<T> {
    let mut s: BTreeSet<T> = pool.iter().filter(|_| rng.gen_bool(0.5)).cloned().collect();
    if s.is_empty() {
        s.insert(pool.choose(rng).unwrap().clone());
    }
    s
}

/// Random biclustering with 1..=max_biclusters nonempty biclusters.
pub fn random_biclustering<R: Rng>(u: &Arc<Universe>, max_biclusters: usize, rng: &mut R) -> Biclustering {
    let objects: Vec<ObjectId> = u.objects().cloned().collect();
    let features: Vec<FeatureId> = u.features().cloned().collect();
    let k = rng.gen_range(1..=max_biclusters);
    let biclusters = (0..k)
        .map(|_| Bicluster {
            objects: nonempty_subset(&objects, rng),
            features: nonempty_subset(&features, rng),
        })
        .collect();
    Biclustering::new(Arc::clone(u), biclusters).unwrap()
}

pub fn random_feature_subset<R: Rng>(u: &Universe, rng: &mut R) -> BTreeSet<FeatureId> {
    let features: Vec<FeatureId> = u.features().cloned().collect();
    nonempty_subset(&features, rng)
}
