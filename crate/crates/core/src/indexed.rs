//! Dense integer view of a (candidate, gold) pair sharing one item index.

use std::collections::BTreeMap;

use crate::model::Clustering;

/// One side of an interned pair. Empty clusters are dropped; `positions`
/// maps each kept cluster back to its original position.
#[derive(Debug)]
pub(crate) struct Indexed {
    pub clusters: Vec<Vec<u32>>,
    pub positions: Vec<usize>,
    /// Kept-cluster indices containing each item, ascending.
    pub membership: Vec<Vec<u32>>,
}

impl Indexed {
    pub fn is_clustered(&self, item: u32) -> bool {
        !self.membership[item as usize].is_empty()
    }

    pub fn clustered_items(&self) -> impl Iterator<Item = u32> + '_ {
        (0..self.membership.len() as u32).filter(|&i| self.is_clustered(i))
    }

    pub fn n_clustered(&self) -> usize {
        self.membership.iter().filter(|m| !m.is_empty()).count()
    }
}

#[derive(Debug)]
pub(crate) struct IndexedPair {
    pub n_items: usize,
    pub candidate: Indexed,
    pub gold: Indexed,
}

fn index_side<T: Ord>(c: &Clustering<T>, ids: &BTreeMap<&T, u32>, n_items: usize) -> Indexed {
    let mut clusters = Vec::new();
    let mut positions = Vec::new();
    let mut membership = vec![Vec::new(); n_items];
    for (position, cluster) in c.iter().enumerate() {
        if cluster.is_empty() {
            continue;
        }
        let k = clusters.len() as u32;
        let mut members: Vec<u32> = cluster.iter().map(|item| ids[item]).collect();
        members.sort_unstable();
        for &m in &members {
            membership[m as usize].push(k);
        }
        clusters.push(members);
        positions.push(position);
    }
    Indexed {
        clusters,
        positions,
        membership,
    }
}

pub(crate) fn intern<T: Ord>(candidate: &Clustering<T>, gold: &Clustering<T>) -> IndexedPair {
    let mut ids: BTreeMap<&T, u32> = BTreeMap::new();
    for item in candidate.iter().chain(gold.iter()).flatten() {
        ids.entry(item).or_insert(0);
    }
    for (i, v) in ids.values_mut().enumerate() {
        *v = i as u32;
    }
    let n_items = ids.len();
    IndexedPair {
        n_items,
        candidate: index_side(candidate, &ids, n_items),
        gold: index_side(gold, &ids, n_items),
    }
}

/// Size of the intersection of two ascending lists.
pub(crate) fn intersection_len(a: &[u32], b: &[u32]) -> usize {
    let (mut i, mut j, mut n) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                n += 1;
                i += 1;
                j += 1;
            }
        }
    }
    n
}

/// Writes the intersection of two ascending lists into `out`.
pub(crate) fn intersect_into(a: &[u32], b: &[u32], out: &mut Vec<u32>) {
    out.clear();
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
}

/// Dense `|candidate clusters| × |gold clusters|` intersection counts.
pub(crate) fn contingency(pair: &IndexedPair) -> Vec<Vec<usize>> {
    let mut table = vec![vec![0usize; pair.gold.clusters.len()]; pair.candidate.clusters.len()];
    for item in 0..pair.n_items {
        for &g in &pair.candidate.membership[item] {
            for &c in &pair.gold.membership[item] {
                table[g as usize][c as usize] += 1;
            }
        }
    }
    table
}

/// Neumaier-compensated running sum. Addition order is the caller's, so
/// results are bit-stable for a fixed iteration order.
#[derive(Clone, Copy, Debug, Default)]
pub(crate) struct CompensatedSum {
    sum: f64,
    compensation: f64,
}

impl CompensatedSum {
    pub fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.compensation += (self.sum - t) + x;
        } else {
            self.compensation += (x - t) + self.sum;
        }
        self.sum = t;
    }

    pub fn value(&self) -> f64 {
        self.sum + self.compensation
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    #[test]
    fn intern_drops_empty_clusters_but_keeps_positions() {
        let g = Clustering::new(vec![BTreeSet::from([3, 1]), BTreeSet::new(), BTreeSet::from([2])]);
        let c = Clustering::new(vec![BTreeSet::from([1, 5])]);
        let p = intern(&g, &c);
        assert_eq!(p.n_items, 4);
        assert_eq!(p.candidate.positions, vec![0, 2]);
        assert_eq!(p.candidate.clusters, vec![vec![0, 2], vec![1]]);
        assert_eq!(p.gold.membership[3], vec![0]);
        assert!(!p.gold.is_clustered(1));
        assert_eq!(p.candidate.n_clustered(), 3);
    }

    #[test]
    fn intersections() {
        assert_eq!(intersection_len(&[1, 3, 5], &[2, 3, 5, 7]), 2);
        let mut out = Vec::new();
        intersect_into(&[0, 1, 4], &[1, 4, 9], &mut out);
        assert_eq!(out, vec![1, 4]);
    }

    #[test]
    fn compensated_sum_recovers_small_terms() {
        let mut s = CompensatedSum::default();
        s.add(1.0);
        for _ in 0..10 {
            s.add(1e-16);
        }
        s.add(-1.0);
        assert!((s.value() - 1e-15).abs() < 1e-30);
    }
}
