//! Independent re-check of each condition's set-theoretic premises.
//!
//! The validator never calls the generators. It inspects a scenario's
//! (gold, better, worse) triple directly and reports the first premise that
//! does not hold.

use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

use crate::micro::micro_transform;
use crate::model::{Bicluster, Biclustering, FeatureId, ObjectId};

use super::scenario::{Condition, Scenario};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("{condition} premise violated: {reason}")]
pub struct PremiseViolation {
    pub condition: Condition,
    pub reason: String,
}

type Objects = BTreeSet<ObjectId>;

struct Check {
    condition: Condition,
}

impl Check {
    fn fail<T>(&self, reason: impl Into<String>) -> Result<T, PremiseViolation> {
        Err(PremiseViolation {
            condition: self.condition,
            reason: reason.into(),
        })
    }

    fn require(&self, ok: bool, reason: &str) -> Result<(), PremiseViolation> {
        if ok {
            Ok(())
        } else {
            self.fail(reason)
        }
    }
}

/// Checks that `scenario` instantiates its condition's premises.
pub fn validate(scenario: &Scenario) -> Result<(), PremiseViolation> {
    let ck = Check {
        condition: scenario.condition,
    };
    ck.require(
        scenario.relation == scenario.condition.relation(),
        "relation does not match the condition",
    )?;
    match scenario.condition {
        Condition::A1 => traditional(&ck, scenario).and_then(|t| homogeneity(&ck, &t)),
        Condition::A2 => traditional(&ck, scenario).and_then(|t| completeness(&ck, &t)),
        Condition::A3 => traditional(&ck, scenario).and_then(|t| ragbag(&ck, &t)),
        Condition::A4 => traditional(&ck, scenario).and_then(|t| size_vs_quantity(&ck, &t)),
        Condition::A5 => perfect_match(&ck, scenario),
        Condition::B1 => non_intersection(&ck, scenario),
        Condition::B2 => background(&ck, scenario),
        Condition::B3 => tagged(&ck, scenario, false),
        Condition::B4 => tagged(&ck, scenario, true),
        Condition::B5 => coverage(&ck, scenario),
    }
}

/// Object parts of a traditional-clustering scenario, with the class of
/// every gold object.
struct Traditional {
    class_of: BTreeMap<ObjectId, usize>,
    class_sizes: Vec<usize>,
    /// Clusters only in `worse`, and only in `better` (multiset difference).
    worse_only: Vec<Objects>,
    better_only: Vec<Objects>,
}

fn object_parts(b: &Biclustering) -> Vec<Objects> {
    b.iter().map(|bc| bc.objects.clone()).collect()
}

fn multiset_difference(a: &[Objects], b: &[Objects]) -> Vec<Objects> {
    let mut remaining: Vec<Option<&Objects>> = b.iter().map(Some).collect();
    let mut out = Vec::new();
    for x in a {
        match remaining.iter_mut().find(|r| r.is_some_and(|r| r == x)) {
            Some(slot) => *slot = None,
            None => out.push(x.clone()),
        }
    }
    out
}

fn traditional(ck: &Check, s: &Scenario) -> Result<Traditional, PremiseViolation> {
    let Some(worse) = &s.worse else {
        return ck.fail("missing worse clustering");
    };
    ck.require(s.worse_gold.is_none(), "traditional conditions score both sides against one gold")?;
    let sides = [&s.gold, &s.better, worse];
    let x: &BTreeSet<FeatureId> = match s.gold.iter().next() {
        Some(b) => &b.features,
        None => return ck.fail("gold standard is empty"),
    };
    ck.require(!x.is_empty(), "shared feature set X is empty")?;
    for side in sides {
        ck.require(side.universe() == s.gold.universe(), "all sides must share one universe")?;
        ck.require(side.iter().all(|b| &b.features == x), "every bicluster must use the same X")?;
        ck.require(side.iter().all(|b| !b.objects.is_empty()), "clusters must be nonempty")?;
    }
    let mut class_of = BTreeMap::new();
    let mut class_sizes = Vec::new();
    for (i, b) in s.gold.iter().enumerate() {
        for o in &b.objects {
            if class_of.insert(o.clone(), i).is_some() {
                return ck.fail(format!("object {o} lies in two gold classes"));
            }
        }
        class_sizes.push(b.objects.len());
    }
    let gold_objects: Objects = class_of.keys().cloned().collect();
    for side in [&s.better, worse] {
        let mut seen = Objects::new();
        for b in side.iter() {
            for o in &b.objects {
                ck.require(seen.insert(o.clone()), "candidate clusters must be disjoint")?;
            }
        }
        ck.require(seen == gold_objects, "candidates must cluster exactly the gold objects")?;
    }
    let better = object_parts(&s.better);
    let worse = object_parts(worse);
    Ok(Traditional {
        class_of,
        class_sizes,
        worse_only: multiset_difference(&worse, &better),
        better_only: multiset_difference(&better, &worse),
    })
}

impl Traditional {
    fn classes(&self, cluster: &Objects) -> BTreeSet<usize> {
        cluster.iter().map(|o| self.class_of[o]).collect()
    }

    fn pure_class(&self, cluster: &Objects) -> Option<usize> {
        let classes = self.classes(cluster);
        (classes.len() == 1).then(|| *classes.iter().next().expect("one class"))
    }
}

fn union(a: &Objects, b: &Objects) -> Objects {
    a.union(b).cloned().collect()
}

fn homogeneity(ck: &Check, t: &Traditional) -> Result<(), PremiseViolation> {
    ck.require(
        t.worse_only.len() == 1 && t.better_only.len() == 2,
        "worse must differ by one mixed cluster split in two",
    )?;
    let (a, b) = (&t.better_only[0], &t.better_only[1]);
    ck.require(a.is_disjoint(b) && union(a, b) == t.worse_only[0], "split parts must partition the mixed cluster")?;
    match (t.pure_class(a), t.pure_class(b)) {
        (Some(x), Some(y)) if x != y => Ok(()),
        _ => ck.fail("split parts must be pure and of distinct classes"),
    }
}

fn completeness(ck: &Check, t: &Traditional) -> Result<(), PremiseViolation> {
    ck.require(
        t.worse_only.len() == 2 && t.better_only.len() == 1,
        "better must differ by merging two clusters",
    )?;
    let (a, b) = (&t.worse_only[0], &t.worse_only[1]);
    ck.require(a.is_disjoint(b) && union(a, b) == t.better_only[0], "merged cluster must be the union of the two")?;
    match (t.pure_class(a), t.pure_class(b)) {
        (Some(x), Some(y)) if x == y => Ok(()),
        _ => ck.fail("merged clusters must be pure and of one class"),
    }
}

fn ragbag(ck: &Check, t: &Traditional) -> Result<(), PremiseViolation> {
    ck.require(
        t.worse_only.len() == 2 && t.better_only.len() == 2,
        "exactly one object must move between two clusters",
    )?;
    // Find the orientation where worse = {clean + i, noise} and better = {clean, noise + i}.
    for (dirty, noise) in [(0, 1), (1, 0)] {
        let dirty = &t.worse_only[dirty];
        let noise = &t.worse_only[noise];
        for (clean, bag) in [(0, 1), (1, 0)] {
            let clean = &t.better_only[clean];
            let bag = &t.better_only[bag];
            let moved: Vec<&ObjectId> = dirty.difference(clean).collect();
            if moved.len() != 1 || !clean.is_subset(dirty) {
                continue;
            }
            let i = moved[0];
            let mut expected_bag = noise.clone();
            expected_bag.insert(i.clone());
            if &expected_bag != bag {
                continue;
            }
            let Some(clean_class) = t.pure_class(clean) else {
                return ck.fail("clean cluster must be pure");
            };
            ck.require(t.class_of[i] != clean_class, "intruder must not belong to the clean class")?;
            let bag_classes = t.classes(bag);
            ck.require(bag_classes.len() == bag.len(), "noise cluster members must come from distinct classes")?;
            ck.require(noise.len() == clean.len(), "noise and clean clusters must hold n objects each")?;
            return ck.require(clean.len() >= 2, "n must be at least 2");
        }
    }
    ck.fail("no intruder moves from a clean cluster to the noise cluster")
}

fn size_vs_quantity(ck: &Check, t: &Traditional) -> Result<(), PremiseViolation> {
    let large: Vec<&Objects> = t.worse_only.iter().filter(|c| c.len() > 1).collect();
    ck.require(large.len() == 1, "worse must hold exactly one non-singleton differing cluster")?;
    let large = large[0];
    let r = large.len() - 1;
    ck.require(r >= 2, "large cluster needs r + 1 >= 3 objects")?;
    let Some(large_class) = t.pure_class(large) else {
        return ck.fail("large cluster must be pure");
    };
    ck.require(t.class_sizes[large_class] == large.len(), "large cluster must be a whole class")?;
    let singletons: Vec<&Objects> = t.worse_only.iter().filter(|c| c.len() == 1).collect();
    ck.require(singletons.len() == 2 * r, "worse must hold 2r singletons")?;

    let pairs: Vec<&Objects> = t.better_only.iter().filter(|c| c.is_disjoint(large)).collect();
    let split: Vec<&Objects> = t.better_only.iter().filter(|c| c.is_subset(large)).collect();
    ck.require(pairs.len() + split.len() == t.better_only.len(), "better clusters must not straddle")?;
    ck.require(
        split.len() == 2 && split.iter().any(|c| c.len() == 1) && split.iter().any(|c| c.len() == r),
        "better must split one object off the large cluster",
    )?;
    ck.require(pairs.len() == r, "better must hold r two-object clusters")?;
    let pair_union: Objects = pairs.iter().flat_map(|p| p.iter().cloned()).collect();
    let singleton_union: Objects = singletons.iter().flat_map(|p| p.iter().cloned()).collect();
    ck.require(pair_union == singleton_union, "pairs must regroup the singletons")?;
    for p in pairs {
        ck.require(p.len() == 2 && t.pure_class(p).is_some(), "each pair must hold two objects of one class")?;
    }
    Ok(())
}

fn micro(b: &Biclustering) -> Vec<BTreeSet<crate::micro::MicroObject>> {
    micro_transform(b).canonical_multiset()
}

fn perfect_match(ck: &Check, s: &Scenario) -> Result<(), PremiseViolation> {
    ck.require(micro(&s.better) == micro(&s.gold), "reference candidate must be identical to gold")?;
    ck.require(!micro(&s.gold).is_empty(), "gold must cluster some micro-object")?;
    if let Some(w) = &s.worse {
        ck.require(micro(w) != micro(&s.gold), "perturbed candidate must differ from gold")?;
        ck.require(!micro(w).is_empty(), "perturbed candidate must cluster some micro-object")?;
    }
    Ok(())
}

fn non_intersection(ck: &Check, s: &Scenario) -> Result<(), PremiseViolation> {
    let Some(worse) = &s.worse else {
        return ck.fail("missing worse biclustering");
    };
    ck.require(s.worse_gold.is_none(), "both sides are scored against one gold")?;
    let base: BTreeSet<_> = micro_transform(&s.better).clustered_universe();
    let gold: BTreeSet<_> = micro_transform(&s.gold).clustered_universe();
    ck.require(!base.is_disjoint(&gold), "candidate must share micro-objects with gold")?;

    let clustered: Objects = s.better.clustered_objects().union(&s.gold.clustered_objects()).cloned().collect();
    let added: Objects = worse.clustered_objects().difference(&s.better.clustered_objects()).cloned().collect();
    ck.require(!added.is_empty(), "worse must cluster additional objects")?;
    ck.require(added.is_disjoint(&clustered), "added objects must be unclustered in candidate and gold")?;

    // Removing the added objects from worse must give back the candidate,
    // possibly without one extra bicluster made only of added objects.
    let stripped: Vec<Bicluster> = worse
        .iter()
        .map(|b| Bicluster {
            objects: b.objects.difference(&added).cloned().collect(),
            features: b.features.clone(),
        })
        .collect();
    let original = s.better.biclusters();
    let same = stripped.as_slice() == original;
    let extra = stripped.len() == original.len() + 1
        && stripped[..original.len()] == *original
        && stripped[original.len()].objects.is_empty();
    ck.require(same || extra, "worse must equal candidate plus the added objects")?;
    ck.require(
        worse.iter().filter(|b| !b.objects.is_disjoint(&added)).all(|b| !b.features.is_empty()),
        "added objects must land in biclusters with features",
    )
}

fn background(ck: &Check, s: &Scenario) -> Result<(), PremiseViolation> {
    let (Some(worse), Some(worse_gold)) = (&s.worse, &s.worse_gold) else {
        return ck.fail("equal-score scenarios need both transformed sides");
    };
    let (small, large) = (s.gold.universe(), worse_gold.universe());
    ck.require(small == s.better.universe() && large == worse.universe(), "sides must share universes")?;
    let objects_superset = small.objects().all(|o| large.contains_object(o));
    let features_superset = small.features().all(|f| large.contains_feature(f));
    ck.require(objects_superset && features_superset, "enlarged universe must contain the original")?;
    ck.require(
        large.n_objects() + large.n_features() > small.n_objects() + small.n_features(),
        "universe must actually grow",
    )?;
    ck.require(
        worse.biclusters() == s.better.biclusters() && worse_gold.biclusters() == s.gold.biclusters(),
        "biclusters must be unchanged",
    )
}

fn tag(id: &str, j: usize) -> String {
    format!("{id}#{j}")
}

fn tagged(ck: &Check, s: &Scenario, disjoint_copies: bool) -> Result<(), PremiseViolation> {
    let (Some(worse), Some(worse_gold)) = (&s.worse, &s.worse_gold) else {
        return ck.fail("equal-score scenarios need both transformed sides");
    };
    let n = s.better.universe().n_objects();
    ck.require(n > 0, "universe must hold objects")?;
    let k = worse.universe().n_objects() / n;
    ck.require(k >= 1 && k * n == worse.universe().n_objects(), "universe size must be a multiple")?;
    for (original, transformed) in [(&s.better, worse), (&s.gold, worse_gold)] {
        let expected: Vec<(BTreeSet<String>, BTreeSet<String>)> = if disjoint_copies {
            (0..k)
                .flat_map(|j| {
                    original.iter().map(move |b| {
                        (
                            b.objects.iter().map(|o| tag(o.as_str(), j)).collect(),
                            b.features.iter().map(|f| tag(f.as_str(), j)).collect(),
                        )
                    })
                })
                .collect()
        } else {
            original
                .iter()
                .map(|b| {
                    (
                        (0..k).flat_map(|j| b.objects.iter().map(move |o| tag(o.as_str(), j))).collect(),
                        (0..k).flat_map(|j| b.features.iter().map(move |f| tag(f.as_str(), j))).collect(),
                    )
                })
                .collect()
        };
        let actual: Vec<(BTreeSet<String>, BTreeSet<String>)> = transformed
            .iter()
            .map(|b| {
                (
                    b.objects.iter().map(|o| o.as_str().to_owned()).collect(),
                    b.features.iter().map(|f| f.as_str().to_owned()).collect(),
                )
            })
            .collect();
        ck.require(actual == expected, "transformed side does not match the k-fold construction")?;
    }
    Ok(())
}

fn coverage(ck: &Check, s: &Scenario) -> Result<(), PremiseViolation> {
    let Some(worse) = &s.worse else {
        return ck.fail("missing covering candidate");
    };
    ck.require(s.better == s.gold, "reference side must be the gold standard")?;
    ck.require(s.gold.len() >= 2, "gold must hold at least two biclusters")?;
    ck.require(worse.len() == 1, "candidate must be a single bicluster")?;
    let cover = &worse.biclusters()[0];
    for b in s.gold.iter() {
        ck.require(
            !b.objects.is_empty() && !b.features.is_empty(),
            "gold biclusters must be nonempty",
        )?;
        ck.require(
            b.objects.is_subset(&cover.objects) && b.features.is_subset(&cover.features),
            "candidate must cover every gold bicluster",
        )?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::metaeval::fixtures;
    use crate::metaeval::generators::generate;
    use crate::metaeval::Relation;

    #[test]
    fn generated_scenarios_satisfy_their_premises() {
        for c in Condition::ALL {
            for s in generate(c, 20, 7).unwrap() {
                validate(&s).unwrap_or_else(|e| panic!("{} {}: {e}", c, s.label));
            }
        }
    }

    #[test]
    fn homogeneity_fixture_is_a_completeness_instance() {
        let mut s = fixtures::table1_homogeneity();
        assert!(validate(&s).is_err());
        s.condition = Condition::A2;
        s.relation = Relation::StrictlyBetter;
        validate(&s).unwrap();
    }

    #[test]
    fn swapped_sides_are_rejected() {
        let mut s = fixtures::table1_ragbag();
        let worse = s.worse.take().unwrap();
        s.worse = Some(std::mem::replace(&mut s.better, worse));
        assert!(validate(&s).is_err());
    }
}
