mod common;

use std::collections::BTreeSet;
use std::sync::Arc;

use bieval::metaeval::{fixtures, Measure};
use bieval::{
    as_biclustering, baseline, bcubed, cice_f1, cii, e4sc, mocice, mocice_f1, rnia, set_precision, tau, varsigma,
    Bicluster, Biclustering, Clustering, MicroObject, ObjectId, ScoreError, Universe,
};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use common::*;

fn set(items: &[u32]) -> Set {
    items.iter().copied().collect()
}

fn close(a: f64, b: f64) -> bool {
    (a - b).abs() <= 1e-12
}

// Frozen reference values for the worked fixtures.

struct Frozen {
    precision: f64,
    recall: f64,
    f1: f64,
    bcubed_f1: f64,
    rand: f64,
    vi: f64,
}

fn assert_frozen(candidate: &Biclustering, gold: &Biclustering, want: Frozen) {
    let pr = mocice(candidate, gold).unwrap();
    assert!(close(pr.precision, want.precision), "precision {}", pr.precision);
    assert!(close(pr.recall, want.recall), "recall {}", pr.recall);
    assert!(close(pr.f1(), want.f1), "f1 {}", pr.f1());
    let value = |m: Measure| m.value(candidate, gold).unwrap();
    assert!(close(value(Measure::BcubedF1), want.bcubed_f1));
    assert!(close(value(Measure::Rand), want.rand));
    assert!(close(value(Measure::Vi), want.vi));
}

#[test]
fn homogeneity_fixture_frozen_scores() {
    let s = fixtures::table1_homogeneity();
    assert_frozen(
        s.worse.as_ref().unwrap(),
        &s.gold,
        Frozen {
            precision: 0.3333333333333333,
            recall: 0.27777777777777773,
            f1: 0.303030303030303,
            bcubed_f1: 0.6725146198830408,
            rand: 0.6410256410256411,
            vi: 1.5010861115918819,
        },
    );
    assert_frozen(
        &s.better,
        &s.gold,
        Frozen {
            precision: 0.3703703703703703,
            recall: 0.2962962962962962,
            f1: 0.3292181069958847,
            bcubed_f1: 0.6989553656220323,
            rand: 0.6666666666666666,
            vi: 1.2788638893696598,
        },
    );
}

#[test]
fn ragbag_fixture_frozen_scores() {
    let s = fixtures::table1_ragbag();
    assert_frozen(
        s.worse.as_ref().unwrap(),
        &s.gold,
        Frozen {
            precision: 0.31666666666666665,
            recall: 0.48888888888888893,
            f1: 0.38436781609195403,
            bcubed_f1: 0.6567164179104478,
            rand: 0.7435897435897436,
            vi: 1.2899600527152013,
        },
    );
    assert_frozen(
        &s.better,
        &s.gold,
        Frozen {
            precision: 0.46666666666666645,
            recall: 0.5555555555555555,
            f1: 0.507246376811594,
            bcubed_f1: 0.7142857142857143,
            rand: 0.7435897435897436,
            vi: 1.2899600527152013,
        },
    );
}

#[test]
fn rand_and_vi_tie_on_the_ragbag_fixture() {
    let s = fixtures::table1_ragbag();
    for m in [Measure::Rand, Measure::Vi] {
        let b = m.value(&s.better, &s.gold).unwrap();
        let w = m.value(s.worse.as_ref().unwrap(), &s.gold).unwrap();
        assert!(close(b, w), "{m}: {b} vs {w}");
    }
}

#[test]
fn table1_scores_round_to_published_cells() {
    let h = fixtures::table1_homogeneity();
    let r = fixtures::table1_ragbag();
    let round = |x: f64| (x * 1000.0).round() / 1000.0;
    for (s, ce_pair) in [(&h, (0.556, 0.556)), (&r, (0.556, 0.556))] {
        let w = Measure::Ce.value(s.worse.as_ref().unwrap(), &s.gold).unwrap();
        let b = Measure::Ce.value(&s.better, &s.gold).unwrap();
        assert_eq!((round(w), round(b)), ce_pair);
        assert_eq!(Measure::Rnia.value(&s.better, &s.gold).unwrap(), 1.0);
    }
    let e = |s: &bieval::metaeval::Scenario| {
        (
            Measure::E4sc.value(s.worse.as_ref().unwrap(), &s.gold).unwrap(),
            Measure::E4sc.value(&s.better, &s.gold).unwrap(),
        )
    };
    let (w, b) = e(&h);
    assert_eq!((round(w), round(b)), (0.544, 0.606));
    let (w, b) = e(&r);
    assert!(close(w, 7366.0 / 13545.0));
    assert_eq!(round(b), 0.533);
}

// Small hand-checked cases.

#[test]
fn two_objects_against_singletons() {
    let g = clustering(&[set(&[1, 2])]);
    let c = clustering(&[set(&[1]), set(&[2])]);
    let pr = bcubed::cice(&g, &c).unwrap();
    assert!(close(pr.precision, 0.25));
    assert!(close(pr.recall, 0.5));
    assert!(close(pr.f1(), 1.0 / 3.0));
    let swapped = bcubed::cice(&c, &g).unwrap();
    assert!(close(swapped.precision, 0.5));
    assert!(close(swapped.recall, 0.25));
    assert!(close(swapped.f1(), 1.0 / 3.0));
}

#[test]
fn identity_index_cases() {
    let g = clustering(&[set(&[1, 2, 3])]);
    let c = clustering(&[set(&[1, 2])]);
    assert!(close(cii(&1, &2, &g, &c).unwrap(), 2.0 / 3.0));

    let g = clustering(&[set(&[1, 2]), set(&[1, 2, 3, 4])]);
    let c = clustering(&[set(&[1, 2]), set(&[3, 4])]);
    assert!(close(cii(&1, &2, &g, &c).unwrap(), 0.75));
    assert!(close(varsigma(&1, &2, &g, &c).unwrap(), 0.375));

    let g = clustering(&[set(&[1, 2])]);
    let c = clustering(&[set(&[1, 2]), set(&[1, 2])]);
    assert!(close(tau(&1, &2, &g, &c).unwrap(), 0.5));
}

#[test]
fn baseline_hand_cases() {
    let m = |o: &str| MicroObject::new(o, "a");
    let g: Clustering<MicroObject> = Clustering::new(vec![[m("1"), m("2")].into()]);
    let c: Clustering<MicroObject> = Clustering::new(vec![[m("1")].into(), [m("2")].into()]);
    assert!(close(bieval::ce(&g, &c).unwrap().value(), 0.5));
    assert!(close(bieval::vi(&g, &c).unwrap().value(), 1.0));

    let only_one: Clustering<MicroObject> = Clustering::new(vec![[m("1")].into()]);
    assert!(close(rnia(&only_one, &g).unwrap().value(), 0.5));

    let g = clustering(&[set(&[1, 2]), set(&[3])]);
    let c = clustering(&[set(&[1]), set(&[2, 3])]);
    assert!(close(bieval::rand(&g, &c).unwrap().value(), 1.0 / 3.0));

    assert!(close(set_precision(&set(&[1, 2]), &set(&[2, 3])).unwrap(), 0.5));
    assert!(matches!(set_precision(&Set::new(), &set(&[1])), Err(ScoreError::Undefined(_))));
}

#[test]
fn rand_rejects_overlap() {
    let g = clustering(&[set(&[1, 2]), set(&[2, 3])]);
    let c = clustering(&[set(&[1, 2, 3])]);
    assert!(matches!(bieval::rand(&g, &c), Err(ScoreError::NotAPartition { .. })));
    assert!(matches!(bieval::vi(&g, &c), Err(ScoreError::NotAPartition { .. })));
}

#[test]
fn cice_requires_shared_coverage() {
    let g = clustering(&[set(&[1, 2])]);
    let c = clustering(&[set(&[1])]);
    assert!(matches!(bcubed::cice(&g, &c), Err(ScoreError::Coverage { .. })));
}

#[test]
fn mocice_on_empty_side_is_undefined() {
    let u = Arc::new(Universe::new(["1"], ["a"]).unwrap());
    let empty = Biclustering::new(Arc::clone(&u), vec![]).unwrap();
    let one = Biclustering::new(u, vec![Bicluster::new(["1"], ["a"])]).unwrap();
    assert!(mocice(&empty, &one).is_err());
    assert!(mocice(&one, &empty).is_err());
    assert_eq!(mocice_f1(&one, &one).unwrap(), 1.0);
}

// Agreement with the from-scratch references.

#[test]
fn ce_matches_exhaustive_assignment() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..300 {
        let n = rand::Rng::gen_range(&mut rng, 1..=9u32);
        let g = random_sets(n, 7, &mut rng);
        let c = random_sets(n, 7, &mut rng);
        let dmax = exhaustive_dmax(&g, &c);
        let got = baseline::best_matching(&clustering(&g), &clustering(&c));
        assert_eq!(got.dmax, dmax);
        let weight: usize = got.pairs.iter().map(|&(i, j)| g[i].intersection(&c[j]).count()).sum();
        assert_eq!(weight, dmax);
        let expected = dmax as f64 / multiset_union_size(&g, &c) as f64;
        assert!(close(bieval::ce(&clustering(&g), &clustering(&c)).unwrap().value(), expected));
    }
}

#[test]
fn rand_and_vi_match_pair_counting() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for _ in 0..300 {
        let n = rand::Rng::gen_range(&mut rng, 2..=16usize);
        let a = random_labels(n, 6, &mut rng);
        let b = random_labels(n, 6, &mut rng);
        let (pa, pb) = (clustering(&labels_to_parts(&a)), clustering(&labels_to_parts(&b)));
        assert!(close(bieval::rand(&pa, &pb).unwrap().value(), pairwise_rand(&a, &b)));
        assert!(close(bieval::vi(&pa, &pb).unwrap().value(), direct_vi(&a, &b)));
    }
}

#[test]
fn extended_bcubed_matches_naive_summation() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for _ in 0..300 {
        let n = rand::Rng::gen_range(&mut rng, 1..=10u32);
        let g = random_cover(n, 5, &mut rng);
        let c = random_cover(n, 5, &mut rng);
        let (cg, cc) = (clustering(&g), clustering(&c));
        let cice = bcubed::cice(&cg, &cc).unwrap();
        assert!(close(cice.precision, naive_extended_precision(&g, &c, false)));
        assert!(close(cice.recall, naive_extended_recall(&g, &c, false)));
        let plain = bcubed::bcubed(&cg, &cc).unwrap();
        assert!(close(plain.precision, naive_extended_precision(&g, &c, true)));
        assert!(close(plain.recall, naive_extended_recall(&g, &c, true)));
    }
}

#[test]
fn e4sc_matches_direct_macro_f1() {
    let mut rng = ChaCha8Rng::seed_from_u64(14);
    let f1 = |a: &Set, b: &Set| {
        let i = a.intersection(b).count() as f64;
        if i == 0.0 {
            0.0
        } else {
            2.0 * i / (a.len() + b.len()) as f64
        }
    };
    let macro_f1 = |g: &[Set], c: &[Set]| {
        g.iter().map(|x| c.iter().map(|y| f1(x, y)).fold(0.0, f64::max)).sum::<f64>() / g.len() as f64
    };
    for _ in 0..200 {
        let n = rand::Rng::gen_range(&mut rng, 1..=10u32);
        let g = random_sets(n, 5, &mut rng);
        let c = random_sets(n, 5, &mut rng);
        let expected = harmonic(macro_f1(&g, &c), macro_f1(&c, &g));
        assert!((e4sc(&clustering(&g), &clustering(&c)).unwrap().value() - expected).abs() < 1e-12);
    }
}

// Properties.

fn partition_strategy() -> impl Strategy<Value = Vec<usize>> {
    (2usize..14).prop_flat_map(|n| proptest::collection::vec(0usize..5, n))
}

fn cover_strategy(n: u32) -> impl Strategy<Value = Vec<Set>> {
    proptest::collection::vec(proptest::collection::btree_set(0..n, 1..=n as usize), 1..5).prop_map(move |mut parts| {
        // Put every uncovered item into the first cluster.
        let covered: Set = parts.iter().flatten().copied().collect();
        parts[0].extend((0..n).filter(|x| !covered.contains(x)));
        parts
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn partition_measures_are_symmetric_and_bounded(a in partition_strategy(), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let b = random_labels(a.len(), 5, &mut rng);
        let (pa, pb) = (clustering(&labels_to_parts(&a)), clustering(&labels_to_parts(&b)));
        for f in [baseline::ce, baseline::rnia, baseline::rand, baseline::e4sc] {
            let x = f(&pa, &pb).unwrap().value();
            let y = f(&pb, &pa).unwrap().value();
            prop_assert!((x - y).abs() < 1e-12);
            prop_assert!((0.0..=1.0).contains(&x));
        }
        let v = baseline::vi(&pa, &pb).unwrap().value();
        prop_assert!((v - baseline::vi(&pb, &pa).unwrap().value()).abs() < 1e-12);
        prop_assert!(v >= 0.0);
        prop_assert!(baseline::ce(&pa, &pb).unwrap().value() <= baseline::rnia(&pa, &pb).unwrap().value() + 1e-12);
        prop_assert_eq!(baseline::vi(&pa, &pa).unwrap().value(), 0.0);
        prop_assert_eq!(baseline::rand(&pa, &pa).unwrap().value(), 1.0);
    }

    #[test]
    fn cice_is_bounded_and_maximal_on_identity(n in 1u32..9, seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = random_cover(n, 4, &mut rng);
        let c = random_cover(n, 4, &mut rng);
        let pr = bcubed::cice(&clustering(&g), &clustering(&c)).unwrap();
        prop_assert!((0.0..=1.0).contains(&pr.precision));
        prop_assert!((0.0..=1.0).contains(&pr.recall));
        prop_assert_eq!(cice_f1(&clustering(&g), &clustering(&g)).unwrap(), 1.0);
    }

    #[test]
    fn embedding_preserves_cice(g in cover_strategy(8), c in cover_strategy(8), features in 1usize..5, pick in any::<u8>()) {
        let u = universe(8, features);
        let all: Vec<_> = u.features().cloned().collect();
        let mut x: BTreeSet<_> = all.iter().enumerate().filter(|(i, _)| pick & (1 << i) != 0).map(|(_, f)| f.clone()).collect();
        if x.is_empty() {
            x.insert(all[0].clone());
        }
        let (og, oc) = (object_clustering(&g), object_clustering(&c));
        let direct = cice_f1(&og, &oc).unwrap();
        let embedded = mocice_f1(
            &as_biclustering(&og, Arc::clone(&u), &x).unwrap(),
            &as_biclustering(&oc, Arc::clone(&u), &x).unwrap(),
        ).unwrap();
        prop_assert!((direct - embedded).abs() <= 1e-12);
    }
}

#[test]
fn object_ids_from_numbers_match_strings() {
    assert_eq!(ObjectId::from(3usize), ObjectId::from("3"));
}
