//! k-scaling and k-copying of biclusterings.
//!
//! Both constructions tag every id as `"<id>#<copy>"` with copy indices
//! `0..k`. The tags are stable, so a scaled candidate and a scaled gold
//! standard built from the same universe line up id for id.

use std::collections::BTreeSet;
use std::sync::Arc;

use crate::error::ModelError;
use crate::model::{Bicluster, Biclustering, FeatureId, ObjectId, Universe};

fn tagged_universe(universe: &Universe, k: usize) -> Universe {
    let objects: Vec<ObjectId> = (0..k)
        .flat_map(|j| universe.objects().map(move |o| o.tagged(j)))
        .collect();
    let features: Vec<FeatureId> = (0..k)
        .flat_map(|j| universe.features().map(move |f| f.tagged(j)))
        .collect();
    // Tagging is injective, so the tagged universe has no duplicates.
    Universe::new(objects, features).expect("tagged ids are unique")
}

fn check_factor(operation: &'static str, k: usize) -> Result<(), ModelError> {
    if k == 0 {
        Err(ModelError::NonPositiveFactor {
            operation,
            factor: k,
        })
    } else {
        Ok(())
    }
}

/// Replaces each bicluster's object part by `k` tagged copies of its
/// objects and its feature part by `k` tagged copies of its features.
/// Every micro-cluster grows by a factor of `k²`.
pub fn scale(b: &Biclustering, k: usize) -> Result<Biclustering, ModelError> {
    check_factor("scale", k)?;
    let universe = Arc::new(tagged_universe(b.universe(), k));
    let biclusters = b
        .iter()
        .map(|bc| Bicluster {
            objects: (0..k)
                .flat_map(|j| bc.objects.iter().map(move |o| o.tagged(j)))
                .collect::<BTreeSet<_>>(),
            features: (0..k)
                .flat_map(|j| bc.features.iter().map(move |f| f.tagged(j)))
                .collect::<BTreeSet<_>>(),
        })
        .collect();
    Biclustering::new(universe, biclusters)
}

/// Disjoint union of `k` copies: copy `j` of every bicluster lives on
/// objects and features tagged `j`. Output order is copy-major.
pub fn copy(b: &Biclustering, k: usize) -> Result<Biclustering, ModelError> {
    check_factor("copy", k)?;
    let universe = Arc::new(tagged_universe(b.universe(), k));
    let biclusters = (0..k)
        .flat_map(|j| {
            b.iter().map(move |bc| Bicluster {
                objects: bc.objects.iter().map(|o| o.tagged(j)).collect(),
                features: bc.features.iter().map(|f| f.tagged(j)).collect(),
            })
        })
        .collect();
    Biclustering::new(universe, biclusters)
}
