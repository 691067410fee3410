//! The micro-objects transformation.
//!
//! A bicluster `(objects, features)` becomes the cluster of every
//! `(object, feature)` pair it covers, so biclusterings can be scored with
//! measures for traditional clusterings.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use crate::error::ModelError;
use crate::model::{Bicluster, Biclustering, Clustering, FeatureId, ObjectId, Universe};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MicroObject {
    pub object: ObjectId,
    pub feature: FeatureId,
}

impl MicroObject {
    pub fn new(object: impl Into<ObjectId>, feature: impl Into<FeatureId>) -> Self {
        Self {
            object: object.into(),
            feature: feature.into(),
        }
    }
}

impl fmt::Display for MicroObject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.object, self.feature)
    }
}

pub type MicroClustering = Clustering<MicroObject>;

/// Cartesian product of a bicluster's parts.
pub fn micro_cluster(b: &Bicluster) -> BTreeSet<MicroObject> {
    b.objects
        .iter()
        .flat_map(|o| {
            b.features.iter().map(move |f| MicroObject {
                object: o.clone(),
                feature: f.clone(),
            })
        })
        .collect()
}

/// Position `i` of the result is the product of bicluster `i`'s parts.
/// Biclusters with an empty part give empty clusters, which stay in place.
pub fn micro_transform(b: &Biclustering) -> MicroClustering {
    b.iter().map(micro_cluster).collect()
}

/// Pairs every cluster with the same feature subset `x`.
pub fn as_biclustering(
    c: &Clustering<ObjectId>,
    universe: impl Into<Arc<Universe>>,
    x: &BTreeSet<FeatureId>,
) -> Result<Biclustering, ModelError> {
    let universe = universe.into();
    if let Some(f) = x.iter().find(|f| !universe.contains_feature(f)) {
        return Err(ModelError::UnknownFeature {
            id: f.clone(),
            position: 0,
        });
    }
    let biclusters = c
        .iter()
        .map(|objects| Bicluster {
            objects: objects.clone(),
            features: x.clone(),
        })
        .collect();
    Biclustering::new(universe, biclusters)
}

pub fn clustered_universe(m: &MicroClustering) -> BTreeSet<MicroObject> {
    m.clustered_universe()
}
