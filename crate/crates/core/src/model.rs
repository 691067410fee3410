//! Universes, clusterings and biclusterings.
//!
//! A clustering is a positional list of duplicate-free clusters. Two equal
//! clusters at different positions are distinct members, and empty clusters
//! are kept so that positions survive round trips. Biclusterings pair an
//! object part with a feature part and always carry the universe they were
//! validated against.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use indexmap::IndexSet;

use crate::error::ModelError;

macro_rules! opaque_id {
    ($(#[$meta:meta])* $name:ident) => {
        $(#[$meta])*
        #[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
        pub struct $name(String);

        impl $name {
            pub fn new(id: impl Into<String>) -> Self {
                Self(id.into())
            }

            pub fn as_str(&self) -> &str {
                &self.0
            }

            /// Copy-tagged id `"<id>#<copy>"` used by scaling and copying.
            pub fn tagged(&self, copy: usize) -> Self {
                Self(format!("{}#{}", self.0, copy))
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(&self.0)
            }
        }

        impl From<&str> for $name {
            fn from(s: &str) -> Self {
                Self(s.to_owned())
            }
        }

        impl From<String> for $name {
            fn from(s: String) -> Self {
                Self(s)
            }
        }

        impl From<usize> for $name {
            fn from(n: usize) -> Self {
                Self(n.to_string())
            }
        }
    };
}

opaque_id!(
    /// Opaque object identifier. Numeric ids in files are kept as strings.
    ObjectId
);
opaque_id!(
    /// Opaque feature identifier.
    FeatureId
);

/// The object set `O` and feature set `F`, in declaration order.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Universe {
    objects: IndexSet<ObjectId>,
    features: IndexSet<FeatureId>,
}

impl Universe {
    pub fn new<O, F>(
        objects: impl IntoIterator<Item = O>,
        features: impl IntoIterator<Item = F>,
    ) -> Result<Self, ModelError>
    where
        O: Into<ObjectId>,
        F: Into<FeatureId>,
    {
        let mut universe = Universe::default();
        for o in objects {
            let o = o.into();
            if !universe.objects.insert(o.clone()) {
                return Err(ModelError::DuplicateObject(o));
            }
        }
        for f in features {
            let f = f.into();
            if !universe.features.insert(f.clone()) {
                return Err(ModelError::DuplicateFeature(f));
            }
        }
        Ok(universe)
    }

    pub fn objects(&self) -> impl ExactSizeIterator<Item = &ObjectId> {
        self.objects.iter()
    }

    pub fn features(&self) -> impl ExactSizeIterator<Item = &FeatureId> {
        self.features.iter()
    }

    pub fn n_objects(&self) -> usize {
        self.objects.len()
    }

    pub fn n_features(&self) -> usize {
        self.features.len()
    }

    pub fn contains_object(&self, o: &ObjectId) -> bool {
        self.objects.contains(o)
    }

    pub fn contains_feature(&self, f: &FeatureId) -> bool {
        self.features.contains(f)
    }

    /// Declaration position of an object, used for stable serialization.
    pub fn object_position(&self, o: &ObjectId) -> Option<usize> {
        self.objects.get_index_of(o)
    }

    pub fn feature_position(&self, f: &FeatureId) -> Option<usize> {
        self.features.get_index_of(f)
    }

    pub fn all_features(&self) -> BTreeSet<FeatureId> {
        self.features.iter().cloned().collect()
    }

    /// A superset universe with extra objects and features appended.
    pub fn enlarged<O, F>(
        &self,
        extra_objects: impl IntoIterator<Item = O>,
        extra_features: impl IntoIterator<Item = F>,
    ) -> Result<Self, ModelError>
    where
        O: Into<ObjectId>,
        F: Into<FeatureId>,
    {
        let mut out = self.clone();
        for o in extra_objects {
            let o = o.into();
            if !out.objects.insert(o.clone()) {
                return Err(ModelError::DuplicateObject(o));
            }
        }
        for f in extra_features {
            let f = f.into();
            if !out.features.insert(f.clone()) {
                return Err(ModelError::DuplicateFeature(f));
            }
        }
        Ok(out)
    }
}

/// Positional list of clusters over items of type `T`.
///
/// Used with `T = ObjectId` for traditional clusterings and with
/// [`MicroObject`](crate::micro::MicroObject) for micro-clusterings.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Clustering<T> {
    clusters: Vec<BTreeSet<T>>,
}

impl<T> Default for Clustering<T> {
    fn default() -> Self {
        Self {
            clusters: Vec::new(),
        }
    }
}

impl<T> Clustering<T> {
    pub fn new(clusters: Vec<BTreeSet<T>>) -> Self {
        Self { clusters }
    }

    pub fn clusters(&self) -> &[BTreeSet<T>] {
        &self.clusters
    }

    pub fn len(&self) -> usize {
        self.clusters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.clusters.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, BTreeSet<T>> {
        self.clusters.iter()
    }
}

impl<T: Ord + Clone> Clustering<T> {
    /// Builds a clustering from item lists, rejecting an item repeated
    /// inside one cluster.
    pub fn from_lists<I, C>(lists: I) -> Result<Self, ModelError>
    where
        I: IntoIterator<Item = C>,
        C: IntoIterator<Item = T>,
    {
        let mut clusters = Vec::new();
        for (position, list) in lists.into_iter().enumerate() {
            let mut set = BTreeSet::new();
            for item in list {
                if !set.insert(item) {
                    return Err(ModelError::DuplicateMember { position });
                }
            }
            clusters.push(set);
        }
        Ok(Self { clusters })
    }

    /// Union of all clusters.
    pub fn clustered_universe(&self) -> BTreeSet<T> {
        self.clusters.iter().flatten().cloned().collect()
    }

    /// True when no two clusters share an item.
    pub fn is_disjoint(&self) -> bool {
        let mut seen = BTreeSet::new();
        self.clusters.iter().flatten().all(|item| seen.insert(item))
    }

    /// Nonempty clusters as a sorted multiset, the identity used for
    /// perfect-match comparisons.
    pub fn canonical_multiset(&self) -> Vec<BTreeSet<T>> {
        let mut out: Vec<_> = self
            .clusters
            .iter()
            .filter(|c| !c.is_empty())
            .cloned()
            .collect();
        out.sort();
        out
    }
}

impl<T: Ord + Clone> FromIterator<BTreeSet<T>> for Clustering<T> {
    fn from_iter<I: IntoIterator<Item = BTreeSet<T>>>(iter: I) -> Self {
        Self::new(iter.into_iter().collect())
    }
}

impl Clustering<ObjectId> {
    /// Checks that every member belongs to the universe.
    pub fn check_within(&self, universe: &Universe) -> Result<(), ModelError> {
        for (position, cluster) in self.clusters.iter().enumerate() {
            if let Some(o) = cluster.iter().find(|o| !universe.contains_object(o)) {
                return Err(ModelError::UnknownObject {
                    id: o.clone(),
                    position,
                });
            }
        }
        Ok(())
    }

    /// True when every object of the universe is in some cluster.
    pub fn covers(&self, universe: &Universe) -> bool {
        let clustered = self.clustered_universe();
        universe.objects().all(|o| clustered.contains(o))
    }
}

/// An (object part, feature part) pair.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Bicluster {
    pub objects: BTreeSet<ObjectId>,
    pub features: BTreeSet<FeatureId>,
}

impl Bicluster {
    pub fn new<O, F>(objects: impl IntoIterator<Item = O>, features: impl IntoIterator<Item = F>) -> Self
    where
        O: Into<ObjectId>,
        F: Into<FeatureId>,
    {
        Self {
            objects: objects.into_iter().map(Into::into).collect(),
            features: features.into_iter().map(Into::into).collect(),
        }
    }

    /// Number of micro-objects the bicluster expands to.
    pub fn area(&self) -> usize {
        self.objects.len() * self.features.len()
    }
}

/// Positional list of biclusters validated against a universe.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Biclustering {
    universe: Arc<Universe>,
    biclusters: Vec<Bicluster>,
}

impl Biclustering {
    pub fn new(universe: impl Into<Arc<Universe>>, biclusters: Vec<Bicluster>) -> Result<Self, ModelError> {
        let universe = universe.into();
        for (position, b) in biclusters.iter().enumerate() {
            if let Some(o) = b.objects.iter().find(|o| !universe.contains_object(o)) {
                return Err(ModelError::UnknownObject {
                    id: o.clone(),
                    position,
                });
            }
            if let Some(f) = b.features.iter().find(|f| !universe.contains_feature(f)) {
                return Err(ModelError::UnknownFeature {
                    id: f.clone(),
                    position,
                });
            }
        }
        Ok(Self {
            universe,
            biclusters,
        })
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn shared_universe(&self) -> Arc<Universe> {
        Arc::clone(&self.universe)
    }

    pub fn biclusters(&self) -> &[Bicluster] {
        &self.biclusters
    }

    pub fn len(&self) -> usize {
        self.biclusters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.biclusters.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Bicluster> {
        self.biclusters.iter()
    }

    /// Objects appearing in some bicluster.
    pub fn clustered_objects(&self) -> BTreeSet<ObjectId> {
        self.biclusters
            .iter()
            .flat_map(|b| b.objects.iter().cloned())
            .collect()
    }

    /// The same biclusters re-validated on another universe.
    pub fn on_universe(&self, universe: impl Into<Arc<Universe>>) -> Result<Self, ModelError> {
        Self::new(universe, self.biclusters.clone())
    }

    /// The object parts as a traditional clustering.
    pub fn object_clustering(&self) -> Clustering<ObjectId> {
        self.biclusters.iter().map(|b| b.objects.clone()).collect()
    }
}
