//! Exact k-nearest-neighbor retrieval with two interchangeable backends.
//!
//! Both backends answer queries under the same total order — ascending
//! distance, ties broken by ascending point id — so they produce
//! identical neighbor tables on identical input. The brute backend sorts
//! full distance-matrix rows once and reuses them; the kd-tree backend
//! prunes subtrees during each query and suits repeated deepening on
//! large, well-distributed datasets.

mod brute;
mod kdtree;

use std::cmp::Ordering;
use std::str::FromStr;

use crate::dataset::{Dataset, Metric, PointId};
use crate::error::{Error, Result};

use brute::BruteIndex;
use kdtree::KdTreeIndex;

/// Which k-NN implementation backs an index.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KnnBackend {
    /// Fully sorted distance-matrix rows, cached on first use.
    Brute,
    /// Median-split k-d tree with per-axis pruning.
    KdTree,
}

impl FromStr for KnnBackend {
    type Err = Error;

    fn from_str(s: &str) -> Result<KnnBackend> {
        match s {
            "brute" => Ok(KnnBackend::Brute),
            "kdtree" => Ok(KnnBackend::KdTree),
            _ => Err(Error::UnknownBackend(s.to_string())),
        }
    }
}

/// One entry of a neighbor list.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Neighbor {
    pub id: PointId,
    pub dist: f64,
}

impl Neighbor {
    /// The (distance, id) total order shared by both backends.
    pub(crate) fn cmp_by_dist_then_id(&self, other: &Neighbor) -> Ordering {
        self.dist
            .total_cmp(&other.dist)
            .then(self.id.cmp(&other.id))
    }
}

/// Per-point neighbor lists, all materialized to a common depth.
///
/// Lists never contain the point itself and are sorted ascending by
/// (distance, id). The first `k` entries of a list are identical no
/// matter the depth the table was built at (prefix stability), which is
/// what makes incremental deepening sound.
#[derive(Clone, Debug, PartialEq)]
pub struct NeighborTable {
    depth: usize,
    lists: Vec<Vec<Neighbor>>,
}

impl NeighborTable {
    pub(crate) fn new(depth: usize, lists: Vec<Vec<Neighbor>>) -> NeighborTable {
        debug_assert!(lists.iter().all(|l| l.len() == depth));
        NeighborTable { depth, lists }
    }

    /// Depth up to which every list is materialized.
    pub fn depth(&self) -> usize {
        self.depth
    }

    /// Number of points covered.
    pub fn len(&self) -> usize {
        self.lists.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lists.is_empty()
    }

    /// The full list for one point, ascending by (distance, id).
    pub fn neighbors(&self, id: PointId) -> &[Neighbor] {
        &self.lists[id as usize]
    }
}

/// An immutable k-NN index over a dataset.
///
/// Queries are read-only and safe to issue from multiple threads.
#[derive(Debug)]
pub enum KnnIndex<'a> {
    Brute(BruteIndex<'a>),
    KdTree(KdTreeIndex<'a>),
}

/// Builds an index over the dataset with the requested backend.
///
/// The kd-tree backend needs a metric for which the distance along a
/// single axis is a lower bound on the full distance; custom metrics
/// are rejected with `Error::UnsupportedBackend`.
pub fn build_index<'a>(
    dataset: &'a Dataset,
    metric: &Metric,
    backend: KnnBackend,
) -> Result<KnnIndex<'a>> {
    match backend {
        KnnBackend::Brute => Ok(KnnIndex::Brute(BruteIndex::new(dataset, metric.clone()))),
        KnnBackend::KdTree => {
            if !metric.has_axis_lower_bound() {
                return Err(Error::UnsupportedBackend);
            }
            Ok(KnnIndex::KdTree(KdTreeIndex::build(dataset, metric.clone())))
        }
    }
}

impl<'a> KnnIndex<'a> {
    pub fn dataset(&self) -> &'a Dataset {
        match self {
            KnnIndex::Brute(b) => b.dataset(),
            KnnIndex::KdTree(t) => t.dataset(),
        }
    }

    pub fn backend(&self) -> KnnBackend {
        match self {
            KnnIndex::Brute(_) => KnnBackend::Brute,
            KnnIndex::KdTree(_) => KnnBackend::KdTree,
        }
    }

    fn check_k(&self, k: usize) -> Result<()> {
        let max = self.dataset().len() - 1;
        if k > max {
            return Err(Error::KOutOfRange { k, max });
        }
        Ok(())
    }
}

/// The `k` nearest neighbors of one point, ascending by (distance, id).
///
/// `k = 0` returns an empty list; `k` may not exceed `N - 1`.
pub fn query_knn(index: &KnnIndex<'_>, point_id: PointId, k: usize) -> Result<Vec<Neighbor>> {
    let n = index.dataset().len();
    if point_id as usize >= n {
        return Err(Error::PointOutOfRange { id: point_id, n });
    }
    index.check_k(k)?;
    if k == 0 {
        return Ok(Vec::new());
    }
    Ok(match index {
        KnnIndex::Brute(b) => b.query(point_id, k),
        KnnIndex::KdTree(t) => t.query(point_id, k),
    })
}

/// A table of depth `k` covering all points.
pub fn all_knn(index: &KnnIndex<'_>, k: usize) -> Result<NeighborTable> {
    index.check_k(k)?;
    let n = index.dataset().len();
    if k == 0 {
        return Ok(NeighborTable::new(0, vec![Vec::new(); n]));
    }
    let lists = match index {
        KnnIndex::Brute(b) => (0..n as PointId).map(|i| b.query(i, k)).collect(),
        KnnIndex::KdTree(t) => (0..n as PointId).map(|i| t.query(i, k)).collect(),
    };
    Ok(NeighborTable::new(k, lists))
}

/// Deepens a table to `new_depth`, leaving existing prefixes unchanged.
///
/// The brute backend slices longer prefixes from its cached rows; the
/// kd-tree backend re-queries at the larger depth. Either way the
/// result equals a fresh `all_knn` at `new_depth`.
pub fn extend_neighbors(
    index: &KnnIndex<'_>,
    table: &NeighborTable,
    new_depth: usize,
) -> Result<NeighborTable> {
    if new_depth <= table.depth() {
        return Err(Error::DepthNotDeepened {
            depth: table.depth(),
            new_depth,
        });
    }
    index.check_k(new_depth)?;
    all_knn(index, new_depth)
}
