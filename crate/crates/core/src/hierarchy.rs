//! The full hierarchy of k-NN levels and its tree view.
//!
//! Deepening k from 0 only ever merges clusters, so the levels for
//! k = 0..k* form a nested hierarchy: singletons at the bottom, the
//! whole dataset at the top, where k* is the smallest depth whose k-NN
//! graph is connected. All levels are retained; the tree view collapses
//! the iterations where nothing changed.

use std::collections::VecDeque;

use crate::dataset::{Dataset, Metric, PointId};
use crate::error::{Error, Result};
use crate::graph::{components_at_k, is_connected, merge_level, Level};
use crate::knn::{all_knn, build_index, extend_neighbors, KnnBackend};

/// The levels k = 0..=k* of one dataset.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hierarchy {
    levels: Vec<Level>,
    distinct_ks: Vec<usize>,
}

impl Hierarchy {
    /// Assembles a hierarchy from consecutive levels, validating the
    /// shape: level `i` has `k = i`, the bottom level is singletons,
    /// only the top level is connected, and cluster counts never
    /// increase.
    pub fn from_levels(levels: Vec<Level>) -> Result<Hierarchy> {
        let Some(first) = levels.first() else {
            return Err(Error::InvalidHierarchy("no levels".to_string()));
        };
        let n = first.len();
        if first.cluster_count() != n {
            return Err(Error::InvalidHierarchy(
                "bottom level is not all singletons".to_string(),
            ));
        }
        for (i, level) in levels.iter().enumerate() {
            if level.k() != i {
                return Err(Error::InvalidHierarchy(format!(
                    "level {i} has k = {}",
                    level.k()
                )));
            }
            if level.len() != n {
                return Err(Error::InvalidHierarchy(format!(
                    "level {i} covers {} points, expected {n}",
                    level.len()
                )));
            }
            let connected = level.cluster_count() == 1;
            let is_last = i + 1 == levels.len();
            if connected != is_last {
                return Err(Error::InvalidHierarchy(format!(
                    "level {i} has {} clusters, so k* is not minimal",
                    level.cluster_count()
                )));
            }
            if i > 0 && level.cluster_count() > levels[i - 1].cluster_count() {
                return Err(Error::InvalidHierarchy(format!(
                    "cluster count increases at level {i}"
                )));
            }
        }
        let distinct_ks = (0..levels.len())
            .filter(|&k| k == 0 || levels[k].clusters() != levels[k - 1].clusters())
            .collect();
        Ok(Hierarchy {
            levels,
            distinct_ks,
        })
    }

    /// Number of points.
    pub fn n(&self) -> usize {
        self.levels[0].len()
    }

    /// The smallest k whose level is a single cluster.
    pub fn k_star(&self) -> usize {
        self.levels.len() - 1
    }

    /// All levels, k ascending from 0 to k*.
    pub fn levels(&self) -> &[Level] {
        &self.levels
    }

    /// The level at depth `k`.
    pub fn level(&self, k: usize) -> &Level {
        &self.levels[k]
    }

    /// The k values at which the partition differs from the level
    /// below; `k = 0` is always included.
    pub fn distinct_ks(&self) -> &[usize] {
        &self.distinct_ks
    }

    /// The hierarchy as a laminar tree of clusters. See [`to_tree`].
    pub fn to_tree(&self) -> ClusterTree {
        to_tree(self)
    }

    /// True iff every level nests in the one above. See [`verify_nesting`].
    pub fn verify_nesting(&self) -> bool {
        verify_nesting(self)
    }
}

/// Computes the whole hierarchy for a dataset.
///
/// Neighbor tables are materialized by doubling the depth (1, 2, 4, …,
/// capped at N−1) until some depth yields a connected level; k* is then
/// the first connected level in an ascending scan that builds each
/// level incrementally from its predecessor. On the brute backend the
/// distance work stays O(N²); level construction is O(k*·N·α(N)).
pub fn build_hierarchy(
    dataset: &Dataset,
    metric: &Metric,
    backend: KnnBackend,
) -> Result<Hierarchy> {
    let n = dataset.len();
    let index = build_index(dataset, metric, backend)?;
    let max_depth = n - 1;
    let mut table = all_knn(&index, max_depth.min(1))?;
    while !is_connected(&components_at_k(&table, table.depth())?) {
        // the complete graph at depth N-1 is always connected
        debug_assert!(table.depth() < max_depth);
        let new_depth = (table.depth() * 2).min(max_depth);
        table = extend_neighbors(&index, &table, new_depth)?;
    }
    let mut levels = vec![Level::singletons(n)];
    while !is_connected(levels.last().expect("at least one level")) {
        let k = levels.len();
        let next = merge_level(&levels[k - 1], &table, k)?;
        levels.push(next);
    }
    Hierarchy::from_levels(levels)
}

/// The minimal k whose level is connected, found by scanning levels in
/// ascending order.
pub fn find_kstar(hierarchy: &Hierarchy) -> usize {
    hierarchy
        .levels()
        .iter()
        .position(is_connected)
        .expect("the top level of a hierarchy is connected")
}

/// One cluster of the tree view.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClusterNode {
    members: Vec<PointId>,
    formation_k: usize,
    last_k: usize,
    children: Vec<usize>,
    parent: Option<usize>,
}

impl ClusterNode {
    /// Member point ids, ascending.
    pub fn members(&self) -> &[PointId] {
        &self.members
    }

    /// Canonical id: the minimum member.
    pub fn canonical_id(&self) -> PointId {
        self.members[0]
    }

    pub fn size(&self) -> usize {
        self.members.len()
    }

    /// Smallest k at which this exact member set is a cluster.
    pub fn formation_k(&self) -> usize {
        self.formation_k
    }

    /// Largest k at which this exact member set is a cluster.
    pub fn last_k(&self) -> usize {
        self.last_k
    }

    /// Indices of the child nodes; empty for singleton leaves.
    pub fn children(&self) -> &[usize] {
        &self.children
    }

    /// Index of the containing node, if any.
    pub fn parent(&self) -> Option<usize> {
        self.parent
    }

    pub fn is_leaf(&self) -> bool {
        self.children.is_empty()
    }
}

/// The hierarchy's clusters as a laminar tree stored in an arena.
///
/// Leaves are exactly the N singletons; every internal node has at
/// least two children, because iterations where a cluster does not
/// change are collapsed into one node spanning `formation_k..=last_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClusterTree {
    nodes: Vec<ClusterNode>,
    root: usize,
}

impl ClusterTree {
    /// All nodes; indices are stable and referenced by
    /// [`ClusterNode::children`] and [`ClusterNode::parent`].
    pub fn nodes(&self) -> &[ClusterNode] {
        &self.nodes
    }

    pub fn node(&self, index: usize) -> &ClusterNode {
        &self.nodes[index]
    }

    pub fn root_index(&self) -> usize {
        self.root
    }

    pub fn root(&self) -> &ClusterNode {
        &self.nodes[self.root]
    }

    /// Node indices in breadth-first order from the root.
    pub fn breadth_first(&self) -> Vec<usize> {
        let mut order = Vec::with_capacity(self.nodes.len());
        let mut queue = VecDeque::from([self.root]);
        while let Some(ix) = queue.pop_front() {
            order.push(ix);
            queue.extend(self.nodes[ix].children.iter().copied());
        }
        order
    }
}

/// Builds the tree view: one node per distinct cluster set, children
/// ordered by canonical id.
pub fn to_tree(hierarchy: &Hierarchy) -> ClusterTree {
    let n = hierarchy.n();
    let mut nodes: Vec<ClusterNode> = (0..n as PointId)
        .map(|id| ClusterNode {
            members: vec![id],
            formation_k: 0,
            last_k: 0,
            children: Vec::new(),
            parent: None,
        })
        .collect();
    // canonical cluster id -> node index, for the level being walked
    let mut current: Vec<usize> = (0..n).collect();
    for k in 1..=hierarchy.k_star() {
        let prev_level = hierarchy.level(k - 1);
        let mut next: Vec<usize> = vec![usize::MAX; n];
        for cluster in hierarchy.level(k).clusters() {
            let mut child_ids: Vec<PointId> =
                cluster.iter().map(|&m| prev_level.cluster_of(m)).collect();
            child_ids.sort_unstable();
            child_ids.dedup();
            let canonical = cluster[0] as usize;
            if child_ids.len() == 1 {
                // unchanged set: keep the node, extend its k range
                let node = current[child_ids[0] as usize];
                nodes[node].last_k = k;
                next[canonical] = node;
            } else {
                let children: Vec<usize> =
                    child_ids.iter().map(|&c| current[c as usize]).collect();
                let index = nodes.len();
                for &child in &children {
                    nodes[child].parent = Some(index);
                }
                nodes.push(ClusterNode {
                    members: cluster.clone(),
                    formation_k: k,
                    last_k: k,
                    children,
                    parent: None,
                });
                next[canonical] = index;
            }
        }
        current = next;
    }
    let root = current[0];
    ClusterTree { nodes, root }
}

/// True iff every cluster at level k is wholly contained in one cluster
/// at level k+1, for every consecutive pair of levels.
pub fn verify_nesting(hierarchy: &Hierarchy) -> bool {
    for k in 0..hierarchy.k_star() {
        let above = hierarchy.level(k + 1);
        for cluster in hierarchy.level(k).clusters() {
            let label = above.cluster_of(cluster[0]);
            if cluster.iter().any(|&m| above.cluster_of(m) != label) {
                return false;
            }
        }
    }
    true
}
