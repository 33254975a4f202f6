//! The directed k-NN graph and its weakly connected components.
//!
//! A cluster at depth `k` is a weakly connected component of the graph
//! with an edge from every point to each of its `k` nearest neighbors.
//! Components are computed with union-find; the resulting partition is
//! canonicalized so that a cluster's id is the minimum point id it
//! contains, making every downstream artifact reproducible.

use std::collections::BTreeMap;

use crate::dataset::PointId;
use crate::error::{Error, Result};
use crate::knn::NeighborTable;

/// The partition of the dataset at a fixed neighbor depth `k`.
///
/// Clusters are disjoint, cover all points, and are listed in ascending
/// order of their canonical (minimum-member) id; members are sorted
/// ascending within each cluster.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Level {
    k: usize,
    assignment: Vec<PointId>,
    clusters: Vec<Vec<PointId>>,
}

impl Level {
    /// The all-singletons partition, used as the depth-0 level.
    pub(crate) fn singletons(n: usize) -> Level {
        Level {
            k: 0,
            assignment: (0..n as PointId).collect(),
            clusters: (0..n as PointId).map(|i| vec![i]).collect(),
        }
    }

    /// Builds a level from explicit clusters, validating that they are
    /// disjoint, non-empty and cover ids `0..n` for some `n`.
    pub fn from_clusters(k: usize, clusters: Vec<Vec<PointId>>) -> Result<Level> {
        let n: usize = clusters.iter().map(Vec::len).sum();
        if n == 0 {
            return Err(Error::InvalidLevel("no clusters".to_string()));
        }
        let mut assignment = vec![PointId::MAX; n];
        let mut seen = vec![false; n];
        let mut clusters: Vec<Vec<PointId>> = clusters
            .into_iter()
            .map(|mut members| {
                members.sort_unstable();
                members
            })
            .collect();
        clusters.sort_unstable_by_key(|members| members.first().copied());
        for members in &clusters {
            if members.is_empty() {
                return Err(Error::InvalidLevel("empty cluster".to_string()));
            }
            let canonical = members[0];
            for &m in members {
                let m = m as usize;
                if m >= n {
                    return Err(Error::InvalidLevel(format!(
                        "id {m} out of range for {n} points"
                    )));
                }
                if seen[m] {
                    return Err(Error::InvalidLevel(format!("id {m} appears twice")));
                }
                seen[m] = true;
                assignment[m] = canonical;
            }
        }
        Ok(Level {
            k,
            assignment,
            clusters,
        })
    }

    fn from_union_find(k: usize, uf: &mut UnionFind) -> Level {
        let n = uf.len();
        let mut canonical = vec![PointId::MAX; n];
        let mut assignment = vec![PointId::MAX; n];
        for (i, slot) in assignment.iter_mut().enumerate() {
            let root = uf.find(i);
            // ids ascend, so the first member to reach a root names it
            if canonical[root] == PointId::MAX {
                canonical[root] = i as PointId;
            }
            *slot = canonical[root];
        }
        let mut groups: BTreeMap<PointId, Vec<PointId>> = BTreeMap::new();
        for (i, &label) in assignment.iter().enumerate() {
            groups.entry(label).or_default().push(i as PointId);
        }
        Level {
            k,
            assignment,
            clusters: groups.into_values().collect(),
        }
    }

    /// Neighbor depth of this level.
    pub fn k(&self) -> usize {
        self.k
    }

    /// Number of points covered.
    pub fn len(&self) -> usize {
        self.assignment.len()
    }

    pub fn is_empty(&self) -> bool {
        self.assignment.is_empty()
    }

    /// Number of clusters, `I_k`.
    pub fn cluster_count(&self) -> usize {
        self.clusters.len()
    }

    /// Canonical cluster id of one point.
    pub fn cluster_of(&self, id: PointId) -> PointId {
        self.assignment[id as usize]
    }

    /// Point id to canonical cluster id, indexable by point id.
    pub fn assignment(&self) -> &[PointId] {
        &self.assignment
    }

    /// The clusters, ascending by canonical id.
    pub fn clusters(&self) -> &[Vec<PointId>] {
        &self.clusters
    }
}

/// True iff the level is a single cluster covering the whole dataset.
pub fn is_connected(level: &Level) -> bool {
    level.cluster_count() == 1
}

/// Clusters at depth `k`: unite every point with each of its first `k`
/// neighbors and read off the components.
pub fn components_at_k(table: &NeighborTable, k: usize) -> Result<Level> {
    if k > table.depth() {
        return Err(Error::TableTooShallow {
            depth: table.depth(),
            k,
        });
    }
    let n = table.len();
    let mut uf = UnionFind::new(n);
    for i in 0..n {
        for neighbor in &table.neighbors(i as PointId)[..k] {
            uf.union(i, neighbor.id as usize);
        }
    }
    Ok(Level::from_union_find(k, &mut uf))
}

/// Clusters at depth `k` built incrementally from the level below:
/// resume the previous partition and unite every point with its k-th
/// neighbor only. Equals `components_at_k(table, k)` exactly.
pub fn merge_level(prev: &Level, table: &NeighborTable, k: usize) -> Result<Level> {
    if prev.k() + 1 != k {
        return Err(Error::MismatchedLevel { prev_k: prev.k(), k });
    }
    if k > table.depth() {
        return Err(Error::TableTooShallow {
            depth: table.depth(),
            k,
        });
    }
    let n = table.len();
    let mut uf = UnionFind::from_assignment(prev.assignment());
    for i in 0..n {
        let kth = table.neighbors(i as PointId)[k - 1];
        uf.union(i, kth.id as usize);
    }
    Ok(Level::from_union_find(k, &mut uf))
}

/// Disjoint sets with union by size and path compression.
struct UnionFind {
    parent: Vec<u32>,
    size: Vec<u32>,
}

impl UnionFind {
    fn new(n: usize) -> UnionFind {
        UnionFind {
            parent: (0..n as u32).collect(),
            size: vec![1; n],
        }
    }

    /// Resumes from a level's canonical assignment: each point's parent
    /// is its cluster id, which is itself a root.
    fn from_assignment(assignment: &[PointId]) -> UnionFind {
        let mut size = vec![0u32; assignment.len()];
        for &label in assignment {
            size[label as usize] += 1;
        }
        UnionFind {
            parent: assignment.to_vec(),
            size,
        }
    }

    fn len(&self) -> usize {
        self.parent.len()
    }

    fn find(&mut self, x: usize) -> usize {
        let mut root = x;
        while self.parent[root] as usize != root {
            root = self.parent[root] as usize;
        }
        let mut cur = x;
        while cur != root {
            let next = self.parent[cur] as usize;
            self.parent[cur] = root as u32;
            cur = next;
        }
        root
    }

    fn union(&mut self, x: usize, y: usize) {
        let mut a = self.find(x);
        let mut b = self.find(y);
        if a == b {
            return;
        }
        if self.size[a] < self.size[b] {
            std::mem::swap(&mut a, &mut b);
        }
        self.parent[b] = a as u32;
        self.size[a] += self.size[b];
    }
}
