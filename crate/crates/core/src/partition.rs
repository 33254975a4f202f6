//! Flat partitions selected from a hierarchy.
//!
//! Two selection rules are provided. The coarsest partition is the
//! level just before the top — the largest k that still has at least
//! two clusters. It can over-combine: a small tight group sitting near
//! a large one is forced to merge long before the whole dataset
//! connects. The natural partition counters that with the size bound:
//! a cluster of size exactly k+1 at level k is as small as a level-k
//! cluster can be, so it is taken as a genuine cluster. The highest
//! such candidates are kept as-is and everything else is grouped by the
//! coarse cluster it falls in.

use crate::dataset::PointId;
use crate::error::{Error, Result};
use crate::hierarchy::{ClusterNode, Hierarchy};

/// How a partition cluster was selected.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Provenance {
    /// A hierarchy cluster of size exactly `k + 1` at level `k >= 1`.
    BonaFide { k: usize },
    /// Leftover points of one coarse cluster after removing the
    /// selected candidates inside it.
    Remainder,
    /// A cluster of the coarsest level.
    Coarse,
}

/// One cluster of a flat partition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartitionCluster {
    members: Vec<PointId>,
    provenance: Provenance,
}

impl PartitionCluster {
    /// Member ids, ascending.
    pub fn members(&self) -> &[PointId] {
        &self.members
    }

    pub fn provenance(&self) -> Provenance {
        self.provenance
    }
}

/// A disjoint, covering set of clusters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Partition {
    n: usize,
    clusters: Vec<PartitionCluster>,
}

impl Partition {
    fn new(n: usize, mut clusters: Vec<PartitionCluster>) -> Partition {
        clusters.sort_unstable_by_key(|c| c.members[0]);
        Partition { n, clusters }
    }

    /// Number of points covered.
    pub fn n(&self) -> usize {
        self.n
    }

    /// The clusters, ascending by canonical (minimum-member) id.
    pub fn clusters(&self) -> &[PartitionCluster] {
        &self.clusters
    }

    /// Flat labels: point id to the canonical id of its cluster.
    /// Stable across runs because canonical ids are minimum members.
    pub fn labels(&self) -> Vec<PointId> {
        let mut labels = vec![PointId::MAX; self.n];
        for cluster in &self.clusters {
            let label = cluster.members[0];
            for &m in &cluster.members {
                labels[m as usize] = label;
            }
        }
        labels
    }
}

fn require_at_least_two(hierarchy: &Hierarchy) -> Result<()> {
    if hierarchy.n() < 2 {
        return Err(Error::DegenerateInput {
            required: 2,
            n: hierarchy.n(),
        });
    }
    Ok(())
}

/// The coarsest clustering: the level at the largest k with at least
/// two clusters, i.e. k* − 1.
pub fn coarsest_partition(hierarchy: &Hierarchy) -> Result<Partition> {
    require_at_least_two(hierarchy)?;
    let level = hierarchy.level(hierarchy.k_star() - 1);
    let clusters = level
        .clusters()
        .iter()
        .map(|members| PartitionCluster {
            members: members.clone(),
            provenance: Provenance::Coarse,
        })
        .collect();
    Ok(Partition::new(hierarchy.n(), clusters))
}

/// A tree node qualifies when its size is exactly k+1 for some level
/// k >= 1 at which the node's member set is a cluster. Sizes never
/// change while a set persists, so the only level to check is
/// `size - 1`, which must fall within the node's k range. Singleton
/// leaves never qualify: size 1 only matches k = 0.
fn is_bona_fide(node: &ClusterNode) -> bool {
    let qualifying_k = node.size() - 1;
    qualifying_k >= 1 && node.formation_k() <= qualifying_k && qualifying_k <= node.last_k()
}

/// All tree nodes of size k+1 at some level k >= 1 where they are a
/// cluster, sorted by descending size then ascending canonical id.
pub fn bona_fide_candidates(hierarchy: &Hierarchy) -> Vec<ClusterNode> {
    let tree = hierarchy.to_tree();
    let mut candidates: Vec<ClusterNode> = tree
        .nodes()
        .iter()
        .filter(|node| is_bona_fide(node))
        .cloned()
        .collect();
    candidates.sort_unstable_by(|a, b| {
        b.size()
            .cmp(&a.size())
            .then(a.canonical_id().cmp(&b.canonical_id()))
    });
    candidates
}

/// The natural partition: maximal bona fide candidates, plus one
/// remainder cluster per coarse cluster for all points left over.
///
/// The tree is laminar, so selecting only candidates without a
/// qualifying ancestor makes the selection pairwise disjoint. If the
/// root itself qualifies the partition is the whole set. Every output
/// cluster lies inside exactly one coarse cluster (or is the root).
pub fn natural_partition(hierarchy: &Hierarchy) -> Result<Partition> {
    require_at_least_two(hierarchy)?;
    let n = hierarchy.n();
    let tree = hierarchy.to_tree();

    // depth-first from the root, stopping at the first qualifying node
    // on each path: that node is maximal by inclusion
    let mut selected: Vec<usize> = Vec::new();
    let mut stack = vec![tree.root_index()];
    while let Some(ix) = stack.pop() {
        let node = tree.node(ix);
        if is_bona_fide(node) {
            selected.push(ix);
        } else {
            stack.extend_from_slice(node.children());
        }
    }

    let mut covered = vec![false; n];
    let mut clusters: Vec<PartitionCluster> = Vec::with_capacity(selected.len() + 4);
    for ix in selected {
        let node = tree.node(ix);
        for &m in node.members() {
            covered[m as usize] = true;
        }
        clusters.push(PartitionCluster {
            members: node.members().to_vec(),
            provenance: Provenance::BonaFide {
                k: node.size() - 1,
            },
        });
    }

    let coarse = hierarchy.level(hierarchy.k_star() - 1);
    for members in coarse.clusters() {
        let remainder: Vec<PointId> = members
            .iter()
            .copied()
            .filter(|&m| !covered[m as usize])
            .collect();
        if !remainder.is_empty() {
            clusters.push(PartitionCluster {
                members: remainder,
                provenance: Provenance::Remainder,
            });
        }
    }
    Ok(Partition::new(n, clusters))
}

/// Flat labels for a partition; see [`Partition::labels`].
pub fn flat_labels(partition: &Partition) -> Vec<PointId> {
    partition.labels()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dataset::{Dataset, Metric};
    use crate::hierarchy::build_hierarchy;
    use crate::knn::KnnBackend;
    use crate::oracle::oracle_hierarchy;

    fn hierarchy_of(rows: &[[f64; 1]]) -> Hierarchy {
        let ds = Dataset::from_rows(rows).unwrap();
        build_hierarchy(&ds, &Metric::Euclidean, KnnBackend::Brute).unwrap()
    }

    #[test]
    fn coarsest_of_four_point_line() {
        let h = hierarchy_of(&[[0.0], [1.0], [10.0], [11.0]]);
        let p = coarsest_partition(&h).unwrap();
        let members: Vec<&[PointId]> = p.clusters().iter().map(|c| c.members()).collect();
        assert_eq!(members, vec![&[0, 1][..], &[2, 3][..]]);
        assert!(p
            .clusters()
            .iter()
            .all(|c| c.provenance() == Provenance::Coarse));
    }

    #[test]
    fn coarsest_of_two_points_is_singletons() {
        let h = hierarchy_of(&[[0.0], [5.0]]);
        let p = coarsest_partition(&h).unwrap();
        assert_eq!(p.clusters().len(), 2);
        assert_eq!(p.labels(), vec![0, 1]);
    }

    #[test]
    fn coarsest_when_kstar_is_one_is_singletons() {
        // the 1-NN graph of an integer grid chains every point to its
        // left neighbor via the id tie-break, so k* = 1
        let rows: Vec<[f64; 1]> = (0..10).map(|i| [i as f64]).collect();
        let h = hierarchy_of(&rows);
        assert_eq!(h.k_star(), 1);
        let p = coarsest_partition(&h).unwrap();
        assert_eq!(p.clusters().len(), 10);
    }

    #[test]
    fn natural_partition_of_four_point_line() {
        let h = hierarchy_of(&[[0.0], [1.0], [10.0], [11.0]]);
        let p = natural_partition(&h).unwrap();
        assert_eq!(p.clusters().len(), 2);
        for cluster in p.clusters() {
            assert_eq!(cluster.provenance(), Provenance::BonaFide { k: 1 });
            assert_eq!(cluster.members().len(), 2);
        }
        assert_eq!(p.labels(), vec![0, 0, 2, 2]);
        // same member sets as the coarsest partition here
        let coarse = coarsest_partition(&h).unwrap();
        let sets = |p: &Partition| -> Vec<Vec<PointId>> {
            p.clusters().iter().map(|c| c.members().to_vec()).collect()
        };
        assert_eq!(sets(&p), sets(&coarse));
    }

    #[test]
    fn root_of_two_points_is_bona_fide() {
        let h = hierarchy_of(&[[0.0], [5.0]]);
        let candidates = bona_fide_candidates(&h);
        assert_eq!(candidates.len(), 1);
        assert_eq!(candidates[0].members(), &[0, 1]);
        let p = natural_partition(&h).unwrap();
        assert_eq!(p.clusters().len(), 1);
        assert_eq!(
            p.clusters()[0].provenance(),
            Provenance::BonaFide { k: 1 }
        );
        assert_eq!(p.labels(), vec![0, 0]);
    }

    #[test]
    fn grid_candidates_match_exhaustive_check() {
        let rows: Vec<[f64; 1]> = (0..10).map(|i| [i as f64]).collect();
        let ds = Dataset::from_rows(&rows).unwrap();
        let h = oracle_hierarchy(&ds, &Metric::Euclidean).unwrap();

        // exhaustive: every level-k cluster of size k+1, k >= 1
        let mut expected: Vec<Vec<PointId>> = Vec::new();
        for level in h.levels() {
            if level.k() == 0 {
                continue;
            }
            for cluster in level.clusters() {
                if cluster.len() == level.k() + 1 && !expected.contains(cluster) {
                    expected.push(cluster.clone());
                }
            }
        }
        let got: Vec<Vec<PointId>> = bona_fide_candidates(&h)
            .iter()
            .map(|node| node.members().to_vec())
            .collect();
        assert_eq!(got, expected);
        assert!(got.is_empty());
    }

    #[test]
    fn remainder_groups_by_coarse_cluster() {
        // k* = 1 grid: no candidates, so every point is a remainder of
        // its own singleton coarse cluster
        let rows: Vec<[f64; 1]> = (0..10).map(|i| [i as f64]).collect();
        let h = hierarchy_of(&rows);
        let p = natural_partition(&h).unwrap();
        assert_eq!(p.clusters().len(), 10);
        assert!(p
            .clusters()
            .iter()
            .all(|c| c.provenance() == Provenance::Remainder));
        assert_eq!(p.labels(), (0..10).collect::<Vec<_>>());
    }

    #[test]
    fn degenerate_single_point_is_rejected() {
        let h = hierarchy_of(&[[0.0]]);
        assert_eq!(
            coarsest_partition(&h).unwrap_err(),
            Error::DegenerateInput { required: 2, n: 1 }
        );
        assert_eq!(
            natural_partition(&h).unwrap_err(),
            Error::DegenerateInput { required: 2, n: 1 }
        );
    }

    #[test]
    fn labels_of_single_cluster_are_zero() {
        let h = hierarchy_of(&[[0.0], [5.0]]);
        let p = natural_partition(&h).unwrap();
        assert_eq!(flat_labels(&p), vec![0, 0]);
    }
}
