/*!
Hierarchical clustering from the connected components of k-nearest-neighbor
graphs.

For a dataset of N points and a metric, the clusters at depth `k` are the
weakly connected components of the digraph that links every point to its
`k` nearest neighbors. Raising `k` only ever merges clusters, so the
levels for k = 0 (singletons) up to the first connected level k*
(the whole dataset) form a hierarchy that depends on nothing but the
data and the metric — no linkage criterion, no iteration order. The
crate computes that hierarchy, its tree view, and two flat partitions
derived from it: the coarsest level below the top, and the "natural"
selection that keeps minimum-size clusters (size k+1 at level k) intact
instead of letting them be absorbed.

Neighbor retrieval has two interchangeable backends — brute-force sorted
rows and a k-d tree — that return identical results entry for entry;
ties in distance are always broken by ascending point id, which makes
every output deterministic.

# Example

```
use nnhier::{build_hierarchy, natural_partition, Dataset, KnnBackend, Metric};

let rows = [[0.0], [1.0], [10.0], [11.0]];
let dataset = Dataset::from_rows(&rows)?;
let hierarchy = build_hierarchy(&dataset, &Metric::Euclidean, KnnBackend::KdTree)?;
assert_eq!(hierarchy.k_star(), 2);

let partition = natural_partition(&hierarchy)?;
assert_eq!(partition.labels(), vec![0, 0, 2, 2]);
# Ok::<(), nnhier::Error>(())
```
*/

mod error;

pub mod dataset;
pub mod graph;
pub mod hierarchy;
pub mod knn;
pub mod oracle;
pub mod partition;

pub use crate::dataset::{CustomMetricFn, Dataset, DistanceMatrix, Metric, PointId};
pub use crate::error::{Error, Result};
pub use crate::graph::{components_at_k, is_connected, merge_level, Level};
pub use crate::hierarchy::{
    build_hierarchy, find_kstar, to_tree, verify_nesting, ClusterNode, ClusterTree, Hierarchy,
};
pub use crate::knn::{
    all_knn, build_index, extend_neighbors, query_knn, KnnBackend, KnnIndex, Neighbor,
    NeighborTable,
};
pub use crate::partition::{
    bona_fide_candidates, coarsest_partition, flat_labels, natural_partition, Partition,
    PartitionCluster, Provenance,
};
