use std::collections::BinaryHeap;

use crate::dataset::{Dataset, Metric, PointId};
use crate::knn::Neighbor;

const NIL: u32 = u32::MAX;

#[derive(Debug)]
struct Node {
    point: PointId,
    left: u32,
    right: u32,
}

/// k-d tree backend: one point per node, median-of-coordinates splits,
/// split dimension cycling with tree depth.
///
/// Splits order points by (coordinate, id), so the tree shape is
/// deterministic even with duplicate coordinates. Queries keep the k
/// best candidates in a max-first heap ordered by (distance, id) and
/// prune a subtree only when the distance to its splitting plane
/// strictly exceeds the current k-th best — on an exact tie the far
/// side may still hold an equal-distance neighbor with a smaller id.
#[derive(Debug)]
pub struct KdTreeIndex<'a> {
    dataset: &'a Dataset,
    metric: Metric,
    nodes: Vec<Node>,
    root: u32,
}

impl<'a> KdTreeIndex<'a> {
    pub(crate) fn build(dataset: &'a Dataset, metric: Metric) -> KdTreeIndex<'a> {
        let n = dataset.len();
        let mut ids: Vec<PointId> = (0..n as PointId).collect();
        let mut tree = KdTreeIndex {
            dataset,
            metric,
            nodes: Vec::with_capacity(n),
            root: NIL,
        };
        tree.root = tree.build_rec(&mut ids, 0);
        tree
    }

    pub(crate) fn dataset(&self) -> &'a Dataset {
        self.dataset
    }

    fn coord(&self, id: PointId, axis: usize) -> f64 {
        self.dataset.point(id)[axis]
    }

    fn build_rec(&mut self, ids: &mut [PointId], depth: usize) -> u32 {
        if ids.is_empty() {
            return NIL;
        }
        let axis = depth % self.dataset.dim();
        let mid = ids.len() / 2;
        ids.select_nth_unstable_by(mid, |&a, &b| {
            self.coord(a, axis)
                .total_cmp(&self.coord(b, axis))
                .then(a.cmp(&b))
        });
        let point = ids[mid];
        let (left_ids, rest) = ids.split_at_mut(mid);
        let left = self.build_rec(left_ids, depth + 1);
        let right = self.build_rec(&mut rest[1..], depth + 1);
        self.nodes.push(Node { point, left, right });
        (self.nodes.len() - 1) as u32
    }

    /// Exact k nearest neighbors of a dataset point, the point itself
    /// excluded. `k >= 1` and in range; validated by the caller.
    pub(crate) fn query(&self, point_id: PointId, k: usize) -> Vec<Neighbor> {
        let query = self.dataset.point(point_id);
        let mut heap: BinaryHeap<HeapEntry> = BinaryHeap::with_capacity(k + 1);
        self.visit(self.root, 0, point_id, query, k, &mut heap);
        let mut result: Vec<Neighbor> = heap
            .into_sorted_vec()
            .into_iter()
            .map(|e| Neighbor {
                id: e.id,
                dist: e.dist,
            })
            .collect();
        debug_assert!(result.len() == k);
        result.shrink_to_fit();
        result
    }

    fn visit(
        &self,
        node: u32,
        depth: usize,
        query_id: PointId,
        query: &[f64],
        k: usize,
        heap: &mut BinaryHeap<HeapEntry>,
    ) {
        if node == NIL {
            return;
        }
        let Node { point, left, right } = self.nodes[node as usize];
        if point != query_id {
            let candidate = HeapEntry {
                dist: self.metric.eval(query, self.dataset.point(point)),
                id: point,
            };
            if heap.len() < k {
                heap.push(candidate);
            } else if candidate < *heap.peek().expect("heap is non-empty when full") {
                heap.pop();
                heap.push(candidate);
            }
        }
        let axis = depth % self.dataset.dim();
        let delta = query[axis] - self.coord(point, axis);
        let (near, far) = if delta <= 0.0 {
            (left, right)
        } else {
            (right, left)
        };
        self.visit(near, depth + 1, query_id, query, k, heap);
        // |delta| lower-bounds the distance to anything beyond the plane.
        let plane = delta.abs();
        if heap.len() < k || plane <= heap.peek().expect("heap is non-empty when full").dist {
            self.visit(far, depth + 1, query_id, query, k, heap);
        }
    }
}

/// Heap entry ordered by (distance, id); the heap keeps the worst
/// candidate on top.
#[derive(Clone, Copy, PartialEq)]
struct HeapEntry {
    dist: f64,
    id: PointId,
}

impl Eq for HeapEntry {}

impl Ord for HeapEntry {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.dist.total_cmp(&other.dist).then(self.id.cmp(&other.id))
    }
}

impl PartialOrd for HeapEntry {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}
