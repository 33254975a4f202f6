use std::sync::OnceLock;

use crate::dataset::{Dataset, DistanceMatrix, Metric, PointId};
use crate::knn::Neighbor;

/// Brute-force backend: full distance-matrix rows, fully sorted.
///
/// Rows are computed and sorted once, on first query, then shared by
/// every later query and deepening step. Works with any `Metric`.
#[derive(Debug)]
pub struct BruteIndex<'a> {
    dataset: &'a Dataset,
    metric: Metric,
    rows: OnceLock<Vec<Vec<Neighbor>>>,
}

impl<'a> BruteIndex<'a> {
    pub(crate) fn new(dataset: &'a Dataset, metric: Metric) -> BruteIndex<'a> {
        BruteIndex {
            dataset,
            metric,
            rows: OnceLock::new(),
        }
    }

    pub(crate) fn dataset(&self) -> &'a Dataset {
        self.dataset
    }

    fn rows(&self) -> &[Vec<Neighbor>] {
        self.rows.get_or_init(|| {
            let n = self.dataset.len();
            let matrix = DistanceMatrix::compute(self.dataset, &self.metric);
            (0..n)
                .map(|i| {
                    let mut row: Vec<Neighbor> = (0..n)
                        .filter(|&j| j != i)
                        .map(|j| Neighbor {
                            id: j as PointId,
                            dist: matrix.get(i, j),
                        })
                        .collect();
                    row.sort_unstable_by(Neighbor::cmp_by_dist_then_id);
                    row
                })
                .collect()
        })
    }

    /// First `k` entries of the point's sorted row. `k` is validated by
    /// the caller.
    pub(crate) fn query(&self, point_id: PointId, k: usize) -> Vec<Neighbor> {
        self.rows()[point_id as usize][..k].to_vec()
    }
}
