//! Brute-force reference implementation used by the test suites.
//!
//! Deliberately simple and quadratic, and deliberately independent: no
//! union-find, no spatial index, no sorting helpers shared with the
//! main path. The only code reused from the rest of the crate is the
//! dataset/metric layer and the plain data types the results are
//! reported in. If this module and the main path disagree, the bug
//! hunt starts here — whichever is wrong, the disagreement is real.

use std::collections::VecDeque;

use crate::dataset::{Dataset, DistanceMatrix, Metric, PointId};
use crate::error::{Error, Result};
use crate::graph::Level;
use crate::hierarchy::Hierarchy;

/// Clusters at depth `k`, by explicit construction: full distance
/// matrix, per-row neighbor ranking, a symmetrized edge list, and
/// breadth-first search over it.
pub fn oracle_components(dataset: &Dataset, metric: &Metric, k: usize) -> Result<Level> {
    let n = dataset.len();
    if k > n - 1 {
        return Err(Error::KOutOfRange { k, max: n - 1 });
    }
    let matrix = DistanceMatrix::compute(dataset, metric);

    // undirected adjacency: {x, y} iff y is among x's k nearest or vice versa
    let mut adjacency: Vec<Vec<usize>> = vec![Vec::new(); n];
    for i in 0..n {
        let mut others: Vec<usize> = (0..n).filter(|&j| j != i).collect();
        others.sort_by(|&a, &b| {
            matrix
                .get(i, a)
                .total_cmp(&matrix.get(i, b))
                .then(a.cmp(&b))
        });
        for &j in &others[..k] {
            adjacency[i].push(j);
            adjacency[j].push(i);
        }
    }

    let mut visited = vec![false; n];
    let mut clusters: Vec<Vec<PointId>> = Vec::new();
    for start in 0..n {
        if visited[start] {
            continue;
        }
        let mut component = Vec::new();
        let mut queue = VecDeque::from([start]);
        visited[start] = true;
        while let Some(x) = queue.pop_front() {
            component.push(x as PointId);
            for &y in &adjacency[x] {
                if !visited[y] {
                    visited[y] = true;
                    queue.push_back(y);
                }
            }
        }
        clusters.push(component);
    }
    Level::from_clusters(k, clusters)
}

/// The hierarchy by direct per-k computation: k = 0, 1, 2, … until the
/// first connected level.
pub fn oracle_hierarchy(dataset: &Dataset, metric: &Metric) -> Result<Hierarchy> {
    let mut levels = Vec::new();
    for k in 0.. {
        let level = oracle_components(dataset, metric, k)?;
        let connected = level.cluster_count() == 1;
        levels.push(level);
        if connected {
            break;
        }
    }
    Hierarchy::from_levels(levels)
}
