//! Datasets, metrics and the full pairwise distance matrix.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::error::{Error, Result};

/// The index of a point in its dataset.
///
/// Ids are positional and stable: id `i` always refers to the `i`-th
/// ingested row.
pub type PointId = u32;

/// An immutable set of `n` points in `d`-dimensional real space, stored
/// row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct Dataset {
    coords: Vec<f64>,
    dim: usize,
    len: usize,
}

impl Dataset {
    /// Validates raw rows and builds a dataset.
    ///
    /// Rejects empty input, ragged rows and non-finite coordinates. Row
    /// order is preserved, so ids match input positions.
    pub fn from_rows<R: AsRef<[f64]>>(rows: &[R]) -> Result<Dataset> {
        if rows.is_empty() {
            return Err(Error::EmptyDataset);
        }
        let dim = rows[0].as_ref().len();
        if dim == 0 {
            return Err(Error::ZeroDimension { row: 0 });
        }
        let mut coords = Vec::with_capacity(rows.len() * dim);
        for (row, r) in rows.iter().enumerate() {
            let r = r.as_ref();
            if r.len() != dim {
                return Err(Error::RaggedRow {
                    row,
                    expected: dim,
                    got: r.len(),
                });
            }
            for (col, &v) in r.iter().enumerate() {
                if !v.is_finite() {
                    return Err(Error::NonFiniteCoordinate { row, col });
                }
            }
            coords.extend_from_slice(r);
        }
        Ok(Dataset {
            coords,
            dim,
            len: rows.len(),
        })
    }

    /// Number of points. Always at least 1.
    pub fn len(&self) -> usize {
        self.len
    }

    /// Always false; an empty dataset cannot be constructed.
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Dimension of every point. Always at least 1.
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Coordinates of the point with the given id.
    pub fn point(&self, id: PointId) -> &[f64] {
        let start = id as usize * self.dim;
        &self.coords[start..start + self.dim]
    }
}

/// The type of user-supplied distance functions.
pub type CustomMetricFn = dyn Fn(&[f64], &[f64]) -> f64 + Send + Sync;

/// A distance function on points.
///
/// The three shipped kinds satisfy the metric axioms (identity of
/// indiscernibles, symmetry, triangle inequality). `Custom` accepts any
/// function; callers are trusted to supply one that satisfies them.
#[derive(Clone)]
pub enum Metric {
    /// Square root of the sum of squared coordinate differences.
    Euclidean,
    /// Sum of absolute coordinate differences.
    Manhattan,
    /// Maximum absolute coordinate difference.
    Chebyshev,
    /// User-supplied distance. Brute-force queries only: a generic
    /// function carries no per-axis pruning bound, so the kd-tree
    /// backend rejects it.
    Custom(Arc<CustomMetricFn>),
}

impl Metric {
    /// Wraps a user-supplied distance function.
    pub fn custom<F>(f: F) -> Metric
    where
        F: Fn(&[f64], &[f64]) -> f64 + Send + Sync + 'static,
    {
        Metric::Custom(Arc::new(f))
    }

    /// Distance between two points of equal dimension.
    pub fn distance(&self, a: &[f64], b: &[f64]) -> Result<f64> {
        if a.len() != b.len() {
            return Err(Error::DimensionMismatch {
                left: a.len(),
                right: b.len(),
            });
        }
        Ok(self.eval(a, b))
    }

    /// Distance without the dimension check, for points of one dataset.
    ///
    /// Coordinates are consumed in index order in every kind, so
    /// evaluation is deterministic and bit-symmetric: `eval(a, b)`
    /// equals `eval(b, a)` exactly.
    pub(crate) fn eval(&self, a: &[f64], b: &[f64]) -> f64 {
        debug_assert_eq!(a.len(), b.len());
        match self {
            Metric::Euclidean => a
                .iter()
                .zip(b)
                .map(|(x, y)| (x - y) * (x - y))
                .sum::<f64>()
                .sqrt(),
            Metric::Manhattan => a.iter().zip(b).map(|(x, y)| (x - y).abs()).sum(),
            Metric::Chebyshev => a
                .iter()
                .zip(b)
                .map(|(x, y)| (x - y).abs())
                .fold(0.0, f64::max),
            Metric::Custom(f) => f(a, b),
        }
    }

    /// True when `|a[axis] - b[axis]|` never exceeds `distance(a, b)`.
    ///
    /// This is the bound the kd-tree uses to prune subtrees; it holds
    /// for every coordinate-wise metric shipped here.
    pub fn has_axis_lower_bound(&self) -> bool {
        !matches!(self, Metric::Custom(_))
    }
}

impl fmt::Debug for Metric {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Metric::Euclidean => f.write_str("Euclidean"),
            Metric::Manhattan => f.write_str("Manhattan"),
            Metric::Chebyshev => f.write_str("Chebyshev"),
            Metric::Custom(_) => f.write_str("Custom(..)"),
        }
    }
}

impl FromStr for Metric {
    type Err = Error;

    fn from_str(s: &str) -> Result<Metric> {
        match s {
            "euclidean" => Ok(Metric::Euclidean),
            "manhattan" => Ok(Metric::Manhattan),
            "chebyshev" => Ok(Metric::Chebyshev),
            _ => Err(Error::UnknownMetric(s.to_string())),
        }
    }
}

/// The full `n x n` matrix of pairwise distances.
#[derive(Clone, Debug, PartialEq)]
pub struct DistanceMatrix {
    n: usize,
    values: Vec<f64>,
}

impl DistanceMatrix {
    /// Computes every pairwise distance.
    ///
    /// Each unordered pair is evaluated once and mirrored, so the result
    /// is symmetric with a zero diagonal by construction.
    pub fn compute(dataset: &Dataset, metric: &Metric) -> DistanceMatrix {
        let n = dataset.len();
        let mut values = vec![0.0; n * n];
        for i in 0..n {
            for j in (i + 1)..n {
                let d = metric.eval(dataset.point(i as PointId), dataset.point(j as PointId));
                values[i * n + j] = d;
                values[j * n + i] = d;
            }
        }
        DistanceMatrix { n, values }
    }

    /// Number of points.
    pub fn n(&self) -> usize {
        self.n
    }

    /// The distance between points `i` and `j`.
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.values[i * self.n + j]
    }
}
