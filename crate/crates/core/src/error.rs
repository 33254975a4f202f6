use crate::dataset::PointId;

/// A type alias for `Result<T, Error>`.
pub type Result<T> = std::result::Result<T, Error>;

/// Errors reported by dataset validation, neighbor queries and the
/// clustering operations built on them.
#[derive(Clone, Debug, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("dataset is empty")]
    EmptyDataset,
    #[error("point {row} has zero dimensions")]
    ZeroDimension { row: usize },
    #[error("point {row} has {got} coordinates, expected {expected}")]
    RaggedRow {
        row: usize,
        expected: usize,
        got: usize,
    },
    #[error("non-finite coordinate at point {row}, component {col}")]
    NonFiniteCoordinate { row: usize, col: usize },
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("unknown metric '{0}', expected euclidean, manhattan or chebyshev")]
    UnknownMetric(String),
    #[error("unknown backend '{0}', expected brute or kdtree")]
    UnknownBackend(String),
    #[error("the kd-tree backend requires a metric with a per-axis pruning bound")]
    UnsupportedBackend,
    #[error("point id {id} out of range for a dataset of {n} points")]
    PointOutOfRange { id: PointId, n: usize },
    #[error("k = {k} out of range, at most {max} neighbors exist")]
    KOutOfRange { k: usize, max: usize },
    #[error("neighbor table of depth {depth} is too shallow for k = {k}")]
    TableTooShallow { depth: usize, k: usize },
    #[error("new depth {new_depth} does not deepen a table of depth {depth}")]
    DepthNotDeepened { depth: usize, new_depth: usize },
    #[error("previous level has k = {prev_k}, cannot merge to k = {k}")]
    MismatchedLevel { prev_k: usize, k: usize },
    #[error("invalid level: {0}")]
    InvalidLevel(String),
    #[error("invalid hierarchy: {0}")]
    InvalidHierarchy(String),
    #[error("operation requires at least {required} points, dataset has {n}")]
    DegenerateInput { required: usize, n: usize },
}
