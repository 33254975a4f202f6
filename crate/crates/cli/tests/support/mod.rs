//! Shared fixture definitions for the integration and acceptance tests.

use std::ops::Range;
use std::path::{Path, PathBuf};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use nnhier::PointId;

pub fn golden_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

pub fn golden(name: &str) -> PathBuf {
    golden_dir().join(name)
}

pub fn read_golden(name: &str) -> String {
    let path = golden(name);
    std::fs::read_to_string(&path)
        .unwrap_or_else(|e| panic!("cannot read golden file {}: {e}", path.display()))
}

/// The worked four-point line: two tight pairs far apart.
pub const FOUR_POINTS: [[f64; 1]; 4] = [[0.0], [1.0], [10.0], [11.0]];

/// Three-Gaussian mixture with one low-weight mode close to a heavy
/// one. The small mode merges into its neighbor well before the whole
/// dataset connects, so the coarsest partition absorbs it; the natural
/// partition must keep it intact.
pub const THREE_GAUSSIAN_SEED: u64 = 1117;

/// (count, center x, center y, standard deviation) per mode.
pub const THREE_GAUSSIAN_MODES: [(usize, f64, f64, f64); 3] = [
    (40, 0.0, 0.0, 0.45),
    (8, 3.2, 0.0, 0.12),
    (40, 0.0, 8.0, 0.5),
];

/// Ids of the low-weight mode, by generation order.
pub const SMALL_MODE_IDS: Range<PointId> = 40..48;

pub fn three_gaussian_rows() -> Vec<[f64; 2]> {
    let mut rng = ChaCha8Rng::seed_from_u64(THREE_GAUSSIAN_SEED);
    let mut rows = Vec::new();
    for (count, cx, cy, sigma) in THREE_GAUSSIAN_MODES {
        for _ in 0..count {
            let dx: f64 = rng.sample(StandardNormal);
            let dy: f64 = rng.sample(StandardNormal);
            rows.push([cx + sigma * dx, cy + sigma * dy]);
        }
    }
    rows
}

pub fn rows_to_csv(rows: &[[f64; 2]]) -> String {
    let mut out = String::new();
    for row in rows {
        // Display for f64 is the shortest round-tripping decimal
        out.push_str(&format!("{},{}\n", row[0], row[1]));
    }
    out
}

pub fn csv_to_rows(text: &str) -> Vec<Vec<f64>> {
    text.lines()
        .filter(|line| !line.trim().is_empty())
        .map(|line| {
            line.split(',')
                .map(|field| field.trim().parse().expect("numeric fixture"))
                .collect()
        })
        .collect()
}
