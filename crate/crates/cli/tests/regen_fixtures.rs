//! Regenerates the golden files under tests/golden from the oracle
//! path. Run on demand:
//!
//!     cargo test -p nnhier-cli --test regen_fixtures -- --ignored
//!
//! The committed goldens are what every other test compares the main
//! path against; this target is the only place they come from.

mod support;

use std::collections::BTreeSet;

use nnhier::oracle::oracle_hierarchy;
use nnhier::{natural_partition, Dataset, Metric, PointId, Provenance};
use nnhier_cli::export;

#[test]
#[ignore = "writes the golden files; run explicitly"]
fn regenerate_golden_fixtures() {
    std::fs::create_dir_all(support::golden_dir()).unwrap();

    // worked four-point example: input CSV plus full JSON document
    let four_csv = "0\n1\n10\n11\n";
    std::fs::write(support::golden("four_points.csv"), four_csv).unwrap();
    let dataset = Dataset::from_rows(&support::FOUR_POINTS).unwrap();
    let hierarchy = oracle_hierarchy(&dataset, &Metric::Euclidean).unwrap();
    assert_eq!(hierarchy.k_star(), 2);
    let partition = natural_partition(&hierarchy).unwrap();
    let doc = export::hierarchy_doc(
        &hierarchy,
        Some(export::partition_doc(&partition, "natural")),
    );
    std::fs::write(support::golden("four_points.json"), export::to_json(&doc)).unwrap();

    // three-Gaussian over-combination fixture: dataset CSV plus the
    // expected natural partition
    let rows = support::three_gaussian_rows();
    std::fs::write(
        support::golden("three_gaussian.csv"),
        support::rows_to_csv(&rows),
    )
    .unwrap();
    let dataset = Dataset::from_rows(&rows).unwrap();
    let hierarchy = oracle_hierarchy(&dataset, &Metric::Euclidean).unwrap();
    let partition = natural_partition(&hierarchy).unwrap();

    // the fixture is only useful if it exhibits the shape it exists
    // for: the small mode is one bona fide output cluster, while the
    // coarsest level has already merged it into its heavy neighbor
    let small: BTreeSet<PointId> = support::SMALL_MODE_IDS.collect();
    let small_cluster = partition
        .clusters()
        .iter()
        .find(|c| c.members().iter().copied().collect::<BTreeSet<_>>() == small)
        .expect("small mode survives as its own cluster");
    assert_eq!(
        small_cluster.provenance(),
        Provenance::BonaFide {
            k: small.len() - 1
        }
    );
    let coarse = hierarchy.level(hierarchy.k_star() - 1);
    let coarse_of_small = coarse.cluster_of(support::SMALL_MODE_IDS.start);
    let coarse_cluster_size = coarse
        .clusters()
        .iter()
        .find(|c| c[0] == coarse_of_small)
        .unwrap()
        .len();
    assert!(
        coarse_cluster_size > small.len(),
        "coarsest level should over-combine the small mode (got a cluster of {coarse_cluster_size})"
    );

    let partition_json = serde_json::to_string_pretty(&export::partition_doc(
        &partition, "natural",
    ))
    .unwrap()
        + "\n";
    std::fs::write(support::golden("three_gaussian_partition.json"), partition_json).unwrap();

    println!(
        "three-gaussian fixture: n = {}, k* = {}, coarse clusters = {}, natural clusters = {}",
        dataset.len(),
        hierarchy.k_star(),
        coarse.cluster_count(),
        partition.clusters().len()
    );
}
