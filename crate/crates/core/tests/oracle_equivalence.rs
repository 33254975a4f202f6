//! Differential tests against the brute-force oracle and between the
//! two k-NN backends.

mod common;

use std::collections::BTreeSet;

use nnhier::oracle::{oracle_components, oracle_hierarchy};
use nnhier::{
    all_knn, build_hierarchy, build_index, components_at_k, extend_neighbors, find_kstar,
    merge_level, query_knn, KnnBackend, Level, PointId,
};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// The central equivalence: union-find components equal BFS
    /// components of the explicitly symmetrized k-NN graph, for every
    /// k up to k*, on both backends.
    #[test]
    fn components_match_oracle_for_every_k(
        ds in common::dataset(48),
        metric in common::metric(),
        backend in prop_oneof![Just(KnnBackend::Brute), Just(KnnBackend::KdTree)],
    ) {
        let reference = oracle_hierarchy(&ds, &metric).unwrap();
        let index = build_index(&ds, &metric, backend).unwrap();
        let table = all_knn(&index, ds.len() - 1).unwrap();
        for k in 0..=reference.k_star() {
            let direct = components_at_k(&table, k).unwrap();
            let oracle = oracle_components(&ds, &metric, k).unwrap();
            prop_assert_eq!(&direct, &oracle, "components differ at k = {}", k);
        }
        let built = build_hierarchy(&ds, &metric, backend).unwrap();
        prop_assert_eq!(find_kstar(&built), reference.k_star());
        prop_assert_eq!(&built, &reference);
    }

    /// Bottom-up incremental merging gives the same level as direct
    /// per-k computation, for every k.
    #[test]
    fn merge_chain_equals_direct(
        ds in common::dataset(50),
        metric in common::metric(),
    ) {
        let index = build_index(&ds, &metric, KnnBackend::Brute).unwrap();
        let table = all_knn(&index, ds.len() - 1).unwrap();
        let mut chain: Vec<Level> = Vec::new();
        for k in 0..ds.len() {
            let direct = components_at_k(&table, k).unwrap();
            let level = if k == 0 {
                direct.clone()
            } else {
                merge_level(&chain[k - 1], &table, k).unwrap()
            };
            prop_assert_eq!(&level, &direct, "merge chain diverges at k = {}", k);
            chain.push(level);
        }
    }

    /// Brute and kd-tree answer every query identically, entry for
    /// entry, distances included.
    #[test]
    fn backend_tables_identical(
        ds in common::dataset(64),
        metric in common::metric(),
        depth_seed in any::<u32>(),
    ) {
        let brute = build_index(&ds, &metric, KnnBackend::Brute).unwrap();
        let kdtree = build_index(&ds, &metric, KnnBackend::KdTree).unwrap();
        let max = ds.len() - 1;
        let depth = if max == 0 { 0 } else { depth_seed as usize % (max + 1) };
        prop_assert_eq!(
            all_knn(&brute, depth).unwrap(),
            all_knn(&kdtree, depth).unwrap()
        );
        prop_assert_eq!(all_knn(&brute, max).unwrap(), all_knn(&kdtree, max).unwrap());
    }

    /// Neighborhoods grow monotonically with k: each point's k-NN id
    /// set is contained in its (k+1)-NN id set.
    #[test]
    fn neighborhood_chain_is_monotone(
        ds in common::dataset(32),
        metric in common::metric(),
    ) {
        let index = build_index(&ds, &metric, KnnBackend::KdTree).unwrap();
        for id in 0..ds.len() as PointId {
            let mut previous = BTreeSet::new();
            for k in 0..ds.len() {
                let ids: BTreeSet<PointId> =
                    query_knn(&index, id, k).unwrap().iter().map(|n| n.id).collect();
                prop_assert_eq!(ids.len(), k);
                prop_assert!(previous.is_subset(&ids));
                previous = ids;
            }
        }
    }

    /// Deepening a table changes no existing prefix and equals a fresh
    /// computation at the deeper depth.
    #[test]
    fn extend_is_prefix_stable(
        ds in common::dataset(40),
        metric in common::metric(),
        backend in prop_oneof![Just(KnnBackend::Brute), Just(KnnBackend::KdTree)],
        split in any::<(u32, u32)>(),
    ) {
        let max = ds.len() - 1;
        prop_assume!(max >= 1);
        let shallow_depth = split.0 as usize % max; // 0..max-1
        let deep_depth = shallow_depth + 1 + split.1 as usize % (max - shallow_depth);
        let index = build_index(&ds, &metric, backend).unwrap();
        let shallow = all_knn(&index, shallow_depth).unwrap();
        let deepened = extend_neighbors(&index, &shallow, deep_depth).unwrap();
        prop_assert_eq!(&deepened, &all_knn(&index, deep_depth).unwrap());
        for id in 0..ds.len() as PointId {
            prop_assert_eq!(
                &deepened.neighbors(id)[..shallow_depth],
                shallow.neighbors(id)
            );
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    /// Metric axioms on random triples: symmetry is exact, the triangle
    /// inequality gets a hair of relative slack for floating point.
    #[test]
    fn metric_axioms_hold(
        metric in common::metric(),
        dim in 1usize..=5,
        raw in prop::collection::vec(-1000.0f64..1000.0, 15),
    ) {
        let a = &raw[..dim];
        let b = &raw[5..5 + dim];
        let c = &raw[10..10 + dim];
        let ab = metric.distance(a, b).unwrap();
        let ba = metric.distance(b, a).unwrap();
        prop_assert_eq!(ab, ba);
        prop_assert_eq!(metric.distance(a, a).unwrap(), 0.0);
        let ac = metric.distance(a, c).unwrap();
        let cb = metric.distance(c, b).unwrap();
        prop_assert!(ab <= (ac + cb) * (1.0 + 1e-12));
    }
}
