use nnhier::{Dataset, Metric};
use proptest::prelude::*;

/// Random datasets for differential tests: small, low-dimensional, and
/// frequently lattice-valued so that exact distance ties and duplicate
/// points show up often.
pub fn dataset(max_n: usize) -> impl Strategy<Value = Dataset> {
    (1..=max_n, 1usize..=4, any::<bool>()).prop_flat_map(|(n, d, lattice)| {
        let coord: BoxedStrategy<f64> = if lattice {
            (0i32..4).prop_map(f64::from).boxed()
        } else {
            (-100.0f64..100.0).boxed()
        };
        prop::collection::vec(prop::collection::vec(coord, d), n)
            .prop_map(|rows| Dataset::from_rows(&rows).expect("generated rows are rectangular"))
    })
}

pub fn metric() -> impl Strategy<Value = Metric> {
    prop_oneof![
        Just(Metric::Euclidean),
        Just(Metric::Manhattan),
        Just(Metric::Chebyshev),
    ]
}
