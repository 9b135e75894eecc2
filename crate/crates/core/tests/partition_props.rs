//! Partition counts and Heaviside distributions against exhaustive
//! enumeration, plus the algebra of truncated distributions.

mod common;

use common::partitions::*;
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn kostant_matches_exhaustive_enumeration(gs in gens_strategy(), t in prop::array::uniform3(-4i64..=6)) {
        kostant_matches_exhaustive(&gs, t)?;
    }

    #[test]
    fn heaviside_matches_exhaustive_enumeration(gs in gens_strategy(), bound in 0i64..=20) {
        heaviside_matches_exhaustive(&gs, bound)?;
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn partition_count_ignores_generator_order(gs in gens_strategy(), t in prop::array::uniform3(-3i64..=5), seed in any::<u64>()) {
        order_independent(&gs, t, seed)?;
    }

    #[test]
    fn convolution_is_commutative_and_associative(a in points_strategy(), b in points_strategy(), gs in gens_strategy(), bound in 0i64..=15) {
        convolution_laws(&a, &b, &gs, bound)?;
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn enlarging_the_window_refines(gs in gens_strategy(), small in 0i64..=10, extra in 0i64..=10, shift in prop::array::uniform3(-2i64..=2)) {
        window_refines(&gs, small, extra, shift)?;
    }
}
