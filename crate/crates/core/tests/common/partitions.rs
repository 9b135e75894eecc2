//! Strategies and checks for partition counts and distributions, shared by
//! the property tests and the acceptance run.

use std::sync::Arc;

use branchkit::distribution::{heaviside, TruncationWindow, WeightDistribution};
use branchkit::oracle::enumerate_partitions;
use branchkit::partition::{kostant_partition, kostant_partition_with, WeightMultiset};
use branchkit::{Basis, Rat, Weight};
use proptest::prelude::*;
use proptest::test_runner::TestCaseError;

pub const XI: [i64; 3] = [7, 3, 1];

pub fn basis() -> Arc<Basis> {
    Basis::new(3, 0, "r3")
}

/// Generators with positive `XI`-height, signs flipped as needed.
pub fn gens_strategy() -> impl Strategy<Value = Vec<[i64; 3]>> {
    prop::collection::vec(prop::array::uniform3(-2i64..=2), 1..=6).prop_map(|vs| {
        vs.into_iter()
            .filter_map(|v| {
                let h: i64 = v.iter().zip(XI).map(|(a, b)| a * b).sum();
                match h.signum() {
                    1 => Some(v),
                    -1 => Some([-v[0], -v[1], -v[2]]),
                    _ => None,
                }
            })
            .collect()
    })
}

pub fn weights(vs: &[[i64; 3]]) -> Vec<Weight> {
    let b = basis();
    vs.iter().map(|v| Weight::from_ints(&b, v)).collect()
}

pub fn xi() -> Weight {
    Weight::from_ints(&basis(), &XI)
}

pub fn points_strategy() -> impl Strategy<Value = Vec<([i64; 3], i128)>> {
    prop::collection::vec((prop::array::uniform3(-3i64..=3), -3i128..=3), 1..=5)
}

pub fn dist(points: &[([i64; 3], i128)]) -> WeightDistribution {
    let b = basis();
    let pts: Vec<(Weight, i128)> = points.iter().map(|(v, c)| (Weight::from_ints(&b, v), *c)).collect();
    WeightDistribution::from_points(&pts, &xi()).unwrap()
}


pub type Check = Result<(), TestCaseError>;

pub fn kostant_matches_exhaustive(gs: &[[i64; 3]], t: [i64; 3]) -> Check {
    prop_assume!(!gs.is_empty());
    let ws = weights(gs);
    let target = Weight::from_ints(&basis(), &t);
    let set = WeightMultiset::from_weights(ws.iter().cloned());
    let fast = kostant_partition_with(&set, &target, &xi()).unwrap();
    let slow = enumerate_partitions(&ws, &target, false, &xi()).unwrap();
    prop_assert_eq!(fast, u128::from(slow));
    // Without a given functional the count is the same.
    prop_assert_eq!(kostant_partition(&set, &target).unwrap(), fast);
    Ok(())
}

pub fn heaviside_matches_exhaustive(gs: &[[i64; 3]], bound: i64) -> Check {
    prop_assume!(!gs.is_empty());
    let ws = weights(gs);
    let set = WeightMultiset::from_weights(ws.iter().cloned());
    let y = heaviside(&set, &TruncationWindow::new(xi(), Rat::int(bound))).unwrap();
    for (mu, c) in y.entries() {
        prop_assert!(xi().inner(&mu) <= Rat::int(bound));
        let slow = enumerate_partitions(&ws, &mu, true, &xi()).unwrap();
        prop_assert_eq!(c, i128::from(slow));
    }
    // Every shifted partition inside the window is stored.
    let total: i128 = y.entries().iter().map(|(_, c)| c).sum();
    let hs = set.half_sum(&basis());
    let mut expected = 0i128;
    let mut stack = vec![(hs, 0usize)];
    while let Some((p, i)) = stack.pop() {
        if i == ws.len() {
            expected += 1;
            continue;
        }
        let mut q = p;
        while xi().inner(&q) <= Rat::int(bound) {
            stack.push((q.clone(), i + 1));
            q = &q + &ws[i];
        }
    }
    prop_assert_eq!(total, expected);
    Ok(())
}

pub fn order_independent(gs: &[[i64; 3]], t: [i64; 3], seed: u64) -> Check {
    prop_assume!(!gs.is_empty());
    let mut perm = gs.to_vec();
    let n = perm.len();
    for i in (1..n).rev() {
        perm.swap(i, (seed as usize).wrapping_mul(31).wrapping_add(i * 17) % (i + 1));
    }
    let target = Weight::from_ints(&basis(), &t);
    let a = enumerate_partitions(&weights(gs), &target, false, &xi()).unwrap();
    let b = kostant_partition_with(&WeightMultiset::from_weights(weights(&perm)), &target, &xi()).unwrap();
    prop_assert_eq!(u128::from(a), b);
    Ok(())
}

pub fn convolution_laws(a: &[([i64; 3], i128)], b: &[([i64; 3], i128)], gs: &[[i64; 3]], bound: i64) -> Check {
    prop_assume!(!gs.is_empty());
    let (x, y) = (dist(a), dist(b));
    let z = heaviside(&WeightMultiset::from_weights(weights(gs)), &TruncationWindow::new(xi(), Rat::int(bound))).unwrap();
    let xy = x.convolve(&y).unwrap();
    let yx = y.convolve(&x).unwrap();
    prop_assert_eq!(xy.entries(), yx.entries());
    let left = match xy.convolve(&z) {
        Ok(d) => d,
        Err(_) => return Ok(()),
    };
    let right = x.convolve(&y.convolve(&z).unwrap()).unwrap();
    prop_assert_eq!(left.bound(), right.bound());
    prop_assert_eq!(left.entries(), right.entries());
    let zx = z.convolve(&x).unwrap();
    let xz = x.convolve(&z).unwrap();
    prop_assert_eq!(zx.entries(), xz.entries());
    Ok(())
}

pub fn window_refines(gs: &[[i64; 3]], small: i64, extra: i64, shift: [i64; 3]) -> Check {
    prop_assume!(!gs.is_empty());
    let set = WeightMultiset::from_weights(weights(gs));
    let lo = heaviside(&set, &TruncationWindow::new(xi(), Rat::int(small))).unwrap();
    let hi = heaviside(&set, &TruncationWindow::new(xi(), Rat::int(small + extra))).unwrap();
    let inside: Vec<(Weight, i128)> = hi
        .entries()
        .into_iter()
        .filter(|(w, _)| xi().inner(w) <= Rat::int(small))
        .collect();
    prop_assert_eq!(lo.entries(), inside);
    prop_assert_eq!(hi.truncate(&Rat::int(small)).entries(), lo.entries());
    // Translation moves the exact region along.
    let v = Weight::from_ints(&basis(), &shift);
    let t = lo.translate(&v).unwrap();
    prop_assert_eq!(t.bound().cloned(), Some(&Rat::int(small) + &xi().inner(&v)));
    for (w, c) in lo.entries() {
        prop_assert_eq!(t.coefficient(&(&w + &v)), c);
    }
    Ok(())
}
