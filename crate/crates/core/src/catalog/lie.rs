//! Root systems of the simple types in orthogonal coordinates, and the
//! grading functionals that color them.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::linalg;
use crate::rational::Rat;
use crate::roots::{ColoredRoot, RootSystem};
use crate::weight::{Basis, Weight};

fn unit2(basis: &Arc<Basis>, i: usize, a: i64, j: usize, b: i64) -> Weight {
    let mut x = vec![0i64; basis.rank()];
    x[i] += a;
    x[j] += b;
    Weight::from_ints(basis, &x)
}

/// Type A on the listed coordinates: `x_i − x_j`, `i ≠ j`.
pub fn type_a(basis: &Arc<Basis>, coords: &[usize]) -> Vec<Weight> {
    let mut out = Vec::new();
    for &i in coords {
        for &j in coords {
            if i != j {
                out.push(unit2(basis, i, 1, j, -1));
            }
        }
    }
    out
}

/// Type D on the listed coordinates: `±x_i ± x_j`, `i < j`.
pub fn type_d(basis: &Arc<Basis>, coords: &[usize]) -> Vec<Weight> {
    let mut out = Vec::new();
    for (p, &i) in coords.iter().enumerate() {
        for &j in &coords[p + 1..] {
            for (a, b) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                out.push(unit2(basis, i, a, j, b));
            }
        }
    }
    out
}

/// Type B: type D plus `±x_i`.
pub fn type_b(basis: &Arc<Basis>, coords: &[usize]) -> Vec<Weight> {
    let mut out = type_d(basis, coords);
    for &i in coords {
        out.push(Weight::unit(basis, i));
        out.push(-Weight::unit(basis, i));
    }
    out
}

/// Type C: type D plus `±2x_i`.
pub fn type_c(basis: &Arc<Basis>, coords: &[usize]) -> Vec<Weight> {
    let mut out = type_d(basis, coords);
    for &i in coords {
        out.push(Weight::unit(basis, i).scale(&Rat::int(2)));
        out.push(Weight::unit(basis, i).scale(&Rat::int(-2)));
    }
    out
}

/// All sign vectors of length `n`.
fn signs(n: usize) -> Vec<Vec<i64>> {
    (0..1u32 << n)
        .map(|m| (0..n).map(|i| if m >> i & 1 == 1 { -1 } else { 1 }).collect())
        .collect()
}

/// F4 in R^4: `±x_i ± x_j`, `±x_i`, `½(±1, ±1, ±1, ±1)`.
pub fn type_f4(basis: &Arc<Basis>) -> Vec<Weight> {
    let mut out = type_b(basis, &[0, 1, 2, 3]);
    for s in signs(4) {
        out.push(Weight::new(basis, s.iter().map(|&x| Rat::frac(x, 2)).collect()));
    }
    out
}

/// E6 in R^8 with the conventions of Bourbaki: `±x_i ± x_j` for
/// `i < j ≤ 5` and `±½(x_8 − x_7 − x_6 + Σ_{i≤5} ±x_i)` with an even number
/// of minus signs in the last sum.
pub fn type_e6(basis: &Arc<Basis>) -> Vec<Weight> {
    let mut out = type_d(basis, &[0, 1, 2, 3, 4]);
    for s in signs(5) {
        if s.iter().filter(|&&x| x < 0).count() % 2 == 0 {
            let mut c: Vec<Rat> = s.iter().map(|&x| Rat::frac(x, 2)).collect();
            c.extend([Rat::frac(-1, 2), Rat::frac(-1, 2), Rat::frac(1, 2)]);
            let w = Weight::new(basis, c);
            out.push(-&w);
            out.push(w);
        }
    }
    out
}

/// Bourbaki simple roots of E6 in R^8.
pub fn e6_simple(basis: &Arc<Basis>) -> Vec<Weight> {
    let h = |xs: [i64; 8]| Weight::new(basis, xs.iter().map(|&x| Rat::frac(x, 2)).collect());
    vec![
        h([1, -1, -1, -1, -1, -1, -1, 1]),
        h([2, 2, 0, 0, 0, 0, 0, 0]),
        h([-2, 2, 0, 0, 0, 0, 0, 0]),
        h([0, -2, 2, 0, 0, 0, 0, 0]),
        h([0, 0, -2, 2, 0, 0, 0, 0]),
        h([0, 0, 0, -2, 2, 0, 0, 0]),
    ]
}

/// E7 in R^8 with the conventions of Bourbaki: `±x_i ± x_j` for `i < j ≤ 6`,
/// `±(x_7 − x_8)` and `±½(x_7 − x_8 + Σ_{i≤6} ±x_i)` with an odd number of
/// minus signs in the last sum.
pub fn type_e7(basis: &Arc<Basis>) -> Vec<Weight> {
    let mut out = type_d(basis, &[0, 1, 2, 3, 4, 5]);
    let w = Weight::from_ints(basis, &[0, 0, 0, 0, 0, 0, 1, -1]);
    out.push(-&w);
    out.push(w);
    for s in signs(6) {
        if s.iter().filter(|&&x| x < 0).count() % 2 == 1 {
            let mut c: Vec<Rat> = s.iter().map(|&x| Rat::frac(x, 2)).collect();
            c.extend([Rat::frac(1, 2), Rat::frac(-1, 2)]);
            let w = Weight::new(basis, c);
            out.push(-&w);
            out.push(w);
        }
    }
    out
}

/// Bourbaki simple roots of E7 in R^8.
pub fn e7_simple(basis: &Arc<Basis>) -> Vec<Weight> {
    let h = |xs: [i64; 8]| Weight::new(basis, xs.iter().map(|&x| Rat::frac(x, 2)).collect());
    vec![
        h([1, -1, -1, -1, -1, -1, -1, 1]),
        h([2, 2, 0, 0, 0, 0, 0, 0]),
        h([-2, 2, 0, 0, 0, 0, 0, 0]),
        h([0, -2, 2, 0, 0, 0, 0, 0]),
        h([0, 0, -2, 2, 0, 0, 0, 0]),
        h([0, 0, 0, -2, 2, 0, 0, 0]),
        h([0, 0, 0, 0, -2, 2, 0, 0]),
    ]
}

/// The vector `v` in the span of `simple` with `(v, α_i) = values[i]`.
pub fn dual_vector(basis: &Arc<Basis>, simple: &[Weight], values: &[Rat]) -> Result<Weight> {
    // Write v = Σ c_j α_j and solve the Gram system.
    let n = simple.len();
    let gram: Vec<Vec<Rat>> = (0..n)
        .map(|j| (0..n).map(|i| simple[i].inner(&simple[j])).collect())
        .collect();
    let c = linalg::solve_combination(&gram, values)
        .ok_or_else(|| Error::Consistency("simple roots are dependent".into()))?;
    Ok(simple
        .iter()
        .zip(&c)
        .fold(Weight::zero(basis), |acc, (a, x)| &acc + &a.scale(x)))
}

/// Parity of an integer pairing; errors on a non-integer pairing.
pub fn is_even(alpha: &Weight, v: &Weight) -> Result<bool> {
    let p = alpha.inner(v);
    if !p.is_integer() {
        return Err(Error::Consistency(format!(
            "grading vector {v} pairs non-integrally with {alpha}"
        )));
    }
    Ok(p.numer() % 2 == 0.into())
}

/// Colors `roots` as compact exactly when the pairing with `v_theta` is even.
pub fn colored(name: &str, basis: &Arc<Basis>, roots: Vec<Weight>, v_theta: &Weight) -> Result<RootSystem> {
    let rs = roots
        .into_iter()
        .map(|a| Ok(ColoredRoot::new(a.clone(), is_even(&a, v_theta)?)))
        .collect::<Result<Vec<_>>>()?;
    RootSystem::new(name, basis, rs)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn root_counts() {
        let b = Basis::new(4, 0, "r4");
        assert_eq!(type_a(&b, &[0, 1, 2, 3]).len(), 12);
        assert_eq!(type_b(&b, &[0, 1, 2, 3]).len(), 32);
        assert_eq!(type_c(&b, &[0, 1, 2, 3]).len(), 32);
        assert_eq!(type_d(&b, &[0, 1, 2, 3]).len(), 24);
        assert_eq!(type_f4(&b).len(), 48);
        let b8 = Basis::new(8, 0, "r8");
        assert_eq!(type_e6(&b8).len(), 72);
        assert_eq!(type_e7(&b8).len(), 126);
    }

    #[test]
    fn exceptional_systems_are_closed_and_contain_their_simple_roots() {
        let b8 = Basis::new(8, 0, "r8");
        let e6 = RootSystem::compact("e6", &b8, type_e6(&b8)).unwrap();
        assert!(e6_simple(&b8).iter().all(|a| e6.contains(a)));
        let e7 = RootSystem::compact("e7", &b8, type_e7(&b8)).unwrap();
        assert!(e7_simple(&b8).iter().all(|a| e7.contains(a)));
        let b4 = Basis::new(4, 0, "r4");
        RootSystem::compact("f4", &b4, type_f4(&b4)).unwrap();
    }

    #[test]
    fn dual_vector_pairs_as_requested() {
        let b8 = Basis::new(8, 0, "r8");
        let s = e6_simple(&b8);
        let mut vals = vec![Rat::zero(); 6];
        vals[1] = Rat::one();
        let v = dual_vector(&b8, &s, &vals).unwrap();
        for (i, a) in s.iter().enumerate() {
            assert_eq!(a.inner(&v), vals[i]);
        }
    }
}
