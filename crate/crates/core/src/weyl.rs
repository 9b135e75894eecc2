//! Finite reflection groups generated by root reflections.
//!
//! Elements are stored as integer matrices over a common denominator `D`, so
//! composition and action are exact without rational arithmetic in the inner
//! loops. Enumeration is breadth-first over words in the generators, which
//! gives a deterministic length-lexicographic order and the sign
//! `ε(w) = (-1)^length(w)` for free.

use std::collections::HashMap;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::rational::{lcm_denominators, Rat};
use crate::weight::{Basis, Weight};

/// Default upper bound on the order of any enumerated Weyl group.
pub const DEFAULT_CEILING: usize = 1_000_000;

/// One group element: the matrix `num / D`, its sign, and a reduced word.
#[derive(Clone, Debug)]
pub struct WeylElement {
    num: Vec<i64>,
    sign: i8,
    word: Vec<u16>,
}

impl WeylElement {
    /// `ε(w)`.
    pub fn sign(&self) -> i8 {
        self.sign
    }

    /// A reduced word in the generator indices.
    pub fn word(&self) -> &[u16] {
        &self.word
    }

    /// Length of the element.
    pub fn length(&self) -> usize {
        self.word.len()
    }
}

/// A finite group generated by reflections in a list of roots.
#[derive(Debug)]
pub struct WeylGroup {
    name: String,
    basis: Arc<Basis>,
    den: i64,
    generators: Vec<Weight>,
    elements: Vec<WeylElement>,
}

impl WeylGroup {
    /// Enumerates the group generated by reflections in `roots`, failing if
    /// the order exceeds `ceiling`.
    pub fn generate(name: &str, basis: &Arc<Basis>, roots: &[Weight], ceiling: usize) -> Result<Arc<WeylGroup>> {
        let n = basis.rank();
        let mats: Vec<Vec<Rat>> = roots.iter().map(|a| reflection_matrix(a)).collect();
        let den_big = lcm_denominators(mats.iter().flatten());
        let den = den_big
            .to_i64()
            .ok_or_else(|| Error::Consistency("reflection denominator too large".into()))?;
        let gens: Vec<Vec<i64>> = mats
            .iter()
            .map(|m| m.iter().map(|x| x.scaled_i64(den).expect("integral by construction")).collect())
            .collect();
        let mut identity = vec![0i64; n * n];
        for i in 0..n {
            identity[i * n + i] = den;
        }
        let mut seen: HashMap<Vec<i64>, ()> = HashMap::new();
        seen.insert(identity.clone(), ());
        let mut elements = vec![WeylElement {
            num: identity,
            sign: 1,
            word: Vec::new(),
        }];
        let mut frontier = 0..1;
        while !frontier.is_empty() {
            let start = elements.len();
            for idx in frontier.clone() {
                for (g, gm) in gens.iter().enumerate() {
                    let prod = mat_mul(&elements[idx].num, gm, n, den)?;
                    if seen.contains_key(&prod) {
                        continue;
                    }
                    seen.insert(prod.clone(), ());
                    let mut word = elements[idx].word.clone();
                    word.push(g as u16);
                    elements.push(WeylElement {
                        num: prod,
                        sign: -elements[idx].sign,
                        word,
                    });
                    if elements.len() > ceiling {
                        return Err(Error::WeylCeiling {
                            order: elements.len(),
                            ceiling,
                        });
                    }
                }
            }
            frontier = start..elements.len();
        }
        Ok(Arc::new(WeylGroup {
            name: name.to_string(),
            basis: basis.clone(),
            den,
            generators: roots.to_vec(),
            elements,
        }))
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn basis(&self) -> &Arc<Basis> {
        &self.basis
    }

    /// The generating roots.
    pub fn generators(&self) -> &[Weight] {
        &self.generators
    }

    /// Group order.
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// Elements in length-lexicographic order, identity first.
    pub fn elements(&self) -> &[WeylElement] {
        &self.elements
    }

    /// Matrix denominator.
    pub fn denominator(&self) -> i64 {
        self.den
    }

    /// Exact action on a weight.
    pub fn apply(&self, w: &WeylElement, x: &Weight) -> Weight {
        let n = self.basis.rank();
        let d = Rat::int(self.den);
        let coords = (0..n)
            .map(|i| {
                let s: Rat = (0..n)
                    .filter(|&j| w.num[i * n + j] != 0)
                    .map(|j| Rat::int(w.num[i * n + j]) * &x.coords()[j])
                    .sum();
                &s / &d
            })
            .collect();
        Weight::new(x.basis(), coords)
    }

    /// Action on an integer vector of a lattice frame; `None` when the image
    /// leaves the frame lattice.
    pub fn apply_scaled(&self, w: &WeylElement, x: &[i64]) -> Option<Vec<i64>> {
        let n = x.len();
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let mut s: i64 = 0;
            for j in 0..n {
                let a = w.num[i * n + j];
                if a != 0 {
                    s += a * x[j];
                }
            }
            if s % self.den != 0 {
                return None;
            }
            out.push(s / self.den);
        }
        Some(out)
    }

    /// Product `a · b`.
    pub fn compose(&self, a: &WeylElement, b: &WeylElement) -> WeylElement {
        let n = self.basis.rank();
        let num = mat_mul(&a.num, &b.num, n, self.den).expect("closed group");
        let mut word = a.word.clone();
        word.extend_from_slice(&b.word);
        WeylElement {
            num,
            sign: a.sign * b.sign,
            word,
        }
    }

    /// The element equal to `a`, looked up in the enumerated list.
    pub fn find(&self, num: &WeylElement) -> Option<&WeylElement> {
        self.elements.iter().find(|e| e.num == num.num)
    }

    /// The orbit of a weight, without repetitions, in enumeration order.
    pub fn orbit(&self, x: &Weight) -> Vec<Weight> {
        let mut seen = std::collections::HashSet::new();
        let mut out = Vec::new();
        for e in &self.elements {
            let y = self.apply(e, x);
            if seen.insert(y.clone()) {
                out.push(y);
            }
        }
        out
    }
}

/// `I − 2 α αᵀ / (α, α)` as a row-major rational matrix.
fn reflection_matrix(alpha: &Weight) -> Vec<Rat> {
    let n = alpha.coords().len();
    let c = &Rat::int(2) / &alpha.inner(alpha);
    let mut m = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            let mut x = -(&c * &(&alpha.coords()[i] * &alpha.coords()[j]));
            if i == j {
                x += &Rat::one();
            }
            m.push(x);
        }
    }
    m
}

fn mat_mul(a: &[i64], b: &[i64], n: usize, den: i64) -> Result<Vec<i64>> {
    let mut out = vec![0i64; n * n];
    for i in 0..n {
        for k in 0..n {
            let x = a[i * n + k];
            if x == 0 {
                continue;
            }
            for j in 0..n {
                out[i * n + j] += x * b[k * n + j];
            }
        }
    }
    for v in out.iter_mut() {
        if *v % den != 0 {
            return Err(Error::Consistency(format!(
                "Weyl group not closed over denominator {den}"
            )));
        }
        *v /= den;
    }
    Ok(out)
}

/// Order of the Weyl group of a classical simple type, for assertions.
pub fn classical_order(kind: char, rank: usize) -> BigInt {
    let fact = |k: usize| (1..=k).fold(BigInt::from(1), |a, b| a * b);
    match kind {
        'A' => fact(rank + 1),
        'B' | 'C' => fact(rank) * (BigInt::from(1) << rank),
        'D' => {
            if rank == 0 {
                BigInt::from(1)
            } else {
                fact(rank) * (BigInt::from(1) << (rank - 1))
            }
        }
        _ => panic!("unknown classical type {kind}"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sp1_has_two_elements_with_signs() {
        let b = Basis::new(0, 1, "sp(1)");
        let w = WeylGroup::generate("W", &b, &[Weight::from_ints(&b, &[2])], DEFAULT_CEILING).unwrap();
        assert_eq!(w.order(), 2);
        let signs: Vec<i8> = w.elements().iter().map(|e| e.sign()).collect();
        assert_eq!(signs, vec![1, -1]);
    }

    #[test]
    fn type_c3_times_c1_has_order_96() {
        let b = Basis::new(3, 1, "sp(1,3)");
        let gens = vec![
            Weight::from_ints(&b, &[1, -1, 0, 0]),
            Weight::from_ints(&b, &[0, 1, -1, 0]),
            Weight::from_ints(&b, &[0, 0, 2, 0]),
            Weight::from_ints(&b, &[0, 0, 0, 2]),
        ];
        let w = WeylGroup::generate("W", &b, &gens, DEFAULT_CEILING).unwrap();
        assert_eq!(w.order(), 96);
        assert_eq!(classical_order('C', 3) * 2, BigInt::from(96));
    }

    #[test]
    fn ceiling_is_enforced() {
        let b = Basis::new(4, 0, "a3");
        let gens: Vec<Weight> = (0..3)
            .map(|i| {
                let mut x = vec![0; 4];
                x[i] = 1;
                x[i + 1] = -1;
                Weight::from_ints(&b, &x)
            })
            .collect();
        assert!(matches!(
            WeylGroup::generate("W", &b, &gens, 10),
            Err(Error::WeylCeiling { .. })
        ));
        let w = WeylGroup::generate("W", &b, &gens, 100).unwrap();
        assert_eq!(w.order(), 24);
    }
}
