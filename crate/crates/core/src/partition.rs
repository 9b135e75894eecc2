//! Multisets of weights and the Kostant partition function.
//!
//! [`kostant_partition`] counts the ways to write a target as a nonnegative
//! integer combination of a multiset of generators, starting from zero. The
//! count is a memoized recursion on the generator index; a functional that
//! is positive on every generator bounds the recursion, since each step
//! strictly lowers the height of the remaining target.
//!
//! ```
//! use branchkit::partition::{kostant_partition, WeightMultiset};
//! use branchkit::weight::{Basis, Weight};
//!
//! let b = Basis::new(3, 0, "a2");
//! let alpha = Weight::from_ints(&b, &[1, -1, 0]);
//! let beta = Weight::from_ints(&b, &[0, 1, -1]);
//! let s = WeightMultiset::from_weights(vec![alpha.clone(), beta.clone(), &alpha + &beta]);
//! assert_eq!(kostant_partition(&s, &(&alpha + &beta)).unwrap(), 2);
//! ```

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::lattice::{iaxpy, Frame, IVec, IntFunctional};
use crate::rational::Rat;
use crate::weight::{Basis, Weight};

/// A finite multiset of weights in one basis.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct WeightMultiset {
    items: BTreeMap<Weight, u32>,
}

impl WeightMultiset {
    /// The empty multiset.
    pub fn new() -> WeightMultiset {
        WeightMultiset::default()
    }

    /// Collects weights, counting repetitions.
    pub fn from_weights(ws: impl IntoIterator<Item = Weight>) -> WeightMultiset {
        let mut m = WeightMultiset::new();
        for w in ws {
            m.insert(w, 1);
        }
        m
    }

    /// Adds `reps` copies of `w`.
    pub fn insert(&mut self, w: Weight, reps: u32) {
        if reps > 0 {
            *self.items.entry(w).or_insert(0) += reps;
        }
    }

    /// `(weight, repetitions)` pairs in sorted order.
    pub fn items(&self) -> impl Iterator<Item = (&Weight, u32)> {
        self.items.iter().map(|(w, &r)| (w, r))
    }

    /// Repetitions of `w`.
    pub fn count(&self, w: &Weight) -> u32 {
        self.items.get(w).copied().unwrap_or(0)
    }

    /// Total number of elements with repetition.
    pub fn len(&self) -> usize {
        self.items.values().map(|&r| r as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    /// Every element, repeated, in sorted order.
    pub fn expand(&self) -> Vec<Weight> {
        self.items
            .iter()
            .flat_map(|(w, &r)| std::iter::repeat_n(w.clone(), r as usize))
            .collect()
    }

    /// Multiset union (sum of repetitions).
    pub fn union(&self, other: &WeightMultiset) -> WeightMultiset {
        let mut m = self.clone();
        for (w, r) in other.items() {
            m.insert(w.clone(), r);
        }
        m
    }

    /// Multiset intersection (minimum of repetitions).
    pub fn intersection(&self, other: &WeightMultiset) -> WeightMultiset {
        let mut m = WeightMultiset::new();
        for (w, r) in self.items() {
            m.insert(w.clone(), r.min(other.count(w)));
        }
        m
    }

    /// Exact difference `self \ other`; errors unless `other ⊂ self`.
    pub fn difference(&self, other: &WeightMultiset) -> Result<WeightMultiset> {
        let mut m = self.clone();
        for (w, r) in other.items() {
            let have = m.count(w);
            if have < r {
                return Err(Error::Consistency(format!(
                    "multiset difference: {w} occurs {r} times in the subtrahend but {have} times"
                )));
            }
            if have == r {
                m.items.remove(w);
            } else {
                m.items.insert(w.clone(), have - r);
            }
        }
        Ok(m)
    }

    /// Half the sum of all elements.
    pub fn half_sum(&self, basis: &Arc<Basis>) -> Weight {
        let mut s = Weight::zero(basis);
        for (w, r) in self.items() {
            s = &s + &w.scale(&Rat::int(r as i64));
        }
        s.scale(&Rat::half())
    }
}

/// Finds a functional strictly positive on every weight, by the perceptron
/// iteration, or reports that none was found.
pub fn acyclic_functional(basis: &Arc<Basis>, gens: &[Weight]) -> Result<Weight> {
    let mut xi = Weight::zero(basis);
    for g in gens {
        xi = &xi + g;
    }
    for _ in 0..10_000 {
        match gens.iter().find(|g| !xi.inner(g).is_positive()) {
            None => return Ok(xi),
            Some(g) => xi = &xi + g,
        }
    }
    Err(Error::Acyclic(format!(
        "no positive functional found for {} generators",
        gens.len()
    )))
}

/// Kostant partition counts against a fixed multiset, with a shared memo.
///
/// The counter is built once per computation and queried many times; each
/// worker thread should own its own counter.
#[derive(Clone, Debug)]
pub struct PartitionCounter {
    frame: Frame,
    gens: Vec<IVec>,
    xi: IntFunctional,
    gen_heights: Vec<i64>,
    memo: HashMap<(usize, IVec), u128>,
}

impl PartitionCounter {
    /// Prepares a counter for the generators, which must be positive on `xi`.
    /// `extra` lists weights (targets, shifts) that must lie in the frame.
    pub fn new(basis: &Arc<Basis>, gens: &WeightMultiset, xi: &Weight, extra: &[&Weight]) -> Result<PartitionCounter> {
        let list = gens.expand();
        for g in &list {
            if !xi.inner(g).is_positive() {
                return Err(Error::Acyclic(format!("{g} is not positive on {xi}")));
            }
        }
        let frame = Frame::covering(basis, list.iter().chain(extra.iter().copied()))?;
        let gens: Vec<IVec> = list.iter().map(|g| frame.to_ivec(g)).collect::<Result<_>>()?;
        let xi = IntFunctional::new(xi)?;
        let gen_heights = gens.iter().map(|g| xi.height(g)).collect();
        Ok(PartitionCounter {
            frame,
            gens,
            xi,
            gen_heights,
            memo: HashMap::new(),
        })
    }

    /// The frame of the counter.
    pub fn frame(&self) -> &Frame {
        &self.frame
    }

    /// Number of partitions of `target`; zero when the target is off the
    /// frame lattice (then it is not in the lattice spanned by the generators).
    pub fn count(&mut self, target: &Weight) -> u128 {
        match self.frame.to_ivec(target) {
            Ok(t) => self.count_ivec(&t),
            Err(_) => 0,
        }
    }

    /// Number of partitions of an integer target in the counter's frame.
    pub fn count_ivec(&mut self, target: &[i64]) -> u128 {
        self.rec(0, target.to_vec())
    }

    fn rec(&mut self, idx: usize, r: IVec) -> u128 {
        if idx == self.gens.len() {
            return u128::from(r.iter().all(|&x| x == 0));
        }
        let h = self.xi.height(&r);
        if h < 0 {
            return 0;
        }
        if idx + 1 == self.gens.len() {
            // A single generator: the remainder must be a multiple of it.
            let g = &self.gens[idx];
            let gh = self.gen_heights[idx];
            if h % gh != 0 {
                return 0;
            }
            let k = h / gh;
            return u128::from(r.iter().zip(g).all(|(x, y)| *x == k * y));
        }
        let key = (idx, r);
        if let Some(&v) = self.memo.get(&key) {
            return v;
        }
        let (idx, r) = key;
        let mut total = 0u128;
        let mut cur = r.clone();
        let mut hh = h;
        while hh >= 0 {
            total += self.rec(idx + 1, cur.clone());
            cur = iaxpy(&cur, -1, &self.gens[idx]);
            hh -= self.gen_heights[idx];
        }
        self.memo.insert((idx, r), total);
        total
    }
}

/// Kostant partition function of `target` over `s`, unshifted.
pub fn kostant_partition(s: &WeightMultiset, target: &Weight) -> Result<u128> {
    let basis = target.basis().clone();
    let xi = acyclic_functional(&basis, &s.expand())?;
    let mut c = PartitionCounter::new(&basis, s, &xi, &[])?;
    Ok(c.count(target))
}

/// Kostant partition function with an explicit positive functional.
pub fn kostant_partition_with(s: &WeightMultiset, target: &Weight, xi: &Weight) -> Result<u128> {
    let mut c = PartitionCounter::new(target.basis(), s, xi, &[])?;
    Ok(c.count(target))
}
