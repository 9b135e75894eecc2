//! Root systems with a compact/noncompact coloring and their positive
//! systems.
//!
//! A [`RootSystem`] is a finite set of [`ColoredRoot`]s closed under negation
//! and under every root reflection; both properties are checked on
//! construction. A [`PositiveSystem`] is a choice of half of the roots cut
//! out by a regular functional, together with its simple roots and the
//! half-sums ρ, ρ_c, ρ_n.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::linalg;
use crate::rational::Rat;
use crate::weight::{self, Basis, Weight};

/// A root together with its color.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ColoredRoot {
    pub vector: Weight,
    pub compact: bool,
}

impl ColoredRoot {
    pub fn new(vector: Weight, compact: bool) -> ColoredRoot {
        ColoredRoot { vector, compact }
    }
}

/// A colored root system in a fixed orthogonal basis.
#[derive(Clone, Debug)]
pub struct RootSystem {
    name: String,
    basis: Arc<Basis>,
    roots: Vec<ColoredRoot>,
    index: HashMap<Weight, usize>,
    span: Vec<Vec<Rat>>,
}

impl RootSystem {
    /// Builds and validates a root system. Duplicate vectors are rejected,
    /// as are sets not closed under negation or reflection.
    pub fn new(name: &str, basis: &Arc<Basis>, roots: Vec<ColoredRoot>) -> Result<RootSystem> {
        let mut index = HashMap::new();
        for (i, r) in roots.iter().enumerate() {
            if r.vector.basis() != basis {
                return Err(Error::BasisMismatch(
                    basis.label.clone(),
                    r.vector.basis().label.clone(),
                ));
            }
            if r.vector.is_zero() {
                return Err(Error::Consistency(format!("{name}: zero root")));
            }
            if index.insert(r.vector.clone(), i).is_some() {
                return Err(Error::Consistency(format!(
                    "{name}: duplicate root {}",
                    r.vector
                )));
            }
        }
        let sys = RootSystem {
            name: name.to_string(),
            basis: basis.clone(),
            span: linalg::orthogonal_basis(
                &roots.iter().map(|r| r.vector.coords().to_vec()).collect::<Vec<_>>(),
            ),
            roots,
            index,
        };
        for r in &sys.roots {
            match sys.get(&-&r.vector) {
                Some(n) if n.compact == r.compact => {}
                Some(_) => {
                    return Err(Error::Consistency(format!(
                        "{name}: {} and its negative have different colors",
                        r.vector
                    )))
                }
                None => {
                    return Err(Error::Consistency(format!(
                        "{name}: {} has no negative",
                        r.vector
                    )))
                }
            }
            for s in &sys.roots {
                if sys.get(&s.vector.reflect(&r.vector)).is_none() {
                    return Err(Error::Consistency(format!(
                        "{name}: reflection in {} does not preserve the roots",
                        r.vector
                    )));
                }
            }
        }
        Ok(sys)
    }

    /// Builds the root system with all roots compact.
    pub fn compact(name: &str, basis: &Arc<Basis>, vectors: Vec<Weight>) -> Result<RootSystem> {
        RootSystem::new(
            name,
            basis,
            vectors.into_iter().map(|v| ColoredRoot::new(v, true)).collect(),
        )
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn basis(&self) -> &Arc<Basis> {
        &self.basis
    }

    pub fn roots(&self) -> &[ColoredRoot] {
        &self.roots
    }

    /// All root vectors.
    pub fn vectors(&self) -> Vec<Weight> {
        self.roots.iter().map(|r| r.vector.clone()).collect()
    }

    /// The colored root with the given vector.
    pub fn get(&self, v: &Weight) -> Option<&ColoredRoot> {
        self.index.get(v).map(|&i| &self.roots[i])
    }

    /// True iff `v` is a root.
    pub fn contains(&self, v: &Weight) -> bool {
        self.index.contains_key(v)
    }

    /// Compact roots.
    pub fn compact_roots(&self) -> Vec<Weight> {
        self.roots.iter().filter(|r| r.compact).map(|r| r.vector.clone()).collect()
    }

    /// Noncompact roots.
    pub fn noncompact_roots(&self) -> Vec<Weight> {
        self.roots.iter().filter(|r| !r.compact).map(|r| r.vector.clone()).collect()
    }

    /// Number of roots.
    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    /// True iff `w` lies in the span of the roots.
    pub fn in_span(&self, w: &Weight) -> bool {
        linalg::project(w.coords(), &self.span) == w.coords()
    }

    /// Orthogonal projection onto the span of the roots.
    pub fn project_to_span(&self, w: &Weight) -> Weight {
        Weight::new(&self.basis, linalg::project(w.coords(), &self.span))
    }

    /// The sub-root-system of roots satisfying `keep`, with the same colors.
    pub fn subsystem(&self, name: &str, keep: impl Fn(&ColoredRoot) -> bool) -> Result<RootSystem> {
        RootSystem::new(
            name,
            &self.basis,
            self.roots.iter().filter(|r| keep(r)).cloned().collect(),
        )
    }

    /// The compact roots as an all-compact root system.
    pub fn compact_subsystem(&self) -> Result<RootSystem> {
        self.subsystem(&format!("{}:compact", self.name), |r| r.compact)
    }

    /// Errors unless `lam` pairs nontrivially with every root.
    pub fn check_regular(&self, lam: &Weight) -> Result<()> {
        for r in &self.roots {
            if lam.inner(&r.vector).is_zero() {
                return Err(Error::Singular(lam.to_string(), r.vector.to_string()));
            }
        }
        Ok(())
    }

    /// The positive system of roots pairing positively with `lam`.
    pub fn chamber_system(&self, lam: &Weight) -> Result<PositiveSystem> {
        self.check_regular(lam)?;
        Ok(self.positive_by(&format!("Psi({lam})"), lam))
    }

    /// Positive system cut out by a functional; roots orthogonal to it are
    /// treated as negative, so the caller must pass a regular functional.
    pub fn positive_by(&self, name: &str, functional: &Weight) -> PositiveSystem {
        let positives = self
            .roots
            .iter()
            .filter(|r| r.vector.inner(functional).is_positive())
            .cloned()
            .collect();
        PositiveSystem::from_positives(name, self, positives)
    }

    /// Positive system from a lexicographic order: `order` lists signed unit
    /// directions `(coordinate, sign)` from largest to smallest.
    pub fn lexicographic(&self, name: &str, order: &[(usize, i64)]) -> PositiveSystem {
        let n = order.len() as i64;
        let mut f = Weight::zero(&self.basis).into_coords();
        // Weights 4^k make the order lexicographic for roots with entries of
        // size at most 2.
        for (k, &(i, s)) in order.iter().enumerate() {
            f[i] = Rat::int(s * (1i64 << (2 * (n - k as i64))));
        }
        let f = Weight::new(&self.basis, f);
        self.positive_by(name, &f)
    }
}

impl fmt::Display for RootSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ({} roots)", self.name, self.roots.len())
    }
}

/// A positive system of a colored root system.
#[derive(Clone, Debug)]
pub struct PositiveSystem {
    name: String,
    basis: Arc<Basis>,
    positives: Vec<ColoredRoot>,
    simple: Vec<ColoredRoot>,
}

impl PositiveSystem {
    /// Builds a positive system from its positive roots. Panics if the list
    /// does not contain exactly one of each pair ±α.
    pub fn from_positives(name: &str, sys: &RootSystem, mut positives: Vec<ColoredRoot>) -> PositiveSystem {
        positives.sort();
        let set: HashSet<&Weight> = positives.iter().map(|r| &r.vector).collect();
        assert_eq!(2 * positives.len(), sys.len(), "{name}: not half of the roots");
        for r in &positives {
            assert!(!set.contains(&-&r.vector), "{name}: contains ±{}", r.vector);
        }
        let simple = simple_roots(&positives);
        PositiveSystem {
            name: name.to_string(),
            basis: sys.basis().clone(),
            positives,
            simple,
        }
    }

    /// The same positive system under another name.
    pub fn named(&self, name: &str) -> PositiveSystem {
        PositiveSystem {
            name: name.to_string(),
            ..self.clone()
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn basis(&self) -> &Arc<Basis> {
        &self.basis
    }

    pub fn positives(&self) -> &[ColoredRoot] {
        &self.positives
    }

    pub fn simple_roots(&self) -> &[ColoredRoot] {
        &self.simple
    }

    /// Positive root vectors.
    pub fn vectors(&self) -> Vec<Weight> {
        self.positives.iter().map(|r| r.vector.clone()).collect()
    }

    /// Compact positive roots.
    pub fn compact(&self) -> Vec<Weight> {
        self.positives.iter().filter(|r| r.compact).map(|r| r.vector.clone()).collect()
    }

    /// Noncompact positive roots.
    pub fn noncompact(&self) -> Vec<Weight> {
        self.positives.iter().filter(|r| !r.compact).map(|r| r.vector.clone()).collect()
    }

    /// True iff `v` is a positive root.
    pub fn contains(&self, v: &Weight) -> bool {
        self.positives.iter().any(|r| &r.vector == v)
    }

    /// ρ, half the sum of the positive roots.
    pub fn rho(&self) -> Weight {
        weight::half_sum(&self.basis, self.positives.iter().map(|r| &r.vector))
    }

    /// ρ_c, half the sum of the compact positive roots.
    pub fn rho_c(&self) -> Weight {
        weight::half_sum(&self.basis, self.positives.iter().filter(|r| r.compact).map(|r| &r.vector))
    }

    /// ρ_n, half the sum of the noncompact positive roots.
    pub fn rho_n(&self) -> Weight {
        weight::half_sum(&self.basis, self.positives.iter().filter(|r| !r.compact).map(|r| &r.vector))
    }

    /// `(ρ, ρ_c, ρ_n)`; asserts `ρ = ρ_c + ρ_n`.
    pub fn rho_vectors(&self) -> (Weight, Weight, Weight) {
        let (r, c, n) = (self.rho(), self.rho_c(), self.rho_n());
        assert_eq!(r, &c + &n, "rho = rho_c + rho_n");
        (r, c, n)
    }

    /// Pairings with every positive root are `≥ 0`, or `> 0` when `strict`.
    pub fn is_dominant(&self, lam: &Weight, strict: bool) -> bool {
        self.positives.iter().all(|r| {
            let p = lam.inner(&r.vector);
            if strict {
                p.is_positive()
            } else {
                !p.is_negative()
            }
        })
    }

    /// Same test restricted to compact positive roots.
    pub fn is_compact_dominant(&self, lam: &Weight, strict: bool) -> bool {
        self.positives.iter().filter(|r| r.compact).all(|r| {
            let p = lam.inner(&r.vector);
            if strict {
                p.is_positive()
            } else {
                !p.is_negative()
            }
        })
    }

    /// The all-compact positive system `Ψ ∩ Φ_c` as a standalone system.
    pub fn compact_part(&self, name: &str) -> PositiveSystem {
        let positives: Vec<ColoredRoot> = self.positives.iter().filter(|r| r.compact).cloned().collect();
        let simple = simple_roots(&positives);
        PositiveSystem {
            name: name.to_string(),
            basis: self.basis.clone(),
            positives,
            simple,
        }
    }

    /// Coordinates of a root in the basis of simple roots.
    pub fn simple_coordinates(&self, v: &Weight) -> Option<Vec<Rat>> {
        let simple: Vec<Vec<Rat>> = self.simple.iter().map(|r| r.vector.coords().to_vec()).collect();
        linalg::solve_combination(&simple, v.coords())
    }

    /// Noncompact simple roots.
    pub fn noncompact_simple(&self) -> Vec<Weight> {
        self.simple.iter().filter(|r| !r.compact).map(|r| r.vector.clone()).collect()
    }

    /// Compact simple roots.
    pub fn compact_simple(&self) -> Vec<Weight> {
        self.simple.iter().filter(|r| r.compact).map(|r| r.vector.clone()).collect()
    }

    /// Highest roots, one per irreducible component, in sorted order.
    pub fn highest_roots(&self) -> Vec<Weight> {
        let set: HashSet<&Weight> = self.positives.iter().map(|r| &r.vector).collect();
        self.positives
            .iter()
            .filter(|r| self.simple.iter().all(|s| !set.contains(&(&r.vector + &s.vector))))
            .map(|r| r.vector.clone())
            .collect()
    }

    /// Coefficient of the single noncompact simple root in the highest root of
    /// its component, when there is exactly one noncompact simple root.
    pub fn bds_coefficient(&self) -> Option<Rat> {
        let nc = self.noncompact_simple();
        if nc.len() != 1 {
            return None;
        }
        let idx = self.simple.iter().position(|r| r.vector == nc[0])?;
        self.highest_roots()
            .iter()
            .filter_map(|h| self.simple_coordinates(h))
            .map(|c| c[idx].clone())
            .find(|c| !c.is_zero())
    }

    /// The Borel–de Siebenthal predicate: exactly one noncompact simple root.
    pub fn is_borel_de_siebenthal(&self) -> bool {
        self.noncompact_simple().len() == 1
    }
}

/// Positive roots that are not the sum of two positive roots.
fn simple_roots(positives: &[ColoredRoot]) -> Vec<ColoredRoot> {
    let set: HashSet<&Weight> = positives.iter().map(|r| &r.vector).collect();
    positives
        .iter()
        .filter(|r| {
            !positives
                .iter()
                .any(|s| set.contains(&(&r.vector - &s.vector)))
        })
        .cloned()
        .collect()
}

/// `ρ` of the positive system of a set of roots cut out by `functional`.
pub fn rho_of(basis: &Arc<Basis>, roots: &[Weight], functional: &Weight) -> Weight {
    weight::half_sum(
        basis,
        roots.iter().filter(|r| r.inner(functional).is_positive()),
    )
}
