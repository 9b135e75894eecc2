//! Symmetric pairs `(G, H)` with their associated pairs `(G, H₀)`.
//!
//! The catalog is a table of parametrized rows (`so(2m,2n)`, `sp(m,n)`, …).
//! [`Catalog::lookup`] matches a concrete pair against the row templates,
//! solves for the parameters and assembles the [`PairData`]: the colored
//! root systems of `g`, `h`, `h₀`, `l = h ∩ k`, the multisets `Φ(h/l)`,
//! `Φ(h₀/l)` and `Δ(k/l)` restricted to `u`, the restriction map
//! `q: t* → u*`, and the admissible positive systems.
//!
//! ```
//! use branchkit::catalog::Catalog;
//!
//! let cat = Catalog::builtin();
//! let e = cat.lookup("sp(1,3)", "sp(1,1)+sp(2)").unwrap();
//! let d = e.data.as_ref().unwrap();
//! assert_eq!(e.h0, "sp(1,2)+sp(1)");
//! assert_eq!((d.g.len(), d.h.len(), d.h0.len()), (32, 16, 20));
//! assert_eq!(d.family.len(), 1);
//! ```

mod build;
mod fold;
pub mod lie;
mod table;

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::linalg;
use crate::partition::WeightMultiset;
use crate::rational::Rat;
use crate::roots::{PositiveSystem, RootSystem};
use crate::weight::{is_integral, Basis, IntegralityLattice, Weight};

pub use table::{Catalog, CatalogEntry, CatalogRow};

/// The linear restriction `q: t* → u*`.
#[derive(Clone, Debug)]
pub struct RestrictionMap {
    source: Arc<Basis>,
    target: Arc<Basis>,
    matrix: Vec<Vec<Rat>>,
}

impl RestrictionMap {
    /// The identity of an equal-rank pair.
    pub fn identity(basis: &Arc<Basis>) -> RestrictionMap {
        let n = basis.rank();
        let matrix = (0..n)
            .map(|i| (0..n).map(|j| if i == j { Rat::one() } else { Rat::zero() }).collect())
            .collect();
        RestrictionMap {
            source: basis.clone(),
            target: basis.clone(),
            matrix,
        }
    }

    /// A map given by its matrix: row `i` holds the `i`-th target coordinate.
    pub fn new(source: &Arc<Basis>, target: &Arc<Basis>, matrix: Vec<Vec<Rat>>) -> Result<RestrictionMap> {
        if matrix.len() != target.rank() || matrix.iter().any(|r| r.len() != source.rank()) {
            return Err(Error::Consistency(format!(
                "restriction matrix does not map {} to {}",
                source.label, target.label
            )));
        }
        Ok(RestrictionMap {
            source: source.clone(),
            target: target.clone(),
            matrix,
        })
    }

    pub fn source(&self) -> &Arc<Basis> {
        &self.source
    }

    pub fn target(&self) -> &Arc<Basis> {
        &self.target
    }

    pub fn matrix(&self) -> &[Vec<Rat>] {
        &self.matrix
    }

    /// True when source and target agree and the matrix is the identity.
    pub fn is_identity(&self) -> bool {
        self.source == self.target
            && self.matrix.iter().enumerate().all(|(i, r)| {
                r.iter().enumerate().all(|(j, x)| *x == if i == j { Rat::one() } else { Rat::zero() })
            })
    }

    /// `q(w)`.
    pub fn apply(&self, w: &Weight) -> Weight {
        assert_eq!(w.basis(), &self.source, "restriction applied in the wrong basis");
        Weight::new(
            &self.target,
            self.matrix.iter().map(|r| linalg::dot(r, w.coords())).collect(),
        )
    }
}

/// A member of the admissible family of positive systems.
#[derive(Clone, Debug)]
pub struct PsiMember {
    pub name: String,
    pub system: PositiveSystem,
    /// Whether the system is of Borel–de Siebenthal type.
    pub bds: bool,
}

/// How the factor `K₁` of `K` is singled out.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum K1Kind {
    /// The compact roots supported on the listed coordinates.
    Block { label: String, coords: Vec<usize> },
    /// The `SU(2)` of the highest root of the positive system.
    HighestRoot,
    /// The center of `K` (holomorphic families).
    Center,
}

/// Everything needed to branch along one pair.
#[derive(Clone, Debug)]
pub struct PairData {
    pub g_name: String,
    pub h_name: String,
    pub h0_name: String,
    /// Roots of `g` on `t`, colored compact or noncompact.
    pub g: RootSystem,
    /// Roots of `h` and `h₀` on `u`; the compact ones are the roots of `l`.
    pub h: RootSystem,
    pub h0: RootSystem,
    pub l: RootSystem,
    /// `Φ(h/l, u)` and `Φ(h₀/l, u)`: the noncompact roots, both signs.
    pub h_over_l: WeightMultiset,
    pub h0_over_l: WeightMultiset,
    /// `Δ(k/l, u)`: restricted compact roots outside `l`, both signs.
    pub k_over_l: WeightMultiset,
    pub q: RestrictionMap,
    pub equal_rank: bool,
    pub family: Vec<PsiMember>,
    pub k1: K1Kind,
}

/// A validated Harish-Chandra parameter.
#[derive(Clone, Debug)]
pub struct HCParameter {
    pub lambda: Weight,
    /// The positive system `Ψ_λ` of roots positive on `λ`.
    pub chamber: PositiveSystem,
    /// Index of the family member equal to the chamber.
    pub member: usize,
}

/// Positive systems induced on `h`, `h₀` and `l` by the functional
/// `ξ = q(ρ(Ψ_λ))`.
#[derive(Clone, Debug)]
pub struct InducedSystems {
    pub xi: Weight,
    pub psi_h: PositiveSystem,
    pub psi_h0: PositiveSystem,
    pub psi_l: PositiveSystem,
}

/// The splitting `t* = t₁* ⊕ t₂*` along `K = K₁·K₂`.
#[derive(Clone, Debug)]
pub struct K1Split {
    /// Roots of `K₁` (empty when `K₁` is the center).
    pub k1_roots: Vec<Weight>,
    /// Roots of `K₂` on `t`.
    pub k2_roots: Vec<Weight>,
    /// Roots of `L ∩ K₂` on `u`.
    pub l_k2_roots: Vec<Weight>,
    t1: Vec<Vec<Rat>>,
    u1: Vec<Vec<Rat>>,
}

impl K1Split {
    /// `(w₁, w₂)` with `w₁ ∈ t₁*` and `w₂ = w − w₁`.
    pub fn split(&self, w: &Weight) -> (Weight, Weight) {
        let w1 = Weight::new(w.basis(), linalg::project(w.coords(), &self.t1));
        let w2 = w - &w1;
        (w1, w2)
    }

    /// The same splitting on `u*` along `u₁* = q(t₁*)`.
    pub fn split_u(&self, x: &Weight) -> (Weight, Weight) {
        let x1 = Weight::new(x.basis(), linalg::project(x.coords(), &self.u1));
        let x2 = x - &x1;
        (x1, x2)
    }
}

fn is_orthogonal_to(w: &Weight, orth: &[Vec<Rat>]) -> bool {
    orth.iter().all(|b| linalg::dot(w.coords(), b).is_zero())
}

fn lies_in(w: &Weight, orth: &[Vec<Rat>]) -> bool {
    linalg::project(w.coords(), orth) == w.coords()
}

impl PairData {
    /// The pair with the roles of `h` and `h₀` exchanged.
    pub fn swapped(&self) -> PairData {
        let mut d = self.clone();
        std::mem::swap(&mut d.h_name, &mut d.h0_name);
        std::mem::swap(&mut d.h, &mut d.h0);
        std::mem::swap(&mut d.h_over_l, &mut d.h0_over_l);
        d
    }

    /// `"g/h"`.
    pub fn id(&self) -> String {
        format!("{}/{}", self.g_name, self.h_name)
    }

    /// Checks that `lambda` is a regular integral parameter in the span of
    /// the roots whose chamber is an admissible positive system.
    pub fn validate_parameter(&self, lambda: &Weight) -> Result<HCParameter> {
        if lambda.basis() != self.g.basis() {
            return Err(Error::BasisMismatch(
                self.g.basis().label.clone(),
                lambda.basis().label.clone(),
            ));
        }
        if !self.g.in_span(lambda) {
            return Err(Error::NotInSpan(lambda.to_string(), self.g_name.clone()));
        }
        let chamber = self.g.chamber_system(lambda)?;
        let lattice = IntegralityLattice::Coroot {
            roots: self.g.vectors(),
            offset: chamber.rho(),
        };
        if !is_integral(lambda, &lattice) {
            return Err(Error::NonIntegral(format!(
                "{lambda}: λ + ρ does not pair integrally with every coroot"
            )));
        }
        let member = self.admissible(&chamber).ok_or_else(|| Error::NotAdmissible {
            pair: self.id(),
            detail: format!(
                "the chamber of {lambda} is not one of {}",
                self.family.iter().map(|m| m.name.as_str()).collect::<Vec<_>>().join(", ")
            ),
        })?;
        Ok(HCParameter {
            lambda: lambda.clone(),
            chamber,
            member,
        })
    }

    /// Index of the family member with the same positive roots, if any.
    pub fn admissible(&self, chamber: &PositiveSystem) -> Option<usize> {
        self.family.iter().position(|m| m.system.positives() == chamber.positives())
    }

    /// Positive systems on `h`, `h₀`, `l` cut out by `ξ = q(ρ(Ψ))`.
    pub fn induced_systems(&self, chamber: &PositiveSystem) -> Result<InducedSystems> {
        let xi = self.q.apply(&chamber.rho());
        for sys in [&self.h, &self.h0] {
            sys.check_regular(&xi).map_err(|_| {
                Error::Consistency(format!("q(ρ) = {xi} is singular on the roots of {}", sys.name()))
            })?;
        }
        Ok(InducedSystems {
            psi_h: self.h.positive_by(&format!("{}+", self.h_name), &xi),
            psi_h0: self.h0.positive_by(&format!("{}+", self.h0_name), &xi),
            psi_l: self.l.positive_by("l+", &xi),
            xi,
        })
    }

    /// Splits `t*` along the factor `K₁` determined by the positive system.
    pub fn k1_split(&self, psi: &PositiveSystem) -> Result<K1Split> {
        let compact = self.g.compact_roots();
        let k1_roots: Vec<Weight> = match &self.k1 {
            K1Kind::Block { coords, .. } => compact
                .iter()
                .filter(|a| {
                    a.coords()
                        .iter()
                        .enumerate()
                        .all(|(i, x)| x.is_zero() || coords.contains(&i))
                })
                .cloned()
                .collect(),
            K1Kind::HighestRoot => {
                let top = psi.highest_roots();
                let [a] = top.as_slice() else {
                    return Err(Error::Consistency(format!(
                        "{}: expected one highest root, found {}",
                        self.g_name,
                        top.len()
                    )));
                };
                if !self.g.get(a).is_some_and(|r| r.compact) {
                    return Err(Error::Consistency(format!("{}: highest root {a} is noncompact", self.g_name)));
                }
                vec![a.clone(), -a]
            }
            K1Kind::Center => Vec::new(),
        };
        let t1 = match &self.k1 {
            K1Kind::Center => {
                let c = linalg::orthogonal_basis(&compact.iter().map(|a| a.coords().to_vec()).collect::<Vec<_>>());
                let rest: Vec<Vec<Rat>> = self
                    .g
                    .vectors()
                    .iter()
                    .map(|a| {
                        let p = linalg::project(a.coords(), &c);
                        a.coords().iter().zip(&p).map(|(x, y)| x - y).collect()
                    })
                    .collect();
                linalg::orthogonal_basis(&rest)
            }
            _ => linalg::orthogonal_basis(&k1_roots.iter().map(|a| a.coords().to_vec()).collect::<Vec<_>>()),
        };
        if t1.is_empty() {
            return Err(Error::Consistency(format!("{}: K₁ has trivial torus", self.g_name)));
        }
        let mut k2_roots = Vec::new();
        for a in &compact {
            if is_orthogonal_to(a, &t1) {
                k2_roots.push(a.clone());
            } else if !lies_in(a, &t1) {
                return Err(Error::Consistency(format!(
                    "{}: compact root {a} is neither in K₁ nor orthogonal to it",
                    self.g_name
                )));
            }
        }
        for a in &k1_roots {
            let b = self.q.apply(a);
            if !self.l.contains(&b) {
                return Err(Error::Consistency(format!(
                    "{}: K₁ root {a} restricts to {b}, which is not a root of l",
                    self.id()
                )));
            }
        }
        let u1_gens: Vec<Vec<Rat>> = t1
            .iter()
            .map(|v| self.q.apply(&Weight::new(self.g.basis(), v.clone())).into_coords())
            .collect();
        let u1 = linalg::orthogonal_basis(&u1_gens);
        let l_k2_roots = self.l.vectors().into_iter().filter(|a| is_orthogonal_to(a, &u1)).collect();
        Ok(K1Split {
            k1_roots,
            k2_roots,
            l_k2_roots,
            t1,
            u1,
        })
    }
}
