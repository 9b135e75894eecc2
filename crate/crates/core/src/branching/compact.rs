//! Branching from `K₂` to `L ∩ K₂`.
//!
//! Two evaluations of the same alternating sum are available: a skew
//! distribution read on the dominant chamber, and a pointwise Kostant
//! branching sum at each candidate weight. The first is the default; the
//! second avoids tabulating the whole weight polytope and is used when the
//! Weyl group of `K₂` is large.

use std::collections::{BTreeMap, BTreeSet, HashSet};

use rayon::prelude::*;

use crate::catalog::{HCParameter, K1Split, PairData};
use crate::distribution::{heaviside, skew_project, TruncationWindow, WeightDistribution};
use crate::error::{Error, Result};
use crate::oracle::weyl_dimension;
use crate::partition::{PartitionCounter, WeightMultiset};
use crate::rational::Rat;
use crate::roots::{PositiveSystem, RootSystem};
use crate::weight::{half_sum, Weight};
use crate::weyl::{WeylGroup, DEFAULT_CEILING};

/// Restriction of an irreducible `K₂`-representation to `L ∩ K₂`.
#[derive(Clone, Debug)]
pub struct CompactBranching {
    /// Infinitesimal character `λ₂` of the `K₂`-representation, on `t`.
    pub lambda2: Weight,
    /// Positive roots of `K₂` on `t`.
    pub k2_positive: Vec<Weight>,
    /// Positive system of `L ∩ K₂` on `u`.
    pub psi_lk2: PositiveSystem,
    /// `ν₂′ ↦ m(λ₂, ν₂′)`, keyed by infinitesimal characters of `L ∩ K₂`.
    pub entries: BTreeMap<Weight, u64>,
}

impl CompactBranching {
    /// `Σ m(ν) dim V_ν` over the entries.
    pub fn total_dimension(&self) -> Rat {
        let pos = self.psi_lk2.vectors();
        let rho = half_sum(self.psi_lk2.basis(), &pos);
        self.entries
            .iter()
            .map(|(nu, &m)| &Rat::int(m as i64) * &weyl_dimension(&pos, &(nu - &rho)))
            .sum()
    }

    /// Dimension of the `K₂`-representation.
    pub fn dimension(&self) -> Rat {
        let rho = half_sum(self.lambda2.basis(), &self.k2_positive);
        weyl_dimension(&self.k2_positive, &(&self.lambda2 - &rho))
    }
}

/// Positive roots of `Δ(k/l, u)` for the functional `xi`.
pub(crate) fn k_over_l_positive(pair: &PairData, xi: &Weight) -> WeightMultiset {
    let mut out = WeightMultiset::new();
    for (w, c) in pair.k_over_l.items() {
        if xi.inner(w).is_positive() {
            out.insert(w.clone(), c);
        }
    }
    out
}

/// How the compact branching sum is evaluated.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CompactRoute {
    /// Skew distribution over the weight polytope, then skew projection.
    Skew,
    /// Kostant's branching sum evaluated at each candidate weight.
    Pointwise,
    /// `Skew` for small Weyl groups of `K₂`, `Pointwise` otherwise.
    Auto,
}

/// Weyl group order of `K₂` above which `Auto` evaluates pointwise.
pub const POINTWISE_THRESHOLD: usize = 2000;

/// Branches the `K₂`-representation with infinitesimal character `lambda2`
/// (a `t`-weight orthogonal to `t₁`) to `L ∩ K₂`, choosing the route by the
/// size of the Weyl group. The total dimension is checked against the Weyl
/// dimension formula.
pub fn compact_branch_at(
    pair: &PairData,
    chamber: &PositiveSystem,
    split: &K1Split,
    xi: &Weight,
    lambda2: &Weight,
) -> Result<CompactBranching> {
    compact_branch_route(pair, chamber, split, xi, lambda2, CompactRoute::Auto)
}

/// [`compact_branch_at`] with an explicit route.
///
/// `Skew` builds `Σ_t ε(t) δ_{q(tλ₂)} ⋆ y_{Δ⁺(k/l)}` in a window covering
/// the weight polytope and reads it on the strictly dominant chamber of
/// `L ∩ K₂`. `Pointwise` evaluates `m(ν) = Σ_t ε(t) 𝒫(q(tλ₂) − ρ(k/l) − ν)`
/// at the `ν` that are strictly dominant and of the form `q(weight) + ρ_{L∩K₂}`.
pub fn compact_branch_route(
    pair: &PairData,
    chamber: &PositiveSystem,
    split: &K1Split,
    xi: &Weight,
    lambda2: &Weight,
    route: CompactRoute,
) -> Result<CompactBranching> {
    let basis_t = pair.g.basis().clone();
    let basis_u = pair.h0.basis().clone();
    let k2_positive: Vec<Weight> = split
        .k2_roots
        .iter()
        .filter(|a| chamber.contains(a))
        .cloned()
        .collect();
    let rho_k2 = half_sum(&basis_t, &k2_positive);
    for a in &k2_positive {
        if !lambda2.inner(a).is_positive() {
            return Err(Error::NotDominant(format!("{lambda2} for K₂")));
        }
    }
    let psi_lk2 = RootSystem::compact("l∩k2", &basis_u, split.l_k2_roots.clone())?.positive_by("l∩k2+", xi);
    let group = WeylGroup::generate("W(K2)", &basis_t, &split.k2_roots, DEFAULT_CEILING)?;

    let positive = k_over_l_positive(pair, xi);
    let pointwise = match route {
        CompactRoute::Skew => false,
        CompactRoute::Pointwise => true,
        CompactRoute::Auto => group.order() > POINTWISE_THRESHOLD,
    };
    let entries = if pointwise {
        pointwise_entries(pair, xi, &group, lambda2, &rho_k2, &k2_positive, &psi_lk2, &positive)?
    } else {
        skew_entries(pair, xi, &group, lambda2, &rho_k2, &psi_lk2, &positive)?
    };
    let out = CompactBranching {
        lambda2: lambda2.clone(),
        k2_positive,
        psi_lk2,
        entries,
    };
    let (a, b) = (out.dimension(), out.total_dimension());
    if a != b {
        return Err(Error::Consistency(format!(
            "compact branching of {lambda2}: dimension {a} but the pieces add up to {b}"
        )));
    }
    Ok(out)
}

fn skew_entries(
    pair: &PairData,
    xi: &Weight,
    group: &WeylGroup,
    lambda2: &Weight,
    rho_k2: &Weight,
    psi_lk2: &PositiveSystem,
    positive: &WeightMultiset,
) -> Result<BTreeMap<Weight, u64>> {
    let rho_lk2 = psi_lk2.rho();
    let shifted = lambda2 - rho_k2;
    let mut points = Vec::with_capacity(group.order());
    let mut top: Option<Rat> = None;
    for e in group.elements() {
        points.push((pair.q.apply(&group.apply(e, lambda2)), i128::from(e.sign())));
        let h = xi.inner(&pair.q.apply(&group.apply(e, &shifted)));
        if top.as_ref().is_none_or(|t| &h > t) {
            top = Some(h);
        }
    }
    let bound = &top.expect("nonempty group") + &xi.inner(&rho_lk2);
    let d = WeightDistribution::from_points(&points, xi)?;
    let y = heaviside(positive, &TruncationWindow::new(xi.clone(), &bound - d.floor()))?;
    let prod = d.convolve(&y)?.truncate(&bound);
    let sign: i128 = if positive.len() % 2 == 0 { 1 } else { -1 };
    let mut entries = BTreeMap::new();
    for (nu, c) in skew_project(&prod, psi_lk2) {
        let c = sign * c;
        if c < 0 {
            return Err(Error::NegativeMultiplicity {
                at: nu.to_string(),
                value: c,
            });
        }
        entries.insert(nu, c as u64);
    }
    Ok(entries)
}

/// Dominant weights of the irreducible representation with highest weight
/// `hw`. Every dominant weight is reached from `hw` by subtracting positive
/// roots through dominant weights.
fn dominant_weights(positive: &[Weight], hw: &Weight) -> Vec<Weight> {
    let dominant = |w: &Weight| positive.iter().all(|a| !w.inner(a).is_negative());
    let mut seen: HashSet<Weight> = HashSet::from([hw.clone()]);
    let mut stack = vec![hw.clone()];
    while let Some(w) = stack.pop() {
        for a in positive {
            let v = &w - a;
            if dominant(&v) && seen.insert(v.clone()) {
                stack.push(v);
            }
        }
    }
    let mut out: Vec<Weight> = seen.into_iter().collect();
    out.sort();
    out
}

#[allow(clippy::too_many_arguments)]
fn pointwise_entries(
    pair: &PairData,
    xi: &Weight,
    group: &WeylGroup,
    lambda2: &Weight,
    rho_k2: &Weight,
    k2_positive: &[Weight],
    psi_lk2: &PositiveSystem,
    positive: &WeightMultiset,
) -> Result<BTreeMap<Weight, u64>> {
    let basis_u = pair.h0.basis().clone();
    let rho_lk2 = psi_lk2.rho();
    let hs = positive.half_sum(&basis_u);
    let hw = lambda2 - rho_k2;

    let mut candidates = BTreeSet::new();
    for mu in dominant_weights(k2_positive, &hw) {
        for w in group.orbit(&mu) {
            let nu = &pair.q.apply(&w) + &rho_lk2;
            if psi_lk2.is_dominant(&nu, true) {
                candidates.insert(nu);
            }
        }
    }

    // Terms `(height, q(tλ₂) − ρ(k/l), ε(t))`, highest first.
    let mut terms: Vec<(Rat, Weight, i128)> = group
        .elements()
        .iter()
        .map(|e| {
            let p = &pair.q.apply(&group.apply(e, lambda2)) - &hs;
            (xi.inner(&p), p, i128::from(e.sign()))
        })
        .collect();
    terms.sort_by(|a, b| b.0.cmp(&a.0).then_with(|| a.1.cmp(&b.1)));

    let q_lambda2 = pair.q.apply(lambda2);
    let q_hw = pair.q.apply(&hw);
    let lk2_roots = psi_lk2.vectors();
    let mut extra: Vec<&Weight> = vec![&hs, &q_lambda2, &q_hw, &rho_lk2];
    extra.extend(lk2_roots.iter());
    let counter = PartitionCounter::new(&basis_u, positive, xi, &extra)?;

    let candidates: Vec<Weight> = candidates.into_iter().collect();
    let values: Vec<(Weight, i128)> = candidates
        .into_par_iter()
        .map_init(
            || counter.clone(),
            |c, nu| {
                let floor = xi.inner(&nu);
                let total: i128 = terms
                    .iter()
                    .take_while(|(h, _, _)| *h >= floor)
                    .map(|(_, p, s)| s * c.count(&(p - &nu)) as i128)
                    .sum();
                (nu, total)
            },
        )
        .collect();
    let mut entries = BTreeMap::new();
    for (nu, c) in values {
        if c < 0 {
            return Err(Error::NegativeMultiplicity {
                at: nu.to_string(),
                value: c,
            });
        }
        if c > 0 {
            entries.insert(nu, c as u64);
        }
    }
    Ok(entries)
}

/// Compact branching for the `K₂`-part of a parameter.
pub fn compact_branch(pair: &PairData, param: &HCParameter) -> Result<CompactBranching> {
    let xi = pair.q.apply(&param.chamber.rho());
    let split = pair.k1_split(&param.chamber)?;
    let (_, lambda2) = split.split(&param.lambda);
    compact_branch_at(pair, &param.chamber, &split, &xi, &lambda2)
}
