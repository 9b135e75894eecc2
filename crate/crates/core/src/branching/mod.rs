//! Branching of a discrete series of `G` to a symmetric subgroup `H`.
//!
//! Two independent routes produce the `H`-spectrum inside a window:
//!
//! * [`duality_branch`]: branch the `K₂`-part of the parameter to `L ∩ K₂`,
//!   then read each resulting `H₀`-discrete series on `L` with Blattner's
//!   formula.
//! * [`duflo_vargas`]: evaluate an alternating sum over `W_K` of partition
//!   functions directly.
//!
//! Spectra are keyed by infinitesimal characters of `H` (Harish-Chandra
//! parameters of the discrete series of `H`), which are also infinitesimal
//! characters of `L`-types.

mod blattner;
mod compact;
mod cone;
mod duality;
mod duflo_vargas;

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

pub use blattner::{blattner, blattner_spectrum, Blattner, BlattnerMode};
pub use compact::{compact_branch, compact_branch_at, compact_branch_route, CompactBranching, CompactRoute, POINTWISE_THRESHOLD};
pub use duality::{duality_branch, duality_branch_shifted, duality_setup, duality_shifted_setup, h0_parameters};
pub use duflo_vargas::duflo_vargas_setup;

use crate::catalog::{HCParameter, InducedSystems, K1Kind, PairData};
use crate::distribution::TruncationWindow;
use crate::error::{Error, Result};
use crate::rational::Rat;
use crate::weight::Weight;

/// Which route computed a result.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Method {
    Duality,
    DufloVargas,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Duality => "duality",
            Method::DufloVargas => "duflo_vargas",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// The `H`-spectrum of a discrete series inside a window.
#[derive(Clone, Debug)]
pub struct BranchingResult {
    /// Pair identifier `g/h`.
    pub pair: String,
    pub lambda: Weight,
    pub method: Method,
    /// Global sign applied to the alternating sum; `1` for the duality route.
    pub sign: i32,
    /// Absolute window `⟨ξ, μ⟩ ≤ bound`.
    pub window: TruncationWindow,
    /// The window bound relative to `⟨ξ, q(λ)⟩`.
    pub relative_bound: Rat,
    /// `μ ↦ m(λ, μ)`, all positive.
    pub entries: BTreeMap<Weight, u64>,
}

impl BranchingResult {
    /// True iff every multiplicity inside the window equals one.
    pub fn multiplicity_free(&self) -> bool {
        multiplicity_free(self)
    }

    /// Multiplicity of `mu` (zero when absent).
    pub fn multiplicity(&self, mu: &Weight) -> u64 {
        self.entries.get(mu).copied().unwrap_or(0)
    }

    /// Entries sorted by `⟨ξ, μ⟩`, then lexicographically.
    pub fn sorted(&self) -> Vec<(Weight, u64)> {
        let mut v: Vec<(Rat, Weight, u64)> = self
            .entries
            .iter()
            .map(|(w, &m)| (self.window.height(w), w.clone(), m))
            .collect();
        v.sort();
        v.into_iter().map(|(_, w, m)| (w, m)).collect()
    }
}

/// True iff every multiplicity of the result equals one. The verdict only
/// covers the window of the result.
pub fn multiplicity_free(result: &BranchingResult) -> bool {
    result.entries.values().all(|&m| m == 1)
}

/// A validated parameter with its induced positive systems and window.
#[derive(Clone, Debug)]
pub struct Setup {
    pub pair: Arc<PairData>,
    pub param: HCParameter,
    pub systems: InducedSystems,
    /// Absolute window on `u`.
    pub window: TruncationWindow,
    pub relative_bound: Rat,
}

impl Setup {
    /// Validates `lambda` and sets the window `⟨ξ, μ − q(λ)⟩ ≤ bound`.
    pub fn new(pair: &Arc<PairData>, lambda: &Weight, bound: &Rat) -> Result<Setup> {
        if bound.is_negative() {
            return Err(Error::WindowUnderflow);
        }
        let param = pair.validate_parameter(lambda)?;
        let systems = pair.induced_systems(&param.chamber)?;
        let base = systems.xi.inner(&pair.q.apply(lambda));
        let window = TruncationWindow::new(systems.xi.clone(), &base + bound);
        Ok(Setup {
            pair: pair.clone(),
            param,
            systems,
            window,
            relative_bound: bound.clone(),
        })
    }

    fn result(&self, method: Method, sign: i32, entries: BTreeMap<Weight, u64>) -> BranchingResult {
        BranchingResult {
            pair: self.pair.id(),
            lambda: self.param.lambda.clone(),
            method,
            sign,
            window: self.window.clone(),
            relative_bound: self.relative_bound.clone(),
            entries,
        }
    }
}

/// Duflo–Vargas route for a parameter and a relative window bound.
pub fn duflo_vargas(pair: &Arc<PairData>, lambda: &Weight, bound: &Rat) -> Result<BranchingResult> {
    duflo_vargas_setup(&Setup::new(pair, lambda, bound)?)
}

/// The lowest `K`-type of a discrete series.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LowestKType {
    /// Infinitesimal character `λ + ρ_n`.
    pub hc: Weight,
    /// Highest weight `λ + ρ_n − ρ_c`.
    pub highest_weight: Weight,
    /// `(Λ₁, Λ₂)`, the splitting of `hc` along `K₁·K₂`.
    pub parts: (Weight, Weight),
}

/// The lowest `K`-type of the discrete series with parameter `param`.
pub fn lowest_k_type(pair: &PairData, param: &HCParameter) -> Result<LowestKType> {
    let (_, rho_c, rho_n) = param.chamber.rho_vectors();
    let hc = &param.lambda + &rho_n;
    let split = pair.k1_split(&param.chamber)?;
    Ok(LowestKType {
        highest_weight: &hc - &rho_c,
        parts: split.split(&hc),
        hc,
    })
}

/// `(ρ_n)₂`, the `K₂`-part of `ρ_n`. It must be central in `k`; anything
/// else is reported as a consistency failure.
pub fn central_shift(pair: &PairData, param: &HCParameter) -> Result<Weight> {
    let split = pair.k1_split(&param.chamber)?;
    let (_, shift) = split.split(&param.chamber.rho_n());
    for a in pair.g.compact_roots() {
        if !shift.inner(&a).is_zero() {
            return Err(Error::Consistency(format!(
                "{}: (ρ_n)₂ = {shift} is not central in k (pairs with {a})",
                pair.id()
            )));
        }
    }
    Ok(shift)
}

/// The `H₀`-parameter `ν − ρ_n` of the discrete series of `H₀` with lowest
/// `L`-type of infinitesimal character `nu`.
pub fn h0_parameter(pair: &PairData, psi_h0: &crate::roots::PositiveSystem, nu: &Weight) -> Result<Weight> {
    if !psi_h0.is_compact_dominant(nu, true) {
        return Err(Error::NotDominant(format!("{nu} for the compact roots of {}", pair.h0_name)));
    }
    let eta = nu - &psi_h0.rho_n();
    pair.h0.check_regular(&eta)?;
    if !psi_h0.is_dominant(&eta, true) {
        return Err(Error::NotDominant(format!("{eta} for {}", psi_h0.name())));
    }
    Ok(eta)
}

/// The parameter `Σ a_j e_j + ρ_{K₂}` whose lowest `K`-type is trivial on
/// `K₂`, for the family member `member`.
///
/// For a block factor `K₁` the heights sit on its coordinates in order and
/// must strictly decrease; for the `SU(2)` of the highest root a single
/// height multiplies `α_max/2`; for a central `K₁` a single height
/// multiplies the unit generator of the center.
pub fn construct_k2_trivial_parameter(pair: &PairData, member: usize, heights: &[i64]) -> Result<HCParameter> {
    let psi = &pair
        .family
        .get(member)
        .ok_or_else(|| Error::Parse(format!("family member {member} out of range")))?
        .system;
    let basis = pair.g.basis().clone();
    let split = pair.k1_split(psi)?;
    let rho_k2 = crate::weight::half_sum(
        &basis,
        split.k2_roots.iter().filter(|a| psi.contains(a)).collect::<Vec<_>>(),
    );
    let base = match &pair.k1 {
        K1Kind::Block { coords, .. } => {
            if heights.len() != coords.len() {
                return Err(Error::HeightsInsufficient(format!(
                    "expected {} heights, got {}",
                    coords.len(),
                    heights.len()
                )));
            }
            if heights.windows(2).any(|w| w[0] <= w[1]) {
                return Err(Error::HeightsInsufficient(format!("{heights:?} is not strictly decreasing")));
            }
            let mut w = Weight::zero(&basis);
            for (&c, &h) in coords.iter().zip(heights) {
                w = &w + &Weight::unit(&basis, c).scale(&Rat::int(h));
            }
            w
        }
        K1Kind::HighestRoot | K1Kind::Center => {
            let [h] = heights else {
                return Err(Error::HeightsInsufficient(format!("expected one height, got {heights:?}")));
            };
            let unit = match pair.k1 {
                K1Kind::HighestRoot => split
                    .k1_roots
                    .iter()
                    .find(|a| psi.contains(a))
                    .ok_or_else(|| Error::Consistency("K₁ has no positive root".into()))?
                    .scale(&Rat::half()),
                _ => {
                    // Noncompact positive roots all pair equally with the
                    // center; normalise that pairing to one.
                    let (v, _) = split.split(&psi.rho());
                    let beta = psi
                        .noncompact()
                        .into_iter()
                        .next()
                        .ok_or_else(|| Error::Consistency("no noncompact root".into()))?;
                    v.scale(&(&Rat::one() / &v.inner(&beta)))
                }
            };
            unit.scale(&Rat::int(*h))
        }
    };
    let lambda = &base + &rho_k2;
    let param = pair
        .validate_parameter(&lambda)
        .map_err(|e| Error::HeightsInsufficient(format!("{lambda}: {e}")))?;
    if param.member != member {
        return Err(Error::HeightsInsufficient(format!(
            "{lambda} lies in {} rather than {}",
            pair.family[param.member].name, pair.family[member].name
        )));
    }
    let lk = lowest_k_type(pair, &param)?;
    let expect = &rho_k2 + &central_shift(pair, &param)?;
    if lk.parts.1 != expect {
        return Err(Error::Consistency(format!(
            "lowest K-type of {lambda} has K₂-part {} instead of {expect}",
            lk.parts.1
        )));
    }
    Ok(param)
}
