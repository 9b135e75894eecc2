//! The duality route: compact branching on `K₂`, then Blattner on `H₀`.

use std::collections::BTreeMap;
use std::sync::Arc;

use super::blattner::{Blattner, BlattnerMode};
use super::compact::{compact_branch_at, CompactBranching};
use super::{BranchingResult, Method, Setup};
use crate::catalog::PairData;
use crate::distribution::TruncationWindow;
use crate::error::{Error, Result};
use crate::rational::Rat;
use crate::weight::Weight;

/// `(λ₁, compact branching of λ₂)` for the setup.
fn compact_part(s: &Setup) -> Result<(Weight, CompactBranching)> {
    let split = s.pair.k1_split(&s.param.chamber)?;
    let (l1, l2) = split.split(&s.param.lambda);
    let cb = compact_branch_at(&s.pair, &s.param.chamber, &split, &s.systems.xi, &l2)?;
    Ok((s.pair.q.apply(&l1), cb))
}

/// The `H₀`-parameters `q(λ₁) + ν₂′` with their compact multiplicities.
pub fn h0_parameters(s: &Setup) -> Result<Vec<(Weight, u64)>> {
    let (l1, cb) = compact_part(s)?;
    let psi = &s.systems.psi_h0;
    let mut out = Vec::new();
    for (nu, m) in cb.entries {
        let eta = &l1 + &nu;
        if !psi.is_dominant(&eta, true) {
            return Err(Error::Consistency(format!(
                "H₀-parameter {eta} is not strictly dominant for {}",
                psi.name()
            )));
        }
        out.push((eta, m));
    }
    Ok(out)
}

fn accumulate(
    s: &Setup,
    shift: &Weight,
    mode: BlattnerMode,
) -> Result<BTreeMap<Weight, u64>> {
    let b = Blattner::new(&s.systems.psi_h0, mode)?;
    let window = TruncationWindow::new(
        s.window.functional.clone(),
        &s.window.bound + &s.window.functional.inner(shift),
    );
    let mut out: BTreeMap<Weight, u64> = BTreeMap::new();
    for (eta, m) in h0_parameters(s)? {
        for (mu, c) in b.spectrum(&(&eta + shift), &window)? {
            *out.entry(&mu - shift).or_insert(0) += m * c;
        }
    }
    Ok(out)
}

/// Duality route on a prepared setup.
pub fn duality_setup(s: &Setup) -> Result<BranchingResult> {
    let zero = Weight::zero(s.pair.h0.basis());
    Ok(s.result(Method::Duality, 1, accumulate(s, &zero, BlattnerMode::Full)?))
}

/// Duality route with every `H₀`-parameter and `L`-type translated by
/// `ρ_n` of `Ψ_H`, and translated back. Agrees with [`duality_setup`]
/// exactly when Blattner multiplicities are invariant under that shift.
pub fn duality_shifted_setup(s: &Setup) -> Result<BranchingResult> {
    let shift = s.systems.psi_h.rho_n();
    Ok(s.result(Method::Duality, 1, accumulate(s, &shift, BlattnerMode::Full)?))
}

/// Spectrum of `π_λ` restricted to `H` inside `⟨ξ, μ − q(λ)⟩ ≤ bound`.
pub fn duality_branch(pair: &Arc<PairData>, lambda: &Weight, bound: &Rat) -> Result<BranchingResult> {
    duality_setup(&Setup::new(pair, lambda, bound)?)
}

/// [`duality_branch`] computed through the shifted parameters.
pub fn duality_branch_shifted(pair: &Arc<PairData>, lambda: &Weight, bound: &Rat) -> Result<BranchingResult> {
    duality_shifted_setup(&Setup::new(pair, lambda, bound)?)
}
