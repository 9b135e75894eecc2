//! Blattner's formula for the `L`-types of a discrete series of `H₀`.

use std::collections::BTreeMap;
use std::sync::Arc;

use rayon::prelude::*;

use super::cone::ConeQuery;
use crate::distribution::TruncationWindow;
use crate::error::{Error, Result};
use crate::partition::{PartitionCounter, WeightMultiset};
use crate::roots::PositiveSystem;
use crate::weight::Weight;
use crate::weyl::{WeylGroup, DEFAULT_CEILING};

/// Which Weyl group the alternating sum runs over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BlattnerMode {
    /// The full Weyl group of `L`.
    Full,
    /// The subgroup generated by reflections in the compact simple roots.
    Restricted,
}

/// Blattner's formula for one colored positive system.
///
/// For an `H₀`-parameter `η` and an `L`-infinitesimal character `μ`,
/// `B(η, μ) = Σ_s ε(s) Q(sμ − η − ρ_n)` where `Q` counts partitions into
/// noncompact positive roots and `s` runs over the chosen group.
#[derive(Clone, Debug)]
pub struct Blattner {
    psi: PositiveSystem,
    mode: BlattnerMode,
    group: Arc<WeylGroup>,
    rho_n: Weight,
    noncompact: Vec<Weight>,
    counter: PartitionCounter,
}

impl Blattner {
    pub fn new(psi: &PositiveSystem, mode: BlattnerMode) -> Result<Blattner> {
        let basis = psi.basis().clone();
        let gens = match mode {
            BlattnerMode::Full => psi.compact(),
            BlattnerMode::Restricted => psi.compact_simple(),
        };
        let group = WeylGroup::generate("W(L)", &basis, &gens, DEFAULT_CEILING)?;
        let noncompact = psi.noncompact();
        let rho_n = psi.rho_n();
        let counter = PartitionCounter::new(
            &basis,
            &WeightMultiset::from_weights(noncompact.iter().cloned()),
            &psi.rho(),
            &[&rho_n],
        )?;
        Ok(Blattner {
            psi: psi.clone(),
            mode,
            group,
            rho_n,
            noncompact,
            counter,
        })
    }

    pub fn system(&self) -> &PositiveSystem {
        &self.psi
    }

    pub fn mode(&self) -> BlattnerMode {
        self.mode
    }

    /// `ρ_n` of the system.
    pub fn rho_n(&self) -> &Weight {
        &self.rho_n
    }

    /// Checks that `eta` is a (possibly limit) parameter: dominant for the
    /// system and strictly dominant on compact roots.
    pub fn check_parameter(&self, eta: &Weight) -> Result<()> {
        if !self.psi.is_dominant(eta, false) || !self.psi.is_compact_dominant(eta, true) {
            return Err(Error::NotDominant(format!("{eta} for {}", self.psi.name())));
        }
        Ok(())
    }

    fn value(&self, counter: &mut PartitionCounter, eta: &Weight, mu: &Weight) -> Result<u64> {
        let base = eta + &self.rho_n;
        let mut total: i128 = 0;
        for e in self.group.elements() {
            let t = &self.group.apply(e, mu) - &base;
            total += i128::from(e.sign()) * counter.count(&t) as i128;
        }
        if total < 0 {
            return Err(Error::NegativeMultiplicity {
                at: mu.to_string(),
                value: total,
            });
        }
        Ok(total as u64)
    }

    /// Multiplicity of the `L`-type with infinitesimal character `mu`.
    pub fn multiplicity(&self, eta: &Weight, mu: &Weight) -> Result<u64> {
        self.check_parameter(eta)?;
        if !self.psi.is_compact_dominant(mu, true) {
            return Err(Error::NotDominant(format!("{mu} for the compact roots of {}", self.psi.name())));
        }
        let mut counter = self.counter.clone();
        self.value(&mut counter, eta, mu)
    }

    /// Candidates `η + ρ_n + ℕ·Ψ_n` that are strictly dominant for the
    /// compact roots and lie in the window.
    pub fn candidates(&self, eta: &Weight, window: &TruncationWindow) -> Result<Vec<Weight>> {
        let apex = eta + &self.rho_n;
        let compact = self.psi.compact();
        ConeQuery {
            apexes: std::slice::from_ref(&apex),
            gens: &self.noncompact,
            walk: &window.functional,
            window: &window.functional,
            bound: &window.bound,
            dominant: &compact,
        }
        .points()
    }

    /// All `L`-types with nonzero multiplicity inside the window.
    pub fn spectrum(&self, eta: &Weight, window: &TruncationWindow) -> Result<BTreeMap<Weight, u64>> {
        self.check_parameter(eta)?;
        for g in &self.noncompact {
            if !window.functional.inner(g).is_positive() {
                return Err(Error::WindowIncompatible(format!(
                    "{} is not positive on the noncompact root {g}",
                    window.functional
                )));
            }
        }
        let cands = self.candidates(eta, window)?;
        let values: Vec<Result<u64>> = cands
            .par_iter()
            .map_init(|| self.counter.clone(), |c, mu| self.value(c, eta, mu))
            .collect();
        let mut out = BTreeMap::new();
        for (mu, v) in cands.into_iter().zip(values) {
            let v = v?;
            if v > 0 {
                out.insert(mu, v);
            }
        }
        Ok(out)
    }
}

/// One-shot Blattner multiplicity.
pub fn blattner(psi: &PositiveSystem, eta: &Weight, mu: &Weight, mode: BlattnerMode) -> Result<u64> {
    Blattner::new(psi, mode)?.multiplicity(eta, mu)
}

/// One-shot Blattner spectrum.
pub fn blattner_spectrum(
    psi: &PositiveSystem,
    eta: &Weight,
    window: &TruncationWindow,
    mode: BlattnerMode,
) -> Result<BTreeMap<Weight, u64>> {
    Blattner::new(psi, mode)?.spectrum(eta, window)
}
