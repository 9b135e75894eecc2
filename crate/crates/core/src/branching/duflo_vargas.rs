//! The partition-function formula `m(λ,μ) = ± Σ_{w∈W_K} ε(w) p_{S_w}(μ − q(wλ))`.

use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;

use super::compact::k_over_l_positive;
use super::cone::ConeQuery;
use super::{BranchingResult, Method, Setup};
use crate::error::{Error, Result};
use crate::partition::{PartitionCounter, WeightMultiset};
use crate::weight::Weight;
use crate::weyl::{WeylGroup, DEFAULT_CEILING};

/// Terms of the alternating sum sharing one multiset `S_w`.
struct Group {
    gens: WeightMultiset,
    /// `q(wλ) + ½ΣS_w` with the sign `ε(w)`, so that the shifted partition
    /// count of `μ − q(wλ)` is the plain count of `μ − apex`.
    apexes: Vec<(Weight, i128)>,
    walk: Weight,
}

/// Evaluates the formula at every strictly `L`-dominant point of the window
/// reachable from some term, then fixes the global sign on the lowest point.
pub fn duflo_vargas_setup(s: &Setup) -> Result<BranchingResult> {
    let pair = &s.pair;
    let basis_u = pair.h0.basis().clone();
    let xi = &s.systems.xi;
    let wk = WeylGroup::generate("W(K)", pair.g.basis(), &pair.g.compact_roots(), DEFAULT_CEILING)?;
    let wl = WeylGroup::generate("W(L)", &basis_u, &pair.l.vectors(), DEFAULT_CEILING)?;
    let xi_orbit = wl.orbit(xi);
    let dk = k_over_l_positive(pair, xi);
    let psi_n = s.param.chamber.noncompact();

    let terms: Vec<(Vec<(Weight, u32)>, WeightMultiset, Weight, i128)> = wk
        .elements()
        .par_iter()
        .map(|e| -> Result<_> {
            let a = WeightMultiset::from_weights(psi_n.iter().map(|b| pair.q.apply(&wk.apply(e, b))));
            let common = a.intersection(&pair.h_over_l);
            let gens = a.difference(&common)?.union(&dk);
            let apex = &pair.q.apply(&wk.apply(e, &s.param.lambda)) + &gens.half_sum(&basis_u);
            let key = gens.items().map(|(w, c)| (w.clone(), c)).collect();
            Ok((key, gens, apex, i128::from(e.sign())))
        })
        .collect::<Result<_>>()?;
    let mut by_key: BTreeMap<Vec<(Weight, u32)>, (WeightMultiset, Vec<(Weight, i128)>)> = BTreeMap::new();
    for (key, gens, apex, sign) in terms {
        by_key.entry(key).or_insert_with(|| (gens, Vec::new())).1.push((apex, sign));
    }
    let groups: Vec<Group> = by_key
        .into_values()
        .map(|(gens, apexes)| {
            let list = gens.expand();
            let walk = xi_orbit
                .iter()
                .find(|f| list.iter().all(|g| f.inner(g).is_positive()))
                .cloned()
                .ok_or_else(|| {
                    Error::Consistency(format!("no W(L)-conjugate of {xi} is positive on a Duflo–Vargas multiset"))
                })?;
            Ok(Group { gens, apexes, walk })
        })
        .collect::<Result<_>>()?;

    let dominant = pair.l.positive_by("l+", xi).vectors();
    let bound = &s.window.bound;
    let mut cands: BTreeSet<(crate::Rat, Weight)> = BTreeSet::new();
    let found: Vec<Vec<Weight>> = groups
        .par_iter()
        .map(|g| {
            let apexes: Vec<Weight> = g.apexes.iter().map(|(a, _)| a.clone()).collect();
            ConeQuery {
                apexes: &apexes,
                gens: &g.gens.expand(),
                walk: &g.walk,
                window: xi,
                bound,
                dominant: &dominant,
            }
            .points()
        })
        .collect::<Result<_>>()?;
    for w in found.into_iter().flatten() {
        cands.insert((xi.inner(&w), w));
    }
    let cands: Vec<Weight> = cands.into_iter().map(|(_, w)| w).collect();

    let totals = groups
        .par_iter()
        .map(|g| -> Result<Vec<i128>> {
            let mut counter = PartitionCounter::new(&basis_u, &g.gens, &g.walk, &[])?;
            Ok(cands
                .iter()
                .map(|mu| {
                    g.apexes
                        .iter()
                        .map(|(a, e)| e * counter.count(&(mu - a)) as i128)
                        .sum()
                })
                .collect())
        })
        .try_reduce(
            || vec![0i128; cands.len()],
            |a, b| Ok(a.iter().zip(&b).map(|(x, y)| x + y).collect()),
        )?;

    let sign: i128 = match totals.iter().find(|&&v| v != 0) {
        Some(&v) if v < 0 => -1,
        _ => 1,
    };
    let mut entries = BTreeMap::new();
    for (mu, v) in cands.into_iter().zip(totals) {
        let v = sign * v;
        if v < 0 {
            return Err(Error::NegativeMultiplicity {
                at: mu.to_string(),
                value: v,
            });
        }
        if v > 0 {
            entries.insert(mu, v as u64);
        }
    }
    Ok(s.result(Method::DufloVargas, sign as i32, entries))
}
