//! Assembly of [`PairData`] from an involution of a colored root system.
//!
//! For an inner involution `σ` acts trivially on `t`, and a root lies in `h`
//! exactly when its pairing with the grading vector `v_σ` is even. For an
//! outer involution `σ` moves `t`; a fixed root contributes to `h`, and each
//! pair `{α, σα}` contributes one copy of `q(α)` to `h` and one to `h₀`
//! (compact pairs to `l` and to `k/l`).

use crate::catalog::lie;
use crate::catalog::{K1Kind, PairData, PsiMember, RestrictionMap};
use crate::error::{Error, Result};
use crate::linalg;
use crate::partition::WeightMultiset;
use crate::rational::Rat;
use crate::roots::{ColoredRoot, RootSystem};
use crate::weight::Weight;

/// The action of `σ` on `t`.
#[derive(Clone, Debug)]
pub(crate) enum Involution {
    /// Identity on `t`, with grading vector `v_σ`.
    Inner(Weight),
    /// A matrix on `t`; row `i` gives the `i`-th coordinate of `σx`.
    Outer(Vec<Vec<Rat>>),
}

/// Input of [`assemble`].
pub(crate) struct FoldSpec {
    pub g_name: String,
    pub h_name: String,
    pub h0_name: String,
    pub g: RootSystem,
    pub involution: Involution,
    pub q: RestrictionMap,
    pub family: Vec<PsiMember>,
    pub k1: K1Kind,
}

pub(crate) fn apply_matrix(m: &[Vec<Rat>], w: &Weight) -> Weight {
    Weight::new(w.basis(), m.iter().map(|r| linalg::dot(r, w.coords())).collect())
}

pub(crate) fn assemble(fold: FoldSpec) -> Result<PairData> {
    let u = fold.q.target().clone();
    let mut l = Vec::new();
    let mut h_nc = Vec::new();
    let mut h0_nc = Vec::new();
    let mut k_over_l = WeightMultiset::new();
    let equal_rank = matches!(fold.involution, Involution::Inner(_));
    for r in fold.g.roots() {
        let a = &r.vector;
        match &fold.involution {
            Involution::Inner(v) => {
                let even = lie::is_even(a, v)?;
                match (r.compact, even) {
                    (true, true) => l.push(a.clone()),
                    (true, false) => k_over_l.insert(a.clone(), 1),
                    (false, true) => h_nc.push(a.clone()),
                    (false, false) => h0_nc.push(a.clone()),
                }
            }
            Involution::Outer(sigma) => {
                let s = apply_matrix(sigma, a);
                let image = fold.g.get(&s).ok_or_else(|| {
                    Error::Consistency(format!("{}: σ maps the root {a} to {s}", fold.g_name))
                })?;
                if image.compact != r.compact {
                    return Err(Error::Consistency(format!(
                        "{}: σ does not commute with θ at {a}",
                        fold.g_name
                    )));
                }
                let x = fold.q.apply(a);
                if s == *a {
                    if r.compact {
                        l.push(x);
                    } else {
                        h_nc.push(x);
                    }
                } else if *a < s {
                    if fold.q.apply(&s) != x {
                        return Err(Error::Consistency(format!(
                            "{}: q separates {a} and σ{a}",
                            fold.g_name
                        )));
                    }
                    if r.compact {
                        l.push(x.clone());
                        k_over_l.insert(x, 1);
                    } else {
                        h_nc.push(x.clone());
                        h0_nc.push(x);
                    }
                }
            }
        }
    }
    let colored = |xs: &[Weight], compact: bool| -> Vec<ColoredRoot> {
        xs.iter().map(|x| ColoredRoot::new(x.clone(), compact)).collect()
    };
    let l_sys = RootSystem::new("l", &u, colored(&l, true))?;
    let h = RootSystem::new(&fold.h_name, &u, [colored(&l, true), colored(&h_nc, false)].concat())?;
    let h0 = RootSystem::new(&fold.h0_name, &u, [colored(&l, true), colored(&h0_nc, false)].concat())?;
    let data = PairData {
        g_name: fold.g_name,
        h_name: fold.h_name,
        h0_name: fold.h0_name,
        g: fold.g,
        h,
        h0,
        l: l_sys,
        h_over_l: WeightMultiset::from_weights(h_nc),
        h0_over_l: WeightMultiset::from_weights(h0_nc),
        k_over_l,
        q: fold.q,
        equal_rank,
        family: fold.family,
        k1: fold.k1,
    };
    for m in &data.family {
        data.k1_split(&m.system)?;
    }
    Ok(data)
}
