//! Pinned reproduction runs with closed-form expectations.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::branching::{
    blattner_spectrum, construct_k2_trivial_parameter, duality_branch, BlattnerMode, BranchingResult,
};
use crate::catalog::{Catalog, PairData};
use crate::distribution::TruncationWindow;
use crate::error::{Error, Result};
use crate::rational::Rat;
use crate::roots::RootSystem;
use crate::weight::Weight;

/// The available runs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Example {
    /// Quaternionic ladder of `sp(1,3)` restricted to `sp(1,1)+sp(2)`.
    I,
    /// `Spin(4,2)` restricted to `Spin(4,1)`: multiplicity one.
    II,
    /// Quaternionic ladder of `e6(2)` restricted to `f4(4)`.
    III,
    /// Interlacing for `so(4,3)` restricted to `so(4,2)`.
    IV,
    /// `L`-types of quaternionic discrete series of `Sp(1,2)`.
    Sp1bTypes,
}

impl Example {
    pub const ALL: [Example; 5] = [Example::I, Example::II, Example::III, Example::IV, Example::Sp1bTypes];

    pub fn name(self) -> &'static str {
        match self {
            Example::I => "I",
            Example::II => "II",
            Example::III => "III",
            Example::IV => "IV",
            Example::Sp1bTypes => "sp1b_types",
        }
    }
}

impl std::str::FromStr for Example {
    type Err = Error;

    fn from_str(s: &str) -> Result<Example> {
        Example::ALL
            .into_iter()
            .find(|e| e.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Parse(format!("unknown example {s:?}")))
    }
}

/// Outcome of a run.
#[derive(Clone, Debug)]
pub struct VerifyReport {
    pub example: Example,
    /// Human-readable description of the instance.
    pub instance: String,
    /// One line per compared entry.
    pub lines: Vec<String>,
    /// The first disagreement, if any.
    pub mismatch: Option<String>,
    /// The branching result, when the run computes one.
    pub result: Option<BranchingResult>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.mismatch.is_none()
    }

    fn compare(example: Example, instance: String, expected: &BTreeMap<Weight, u64>, got: &BTreeMap<Weight, u64>) -> VerifyReport {
        let mut keys: Vec<&Weight> = expected.keys().chain(got.keys()).collect();
        keys.sort();
        keys.dedup();
        let mut lines = Vec::new();
        let mut mismatch = None;
        for k in keys {
            let (e, g) = (expected.get(k).copied().unwrap_or(0), got.get(k).copied().unwrap_or(0));
            let ok = e == g;
            lines.push(format!("{k}\texpected {e}\tgot {g}\t{}", if ok { "ok" } else { "MISMATCH" }));
            if !ok && mismatch.is_none() {
                mismatch = Some(format!("{k}: expected {e}, got {g}"));
            }
        }
        if expected.is_empty() && mismatch.is_none() {
            mismatch = Some("the expected spectrum is empty".into());
        }
        VerifyReport {
            example,
            instance,
            lines,
            mismatch,
            result: None,
        }
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "example {}: {}", self.example.name(), self.instance)?;
        for l in &self.lines {
            writeln!(f, "  {l}")?;
        }
        match &self.mismatch {
            None => writeln!(f, "PASS"),
            Some(m) => writeln!(f, "FAIL: {m}"),
        }
    }
}

/// Implemented data of a catalog pair.
pub fn pair_data(catalog: &Catalog, g: &str, h: &str) -> Result<Arc<PairData>> {
    catalog
        .lookup(g, h)?
        .data
        .ok_or_else(|| Error::Consistency(format!("{g}/{h} has no data")))
}

pub fn run(example: Example) -> Result<VerifyReport> {
    let cat = Catalog::builtin();
    match example {
        Example::I => example_i(&cat, 5, 15),
        Example::II => example_ii(&cat),
        Example::III => example_iii(&cat, 21, 32),
        Example::IV => example_iv(&cat),
        Example::Sp1bTypes => sp1b_types(&cat, 2, &[4, 5], 12),
    }
}

/// `λ_n = nδ + ρ_{Sp(3)}` on `sp(1,3)`; the `H`-spectrum is the ladder
/// `(n+2+m)δ + mε₂ + ρ_{Sp(1)} + ρ_{Sp(2)}`, `Sp(1)` on `ε₁` and `Sp(2)`
/// on `ε₂, ε₃`.
pub fn example_i(cat: &Catalog, n: i64, bound: i64) -> Result<VerifyReport> {
    let d = pair_data(cat, "sp(1,3)", "sp(1,1)+sp(2)")?;
    let param = construct_k2_trivial_parameter(&d, 0, &[n])?;
    let r = duality_branch(&d, &param.lambda, &Rat::int(bound))?;
    let u = d.h.basis();
    let mut expected = BTreeMap::new();
    for m in 0.. {
        let mu = Weight::from_ints(u, &[1, 2 + m, 1, n + 2 + m]);
        if !r.window.contains(&mu) {
            break;
        }
        expected.insert(mu, 1);
    }
    let mut rep = VerifyReport::compare(
        Example::I,
        format!("{} λ = {} window {bound}", d.id(), param.lambda),
        &expected,
        &r.entries,
    );
    rep.result = Some(r);
    Ok(rep)
}

/// `Spin(4,2) ↓ Spin(4,1)` at `λ = (3,2|1)`: every multiplicity is one.
pub fn example_ii(cat: &Catalog) -> Result<VerifyReport> {
    let d = pair_data(cat, "so(4,2)", "so(4,1)")?;
    let lambda = Weight::parse("3,2|1", d.g.basis())?;
    let r = duality_branch(&d, &lambda, &Rat::int(12))?;
    let expected: BTreeMap<Weight, u64> = r.entries.keys().map(|k| (k.clone(), 1)).collect();
    let mut rep = VerifyReport::compare(
        Example::II,
        format!("{} λ = {lambda} window 12, multiplicity one", d.id()),
        &expected,
        &r.entries,
    );
    rep.result = Some(r);
    Ok(rep)
}

/// Quaternionic `λ = (n−10)α_max/2 + ρ_{SU(6)}` on `e6(2)`; the
/// `F4(4)`-spectrum is `(n−7+m)α_max/2 + mβ/2 + ρ_{Sp(3)}` with `β` the
/// highest root of `Sp(3)`.
pub fn example_iii(cat: &Catalog, n: i64, bound: i64) -> Result<VerifyReport> {
    let d = pair_data(cat, "e6(2)", "f4(4)")?;
    let param = construct_k2_trivial_parameter(&d, 0, &[n - 10])?;
    let r = duality_branch(&d, &param.lambda, &Rat::int(bound))?;
    let split = d.k1_split(&param.chamber)?;
    let amax = split
        .k1_roots
        .iter()
        .find(|a| param.chamber.contains(a))
        .map(|a| d.q.apply(a))
        .ok_or_else(|| Error::Consistency("K₁ has no positive root".into()))?;
    let xi = &r.window.functional;
    let sp3 = RootSystem::compact("sp3", d.h.basis(), split.l_k2_roots.clone())?.positive_by("sp3+", xi);
    let [beta] = &sp3.highest_roots()[..] else {
        return Err(Error::Consistency("L ∩ K₂ is not simple".into()));
    };
    let rho = sp3.rho();
    let mut expected = BTreeMap::new();
    for m in 0i64.. {
        let mu = &(&amax.scale(&Rat::frac(n - 7 + m, 2)) + &beta.scale(&Rat::frac(m, 2))) + &rho;
        if !r.window.contains(&mu) {
            break;
        }
        expected.insert(mu, 1);
    }
    let mut rep = VerifyReport::compare(
        Example::III,
        format!("{} n = {n}, λ = {} window {bound}", d.id(), param.lambda),
        &expected,
        &r.entries,
    );
    rep.result = Some(r);
    Ok(rep)
}

/// `so(4,3) ↓ so(4,2)` at `λ = (7/2,3/2|1/2)`: `μ` occurs iff
/// `μ₁ > λ₁ > μ₂ > λ₂` and `λ₃ > |μ₃|`, with multiplicity one.
pub fn example_iv(cat: &Catalog) -> Result<VerifyReport> {
    let d = pair_data(cat, "so(4,3)", "so(4,2)")?;
    let lambda = Weight::parse("7/2,3/2|1/2", d.g.basis())?;
    let r = duality_branch(&d, &lambda, &Rat::int(12))?;
    let l = lambda.coords();
    let u = d.h.basis();
    let mut expected = BTreeMap::new();
    let top = r.window.bound.floor();
    let top: i64 = top.try_into().unwrap_or(i64::MAX).min(64);
    for a in -top..=top {
        for b in -top..=top {
            let (x0, x1) = (Rat::int(a), Rat::int(b));
            if !(x0 > l[0] && l[0] > x1 && x1 > l[1]) {
                continue;
            }
            for c in -top..=top {
                if l[2] > Rat::int(c).abs() {
                    let mu = Weight::from_ints(u, &[a, b, c]);
                    if r.window.contains(&mu) {
                        expected.insert(mu, 1);
                    }
                }
            }
        }
    }
    let mut rep = VerifyReport::compare(
        Example::IV,
        format!("{} λ = {lambda} window 12, interlacing", d.id()),
        &expected,
        &r.entries,
    );
    rep.result = Some(r);
    Ok(rep)
}

/// `L`-types of the `Sp(1,b)` discrete series whose lowest `L`-type is
/// `S^{n−1}(C²) ⊠ C`: exactly `S^{n−1+m}(C²) ⊠ S^m(C^{2b})`, once each.
/// The window is `⟨ρ, ν − ν₀⟩ ≤ bound` from the lowest type `ν₀`.
pub fn sp1b_types(cat: &Catalog, b: i64, ns: &[i64], bound: i64) -> Result<VerifyReport> {
    let d = pair_data(cat, &format!("sp(1,{b})"), &format!("sp(1,{})+sp(1)", b - 1))?;
    let psi = &d.family[0].system;
    let basis = d.g.basis();
    let rho = psi.rho();
    let mut expected = BTreeMap::new();
    let mut got = BTreeMap::new();
    let types = |n: i64, m: i64| {
        let mut v: Vec<i64> = (1..=b).rev().collect();
        v[0] += m;
        v.push(n + m);
        Weight::from_ints(basis, &v)
    };
    for &n in ns {
        let nu0 = types(n, 0);
        let eta = &nu0 - &psi.rho_n();
        let window = TruncationWindow::new(rho.clone(), &rho.inner(&nu0) + &Rat::int(bound));
        for (mu, c) in blattner_spectrum(psi, &eta, &window, BlattnerMode::Full)? {
            got.insert((n, mu), c);
        }
        for m in 0.. {
            let mu = types(n, m);
            if !window.contains(&mu) {
                break;
            }
            expected.insert((n, mu), 1);
        }
    }
    let mut lines = Vec::new();
    let mut mismatch = None;
    let mut keys: Vec<&(i64, Weight)> = expected.keys().chain(got.keys()).collect();
    keys.sort();
    keys.dedup();
    for k in keys {
        let (e, g) = (expected.get(k).copied().unwrap_or(0), got.get(k).copied().unwrap_or(0));
        let ok = e == g;
        lines.push(format!("n={} {}\texpected {e}\tgot {g}\t{}", k.0, k.1, if ok { "ok" } else { "MISMATCH" }));
        if !ok && mismatch.is_none() {
            mismatch = Some(format!("n={} {}: expected {e}, got {g}", k.0, k.1));
        }
    }
    Ok(VerifyReport {
        example: Example::Sp1bTypes,
        instance: format!("Sp(1,{b}) with n in {ns:?}, window {bound}"),
        lines,
        mismatch,
        result: None,
    })
}
