//! Finite formal sums of point masses with a truncation window.
//!
//! A [`WeightDistribution`] stores `Σ c_μ δ_μ` for the weights `μ` whose
//! height `(ξ, μ)` is at most the window bound; every stored coefficient is
//! exact. Each distribution also records a floor, a lower bound for the
//! height of its full (possibly infinite) support. The floor is what makes
//! convolution sound: the product is exact up to
//! `min(bound_a + floor_b, bound_b + floor_a)`.
//!
//! [`heaviside`] builds `y_S = y_{γ1} ⋆ ⋯ ⋆ y_{γr}` with
//! `y_γ = Σ_{n≥0} δ_{γ/2 + nγ}`, so its coefficient at `μ` is the number of
//! solutions of `Σ (n_i + 1/2) γ_i = μ`: the partition count shifted by half
//! the multiset sum. This is deliberately a separate function from the
//! unshifted [`kostant_partition`](crate::partition::kostant_partition).
//!
//! ```
//! use branchkit::distribution::{heaviside, TruncationWindow};
//! use branchkit::partition::WeightMultiset;
//! use branchkit::rational::Rat;
//! use branchkit::weight::{Basis, Weight};
//!
//! let b = Basis::new(1, 0, "line");
//! let g = Weight::from_ints(&b, &[1]);
//! let window = TruncationWindow::new(g.clone(), Rat::int(4));
//! let y = heaviside(&WeightMultiset::from_weights(vec![g.clone(), g.clone()]), &window).unwrap();
//! assert_eq!(y.coefficient(&g), 1);
//! assert_eq!(y.coefficient(&g.scale(&Rat::int(2))), 2);
//! ```

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::lattice::{iaxpy, Frame, IVec, IntFunctional};
use crate::partition::WeightMultiset;
use crate::rational::Rat;
use crate::roots::PositiveSystem;
use crate::weight::{Basis, Weight};

/// A functional and an upper bound on heights.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncationWindow {
    pub functional: Weight,
    pub bound: Rat,
}

impl TruncationWindow {
    pub fn new(functional: Weight, bound: Rat) -> TruncationWindow {
        TruncationWindow { functional, bound }
    }

    /// `(ξ, μ)`.
    pub fn height(&self, mu: &Weight) -> Rat {
        self.functional.inner(mu)
    }

    /// True iff `(ξ, μ) ≤ bound`.
    pub fn contains(&self, mu: &Weight) -> bool {
        self.height(mu) <= self.bound
    }
}

/// A truncated formal sum of point masses with integer coefficients.
#[derive(Clone, Debug)]
pub struct WeightDistribution {
    frame: Frame,
    xi: Weight,
    xi_int: IntFunctional,
    /// Exact up to this height; `None` means exact everywhere.
    bound: Option<Rat>,
    /// Lower bound for the height of the untruncated support.
    floor: Rat,
    coeffs: BTreeMap<IVec, i128>,
}

impl WeightDistribution {
    fn empty(frame: Frame, xi: &Weight, bound: Option<Rat>, floor: Rat) -> Result<WeightDistribution> {
        Ok(WeightDistribution {
            frame,
            xi: xi.clone(),
            xi_int: IntFunctional::new(xi)?,
            bound,
            floor,
            coeffs: BTreeMap::new(),
        })
    }

    /// The point mass `δ_λ`, exact everywhere.
    pub fn delta(lam: &Weight, xi: &Weight) -> Result<WeightDistribution> {
        let frame = Frame::covering(lam.basis(), [lam])?;
        let mut d = WeightDistribution::empty(frame, xi, None, xi.inner(lam))?;
        let v = d.frame.to_ivec(lam)?;
        d.coeffs.insert(v, 1);
        Ok(d)
    }

    /// A finite sum `Σ c_i δ_{w_i}`, exact everywhere. Repeated points add up.
    pub fn from_points(points: &[(Weight, i128)], xi: &Weight) -> Result<WeightDistribution> {
        let basis = xi.basis().clone();
        let frame = Frame::covering(&basis, points.iter().map(|(w, _)| w))?;
        let floor = points
            .iter()
            .map(|(w, _)| xi.inner(w))
            .min()
            .unwrap_or_else(Rat::zero);
        let mut d = WeightDistribution::empty(frame, xi, None, floor)?;
        for (w, c) in points {
            let v = d.frame.to_ivec(w)?;
            *d.coeffs.entry(v).or_insert(0) += c;
        }
        d.coeffs.retain(|_, c| *c != 0);
        Ok(d)
    }

    /// The basis of the weights.
    pub fn basis(&self) -> &Arc<Basis> {
        self.frame.basis()
    }

    /// The window functional.
    pub fn functional(&self) -> &Weight {
        &self.xi
    }

    /// Height bound below which coefficients are exact, if any.
    pub fn bound(&self) -> Option<&Rat> {
        self.bound.as_ref()
    }

    /// Lower bound for the height of the untruncated support.
    pub fn floor(&self) -> &Rat {
        &self.floor
    }

    /// Number of stored nonzero coefficients.
    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient at `mu` (zero when absent). Only meaningful inside the window.
    pub fn coefficient(&self, mu: &Weight) -> i128 {
        match self.frame.to_ivec(mu) {
            Ok(v) => self.coeffs.get(&v).copied().unwrap_or(0),
            Err(_) => 0,
        }
    }

    /// Stored `(weight, coefficient)` pairs sorted by height, then
    /// lexicographically.
    pub fn entries(&self) -> Vec<(Weight, i128)> {
        let mut v: Vec<(i64, Weight, i128)> = self
            .coeffs
            .iter()
            .map(|(k, &c)| (self.xi_int.height(k), self.frame.to_weight(k), c))
            .collect();
        v.sort_by(|a, b| a.0.cmp(&b.0).then_with(|| a.1.cmp(&b.1)));
        v.into_iter().map(|(_, w, c)| (w, c)).collect()
    }

    /// Debug dump: one `weight<TAB>coefficient` line per entry.
    pub fn dump(&self) -> String {
        let mut s = String::new();
        for (w, c) in self.entries() {
            let _ = writeln!(s, "{w}\t{c}");
        }
        s
    }

    /// Translate by `v`; exactness region moves along.
    pub fn translate(&self, v: &Weight) -> Result<WeightDistribution> {
        let frame = rescaled_frame(&self.frame, [v])?;
        let shift = frame.to_ivec(v)?;
        let h = self.xi.inner(v);
        let mut out = WeightDistribution::empty(
            frame.clone(),
            &self.xi,
            self.bound.as_ref().map(|b| b + &h),
            &self.floor + &h,
        )?;
        let k = frame.scale() / self.frame.scale();
        for (p, &c) in &self.coeffs {
            let q: IVec = p.iter().zip(&shift).map(|(x, s)| x * k + s).collect();
            out.coeffs.insert(q, c);
        }
        Ok(out)
    }

    /// Lowers the window bound, dropping entries above it.
    pub fn truncate(&self, bound: &Rat) -> WeightDistribution {
        let mut out = self.clone();
        let new = match &self.bound {
            Some(b) if b < bound => b.clone(),
            _ => bound.clone(),
        };
        let t = self.xi_int.threshold(&new, self.frame.scale());
        out.coeffs.retain(|k, _| self.xi_int.height(k) <= t);
        out.bound = Some(new);
        out
    }

    /// Convolution; errors when the windows use different functionals or the
    /// exact region of the product is empty.
    pub fn convolve(&self, other: &WeightDistribution) -> Result<WeightDistribution> {
        if self.xi != other.xi {
            return Err(Error::WindowIncompatible(format!(
                "functionals {} and {} differ",
                self.xi, other.xi
            )));
        }
        let bound = match (&self.bound, &other.bound) {
            (None, None) => None,
            (Some(a), None) => Some(a + &other.floor),
            (None, Some(b)) => Some(b + &self.floor),
            (Some(a), Some(b)) => Some(std::cmp::min(a + &other.floor, b + &self.floor)),
        };
        let floor = &self.floor + &other.floor;
        if let Some(b) = &bound {
            if b < &floor {
                return Err(Error::WindowUnderflow);
            }
        }
        let scale = num_integer::lcm(self.frame.scale(), other.frame.scale());
        let frame = Frame::new(self.frame.basis(), scale);
        let mut out = WeightDistribution::empty(frame, &self.xi, bound.clone(), floor)?;
        let ka = scale / self.frame.scale();
        let kb = scale / other.frame.scale();
        let t = bound.as_ref().map(|b| out.xi_int.threshold(b, scale));
        for (p, &c) in &self.coeffs {
            for (q, &d) in &other.coeffs {
                let r: IVec = p.iter().zip(q).map(|(x, y)| x * ka + y * kb).collect();
                if let Some(t) = t {
                    if out.xi_int.height(&r) > t {
                        continue;
                    }
                }
                *out.coeffs.entry(r).or_insert(0) += c * d;
            }
        }
        out.coeffs.retain(|_, c| *c != 0);
        Ok(out)
    }
}

/// A frame covering the old frame and the given weights.
fn rescaled_frame<'a>(old: &Frame, extra: impl IntoIterator<Item = &'a Weight>) -> Result<Frame> {
    let f = Frame::covering(old.basis(), extra)?;
    Ok(Frame::new(old.basis(), num_integer::lcm(f.scale(), old.scale())))
}

/// The discrete Heaviside distribution `y_S` inside `window`.
pub fn heaviside(s: &WeightMultiset, window: &TruncationWindow) -> Result<WeightDistribution> {
    let xi = &window.functional;
    let gens = s.expand();
    for g in &gens {
        if !xi.inner(g).is_positive() {
            return Err(Error::WindowIncompatible(g.to_string()));
        }
    }
    let basis = xi.basis().clone();
    let start = s.half_sum(&basis);
    let frame = Frame::covering(&basis, gens.iter().chain([&start]))?;
    let floor = xi.inner(&start);
    let mut out = WeightDistribution::empty(frame, xi, Some(window.bound.clone()), floor)?;
    let t = out.xi_int.threshold(&window.bound, out.frame.scale());
    let start_v = out.frame.to_ivec(&start)?;
    if out.xi_int.height(&start_v) > t {
        return Ok(out);
    }
    let mut cur: BTreeMap<IVec, i128> = BTreeMap::new();
    cur.insert(start_v, 1);
    for g in &gens {
        let gv = out.frame.to_ivec(g)?;
        let gh = out.xi_int.height(&gv);
        let mut next: BTreeMap<IVec, i128> = BTreeMap::new();
        for (p, &c) in &cur {
            let mut q = p.clone();
            let mut h = out.xi_int.height(&q);
            while h <= t {
                *next.entry(q.clone()).or_insert(0) += c;
                q = iaxpy(&q, 1, &gv);
                h += gh;
            }
        }
        cur = next;
    }
    out.coeffs = cur;
    Ok(out)
}

/// Reads a W-skew-symmetric distribution on its dominant chamber: the
/// coefficient at every strictly dominant point of the window.
///
/// For `D = Σ_w ε(w) δ_{wν}` with `ν` regular dominant this returns
/// `{ν ↦ 1}`; singular points never appear.
pub fn skew_project(d: &WeightDistribution, psi_c: &PositiveSystem) -> BTreeMap<Weight, i128> {
    d.entries()
        .into_iter()
        .filter(|(w, c)| *c != 0 && psi_c.is_dominant(w, true))
        .collect()
}

/// Checks `D(wμ) = ε(w) D(μ)` for every stored point whose image also lies in
/// the exact region; returns the first violation.
pub fn check_skew(d: &WeightDistribution, group: &crate::weyl::WeylGroup) -> Option<(Weight, Weight)> {
    let bound = d.bound().cloned();
    for (w, c) in d.entries() {
        for e in group.elements() {
            let img = group.apply(e, &w);
            let inside = bound.as_ref().is_none_or(|b| d.functional().inner(&img) <= *b);
            if inside && d.coefficient(&img) != i128::from(e.sign()) * c {
                return Some((w, img));
            }
        }
    }
    None
}
