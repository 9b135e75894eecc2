//! Integer frames for lattice-point work.
//!
//! A [`Frame`] fixes a positive integer scale `s` and represents a weight `x`
//! by the integer vector `s·x`. Partition counting and distributions run on
//! these integer vectors; conversion back to [`Weight`] is exact.

use std::sync::Arc;

use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::rational::{lcm_denominators, Rat};
use crate::weight::{Basis, Weight};

/// An integer vector in a frame.
pub type IVec = Vec<i64>;

/// Largest scale accepted by [`Frame::covering`].
pub const MAX_SCALE: i64 = 1 << 20;

/// A scale together with the basis it applies to.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Frame {
    basis: Arc<Basis>,
    scale: i64,
}

impl Frame {
    /// A frame with an explicit scale.
    pub fn new(basis: &Arc<Basis>, scale: i64) -> Frame {
        assert!(scale > 0);
        Frame {
            basis: basis.clone(),
            scale,
        }
    }

    /// The smallest frame in which all given weights are integral.
    pub fn covering<'a>(basis: &Arc<Basis>, ws: impl IntoIterator<Item = &'a Weight>) -> Result<Frame> {
        let l = lcm_denominators(ws.into_iter().flat_map(|w| w.coords().iter()));
        let s = l
            .to_i64()
            .filter(|&s| s <= MAX_SCALE)
            .ok_or_else(|| Error::Consistency(format!("lattice denominator {l} too large")))?;
        Ok(Frame::new(basis, s))
    }

    pub fn scale(&self) -> i64 {
        self.scale
    }

    pub fn basis(&self) -> &Arc<Basis> {
        &self.basis
    }

    /// The integer vector of `w`, or an error when `w` is off the lattice.
    pub fn to_ivec(&self, w: &Weight) -> Result<IVec> {
        w.coords()
            .iter()
            .map(|x| x.scaled_i64(self.scale))
            .collect::<Option<IVec>>()
            .ok_or_else(|| Error::Denominator(w.to_string(), self.scale))
    }

    /// The weight represented by an integer vector.
    pub fn to_weight(&self, v: &[i64]) -> Weight {
        Weight::new(
            &self.basis,
            v.iter().map(|&x| Rat::frac(x, self.scale)).collect(),
        )
    }
}

/// Integer dot product.
pub fn idot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// `a + k·b`.
pub fn iaxpy(a: &[i64], k: i64, b: &[i64]) -> IVec {
    a.iter().zip(b).map(|(x, y)| x + k * y).collect()
}

/// A rational functional in integer form: `(ξ, x) = idot(num, X) / (den·s)`
/// for `X = s·x`.
#[derive(Clone, Debug)]
pub struct IntFunctional {
    pub num: IVec,
    pub den: i64,
}

impl IntFunctional {
    /// Integer form of a weight used as a functional.
    pub fn new(xi: &Weight) -> Result<IntFunctional> {
        let f = Frame::covering(xi.basis(), [xi])?;
        Ok(IntFunctional {
            num: f.to_ivec(xi)?,
            den: f.scale(),
        })
    }

    /// `den·s·(ξ, x)` for `X = s·x`.
    pub fn height(&self, x: &[i64]) -> i64 {
        idot(&self.num, x)
    }

    /// The largest integer height `h` with `h ≤ den·s·bound`.
    pub fn threshold(&self, bound: &Rat, scale: i64) -> i64 {
        let t = bound * &Rat::int(self.den * scale);
        t.floor().to_i64().expect("threshold fits in i64")
    }
}
