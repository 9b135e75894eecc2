//! Weights in orthogonal `(ε | δ)` coordinates.
//!
//! A [`Weight`] is an exact rational vector attached to a [`Basis`]. The
//! inner product is the Euclidean one in these coordinates. The text form is
//! `"a1,…,am | b1,…,bn"` with integer or `p/q` entries:
//!
//! ```
//! use branchkit::weight::{Basis, Weight};
//!
//! let b = Basis::new(2, 1, "so(4,3)");
//! let w = Weight::parse("7/2,3/2 | 1/2", &b).unwrap();
//! assert_eq!(w.to_string(), "7/2,3/2 | 1/2");
//! assert_eq!(w.inner(&w).to_string(), "59/4");
//! ```

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Neg, Sub};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::linalg;
use crate::rational::Rat;

/// An orthogonal coordinate system: an ε-block followed by a δ-block.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Basis {
    pub eps_count: usize,
    pub delta_count: usize,
    pub label: String,
}

impl Basis {
    /// A shared basis with the given block sizes.
    pub fn new(eps_count: usize, delta_count: usize, label: &str) -> Arc<Basis> {
        Arc::new(Basis {
            eps_count,
            delta_count,
            label: label.to_string(),
        })
    }

    /// Total number of coordinates.
    pub fn rank(&self) -> usize {
        self.eps_count + self.delta_count
    }
}

/// An exact rational vector in a fixed orthogonal basis.
#[derive(Clone)]
pub struct Weight {
    basis: Arc<Basis>,
    coords: Vec<Rat>,
}

impl Weight {
    /// Builds a weight; panics if the length does not match the basis rank.
    pub fn new(basis: &Arc<Basis>, coords: Vec<Rat>) -> Weight {
        assert_eq!(coords.len(), basis.rank(), "coordinate count");
        Weight {
            basis: basis.clone(),
            coords,
        }
    }

    /// Builds a weight from integers.
    pub fn from_ints(basis: &Arc<Basis>, xs: &[i64]) -> Weight {
        Weight::new(basis, xs.iter().map(|&x| Rat::int(x)).collect())
    }

    /// The zero weight.
    pub fn zero(basis: &Arc<Basis>) -> Weight {
        Weight::new(basis, vec![Rat::zero(); basis.rank()])
    }

    /// The coordinate vector with a one in position `i`.
    pub fn unit(basis: &Arc<Basis>, i: usize) -> Weight {
        let mut w = Weight::zero(basis);
        w.coords[i] = Rat::one();
        w
    }

    /// `ε_i`, zero-based.
    pub fn eps(basis: &Arc<Basis>, i: usize) -> Weight {
        assert!(i < basis.eps_count);
        Weight::unit(basis, i)
    }

    /// `δ_j`, zero-based.
    pub fn delta(basis: &Arc<Basis>, j: usize) -> Weight {
        assert!(j < basis.delta_count);
        Weight::unit(basis, basis.eps_count + j)
    }

    /// The basis.
    pub fn basis(&self) -> &Arc<Basis> {
        &self.basis
    }

    /// The coordinates.
    pub fn coords(&self) -> &[Rat] {
        &self.coords
    }

    /// Consumes the weight and returns its coordinates.
    pub fn into_coords(self) -> Vec<Rat> {
        self.coords
    }

    /// Errors unless both weights share a basis.
    pub fn check_basis(&self, other: &Weight) -> Result<()> {
        if self.basis == other.basis {
            Ok(())
        } else {
            Err(Error::BasisMismatch(
                self.basis.label.clone(),
                other.basis.label.clone(),
            ))
        }
    }

    /// Euclidean inner product; errors on a basis mismatch.
    pub fn try_inner(&self, other: &Weight) -> Result<Rat> {
        self.check_basis(other)?;
        Ok(linalg::dot(&self.coords, &other.coords))
    }

    /// Euclidean inner product; panics on a basis mismatch.
    pub fn inner(&self, other: &Weight) -> Rat {
        self.try_inner(other).expect("basis mismatch")
    }

    /// `2 (self, α) / (α, α)`.
    pub fn coroot_pairing(&self, alpha: &Weight) -> Rat {
        &(Rat::int(2) * self.inner(alpha)) / &alpha.inner(alpha)
    }

    /// The weight multiplied by a scalar.
    pub fn scale(&self, c: &Rat) -> Weight {
        Weight {
            basis: self.basis.clone(),
            coords: self.coords.iter().map(|x| x * c).collect(),
        }
    }

    /// True when every coordinate is zero.
    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Rat::is_zero)
    }

    /// Reflection in the hyperplane orthogonal to `alpha`.
    pub fn reflect(&self, alpha: &Weight) -> Weight {
        self - &alpha.scale(&self.coroot_pairing(alpha))
    }

    /// Parses the text form in the given basis.
    pub fn parse(text: &str, basis: &Arc<Basis>) -> Result<Weight> {
        let (a, b) = match text.split_once('|') {
            Some((a, b)) => (a, b),
            None if basis.delta_count == 0 => (text, ""),
            None => {
                return Err(Error::Parse(format!(
                    "weight {text:?} lacks the '|' block separator"
                )))
            }
        };
        let block = |s: &str, n: usize, name: &str| -> Result<Vec<Rat>> {
            let s = s.trim();
            let items: Vec<Rat> = if s.is_empty() {
                Vec::new()
            } else {
                s.split(',').map(str::parse).collect::<Result<_>>()?
            };
            if items.len() != n {
                return Err(Error::Parse(format!(
                    "{name}-block of {text:?} has {} entries, expected {n} for {}",
                    items.len(),
                    basis.label
                )));
            }
            Ok(items)
        };
        let mut coords = block(a, basis.eps_count, "ε")?;
        coords.extend(block(b, basis.delta_count, "δ")?);
        Ok(Weight::new(basis, coords))
    }

    /// Least common multiple of the coordinate denominators.
    pub fn denominator(&self) -> num_bigint::BigInt {
        crate::rational::lcm_denominators(&self.coords)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |xs: &[Rat]| {
            xs.iter()
                .map(Rat::to_string)
                .collect::<Vec<_>>()
                .join(",")
        };
        let e = join(&self.coords[..self.basis.eps_count]);
        let d = join(&self.coords[self.basis.eps_count..]);
        match (e.is_empty(), d.is_empty()) {
            (true, _) => write!(f, "| {d}"),
            (false, true) => write!(f, "{e} |"),
            (false, false) => write!(f, "{e} | {d}"),
        }
    }
}

impl fmt::Debug for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl PartialEq for Weight {
    fn eq(&self, other: &Weight) -> bool {
        self.coords == other.coords && self.basis == other.basis
    }
}

impl Eq for Weight {}

impl Hash for Weight {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.coords.hash(state);
    }
}

impl PartialOrd for Weight {
    fn partial_cmp(&self, other: &Weight) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Weight {
    /// Lexicographic on coordinates; weights of different bases are ordered
    /// by label only so that the order stays total.
    fn cmp(&self, other: &Weight) -> Ordering {
        self.coords
            .cmp(&other.coords)
            .then_with(|| self.basis.label.cmp(&other.basis.label))
    }
}

impl Add<&Weight> for &Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        self.check_basis(rhs).expect("basis mismatch");
        Weight {
            basis: self.basis.clone(),
            coords: self.coords.iter().zip(&rhs.coords).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub<&Weight> for &Weight {
    type Output = Weight;
    fn sub(self, rhs: &Weight) -> Weight {
        self.check_basis(rhs).expect("basis mismatch");
        Weight {
            basis: self.basis.clone(),
            coords: self.coords.iter().zip(&rhs.coords).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Add for Weight {
    type Output = Weight;
    fn add(self, rhs: Weight) -> Weight {
        &self + &rhs
    }
}

impl Sub for Weight {
    type Output = Weight;
    fn sub(self, rhs: Weight) -> Weight {
        &self - &rhs
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        self.scale(&Rat::int(-1))
    }
}

impl Neg for Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        -&self
    }
}

/// Sum of weights, or zero in `basis` for an empty iterator.
pub fn sum<'a>(basis: &Arc<Basis>, ws: impl IntoIterator<Item = &'a Weight>) -> Weight {
    ws.into_iter().fold(Weight::zero(basis), |acc, w| &acc + w)
}

/// Half the sum of the given weights.
pub fn half_sum<'a>(basis: &Arc<Basis>, ws: impl IntoIterator<Item = &'a Weight>) -> Weight {
    sum(basis, ws).scale(&Rat::half())
}

/// True iff `lam` pairs nontrivially with every root.
pub fn is_regular(lam: &Weight, roots: &[Weight]) -> bool {
    roots.iter().all(|a| !lam.inner(a).is_zero())
}

/// An affine lattice used to decide integrality of parameters.
#[derive(Clone, Debug)]
pub enum IntegralityLattice {
    /// The analytically integral rule: `2 (λ + offset, α) / (α, α) ∈ Z` for
    /// every listed root.
    Coroot { roots: Vec<Weight>, offset: Weight },
    /// `λ − offset` must be an integer combination of the generators, which
    /// are assumed linearly independent.
    Explicit {
        generators: Vec<Weight>,
        offset: Weight,
    },
}

/// True iff `lam` lies in the affine lattice.
pub fn is_integral(lam: &Weight, lattice: &IntegralityLattice) -> bool {
    match lattice {
        IntegralityLattice::Coroot { roots, offset } => {
            let x = lam + offset;
            roots.iter().all(|a| x.coroot_pairing(a).is_integer())
        }
        IntegralityLattice::Explicit { generators, offset } => {
            let x = lam - offset;
            let gens: Vec<Vec<Rat>> = generators.iter().map(|g| g.coords().to_vec()).collect();
            match linalg::solve_combination(&gens, x.coords()) {
                Some(c) => c.iter().all(Rat::is_integer),
                None => false,
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_round_trip_with_empty_blocks() {
        let b = Basis::new(0, 1, "x");
        let w = Weight::parse("| 5", &b).unwrap();
        assert_eq!(w.to_string(), "| 5");
        let b = Basis::new(2, 0, "y");
        let w = Weight::parse("1/2,-3 |", &b).unwrap();
        assert_eq!(w.to_string(), "1/2,-3 |");
        assert_eq!(Weight::parse("1/2,-3", &b).unwrap(), w);
    }

    #[test]
    fn parse_rejects_wrong_block_sizes() {
        let b = Basis::new(2, 1, "z");
        assert!(Weight::parse("1,2,3 |", &b).is_err());
        assert!(Weight::parse("1,2", &b).is_err());
        assert!(Weight::parse("1,x | 2", &b).is_err());
    }

    #[test]
    fn orthogonal_units() {
        let b = Basis::new(1, 1, "u");
        let e = Weight::eps(&b, 0);
        let d = Weight::delta(&b, 0);
        assert_eq!(e.inner(&e), Rat::one());
        assert_eq!(e.inner(&d), Rat::zero());
        let other = Basis::new(1, 1, "v");
        assert!(e.try_inner(&Weight::eps(&other, 0)).is_err());
    }

    #[test]
    fn reflection_and_integrality() {
        let b = Basis::new(2, 0, "c2");
        let roots = vec![
            Weight::from_ints(&b, &[2, 0]),
            Weight::from_ints(&b, &[1, -1]),
            Weight::from_ints(&b, &[1, 1]),
        ];
        let x = Weight::from_ints(&b, &[3, 1]);
        assert_eq!(x.reflect(&roots[1]), Weight::from_ints(&b, &[1, 3]));
        let lat = IntegralityLattice::Coroot {
            roots: roots.clone(),
            offset: Weight::zero(&b),
        };
        assert!(is_integral(&x, &lat));
        let third = Weight::new(&b, vec![Rat::frac(1, 3), Rat::zero()]);
        assert!(!is_integral(&third, &lat));
        let exp = IntegralityLattice::Explicit {
            generators: vec![Weight::from_ints(&b, &[1, 1]), Weight::from_ints(&b, &[1, -1])],
            offset: Weight::zero(&b),
        };
        assert!(is_integral(&Weight::from_ints(&b, &[2, 0]), &exp));
        assert!(!is_integral(&Weight::from_ints(&b, &[1, 0]), &exp));
    }
}
