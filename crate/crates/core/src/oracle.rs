//! Brute-force validators: Freudenthal weight multiplicities, compact
//! branching by peeling leading characters, the Weyl dimension formula, and
//! exhaustive partition enumeration.
//!
//! Nothing here uses the partition or distribution machinery, so agreement
//! between the two is evidence rather than tautology.
//!
//! ```
//! use branchkit::oracle::{freudenthal, weyl_dimension};
//! use branchkit::weight::{Basis, Weight};
//!
//! // Sp(2) adjoint representation: highest weight 2ε₁.
//! let b = Basis::new(2, 0, "sp(2)");
//! let pos = vec![
//!     Weight::from_ints(&b, &[1, -1]),
//!     Weight::from_ints(&b, &[1, 1]),
//!     Weight::from_ints(&b, &[2, 0]),
//!     Weight::from_ints(&b, &[0, 2]),
//! ];
//! let table = freudenthal(&pos, &Weight::from_ints(&b, &[2, 0])).unwrap();
//! assert_eq!(table.dimension(), 10);
//! assert_eq!(table.multiplicities[&Weight::zero(&b)], 2);
//! assert_eq!(weyl_dimension(&pos, &Weight::from_ints(&b, &[2, 0])).to_string(), "10");
//! ```

use std::collections::{BTreeMap, HashSet, VecDeque};

use crate::error::{Error, Result};
use crate::linalg;
use crate::rational::Rat;
use crate::weight::Weight;

/// Weight multiplicities of an irreducible representation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightSpaceTable {
    pub highest_weight: Weight,
    pub multiplicities: BTreeMap<Weight, u64>,
}

impl WeightSpaceTable {
    /// Sum of all multiplicities.
    pub fn dimension(&self) -> u64 {
        self.multiplicities.values().sum()
    }
}

fn half_sum(positives: &[Weight], like: &Weight) -> Weight {
    let mut s = Weight::zero(like.basis());
    for a in positives {
        s = &s + a;
    }
    s.scale(&Rat::half())
}

fn indecomposable(positives: &[Weight]) -> Vec<Weight> {
    let set: HashSet<&Weight> = positives.iter().collect();
    positives
        .iter()
        .filter(|a| !positives.iter().any(|b| set.contains(&(*a - b))))
        .cloned()
        .collect()
}

/// The dominant conjugate under the group generated by the simple roots.
fn dominant_conjugate(mu: &Weight, simple: &[Weight]) -> Weight {
    let mut x = mu.clone();
    loop {
        match simple.iter().find(|a| x.inner(a).is_negative()) {
            Some(a) => x = x.reflect(a),
            None => return x,
        }
    }
}

/// Nonnegative integer coordinates of `v` in the simple roots, if any.
fn simple_level(v: &Weight, simple: &[Weight]) -> Option<i64> {
    if v.is_zero() {
        return Some(0);
    }
    let cols: Vec<Vec<Rat>> = simple.iter().map(|a| a.coords().to_vec()).collect();
    let c = linalg::solve_combination(&cols, v.coords())?;
    let mut level = 0;
    for x in &c {
        if !x.is_integer() || x.is_negative() {
            return None;
        }
        level += x.to_i64()?;
    }
    Some(level)
}

/// Weyl dimension formula `Π (Λ+ρ, α) / (ρ, α)` over positive roots.
pub fn weyl_dimension(positives: &[Weight], highest_weight: &Weight) -> Rat {
    let rho = half_sum(positives, highest_weight);
    let lr = highest_weight + &rho;
    positives
        .iter()
        .map(|a| &lr.inner(a) / &rho.inner(a))
        .fold(Rat::one(), |x, y| x * y)
}

/// Freudenthal's recursion for the irreducible representation with the given
/// dominant highest weight, over the given positive roots.
pub fn freudenthal(positives: &[Weight], highest_weight: &Weight) -> Result<WeightSpaceTable> {
    for a in positives {
        let p = highest_weight.coroot_pairing(a);
        if p.is_negative() || !p.is_integer() {
            return Err(Error::NotDominant(highest_weight.to_string()));
        }
    }
    let simple = indecomposable(positives);
    let rho = half_sum(positives, highest_weight);
    let top = highest_weight + &rho;
    let top_norm = top.inner(&top);

    // Breadth-first search down from the highest weight through simple roots.
    let mut levels: BTreeMap<i64, Vec<Weight>> = BTreeMap::new();
    let mut seen: HashSet<Weight> = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(highest_weight.clone());
    queue.push_back((highest_weight.clone(), 0i64));
    while let Some((mu, lvl)) = queue.pop_front() {
        levels.entry(lvl).or_default().push(mu.clone());
        for a in &simple {
            let nu = &mu - a;
            if seen.contains(&nu) {
                continue;
            }
            let dom = dominant_conjugate(&nu, &simple);
            if simple_level(&(highest_weight - &dom), &simple).is_some() {
                seen.insert(nu.clone());
                queue.push_back((nu, lvl + 1));
            }
        }
    }

    let mut mult: BTreeMap<Weight, u64> = BTreeMap::new();
    for (_, ws) in levels {
        for mu in ws {
            if &mu == highest_weight {
                mult.insert(mu, 1);
                continue;
            }
            let mut acc = Rat::zero();
            for a in positives {
                let mut k = 1;
                loop {
                    let nu = &mu + &a.scale(&Rat::int(k));
                    match mult.get(&nu) {
                        Some(&m) => acc += &(Rat::int(m as i64) * nu.inner(a)),
                        None => {
                            if !seen.contains(&nu) {
                                break;
                            }
                        }
                    }
                    k += 1;
                }
            }
            let mr = &mu + &rho;
            let den = &top_norm - &mr.inner(&mr);
            let m = &(Rat::int(2) * acc) / &den;
            let m = m
                .to_i64()
                .filter(|&m| m >= 0)
                .ok_or_else(|| Error::Consistency(format!("Freudenthal produced {m} at {mu}")))?;
            if m > 0 {
                mult.insert(mu, m as u64);
            }
        }
    }
    Ok(WeightSpaceTable {
        highest_weight: highest_weight.clone(),
        multiplicities: mult,
    })
}

/// Compact branching by restriction of the weight table and peeling of
/// leading characters.
///
/// `big` is the positive system and highest weight of the large group;
/// `small` is the positive system of the subgroup (in the target basis) and
/// `project` maps weights of the large group to the subgroup's weights.
/// Returns infinitesimal characters `hw + ρ_small` with multiplicities.
pub fn brute_branch(
    big: (&[Weight], &Weight),
    small: &[Weight],
    project: impl Fn(&Weight) -> Weight,
) -> Result<BTreeMap<Weight, u64>> {
    let table = freudenthal(big.0, big.1)?;
    let mut rest: BTreeMap<Weight, i64> = BTreeMap::new();
    for (w, &m) in &table.multiplicities {
        *rest.entry(project(w)).or_insert(0) += m as i64;
    }
    let Some(first) = rest.keys().next().cloned() else {
        return Ok(BTreeMap::new());
    };
    let rho_small = half_sum(small, &first);
    let mut out = BTreeMap::new();
    loop {
        rest.retain(|_, m| *m != 0);
        if rest.is_empty() {
            break;
        }
        if rest.values().any(|&m| m < 0) {
            return Err(Error::Consistency("brute_branch: negative remainder".into()));
        }
        let top = rest
            .keys()
            .max_by(|a, b| rho_small.inner(a).cmp(&rho_small.inner(b)).then_with(|| a.cmp(b)))
            .cloned()
            .expect("nonempty");
        let m = rest[&top];
        let sub = freudenthal(small, &top)
            .map_err(|_| Error::Consistency(format!("brute_branch: leading weight {top} is not dominant")))?;
        for (w, &k) in &sub.multiplicities {
            *rest.entry(w.clone()).or_insert(0) -= m * k as i64;
        }
        out.insert(&top + &rho_small, m as u64);
    }
    Ok(out)
}

/// Exhaustive count of `target = Σ n_i γ_i` (or `Σ (n_i + 1/2) γ_i` when
/// `shifted`), with no memoization. `xi` must be positive on every generator.
pub fn enumerate_partitions(gens: &[Weight], target: &Weight, shifted: bool, xi: &Weight) -> Result<u64> {
    for g in gens {
        if !xi.inner(g).is_positive() {
            return Err(Error::Acyclic(format!("{g} is not positive on {xi}")));
        }
    }
    let mut t = target.clone();
    if shifted {
        for g in gens {
            t = &t - &g.scale(&Rat::half());
        }
    }
    fn go(gens: &[Weight], rem: &Weight, xi: &Weight) -> u64 {
        match gens.split_first() {
            None => u64::from(rem.is_zero()),
            Some((g, rest)) => {
                let mut total = 0;
                let mut r = rem.clone();
                while !xi.inner(&r).is_negative() {
                    total += go(rest, &r, xi);
                    r = &r - g;
                }
                total
            }
        }
    }
    Ok(go(gens, &t, xi))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weight::Basis;

    #[test]
    fn sl2_strings() {
        let b = Basis::new(0, 1, "sp(1)");
        let pos = vec![Weight::from_ints(&b, &[2])];
        let t = freudenthal(&pos, &Weight::from_ints(&b, &[3])).unwrap();
        let ws: Vec<String> = t.multiplicities.keys().map(|w| w.to_string()).collect();
        assert_eq!(ws, vec!["| -3", "| -1", "| 1", "| 3"]);
        assert!(t.multiplicities.values().all(|&m| m == 1));
    }

    #[test]
    fn trivial_representation() {
        let b = Basis::new(2, 0, "a1");
        let pos = vec![Weight::from_ints(&b, &[1, -1])];
        let t = freudenthal(&pos, &Weight::zero(&b)).unwrap();
        assert_eq!(t.dimension(), 1);
    }

    #[test]
    fn so5_to_so4_vector() {
        // SO(5) vector representation restricted to SO(4): 5 = 4 + 1.
        let b = Basis::new(2, 0, "so(5)");
        let big = vec![
            Weight::from_ints(&b, &[1, -1]),
            Weight::from_ints(&b, &[1, 1]),
            Weight::from_ints(&b, &[1, 0]),
            Weight::from_ints(&b, &[0, 1]),
        ];
        let small = vec![Weight::from_ints(&b, &[1, -1]), Weight::from_ints(&b, &[1, 1])];
        let out = brute_branch((&big, &Weight::from_ints(&b, &[1, 0])), &small, |w| w.clone()).unwrap();
        let keys: Vec<String> = out.keys().map(|w| w.to_string()).collect();
        assert_eq!(keys, vec!["1,0 |", "2,0 |"]);
        assert!(out.values().all(|&m| m == 1));
    }

    #[test]
    fn shifted_and_unshifted_enumeration() {
        let b = Basis::new(1, 0, "line");
        let g = Weight::from_ints(&b, &[1]);
        let gens = vec![g.clone(), g.clone()];
        assert_eq!(enumerate_partitions(&gens, &g.scale(&Rat::int(2)), true, &g).unwrap(), 2);
        assert_eq!(enumerate_partitions(&gens, &g.scale(&Rat::int(2)), false, &g).unwrap(), 3);
    }
}
