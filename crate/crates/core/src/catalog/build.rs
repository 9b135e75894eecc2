//! Recipes that turn a catalog row and its parameters into pair data.
//!
//! Each recipe fixes the ambient colored root system of `g` (coordinates,
//! roots, the grading vector `v_θ` of the Cartan involution), the
//! involution `σ` defining `h`, and the coordinates of the `K₁` block. The
//! admissible family is then read off the row.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::catalog::fold::{self, FoldSpec, Involution};
use crate::catalog::lie;
use crate::catalog::table::{expand_family, CatalogRow};
use crate::catalog::{K1Kind, PairData, PsiMember, RestrictionMap};
use crate::error::{Error, Result};
use crate::linalg;
use crate::rational::Rat;
use crate::roots::{PositiveSystem, RootSystem};
use crate::weight::{half_sum, Basis, Weight};

pub(crate) type Params = BTreeMap<char, i64>;

/// The colored root system of `g` with the data needed for its families.
struct Ambient {
    g: RootSystem,
    /// A regular functional; its compact positive roots fix `Δ`.
    base: Weight,
    /// Coordinates of the `K₁` block, when `K₁` is a block.
    block: Vec<usize>,
    /// Lexicographic orders of the named coordinate families.
    orders: Vec<(String, Vec<(usize, i64)>)>,
}

fn param(p: &Params, c: char) -> Result<i64> {
    p.get(&c)
        .copied()
        .ok_or_else(|| Error::Catalog(format!("recipe needs the parameter {c}")))
}

fn count(x: i64) -> Result<usize> {
    usize::try_from(x).map_err(|_| Error::Catalog(format!("negative block size {x}")))
}

/// The constant vector pattern `c₁^{n₁}, c₂^{n₂}, …`.
fn pattern(basis: &Arc<Basis>, parts: &[(Rat, usize)]) -> Result<Weight> {
    let coords: Vec<Rat> = parts
        .iter()
        .flat_map(|(c, n)| std::iter::repeat_n(c.clone(), *n))
        .collect();
    if coords.len() != basis.rank() {
        return Err(Error::Catalog(format!(
            "grading pattern has {} entries for {} coordinates",
            coords.len(),
            basis.rank()
        )));
    }
    Ok(Weight::new(basis, coords))
}

fn int(x: i64) -> Rat {
    Rat::int(x)
}

/// `4^{n-1}, …, 4, 1`: the lexicographic functional of the coordinate order.
fn lex_functional(basis: &Arc<Basis>) -> Weight {
    let n = basis.rank() as u32;
    Weight::new(basis, (0..n).map(|i| Rat::int(4i64.pow(n - 1 - i))).collect())
}

fn classical(name: &str, basis: Arc<Basis>, roots: Vec<Weight>, v_theta: &Weight) -> Result<Ambient> {
    Ok(Ambient {
        g: lie::colored(name, &basis, roots, v_theta)?,
        base: lex_functional(&basis),
        block: Vec::new(),
        orders: Vec::new(),
    })
}

fn su(name: &str, m: usize, n: usize) -> Result<Ambient> {
    let b = Basis::new(m, n, name);
    let all: Vec<usize> = (0..m + n).collect();
    let v = pattern(&b, &[(int(1), m), (int(0), n)])?;
    let mut a = classical(name, b.clone(), lie::type_a(&b, &all), &v)?;
    for k in 1..m {
        let order = (0..k).chain(m..m + n).chain(k..m).map(|i| (i, 1)).collect();
        a.orders.push((format!("Psi_a[a={k}]"), order));
    }
    for k in 1..n {
        let order = (m..m + k).chain(0..m).chain(m + k..m + n).map(|i| (i, 1)).collect();
        a.orders.push((format!("Psi~_b[b={k}]"), order));
    }
    Ok(a)
}

fn so_family(a: &mut Ambient, m: usize, n: usize) {
    let plus: Vec<(usize, i64)> = (0..m + n).map(|i| (i, 1)).collect();
    let mut minus = plus.clone();
    minus[m - 1].1 = -1;
    a.orders.push(("Psi_+".into(), plus));
    a.orders.push(("Psi_-".into(), minus));
    a.block = (0..m).collect();
}

fn so_even(name: &str, m: usize, n: usize) -> Result<Ambient> {
    let b = Basis::new(m, n, name);
    let all: Vec<usize> = (0..m + n).collect();
    let v = pattern(&b, &[(int(1), m), (int(0), n)])?;
    let mut a = classical(name, b.clone(), lie::type_d(&b, &all), &v)?;
    so_family(&mut a, m, n);
    Ok(a)
}

fn so_odd(name: &str, m: usize, n: usize) -> Result<Ambient> {
    let b = Basis::new(m, n, name);
    let all: Vec<usize> = (0..m + n).collect();
    let v = pattern(&b, &[(int(1), m), (int(0), n)])?;
    let mut a = classical(name, b.clone(), lie::type_b(&b, &all), &v)?;
    so_family(&mut a, m, n);
    Ok(a)
}

/// `sp(m,n)` in coordinates `ε₁..ε_n | δ₁..δ_m`, the δ-block carrying `sp(m)`.
fn sp_quat(name: &str, m: usize, n: usize) -> Result<Ambient> {
    let b = Basis::new(n, m, name);
    let all: Vec<usize> = (0..m + n).collect();
    let v = pattern(&b, &[(int(0), n), (int(1), m)])?;
    let mut a = classical(name, b.clone(), lie::type_c(&b, &all), &v)?;
    let order = (n..n + m).chain(0..n).map(|i| (i, 1)).collect();
    a.orders.push(("Psi_+".into(), order));
    a.block = (n..n + m).collect();
    Ok(a)
}

/// Rank-`n` types C or D graded by `½(1, …, 1)`: `sp(n,R)` and `so*(2n)`.
fn half_graded(name: &str, n: usize, c: bool) -> Result<Ambient> {
    let b = Basis::new(n, 0, name);
    let all: Vec<usize> = (0..n).collect();
    let v = pattern(&b, &[(Rat::half(), n)])?;
    let roots = if c { lie::type_c(&b, &all) } else { lie::type_d(&b, &all) };
    classical(name, b, roots, &v)
}

fn f4(name: &str) -> Result<Ambient> {
    let b = Basis::new(4, 0, name);
    let v = Weight::from_ints(&b, &[1, 1, 0, 0]);
    classical(name, b.clone(), lie::type_f4(&b), &v)
}

fn indicator(nodes: &[usize], rank: usize) -> Result<Vec<Rat>> {
    let mut v = vec![Rat::zero(); rank];
    for &i in nodes {
        if i == 0 || i > rank {
            return Err(Error::Catalog(format!("node {i} out of range 1..{rank}")));
        }
        v[i - 1] = Rat::one();
    }
    Ok(v)
}

fn exceptional(name: &str, e7: bool, theta: &[usize]) -> Result<(Ambient, Vec<Weight>)> {
    let b = Basis::new(8, 0, name);
    let (roots, simple) = if e7 {
        (lie::type_e7(&b), lie::e7_simple(&b))
    } else {
        (lie::type_e6(&b), lie::e6_simple(&b))
    };
    let v = lie::dual_vector(&b, &simple, &indicator(theta, simple.len())?)?;
    let base = lie::dual_vector(&b, &simple, &vec![Rat::one(); simple.len()])?;
    let amb = Ambient {
        g: lie::colored(name, &b, roots, &v)?,
        base,
        block: Vec::new(),
        orders: Vec::new(),
    };
    Ok((amb, simple))
}

/// The two holomorphic positive systems: `Δ` together with all noncompact
/// roots on one side of the center of `k`.
fn holomorphic(a: &Ambient, plus: bool) -> Result<PositiveSystem> {
    let g = &a.g;
    let compact = g.compact_roots();
    let delta_rho = half_sum(g.basis(), compact.iter().filter(|r| r.inner(&a.base).is_positive()));
    let c = linalg::orthogonal_basis(&compact.iter().map(|r| r.coords().to_vec()).collect::<Vec<_>>());
    let rest: Vec<Vec<Rat>> = g
        .vectors()
        .iter()
        .map(|r| {
            let p = linalg::project(r.coords(), &c);
            r.coords().iter().zip(&p).map(|(x, y)| x - y).collect()
        })
        .collect();
    let z = linalg::orthogonal_basis(&rest);
    let [z] = z.as_slice() else {
        return Err(Error::Catalog(format!(
            "{}: holomorphic family needs a one-dimensional center of k, found {}",
            g.name(),
            z.len()
        )));
    };
    let mut z = Weight::new(g.basis(), z.clone());
    if z.coords().iter().find(|x| !x.is_zero()).is_some_and(Rat::is_negative) {
        z = -z;
    }
    let nc = g.noncompact_roots();
    let top = nc.iter().map(|b| delta_rho.inner(b).abs()).max().unwrap_or_else(Rat::zero);
    let low = nc
        .iter()
        .map(|b| z.inner(b).abs())
        .min()
        .ok_or_else(|| Error::Catalog(format!("{}: no noncompact roots", g.name())))?;
    let big = &(&top / &low) + &Rat::one();
    let sign = if plus { big } else { -big };
    let f = &delta_rho + &z.scale(&sign);
    g.check_regular(&f)?;
    Ok(g.positive_by(if plus { "Psi_hol+" } else { "Psi_hol-" }, &f))
}

fn family(a: &Ambient, row: &CatalogRow, p: &Params) -> Result<Vec<PsiMember>> {
    let mut out = Vec::new();
    for name in expand_family(&row.psi, p)? {
        let system = if let Some((_, order)) = a.orders.iter().find(|(n, _)| *n == name) {
            a.g.lexicographic(&name, order)
        } else {
            match name.as_str() {
                "Psi_BS" => a.g.positive_by(&name, &a.base),
                "Psi_hol+" => holomorphic(a, true)?,
                "Psi_hol-" => holomorphic(a, false)?,
                _ => {
                    return Err(Error::Catalog(format!(
                        "{}: unknown positive system {name}",
                        a.g.name()
                    )))
                }
            }
        };
        if system.is_borel_de_siebenthal() != row.bds {
            return Err(Error::Consistency(format!(
                "{}: {name} is{} of Borel–de Siebenthal type, the catalog says otherwise",
                a.g.name(),
                if row.bds { " not" } else { "" }
            )));
        }
        out.push(PsiMember {
            name,
            system,
            bds: row.bds,
        });
    }
    Ok(out)
}

fn k1_kind(row: &CatalogRow, label: &str, a: &Ambient) -> K1Kind {
    match row.k1.as_str() {
        "su2(alpha_max)" => K1Kind::HighestRoot,
        "Z_K" => K1Kind::Center,
        _ => K1Kind::Block {
            label: label.to_string(),
            coords: a.block.clone(),
        },
    }
}

/// Unit vector `i` of a basis as a row of rationals.
fn unit_row(n: usize, i: usize, c: Rat) -> Vec<Rat> {
    (0..n).map(|j| if i == j { c.clone() } else { Rat::zero() }).collect()
}

/// The outer fold of E6 onto F4: `σ` permutes the simple roots as the
/// diagram automorphism and `q` sends them to the listed images.
fn e6_fold(g: &RootSystem, simple: &[Weight], images: &[(String, Vec<Rat>)], u: &Arc<Basis>) -> Result<(Vec<Vec<Rat>>, RestrictionMap)> {
    let img: Vec<Weight> = (1..=simple.len())
        .map(|i| {
            let key = format!("alpha{i}");
            images
                .iter()
                .find(|(k, _)| *k == key)
                .map(|(_, v)| Weight::new(u, v.clone()))
                .ok_or_else(|| Error::Catalog(format!("restriction data lacks {key}")))
        })
        .collect::<Result<_>>()?;
    if img.iter().any(|w| w.coords().len() != u.rank()) {
        return Err(Error::Catalog("restriction image of the wrong length".into()));
    }
    let n = simple.len();
    // σ permutes simple roots with equal images.
    let perm: Vec<usize> = (0..n)
        .map(|i| (0..n).find(|&j| j != i && img[j] == img[i]).unwrap_or(i))
        .collect();
    for i in 0..n {
        for j in 0..n {
            let lhs = img[i].inner(&img[j]);
            let a = &simple[i] + &simple[perm[i]];
            let b = &simple[j] + &simple[perm[j]];
            let rhs = &a.inner(&b) / &Rat::int(4);
            if lhs != rhs {
                return Err(Error::Catalog(format!(
                    "restriction images are not isometric to the σ-invariant part at ({}, {})",
                    i + 1,
                    j + 1
                )));
            }
        }
    }
    let t = g.basis();
    let gram: Vec<Vec<Rat>> = (0..n)
        .map(|j| (0..n).map(|i| simple[i].inner(&simple[j])).collect())
        .collect();
    let mut sigma_cols = Vec::new();
    let mut q_cols = Vec::new();
    for e in 0..t.rank() {
        let unit = Weight::unit(t, e);
        let rhs: Vec<Rat> = simple.iter().map(|a| a.inner(&unit)).collect();
        let c = linalg::solve_combination(&gram, &rhs)
            .ok_or_else(|| Error::Consistency("singular Gram matrix".into()))?;
        let in_span = c.iter().zip(simple).fold(Weight::zero(t), |acc, (x, a)| &acc + &a.scale(x));
        let perp = &unit - &in_span;
        let moved = c.iter().enumerate().fold(perp, |acc, (i, x)| &acc + &simple[perm[i]].scale(x));
        sigma_cols.push(moved.into_coords());
        let image = c.iter().zip(&img).fold(Weight::zero(u), |acc, (x, a)| &acc + &a.scale(x));
        q_cols.push(image.into_coords());
    }
    let transpose = |cols: &[Vec<Rat>], rows: usize| -> Vec<Vec<Rat>> {
        (0..rows).map(|i| cols.iter().map(|c| c[i].clone()).collect()).collect()
    };
    let sigma = transpose(&sigma_cols, t.rank());
    let q = RestrictionMap::new(t, u, transpose(&q_cols, u.rank()))?;
    Ok((sigma, q))
}

/// Builds the pair data of an implemented row; names are instantiated.
pub(crate) fn build(row: &CatalogRow, p: &Params, names: [&str; 3]) -> Result<PairData> {
    let [g_name, h_name, h0_name] = names;
    let recipe = row
        .build
        .as_deref()
        .ok_or_else(|| Error::Catalog(format!("row {} has no recipe", row.id())))?;
    let get = |c| param(p, c);
    let equal = |a: Ambient, v: Weight| -> (Ambient, Involution, RestrictionMap) {
        let q = RestrictionMap::identity(a.g.basis());
        (a, Involution::Inner(v), q)
    };
    let (amb, involution, q) = match recipe {
        "su_eps" | "su_delta" | "su_hol" => {
            let n = count(get('n')?)?;
            let m = match p.get(&'m') {
                Some(&m) => count(m)?,
                None => n,
            };
            let mut a = su(g_name, m, n)?;
            let b = a.g.basis().clone();
            let k = count(get('k')?)?;
            let v = match recipe {
                "su_eps" => {
                    a.block = (0..m).collect();
                    pattern(&b, &[(int(0), m + k), (int(1), n.checked_sub(k).ok_or_else(bad)?)])?
                }
                "su_delta" => {
                    a.block = (m..m + n).collect();
                    pattern(&b, &[(int(0), k), (int(1), m.checked_sub(k).ok_or_else(bad)?), (int(0), n)])?
                }
                _ => {
                    let l = count(get('l')?)?;
                    pattern(
                        &b,
                        &[
                            (int(0), k),
                            (int(1), m.checked_sub(k).ok_or_else(bad)?),
                            (int(0), l),
                            (int(1), n.checked_sub(l).ok_or_else(bad)?),
                        ],
                    )?
                }
            };
            equal(a, v)
        }
        "so_even" => {
            let (m, n, k) = (count(get('m')?)?, count(get('n')?)?, count(get('k')?)?);
            let a = so_even(g_name, m, n)?;
            let v = pattern(a.g.basis(), &[(int(0), m + k), (int(1), n.checked_sub(k).ok_or_else(bad)?)])?;
            equal(a, v)
        }
        "so_odd" => {
            let (m, n, k) = (count(get('m')?)?, count(get('n')?)?, count(get('k')?)?);
            let a = so_odd(g_name, m, n)?;
            let half = k / 2;
            let rest = n.checked_sub(half).ok_or_else(bad)?;
            let v = if k % 2 == 0 {
                pattern(a.g.basis(), &[(int(1), m + half), (int(0), rest)])?
            } else {
                pattern(a.g.basis(), &[(int(0), m + half), (int(1), rest)])?
            };
            equal(a, v)
        }
        "so_u1n" => {
            let n = count(get('n')?)?;
            let a = so_even(g_name, 1, n)?;
            let v = pattern(a.g.basis(), &[(Rat::half(), n + 1)])?;
            equal(a, v)
        }
        "sp_quat" => {
            let (m, n, k) = (count(get('m')?)?, count(get('n')?)?, count(get('k')?)?);
            let a = sp_quat(g_name, m, n)?;
            let v = pattern(a.g.basis(), &[(int(0), k), (int(1), n.checked_sub(k).ok_or_else(bad)?), (int(0), m)])?;
            equal(a, v)
        }
        "sp_real" | "so_star" => {
            let (n, m) = (count(get('n')?)?, count(get('m')?)?);
            let a = half_graded(g_name, n, recipe == "sp_real")?;
            let v = pattern(a.g.basis(), &[(Rat::frac(-1, 2), m), (Rat::half(), n.checked_sub(m).ok_or_else(bad)?)])?;
            equal(a, v)
        }
        "f4" => {
            let a = f4(g_name)?;
            let v = Weight::from_ints(a.g.basis(), &[3, 1, 0, 0]);
            equal(a, v)
        }
        "e6" | "e7" => {
            let (a, simple) = exceptional(g_name, recipe == "e7", &row.theta)?;
            let v = lie::dual_vector(a.g.basis(), &simple, &indicator(&row.sigma, simple.len())?)?;
            equal(a, v)
        }
        "e6_fold" => {
            let (a, simple) = exceptional(g_name, false, &row.theta)?;
            let u = Basis::new(4, 0, h_name);
            let (sigma, q) = e6_fold(&a.g, &simple, &row.qu, &u)?;
            (a, Involution::Outer(sigma), q)
        }
        "so_fold" => {
            let m = count(get('m')?)?;
            let a = so_even(g_name, m, 1)?;
            let t = a.g.basis().clone();
            let sigma = (0..=m)
                .map(|i| unit_row(m + 1, i, if i == m { Rat::int(-1) } else { Rat::one() }))
                .collect();
            let u = Basis::new(m, 0, h_name);
            let q = RestrictionMap::new(&t, &u, (0..m).map(|i| unit_row(m + 1, i, Rat::one())).collect())?;
            (a, Involution::Outer(sigma), q)
        }
        other => return Err(Error::Catalog(format!("unknown recipe {other}"))),
    };
    let family = family(&amb, row, p)?;
    let k1 = k1_kind(row, &table_label(row, p), &amb);
    fold::assemble(FoldSpec {
        g_name: g_name.to_string(),
        h_name: h_name.to_string(),
        h0_name: h0_name.to_string(),
        g: amb.g,
        involution,
        q,
        family,
        k1,
    })
}

fn bad() -> Error {
    Error::Catalog("block sizes out of range".into())
}

fn table_label(row: &CatalogRow, p: &Params) -> String {
    crate::catalog::table::instantiate(&row.k1, p)
}
