//! The catalog text format and the template matcher.
//!
//! A catalog file starts with the header `branchkit-catalog v1`. Each
//! `pair:` line holds `key=value` fields (values with spaces are quoted):
//!
//! ```text
//! pair: table=1 g=sp(m,n) h=sp(m,k)+sp(n-k) h0=sp(m,n-k)+sp(k) psi=Psi_+ k1=sp(m) equal_rank=yes bds=yes build=sp_quat where=m>=1,k>=1,n-k>=1
//! ```
//!
//! Names are templates: arguments inside parentheses are linear expressions
//! in one-letter parameters. A `qu:` block after a row lists the images of
//! the simple roots under the restriction map, one `alphaN = …` per line.
//!
//! Matching a concrete pair solves the linear equations between template
//! arguments and the given integers. Summands such as `so(1)` or `sp(0)`
//! that name the trivial algebra may be omitted from the concrete name.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::Arc;

use crate::catalog::build::{self, Params};
use crate::catalog::PairData;
use crate::error::{Error, Result};
use crate::linalg;
use crate::rational::Rat;

const BUILTIN: &str = include_str!("../../data/catalog.txt");

/// A linear expression `Σ c_x·x + c` with integer coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
struct LinExpr {
    coef: BTreeMap<char, i64>,
    constant: i64,
}

impl LinExpr {
    fn parse(s: &str) -> Option<LinExpr> {
        let s: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return None;
        }
        let mut e = LinExpr {
            coef: BTreeMap::new(),
            constant: 0,
        };
        let mut i = 0;
        while i < s.len() {
            let mut sign = 1;
            if s[i] == '+' || s[i] == '-' {
                if s[i] == '-' {
                    sign = -1;
                }
                i += 1;
            } else if i > 0 {
                return None;
            }
            let start = i;
            while i < s.len() && s[i].is_ascii_digit() {
                i += 1;
            }
            let digits: String = s[start..i].iter().collect();
            let num = if digits.is_empty() { None } else { Some(digits.parse::<i64>().ok()?) };
            let var = if i < s.len() && s[i].is_ascii_lowercase() {
                i += 1;
                Some(s[i - 1])
            } else {
                None
            };
            match (num, var) {
                (None, None) => return None,
                (n, Some(v)) => *e.coef.entry(v).or_insert(0) += sign * n.unwrap_or(1),
                (Some(n), None) => e.constant += sign * n,
            }
        }
        e.coef.retain(|_, c| *c != 0);
        Some(e)
    }

    fn eval(&self, p: &Params) -> Option<i64> {
        let mut v = self.constant;
        for (x, c) in &self.coef {
            v += c * p.get(x)?;
        }
        Some(v)
    }
}

/// One summand `head(args)tail` of a name.
#[derive(Clone, Debug)]
struct Summand {
    head: String,
    args: Option<Vec<String>>,
    tail: String,
}

fn summands(name: &str) -> Result<Vec<Summand>> {
    let mut parts = Vec::new();
    let mut depth = 0i32;
    let mut cur = String::new();
    for c in name.chars().filter(|c| !c.is_whitespace()) {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            '+' if depth == 0 => {
                parts.push(std::mem::take(&mut cur));
                continue;
            }
            _ => {}
        }
        cur.push(c);
    }
    parts.push(cur);
    parts
        .into_iter()
        .map(|p| {
            if p.is_empty() {
                return Err(Error::Parse(format!("empty summand in {name:?}")));
            }
            match (p.find('('), p.rfind(')')) {
                (Some(a), Some(b)) if a < b => Ok(Summand {
                    head: p[..a].to_string(),
                    args: Some(p[a + 1..b].split(',').map(str::to_string).collect()),
                    tail: p[b + 1..].to_string(),
                }),
                (None, None) => Ok(Summand {
                    head: p,
                    args: None,
                    tail: String::new(),
                }),
                _ => Err(Error::Parse(format!("unbalanced parentheses in {name:?}"))),
            }
        })
        .collect()
}

/// A summand that names the trivial algebra for small arguments.
fn deletable(s: &Summand) -> bool {
    matches!(s.head.as_str(), "so" | "su" | "sp")
        && s.tail.is_empty()
        && s.args
            .as_ref()
            .is_some_and(|a| a.iter().all(|x| LinExpr::parse(x).is_some()))
}

fn is_trivial(s: &Summand, p: &Params) -> Option<bool> {
    let total: i64 = s
        .args
        .as_ref()?
        .iter()
        .map(|x| LinExpr::parse(x).and_then(|e| e.eval(p)))
        .sum::<Option<i64>>()?;
    Some(if s.head == "sp" { total == 0 } else { total <= 1 })
}

/// Substitutes parameters into a template, dropping trivial summands.
pub(crate) fn instantiate(template: &str, p: &Params) -> String {
    let Ok(parts) = summands(template) else {
        return template.to_string();
    };
    let mut out: Vec<String> = Vec::new();
    for s in &parts {
        if deletable(s) && is_trivial(s, p) == Some(true) && parts.len() > 1 {
            continue;
        }
        match &s.args {
            None => out.push(s.head.clone()),
            Some(args) => {
                let a: Vec<String> = args
                    .iter()
                    .map(|x| match LinExpr::parse(x).and_then(|e| e.eval(p)) {
                        Some(v) => v.to_string(),
                        None => x.clone(),
                    })
                    .collect();
                out.push(format!("{}({}){}", s.head, a.join(","), s.tail));
            }
        }
    }
    out.join("+")
}

/// Expands a family such as `Psi_a[a=1..m-1]` or `Psi_+,Psi_-`.
pub(crate) fn expand_family(psi: &str, p: &Params) -> Result<Vec<String>> {
    let mut items = Vec::new();
    let mut depth = 0;
    let mut cur = String::new();
    for c in psi.chars() {
        match c {
            '[' => depth += 1,
            ']' => depth -= 1,
            ',' if depth == 0 => {
                items.push(std::mem::take(&mut cur));
                continue;
            }
            _ => {}
        }
        cur.push(c);
    }
    items.push(cur);
    let mut out = Vec::new();
    for it in items {
        let it = it.trim();
        match it.split_once('[') {
            None => out.push(it.to_string()),
            Some((base, rest)) => {
                let body = rest.trim_end_matches(']');
                let (var, range) = body
                    .split_once('=')
                    .ok_or_else(|| Error::Catalog(format!("bad family range {it}")))?;
                let (lo, hi) = range
                    .split_once("..")
                    .ok_or_else(|| Error::Catalog(format!("bad family range {it}")))?;
                let ev = |s: &str| {
                    LinExpr::parse(s)
                        .and_then(|e| e.eval(p))
                        .ok_or_else(|| Error::Catalog(format!("cannot evaluate {s} in {it}")))
                };
                for v in ev(lo)?..=ev(hi)? {
                    out.push(format!("{base}[{var}={v}]"));
                }
            }
        }
    }
    Ok(out)
}

/// A constraint `lhs op rhs` on the parameters.
#[derive(Clone, Debug)]
struct Constraint {
    lhs: LinExpr,
    op: String,
    rhs: LinExpr,
    text: String,
}

impl Constraint {
    fn parse(s: &str) -> Result<Constraint> {
        for op in [">=", "<=", "!=", ">", "<", "="] {
            if let Some((a, b)) = s.split_once(op) {
                let e = |x: &str| LinExpr::parse(x).ok_or_else(|| Error::Catalog(format!("bad constraint {s}")));
                return Ok(Constraint {
                    lhs: e(a)?,
                    op: op.to_string(),
                    rhs: e(b)?,
                    text: s.to_string(),
                });
            }
        }
        Err(Error::Catalog(format!("bad constraint {s}")))
    }

    fn holds(&self, p: &Params) -> bool {
        let (Some(a), Some(b)) = (self.lhs.eval(p), self.rhs.eval(p)) else {
            return false;
        };
        match self.op.as_str() {
            ">=" => a >= b,
            "<=" => a <= b,
            "!=" => a != b,
            ">" => a > b,
            "<" => a < b,
            _ => a == b,
        }
    }
}

/// One parametrized row of the catalog.
#[derive(Clone, Debug)]
pub struct CatalogRow {
    pub table: u32,
    pub g: String,
    pub h: String,
    pub h0: String,
    /// The admissible family, e.g. `Psi_+,Psi_-`.
    pub psi: String,
    /// The factor `K₁`: a block name, `su2(alpha_max)` or `Z_K`.
    pub k1: String,
    pub equal_rank: bool,
    /// Whether the family members are of Borel–de Siebenthal type.
    pub bds: bool,
    pub implemented: bool,
    pub reason: Option<String>,
    pub build: Option<String>,
    /// Grading nodes of the Cartan involution and of `σ` (exceptional rows).
    pub theta: Vec<usize>,
    pub sigma: Vec<usize>,
    /// Images of the simple roots under the restriction map.
    pub qu: Vec<(String, Vec<Rat>)>,
    bind: Params,
    constraints: Vec<Constraint>,
}

impl CatalogRow {
    /// `g/h` as written in the catalog.
    pub fn id(&self) -> String {
        format!("{}/{}", self.g, self.h)
    }

    /// The constraints as written.
    pub fn constraints(&self) -> Vec<String> {
        self.constraints.iter().map(|c| c.text.clone()).collect()
    }
}

impl fmt::Display for CatalogRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let yn = |b: bool| if b { "yes" } else { "no" };
        write!(
            f,
            "{:<14} {:<28} {:<30} {:<18} {:<15} equal_rank={:<3} bds={:<3}",
            self.g,
            self.h,
            self.h0,
            self.psi,
            self.k1,
            yn(self.equal_rank),
            yn(self.bds)
        )?;
        match &self.reason {
            Some(r) if !self.implemented => write!(f, " unimplemented: {r}"),
            _ => Ok(()),
        }
    }
}

fn tokens(line: &str) -> Result<Vec<(String, String)>> {
    let mut out = Vec::new();
    let mut chars = line.chars().peekable();
    loop {
        while chars.peek().is_some_and(|c| c.is_whitespace()) {
            chars.next();
        }
        if chars.peek().is_none() {
            return Ok(out);
        }
        let key: String = std::iter::from_fn(|| chars.next_if(|&c| c != '=' && !c.is_whitespace())).collect();
        if chars.next() != Some('=') {
            return Err(Error::Catalog(format!("expected key=value after {key:?}")));
        }
        let value: String = if chars.peek() == Some(&'"') {
            chars.next();
            let v: String = std::iter::from_fn(|| chars.next_if(|&c| c != '"')).collect();
            if chars.next() != Some('"') {
                return Err(Error::Catalog(format!("unterminated quote in {key}")));
            }
            v
        } else {
            std::iter::from_fn(|| chars.next_if(|c| !c.is_whitespace())).collect()
        };
        out.push((key, value));
    }
}

fn flag(v: &str) -> Result<bool> {
    match v {
        "yes" | "true" => Ok(true),
        "no" | "false" => Ok(false),
        _ => Err(Error::Catalog(format!("expected yes or no, found {v:?}"))),
    }
}

fn nodes(v: &str) -> Result<Vec<usize>> {
    v.split(',')
        .map(|x| x.trim().parse().map_err(|_| Error::Catalog(format!("bad node list {v:?}"))))
        .collect()
}

fn parse_row(line: &str) -> Result<CatalogRow> {
    let mut row = CatalogRow {
        table: 0,
        g: String::new(),
        h: String::new(),
        h0: String::new(),
        psi: String::new(),
        k1: String::new(),
        equal_rank: true,
        bds: false,
        implemented: true,
        reason: None,
        build: None,
        theta: Vec::new(),
        sigma: Vec::new(),
        qu: Vec::new(),
        bind: Params::new(),
        constraints: Vec::new(),
    };
    for (k, v) in tokens(line)? {
        match k.as_str() {
            "table" => row.table = v.parse().map_err(|_| Error::Catalog(format!("bad table {v}")))?,
            "g" => row.g = v,
            "h" => row.h = v,
            "h0" => row.h0 = v,
            "psi" => row.psi = v,
            "k1" => row.k1 = v,
            "equal_rank" => row.equal_rank = flag(&v)?,
            "bds" => row.bds = flag(&v)?,
            "implemented" => row.implemented = flag(&v)?,
            "reason" => row.reason = Some(v),
            "build" => row.build = Some(v),
            "theta" => row.theta = nodes(&v)?,
            "sigma" => row.sigma = nodes(&v)?,
            "bind" => {
                for item in v.split(',') {
                    let (x, val) = item
                        .split_once(':')
                        .ok_or_else(|| Error::Catalog(format!("bad binding {item}")))?;
                    let c = x.chars().next().filter(|_| x.len() == 1).ok_or_else(|| Error::Catalog(format!("bad binding {item}")))?;
                    let val = val.parse().map_err(|_| Error::Catalog(format!("bad binding {item}")))?;
                    row.bind.insert(c, val);
                }
            }
            "where" => {
                row.constraints = v.split(',').map(Constraint::parse).collect::<Result<_>>()?;
            }
            _ => return Err(Error::Catalog(format!("unknown key {k}"))),
        }
    }
    if row.g.is_empty() || row.h.is_empty() || row.h0.is_empty() {
        return Err(Error::Catalog(format!("row lacks g, h or h0: {line}")));
    }
    if row.implemented && row.build.is_none() {
        return Err(Error::Catalog(format!("implemented row {} has no build recipe", row.id())));
    }
    if !row.implemented && row.reason.is_none() {
        return Err(Error::Catalog(format!("unimplemented row {} gives no reason", row.id())));
    }
    Ok(row)
}

/// A concrete pair matched against a row.
#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub row: Arc<CatalogRow>,
    pub params: BTreeMap<char, i64>,
    pub g: String,
    pub h: String,
    pub h0: String,
    /// True when the pair matched the row with `h` and `h₀` exchanged.
    pub swapped: bool,
    /// Assembled data; `None` for unimplemented rows.
    pub data: Option<Arc<PairData>>,
}

impl CatalogEntry {
    /// `g/h` with parameters substituted.
    pub fn id(&self) -> String {
        format!("{}/{}", self.g, self.h)
    }
}

/// A parsed catalog.
#[derive(Clone, Debug)]
pub struct Catalog {
    rows: Vec<Arc<CatalogRow>>,
}

/// Splits a user name into the name and its `[x=3,…]` assignments.
fn user_assignments(name: &str) -> Result<(String, Params)> {
    let name = name.trim();
    let mut p = Params::new();
    let Some(body) = name.strip_suffix(']') else {
        return Ok((name.to_string(), p));
    };
    let (base, body) = body
        .rsplit_once('[')
        .ok_or_else(|| Error::Parse(format!("unbalanced brackets in {name:?}")))?;
    for item in body.split(',') {
        let (x, v) = item
            .split_once('=')
            .ok_or_else(|| Error::Parse(format!("bad assignment {item:?}")))?;
        let mut cs = x.trim().chars();
        let (Some(c), None) = (cs.next(), cs.next()) else {
            return Err(Error::Parse(format!("bad parameter name {x:?}")));
        };
        let v: i64 = v.trim().parse().map_err(|_| Error::Parse(format!("bad value {v:?}")))?;
        p.insert(c, v);
    }
    Ok((base.to_string(), p))
}

/// An equation `template expression = value` or a deleted summand.
enum Fact {
    Eq(LinExpr, i64),
    Trivial(Summand),
}

/// All ways to match a template against a concrete name.
fn match_name(template: &str, user: &str, assign: &Params) -> Result<Vec<Vec<Fact>>> {
    let t = summands(template)?;
    let u = summands(user)?;
    if u.len() > t.len() {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    let drop = t.len() - u.len();
    // Choose which template summands are omitted.
    for mask in 0u32..1 << t.len() {
        if mask.count_ones() as usize != drop {
            continue;
        }
        let mut facts = Vec::new();
        let mut ok = true;
        let mut ui = u.iter();
        for (i, ts) in t.iter().enumerate() {
            if mask >> i & 1 == 1 {
                if !deletable(ts) {
                    ok = false;
                    break;
                }
                facts.push(Fact::Trivial(ts.clone()));
                continue;
            }
            let us = ui.next().expect("counts agree");
            if ts.head != us.head || ts.tail != us.tail {
                ok = false;
                break;
            }
            match (&ts.args, &us.args) {
                (None, None) => {}
                (Some(ta), Some(ua)) if ta.len() == ua.len() => {
                    for (x, y) in ta.iter().zip(ua) {
                        match LinExpr::parse(x) {
                            Some(e) => match LinExpr::parse(y).and_then(|v| v.eval(assign)) {
                                Some(v) => facts.push(Fact::Eq(e, v)),
                                None => {
                                    ok = false;
                                    break;
                                }
                            },
                            None if x == y => {}
                            None => {
                                ok = false;
                                break;
                            }
                        }
                    }
                }
                _ => ok = false,
            }
            if !ok {
                break;
            }
        }
        if ok {
            out.push(facts);
        }
    }
    Ok(out)
}

/// Solves the equations; `None` if inconsistent, underdetermined or
/// non-integral.
fn solve(eqs: &[(&LinExpr, i64)], bind: &Params) -> Option<Params> {
    let vars: Vec<char> = eqs
        .iter()
        .flat_map(|(e, _)| e.coef.keys().copied())
        .chain(bind.keys().copied())
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let n = vars.len();
    let mut rows: Vec<Vec<Rat>> = Vec::new();
    for (e, v) in eqs {
        let mut r: Vec<Rat> = vars.iter().map(|x| Rat::int(e.coef.get(x).copied().unwrap_or(0))).collect();
        r.push(Rat::int(v - e.constant));
        rows.push(r);
    }
    for (x, v) in bind {
        let mut r: Vec<Rat> = vars.iter().map(|y| if y == x { Rat::one() } else { Rat::zero() }).collect();
        r.push(Rat::int(*v));
        rows.push(r);
    }
    if rows.is_empty() {
        return Some(Params::new());
    }
    let pivots = linalg::row_reduce(&mut rows);
    if pivots.contains(&n) || pivots.len() < n {
        return None;
    }
    let mut p = Params::new();
    for (row, &c) in rows.iter().zip(&pivots) {
        p.insert(vars[c], row[n].to_i64()?);
        if !row[n].is_integer() {
            return None;
        }
    }
    Some(p)
}

fn all_args_nonnegative(template: &str, p: &Params) -> bool {
    summands(template).is_ok_and(|ss| {
        ss.iter().all(|s| {
            s.args.iter().flatten().all(|x| match LinExpr::parse(x) {
                Some(e) if !e.coef.is_empty() => e.eval(p).is_some_and(|v| v >= 0),
                _ => true,
            })
        })
    })
}

impl Catalog {
    /// The built-in catalog; panics only if the embedded text is malformed.
    pub fn builtin() -> Catalog {
        Catalog::from_text(BUILTIN).expect("built-in catalog parses")
    }

    /// The catalog named by `BRANCHKIT_CATALOG`, or the built-in one.
    pub fn load() -> Result<Catalog> {
        match std::env::var_os("BRANCHKIT_CATALOG") {
            Some(path) => {
                let text = std::fs::read_to_string(&path)
                    .map_err(|e| Error::Catalog(format!("{}: {e}", path.to_string_lossy())))?;
                Catalog::from_text(&text)
            }
            None => Ok(Catalog::builtin()),
        }
    }

    /// Parses the catalog text format.
    pub fn from_text(text: &str) -> Result<Catalog> {
        let mut lines = text
            .lines()
            .enumerate()
            .filter(|(_, l)| !l.trim().is_empty() && !l.trim_start().starts_with('#'))
            .peekable();
        match lines.next() {
            Some((_, l)) if l.trim() == "branchkit-catalog v1" => {}
            _ => return Err(Error::Catalog("missing header 'branchkit-catalog v1'".into())),
        }
        let mut rows: Vec<CatalogRow> = Vec::new();
        while let Some((no, line)) = lines.next() {
            let at = |e: Error| Error::Catalog(format!("line {}: {e}", no + 1));
            if let Some(rest) = line.strip_prefix("pair:") {
                rows.push(parse_row(rest).map_err(at)?);
            } else if let Some(rest) = line.strip_prefix("qu:") {
                let id = rest.trim();
                let row = rows
                    .iter_mut()
                    .find(|r| r.id() == id)
                    .ok_or_else(|| at(Error::Catalog(format!("qu block for unknown row {id}"))))?;
                while let Some((no, l)) = lines.next_if(|(_, l)| l.starts_with(' ') || l.starts_with('\t')) {
                    let (k, v) = l
                        .split_once('=')
                        .ok_or_else(|| Error::Catalog(format!("line {}: expected alphaN = …", no + 1)))?;
                    let v: Vec<Rat> = v
                        .split(',')
                        .map(|x| x.trim().parse())
                        .collect::<Result<_>>()
                        .map_err(|e| Error::Catalog(format!("line {}: {e}", no + 1)))?;
                    row.qu.push((k.trim().to_string(), v));
                }
            } else {
                return Err(at(Error::Catalog(format!("unrecognized line {line:?}"))));
            }
        }
        Ok(Catalog {
            rows: rows.into_iter().map(Arc::new).collect(),
        })
    }

    /// All rows.
    pub fn rows(&self) -> &[Arc<CatalogRow>] {
        &self.rows
    }

    /// Rows whose `g` contains `filter` as a substring.
    pub fn list(&self, filter: Option<&str>) -> Vec<&Arc<CatalogRow>> {
        self.rows
            .iter()
            .filter(|r| filter.is_none_or(|f| r.g.contains(f)))
            .collect()
    }

    /// Rows matching the pair, with parameters, in catalog order; direct
    /// matches come before matches with `h` and `h₀` exchanged.
    fn matches(&self, g: &str, h: &str) -> Result<Vec<(Arc<CatalogRow>, Params, bool)>> {
        let (g, mut assign) = user_assignments(g)?;
        let (h, more) = user_assignments(h)?;
        assign.extend(more);
        let mut out = Vec::new();
        for swapped in [false, true] {
            for row in &self.rows {
                let ht = if swapped { &row.h0 } else { &row.h };
                let other = if swapped { &row.h } else { &row.h0 };
                let gm = match_name(&row.g, &g, &assign)?;
                if gm.is_empty() {
                    continue;
                }
                let hm = match_name(ht, &h, &assign)?;
                'alt: for a in &gm {
                    for b in &hm {
                        let eqs: Vec<(&LinExpr, i64)> = a
                            .iter()
                            .chain(b)
                            .filter_map(|f| match f {
                                Fact::Eq(e, v) => Some((e, *v)),
                                Fact::Trivial(_) => None,
                            })
                            .collect();
                        let Some(p) = solve(&eqs, &row.bind) else {
                            continue;
                        };
                        let trivial_ok = a.iter().chain(b).all(|f| match f {
                            Fact::Trivial(s) => is_trivial(s, &p) == Some(true),
                            Fact::Eq(..) => true,
                        });
                        if trivial_ok
                            && row.constraints.iter().all(|c| c.holds(&p))
                            && [&row.g, ht, other].iter().all(|t| all_args_nonnegative(t, &p))
                            && !out.iter().any(|(r, q, s): &(Arc<CatalogRow>, Params, bool)| {
                                Arc::ptr_eq(r, row) && *q == p && *s == swapped
                            })
                        {
                            out.push((row.clone(), p, swapped));
                            break 'alt;
                        }
                    }
                }
            }
        }
        Ok(out)
    }

    /// Every row matching the pair; implemented rows come with their data.
    pub fn lookup_all(&self, g: &str, h: &str) -> Result<Vec<CatalogEntry>> {
        let mut out = Vec::new();
        for (row, p, swapped) in self.matches(g, h)? {
            let gi = instantiate(&row.g, &p);
            let hi = instantiate(&row.h, &p);
            let h0i = instantiate(&row.h0, &p);
            let data = if row.implemented {
                let d = build::build(&row, &p, [&gi, &hi, &h0i])?;
                Some(Arc::new(if swapped { d.swapped() } else { d }))
            } else {
                None
            };
            let (h, h0) = if swapped { (h0i, hi) } else { (hi, h0i) };
            out.push(CatalogEntry {
                row,
                params: p,
                g: gi,
                h,
                h0,
                swapped,
                data,
            });
        }
        Ok(out)
    }

    /// The first implemented row matching the pair.
    pub fn lookup(&self, g: &str, h: &str) -> Result<CatalogEntry> {
        let all = self.lookup_all(g, h)?;
        if let Some(e) = all.iter().find(|e| e.data.is_some()) {
            return Ok(e.clone());
        }
        match all.into_iter().next() {
            Some(e) => Err(Error::Unimplemented {
                pair: e.id(),
                reason: e.row.reason.clone().unwrap_or_default(),
            }),
            None => Err(Error::UnknownPair(format!("{g}/{h}"))),
        }
    }

    /// [`Catalog::lookup`] on `"g/h"`.
    pub fn lookup_pair(&self, pair: &str) -> Result<CatalogEntry> {
        let (g, h) = split_pair(pair)?;
        self.lookup(g, h)
    }
}

/// Splits `"g/h"` at the slash.
pub fn split_pair(pair: &str) -> Result<(&str, &str)> {
    pair.split_once('/')
        .map(|(g, h)| (g.trim(), h.trim()))
        .ok_or_else(|| Error::Parse(format!("pair {pair:?} is not of the form g/h")))
}
