//! One line per acceptance criterion: `criterion N: PASS|FAIL detail`.
//!
//! Criteria listed in `KNOWN_UNATTAINABLE` print their outcome without
//! failing the run; every other criterion must pass.

mod common;

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use branchkit::branching::{
    blattner, blattner_spectrum, central_shift, compact_branch_at, construct_k2_trivial_parameter, duality_branch,
    duality_setup, duflo_vargas_setup, h0_parameters, BlattnerMode, Setup,
};
use branchkit::catalog::Catalog;
use branchkit::distribution::TruncationWindow;
use branchkit::report::Report;
use branchkit::verify::{example_i, example_iii, example_iv, pair_data, sp1b_types};
use branchkit::{Rat, Weight};
use common::partitions::*;
use common::{data, rho_parameter, EQUAL_RANK_SMALL, SU_NONHOLOMORPHIC};
use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestRng, TestRunner};

/// The stated Example III parameter `n = 10` is singular; the closed form is
/// checked at the first valid `n` instead and the criterion reports FAIL.
const KNOWN_UNATTAINABLE: &[u32] = &[4];

struct Outcome {
    pass: bool,
    detail: String,
    /// Output checked for determinism.
    json: Vec<String>,
}

fn timed(limit: Duration, f: impl FnOnce() -> Outcome) -> Outcome {
    let t = Instant::now();
    let mut o = f();
    let e = t.elapsed();
    if e > limit {
        o.pass = false;
        o.detail.push_str(&format!("; took {e:.1?}, over {limit:?}"));
    } else {
        o.detail.push_str(&format!(" ({e:.1?})"));
    }
    o
}

fn verify_outcome(rep: branchkit::Result<branchkit::verify::VerifyReport>) -> Outcome {
    match rep {
        Ok(r) => Outcome {
            pass: r.passed(),
            detail: match &r.mismatch {
                None => format!("{}, {} entries match", r.instance, r.lines.len()),
                Some(m) => format!("{}: {m}", r.instance),
            },
            json: match &r.result {
                Some(res) => vec![Report::new(res).to_json()],
                None => r.lines.clone(),
            },
        },
        Err(e) => Outcome {
            pass: false,
            detail: e.to_string(),
            json: vec![],
        },
    }
}

fn criterion_1() -> Outcome {
    timed(Duration::from_secs(5), || verify_outcome(example_i(&Catalog::builtin(), 5, 15)))
}

fn criterion_2() -> Outcome {
    timed(Duration::from_secs(5), || verify_outcome(sp1b_types(&Catalog::builtin(), 2, &[4], 12)))
}

fn criterion_3() -> Outcome {
    timed(Duration::from_secs(30), || verify_outcome(example_iv(&Catalog::builtin())))
}

fn criterion_4() -> Outcome {
    timed(Duration::from_secs(600), || {
        let cat = Catalog::builtin();
        let stated = match example_iii(&cat, 10, 32) {
            Ok(r) => format!("n = 10 ran: {}", if r.passed() { "match" } else { "mismatch" }),
            Err(e) => format!("n = 10 is rejected ({e})"),
        };
        let mut o = verify_outcome(example_iii(&cat, 21, 32));
        let substitute = o.pass;
        o.pass = false;
        o.detail = format!(
            "{stated}; at n = 21 the closed form {}: {}",
            if substitute { "holds" } else { "FAILS" },
            o.detail
        );
        // Record the substitute's own status for the assertion below.
        o.json.push(format!("substitute:{substitute}"));
        o
    })
}

fn criterion_5() -> Outcome {
    timed(Duration::from_secs(120), || {
        let cat = Catalog::builtin();
        let bound = Rat::int(12);
        let mut json = Vec::new();
        let mut tables = std::collections::BTreeSet::new();
        let mut failures = Vec::new();
        for (g, h) in EQUAL_RANK_SMALL {
            let d = data(g, h);
            if d.g.basis().rank() > 5 {
                continue;
            }
            let Some(l) = rho_parameter(&d, 0) else { continue };
            let s = Setup::new(&d, &l, &bound).unwrap();
            let (a, b) = (duality_setup(&s), duflo_vargas_setup(&s));
            match (a, b) {
                (Ok(a), Ok(b)) if a.entries == b.entries => {
                    tables.insert(cat.lookup(g, h).unwrap().row.table);
                    json.push(Report::new(&a).to_json());
                    json.push(Report::new(&b).to_json());
                }
                (a, b) => failures.push(format!(
                    "{g}/{h}: {:?} vs {:?}",
                    a.map(|r| r.entries.len()).map_err(|e| e.to_string()),
                    b.map(|r| r.entries.len()).map_err(|e| e.to_string())
                )),
            }
        }
        let agreed = json.len() / 2;
        Outcome {
            pass: failures.is_empty() && agreed >= 8 && tables.len() >= 2,
            detail: format!(
                "{agreed} instances agree across tables {tables:?}{}",
                if failures.is_empty() { String::new() } else { format!("; disagreements: {}", failures.join("; ")) }
            ),
            json,
        }
    })
}

fn criterion_6() -> Outcome {
    timed(Duration::from_secs(120), || {
        let mut notes = Vec::new();
        let mut pass = true;

        // (a) Blattner multiplicities are unchanged when both the parameter
        // and the type are moved by ρ_n of the H-system.
        let mut sampled = 0;
        'outer: for (g, h) in EQUAL_RANK_SMALL {
            let d = data(g, h);
            for m in 0..d.family.len() {
                let Some(l) = rho_parameter(&d, m) else { continue };
                let s = Setup::new(&d, &l, &Rat::int(12)).unwrap();
                let psi = &s.systems.psi_h0;
                let v = s.systems.psi_h.rho_n();
                for (eta, _) in h0_parameters(&s).unwrap().into_iter().take(2) {
                    let spectrum = blattner_spectrum(psi, &eta, &s.window, BlattnerMode::Full).unwrap();
                    for mu in spectrum.keys().take(2) {
                        let a = blattner(psi, &eta, mu, BlattnerMode::Full).unwrap();
                        let b = blattner(psi, &(&eta + &v), &(mu + &v), BlattnerMode::Full).unwrap();
                        if a != b {
                            pass = false;
                            notes.push(format!("(a) {g}/{h} η = {eta} μ = {mu}: {a} vs {b}"));
                        }
                        sampled += 1;
                        if sampled == 50 {
                            break 'outer;
                        }
                    }
                }
            }
        }
        if sampled < 50 {
            pass = false;
        }
        notes.push(format!("(a) {sampled} translations"));

        // (b) Full and restricted Blattner spectra agree on every
        // Borel–de Siebenthal H₀-system and on the su/so exceptions.
        let cat = Catalog::builtin();
        let mut systems = 0;
        let extra = [
            ("e6(2)", "so(6,4)+so(2)"),
            ("e6(-14)", "so(2,8)+so(2)"),
            ("e6(-14)", "su(2,4)+su(2)"),
            ("e7(-5)", "so(8,4)+su(2)"),
            ("e7(-5)", "su(6,2)"),
            ("e7(-25)", "so*(12)+su(2)"),
        ];
        for (g, h) in EQUAL_RANK_SMALL.iter().chain(SU_NONHOLOMORPHIC).chain(&extra) {
            let d = pair_data(&cat, g, h).unwrap();
            for m in &d.family {
                let sys = d.induced_systems(&m.system).unwrap();
                let psi = &sys.psi_h0;
                let exception = g.starts_with("su(") || g.starts_with("so(") && !g.starts_with("so(2,");
                if !psi.is_borel_de_siebenthal() && !exception {
                    continue;
                }
                let eta = psi.rho().scale(&Rat::int(2));
                let lowest = &eta + &psi.rho_n();
                let xi = &sys.xi;
                let window = TruncationWindow::new(xi.clone(), &xi.inner(&lowest) + &Rat::int(6));
                let full = blattner_spectrum(psi, &eta, &window, BlattnerMode::Full).unwrap();
                let restricted = blattner_spectrum(psi, &eta, &window, BlattnerMode::Restricted).unwrap();
                if full != restricted || full.is_empty() {
                    pass = false;
                    notes.push(format!("(b) {g}/{h} {}: full and restricted differ", psi.name()));
                }
                systems += 1;
            }
        }
        notes.push(format!("(b) {systems} systems"));

        // (c) Moving λ₂ by the central shift moves the compact branching by
        // its restriction and keeps the multiplicities.
        let mut shifted = 0;
        for (g, h) in SU_NONHOLOMORPHIC.iter().chain(&[("su(2,2)", "su(1,1)+su(1,1)+u(1)"), ("su(3,2)", "su(2,1)+su(1,1)+u(1)")]) {
            let d = data(g, h);
            for m in 0..d.family.len() {
                let Some(l) = rho_parameter(&d, m) else { continue };
                let p = d.validate_parameter(&l).unwrap();
                let split = d.k1_split(&p.chamber).unwrap();
                let xi = d.q.apply(&p.chamber.rho());
                let shift = central_shift(&d, &p).unwrap();
                let (_, l2) = split.split(&l);
                let a = compact_branch_at(&d, &p.chamber, &split, &xi, &l2).unwrap();
                let b = compact_branch_at(&d, &p.chamber, &split, &xi, &(&l2 + &shift)).unwrap();
                let qs = d.q.apply(&shift);
                let moved: BTreeMap<Weight, u64> = a.entries.iter().map(|(k, &v)| (k + &qs, v)).collect();
                if moved != b.entries {
                    pass = false;
                    notes.push(format!("(c) {g}/{h}: shift {shift} breaks translation"));
                }
                shifted += 1;
            }
        }
        notes.push(format!("(c) {shifted} su(m,n) parameters"));
        Outcome {
            pass,
            detail: notes.join(", "),
            json: vec![],
        }
    })
}

fn run_cases<S: Strategy>(cases: u32, strategy: S, check: impl Fn(S::Value) -> Check) -> Result<(), String> {
    let config = Config {
        cases,
        failure_persistence: None,
        ..Config::default()
    };
    let mut runner = TestRunner::new_with_rng(config, TestRng::deterministic_rng(RngAlgorithm::ChaCha));
    runner.run(&strategy, check).map_err(|e| e.to_string())
}

fn criterion_7() -> Outcome {
    timed(Duration::from_secs(60), || {
        let results = [
            ("kostant", run_cases(1000, (gens_strategy(), prop::array::uniform3(-4i64..=6)), |(g, t)| kostant_matches_exhaustive(&g, t))),
            ("heaviside", run_cases(1000, (gens_strategy(), 0i64..=20), |(g, b)| heaviside_matches_exhaustive(&g, b))),
            (
                "convolution",
                run_cases(200, (points_strategy(), points_strategy(), gens_strategy(), 0i64..=15), |(a, b, g, n)| {
                    convolution_laws(&a, &b, &g, n)
                }),
            ),
            (
                "refinement",
                run_cases(100, (gens_strategy(), 0i64..=10, 0i64..=10, prop::array::uniform3(-2i64..=2)), |(g, s, e, v)| {
                    window_refines(&g, s, e, v)
                }),
            ),
        ];
        let failures: Vec<String> = results
            .iter()
            .filter_map(|(n, r)| r.as_ref().err().map(|e| format!("{n}: {e}")))
            .collect();
        Outcome {
            pass: failures.is_empty(),
            detail: if failures.is_empty() {
                "1000 kostant, 1000 heaviside, 200 convolution, 100 refinement cases".into()
            } else {
                failures.join("; ")
            },
            json: vec![],
        }
    })
}

fn criterion_8() -> Outcome {
    timed(Duration::from_secs(300), || {
        let cat = Catalog::builtin();
        let mut notes = Vec::new();
        let mut pass = true;
        let mut check = |name: &str, r: branchkit::Result<branchkit::branching::BranchingResult>, want: bool| match r {
            Ok(r) => {
                let got = r.multiplicity_free() && !r.entries.is_empty();
                let max = r.entries.values().max().copied().unwrap_or(0);
                notes.push(format!(
                    "{name} {} ({} types, max {max}, window {} above q(λ))",
                    if got { "free" } else { "not free" },
                    r.entries.len(),
                    r.relative_bound
                ));
                pass &= got == want;
            }
            Err(e) => {
                notes.push(format!("{name}: {e}"));
                pass = false;
            }
        };
        let d = pair_data(&cat, "sp(1,3)", "sp(1,1)+sp(2)").unwrap();
        check("I", duality_branch(&d, &construct_k2_trivial_parameter(&d, 0, &[5]).unwrap().lambda, &Rat::int(15)), true);
        let d = pair_data(&cat, "so(4,2)", "so(4,1)").unwrap();
        check("II", duality_branch(&d, &Weight::parse("3,2|1", d.g.basis()).unwrap(), &Rat::int(12)), true);
        let d = pair_data(&cat, "f4(4)", "so(5,4)").unwrap();
        let l = construct_k2_trivial_parameter(&d, 0, &[12]).unwrap().lambda;
        check("f4(4)/so(5,4)", duality_branch(&d, &l, &Rat::int(30)), true);
        let d = pair_data(&cat, "su(2,2)", "su(1,1)+su(1,1)+u(1)").unwrap();
        let l = Weight::parse("9/2,1/2|-3/2,-7/2", d.g.basis()).unwrap();
        check("su(2,2)/su(1,1)+su(1,1)+u(1)", duality_branch(&d, &l, &Rat::int(12)), false);
        Outcome {
            pass,
            detail: notes.join(", "),
            json: vec![],
        }
    })
}

fn in_pool<T: Send>(threads: usize, f: impl FnOnce() -> T + Send) -> T {
    rayon::ThreadPoolBuilder::new().num_threads(threads).build().unwrap().install(f)
}

fn first_five() -> Vec<Outcome> {
    vec![criterion_1(), criterion_2(), criterion_3(), criterion_4(), criterion_5()]
}

#[test]
fn acceptance() {
    let mut outcomes = in_pool(4, first_five);
    let single = in_pool(1, first_five);
    let same = outcomes.iter().zip(&single).all(|(a, b)| a.json == b.json && !a.json.is_empty());
    outcomes.push(criterion_6());
    outcomes.push(criterion_7());
    outcomes.push(criterion_8());
    outcomes.push(Outcome {
        pass: same,
        detail: format!(
            "JSON of criteria 1-5 is {} at 1 and 4 threads",
            if same { "byte-identical" } else { "DIFFERENT" }
        ),
        json: vec![],
    });
    let mut failed = Vec::new();
    for (i, o) in outcomes.iter().enumerate() {
        let n = i as u32 + 1;
        println!("criterion {n}: {} {}", if o.pass { "PASS" } else { "FAIL" }, o.detail);
        if !o.pass && !KNOWN_UNATTAINABLE.contains(&n) {
            failed.push(n);
        }
    }
    let substitute = outcomes[3].json.iter().any(|j| j == "substitute:true");
    assert!(substitute, "the Example III closed form fails at n = 21");
    assert!(failed.is_empty(), "criteria {failed:?} failed");
}
