//! Branching routes against each other and against brute-force oracles.

mod common;

use std::collections::BTreeMap;

use branchkit::branching::{
    blattner, blattner_spectrum, central_shift, compact_branch, compact_branch_route, construct_k2_trivial_parameter, duality_branch,
    duality_branch_shifted, duality_setup, duflo_vargas, duflo_vargas_setup, h0_parameter, h0_parameters,
    lowest_k_type, multiplicity_free, BlattnerMode, CompactRoute, Setup,
};
use branchkit::catalog::PairData;
use branchkit::distribution::TruncationWindow;
use branchkit::oracle::brute_branch;
use branchkit::report::Report;
use branchkit::{Error, Rat, Weight};
use common::{data, rho_parameter, EQUAL_RANK_SMALL, SU_NONHOLOMORPHIC, UNEQUAL_RANK};
use proptest::prelude::*;

fn w(d: &PairData, text: &str) -> Weight {
    Weight::parse(text, d.g.basis()).unwrap()
}

fn cheap_pairs() -> impl Iterator<Item = &'static (&'static str, &'static str)> {
    EQUAL_RANK_SMALL.iter().chain(UNEQUAL_RANK.iter().filter(|(g, _)| !g.starts_with("e6")))
}

/// Compact branching checked against Freudenthal multiplicities peeled into
/// characters of `L ∩ K₂`.
fn check_compact(d: &PairData, lambda: &Weight) {
    let param = d.validate_parameter(lambda).unwrap();
    let cb = compact_branch(d, &param).unwrap();
    let rho_k2 = cb.k2_positive.iter().fold(Weight::zero(lambda.basis()), |s, a| &s + a).scale(&Rat::half());
    let highest = &cb.lambda2 - &rho_k2;
    let expected = brute_branch((&cb.k2_positive, &highest), &cb.psi_lk2.vectors(), |x| d.q.apply(x)).unwrap();
    assert_eq!(cb.entries, expected, "{} at {lambda}", d.id());
    // Both evaluation routes give the same answer.
    let split = d.k1_split(&param.chamber).unwrap();
    let xi = d.q.apply(&param.chamber.rho());
    for route in [CompactRoute::Skew, CompactRoute::Pointwise] {
        let other = compact_branch_route(d, &param.chamber, &split, &xi, &cb.lambda2, route).unwrap();
        assert_eq!(other.entries, expected, "{} at {lambda} by {route:?}", d.id());
    }
}

#[test]
fn compact_branching_matches_freudenthal_peeling() {
    for (g, h) in cheap_pairs() {
        let d = data(g, h);
        for m in 0..d.family.len() {
            let Some(l) = rho_parameter(&d, m) else { continue };
            check_compact(&d, &l);
            // A parameter further from the walls gives a larger K₂-type.
            let l2 = &l.scale(&Rat::int(2)) + &d.family[m].system.rho();
            if d.validate_parameter(&l2).is_ok() {
                check_compact(&d, &l2);
            }
        }
    }
}

#[test]
fn compact_branching_sp2_to_sp1_sp1() {
    // Sp(2) ↓ Sp(1)×Sp(1) inside sp(1,2)/sp(1,1)+sp(1): K₂ = Sp(2) on the
    // ε-coordinates. λ₂ = ρ(Sp(2)) = (2,1) is the trivial type; (3,1) is the
    // four-dimensional type, which splits as (1)⊗(0) ⊕ (0)⊗(1).
    let d = data("sp(1,2)", "sp(1,1)+sp(1)");
    let p = d.validate_parameter(&w(&d, "2,1|4")).unwrap();
    let cb = compact_branch(&d, &p).unwrap();
    assert_eq!(cb.dimension(), Rat::int(1));
    assert_eq!(cb.entries.len(), 1);
    let p = d.validate_parameter(&w(&d, "3,1|5")).unwrap();
    let cb = compact_branch(&d, &p).unwrap();
    assert_eq!(cb.dimension(), Rat::int(4));
    assert_eq!(cb.entries.values().copied().collect::<Vec<_>>(), vec![1, 1]);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn compact_branching_random_parameters(
        which in 0usize..4,
        k in 1i64..4,
        shift in proptest::collection::vec(0i64..3, 8),
    ) {
        let (g, h) = [
            ("sp(1,3)", "sp(1,1)+sp(2)"),
            ("so(4,5)", "so(4,3)+so(2)"),
            ("su(3,2)", "su(3,1)+su(1)+u(1)"),
            ("so(6,3)", "so(6,1)+so(2)"),
        ][which];
        let d = data(g, h);
        let psi = &d.family[0].system;
        // λ = kρ + Σ c_i α_i over the simple roots stays in the chamber for
        // small c_i most of the time; other draws are skipped.
        let mut l = psi.rho().scale(&Rat::int(k));
        for (a, &c) in psi.simple_roots().iter().zip(&shift) {
            l = &l + &a.vector.scale(&Rat::int(c));
        }
        prop_assume!(d.validate_parameter(&l).is_ok());
        check_compact(&d, &l);
    }
}

#[test]
fn duality_and_duflo_vargas_agree() {
    let bound = Rat::int(12);
    for (g, h) in cheap_pairs() {
        let d = data(g, h);
        for m in 0..d.family.len() {
            let Some(l) = rho_parameter(&d, m) else { continue };
            let s = Setup::new(&d, &l, &bound).unwrap();
            let a = duality_setup(&s).unwrap();
            let b = duflo_vargas_setup(&s).unwrap();
            assert_eq!(a.entries, b.entries, "{g}/{h} at {l}");
            // The calibrated sign is (−1)^{|Δ⁺(k/l)|}.
            let pos: u32 = d
                .k_over_l
                .items()
                .filter(|(r, _)| s.systems.xi.inner(r).is_positive())
                .map(|(_, c)| c)
                .sum();
            if !b.entries.is_empty() {
                assert_eq!(b.sign, if pos % 2 == 0 { 1 } else { -1 }, "{g}/{h}");
            }
        }
    }
}

#[test]
fn spectrum_lies_in_one_chamber_of_h() {
    let bound = Rat::int(12);
    for (g, h) in cheap_pairs() {
        let d = data(g, h);
        for m in 0..d.family.len() {
            let Some(l) = rho_parameter(&d, m) else { continue };
            let s = Setup::new(&d, &l, &bound).unwrap();
            let r = duality_setup(&s).unwrap();
            for mu in r.entries.keys() {
                assert!(s.systems.psi_h.is_dominant(mu, true), "{g}/{h}: {mu} not in the chamber");
                assert!(s.window.contains(mu));
            }
        }
    }
}

#[test]
fn translation_of_the_h0_parameter_is_harmless() {
    let bound = Rat::int(12);
    let mut pairs: Vec<_> = cheap_pairs().collect();
    pairs.push(&("su(4,2)", "su(4,1)+su(1)+u(1)"));
    for (g, h) in pairs {
        let d = data(g, h);
        for m in 0..d.family.len() {
            let Some(l) = rho_parameter(&d, m) else { continue };
            let a = duality_branch(&d, &l, &bound).unwrap();
            let b = duality_branch_shifted(&d, &l, &bound).unwrap();
            assert_eq!(a.entries, b.entries, "{g}/{h}");
        }
    }
}

#[test]
fn restricted_blattner_agrees_on_bds_and_su_families() {
    let bound = Rat::int(12);
    let mut pairs: Vec<(&str, &str)> = EQUAL_RANK_SMALL.to_vec();
    pairs.extend_from_slice(SU_NONHOLOMORPHIC);
    for (g, h) in pairs {
        let d = data(g, h);
        for m in 0..d.family.len() {
            let bds = d.family[m].bds;
            if !bds && !g.starts_with("su(") {
                continue;
            }
            let Some(l) = rho_parameter(&d, m) else { continue };
            let s = Setup::new(&d, &l, &bound).unwrap();
            let psi = &s.systems.psi_h0;
            let window = TruncationWindow::new(s.systems.xi.clone(), &s.window.bound + &Rat::int(6));
            for (eta, _) in h0_parameters(&s).unwrap() {
                let full = blattner_spectrum(psi, &eta, &window, BlattnerMode::Full).unwrap();
                let restricted = blattner_spectrum(psi, &eta, &window, BlattnerMode::Restricted).unwrap();
                assert_eq!(full, restricted, "{g}/{h} at η = {eta}");
            }
        }
    }
}

#[test]
fn lowest_k_type_of_the_quaternionic_example() {
    let d = data("sp(1,3)", "sp(1,1)+sp(2)");
    let p = d.validate_parameter(&w(&d, "3,2,1|5")).unwrap();
    let t = lowest_k_type(&d, &p).unwrap();
    assert_eq!(t.hc, w(&d, "3,2,1|8"));
    assert_eq!(t.highest_weight, w(&d, "0,0,0|7"));
    assert_eq!(t.parts, (w(&d, "0,0,0|8"), w(&d, "3,2,1|0")));
}

#[test]
fn central_shift_values() {
    // Ψ_a with a = 1 on su(3,2): ρ_n = (1,−1,−1 | 1/2,1/2), whose part
    // orthogonal to K₁ = SU(3) is the central (−1/3,−1/3,−1/3 | 1/2,1/2).
    let d = data("su(3,2)", "su(3,1)+su(1)+u(1)");
    let a1 = d.family.iter().position(|m| m.system.rho_n() == w(&d, "1,-1,-1|1/2,1/2")).unwrap();
    let l = rho_parameter(&d, a1).unwrap();
    let p = d.validate_parameter(&l).unwrap();
    assert_eq!(central_shift(&d, &p).unwrap(), w(&d, "-1/3,-1/3,-1/3|1/2,1/2"));
    for (g, h) in [("sp(3,R)", "u(1,2)"), ("so(6,4)", "so(6,2)+so(2)"), ("sp(1,3)", "sp(1,1)+sp(2)")] {
        let d = data(g, h);
        let l = rho_parameter(&d, 0).unwrap();
        let p = d.validate_parameter(&l).unwrap();
        assert!(central_shift(&d, &p).unwrap().is_zero(), "{g}/{h}");
    }
}

#[test]
fn k2_trivial_parameters() {
    let d = data("sp(1,3)", "sp(1,1)+sp(2)");
    let p = construct_k2_trivial_parameter(&d, 0, &[5]).unwrap();
    assert_eq!(p.lambda, w(&d, "3,2,1|5"));
    assert!(matches!(construct_k2_trivial_parameter(&d, 0, &[5, 4]), Err(Error::HeightsInsufficient(_))));
    let d = data("su(3,2)", "su(3,1)+su(1)+u(1)");
    assert!(matches!(
        construct_k2_trivial_parameter(&d, 0, &[1, 1, 0]),
        Err(Error::HeightsInsufficient(_))
    ));
    // The quaternionic F₄ parameter with height 12.
    let d = data("f4(4)", "so(5,4)");
    let p = construct_k2_trivial_parameter(&d, 0, &[12]).unwrap();
    assert_eq!(p.lambda, Weight::parse("15/2,9/2,3/2,1/2", d.g.basis()).unwrap());
}

#[test]
fn h0_parameter_inverts_the_lowest_type() {
    let d = data("sp(1,3)", "sp(1,1)+sp(2)");
    let l = w(&d, "3,2,1|5");
    let s = Setup::new(&d, &l, &Rat::int(15)).unwrap();
    let psi = &s.systems.psi_h0;
    for (eta, _) in h0_parameters(&s).unwrap() {
        let nu = &eta + &psi.rho_n();
        assert_eq!(h0_parameter(&d, psi, &nu).unwrap(), eta);
    }
    let bad = psi.rho().scale(&Rat::int(-1));
    assert!(h0_parameter(&d, psi, &bad).is_err());
}

#[test]
fn blattner_lowest_type_and_empty_window() {
    let d = data("sp(1,2)", "sp(1,1)+sp(1)");
    let psi = &d.family[0].system;
    let eta = psi.rho().scale(&Rat::int(2));
    let lowest = &eta + &psi.rho_n();
    for mode in [BlattnerMode::Full, BlattnerMode::Restricted] {
        assert_eq!(blattner(psi, &eta, &lowest, mode).unwrap(), 1);
        let xi = psi.rho();
        let below = TruncationWindow::new(xi.clone(), &xi.inner(&lowest) - &Rat::int(1));
        assert!(blattner_spectrum(psi, &eta, &below, mode).unwrap().is_empty());
        let above = TruncationWindow::new(xi.clone(), xi.inner(&lowest));
        let s = blattner_spectrum(psi, &eta, &above, mode).unwrap();
        assert_eq!(s, BTreeMap::from([(lowest.clone(), 1)]));
    }
}

#[test]
fn negative_window_is_rejected() {
    let d = data("sp(1,3)", "sp(1,1)+sp(2)");
    let l = w(&d, "3,2,1|5");
    assert!(matches!(duality_branch(&d, &l, &Rat::int(-1)), Err(Error::WindowUnderflow)));
    assert!(matches!(duflo_vargas(&d, &l, &Rat::int(-1)), Err(Error::WindowUnderflow)));
}

#[test]
fn multiplicity_free_detects_a_repeat() {
    let d = data("sp(1,3)", "sp(1,1)+sp(2)");
    let mut r = duality_branch(&d, &w(&d, "3,2,1|5"), &Rat::int(15)).unwrap();
    assert!(multiplicity_free(&r));
    let first = r.entries.keys().next().unwrap().clone();
    r.entries.insert(first, 2);
    assert!(!multiplicity_free(&r));
    assert!(!Report::new(&r).multiplicity_free);
}

#[test]
fn su22_scalar_type_is_multiplicity_free_but_a_larger_one_is_not() {
    let d = data("su(2,2)", "su(1,1)+su(1,1)+u(1)");
    let scalar = duality_branch(&d, &w(&d, "5/2,3/2|-3/2,-5/2"), &Rat::int(12)).unwrap();
    assert!(!scalar.entries.is_empty() && scalar.multiplicity_free());
    let big = duality_branch(&d, &w(&d, "9/2,1/2|-3/2,-7/2"), &Rat::int(12)).unwrap();
    assert!(big.entries.values().any(|&m| m >= 2));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn json_round_trip(mults in proptest::collection::vec(1u64..5, 0..6), sign in prop_oneof![Just(1i32), Just(-1)]) {
        let d = data("sp(1,3)", "sp(1,1)+sp(2)");
        let mut r = duality_branch(&d, &w(&d, "3,2,1|5"), &Rat::int(15)).unwrap();
        r.sign = sign;
        r.entries = mults
            .iter()
            .enumerate()
            .map(|(i, &m)| (w(&d, &format!("{},{},1|{}", i + 3, 2, i + 9)), m))
            .collect();
        let rep = Report::new(&r);
        let back = Report::from_json(&rep.to_json()).unwrap();
        prop_assert_eq!(&back, &rep);
        prop_assert_eq!(back.to_json(), rep.to_json());
    }
}

#[test]
fn lowest_h_type_multiplicity_is_read_off_the_lowest_k_type() {
    // The ξ-lowest H-parameter μ occurs as often as its lowest L-type
    // (infinitesimal character μ + ρ_n^H) occurs in the lowest K-type.
    let bound = Rat::int(12);
    for (g, h) in cheap_pairs() {
        let d = data(g, h);
        for m in 0..d.family.len() {
            let Some(l) = rho_parameter(&d, m) else { continue };
            let s = Setup::new(&d, &l, &bound).unwrap();
            let r = duality_setup(&s).unwrap();
            let Some((mu, mult)) = r.sorted().into_iter().next() else { continue };
            let tau = lowest_k_type(&d, &s.param).unwrap();
            let k_pos = s.param.chamber.compact();
            let restricted = brute_branch((&k_pos, &tau.highest_weight), &s.systems.psi_l.vectors(), |x| d.q.apply(x)).unwrap();
            let sigma = &mu + &s.systems.psi_h.rho_n();
            assert_eq!(restricted.get(&sigma).copied().unwrap_or(0), mult, "{g}/{h} at {l}: μ = {mu}");
        }
    }
}
