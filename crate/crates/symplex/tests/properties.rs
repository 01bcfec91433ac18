mod common;

use common::*;
use proptest::prelude::*;
use symplex::catalog::{bundled_dim6, entry_triple, Family};
use symplex::exactlin::{frac, parse_scalar, Matrix};
use symplex::group_action::*;
use symplex::quad_ext::{
    build_standard_model, eps_matrix, is_balanced, is_cocycle, is_nilpotent_cocycle,
};
use symplex::symplectic::check_symplectic_iso;

fn pick(idx: usize, family: Option<Family>) -> (Family, symplex::CocycleTriple) {
    let all: Vec<_> =
        bundled_dim6().into_iter().filter(|e| family.is_none_or(|f| e.family == f)).collect();
    let e = &all[idx % all.len()];
    (e.family, entry_triple(e))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn scalar_text_round_trips(n in -10_000i64..10_000, d in 1i64..500) {
        let x = frac(n, d);
        prop_assert_eq!(parse_scalar(&x.to_string()), Some(x));
    }

    #[test]
    fn shifts_add(idx in 0usize..66, seed: u64) {
        let (_, t) = pick(idx, None);
        let mut r = rng(seed);
        let (s1, s2) = (rand_tau(&mut r, &t), rand_tau(&mut r, &t));
        let twice = act_tau(&act_tau(&t, &s1).unwrap(), &s2).unwrap();
        let sum = TauShift::from_tau(s1.tau().add(s2.tau()).unwrap());
        prop_assert_eq!(twice, act_tau(&t, &sum).unwrap());
    }

    #[test]
    fn iso_certifies_every_shift(idx in 0usize..66, seed: u64) {
        let (_, t) = pick(idx, None);
        let mut r = rng(seed);
        let s = rand_tau(&mut r, &t);
        let phi = equivalence_iso(&t, &s).unwrap();
        let shifted = act_tau(&t, &s).unwrap();
        prop_assert!(check_symplectic_iso(&build_standard_model(&t), &build_standard_model(&shifted), &phi).unwrap());
    }

    #[test]
    fn pullback_commutes_with_shift(idx in 0usize..66, seed: u64) {
        let (fam, t) = pick(idx, None);
        let mut r = rng(seed);
        let p = rand_pair(&mut r, fam, &t);
        let s = rand_tau(&mut r, &t);
        let lhs = pullback(&act_tau(&t, &s).unwrap(), &p).unwrap();
        let pulled_tau = TauShift::from_tau(pull_tau(s.tau(), &p).unwrap());
        let rhs = act_tau(&pullback(&t, &p).unwrap(), &pulled_tau).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn pullback_keeps_verdicts(idx in 0usize..66, seed: u64) {
        let (fam, t) = pick(idx, None);
        let mut r = rng(seed);
        let q = pullback(&t, &rand_pair(&mut r, fam, &t)).unwrap();
        prop_assert!(is_cocycle(&q).ok());
        prop_assert!(is_balanced(&q).ok());
        prop_assert!(is_nilpotent_cocycle(&q).ok());
    }

    #[test]
    fn invariants_survive_the_actions(idx in 0usize..30, seed: u64) {
        let (fam, t) = pick(idx, Some(if idx % 2 == 0 { Family::RR4 } else { Family::RH3R }));
        let mut r = rng(seed);
        let moved = pullback(&act_tau(&t, &rand_tau(&mut r, &t)).unwrap(), &rand_pair(&mut r, fam, &t)).unwrap();
        prop_assert_eq!(invariant_sign_xi2(&t).ok(), invariant_sign_xi2(&moved).ok());
        prop_assert_eq!(invariant_kappa7(&t).ok(), invariant_kappa7(&moved).ok());
        prop_assert_eq!(invariant_l(&t).ok(), invariant_l(&moved).ok());
    }

    #[test]
    fn eps_key_follows_the_transformation_law(idx in 0usize..8, seed: u64) {
        let (_, t) = pick(idx, Some(Family::R3Zero));
        let m = eps_matrix(&t).unwrap();
        let mut r = rng(seed);
        let s = rand_invertible(&mut r, 3);
        let st = s.transpose();
        let moved = st.mul(&m).unwrap().mul(&st.inverse().unwrap()).unwrap().scale(&st.det().unwrap());
        prop_assert_eq!(eps_orbit_key(&m).unwrap(), eps_orbit_key(&moved).unwrap());
    }

    #[test]
    fn inverse_is_two_sided(seed: u64, n in 1usize..5) {
        let mut r = rng(seed);
        let m = rand_invertible(&mut r, n);
        let inv = m.inverse().unwrap();
        prop_assert_eq!(m.mul(&inv).unwrap(), Matrix::identity(n));
        prop_assert_eq!(inv.mul(&m).unwrap(), Matrix::identity(n));
    }
}
