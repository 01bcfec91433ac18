use symplex::catalog::fixtures::{gamma_line, h3r, r4, rr4, triple, xi_one, xi_one_l, xi_one_n};
use symplex::exactlin::{frac, int, Matrix};
use symplex::group_action::*;
use symplex::quad_ext::{build_standard_model, is_cocycle};
use symplex::symplectic::check_symplectic_iso;
use symplex::Error;

fn tau_a1() -> TauShift {
    let mut tau = Matrix::zeros(4, 1);
    tau[(0, 0)] = int(1);
    TauShift::from_tau(tau)
}

fn h3r_xi1() -> symplex::CocycleTriple {
    triple(1, h3r(), &gamma_line(&[(2, int(1))]), &[], &xi_one())
}

#[test]
fn zero_shift_is_identity() {
    let t = h3r_xi1();
    let s = TauShift::zero(1, 4);
    assert_eq!(act_tau(&t, &s).unwrap(), t);
    assert_eq!(equivalence_iso(&t, &s).unwrap(), Matrix::identity(6));
}

#[test]
fn worked_shift_on_h3r() {
    let t = h3r_xi1();
    let got = act_tau(&t, &tau_a1()).unwrap();
    let mut xi = xi_one();
    xi.push((0, 1, 2, int(-1)));
    let want = triple(1, h3r(), &gamma_line(&[(0, int(1)), (2, int(1))]), &[], &xi);
    assert_eq!(got, want);
    let phi = equivalence_iso(&t, &tau_a1()).unwrap();
    assert!(check_symplectic_iso(&build_standard_model(&t), &build_standard_model(&got), &phi).unwrap());
}

#[test]
fn equivalence_solver_finds_worked_witness() {
    let t = h3r_xi1();
    let t2 = act_tau(&t, &tau_a1()).unwrap();
    match are_equivalent(&t, &t2).unwrap() {
        Verdict::Witness(s) => assert_eq!(act_tau(&t, &s).unwrap(), t2),
        v => panic!("expected a witness, got {v:?}"),
    }
    assert_eq!(are_equivalent(&t, &t).unwrap().witness().unwrap().tau(), &Matrix::zeros(4, 1));
}

#[test]
fn abelian_a_pins_xi() {
    let z = int(0);
    assert_eq!(are_equivalent(&rr4("xi+", &z), &rr4("xi-", &z)).unwrap(), Verdict::NotEquivalent);
}

#[test]
fn mismatched_bases_are_rejected() {
    let z = int(0);
    assert!(are_equivalent(&rr4("xi+", &z), &h3r_xi1()).is_err());
}

#[test]
fn pullback_sign_flip_on_h3r() {
    let g = gamma_line(&[(1, int(1)), (3, int(1))]);
    let t = triple(1, h3r(), &g, &[], &xi_one_n(&int(1)));
    let u = Matrix::diag(&[int(1), int(-1), int(-1), int(1)]);
    let p = PairIso::on(Matrix::diag(&[int(-1)]), u, &h3r()).unwrap();
    let want = triple(1, h3r(), &gamma_line(&[(1, int(-1)), (3, int(1))]), &[], &xi_one_n(&int(1)));
    assert_eq!(pullback(&t, &p).unwrap(), want);
}

#[test]
fn pullback_scaling_on_r4() {
    let z = int(0);
    let mut t = rr4("xi1", &z);
    t.set_gamma(0, 0, 0, int(32));
    let u = Matrix::diag(&[int(2), frac(1, 2), int(1), int(1)]);
    let p = PairIso::on(Matrix::diag(&[frac(1, 4)]), u, &r4()).unwrap();
    assert_eq!(pullback(&t, &p).unwrap(), rr4("xi1", &z));
}

#[test]
fn identity_pair_is_trivial() {
    let t = h3r_xi1();
    let p = PairIso::on(Matrix::identity(1), Matrix::identity(4), &h3r()).unwrap();
    assert_eq!(pullback(&t, &p).unwrap(), t);
}

#[test]
fn bad_pairs_are_rejected() {
    // scales ω on h3+R, so not symplectic
    let u = Matrix::diag(&[int(2), int(1), int(2), int(1)]);
    assert!(matches!(PairIso::on(Matrix::identity(1), u, &h3r()), Err(Error::InvalidPair(_))));
    let singular = Matrix::zeros(1, 1);
    assert!(PairIso::on(singular, Matrix::identity(4), &h3r()).is_err());
}

#[test]
fn composition_of_isos() {
    let t = h3r_xi1();
    let mut t1 = Matrix::zeros(4, 1);
    t1[(0, 0)] = int(1);
    t1[(3, 0)] = frac(2, 3);
    let mut t2 = Matrix::zeros(4, 1);
    t2[(1, 0)] = int(-1);
    t2[(2, 0)] = int(5);
    let p1 = equivalence_iso(&t, &TauShift::from_tau(t1.clone())).unwrap();
    let mid = act_tau(&t, &TauShift::from_tau(t1.clone())).unwrap();
    let p2 = equivalence_iso(&mid, &TauShift::from_tau(t2.clone())).unwrap();
    let sb = composition_sigma(&t, &t1, &t2);
    let sum = TauShift::new(t1.add(&t2).unwrap(), Some(sb)).unwrap();
    assert_eq!(p2.mul(&p1).unwrap(), equivalence_iso(&t, &sum).unwrap());
}

#[test]
fn sign_invariant_values() {
    let z = int(0);
    assert_eq!(invariant_sign_xi2(&rr4("xi+", &z)).unwrap(), 1);
    assert_eq!(invariant_sign_xi2(&rr4("xi-", &z)).unwrap(), -1);
    assert_eq!(invariant_sign_xi2(&rr4("xi1", &z)).unwrap(), 0);
    for n in [1, -1] {
        let t = triple(1, h3r(), &gamma_line(&[(1, int(1)), (3, int(1))]), &[], &xi_one_n(&int(n)));
        // ω(ξ²a₁, a₁) = ω(n a₄, a₁) = −n with ω = α¹∧α⁴ + α²∧α³
        assert_eq!(invariant_sign_xi2(&t).unwrap(), -n as i32);
    }
}

#[test]
fn kappa_invariant_values() {
    for (k, k7) in [(-1, -1), (0, 0), (1, 1), (2, 128)] {
        assert_eq!(invariant_kappa7(&rr4("kappa", &int(k))).unwrap(), int(k7));
    }
    assert!(invariant_kappa7(&rr4("xi+", &int(0))).is_err());
}

#[test]
fn l_invariant_values() {
    for l in [int(2), frac(-1, 2), int(-2), frac(1, 2), int(3)] {
        let t = triple(1, h3r(), &gamma_line(&[(2, &l + int(1))]), &[], &xi_one_l(&l));
        assert_eq!(invariant_l(&t).unwrap(), l);
    }
    assert!(invariant_l(&h3r_xi1()).is_err());
}

#[test]
fn invariants_need_a_line() {
    let t = symplex::CocycleTriple::zero(2, symplex::catalog::fixtures::r2()).unwrap();
    assert!(invariant_sign_xi2(&t).is_err());
}

#[test]
fn eps_keys_of_examples() {
    let d = |v: [i64; 3]| Matrix::diag(&v.map(int));
    let k = |m: &Matrix| eps_orbit_key(m).unwrap();
    assert_eq!(k(&d([1, 0, -1])), k(&d([2, 0, -2])));
    let (c, p) = certify_scalar_conjugacy(&d([1, 0, -1]), &d([2, 0, -2])).unwrap().unwrap();
    assert_eq!(p.mul(&d([1, 0, -1])).unwrap().mul(&p.inverse().unwrap()).unwrap().scale(&c), d([2, 0, -2]));
    assert_ne!(k(&d([1, 0, -1])), k(&d([1, 1, -2])));
    let rot = Matrix::from_ints(3, 3, &[0, 1, 0, -1, 0, 0, 0, 0, 0]);
    let nil = Matrix::from_ints(3, 3, &[0, 1, 0, 0, 0, 1, 0, 0, 0]);
    assert_ne!(k(&rot), k(&nil));
    assert!(eps_orbit_key(&d([1, 0, 0])).is_err());
    assert!(eps_orbit_key(&Matrix::from_ints(3, 3, &[0, 1, 0, 0, 0, 0, 0, 0, 0])).is_err());
}

#[test]
fn shifted_cocycles_stay_cocycles() {
    let t = h3r_xi1();
    let s = act_tau(&t, &TauShift::from_tau(Matrix::from_ints(4, 1, &[3, -1, 2, 7]))).unwrap();
    assert!(is_cocycle(&s).ok());
}
