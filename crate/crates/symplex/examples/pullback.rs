//! Pulls a cocycle back along an automorphism pair and shows the invariants survive.

use symplex::catalog::fixtures;
use symplex::exactlin::{int, Matrix};
use symplex::group_action::{invariant_kappa7, pullback, PairIso};

fn main() -> symplex::Result<()> {
    let t = fixtures::rr4("kappa", &int(2));
    let a = t.a().clone();
    let s = Matrix::diag(&[int(3)]);
    // a symplectic shear of R4 with a1^a2 + a3^a4
    let mut u = Matrix::identity(4);
    u[(0, 1)] = int(5);
    let pair = PairIso::new(s, u, a.clone(), a)?;
    let p = pullback(&t, &pair)?;
    println!("xi before {:?}", t.xi_entries());
    println!("xi after  {:?}", p.xi_entries());
    println!("kappa^7 before {} after {}", invariant_kappa7(&t)?, invariant_kappa7(&p)?);
    Ok(())
}
