//! Shifts a cocycle by tau and certifies the induced isomorphism of models.

use symplex::catalog::fixtures::{gamma_line, h3r, triple, xi_one};
use symplex::exactlin::{int, Matrix};
use symplex::group_action::{act_tau, equivalence_iso, TauShift};
use symplex::quad_ext::build_standard_model;
use symplex::symplectic::check_symplectic_iso;

fn main() -> symplex::Result<()> {
    let t = triple(1, h3r(), &gamma_line(&[(2, int(1))]), &[], &xi_one());
    let mut tau = Matrix::zeros(4, 1);
    tau[(0, 0)] = int(1);
    let shift = TauShift::from_tau(tau);
    let u = act_tau(&t, &shift)?;
    println!("gamma before {:?}", t.gamma_entries());
    println!("gamma after  {:?}", u.gamma_entries());
    println!("xi after     {:?}", u.xi_entries());
    let phi = equivalence_iso(&t, &shift)?;
    println!("phi:\n{phi}");
    println!("certified: {}", check_symplectic_iso(&build_standard_model(&t), &build_standard_model(&u), &phi)?);
    Ok(())
}
