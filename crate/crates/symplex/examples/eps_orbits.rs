//! Orbit keys for 3x3 epsilon matrices under det-weighted conjugation.

use symplex::exactlin::{int, Matrix};
use symplex::group_action::{certify_scalar_conjugacy, eps_orbit_key};

fn main() -> symplex::Result<()> {
    let d = |v: [i64; 3]| Matrix::diag(&v.map(int));
    let rot = Matrix::from_ints(3, 3, &[0, 1, 0, -1, 0, 0, 0, 0, 0]);
    let nil = Matrix::from_ints(3, 3, &[0, 1, 0, 0, 0, 1, 0, 0, 0]);
    for (name, m) in [("diag(1,0,-1)", d([1, 0, -1])), ("diag(2,0,-2)", d([2, 0, -2])), ("diag(1,1,-2)", d([1, 1, -2])), ("rotation", rot), ("nilpotent", nil)] {
        println!("{name:<14} {:?}", eps_orbit_key(&m)?);
    }
    if let Some((c, p)) = certify_scalar_conjugacy(&d([1, 0, -1]), &d([2, 0, -2]))? {
        println!("diag(2,0,-2) = {c} * P diag(1,0,-1) P^-1 with P =\n{p}");
    }
    Ok(())
}
