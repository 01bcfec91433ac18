//! Reduces a 6-dimensional model along its canonical isotropic ideal and reads the cocycle back.

use symplex::catalog::fixtures;
use symplex::quad_ext::build_standard_model;
use symplex::symplectic::{check_symplectic_iso, extract_cocycle, reduce};

fn main() -> symplex::Result<()> {
    let t = fixtures::rr4("xi+", &symplex::exactlin::int(0));
    let model = build_standard_model(&t);
    let red = reduce(&model)?;
    println!("j has dim {}, reduced algebra dim {}, l dim {}", red.j.dim(), red.a.dim(), red.l_dim);
    println!("reduced omega:\n{}", red.a.omega);

    let ex = extract_cocycle(&model)?;
    println!("extracted gamma entries: {:?}", ex.cocycle.gamma_entries().len());
    println!("extracted xi entries: {:?}", ex.cocycle.xi_entries());
    let back = build_standard_model(&ex.cocycle);
    println!("phi certified: {}", check_symplectic_iso(&back, &model, &ex.phi)?);
    Ok(())
}
