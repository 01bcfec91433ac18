//! Validates the three nilpotent symplectic 4-dimensional algebras and one broken form.

use symplex::catalog::{bundled_dim4, fixtures};
use symplex::lie::{center, is_nilpotent};
use symplex::symplectic::{skew_form, validate_symplectic};
use symplex::exactlin::int;
use symplex::SymplecticLieAlgebra;

fn main() -> symplex::Result<()> {
    for (id, a) in bundled_dim4() {
        let rep = validate_symplectic(&a);
        let (nil, class) = is_nilpotent(&a.g);
        println!("{id:<6} valid={} nilpotent={nil} class={class} center dim={}", rep.ok(), center(&a.g).dim());
    }
    // h3 x R with the wrong form: dω fails
    let omega = skew_form(4, &[(0, 1, int(1)), (2, 3, int(1))])?;
    let bad = SymplecticLieAlgebra::new(fixtures::h3r().g, omega)?;
    let rep = validate_symplectic(&bad);
    println!("h3R with a1^a2 + a3^a4: valid={}, closedness failures {:?}", rep.ok(), rep.closedness_failures);
    Ok(())
}
