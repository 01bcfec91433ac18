//! Builds the standard model of catalog cocycles and checks the three predicates.

use symplex::catalog::{bundled_dim6, entry_triple};
use symplex::quad_ext::{build_standard_model, is_balanced, is_cocycle, is_nilpotent_cocycle};
use symplex::symplectic::validate_symplectic;

fn main() {
    let wanted = ["R-h3R/xi1(l=3)", "R-R4/xi+", "R3-zero/rotation"];
    for e in bundled_dim6().iter().filter(|e| wanted.contains(&e.id.as_str())) {
        let t = entry_triple(e);
        let model = build_standard_model(&t);
        println!("{}", e.id);
        println!("  cocycle {}  balanced {}  nilpotent {}", is_cocycle(&t).ok(), is_balanced(&t).ok(), is_nilpotent_cocycle(&t).ok());
        println!("  model dim {}  valid {}", model.dim(), validate_symplectic(&model).ok());
        for (i, j, k, c) in model.g.entries() {
            println!("    [b{i},b{j}] has {c} b{k}");
        }
    }
}
