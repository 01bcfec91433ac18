//! Prints every invariant for the one-dimensional families of the catalog.

use symplex::catalog::{bundled_dim6, compute_invariant, entry_triple};

fn main() {
    for e in bundled_dim6().iter().filter(|e| e.cocycle.l_dim == 1) {
        let t = entry_triple(e);
        let vals: Vec<String> = ["sign_xi2", "kappa7", "l", "xi_nil_index"]
            .iter()
            .map(|n| match compute_invariant(n, &t) {
                Ok(v) => format!("{n}={v}"),
                Err(_) => format!("{n}=n/a"),
            })
            .collect();
        println!("{:<30} {}", e.id, vals.join("  "));
    }
}
