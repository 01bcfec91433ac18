use super::derived::derived_maps;
use super::CocycleTriple;
use crate::exactlin::{Matrix, Subspace};
use crate::lie::LieAlgebra;
use crate::symplectic::SymplecticLieAlgebra;

/// The standard model `𝔡_{γ,ε,ξ}(𝔩, 𝔞)` on `𝔩* ⊕ 𝔞 ⊕ 𝔩`.
///
/// Never rejects: a non-cocycle yields an algebra that fails validation.
pub fn build_standard_model(t: &CocycleTriple) -> SymplecticLieAlgebra {
    let (m, n) = (t.l_dim(), t.a_dim());
    let dim = 2 * m + n;
    let (za, aa, la) = (0, m, m + n);
    let d = derived_maps(t);
    let ga = &t.a().g;
    let mut g = LieAlgebra::abelian(dim);
    for p in 0..n {
        for q in p + 1..n {
            for k in 0..m {
                g.set(aa + p, aa + q, za + k, d.beta(p, q, k).clone());
            }
            for r in 0..n {
                g.set(aa + p, aa + q, aa + r, ga.c(p, q, r).clone());
            }
        }
    }
    for i in 0..m {
        for p in 0..n {
            for k in 0..m {
                g.set(la + i, aa + p, za + k, t.gamma(i, p, k).clone());
            }
            for r in 0..n {
                g.set(la + i, aa + p, aa + r, t.xi(i, p, r).clone());
            }
        }
        for j in i + 1..m {
            for k in 0..m {
                g.set(la + i, la + j, za + k, t.epsilon(i, j, k).clone());
            }
            let al = d.alpha(i, j);
            for r in 0..n {
                g.set(la + i, la + j, aa + r, al[r].clone());
            }
        }
    }
    let mut omega = Matrix::zeros(dim, dim);
    for i in 0..m {
        omega[(za + i, la + i)] = crate::exactlin::int(1);
        omega[(la + i, za + i)] = crate::exactlin::int(-1);
    }
    for p in 0..n {
        for q in 0..n {
            omega[(aa + p, aa + q)] = t.a().omega[(p, q)].clone();
        }
    }
    SymplecticLieAlgebra { g, omega }
}

/// The `𝔩*` block of the standard model.
pub fn l_dual_block(t: &CocycleTriple) -> Subspace {
    let dim = 2 * t.l_dim() + t.a_dim();
    Subspace::coords(dim, &(0..t.l_dim()).collect::<Vec<_>>())
}
