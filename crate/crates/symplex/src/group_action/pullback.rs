use crate::error::{check_dim, Error, Result};
use crate::exactlin::Matrix;
use crate::lie::check_iso;
use crate::quad_ext::CocycleTriple;
use crate::symplectic::SymplecticLieAlgebra;

/// A pair `(S, U)` with `S: 𝔩₁ → 𝔩₂` invertible and `U: 𝔞₂ → 𝔞₁` a symplectic Lie isomorphism.
#[derive(Clone, Debug)]
pub struct PairIso {
    s: Matrix,
    u: Matrix,
    u_inv: Matrix,
    a1: SymplecticLieAlgebra,
    a2: SymplecticLieAlgebra,
}

impl PairIso {
    /// Validates both maps; fails with [`Error::InvalidPair`] otherwise.
    pub fn new(
        s: Matrix,
        u: Matrix,
        a1: SymplecticLieAlgebra,
        a2: SymplecticLieAlgebra,
    ) -> Result<Self> {
        if !s.is_square() || s.inverse().is_err() {
            return Err(Error::InvalidPair("S is not invertible".into()));
        }
        check_dim(a1.dim(), a2.dim())?;
        check_dim(a1.dim(), u.rows())?;
        check_dim(a1.dim(), u.cols())?;
        let u_inv = u.inverse().map_err(|_| Error::InvalidPair("U is not invertible".into()))?;
        if !check_iso(&a2.g, &a1.g, &u)? {
            return Err(Error::InvalidPair("U is not a Lie algebra isomorphism".into()));
        }
        if u.transpose().mul(&a1.omega)?.mul(&u)? != a2.omega {
            return Err(Error::InvalidPair("U does not pull ω₁ back to ω₂".into()));
        }
        Ok(PairIso { s, u, u_inv, a1, a2 })
    }

    /// A pair acting on cocycles over a single `(𝔩, 𝔞)`.
    pub fn on(s: Matrix, u: Matrix, a: &SymplecticLieAlgebra) -> Result<Self> {
        Self::new(s, u, a.clone(), a.clone())
    }

    pub fn s(&self) -> &Matrix {
        &self.s
    }

    pub fn u(&self) -> &Matrix {
        &self.u
    }
}

/// `(S,U)*t`, a cocycle over `(𝔩₁, 𝔞₁)` from one over `(𝔩₂, 𝔞₂)`.
pub fn pullback(t: &CocycleTriple, p: &PairIso) -> Result<CocycleTriple> {
    if t.a() != &p.a2 || t.l_dim() != p.s.rows() {
        return Err(Error::InvalidPair("cocycle does not live on the target of the pair".into()));
    }
    let (m, n) = (p.s.cols(), t.a_dim());
    let mut out = CocycleTriple::zero(m, p.a1.clone())?;
    let sl: Vec<_> = (0..m).map(|i| p.s.col(i)).collect();
    let ua: Vec<_> = (0..n).map(|q| p.u_inv.col(q)).collect();
    for i in 0..m {
        for q in 0..n {
            for k in 0..m {
                out.set_gamma(i, q, k, t.gamma_eval(&sl[i], &ua[q], &sl[k]));
            }
        }
        for j in i + 1..m {
            for k in 0..m {
                out.set_epsilon(i, j, k, t.epsilon_eval(&sl[i], &sl[j], &sl[k]));
            }
        }
        let x = p.u.mul(&t.xi_of(&sl[i]))?.mul(&p.u_inv)?;
        for q in 0..n {
            for r in 0..n {
                out.set_xi(i, q, r, x[(r, q)].clone());
            }
        }
    }
    Ok(out)
}

/// `(S,U)*τ = U ∘ τ ∘ S`.
pub fn pull_tau(tau: &Matrix, p: &PairIso) -> Result<Matrix> {
    p.u.mul(tau)?.mul(&p.s)
}
