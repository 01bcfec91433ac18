use num_traits::Zero;

use super::CocycleTriple;
use crate::exactlin::{unit_vec, Matrix, Scalar, Vector};

/// `α` and `β` together with the reshaped views `β₀`, `ξ₀`, `γ₀`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerivedMaps {
    m: usize,
    n: usize,
    /// `alpha[(i*m + j)*n + p]`: coefficient of `a_p` in `α(e_i, e_j)`.
    alpha: Vec<Scalar>,
    /// `beta[(p*n + q)*m + k] = β(a_p, a_q)(e_k)`.
    beta: Vec<Scalar>,
}

impl DerivedMaps {
    pub fn alpha(&self, i: usize, j: usize) -> Vector {
        let s = (i * self.m + j) * self.n;
        self.alpha[s..s + self.n].to_vec()
    }

    /// `α(L₁, L₂)`, bilinear.
    pub fn alpha_eval(&self, l1: &[Scalar], l2: &[Scalar]) -> Vector {
        let mut out = vec![Scalar::zero(); self.n];
        for i in 0..self.m {
            for j in 0..self.m {
                let c = &l1[i] * &l2[j];
                if c.is_zero() {
                    continue;
                }
                for (p, o) in out.iter_mut().enumerate() {
                    *o += &c * &self.alpha[(i * self.m + j) * self.n + p];
                }
            }
        }
        out
    }

    pub fn beta(&self, p: usize, q: usize, k: usize) -> &Scalar {
        &self.beta[(p * self.n + q) * self.m + k]
    }

    /// `β(A₁, A₂)` as an element of `𝔩*`.
    pub fn beta_eval(&self, a1: &[Scalar], a2: &[Scalar]) -> Vector {
        let mut out = vec![Scalar::zero(); self.m];
        for p in 0..self.n {
            if a1[p].is_zero() {
                continue;
            }
            for q in 0..self.n {
                let c = &a1[p] * &a2[q];
                if c.is_zero() {
                    continue;
                }
                for (k, o) in out.iter_mut().enumerate() {
                    *o += &c * self.beta(p, q, k);
                }
            }
        }
        out
    }

    pub fn beta_is_zero(&self) -> bool {
        self.beta.iter().all(Zero::is_zero)
    }

    /// `β₀: 𝔞 → Hom(𝔞, 𝔩*)`; row `q*m + k`, column `p` holds `β(a_p, a_q)(e_k)`.
    pub fn beta0(&self) -> Matrix {
        let mut b = Matrix::zeros(self.n * self.m, self.n);
        for p in 0..self.n {
            for q in 0..self.n {
                for k in 0..self.m {
                    b[(q * self.m + k, p)] = self.beta(p, q, k).clone();
                }
            }
        }
        b
    }
}

/// `ξ₀: 𝔞 → Hom(𝔩, 𝔞)`, `ξ₀(A)L = ξ(L)A`; row `i*n + k`, column `p`.
pub fn xi0(t: &CocycleTriple) -> Matrix {
    let (m, n) = (t.l_dim(), t.a_dim());
    let mut x = Matrix::zeros(m * n, n);
    for i in 0..m {
        for p in 0..n {
            for k in 0..n {
                x[(i * n + k, p)] = t.xi(i, p, k).clone();
            }
        }
    }
    x
}

/// `γ₀: 𝔞 → Hom(𝔩, 𝔩*)`, `γ₀(A)L = γ(L)A`; row `i*m + k`, column `p`.
pub fn gamma0(t: &CocycleTriple) -> Matrix {
    let (m, n) = (t.l_dim(), t.a_dim());
    let mut g = Matrix::zeros(m * m, n);
    for i in 0..m {
        for p in 0..n {
            for k in 0..m {
                g[(i * m + k, p)] = t.gamma(i, p, k).clone();
            }
        }
    }
    g
}

/// `(ξ̂(L)f) = f ∘ ξ(L)` for `f: 𝔞 → 𝔩*` given as an `m × n` matrix.
pub fn xihat(t: &CocycleTriple, l: &[Scalar], f: &Matrix) -> Matrix {
    f.mul(&t.xi_of(l)).expect("shape")
}

/// `γ(e_i)` as an `m × n` matrix `𝔞 → 𝔩*`.
pub fn gamma_matrix(t: &CocycleTriple, i: usize) -> Matrix {
    let (m, n) = (t.l_dim(), t.a_dim());
    let mut g = Matrix::zeros(m, n);
    for p in 0..n {
        for k in 0..m {
            g[(k, p)] = t.gamma(i, p, k).clone();
        }
    }
    g
}

pub fn derived_maps(t: &CocycleTriple) -> DerivedMaps {
    let (m, n) = (t.l_dim(), t.a_dim());
    let a = t.a();
    let mut alpha = vec![Scalar::zero(); m * m * n];
    for i in 0..m {
        for j in 0..m {
            // ω(α(e_i,e_j), a_q) = γ(e_i, a_q, e_j) − γ(e_j, a_q, e_i)
            let rhs: Vector = (0..n).map(|q| t.gamma(i, q, j) - t.gamma(j, q, i)).collect();
            let x = t.omega_dual(&rhs);
            alpha[(i * m + j) * n..(i * m + j + 1) * n].clone_from_slice(&x);
        }
    }
    let xs = t.xi_matrices();
    let mut beta = vec![Scalar::zero(); n * n * m];
    for p in 0..n {
        for q in 0..n {
            let (ap, aq) = (unit_vec(n, p), unit_vec(n, q));
            for (k, x) in xs.iter().enumerate() {
                let v = -a.omega(&x.col(p), &aq) - a.omega(&ap, &x.col(q));
                beta[(p * n + q) * m + k] = v;
            }
        }
    }
    DerivedMaps { m, n, alpha, beta }
}
