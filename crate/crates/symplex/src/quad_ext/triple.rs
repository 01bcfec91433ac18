use num_traits::Zero;

use crate::error::{check_dim, Error, Result};
use crate::exactlin::{Matrix, Scalar, Vector};
use crate::symplectic::SymplecticLieAlgebra;

/// Candidate quadratic cocycle `(γ, ε, ξ)` on `(𝔩 = Q^m, 𝔞, ω_𝔞)`.
///
/// * `gamma(i, j, k) = (γ(e_i)(a_j))(e_k)`
/// * `epsilon(i, j, k) = ε(e_i, e_j)(e_k)`
/// * `xi(i, j, k)` is the coefficient of `a_k` in `ξ(e_i)(a_j)`
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CocycleTriple {
    m: usize,
    a: SymplecticLieAlgebra,
    omega_inv_t: Matrix,
    gamma: Vec<Scalar>,
    epsilon: Vec<Scalar>,
    xi: Vec<Scalar>,
}

impl CocycleTriple {
    /// The zero triple. `a` must carry a skew non-degenerate form.
    pub fn zero(m: usize, a: SymplecticLieAlgebra) -> Result<Self> {
        if !a.omega.is_skew() {
            return Err(Error::NotSkew);
        }
        let omega_inv_t = a.omega.transpose().inverse()?;
        let n = a.dim();
        Ok(CocycleTriple {
            m,
            a,
            omega_inv_t,
            gamma: vec![Scalar::zero(); m * n * m],
            epsilon: vec![Scalar::zero(); m * m * m],
            xi: vec![Scalar::zero(); m * n * n],
        })
    }

    pub fn l_dim(&self) -> usize {
        self.m
    }

    pub fn a_dim(&self) -> usize {
        self.a.dim()
    }

    pub fn a(&self) -> &SymplecticLieAlgebra {
        &self.a
    }

    /// Same `(𝔩, 𝔞, ω_𝔞)` as `other`.
    pub fn same_base(&self, other: &CocycleTriple) -> bool {
        self.m == other.m && self.a == other.a
    }

    pub fn gamma(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.gamma[(i * self.a_dim() + j) * self.m + k]
    }

    pub fn set_gamma(&mut self, i: usize, j: usize, k: usize, s: Scalar) {
        let n = self.a_dim();
        self.gamma[(i * n + j) * self.m + k] = s;
    }

    pub fn epsilon(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.epsilon[(i * self.m + j) * self.m + k]
    }

    /// Sets `ε(e_i, e_j)(e_k) = s` and the antisymmetric partner.
    pub fn set_epsilon(&mut self, i: usize, j: usize, k: usize, s: Scalar) {
        let m = self.m;
        self.epsilon[(j * m + i) * m + k] = -s.clone();
        self.epsilon[(i * m + j) * m + k] = s;
    }

    pub fn xi(&self, i: usize, j: usize, k: usize) -> &Scalar {
        let n = self.a_dim();
        &self.xi[(i * n + j) * n + k]
    }

    pub fn set_xi(&mut self, i: usize, j: usize, k: usize, s: Scalar) {
        let n = self.a_dim();
        self.xi[(i * n + j) * n + k] = s;
    }

    /// `ξ(e_i)` as a matrix acting on column vectors.
    pub fn xi_matrix(&self, i: usize) -> Matrix {
        let n = self.a_dim();
        let mut x = Matrix::zeros(n, n);
        for j in 0..n {
            for k in 0..n {
                x[(k, j)] = self.xi(i, j, k).clone();
            }
        }
        x
    }

    pub fn xi_matrices(&self) -> Vec<Matrix> {
        (0..self.m).map(|i| self.xi_matrix(i)).collect()
    }

    /// `ξ(L)` for an arbitrary `L`.
    pub fn xi_of(&self, l: &[Scalar]) -> Matrix {
        let n = self.a_dim();
        let mut x = Matrix::zeros(n, n);
        for (i, li) in l.iter().enumerate() {
            if !li.is_zero() {
                x = x.add(&self.xi_matrix(i).scale(li)).expect("shape");
            }
        }
        x
    }

    /// `γ(L₁)(A)(L₂)`, trilinear.
    pub fn gamma_eval(&self, l1: &[Scalar], a: &[Scalar], l2: &[Scalar]) -> Scalar {
        let n = self.a_dim();
        let mut s = Scalar::zero();
        for i in 0..self.m {
            if l1[i].is_zero() {
                continue;
            }
            for j in 0..n {
                if a[j].is_zero() {
                    continue;
                }
                for k in 0..self.m {
                    let g = self.gamma(i, j, k);
                    if !g.is_zero() && !l2[k].is_zero() {
                        s += &l1[i] * &a[j] * &l2[k] * g;
                    }
                }
            }
        }
        s
    }

    /// `ε(L₁, L₂)(L₃)`, trilinear.
    pub fn epsilon_eval(&self, l1: &[Scalar], l2: &[Scalar], l3: &[Scalar]) -> Scalar {
        let mut s = Scalar::zero();
        for i in 0..self.m {
            for j in 0..self.m {
                for k in 0..self.m {
                    let e = self.epsilon(i, j, k);
                    if !e.is_zero() {
                        s += &l1[i] * &l2[j] * &l3[k] * e;
                    }
                }
            }
        }
        s
    }

    /// Solves `ω_𝔞(x, a_q) = rhs_q` for `x ∈ 𝔞`.
    pub fn omega_dual(&self, rhs: &[Scalar]) -> Vector {
        self.omega_inv_t.mul_vec(rhs).expect("dims")
    }

    pub fn gamma_entries(&self) -> Vec<(usize, usize, usize, Scalar)> {
        let n = self.a_dim();
        let mut out = Vec::new();
        for i in 0..self.m {
            for j in 0..n {
                for k in 0..self.m {
                    let v = self.gamma(i, j, k);
                    if !v.is_zero() {
                        out.push((i, j, k, v.clone()));
                    }
                }
            }
        }
        out
    }

    /// Entries with `i < j` only.
    pub fn epsilon_entries(&self) -> Vec<(usize, usize, usize, Scalar)> {
        let mut out = Vec::new();
        for i in 0..self.m {
            for j in i + 1..self.m {
                for k in 0..self.m {
                    let v = self.epsilon(i, j, k);
                    if !v.is_zero() {
                        out.push((i, j, k, v.clone()));
                    }
                }
            }
        }
        out
    }

    pub fn xi_entries(&self) -> Vec<(usize, usize, usize, Scalar)> {
        let n = self.a_dim();
        let mut out = Vec::new();
        for i in 0..self.m {
            for j in 0..n {
                for k in 0..n {
                    let v = self.xi(i, j, k);
                    if !v.is_zero() {
                        out.push((i, j, k, v.clone()));
                    }
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.gamma.iter().chain(&self.epsilon).chain(&self.xi).all(Zero::is_zero)
    }
}

/// `M_ε` for `𝔩 = Q³`: `M[i][j] = ε(v_j)(e_i)` with `v₁ = e₂∧e₃, v₂ = e₃∧e₁, v₃ = e₁∧e₂`.
pub fn eps_matrix(t: &CocycleTriple) -> Result<Matrix> {
    check_dim(3, t.l_dim())?;
    let pairs = [(1, 2), (2, 0), (0, 1)];
    let mut m = Matrix::zeros(3, 3);
    for (j, &(a, b)) in pairs.iter().enumerate() {
        for i in 0..3 {
            m[(i, j)] = t.epsilon(a, b, i).clone();
        }
    }
    Ok(m)
}

/// Writes `ε` from an `M_ε` matrix (inverse of [`eps_matrix`]).
pub fn set_eps_from_matrix(t: &mut CocycleTriple, m: &Matrix) -> Result<()> {
    check_dim(3, t.l_dim())?;
    check_dim(3, m.rows())?;
    check_dim(3, m.cols())?;
    let pairs = [(1, 2), (2, 0), (0, 1)];
    for (j, &(a, b)) in pairs.iter().enumerate() {
        for i in 0..3 {
            t.set_epsilon(a, b, i, m[(i, j)].clone());
        }
    }
    Ok(())
}

