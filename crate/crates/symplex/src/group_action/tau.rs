use crate::error::{check_dim, Error, Result};
use crate::exactlin::{frac, Matrix, Scalar, Vector};
use crate::quad_ext::cochain::{gamma_cochain, tau_cochain};
use crate::quad_ext::{d_xi, derived_maps, wedge, CocycleTriple, Pairing};

/// An element `τ ∈ C¹(𝔩, 𝔞)` with an optional selfadjoint `σ̄: 𝔩 → 𝔩*`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TauShift {
    tau: Matrix,
    sigma_bar: Option<Matrix>,
}

impl TauShift {
    /// `tau` is `n × m` with column `i` equal to `τ(e_i)`; `sigma_bar` is `m × m`
    /// with column `i` equal to `σ̄(e_i)` and must be symmetric.
    pub fn new(tau: Matrix, sigma_bar: Option<Matrix>) -> Result<Self> {
        if let Some(s) = &sigma_bar {
            check_dim(tau.cols(), s.rows())?;
            check_dim(tau.cols(), s.cols())?;
            if s != &s.transpose() {
                return Err(Error::Precondition("sigma_bar is not selfadjoint".into()));
            }
        }
        Ok(TauShift { tau, sigma_bar })
    }

    pub fn from_tau(tau: Matrix) -> Self {
        TauShift { tau, sigma_bar: None }
    }

    pub fn zero(m: usize, n: usize) -> Self {
        Self::from_tau(Matrix::zeros(n, m))
    }

    pub fn tau(&self) -> &Matrix {
        &self.tau
    }

    pub fn sigma_bar(&self) -> Option<&Matrix> {
        self.sigma_bar.as_ref()
    }

    pub fn tau_of(&self, i: usize) -> Vector {
        self.tau.col(i)
    }
}

/// `τ*: 𝔞 → 𝔩*`, `(τ*A)(L) = ω_𝔞(τL, A)`; entry `(k, p)` is `ω_𝔞(τe_k, a_p)`.
pub fn tau_star(t: &CocycleTriple, tau: &Matrix) -> Matrix {
    tau.transpose().mul(&t.a().omega).expect("dims")
}

/// `σ̄ = ½τ₂*τ₁ − ½τ₁*τ₂`, the correction in `φ_{τ₂,0} ∘ φ_{τ₁,0} = φ_{τ₁+τ₂,σ̄}`.
pub fn composition_sigma(t: &CocycleTriple, tau1: &Matrix, tau2: &Matrix) -> Matrix {
    let a = tau_star(t, tau2).mul(tau1).expect("dims");
    let b = tau_star(t, tau1).mul(tau2).expect("dims");
    a.sub(&b).expect("dims").scale(&frac(1, 2))
}

fn check_shape(t: &CocycleTriple, s: &TauShift) -> Result<()> {
    check_dim(t.a_dim(), s.tau.rows())?;
    check_dim(t.l_dim(), s.tau.cols())
}

/// The shifted cocycle `(γ, ε, ξ)τ`.
pub fn act_tau(t: &CocycleTriple, s: &TauShift) -> Result<CocycleTriple> {
    check_shape(t, s)?;
    let (m, n) = (t.l_dim(), t.a_dim());
    let a = t.a();
    let d = derived_maps(t);
    let ts = tau_star(t, &s.tau);
    let xs = t.xi_matrices();
    let mut out = t.clone();

    for i in 0..m {
        let ti = s.tau_of(i);
        let ad = a.g.ad(&ti)?;
        let xi_new = xs[i].sub(&ad)?;
        for p in 0..n {
            for r in 0..n {
                out.set_xi(i, p, r, xi_new[(r, p)].clone());
            }
            let shifted = ts.mul_vec(&xs[i].col(p))?;
            let corr = ts.mul_vec(&ad.col(p))?;
            let beta = d.beta_eval(&ti, &crate::exactlin::unit_vec(n, p));
            for k in 0..m {
                let v = t.gamma(i, p, k) + &shifted[k] - &corr[k] - &beta[k];
                out.set_gamma(i, p, k, v);
            }
        }
    }

    let tc = tau_cochain(&s.tau);
    let half = frac(1, 2);
    let ev = wedge(&Pairing::ev(n, m), &gamma_cochain(t), &tc)?;
    let dtau = d_xi(&xs, &tc)?;
    let bb = wedge(&Pairing::beta(&d, n, m), &tc, &tc)?.scale(&half);
    let br = wedge(&Pairing::bracket(&a.g), &tc, &tc)?.scale(&half);
    for i in 0..m {
        for j in i + 1..m {
            let al = ts.mul_vec(&d.alpha(i, j))?;
            let dt = ts.mul_vec(dtau.value(&[i, j]))?;
            let brt = ts.mul_vec(br.value(&[i, j]))?;
            let evv = ev.value(&[i, j]);
            let bv = bb.value(&[i, j]);
            for k in 0..m {
                let v: Scalar =
                    t.epsilon(i, j, k) + &al[k] - &evv[k] - &dt[k] + &bv[k] + &brt[k];
                out.set_epsilon(i, j, k, v);
            }
        }
    }
    Ok(out)
}

/// `φ_{τ,σ̄}` on `𝔩* ⊕ 𝔞 ⊕ 𝔩`, mapping `𝔡_t` onto `𝔡_{tτ}`.
pub fn equivalence_iso(t: &CocycleTriple, s: &TauShift) -> Result<Matrix> {
    check_shape(t, s)?;
    let (m, n) = (t.l_dim(), t.a_dim());
    let dim = 2 * m + n;
    let ts = tau_star(t, &s.tau);
    let mut corner = ts.mul(&s.tau)?.scale(&frac(1, 2));
    if let Some(sb) = &s.sigma_bar {
        corner = corner.add(sb)?;
    }
    let mut phi = Matrix::identity(dim);
    for p in 0..n {
        for k in 0..m {
            phi[(k, m + p)] = ts[(k, p)].clone();
        }
    }
    for i in 0..m {
        for p in 0..n {
            phi[(m + p, m + n + i)] = s.tau[(p, i)].clone();
        }
        for k in 0..m {
            phi[(k, m + n + i)] = corner[(k, i)].clone();
        }
    }
    Ok(phi)
}
