use num_traits::{One, Zero};

use super::tau::{act_tau, TauShift};
use crate::error::{Error, Result};
use crate::exactlin::{frac, solve, Matrix, Scalar, Vector};
use crate::quad_ext::{derived_maps, CocycleTriple};

/// Outcome of [`are_equivalent`]. Witnesses are always re-checked with [`act_tau`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Witness(TauShift),
    NotEquivalent,
    Unknown,
}

impl Verdict {
    pub fn witness(&self) -> Option<&TauShift> {
        match self {
            Verdict::Witness(s) => Some(s),
            _ => None,
        }
    }
}

// unknown τ_{p,i} lives at index i*n + p
fn tau_from(x: &[Scalar], m: usize, n: usize) -> Matrix {
    let mut tau = Matrix::zeros(n, m);
    for i in 0..m {
        for p in 0..n {
            tau[(p, i)] = x[i * n + p].clone();
        }
    }
    tau
}

fn eps_residual(t1: &CocycleTriple, t2: &CocycleTriple, x: &[Scalar]) -> Result<Vector> {
    let (m, n) = (t1.l_dim(), t1.a_dim());
    let img = act_tau(t1, &TauShift::from_tau(tau_from(x, m, n)))?;
    let mut out = Vec::new();
    for i in 0..m {
        for j in i + 1..m {
            for k in 0..m {
                out.push(img.epsilon(i, j, k) - t2.epsilon(i, j, k));
            }
        }
    }
    Ok(out)
}

/// Searches `τ` with `t₁τ = t₂`.
///
/// The `ξ` and `γ` equations are linear in `τ` once `ξ₂` is substituted for
/// `ξ₁ − ad∘τ`. On the affine solution set `x₀ + span(k_j)` the `ε` equation is
/// quadratic in the coefficients `c`; its coefficients are read off by polarization.
/// Treating the monomials `c_j c_l` as extra unknowns gives a linear relaxation:
/// inconsistency proves non-equivalence, a solution is a candidate to check.
pub fn are_equivalent(t1: &CocycleTriple, t2: &CocycleTriple) -> Result<Verdict> {
    if !t1.same_base(t2) {
        return Err(Error::Precondition("cocycles live on different (l, a, omega)".into()));
    }
    let (m, n) = (t1.l_dim(), t1.a_dim());
    let a = t1.a();
    let d1 = derived_maps(t1);
    let x2 = t2.xi_matrices();
    let unknowns = m * n;
    let mut rows: Vec<Vector> = Vec::new();
    let mut rhs: Vector = Vec::new();

    for i in 0..m {
        for q in 0..n {
            for k in 0..n {
                let mut r = vec![Scalar::zero(); unknowns];
                for p in 0..n {
                    r[i * n + p] = a.g.c(p, q, k).clone();
                }
                rows.push(r);
                rhs.push(t1.xi(i, q, k) - t2.xi(i, q, k));
            }
            let xq = x2[i].col(q);
            for k in 0..m {
                let mut r = vec![Scalar::zero(); unknowns];
                for p in 0..n {
                    let ap = crate::exactlin::unit_vec(n, p);
                    r[k * n + p] += a.omega(&ap, &xq);
                    r[i * n + p] -= d1.beta(p, q, k);
                }
                rows.push(r);
                rhs.push(t2.gamma(i, q, k) - t1.gamma(i, q, k));
            }
        }
    }

    let (x0, ker) = if rows.is_empty() {
        (vec![Scalar::zero(); unknowns], crate::exactlin::Subspace::full(unknowns))
    } else {
        match solve(&Matrix::from_rows(&rows)?, &rhs)? {
            Some(s) => s,
            None => return Ok(Verdict::NotEquivalent),
        }
    };

    let certify = |x: &[Scalar]| -> Result<Option<TauShift>> {
        let s = TauShift::from_tau(tau_from(x, m, n));
        Ok((&act_tau(t1, &s)? == t2).then_some(s))
    };
    if let Some(s) = certify(&x0)? {
        return Ok(Verdict::Witness(s));
    }
    let kb = ker.basis().to_vec();
    let at = |c: &[Scalar]| -> Vector {
        let mut x = x0.clone();
        for (cj, k) in c.iter().zip(&kb) {
            for (xi, ki) in x.iter_mut().zip(k) {
                *xi += cj * ki;
            }
        }
        x
    };
    let r = kb.len();
    for j in 0..r {
        let mut c = vec![Scalar::zero(); r];
        c[j] = Scalar::one();
        if let Some(s) = certify(&at(&c))? {
            return Ok(Verdict::Witness(s));
        }
    }
    if r == 0 {
        // the affine set is a single point and it failed the ε equation
        return Ok(Verdict::NotEquivalent);
    }

    // polarization: f(c) = f0 + Σ c_j L_j + Σ_{j≤l} c_j c_l Q_jl
    let f = |c: &[Scalar]| eps_residual(t1, t2, &at(c));
    let unit = |j: usize, s: i64| {
        let mut c = vec![Scalar::zero(); r];
        c[j] = Scalar::from_integer(s.into());
        c
    };
    let f0 = f(&vec![Scalar::zero(); r])?;
    let (mut fp, mut fm) = (Vec::new(), Vec::new());
    for j in 0..r {
        fp.push(f(&unit(j, 1))?);
        fm.push(f(&unit(j, -1))?);
    }
    let half = frac(1, 2);
    let comps = f0.len();
    let pairs: Vec<(usize, usize)> = (0..r).flat_map(|j| (j..r).map(move |l| (j, l))).collect();
    // columns: c_j (r of them) then the monomials in `pairs`
    let mut sys = Matrix::zeros(comps, r + pairs.len());
    for (j, (p, mi)) in fp.iter().zip(&fm).enumerate() {
        for e in 0..comps {
            sys[(e, j)] = (&p[e] - &mi[e]) * &half;
        }
    }
    for (col, &(j, l)) in pairs.iter().enumerate() {
        let q: Vector = if j == l {
            (0..comps).map(|e| (&fp[j][e] + &fm[j][e]) * &half - &f0[e]).collect()
        } else {
            let mut c = vec![Scalar::zero(); r];
            c[j] = Scalar::one();
            c[l] = Scalar::one();
            let fjl = f(&c)?;
            (0..comps).map(|e| &fjl[e] - &fp[j][e] - &fp[l][e] + &f0[e]).collect()
        };
        for e in 0..comps {
            sys[(e, r + col)] = q[e].clone();
        }
    }
    let neg: Vector = f0.iter().map(|v| -v).collect();
    let Some((sol, sol_ker)) = solve(&sys, &neg)? else {
        return Ok(Verdict::NotEquivalent);
    };
    let mut tries = vec![sol[..r].to_vec()];
    for k in sol_ker.basis() {
        tries.push((0..r).map(|j| &sol[j] + &k[j]).collect());
    }
    for c in tries {
        if let Some(s) = certify(&at(&c))? {
            return Ok(Verdict::Witness(s));
        }
    }
    Ok(Verdict::Unknown)
}
