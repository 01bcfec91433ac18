use num_traits::{One, Zero};

use crate::error::{check_dim, Error, Result};
use crate::exactlin::{add_vec, perp, sign, unit_vec, Matrix, Scalar, Subspace, Vector};
use crate::lie::bracket_span;
use crate::quad_ext::{xi_algebra_nilpotency, CocycleTriple};

fn one_dim_xi(t: &CocycleTriple) -> Result<Matrix> {
    check_dim(1, t.l_dim())?;
    Ok(t.xi_matrix(0))
}

/// Basis vectors followed by all pairwise sums; enough test vectors to catch
/// a value that secretly depends on `v`.
fn probe_vectors(n: usize) -> Vec<Vector> {
    let mut out: Vec<Vector> = (0..n).map(|p| unit_vec(n, p)).collect();
    for p in 0..n {
        for q in p + 1..n {
            out.push(add_vec(&out[p], &out[q]));
        }
    }
    out
}

/// Signs of a congruence diagonalization of a symmetric matrix.
fn inertia(q: &Matrix) -> (usize, usize) {
    let n = q.rows();
    let mut a = q.clone();
    let (mut pos, mut neg) = (0, 0);
    let mut active: Vec<usize> = (0..n).collect();
    while !active.is_empty() {
        let piv = active.iter().copied().find(|&i| !a[(i, i)].is_zero());
        let piv = match piv {
            Some(p) => p,
            None => {
                // no diagonal pivot: mix in an off-diagonal partner, or stop
                let pair = active.iter().flat_map(|&i| active.iter().map(move |&j| (i, j)))
                    .find(|&(i, j)| i != j && !a[(i, j)].is_zero());
                let Some((i, j)) = pair else { break };
                for k in 0..n {
                    let v = a[(k, j)].clone();
                    a[(k, i)] += v;
                }
                for k in 0..n {
                    let v = a[(j, k)].clone();
                    a[(i, k)] += v;
                }
                i
            }
        };
        let d = a[(piv, piv)].clone();
        if sign(&d) > 0 { pos += 1 } else { neg += 1 }
        active.retain(|&i| i != piv);
        for &i in &active {
            let f = &a[(i, piv)] / &d;
            for &k in &active {
                let v = &f * &a[(piv, k)];
                a[(i, k)] -= v;
            }
        }
    }
    (pos, neg)
}

/// Sign of `ω(ξ(e₁)²v, v)` for `v ∈ [𝔞,𝔞]^⊥`.
///
/// Shifts change `ξ` by inner derivations, which land in `[𝔞,𝔞]`; on its
/// ω-complement the quadratic form `v ↦ ω(ξ²v, v)` does not see them. For
/// abelian `𝔞` this is the whole space. The form must be semidefinite there
/// for the sign to be well defined; that is checked exactly.
pub fn invariant_sign_xi2(t: &CocycleTriple) -> Result<i32> {
    let x = one_dim_xi(t)?;
    let x2 = x.mul(&x)?;
    let a = t.a();
    let derived = bracket_span(&a.g, &Subspace::full(a.dim()));
    let w = perp(&derived, &a.omega)?;
    // B(v, w) = ω(X²v, w) = vᵀ (X²)ᵀ Ω w
    let b = x2.transpose().mul(&a.omega)?;
    let q = b.add(&b.transpose())?;
    let basis = w.matrix();
    let q_w = basis.transpose().mul(&q)?.mul(&basis)?;
    let (pos, neg) = inertia(&q_w);
    match (pos, neg) {
        (0, 0) => Ok(0),
        (_, 0) => Ok(1),
        (0, _) => Ok(-1),
        _ => Err(Error::NotWellDefined("omega(xi^2 v, v) changes sign with v".into())),
    }
}

fn same_everywhere(vals: Vec<Scalar>, what: &str) -> Result<Scalar> {
    let Some(first) = vals.first().cloned() else {
        return Err(Error::Precondition(format!("{what}: no admissible v")));
    };
    if vals.iter().any(|v| v != &first) {
        return Err(Error::NotWellDefined(format!("{what} depends on v")));
    }
    Ok(first)
}

/// `ω(ξ²v,v)⁷ γ(e₁, ξ³v, e₁)² / ω(ξ³v,v)⁸`, the exact seventh power of κ.
pub fn invariant_kappa7(t: &CocycleTriple) -> Result<Scalar> {
    let x = one_dim_xi(t)?;
    let x2 = x.mul(&x)?;
    let x3 = x2.mul(&x)?;
    if x3.is_zero() {
        return Err(Error::Precondition("xi(e1)^3 = 0".into()));
    }
    let a = t.a();
    let e = [Scalar::one()];
    let mut vals = Vec::new();
    for v in probe_vectors(t.a_dim()) {
        let x3v = x3.mul_vec(&v)?;
        let den = a.omega(&x3v, &v);
        if den.is_zero() {
            continue;
        }
        let num = a.omega(&x2.mul_vec(&v)?, &v);
        let g = t.gamma_eval(&e, &x3v, &e);
        vals.push(pow(&num, 7) * &g * &g / pow(&den, 8));
    }
    same_everywhere(vals, "kappa^7")
}

/// `ω(v, ξ³v) / ω(ξv, ξ²v)`.
pub fn invariant_l(t: &CocycleTriple) -> Result<Scalar> {
    let x = one_dim_xi(t)?;
    let x2 = x.mul(&x)?;
    let x3 = x2.mul(&x)?;
    if x3.is_zero() {
        return Err(Error::Precondition("xi(e1)^3 = 0".into()));
    }
    let a = t.a();
    let mut vals = Vec::new();
    for v in probe_vectors(t.a_dim()) {
        if x3.mul_vec(&v)?.iter().all(Zero::is_zero) {
            continue;
        }
        let den = a.omega(&x.mul_vec(&v)?, &x2.mul_vec(&v)?);
        if den.is_zero() {
            continue;
        }
        vals.push(a.omega(&v, &x3.mul_vec(&v)?) / den);
    }
    same_everywhere(vals, "l")
}

/// Nilpotency index of the associative algebra generated by `ξ(𝔩)`.
/// Only meaningful as an orbit invariant when 𝔞 is abelian, since then `ξ` is
/// fixed by the τ-action and only conjugated by pullback.
pub fn xi_nil_index(t: &CocycleTriple) -> Result<usize> {
    if !t.a().g.is_abelian() {
        return Err(Error::Precondition("a is not abelian".into()));
    }
    xi_algebra_nilpotency(&t.xi_matrices())
        .ok_or_else(|| Error::Precondition("xi is not nilpotent".into()))
}

fn pow(x: &Scalar, k: i32) -> Scalar {
    num_traits::pow::Pow::pow(x, k)
}
