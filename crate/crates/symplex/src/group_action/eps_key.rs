use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{check_dim, Error, Result};
use crate::exactlin::{frac, int, kernel, rank, Matrix, Scalar};

/// Key for trace-free 3×3 matrices up to conjugation and nonzero real scaling.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum EpsOrbitKey {
    /// `p₂, p₃ ≠ 0`: the scale-free ratio `p₂³/p₃²` plus `rank(M − λI)` at a
    /// repeated eigenvalue, if there is one.
    Generic { ratio: String, repeated_rank: Option<usize> },
    /// `p₂ = 0, p₃ ≠ 0`: three distinct eigenvalues, all such matrices agree.
    CubeRoots,
    /// `p₃ = 0, p₂ ≠ 0`: eigenvalues `0, ±√(−p₂)`; the sign of `p₂` survives scaling.
    ZeroEigen { p2_sign: i32 },
    /// Nilpotent; ranks of `M`, `M²`.
    Nilpotent { ranks: [usize; 2] },
}

/// `(p₂, p₃)` in `λ³ + p₂λ + p₃` for trace-free `M`.
pub fn char_coeffs(m: &Matrix) -> Result<(Scalar, Scalar)> {
    check_dim(3, m.rows())?;
    check_dim(3, m.cols())?;
    let minor = |i: usize, j: usize| &m[(i, i)] * &m[(j, j)] - &m[(i, j)] * &m[(j, i)];
    let p2 = minor(0, 1) + minor(0, 2) + minor(1, 2);
    let p3 = -m.det()?;
    Ok((p2, p3))
}

pub fn eps_orbit_key(m: &Matrix) -> Result<EpsOrbitKey> {
    check_dim(3, m.rows())?;
    check_dim(3, m.cols())?;
    if !m.trace().is_zero() {
        return Err(Error::Precondition("M is not trace free".into()));
    }
    if rank(m) < 2 {
        return Err(Error::Precondition("rank of M is below 2".into()));
    }
    let (p2, p3) = char_coeffs(m)?;
    Ok(match (p2.is_zero(), p3.is_zero()) {
        (true, true) => Nilpotent { ranks: [rank(m), rank(&m.mul(m)?)] },
        (true, false) => CubeRoots,
        (false, true) => ZeroEigen { p2_sign: if p2.is_positive() { 1 } else { -1 } },
        (false, false) => {
            let disc = -int(4) * &p2 * &p2 * &p2 - int(27) * &p3 * &p3;
            let repeated_rank = if disc.is_zero() {
                let lambda = -int(3) * &p3 / (int(2) * &p2);
                Some(rank(&m.sub(&Matrix::identity(3).scale(&lambda))?))
            } else {
                None
            };
            let ratio = &p2 * &p2 * &p2 / (&p3 * &p3);
            Generic { ratio: ratio.to_string(), repeated_rank }
        }
    })
}

use EpsOrbitKey::*;

/// Exact `k`-th root of a rational if it exists.
fn rational_root(x: &Scalar, k: u32) -> Option<Scalar> {
    let root = |n: &BigInt| -> Option<BigInt> {
        if n.is_negative() && k.is_multiple_of(2) {
            return None;
        }
        let r = n.nth_root(k);
        (num_traits::pow(r.clone(), k as usize) == *n).then_some(r)
    };
    Some(Scalar::new(root(x.numer())?, root(x.denom())?))
}

/// Looks for `(c, P)` with `M₂ = c·P M₁ P⁻¹`. `c` comes from the characteristic
/// polynomial, `P` from the kernel of `P ↦ M₂P − c·PM₁`. `None` means no
/// certificate was found among the scalars and kernel combinations tried.
pub fn certify_scalar_conjugacy(m1: &Matrix, m2: &Matrix) -> Result<Option<(Scalar, Matrix)>> {
    let (a2, a3) = char_coeffs(m1)?;
    let (b2, b3) = char_coeffs(m2)?;
    let cands: Vec<Scalar> = match (a2.is_zero(), a3.is_zero()) {
        (false, false) => vec![&b3 * &a2 / (&a3 * &b2)],
        (true, false) => rational_root(&(&b3 / &a3), 3).into_iter().collect(),
        (false, true) => rational_root(&(&b2 / &a2), 2).map(|c| vec![c.clone(), -c]).unwrap_or_default(),
        (true, true) => vec![Scalar::one()],
    };
    for c in cands {
        if c.is_zero() {
            continue;
        }
        // unknown P[(r, s)] at index 3r + s
        let mut sys = Matrix::zeros(9, 9);
        for i in 0..3 {
            for j in 0..3 {
                for k in 0..3 {
                    sys[(3 * i + j, 3 * k + j)] += &m2[(i, k)];
                    sys[(3 * i + j, 3 * i + k)] -= &c * &m1[(k, j)];
                }
            }
        }
        let ker = kernel(&sys);
        let basis = ker.basis();
        let mut tries: Vec<Vec<Scalar>> = basis.to_vec();
        // a few fixed combinations; a generic one is invertible whenever any is
        for w in 1..=4i64 {
            let mut v = vec![Scalar::zero(); 9];
            for (idx, b) in basis.iter().enumerate() {
                let coeff = frac(w.pow(idx as u32) + idx as i64, 1);
                for (x, y) in v.iter_mut().zip(b) {
                    *x += &coeff * y;
                }
            }
            tries.push(v);
        }
        for v in tries {
            let p = Matrix::from_vec(3, 3, v)?;
            if let Ok(pi) = p.inverse() {
                if p.mul(m1)?.mul(&pi)?.scale(&c) == *m2 {
                    return Ok(Some((c, p)));
                }
            }
        }
    }
    Ok(None)
}
