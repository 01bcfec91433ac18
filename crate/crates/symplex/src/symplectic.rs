//! Symplectic Lie algebras, the canonical isotropic ideal, reduction and cocycle extraction.

use num_traits::{One, Zero};

use crate::error::{check_dim, Error, Result};
use crate::exactlin::{
    add_vec, frac, intersect, perp, rank, scale_vec, solve, sub_vec, unit_vec, Matrix, Scalar,
    Subspace, Vector,
};
use crate::lie::{center, quotient, restrict, validate_lie, LieAlgebra, LieReport, LinearMap};
use crate::quad_ext::CocycleTriple;

/// A Lie algebra with a 2-form, stored as its Gram matrix `omega[(i, j)] = ω(b_i, b_j)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymplecticLieAlgebra {
    pub g: LieAlgebra,
    pub omega: Matrix,
}

impl SymplecticLieAlgebra {
    pub fn new(g: LieAlgebra, omega: Matrix) -> Result<Self> {
        check_dim(g.dim(), omega.rows())?;
        check_dim(g.dim(), omega.cols())?;
        Ok(SymplecticLieAlgebra { g, omega })
    }

    /// The zero-dimensional algebra.
    pub fn zero() -> Self {
        SymplecticLieAlgebra { g: LieAlgebra::abelian(0), omega: Matrix::zeros(0, 0) }
    }

    pub fn dim(&self) -> usize {
        self.g.dim()
    }

    pub fn omega(&self, x: &[Scalar], y: &[Scalar]) -> Scalar {
        self.omega.bilinear(x, y)
    }

    pub fn is_nondegenerate(&self) -> bool {
        rank(&self.omega) == self.dim()
    }
}

/// Skew Gram matrix from entries `ω(b_i, b_j) = s` with `i < j`.
pub fn skew_form(n: usize, entries: &[(usize, usize, Scalar)]) -> Result<Matrix> {
    let mut m = Matrix::zeros(n, n);
    for (i, j, s) in entries {
        if i >= j || *j >= n {
            return Err(Error::Precondition(format!("bad form index ({i},{j})")));
        }
        m[(*i, *j)] = &m[(*i, *j)] + s;
        m[(*j, *i)] = -m[(*i, *j)].clone();
    }
    Ok(m)
}

/// `dω(X,Y,Z) = −ω([X,Y],Z) + ω([X,Z],Y) − ω([Y,Z],X)` on basis vectors.
pub fn d_omega(s: &SymplecticLieAlgebra, i: usize, j: usize, k: usize) -> Scalar {
    let n = s.dim();
    let w = |a: &[Scalar], b: usize| s.omega(a, &unit_vec(n, b));
    -w(&s.g.bracket_basis(i, j), k) + w(&s.g.bracket_basis(i, k), j) - w(&s.g.bracket_basis(j, k), i)
}

#[derive(Clone, Debug, Default)]
pub struct SymplecticReport {
    pub lie: LieReport,
    pub skew: bool,
    pub nondegenerate: bool,
    /// Basis triples `i < j < k` with `dω ≠ 0`, and the value.
    pub closedness_failures: Vec<((usize, usize, usize), Scalar)>,
}

impl SymplecticReport {
    pub fn ok(&self) -> bool {
        self.lie.ok() && self.skew && self.nondegenerate && self.closedness_failures.is_empty()
    }
}

pub fn validate_symplectic(s: &SymplecticLieAlgebra) -> SymplecticReport {
    let n = s.dim();
    let mut rep = SymplecticReport {
        lie: validate_lie(&s.g),
        skew: s.omega.is_skew(),
        nondegenerate: s.is_nondegenerate(),
        closedness_failures: Vec::new(),
    };
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let d = d_omega(s, i, j, k);
                if !d.is_zero() {
                    rep.closedness_failures.push(((i, j, k), d));
                }
            }
        }
    }
    rep
}

/// `𝔧 = 𝔷 ∩ 𝔷^⊥`.
pub fn canonical_isotropic_ideal(s: &SymplecticLieAlgebra) -> Subspace {
    let z = center(&s.g);
    let zp = perp(&z, &s.omega).expect("validated form is skew");
    intersect(&z, &zp).expect("same ambient")
}

/// Reduction along the canonical ideal.
#[derive(Clone, Debug)]
pub struct ReductionResult {
    pub j: Subspace,
    /// `𝔧^⊥/𝔧` with the induced bracket and form.
    pub a: SymplecticLieAlgebra,
    pub l_dim: usize,
    /// Lifts the basis of `a` into `𝔧^⊥ ⊂ 𝔤` (columns).
    pub lift_a: LinearMap,
    /// The projection `𝔤 → 𝔩 = 𝔤/𝔧^⊥`.
    pub project_l: LinearMap,
    /// The abelian quotient `𝔤/𝔧^⊥`.
    pub l: LieAlgebra,
}

pub fn reduce(s: &SymplecticLieAlgebra) -> Result<ReductionResult> {
    let n = s.dim();
    let j = canonical_isotropic_ideal(s);
    let jp = perp(&j, &s.omega)?;
    let jp_alg = restrict(&s.g, &jp)?;
    let j_in_jp: Vec<Vector> = j
        .basis()
        .iter()
        .map(|v| jp.coordinates(v).ok_or_else(|| internal("j not inside j-perp")))
        .collect::<Result<_>>()?;
    let j_local = Subspace::span(jp.dim(), &j_in_jp)?;
    let (a_alg, _) = quotient(&jp_alg, &j_local)?;
    let comp = crate::lie::standard_complement(&j_local);
    let lifts: Vec<Vector> = comp.iter().map(|&c| jp.basis()[c].clone()).collect();
    let lift_a = Matrix::from_cols(n, &lifts)?;
    let mut omega_a = Matrix::zeros(lifts.len(), lifts.len());
    for (p, u) in lifts.iter().enumerate() {
        for (q, v) in lifts.iter().enumerate() {
            omega_a[(p, q)] = s.omega(u, v);
        }
    }
    let a = SymplecticLieAlgebra::new(a_alg, omega_a)?;
    if !validate_symplectic(&a).ok() {
        return Err(internal("reduced algebra does not validate"));
    }
    let (l, project_l) = quotient(&s.g, &jp)?;
    Ok(ReductionResult { l_dim: n - jp.dim(), j, a, lift_a, project_l, l })
}

fn internal(msg: &str) -> Error {
    Error::Precondition(format!("internal consistency: {msg}"))
}

/// Result of [`extract_cocycle`].
#[derive(Clone, Debug)]
pub struct Extraction {
    pub cocycle: CocycleTriple,
    /// Block map `𝔩* ⊕ 𝔞 ⊕ 𝔩 → 𝔤`, columns `p*(σ^i)`, `t(a_p)`, `s(e_k)`.
    pub phi: LinearMap,
}

/// Presents `s` as a standard model over its canonical ideal.
pub fn extract_cocycle(s: &SymplecticLieAlgebra) -> Result<Extraction> {
    let n = s.dim();
    let j = canonical_isotropic_ideal(s);
    if j.is_zero() {
        return Err(Error::Precondition("center is non-degenerate; nothing to extract".into()));
    }
    let m = j.dim();
    let jp = perp(&j, &s.omega)?;
    let w = |x: &[Scalar], y: &[Scalar]| s.omega(x, y);

    // complement of 𝔧^⊥ from standard basis vectors, made isotropic using a dual basis of 𝔧
    let c: Vec<Vector> = crate::lie::standard_complement(&jp).into_iter().map(|i| unit_vec(n, i)).collect();
    let z0 = dual_in_j(&j, &c, &w)?;
    let mut sl = c.clone();
    for k in 0..m {
        for l in 0..m {
            let x = -frac(1, 2) * w(&c[k], &c[l]);
            sl[k] = add_vec(&sl[k], &scale_vec(&x, &z0[l]));
        }
    }
    // p*(σ^i): ω(p*σ^i, s(e_k)) = δ_ik inside 𝔧
    let z = dual_in_j(&j, &sl, &w)?;

    // 𝔞-part: ω-projection of standard vectors away from 𝔧 ⊕ V_𝔩
    let project = |x: &[Scalar]| {
        let mut y = x.to_vec();
        for i in 0..m {
            y = sub_vec(&y, &scale_vec(&w(x, &sl[i]), &z[i]));
            y = add_vec(&y, &scale_vec(&w(x, &z[i]), &sl[i]));
        }
        y
    };
    let proj: Vec<Vector> = (0..n).map(|i| project(&unit_vec(n, i))).collect();
    let va = Subspace::span_keep(n, &proj)?;
    let va_basis: Vec<Vector> = va.basis().to_vec();
    let na = va_basis.len();
    if na + 2 * m != n || !jp.contains_space(&va) {
        return Err(internal("complement dimensions"));
    }

    let mut cols = z.clone();
    cols.extend(va_basis.iter().cloned());
    cols.extend(sl.iter().cloned());
    let phi = Matrix::from_cols(n, &cols)?;
    let phi_inv = phi.inverse()?;
    let coords = |v: &[Scalar]| phi_inv.mul_vec(v).expect("dims");

    let mut a_alg = LieAlgebra::abelian(na);
    for p in 0..na {
        for q in p + 1..na {
            let x = coords(&s.g.bracket(&va_basis[p], &va_basis[q])?);
            for r in 0..na {
                a_alg.set(p, q, r, x[m + r].clone());
            }
        }
    }
    let mut omega_a = Matrix::zeros(na, na);
    for p in 0..na {
        for q in 0..na {
            omega_a[(p, q)] = w(&va_basis[p], &va_basis[q]);
        }
    }
    let a = SymplecticLieAlgebra::new(a_alg, omega_a)?;
    let mut t = CocycleTriple::zero(m, a)?;
    for k in 0..m {
        for p in 0..na {
            let x = coords(&s.g.bracket(&sl[k], &va_basis[p])?);
            for i in 0..m {
                t.set_gamma(k, p, i, x[i].clone());
            }
            for r in 0..na {
                t.set_xi(k, p, r, x[m + r].clone());
            }
        }
        for l in k + 1..m {
            let b = s.g.bracket(&sl[k], &sl[l])?;
            for r in 0..m {
                t.set_epsilon(k, l, r, w(&b, &sl[r]));
            }
        }
    }
    Ok(Extraction { cocycle: t, phi })
}

/// Basis `z_i` of `𝔧` with `ω(z_i, c_k) = δ_ik`.
fn dual_in_j(
    j: &Subspace,
    c: &[Vector],
    w: &dyn Fn(&[Scalar], &[Scalar]) -> Scalar,
) -> Result<Vec<Vector>> {
    let m = j.dim();
    let mut pairing = Matrix::zeros(c.len(), m);
    for (k, ck) in c.iter().enumerate() {
        for (a, ja) in j.basis().iter().enumerate() {
            pairing[(k, a)] = w(ja, ck);
        }
    }
    let jm = j.matrix();
    (0..c.len())
        .map(|i| {
            let rhs: Vector = (0..c.len()).map(|k| if k == i { Scalar::one() } else { Scalar::zero() }).collect();
            let (y, _) = solve(&pairing, &rhs)?.ok_or_else(|| internal("pairing 𝔧 × V_𝔩 degenerate"))?;
            jm.mul_vec(&y)
        })
        .collect()
}

/// True iff `phi` maps `(g1, ω1)` isomorphically onto `(g2, ω2)`.
pub fn check_symplectic_iso(
    s1: &SymplecticLieAlgebra,
    s2: &SymplecticLieAlgebra,
    phi: &LinearMap,
) -> Result<bool> {
    if !crate::lie::check_iso(&s1.g, &s2.g, phi)? {
        return Ok(false);
    }
    let pulled = phi.transpose().mul(&s2.omega)?.mul(phi)?;
    Ok(pulled == s1.omega)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::int;

    fn h3r(omega: &[(usize, usize, i64)]) -> SymplecticLieAlgebra {
        let g = LieAlgebra::from_brackets(4, &[(0, 1, 2, int(1))]).unwrap();
        let e: Vec<_> = omega.iter().map(|&(i, j, s)| (i, j, int(s))).collect();
        SymplecticLieAlgebra::new(g, skew_form(4, &e).unwrap()).unwrap()
    }

    #[test]
    fn validation_examples() {
        assert!(validate_symplectic(&h3r(&[(0, 3, 1), (1, 2, 1)])).ok());
        let bad = validate_symplectic(&h3r(&[(0, 1, 1), (2, 3, 1)]));
        assert!(!bad.ok());
        assert!(bad.closedness_failures.contains(&((0, 1, 3), int(-1))));
        let r4 = SymplecticLieAlgebra::new(
            LieAlgebra::abelian(4),
            skew_form(4, &[(0, 1, int(1)), (2, 3, int(1))]).unwrap(),
        )
        .unwrap();
        assert!(validate_symplectic(&r4).ok());
        assert!(canonical_isotropic_ideal(&r4).is_zero());
    }

    #[test]
    fn h3r_reduces_to_a_point() {
        let s = h3r(&[(0, 3, 1), (1, 2, 1)]);
        assert!(canonical_isotropic_ideal(&s).same_as(&Subspace::coords(4, &[2, 3])));
        let r = reduce(&s).unwrap();
        assert_eq!(r.a.dim(), 0);
        assert_eq!(r.l_dim, 2);
        assert!(r.l.is_abelian());
        let ex = extract_cocycle(&s).unwrap();
        let model = crate::quad_ext::build_standard_model(&ex.cocycle);
        assert!(check_symplectic_iso(&model, &s, &ex.phi).unwrap());
    }

    #[test]
    fn extraction_refuses_nondegenerate_center() {
        let r4 = SymplecticLieAlgebra::new(
            LieAlgebra::abelian(4),
            skew_form(4, &[(0, 1, int(1)), (2, 3, int(1))]).unwrap(),
        )
        .unwrap();
        assert!(matches!(extract_cocycle(&r4), Err(Error::Precondition(_))));
    }
}
