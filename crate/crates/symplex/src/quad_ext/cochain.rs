use num_traits::Zero;

use super::{derived::gamma_matrix, CocycleTriple, DerivedMaps};
use crate::error::{check_dim, Error, Result};
use crate::exactlin::{Matrix, Scalar, Vector};
use crate::lie::LieAlgebra;

/// Value space of a cochain on `𝔩`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ValueSpace {
    Real,
    A(usize),
    LDual(usize),
    /// `Hom(𝔞, 𝔩*)`; coordinate `k*a + p` is `f(a_p)(e_k)`.
    HomALDual { a: usize, l: usize },
    /// `End(𝔞)`; coordinate `r*n + c` is matrix entry `(r, c)`.
    EndA(usize),
}

impl ValueSpace {
    pub fn dim(self) -> usize {
        match self {
            ValueSpace::Real => 1,
            ValueSpace::A(n) | ValueSpace::LDual(n) => n,
            ValueSpace::HomALDual { a, l } => a * l,
            ValueSpace::EndA(n) => n * n,
        }
    }
}

/// Alternating `p`-linear map `𝔩^p → U`, stored as a full tensor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cochain {
    degree: usize,
    l_dim: usize,
    space: ValueSpace,
    coeffs: Vec<Scalar>,
}

impl Cochain {
    pub fn zero(degree: usize, l_dim: usize, space: ValueSpace) -> Self {
        let len = l_dim.pow(degree as u32) * space.dim();
        Cochain { degree, l_dim, space, coeffs: vec![Scalar::zero(); len] }
    }

    /// Builds from values on strictly increasing index tuples, extended by antisymmetry.
    pub fn from_fn(
        degree: usize,
        l_dim: usize,
        space: ValueSpace,
        f: impl Fn(&[usize]) -> Vector,
    ) -> Self {
        let mut c = Self::zero(degree, l_dim, space);
        for idx in increasing_tuples(l_dim, degree) {
            let v = f(&idx);
            assert_eq!(v.len(), space.dim(), "value length");
            c.set_alternating(&idx, &v);
        }
        c
    }

    fn offset(&self, idx: &[usize]) -> usize {
        idx.iter().fold(0, |acc, &i| acc * self.l_dim + i) * self.space.dim()
    }

    fn set_alternating(&mut self, idx: &[usize], v: &[Scalar]) {
        for (perm, sgn) in permutations(idx.len()) {
            let permuted: Vec<usize> = perm.iter().map(|&k| idx[k]).collect();
            let off = self.offset(&permuted);
            for (t, x) in v.iter().enumerate() {
                self.coeffs[off + t] = if sgn > 0 { x.clone() } else { -x.clone() };
            }
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn l_dim(&self) -> usize {
        self.l_dim
    }

    pub fn space(&self) -> ValueSpace {
        self.space
    }

    /// Value on basis vectors `e_{idx[0]}, …`.
    pub fn value(&self, idx: &[usize]) -> &[Scalar] {
        let off = self.offset(idx);
        &self.coeffs[off..off + self.space.dim()]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_alternating(&self) -> bool {
        all_tuples(self.l_dim, self.degree).iter().all(|idx| {
            let base = self.value(idx);
            permutations(idx.len()).into_iter().all(|(perm, sgn)| {
                let p: Vec<usize> = perm.iter().map(|&k| idx[k]).collect();
                let v = self.value(&p);
                let repeated = (1..idx.len()).any(|i| idx[..i].contains(&idx[i]));
                if repeated {
                    v.iter().all(Zero::is_zero)
                } else {
                    v.iter().zip(base).all(|(a, b)| if sgn > 0 { a == b } else { a == &-b })
                }
            })
        })
    }

    pub fn scale(&self, c: &Scalar) -> Cochain {
        Cochain { coeffs: self.coeffs.iter().map(|x| c * x).collect(), ..self.clone() }
    }
}

/// Bilinear pairing `U × V → W` given by a tensor `out_k = Σ t[i][j][k] u_i v_j`.
#[derive(Clone, Debug)]
pub struct Pairing {
    left: ValueSpace,
    right: ValueSpace,
    out: ValueSpace,
    t: Vec<Scalar>,
}

impl Pairing {
    fn new(left: ValueSpace, right: ValueSpace, out: ValueSpace) -> Self {
        Pairing { left, right, out, t: vec![Scalar::zero(); left.dim() * right.dim() * out.dim()] }
    }

    fn set(&mut self, i: usize, j: usize, k: usize, s: Scalar) {
        let idx = (i * self.right.dim() + j) * self.out.dim() + k;
        self.t[idx] = s;
    }

    /// Evaluation `Hom(𝔞, 𝔩*) × 𝔞 → 𝔩*`.
    pub fn ev(a: usize, l: usize) -> Self {
        let mut p = Self::new(ValueSpace::HomALDual { a, l }, ValueSpace::A(a), ValueSpace::LDual(l));
        for k in 0..l {
            for q in 0..a {
                p.set(k * a + q, q, k, Scalar::from_integer(1.into()));
            }
        }
        p
    }

    /// `ω_𝔞(· , ·)`.
    pub fn omega(omega: &Matrix) -> Self {
        let n = omega.rows();
        let mut p = Self::new(ValueSpace::A(n), ValueSpace::A(n), ValueSpace::Real);
        for i in 0..n {
            for j in 0..n {
                p.set(i, j, 0, omega[(i, j)].clone());
            }
        }
        p
    }

    /// `[· , ·]_𝔞`.
    pub fn bracket(g: &LieAlgebra) -> Self {
        let n = g.dim();
        let mut p = Self::new(ValueSpace::A(n), ValueSpace::A(n), ValueSpace::A(n));
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    p.set(i, j, k, g.c(i, j, k).clone());
                }
            }
        }
        p
    }

    /// `β: 𝔞 × 𝔞 → 𝔩*`.
    pub fn beta(d: &DerivedMaps, n: usize, m: usize) -> Self {
        let mut p = Self::new(ValueSpace::A(n), ValueSpace::A(n), ValueSpace::LDual(m));
        for i in 0..n {
            for j in 0..n {
                for k in 0..m {
                    p.set(i, j, k, d.beta(i, j, k).clone());
                }
            }
        }
        p
    }

    /// Commutator on `End(𝔞)`.
    pub fn commutator(n: usize) -> Self {
        let e = ValueSpace::EndA(n);
        let mut p = Self::new(e, e, e);
        let one = Scalar::from_integer(1.into());
        for r in 0..n {
            for s in 0..n {
                for c in 0..n {
                    // (XY)_{rc} += X_{rs} Y_{sc};  (YX)_{rc} −= Y_{rs} X_{sc}
                    let xy = (r * n + s, s * n + c, r * n + c);
                    let i = (xy.0 * n * n + xy.1) * n * n + xy.2;
                    p.t[i] += &one;
                    let yx = (s * n + c, r * n + s, r * n + c);
                    let i = (yx.0 * n * n + yx.1) * n * n + yx.2;
                    p.t[i] -= &one;
                }
            }
        }
        p
    }

    pub fn apply(&self, u: &[Scalar], v: &[Scalar]) -> Vector {
        let (rd, od) = (self.right.dim(), self.out.dim());
        let mut out = vec![Scalar::zero(); od];
        for (i, ui) in u.iter().enumerate() {
            if ui.is_zero() {
                continue;
            }
            for (j, vj) in v.iter().enumerate() {
                if vj.is_zero() {
                    continue;
                }
                let c = ui * vj;
                for (k, o) in out.iter_mut().enumerate() {
                    let t = &self.t[(i * rd + j) * od + k];
                    if !t.is_zero() {
                        *o += &c * t;
                    }
                }
            }
        }
        out
    }
}

/// Shuffle product `Σ sgn(σ) m(u(L_σ…), v(L_σ…))` over `(p, q)`-shuffles.
pub fn wedge(m: &Pairing, u: &Cochain, v: &Cochain) -> Result<Cochain> {
    check_dim(u.l_dim, v.l_dim)?;
    if u.space != m.left || v.space != m.right {
        return Err(Error::Precondition("pairing does not match cochain value spaces".into()));
    }
    let (p, q) = (u.degree, v.degree);
    let shuffles = combinations(p + q, p);
    Ok(Cochain::from_fn(p + q, u.l_dim, m.out, |idx| {
        let mut acc = vec![Scalar::zero(); m.out.dim()];
        for s in &shuffles {
            let inversions: usize = s.iter().enumerate().map(|(k, &pos)| pos - k).sum();
            let left: Vec<usize> = s.iter().map(|&k| idx[k]).collect();
            let right: Vec<usize> = (0..p + q).filter(|k| !s.contains(k)).map(|k| idx[k]).collect();
            let val = m.apply(u.value(&left), v.value(&right));
            for (a, b) in acc.iter_mut().zip(val) {
                if inversions.is_multiple_of(2) {
                    *a += b;
                } else {
                    *a -= b;
                }
            }
        }
        acc
    }))
}

/// `(d_ρ u)(L₀,…,L_p) = Σ (−1)^i ρ(L_i) u(…L̂_i…)` for abelian `𝔩`.
pub fn d_action(rho: &[Matrix], u: &Cochain) -> Result<Cochain> {
    check_dim(u.l_dim, rho.len())?;
    for r in rho {
        check_dim(u.space.dim(), r.rows())?;
        check_dim(u.space.dim(), r.cols())?;
    }
    let p = u.degree;
    Ok(Cochain::from_fn(p + 1, u.l_dim, u.space, |idx| {
        let mut acc = vec![Scalar::zero(); u.space.dim()];
        for i in 0..=p {
            let rest: Vec<usize> = (0..=p).filter(|&k| k != i).map(|k| idx[k]).collect();
            let val = rho[idx[i]].mul_vec(u.value(&rest)).expect("dims");
            for (a, b) in acc.iter_mut().zip(val) {
                if i % 2 == 0 {
                    *a += b;
                } else {
                    *a -= b;
                }
            }
        }
        acc
    }))
}

/// Covariant differential `d_ξ` on `𝔞`-valued cochains.
pub fn d_xi(xi: &[Matrix], u: &Cochain) -> Result<Cochain> {
    match u.space {
        ValueSpace::A(n) if xi.iter().all(|x| x.rows() == n) => d_action(xi, u),
        _ => Err(Error::Precondition("d_xi needs an 𝔞-valued cochain".into())),
    }
}

/// `d_ξ̂` on `Hom(𝔞, 𝔩*)`-valued cochains, `(ξ̂(L)f) = f ∘ ξ(L)`.
pub fn d_xihat(xi: &[Matrix], u: &Cochain) -> Result<Cochain> {
    let ValueSpace::HomALDual { a: n, l: m } = u.space else {
        return Err(Error::Precondition("d_xihat needs a Hom(𝔞,𝔩*)-valued cochain".into()));
    };
    let hats: Vec<Matrix> = xi
        .iter()
        .map(|x| {
            let mut h = Matrix::zeros(m * n, m * n);
            for k in 0..m {
                for p in 0..n {
                    for q in 0..n {
                        h[(k * n + p, k * n + q)] = x[(q, p)].clone();
                    }
                }
            }
            h
        })
        .collect();
    d_action(&hats, u)
}

pub fn gamma_cochain(t: &CocycleTriple) -> Cochain {
    let (m, n) = (t.l_dim(), t.a_dim());
    Cochain::from_fn(1, m, ValueSpace::HomALDual { a: n, l: m }, |idx| {
        gamma_matrix(t, idx[0]).entries().to_vec()
    })
}

pub fn xi_cochain(t: &CocycleTriple) -> Cochain {
    let n = t.a_dim();
    Cochain::from_fn(1, t.l_dim(), ValueSpace::EndA(n), |idx| t.xi_matrix(idx[0]).entries().to_vec())
}

pub fn alpha_cochain(t: &CocycleTriple, d: &DerivedMaps) -> Cochain {
    Cochain::from_fn(2, t.l_dim(), ValueSpace::A(t.a_dim()), |idx| d.alpha(idx[0], idx[1]))
}

/// `τ ∈ C¹(𝔩, 𝔞)` from a matrix whose column `i` is `τ(e_i)`.
pub fn tau_cochain(tau: &Matrix) -> Cochain {
    Cochain::from_fn(1, tau.cols(), ValueSpace::A(tau.rows()), |idx| tau.col(idx[0]))
}

fn increasing_tuples(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    increasing_tuples(n, k)
}

fn all_tuples(n: usize, k: usize) -> Vec<Vec<usize>> {
    (0..n.pow(k as u32))
        .map(|mut x| {
            let mut v = vec![0; k];
            for slot in v.iter_mut().rev() {
                *slot = x % n;
                x /= n;
            }
            v
        })
        .collect()
}

/// All permutations of `0..k` with their signs.
fn permutations(k: usize) -> Vec<(Vec<usize>, i32)> {
    if k == 0 {
        return vec![(Vec::new(), 1)];
    }
    let mut out = Vec::new();
    for (perm, sgn) in permutations(k - 1) {
        for pos in 0..=perm.len() {
            let mut p = perm.clone();
            p.insert(pos, k - 1);
            // inserting at `pos` passes over `len - pos` larger-index slots
            let s = if (perm.len() - pos) % 2 == 0 { sgn } else { -sgn };
            out.push((p, s));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::int;

    #[test]
    fn permutation_signs() {
        let p = permutations(3);
        assert_eq!(p.len(), 6);
        assert_eq!(p.iter().map(|(_, s)| s).sum::<i32>(), 0);
        let find = |v: &[usize]| p.iter().find(|(q, _)| q == v).unwrap().1;
        assert_eq!(find(&[0, 1, 2]), 1);
        assert_eq!(find(&[1, 0, 2]), -1);
        assert_eq!(find(&[1, 2, 0]), 1);
    }

    #[test]
    fn one_forms_have_no_wedge_on_a_line() {
        let u = Cochain::from_fn(1, 1, ValueSpace::EndA(2), |_| vec![int(1), int(2), int(3), int(4)]);
        let w = wedge(&Pairing::commutator(2), &u, &u).unwrap();
        assert_eq!(w.degree(), 2);
        assert!(w.is_zero());
    }

    #[test]
    fn d_of_one_forms_on_a_line_vanishes() {
        let x = vec![Matrix::from_ints(2, 2, &[0, 1, 0, 0])];
        let u = Cochain::from_fn(1, 1, ValueSpace::A(2), |_| vec![int(1), int(1)]);
        assert!(d_xi(&x, &u).unwrap().is_zero());
    }
}
