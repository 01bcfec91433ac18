//! Lie algebras given by structure constants.

use num_traits::Zero;

use crate::error::{check_dim, Error, Result};
use crate::exactlin::{kernel, rank, unit_vec, zero_vec, Matrix, Scalar, Subspace, Vector};

/// A linear map stored as a matrix whose columns are the images of the source basis.
pub type LinearMap = Matrix;

/// Structure constants `c[i][j][k]`, the coefficient of `b_k` in `[b_i, b_j]`.
///
/// Values may be built unvalidated; run [`validate_lie`] before relying on Jacobi.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieAlgebra {
    dim: usize,
    c: Vec<Scalar>,
}

impl LieAlgebra {
    pub fn abelian(dim: usize) -> Self {
        LieAlgebra { dim, c: vec![Scalar::zero(); dim * dim * dim] }
    }

    /// Builds from entries `[b_i, b_j] ∋ s·b_k` with `i < j`; antisymmetry is implied.
    pub fn from_brackets(dim: usize, entries: &[(usize, usize, usize, Scalar)]) -> Result<Self> {
        let mut g = Self::abelian(dim);
        for (i, j, k, s) in entries {
            if *i >= *j || *j >= dim || *k >= dim {
                return Err(Error::Precondition(format!("bad bracket index ({i},{j},{k})")));
            }
            let v = g.c(*i, *j, *k) + s;
            g.set(*i, *j, *k, v);
        }
        Ok(g)
    }

    /// Raw tensor, no antisymmetry enforced.
    pub fn from_tensor(dim: usize, c: Vec<Scalar>) -> Result<Self> {
        check_dim(dim * dim * dim, c.len())?;
        Ok(LieAlgebra { dim, c })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    fn idx(&self, i: usize, j: usize, k: usize) -> usize {
        (i * self.dim + j) * self.dim + k
    }

    pub fn c(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.c[self.idx(i, j, k)]
    }

    /// Sets `c[i][j][k] = s` and `c[j][i][k] = -s`.
    pub fn set(&mut self, i: usize, j: usize, k: usize, s: Scalar) {
        let a = self.idx(j, i, k);
        self.c[a] = -s.clone();
        let b = self.idx(i, j, k);
        self.c[b] = s;
    }

    pub fn is_abelian(&self) -> bool {
        self.c.iter().all(Zero::is_zero)
    }

    pub fn bracket_basis(&self, i: usize, j: usize) -> Vector {
        (0..self.dim).map(|k| self.c(i, j, k).clone()).collect()
    }

    pub fn bracket(&self, x: &[Scalar], y: &[Scalar]) -> Result<Vector> {
        check_dim(self.dim, x.len())?;
        check_dim(self.dim, y.len())?;
        let mut out = zero_vec(self.dim);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let f = xi * yj;
                for (k, o) in out.iter_mut().enumerate() {
                    let c = self.c(i, j, k);
                    if !c.is_zero() {
                        *o += &f * c;
                    }
                }
            }
        }
        Ok(out)
    }

    /// Matrix of `ad_x`.
    pub fn ad(&self, x: &[Scalar]) -> Result<Matrix> {
        let cols: Vec<Vector> = (0..self.dim)
            .map(|j| self.bracket(x, &unit_vec(self.dim, j)))
            .collect::<Result<_>>()?;
        Matrix::from_cols(self.dim, &cols)
    }

    /// Bracket table `(i, j, k, c)` for `i < j` with nonzero coefficient.
    pub fn entries(&self) -> Vec<(usize, usize, usize, Scalar)> {
        let mut out = Vec::new();
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                for k in 0..self.dim {
                    if !self.c(i, j, k).is_zero() {
                        out.push((i, j, k, self.c(i, j, k).clone()));
                    }
                }
            }
        }
        out
    }
}

/// Outcome of [`validate_lie`].
#[derive(Clone, Debug, Default)]
pub struct LieReport {
    pub antisymmetry_failures: Vec<(usize, usize)>,
    /// Basis triples with a nonzero cyclic sum, and the defect vector.
    pub jacobi_failures: Vec<((usize, usize, usize), Vector)>,
}

impl LieReport {
    pub fn ok(&self) -> bool {
        self.antisymmetry_failures.is_empty() && self.jacobi_failures.is_empty()
    }
}

/// Jacobi cyclic sum `[[x,y],z] + [[y,z],x] + [[z,x],y]` on basis vectors.
pub fn jacobiator(g: &LieAlgebra, i: usize, j: usize, k: usize) -> Vector {
    let n = g.dim;
    let term = |a: usize, b: usize, c: usize| {
        g.bracket(&g.bracket_basis(a, b), &unit_vec(n, c)).expect("dims")
    };
    let (x, y, z) = (term(i, j, k), term(j, k, i), term(k, i, j));
    (0..n).map(|t| &x[t] + &y[t] + &z[t]).collect()
}

pub fn validate_lie(g: &LieAlgebra) -> LieReport {
    let n = g.dim;
    let mut rep = LieReport::default();
    for i in 0..n {
        for j in i..n {
            if (0..n).any(|k| g.c(i, j, k) != &-g.c(j, i, k)) {
                rep.antisymmetry_failures.push((i, j));
            }
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let d = jacobiator(g, i, j, k);
                if d.iter().any(|x| !x.is_zero()) {
                    rep.jacobi_failures.push(((i, j, k), d));
                }
            }
        }
    }
    rep
}

pub fn center(g: &LieAlgebra) -> Subspace {
    let n = g.dim;
    let mut m = Matrix::zeros(n * n, n);
    for j in 0..n {
        for k in 0..n {
            for i in 0..n {
                m[(j * n + k, i)] = g.c(i, j, k).clone();
            }
        }
    }
    kernel(&m)
}

/// `[g, W]` as a subspace.
pub fn bracket_span(g: &LieAlgebra, w: &Subspace) -> Subspace {
    let n = g.dim;
    let mut v = Vec::new();
    for i in 0..n {
        for b in w.basis() {
            v.push(g.bracket(&unit_vec(n, i), b).expect("dims"));
        }
    }
    Subspace::span(n, &v).expect("dims")
}

/// `g¹ = g, g^{k+1} = [g, g^k]` until the dimension stops dropping.
pub fn lower_central_series(g: &LieAlgebra) -> Vec<Subspace> {
    let mut series = vec![Subspace::full(g.dim)];
    loop {
        let last = series.last().expect("nonempty");
        if last.is_zero() {
            break;
        }
        let next = bracket_span(g, last);
        let stalled = next.dim() == last.dim();
        if !stalled {
            series.push(next);
        } else {
            break;
        }
    }
    series
}

/// Nilpotency flag and class (number of nonzero terms of the series).
pub fn is_nilpotent(g: &LieAlgebra) -> (bool, usize) {
    let s = lower_central_series(g);
    let nonzero = s.iter().filter(|w| !w.is_zero()).count();
    (s.last().is_some_and(Subspace::is_zero), nonzero)
}

pub fn is_derivation(g: &LieAlgebra, d: &LinearMap) -> Result<bool> {
    let n = g.dim;
    check_dim(n, d.rows())?;
    check_dim(n, d.cols())?;
    for i in 0..n {
        for j in i + 1..n {
            let lhs = d.mul_vec(&g.bracket_basis(i, j))?;
            let r1 = g.bracket(&d.col(i), &unit_vec(n, j))?;
            let r2 = g.bracket(&unit_vec(n, i), &d.col(j))?;
            if (0..n).any(|k| lhs[k] != &r1[k] + &r2[k]) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

pub fn is_ideal(g: &LieAlgebra, j: &Subspace) -> bool {
    j.contains_space(&bracket_span(g, j))
}

/// Standard basis vectors, in order, that complete `w` to the whole space.
pub fn standard_complement(w: &Subspace) -> Vec<usize> {
    let n = w.ambient_dim();
    let mut acc = w.clone();
    let mut out = Vec::new();
    for i in 0..n {
        let e = unit_vec(n, i);
        if !acc.contains(&e) {
            out.push(i);
            acc = acc.sum(&Subspace::coords(n, &[i])).expect("dims");
        }
    }
    out
}

/// Quotient by an ideal, on the standard complement, with the projection map.
pub fn quotient(g: &LieAlgebra, j: &Subspace) -> Result<(LieAlgebra, LinearMap)> {
    let n = g.dim;
    check_dim(n, j.ambient_dim())?;
    if !is_ideal(g, j) {
        return Err(Error::NotAnIdeal);
    }
    let comp = standard_complement(j);
    let r = comp.len();
    let mut cols: Vec<Vector> = j.basis().to_vec();
    cols.extend(comp.iter().map(|&i| unit_vec(n, i)));
    let inv = Matrix::from_cols(n, &cols)?.inverse()?;
    let mut proj = Matrix::zeros(r, n);
    for a in 0..r {
        for b in 0..n {
            proj[(a, b)] = inv[(j.dim() + a, b)].clone();
        }
    }
    let mut q = LieAlgebra::abelian(r);
    for (a, &ia) in comp.iter().enumerate() {
        for (b, &ib) in comp.iter().enumerate().skip(a + 1) {
            let v = proj.mul_vec(&g.bracket_basis(ia, ib))?;
            for (k, x) in v.into_iter().enumerate() {
                q.set(a, b, k, x);
            }
        }
    }
    Ok((q, proj))
}

/// The subalgebra `w` with structure constants in the stored basis of `w`.
pub fn restrict(g: &LieAlgebra, w: &Subspace) -> Result<LieAlgebra> {
    let d = w.dim();
    let mut h = LieAlgebra::abelian(d);
    for a in 0..d {
        for b in a + 1..d {
            let v = g.bracket(&w.basis()[a], &w.basis()[b])?;
            let x = w
                .coordinates(&v)
                .ok_or_else(|| Error::Precondition("subspace is not a subalgebra".into()))?;
            for (k, s) in x.into_iter().enumerate() {
                h.set(a, b, k, s);
            }
        }
    }
    Ok(h)
}

/// True iff `phi` is a Lie algebra isomorphism `g1 → g2`.
pub fn check_iso(g1: &LieAlgebra, g2: &LieAlgebra, phi: &LinearMap) -> Result<bool> {
    let n = g1.dim;
    check_dim(n, g2.dim)?;
    check_dim(n, phi.rows())?;
    check_dim(n, phi.cols())?;
    if rank(phi) < n {
        return Err(Error::Singular);
    }
    for i in 0..n {
        for j in i + 1..n {
            let lhs = phi.mul_vec(&g1.bracket_basis(i, j))?;
            let rhs = g2.bracket(&phi.col(i), &phi.col(j))?;
            if lhs != rhs {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// The identity map as a [`LinearMap`].
pub fn identity_map(n: usize) -> LinearMap {
    Matrix::identity(n)
}
