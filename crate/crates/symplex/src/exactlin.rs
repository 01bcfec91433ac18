//! Exact dense linear algebra over the rationals.

use std::fmt;
use std::ops::{Index, IndexMut};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{check_dim, Error, Result};

/// Exact rational scalar, always in lowest terms with a positive denominator.
pub type Scalar = BigRational;

/// Column vector of scalars.
pub type Vector = Vec<Scalar>;

/// Integer scalar.
pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

/// The fraction `n/d`. Panics on `d == 0`.
pub fn frac(n: i64, d: i64) -> Scalar {
    Scalar::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `"p/q"` or `"p"`.
pub fn parse_scalar(s: &str) -> Option<Scalar> {
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim().parse::<BigInt>().ok()?, d.trim().parse::<BigInt>().ok()?),
        None => (s.parse::<BigInt>().ok()?, BigInt::one()),
    };
    if d.is_zero() {
        return None;
    }
    Some(Scalar::new(n, d))
}

/// Sign of a scalar as -1, 0 or 1.
pub fn sign(x: &Scalar) -> i32 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}

pub fn zero_vec(n: usize) -> Vector {
    vec![Scalar::zero(); n]
}

pub fn unit_vec(n: usize, i: usize) -> Vector {
    let mut v = zero_vec(n);
    v[i] = Scalar::one();
    v
}

pub fn is_zero_vec(v: &[Scalar]) -> bool {
    v.iter().all(Zero::is_zero)
}

pub fn dot(u: &[Scalar], v: &[Scalar]) -> Scalar {
    u.iter().zip(v).map(|(a, b)| a * b).sum()
}

pub fn add_vec(u: &[Scalar], v: &[Scalar]) -> Vector {
    u.iter().zip(v).map(|(a, b)| a + b).collect()
}

pub fn sub_vec(u: &[Scalar], v: &[Scalar]) -> Vector {
    u.iter().zip(v).map(|(a, b)| a - b).collect()
}

pub fn scale_vec(c: &Scalar, v: &[Scalar]) -> Vector {
    v.iter().map(|a| c * a).collect()
}

/// Dense row-major matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![Scalar::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Scalar::one();
        }
        m
    }

    pub fn from_vec(rows: usize, cols: usize, data: Vec<Scalar>) -> Result<Self> {
        check_dim(rows * cols, data.len())?;
        Ok(Matrix { rows, cols, data })
    }

    /// Builds from integer entries, row-major. Panics on a length mismatch.
    pub fn from_ints(rows: usize, cols: usize, entries: &[i64]) -> Self {
        assert_eq!(entries.len(), rows * cols, "entry count");
        Matrix { rows, cols, data: entries.iter().map(|&x| int(x)).collect() }
    }

    pub fn from_rows(rows: &[Vector]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            check_dim(cols, r.len())?;
            data.extend(r.iter().cloned());
        }
        Ok(Matrix { rows: rows.len(), cols, data })
    }

    /// Matrix whose columns are the given vectors, each of length `rows`.
    pub fn from_cols(rows: usize, cols: &[Vector]) -> Result<Self> {
        let mut m = Self::zeros(rows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            check_dim(rows, c.len())?;
            for (i, x) in c.iter().enumerate() {
                m[(i, j)] = x.clone();
            }
        }
        Ok(m)
    }

    pub fn diag(entries: &[Scalar]) -> Self {
        let mut m = Self::zeros(entries.len(), entries.len());
        for (i, x) in entries.iter().enumerate() {
            m[(i, i)] = x.clone();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    pub fn row(&self, i: usize) -> Vector {
        self.data[i * self.cols..(i + 1) * self.cols].to_vec()
    }

    pub fn col(&self, j: usize) -> Vector {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn row_vecs(&self) -> Vec<Vector> {
        (0..self.rows).map(|i| self.row(i)).collect()
    }

    pub fn col_vecs(&self) -> Vec<Vector> {
        (0..self.cols).map(|j| self.col(j)).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn is_skew(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (0..self.cols).all(|j| self[(i, j)] == -&self[(j, i)]))
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        check_dim(self.cols, other.rows)?;
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Result<Vector> {
        check_dim(self.cols, v.len())?;
        Ok((0..self.rows)
            .map(|i| {
                let mut s = Scalar::zero();
                for (j, x) in v.iter().enumerate() {
                    let a = &self[(i, j)];
                    if !a.is_zero() && !x.is_zero() {
                        s += a * x;
                    }
                }
                s
            })
            .collect())
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix> {
        check_dim(self.rows, other.rows)?;
        check_dim(self.cols, other.cols)?;
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn sub(&self, other: &Matrix) -> Result<Matrix> {
        self.add(&other.scale(&-Scalar::one()))
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| c * a).collect() }
    }

    /// Bilinear evaluation `uᵀ M v`.
    pub fn bilinear(&self, u: &[Scalar], v: &[Scalar]) -> Scalar {
        let mut s = Scalar::zero();
        for i in 0..self.rows {
            if u[i].is_zero() {
                continue;
            }
            for j in 0..self.cols {
                let a = &self[(i, j)];
                if !a.is_zero() && !v[j].is_zero() {
                    s += &u[i] * a * &v[j];
                }
            }
        }
        s
    }

    /// Reduced row echelon form and pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m[(i, c)].is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m[(r, c)].recip();
            for j in c..m.cols {
                let x = &m[(r, j)] * &inv;
                m[(r, j)] = x;
            }
            for i in 0..m.rows {
                if i == r || m[(i, c)].is_zero() {
                    continue;
                }
                let f = m[(i, c)].clone();
                for j in c..m.cols {
                    if m[(r, j)].is_zero() {
                        continue;
                    }
                    let x = &m[(i, j)] - &f * &m[(r, j)];
                    m[(i, j)] = x;
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    pub fn inverse(&self) -> Result<Matrix> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch { expected: self.rows, found: self.cols });
        }
        let n = self.rows;
        let aug = hstack(self, &Matrix::identity(n))?;
        let (r, piv) = aug.rref();
        if piv.iter().filter(|&&c| c < n).count() < n {
            return Err(Error::Singular);
        }
        let mut inv = Matrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                inv[(i, j)] = r[(i, n + j)].clone();
            }
        }
        Ok(inv)
    }

    pub fn det(&self) -> Result<Scalar> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch { expected: self.rows, found: self.cols });
        }
        let mut m = self.clone();
        let n = self.rows;
        let mut d = Scalar::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !m[(i, c)].is_zero()) else {
                return Ok(Scalar::zero());
            };
            if p != c {
                m.swap_rows(p, c);
                d = -d;
            }
            let piv = m[(c, c)].clone();
            d *= &piv;
            for i in c + 1..n {
                if m[(i, c)].is_zero() {
                    continue;
                }
                let f = &m[(i, c)] / &piv;
                for j in c..n {
                    let x = &m[(i, j)] - &f * &m[(c, j)];
                    m[(i, j)] = x;
                }
            }
        }
        Ok(d)
    }

    pub fn trace(&self) -> Scalar {
        (0..self.rows.min(self.cols)).map(|i| self[(i, i)].clone()).sum()
    }

    pub fn pow(&self, k: u32) -> Result<Matrix> {
        let mut out = Matrix::identity(self.rows);
        for _ in 0..k {
            out = out.mul(self)?;
        }
        Ok(out)
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = Scalar;
    fn index(&self, (i, j): (usize, usize)) -> &Scalar {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Scalar {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

pub fn hstack(a: &Matrix, b: &Matrix) -> Result<Matrix> {
    check_dim(a.rows, b.rows)?;
    let mut m = Matrix::zeros(a.rows, a.cols + b.cols);
    for i in 0..a.rows {
        for j in 0..a.cols {
            m[(i, j)] = a[(i, j)].clone();
        }
        for j in 0..b.cols {
            m[(i, a.cols + j)] = b[(i, j)].clone();
        }
    }
    Ok(m)
}

pub fn vstack(a: &Matrix, b: &Matrix) -> Result<Matrix> {
    check_dim(a.cols, b.cols)?;
    let mut data = a.data.clone();
    data.extend(b.data.iter().cloned());
    Ok(Matrix { rows: a.rows + b.rows, cols: a.cols, data })
}

pub fn rank(m: &Matrix) -> usize {
    m.rref().1.len()
}

pub fn kernel(m: &Matrix) -> Subspace {
    let (r, piv) = m.rref();
    let n = m.cols;
    let mut basis = Vec::new();
    for free in (0..n).filter(|c| !piv.contains(c)) {
        let mut v = zero_vec(n);
        v[free] = Scalar::one();
        for (row, &p) in piv.iter().enumerate() {
            v[p] = -r[(row, free)].clone();
        }
        basis.push(v);
    }
    Subspace { ambient: n, basis }
}

/// Affine solution set of `M x = b`: a particular solution plus the kernel.
pub fn solve(m: &Matrix, b: &[Scalar]) -> Result<Option<(Vector, Subspace)>> {
    check_dim(m.rows, b.len())?;
    let bcol = Matrix::from_cols(m.rows, &[b.to_vec()])?;
    let (r, piv) = hstack(m, &bcol)?.rref();
    if piv.last() == Some(&m.cols) {
        return Ok(None);
    }
    let mut x = zero_vec(m.cols);
    for (row, &p) in piv.iter().enumerate() {
        x[p] = r[(row, m.cols)].clone();
    }
    Ok(Some((x, kernel(m))))
}

/// A linear subspace of `Q^n` with an independent basis.
#[derive(Clone, Debug)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<Vector>,
}

impl Subspace {
    pub fn zero(n: usize) -> Self {
        Subspace { ambient: n, basis: Vec::new() }
    }

    pub fn full(n: usize) -> Self {
        Subspace { ambient: n, basis: (0..n).map(|i| unit_vec(n, i)).collect() }
    }

    /// Span of arbitrary vectors; the stored basis is the nonzero rows of the echelon form.
    pub fn span(n: usize, vectors: &[Vector]) -> Result<Self> {
        for v in vectors {
            check_dim(n, v.len())?;
        }
        if vectors.is_empty() {
            return Ok(Self::zero(n));
        }
        let (r, piv) = Matrix::from_rows(vectors)?.rref();
        Ok(Subspace { ambient: n, basis: (0..piv.len()).map(|i| r.row(i)).collect() })
    }

    /// Span of the given vectors, keeping the first independent ones as the basis.
    pub fn span_keep(n: usize, vectors: &[Vector]) -> Result<Self> {
        let mut s = Self::zero(n);
        for v in vectors {
            check_dim(n, v.len())?;
            if !s.contains(v) {
                s.basis.push(v.clone());
            }
        }
        Ok(s)
    }

    pub fn coords(n: usize, idx: &[usize]) -> Self {
        Subspace { ambient: n, basis: idx.iter().map(|&i| unit_vec(n, i)).collect() }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    /// Matrix with the basis vectors as columns.
    pub fn matrix(&self) -> Matrix {
        Matrix::from_cols(self.ambient, &self.basis).expect("basis lengths")
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        if is_zero_vec(v) {
            return true;
        }
        if self.basis.is_empty() {
            return false;
        }
        let mut rows = self.basis.clone();
        rows.push(v.to_vec());
        rank(&Matrix::from_rows(&rows).expect("lengths")) == self.basis.len()
    }

    pub fn contains_space(&self, other: &Subspace) -> bool {
        other.basis.iter().all(|v| self.contains(v))
    }

    /// Equality as subspaces.
    pub fn same_as(&self, other: &Subspace) -> bool {
        self.ambient == other.ambient
            && self.dim() == other.dim()
            && self.contains_space(other)
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        check_dim(self.ambient, other.ambient)?;
        let mut v = self.basis.clone();
        v.extend(other.basis.iter().cloned());
        Subspace::span(self.ambient, &v)
    }

    /// Coordinates of `v` in the stored basis, if `v` lies in the subspace.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vector> {
        if self.basis.is_empty() {
            return is_zero_vec(v).then(Vec::new);
        }
        solve(&self.matrix(), v).ok().flatten().map(|(x, _)| x)
    }
}

pub fn intersect(a: &Subspace, b: &Subspace) -> Result<Subspace> {
    check_dim(a.ambient, b.ambient)?;
    if a.is_zero() || b.is_zero() {
        return Ok(Subspace::zero(a.ambient));
    }
    let neg_b = b.matrix().scale(&-Scalar::one());
    let k = kernel(&hstack(&a.matrix(), &neg_b)?);
    let am = a.matrix();
    let vecs: Vec<Vector> = k
        .basis
        .iter()
        .map(|x| am.mul_vec(&x[..a.dim()]).expect("shape"))
        .collect();
    Subspace::span(a.ambient, &vecs)
}

/// `{x : ω(x, w) = 0 for all w ∈ W}`.
pub fn perp(w: &Subspace, omega: &Matrix) -> Result<Subspace> {
    check_dim(w.ambient, omega.rows())?;
    if !omega.is_skew() {
        return Err(Error::NotSkew);
    }
    if w.is_zero() {
        return Ok(Subspace::full(w.ambient));
    }
    let rows: Vec<Vector> = w.basis.iter().map(|v| omega.mul_vec(v).expect("shape")).collect();
    Ok(kernel(&Matrix::from_rows(&rows)?))
}

/// Gram matrix of ω restricted to a subspace.
pub fn restrict_form(w: &Subspace, omega: &Matrix) -> Matrix {
    let mut g = Matrix::zeros(w.dim(), w.dim());
    for (i, u) in w.basis.iter().enumerate() {
        for (j, v) in w.basis.iter().enumerate() {
            g[(i, j)] = omega.bilinear(u, v);
        }
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_examples() {
        assert_eq!(rank(&Matrix::identity(3)), 3);
        assert_eq!(rank(&Matrix::from_ints(2, 2, &[1, 0, 0, 0])), 1);
        assert_eq!(rank(&Matrix::from_ints(3, 3, &[0, 1, 0, 0, 0, 1, 0, 0, 0])), 2);
    }

    #[test]
    fn kernel_examples() {
        assert!(kernel(&Matrix::identity(3)).is_zero());
        let k = kernel(&Matrix::from_ints(2, 2, &[0, 1, 0, 0]));
        assert!(k.same_as(&Subspace::coords(2, &[0])));
    }

    #[test]
    fn solve_examples() {
        let (x, k) = solve(&Matrix::identity(2), &[int(1), int(0)]).unwrap().unwrap();
        assert_eq!(x, vec![int(1), int(0)]);
        assert!(k.is_zero());
        assert!(solve(&Matrix::from_ints(1, 2, &[0, 0]), &[int(1)]).unwrap().is_none());
        let (x, k) = solve(&Matrix::from_ints(1, 2, &[1, 1]), &[int(1)]).unwrap().unwrap();
        assert_eq!(x, vec![int(1), int(0)]);
        assert!(k.same_as(&Subspace::span(2, &[vec![int(1), int(-1)]]).unwrap()));
    }

    #[test]
    fn intersect_examples() {
        let a = Subspace::coords(3, &[0, 1]);
        let b = Subspace::coords(3, &[1, 2]);
        assert!(intersect(&a, &b).unwrap().same_as(&Subspace::coords(3, &[1])));
        assert!(intersect(&Subspace::coords(3, &[0]), &Subspace::coords(3, &[1])).unwrap().is_zero());
        assert!(intersect(&a, &a).unwrap().same_as(&a));
        assert!(intersect(&a, &Subspace::zero(4)).is_err());
    }

    #[test]
    fn perp_examples() {
        let mut w = Matrix::zeros(4, 4);
        w[(0, 1)] = int(1);
        w[(1, 0)] = int(-1);
        w[(2, 3)] = int(1);
        w[(3, 2)] = int(-1);
        assert!(kernel(&w).is_zero());
        assert!(perp(&Subspace::full(4), &w).unwrap().is_zero());
        let p = perp(&Subspace::coords(4, &[0, 1]), &w).unwrap();
        assert!(p.same_as(&Subspace::coords(4, &[2, 3])));

        let mut h = Matrix::zeros(4, 4);
        h[(0, 3)] = int(1);
        h[(3, 0)] = int(-1);
        h[(1, 2)] = int(1);
        h[(2, 1)] = int(-1);
        let z = Subspace::coords(4, &[2, 3]);
        assert!(perp(&z, &h).unwrap().same_as(&z));
        assert_eq!(perp(&z, &Matrix::identity(4)).unwrap_err(), Error::NotSkew);
    }

    #[test]
    fn inverse_and_det() {
        let m = Matrix::from_ints(2, 2, &[2, 1, 1, 1]);
        assert_eq!(m.det().unwrap(), int(1));
        assert_eq!(m.mul(&m.inverse().unwrap()).unwrap(), Matrix::identity(2));
        assert_eq!(Matrix::from_ints(2, 2, &[1, 2, 2, 4]).inverse(), Err(Error::Singular));
    }

    #[test]
    fn scalar_parsing() {
        assert_eq!(parse_scalar("-3/6"), Some(frac(-1, 2)));
        assert_eq!(parse_scalar("7"), Some(int(7)));
        assert_eq!(parse_scalar("1/0"), None);
        assert_eq!(parse_scalar("x"), None);
    }
}
