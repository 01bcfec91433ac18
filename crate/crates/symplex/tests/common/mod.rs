#![allow(dead_code)]

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use symplex::catalog::Family;
use symplex::exactlin::{frac, int, Matrix, Scalar};
use symplex::group_action::{PairIso, TauShift};
use symplex::{CocycleTriple, SymplecticLieAlgebra};

pub fn rng(seed: u64) -> ChaCha8Rng {
    rand::SeedableRng::seed_from_u64(seed)
}

/// Small rational, numerator in `-4..=4`, denominator in `1..=3`.
pub fn rat(r: &mut ChaCha8Rng) -> Scalar {
    frac(r.gen_range(-4..=4), r.gen_range(1..=3))
}

pub fn nonzero_rat(r: &mut ChaCha8Rng) -> Scalar {
    loop {
        let x = rat(r);
        if x != int(0) {
            return x;
        }
    }
}

pub fn rand_matrix(r: &mut ChaCha8Rng, rows: usize, cols: usize) -> Matrix {
    let mut m = Matrix::zeros(rows, cols);
    for i in 0..rows {
        for j in 0..cols {
            m[(i, j)] = rat(r);
        }
    }
    m
}

pub fn rand_invertible(r: &mut ChaCha8Rng, n: usize) -> Matrix {
    loop {
        let m = rand_matrix(r, n, n);
        if m.inverse().is_ok() {
            return m;
        }
    }
}

pub fn rand_tau(r: &mut ChaCha8Rng, t: &CocycleTriple) -> TauShift {
    TauShift::from_tau(rand_matrix(r, t.a_dim(), t.l_dim()))
}

/// `x ↦ x + c·ω(v, x)·v`, symplectic for any `v`.
fn transvection(a: &SymplecticLieAlgebra, v: &[Scalar], c: &Scalar) -> Matrix {
    let n = a.dim();
    let mut m = Matrix::identity(n);
    for col in 0..n {
        let e = symplex::exactlin::unit_vec(n, col);
        let w = c * a.omega(v, &e);
        for row in 0..n {
            m[(row, col)] += &w * &v[row];
        }
    }
    m
}

/// A random symplectic automorphism of the family's `𝔞`.
pub fn rand_u(r: &mut ChaCha8Rng, family: Family, a: &SymplecticLieAlgebra) -> Matrix {
    let n = a.dim();
    let mut u = Matrix::identity(n);
    match family {
        Family::R3Zero => {}
        Family::RR4 | Family::R2R2 => {
            for _ in 0..3 {
                let v: Vec<Scalar> = (0..n).map(|_| rat(r)).collect();
                u = transvection(a, &v, &nonzero_rat(r)).mul(&u).unwrap();
            }
        }
        Family::RH3R => {
            // diag(y⁻², y, y⁻¹, y²), an optional sign flip, central transvections
            let y = frac(r.gen_range(1..=3), r.gen_range(1..=3)) * int(if r.gen() { 1 } else { -1 });
            let y2 = &y * &y;
            u = Matrix::diag(&[int(1) / &y2, y.clone(), int(1) / &y, y2]);
            if r.gen() {
                u = Matrix::diag(&[int(1), int(-1), int(-1), int(1)]).mul(&u).unwrap();
            }
            for _ in 0..2 {
                let v = vec![int(0), int(0), rat(r), rat(r)];
                u = transvection(a, &v, &nonzero_rat(r)).mul(&u).unwrap();
            }
        }
    }
    u
}

pub fn rand_pair(r: &mut ChaCha8Rng, family: Family, t: &CocycleTriple) -> PairIso {
    let s = rand_invertible(r, t.l_dim());
    let u = rand_u(r, family, t.a());
    PairIso::on(s, u, t.a()).expect("generated pair is valid")
}
