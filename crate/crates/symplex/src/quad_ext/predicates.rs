use std::collections::BTreeSet;

use num_traits::Zero;

use super::cochain::{alpha_cochain, d_xi, d_xihat, gamma_cochain, wedge, xi_cochain, Pairing};
use super::derived::{derived_maps, gamma0, xi0};
use super::CocycleTriple;
use crate::exactlin::{
    frac, intersect, kernel, rank, restrict_form, unit_vec, Matrix, Scalar, Subspace, Vector,
};
use crate::lie::{center, is_derivation, is_nilpotent};

/// A violated cocycle condition (numbered 1 to 5) with a human-readable witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConditionFailure {
    pub condition: u8,
    pub witness: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CocycleReport {
    pub failures: Vec<ConditionFailure>,
}

impl CocycleReport {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn violated(&self) -> BTreeSet<u8> {
        self.failures.iter().map(|f| f.condition).collect()
    }

    fn fail(&mut self, condition: u8, witness: String) {
        // one witness per condition keeps reports short
        if !self.failures.iter().any(|f| f.condition == condition) {
            self.failures.push(ConditionFailure { condition, witness });
        }
    }
}

/// `Im ξ ⊂ der(𝔞)`, `½[ξ∧ξ] = ad∘α`, `d_ξα = 0`.
pub fn is_factor_system(t: &CocycleTriple) -> CocycleReport {
    let mut rep = CocycleReport::default();
    let (m, n) = (t.l_dim(), t.a_dim());
    let g = &t.a().g;
    let xs = t.xi_matrices();
    for (i, x) in xs.iter().enumerate() {
        if !is_derivation(g, x).expect("square") {
            rep.fail(1, format!("xi(e{}) is not a derivation", i + 1));
        }
    }
    let d = derived_maps(t);
    let half_sq = wedge(&Pairing::commutator(n), &xi_cochain(t), &xi_cochain(t))
        .expect("spaces")
        .scale(&frac(1, 2));
    for i in 0..m {
        for j in i + 1..m {
            let ad = g.ad(&d.alpha(i, j)).expect("dims");
            if half_sq.value(&[i, j]) != ad.entries() {
                rep.fail(1, format!("[xi(e{}), xi(e{})] != ad(alpha)", i + 1, j + 1));
            }
        }
    }
    let dalpha = d_xi(&xs, &alpha_cochain(t, &d)).expect("spaces");
    if !dalpha.is_zero() {
        rep.fail(1, "d_xi alpha != 0".into());
    }
    rep
}

/// The five conditions making the standard model a symplectic Lie algebra.
pub fn is_cocycle(t: &CocycleTriple) -> CocycleReport {
    let mut rep = is_factor_system(t);
    let (m, n) = (t.l_dim(), t.a_dim());
    let g = &t.a().g;
    let d = derived_maps(t);
    let xs = t.xi_matrices();

    // 2: β(ξ(L)A₁, A₂) + β(A₁, ξ(L)A₂) = γ(L)[A₁, A₂]
    'two: for (i, x) in xs.iter().enumerate() {
        for p in 0..n {
            for q in p..n {
                let lhs = add(
                    &d.beta_eval(&x.col(p), &unit_vec(n, q)),
                    &d.beta_eval(&unit_vec(n, p), &x.col(q)),
                );
                let br = g.bracket_basis(p, q);
                let rhs: Vector =
                    (0..m).map(|k| t.gamma_eval(&unit_vec(m, i), &br, &unit_vec(m, k))).collect();
                if lhs != rhs {
                    rep.fail(2, format!("L=e{}, A1=a{}, A2=a{}", i + 1, p + 1, q + 1));
                    break 'two;
                }
            }
        }
    }

    // 3: d_ξ̂ γ + β₀∘α = 0
    let dg = d_xihat(&xs, &gamma_cochain(t)).expect("spaces");
    'three: for i in 0..m {
        for j in i + 1..m {
            let al = d.alpha(i, j);
            let v = dg.value(&[i, j]);
            for p in 0..n {
                let b = d.beta_eval(&al, &unit_vec(n, p));
                for k in 0..m {
                    if !(&v[k * n + p] + &b[k]).is_zero() {
                        rep.fail(3, format!("L1=e{}, L2=e{}, A=a{}", i + 1, j + 1, p + 1));
                        break 'three;
                    }
                }
            }
        }
    }

    // 4: ev(γ∧α) = 0
    let ev = wedge(&Pairing::ev(n, m), &gamma_cochain(t), &alpha_cochain(t, &d)).expect("spaces");
    if !ev.is_zero() {
        rep.fail(4, "ev(gamma ^ alpha) != 0".into());
    }

    // 5: cyclic sum of ε vanishes
    'five: for i in 0..m {
        for j in i + 1..m {
            for k in j + 1..m {
                let s = t.epsilon(i, j, k) + t.epsilon(j, k, i) + t.epsilon(k, i, j);
                if !s.is_zero() {
                    rep.fail(5, format!("(e{}, e{}, e{})", i + 1, j + 1, k + 1));
                    break 'five;
                }
            }
        }
    }
    rep.failures.sort_by_key(|f| f.condition);
    rep
}

fn add(u: &[Scalar], v: &[Scalar]) -> Vector {
    u.iter().zip(v).map(|(a, b)| a + b).collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BalancedReport {
    /// Condition (a): the only central `L + A` has `L = 0`.
    pub cond_a: bool,
    /// An offending `𝔩`-component when (a) fails.
    pub witness_l: Option<Vector>,
    /// Condition (b): the joint kernel in `𝔷(𝔞)` is ω-non-degenerate.
    pub cond_b: bool,
    /// Dimension of `𝔷(𝔞) ∩ ker β₀ ∩ 𝔞^𝔩_ξ ∩ ker γ₀`.
    pub kernel_dim: usize,
}

impl BalancedReport {
    pub fn ok(&self) -> bool {
        self.cond_a && self.cond_b
    }
}

pub fn is_balanced(t: &CocycleTriple) -> BalancedReport {
    let (m, n) = (t.l_dim(), t.a_dim());
    let g = &t.a().g;
    let d = derived_maps(t);
    // unknowns: L (0..m), then A (m..m+n)
    let mut rows: Vec<Vector> = Vec::new();
    let row = || vec![Scalar::zero(); m + n];
    for q in 0..n {
        for k in 0..n {
            // (a.1) [A, a_q] + ξ(L)a_q = 0
            let mut r = row();
            for i in 0..m {
                r[i] = t.xi(i, q, k).clone();
            }
            for p in 0..n {
                r[m + p] = g.c(p, q, k).clone();
            }
            rows.push(r);
        }
        for k in 0..m {
            // (a.2) γ(L)a_q + β(A, a_q) = 0
            let mut r = row();
            for i in 0..m {
                r[i] = t.gamma(i, q, k).clone();
            }
            for p in 0..n {
                r[m + p] = d.beta(p, q, k).clone();
            }
            rows.push(r);
        }
    }
    for l2 in 0..m {
        for k in 0..n {
            // (a.3) α(L, e_r) = ξ(e_r)A
            let mut r = row();
            for i in 0..m {
                r[i] = d.alpha(i, l2)[k].clone();
            }
            for p in 0..n {
                r[m + p] = -t.xi(l2, p, k).clone();
            }
            rows.push(r);
        }
        for k in 0..m {
            // (a.4) ε(L, e_r) = γ(e_r)A
            let mut r = row();
            for i in 0..m {
                r[i] = t.epsilon(i, l2, k).clone();
            }
            for p in 0..n {
                r[m + p] = -t.gamma(l2, p, k).clone();
            }
            rows.push(r);
        }
    }
    let ker = if rows.is_empty() {
        Subspace::full(m + n)
    } else {
        kernel(&Matrix::from_rows(&rows).expect("row lengths"))
    };
    let witness_l = ker
        .basis()
        .iter()
        .map(|v| v[..m].to_vec())
        .find(|l| l.iter().any(|x| !x.is_zero()));

    let mut w = center(g);
    for map in [d.beta0(), xi0(t), gamma0(t)] {
        let k = if map.rows() == 0 { Subspace::full(n) } else { kernel(&map) };
        w = intersect(&w, &k).expect("ambient");
    }
    let form = restrict_form(&w, &t.a().omega);
    BalancedReport {
        cond_a: witness_l.is_none(),
        witness_l,
        cond_b: rank(&form) == w.dim(),
        kernel_dim: w.dim(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NilpotentReport {
    pub a_nilpotent: bool,
    pub xi_nilpotent: bool,
}

impl NilpotentReport {
    pub fn ok(&self) -> bool {
        self.a_nilpotent && self.xi_nilpotent
    }
}

pub fn is_nilpotent_cocycle(t: &CocycleTriple) -> NilpotentReport {
    NilpotentReport {
        a_nilpotent: is_nilpotent(&t.a().g).0,
        xi_nilpotent: xi_algebra_nilpotency(&t.xi_matrices()).is_some(),
    }
}

/// Nilpotency index of the associative algebra generated by `mats`
/// (smallest `k` with `A^k = 0`), or `None` if it is not nilpotent.
pub fn xi_algebra_nilpotency(mats: &[Matrix]) -> Option<usize> {
    let Some(first) = mats.first() else {
        return Some(1);
    };
    let n = first.rows();
    let flat = |x: &Matrix| x.entries().to_vec();
    let unflat = |v: &[Scalar]| Matrix::from_vec(n, n, v.to_vec()).expect("square");
    let mut alg = Subspace::span(n * n, &mats.iter().map(flat).collect::<Vec<_>>()).ok()?;
    loop {
        let mut gens: Vec<Vector> = alg.basis().to_vec();
        for x in mats {
            for b in alg.basis() {
                gens.push(flat(&x.mul(&unflat(b)).expect("square")));
            }
        }
        let next = Subspace::span(n * n, &gens).ok()?;
        if next.dim() == alg.dim() {
            break;
        }
        alg = next;
    }
    let mut power = alg.clone();
    let mut k = 1;
    while !power.is_zero() {
        let mut gens = Vec::new();
        for p in power.basis() {
            for a in alg.basis() {
                gens.push(flat(&unflat(p).mul(&unflat(a)).expect("square")));
            }
        }
        let next = Subspace::span(n * n, &gens).ok()?;
        if next.dim() == power.dim() {
            return None;
        }
        power = next;
        k += 1;
    }
    Some(k)
}
