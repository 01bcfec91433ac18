//! The classification lists, generated in code. The bundled data files are
//! written from here and a test keeps them in sync.

use std::collections::BTreeMap;

use super::format::{CocycleFile, Dim4File, EntryFile, Expected, Family, AlgebraFile, ScalarRepr};
use crate::exactlin::{frac, int, Matrix, Scalar};
use crate::lie::LieAlgebra;
use crate::quad_ext::{set_eps_from_matrix, CocycleTriple};
use crate::symplectic::{skew_form, SymplecticLieAlgebra};

fn sla(dim: usize, brackets: &[(usize, usize, usize, i64)], omega: &[(usize, usize)]) -> SymplecticLieAlgebra {
    let br: Vec<_> = brackets.iter().map(|&(i, j, k, s)| (i, j, k, int(s))).collect();
    let om: Vec<_> = omega.iter().map(|&(i, j)| (i, j, int(1))).collect();
    SymplecticLieAlgebra::new(
        LieAlgebra::from_brackets(dim, &br).expect("fixture brackets"),
        skew_form(dim, &om).expect("fixture form"),
    )
    .expect("fixture dims")
}

/// `ℝ⁴` with `α¹∧α² + α³∧α⁴`.
pub fn r4() -> SymplecticLieAlgebra {
    sla(4, &[], &[(0, 1), (2, 3)])
}

/// `𝔫₄`: `[a₄,a₁] = a₂`, `[a₄,a₂] = a₃`, with `α¹∧α² + α³∧α⁴`.
pub fn n4() -> SymplecticLieAlgebra {
    sla(4, &[(0, 3, 1, -1), (1, 3, 2, -1)], &[(0, 1), (2, 3)])
}

/// `𝔥₃ ⊕ ℝ`: `[a₁,a₂] = a₃`, with `α¹∧α⁴ + α²∧α³`.
pub fn h3r() -> SymplecticLieAlgebra {
    sla(4, &[(0, 1, 2, 1)], &[(0, 3), (1, 2)])
}

/// `ℝ²` with `α¹∧α²`.
pub fn r2() -> SymplecticLieAlgebra {
    sla(2, &[], &[(0, 1)])
}

pub fn dim4() -> Vec<Dim4File> {
    [("R4", r4()), ("n4", n4()), ("h3+R", h3r())]
        .into_iter()
        .map(|(id, a)| Dim4File { id: id.into(), algebra: AlgebraFile::from_algebra(&a) })
        .collect()
}

type Entry3 = (usize, usize, usize, Scalar);

/// Builds a triple from sparse entries (epsilon entries need `i < j`).
pub fn triple(m: usize, a: SymplecticLieAlgebra, gamma: &[Entry3], eps: &[Entry3], xi: &[Entry3]) -> CocycleTriple {
    let mut t = CocycleTriple::zero(m, a).expect("fixture form");
    for (i, j, k, s) in gamma {
        let v = t.gamma(*i, *j, *k) + s;
        t.set_gamma(*i, *j, *k, v);
    }
    for (i, j, k, s) in eps {
        let v = t.epsilon(*i, *j, *k) + s;
        t.set_epsilon(*i, *j, *k, v);
    }
    for (i, j, k, s) in xi {
        let v = t.xi(*i, *j, *k) + s;
        t.set_xi(*i, *j, *k, v);
    }
    t
}

fn e(i: usize, j: usize, k: usize, s: Scalar) -> Entry3 {
    (i, j, k, s)
}

struct Builder {
    out: Vec<EntryFile>,
}

impl Builder {
    fn push(
        &mut self,
        id: String,
        family: Family,
        params: &[(&str, Scalar)],
        formula: &str,
        t: &CocycleTriple,
        invariants: &[(&str, Scalar)],
    ) {
        let conv = |v: &[(&str, Scalar)]| -> BTreeMap<String, ScalarRepr> {
            v.iter().map(|(k, s)| (k.to_string(), s.into())).collect()
        };
        self.out.push(EntryFile {
            id,
            family,
            parameters: conv(params),
            formula: Some(formula.into()),
            cocycle: CocycleFile::from_triple(t),
            expected: Expected {
                balanced: true,
                nilpotent: true,
                model_dim: 2 * t.l_dim() + t.a_dim(),
                invariants: conv(invariants),
            },
        });
    }
}

/// The `M_ε` matrices of the `𝔩 = ℝ³, 𝔞 = 0` family.
/// Entry id, named parameters, ε matrix.
pub type R3Entry = (String, Vec<(&'static str, Scalar)>, Matrix);

pub fn r3_matrices() -> Vec<R3Entry> {
    let mut out = Vec::new();
    for (tag, b) in [("0", frac(0, 1)), ("1/2", frac(1, 2)), ("1", frac(1, 1))] {
        let m = Matrix::diag(&[int(1), b.clone(), -(int(1) + &b)]);
        out.push((format!("diag-b={tag}"), vec![("b", b)], m));
    }
    out.push(("jordan".into(), vec![], Matrix::from_ints(3, 3, &[1, 1, 0, 0, 1, 0, 0, 0, -2])));
    for z in [1, 2] {
        let m = Matrix::from_ints(3, 3, &[1, z, 0, -z, 1, 0, 0, 0, -2]);
        out.push((format!("rot-z={z}"), vec![("z", int(z))], m));
    }
    out.push(("rotation".into(), vec![], Matrix::from_ints(3, 3, &[0, 1, 0, -1, 0, 0, 0, 0, 0])));
    out.push(("nilpotent".into(), vec![], Matrix::from_ints(3, 3, &[0, 1, 0, 0, 0, 1, 0, 0, 0])));
    out
}

fn r3_zero(b: &mut Builder) {
    for (tag, params, m) in r3_matrices() {
        let mut t = CocycleTriple::zero(3, SymplecticLieAlgebra::zero()).expect("empty a");
        set_eps_from_matrix(&mut t, &m).expect("3x3");
        b.push(format!("R3-zero/{tag}"), Family::R3Zero, &params, "gamma=0, xi=0, eps from M_eps", &t, &[]);
    }
}

/// `ξ` on `ℝ⁴` for the `(ℝ, ℝ⁴)` family; `xi(0, p, q)` means `ξ(e₁)a_p ∋ a_q`.
pub fn rr4_xi(kind: &str, kappa: &Scalar) -> Vec<Entry3> {
    match kind {
        "xi1" => vec![e(0, 1, 0, int(1))],
        "xi+" => vec![e(0, 2, 0, int(1)), e(0, 1, 2, int(1))],
        "xi-" => vec![e(0, 2, 0, int(1)), e(0, 1, 2, int(-1))],
        _ => vec![
            e(0, 3, 0, int(1)),
            e(0, 1, 2, int(1)),
            e(0, 2, 3, int(1)),
            e(0, 2, 0, kappa.clone()),
        ],
    }
}

pub fn rr4(kind: &str, kappa: &Scalar) -> CocycleTriple {
    triple(1, r4(), &[e(0, 0, 0, int(1))], &[], &rr4_xi(kind, kappa))
}

fn r_r4(b: &mut Builder) {
    let z = int(0);
    b.push("R-R4/xi1".into(), Family::RR4, &[], "(gamma0, 0, xi_1)", &rr4("xi1", &z), &[("sign_xi2", int(0))]);
    b.push("R-R4/xi+".into(), Family::RR4, &[], "(gamma0, 0, xi_+)", &rr4("xi+", &z), &[("sign_xi2", int(1))]);
    b.push("R-R4/xi-".into(), Family::RR4, &[], "(gamma0, 0, xi_-)", &rr4("xi-", &z), &[("sign_xi2", int(-1))]);
    for k in [-1i64, 0, 1, 2] {
        let kappa = int(k);
        let k7 = int(k.pow(7));
        b.push(
            format!("R-R4/xi^kappa={k}"),
            Family::RR4,
            &[("kappa", kappa.clone())],
            "(gamma0, 0, xi^kappa), kappa real",
            &rr4("kappa", &kappa),
            &[("kappa7", k7)],
        );
    }
}

/// `ξ¹`: `a₁ ↦ a₄ ↦ a₃`.
pub fn xi_one() -> Vec<Entry3> {
    vec![e(0, 0, 3, int(1)), e(0, 3, 2, int(1))]
}

/// `ξ¹(l)`: `a₂ ↦ a₁ ↦ a₄ ↦ l·a₃`.
pub fn xi_one_l(l: &Scalar) -> Vec<Entry3> {
    vec![e(0, 0, 3, int(1)), e(0, 1, 0, int(1)), e(0, 3, 2, l.clone())]
}

/// `ξ^{1,n}`: `a₁ ↦ a₂ ↦ n·a₄`.
pub fn xi_one_n(n: &Scalar) -> Vec<Entry3> {
    vec![e(0, 0, 1, int(1)), e(0, 1, 3, n.clone())]
}

/// `γ = σ¹ ⊗ (Σ c_p α^p) ⊗ σ¹` on a one-dimensional `𝔩`.
pub fn gamma_line(coeffs: &[(usize, Scalar)]) -> Vec<Entry3> {
    coeffs.iter().map(|(p, c)| e(0, *p, 0, c.clone())).collect()
}

fn r_h3r(b: &mut Builder) {
    let t = triple(1, h3r(), &gamma_line(&[(2, int(1))]), &[], &xi_one());
    b.push("R-h3R/xi1".into(), Family::RH3R, &[], "(s1 x a3 x s1, 0, xi^1)", &t, &[]);
    for l in [int(-2), frac(1, 2), int(3)] {
        let g = gamma_line(&[(2, &l + int(1))]);
        let t = triple(1, h3r(), &g, &[], &xi_one_l(&l));
        b.push(
            format!("R-h3R/xi1(l={l})"),
            Family::RH3R,
            &[("l", l.clone())],
            "(s1 x (l+1)a3 x s1, 0, xi^1(l)), l not in {0,-1}",
            &t,
            &[("l", l.clone())],
        );
    }
    for y1 in [-1i64, 1, 2] {
        let g = gamma_line(&[(0, int(y1)), (2, int(1))]);
        let t = triple(1, h3r(), &g, &[], &xi_one_l(&int(0)));
        b.push(
            format!("R-h3R/xi1(0),y1={y1}"),
            Family::RH3R,
            &[("y1", int(y1))],
            "(s1 x (y1 a1 + a3) x s1, 0, xi^1(0)), y1 real",
            &t,
            &[],
        );
    }
    for n in [1i64, -1] {
        for y2 in [1i64, 2] {
            for y4 in [-1i64, 1, 2] {
                let g = gamma_line(&[(1, int(y2)), (3, int(y4))]);
                let t = triple(1, h3r(), &g, &[], &xi_one_n(&int(n)));
                b.push(
                    format!("R-h3R/xi1n,n={n},y2={y2},y4={y4}"),
                    Family::RH3R,
                    &[("n", int(n)), ("y2", int(y2)), ("y4", int(y4))],
                    "(s1 x (y2 a2 + y4 a4) x s1, 0, xi^{1,n}), n = +-1, y2 >= 0, y4 != 0",
                    &t,
                    &[("sign_xi2", int(-n))],
                );
            }
        }
    }
    for y2 in [1i64, 2] {
        for s in [1i64, -1] {
            let g = gamma_line(&[(1, int(y2)), (3, int(s))]);
            let t = triple(1, h3r(), &g, &[], &xi_one_n(&int(0)));
            b.push(
                format!("R-h3R/xi10,y2={y2},s={s}"),
                Family::RH3R,
                &[("y2", int(y2)), ("s", int(s))],
                "(s1 x (y2 a2 +- a4) x s1, 0, xi^{1,0}), y2 >= 0",
                &t,
                &[("sign_xi2", int(0))],
            );
        }
    }
}

/// `σ^i ⊗ α^p ⊗ σ^k` with 1-based labels as written in the classification.
fn g(i: usize, p: usize, k: usize, s: Scalar) -> Entry3 {
    e(i - 1, p - 1, k - 1, s)
}

fn gamma_1xy(x: &Scalar, y: &Scalar) -> Vec<Entry3> {
    vec![g(1, 1, 2, int(1)), g(2, 2, 1, x.clone()), g(2, 2, 2, y.clone())]
}

fn gamma_up1_xy(x: &Scalar, y: &Scalar) -> Vec<Entry3> {
    vec![g(1, 1, 1, int(1)), g(2, 2, 1, x.clone()), g(2, 2, 2, y.clone())]
}

fn gamma_a(k: &Scalar) -> Vec<Entry3> {
    vec![g(1, 2, 2, k.clone()), g(2, 2, 1, -k.clone())]
}

fn gamma_up1_t(t: &Scalar) -> Vec<Entry3> {
    let mut v = vec![
        g(1, 1, 1, int(1)),
        g(2, 1, 2, int(1)),
        g(1, 2, 1, t.clone()),
        g(2, 2, 2, -t.clone()),
    ];
    v.extend(gamma_a(&int(1)));
    v
}

fn gamma_up0_t(t: &Scalar) -> Vec<Entry3> {
    let mut v = vec![g(1, 1, 1, int(1)), g(1, 2, 2, t.clone()), g(2, 2, 1, t.clone())];
    v.extend(gamma_a(&int(1)));
    v
}

fn gamma_up0_pm(s: i64) -> Vec<Entry3> {
    let mut v = vec![g(1, 1, 1, int(1)), g(2, 2, 2, int(s))];
    v.extend(gamma_a(&int(1)));
    v
}

fn gamma_m1() -> Vec<Entry3> {
    vec![g(1, 1, 1, int(1)), g(2, 1, 2, int(-1))]
}

fn gamma_s1() -> Vec<Entry3> {
    vec![g(1, 2, 1, int(1)), g(2, 2, 2, int(1))]
}

fn gamma_s2() -> Vec<Entry3> {
    vec![g(1, 2, 2, int(1)), g(2, 2, 1, int(1))]
}

/// `ξ⁰ = σ¹ ⊗ α² ⊗ a₁`.
pub fn xi_zero() -> Vec<Entry3> {
    vec![e(0, 1, 0, int(1))]
}

fn eps12_2(t: &Scalar) -> Vec<Entry3> {
    vec![e(0, 1, 1, t.clone())]
}

fn r2_r2(b: &mut Builder) {
    let fam = Family::R2R2;
    let add = |b: &mut Builder, id: String, params: &[(&str, Scalar)], formula: &str, gm: Vec<Entry3>, ep: Vec<Entry3>, xi: Vec<Entry3>| {
        let t = triple(2, r2(), &gm, &ep, &xi);
        b.push(format!("R2-R2/{id}"), fam, params, formula, &t, &[]);
    };
    for t in [-1i64, 0, 1] {
        add(b, format!("g1,t,1;t={t}"), &[("t", int(t))], "(gamma_{1,t,1}, 0, xi^0), t real",
            gamma_1xy(&int(t), &int(1)), vec![], xi_zero());
    }
    for s in [1i64, -1] {
        add(b, format!("g1,{s},0"), &[("s", int(s))], "(gamma_{1,+-1,0}, 0, xi^0)",
            gamma_1xy(&int(s), &int(0)), vec![], xi_zero());
    }
    add(b, "g1,0,0".into(), &[], "(gamma_{1,0,0}, 0, xi^0)", gamma_1xy(&int(0), &int(0)), vec![], xi_zero());
    for s in [1i64, -1] {
        add(b, format!("g^1_0,{s}"), &[("s", int(s))], "(gamma^1_{0,+-1}, 0, xi^0)",
            gamma_up1_xy(&int(0), &int(s)), vec![], xi_zero());
    }
    for t in [-1i64, 0, 1] {
        add(b, format!("g^1_1,0;eps={t}"), &[("t", int(t))], "(gamma^1_{1,0}, t s1^s2 x s2, xi^0), t real",
            gamma_up1_xy(&int(1), &int(0)), eps12_2(&int(t)), xi_zero());
    }
    for s in [1i64, -1] {
        add(b, format!("g^1_0,0;eps={s}"), &[("s", int(s))], "(gamma^1_{0,0}, +- s1^s2 x s2, xi^0)",
            gamma_up1_xy(&int(0), &int(0)), eps12_2(&int(s)), xi_zero());
    }
    for t in [0i64, 1] {
        add(b, format!("g^1_t;t={t}"), &[("t1", int(t))], "(gamma^1_{t1}, 0, 0), t1 >= 0",
            gamma_up1_t(&int(t)), vec![], vec![]);
    }
    for t in [-1i64, 0, 1] {
        add(b, format!("g^0_t;t={t}"), &[("t", int(t))], "(gamma^0_t, 0, 0), t real",
            gamma_up0_t(&int(t)), vec![], vec![]);
    }
    add(b, "g^0_-3;eps".into(), &[], "(gamma^0_{-3}, s1^s2 x s2, 0)", gamma_up0_t(&int(-3)), eps12_2(&int(1)), vec![]);
    for s in [1i64, -1] {
        add(b, format!("g^0_{s}"), &[("s", int(s))], "(gamma^0_+-, 0, 0)", gamma_up0_pm(s), vec![], vec![]);
    }
    let cat = |parts: Vec<Vec<Entry3>>| parts.concat();
    add(b, "g^-1+ga".into(), &[], "(gamma^-1 + gamma_a, 0, 0)", cat(vec![gamma_m1(), gamma_a(&int(1))]), vec![], vec![]);
    for k in [1i64, 2] {
        add(b, format!("g^-1+gs1+ga;k={k}"), &[("kappa", int(k))], "(gamma^-1 + gamma_s1 + kappa gamma_a, 0, 0), kappa > 0",
            cat(vec![gamma_m1(), gamma_s1(), gamma_a(&int(k))]), vec![], vec![]);
        add(b, format!("g^-1+gs2+ga;k={k}"), &[("kappa", int(k))], "(gamma^-1 + gamma_s2 + kappa gamma_a, 0, 0), kappa > 0",
            cat(vec![gamma_m1(), gamma_s2(), gamma_a(&int(k))]), vec![], vec![]);
    }
    for s in [1i64, -1] {
        add(b, format!("g^-1+gs1+gs2+ga;s={s}"), &[("s", int(s))], "(gamma^-1 + gamma_s1 + gamma_s2 +- gamma_a, 0, 0)",
            cat(vec![gamma_m1(), gamma_s1(), gamma_s2(), gamma_a(&int(s))]), vec![], vec![]);
    }
}

/// All sampled dimension-6 entries, in a fixed order.
pub fn dim6() -> Vec<EntryFile> {
    let mut b = Builder { out: Vec::new() };
    r3_zero(&mut b);
    r_r4(&mut b);
    r_h3r(&mut b);
    r2_r2(&mut b);
    b.out
}
