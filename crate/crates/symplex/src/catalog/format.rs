//! JSON shapes for algebras, cocycles, matrices and catalog entries.
//! Scalars are strings `"p/q"` or `"p"`; bare JSON integers are accepted too.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactlin::{parse_scalar, Matrix, Scalar};
use crate::group_action::TauShift;
use crate::lie::LieAlgebra;
use crate::quad_ext::CocycleTriple;
use crate::symplectic::{skew_form, SymplecticLieAlgebra};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ScalarRepr {
    Text(String),
    Int(i64),
}

impl ScalarRepr {
    pub fn parse(&self) -> Result<Scalar> {
        match self {
            ScalarRepr::Text(s) => parse_scalar(s).ok_or_else(|| bad(format!("bad scalar {s:?}"))),
            ScalarRepr::Int(n) => Ok(crate::exactlin::int(*n)),
        }
    }
}

impl From<&Scalar> for ScalarRepr {
    fn from(s: &Scalar) -> Self {
        ScalarRepr::Text(s.to_string())
    }
}

fn bad(msg: String) -> Error {
    Error::Parse { line: 0, msg }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    pub dim: usize,
    #[serde(default)]
    pub brackets: Vec<(usize, usize, usize, ScalarRepr)>,
    #[serde(default)]
    pub omega: Vec<(usize, usize, ScalarRepr)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CocycleFile {
    pub l_dim: usize,
    pub a: AlgebraFile,
    #[serde(default)]
    pub gamma: Vec<(usize, usize, usize, ScalarRepr)>,
    #[serde(default)]
    pub epsilon: Vec<(usize, usize, usize, ScalarRepr)>,
    #[serde(default)]
    pub xi: Vec<(usize, usize, usize, ScalarRepr)>,
}

/// Dense matrix as a list of rows.
pub type MatrixRows = Vec<Vec<ScalarRepr>>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TauFile {
    /// `dim 𝔞` rows, `dim 𝔩` columns.
    pub tau: MatrixRows,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sigma_bar: Option<MatrixRows>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PairFile {
    pub s: MatrixRows,
    pub u: MatrixRows,
    /// Source algebra `𝔞₁`; defaults to the cocycle's own `𝔞`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub a1: Option<AlgebraFile>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Expected {
    pub balanced: bool,
    pub nilpotent: bool,
    pub model_dim: usize,
    #[serde(default)]
    pub invariants: BTreeMap<String, ScalarRepr>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EntryFile {
    pub id: String,
    pub family: Family,
    #[serde(default)]
    pub parameters: BTreeMap<String, ScalarRepr>,
    /// The family's generic description, kept as text only.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub formula: Option<String>,
    pub cocycle: CocycleFile,
    pub expected: Expected,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Dim4File {
    pub id: String,
    pub algebra: AlgebraFile,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Family {
    #[serde(rename = "R3-zero")]
    R3Zero,
    #[serde(rename = "R-R4")]
    RR4,
    #[serde(rename = "R-h3R")]
    RH3R,
    #[serde(rename = "R2-R2")]
    R2R2,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::R3Zero => "R3-zero",
            Family::RR4 => "R-R4",
            Family::RH3R => "R-h3R",
            Family::R2R2 => "R2-R2",
        }
    }
}

fn no_dups<K: Ord + Clone + std::fmt::Debug>(what: &str, keys: impl Iterator<Item = K>) -> Result<()> {
    let mut seen = BTreeSet::new();
    for k in keys {
        if !seen.insert(k.clone()) {
            return Err(bad(format!("duplicate {what} index {k:?}")));
        }
    }
    Ok(())
}

fn check_index(what: &str, idx: usize, bound: usize) -> Result<()> {
    if idx >= bound {
        return Err(bad(format!("{what} index {idx} out of range (< {bound})")));
    }
    Ok(())
}

impl AlgebraFile {
    pub fn to_algebra(&self) -> Result<SymplecticLieAlgebra> {
        let n = self.dim;
        no_dups("bracket", self.brackets.iter().map(|b| (b.0, b.1, b.2)))?;
        no_dups("omega", self.omega.iter().map(|w| (w.0, w.1)))?;
        let mut br = Vec::new();
        for (i, j, k, s) in &self.brackets {
            for x in [i, j, k] {
                check_index("bracket", *x, n)?;
            }
            if i >= j {
                return Err(bad(format!("bracket entry ({i},{j}) needs i < j")));
            }
            br.push((*i, *j, *k, s.parse()?));
        }
        let mut om = Vec::new();
        for (i, j, s) in &self.omega {
            check_index("omega", *j, n)?;
            if i >= j {
                return Err(bad(format!("omega entry ({i},{j}) needs i < j")));
            }
            om.push((*i, *j, s.parse()?));
        }
        SymplecticLieAlgebra::new(LieAlgebra::from_brackets(n, &br)?, skew_form(n, &om)?)
    }

    pub fn from_algebra(a: &SymplecticLieAlgebra) -> Self {
        let n = a.dim();
        let mut omega = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let w = &a.omega[(i, j)];
                if !num_traits::Zero::is_zero(w) {
                    omega.push((i, j, w.into()));
                }
            }
        }
        AlgebraFile {
            dim: n,
            brackets: a.g.entries().iter().map(|(i, j, k, s)| (*i, *j, *k, s.into())).collect(),
            omega,
        }
    }
}

impl CocycleFile {
    pub fn to_triple(&self) -> Result<CocycleTriple> {
        let a = self.a.to_algebra()?;
        let (m, n) = (self.l_dim, a.dim());
        let mut t = CocycleTriple::zero(m, a)?;
        no_dups("gamma", self.gamma.iter().map(|e| (e.0, e.1, e.2)))?;
        no_dups("epsilon", self.epsilon.iter().map(|e| (e.0, e.1, e.2)))?;
        no_dups("xi", self.xi.iter().map(|e| (e.0, e.1, e.2)))?;
        for (i, p, k, s) in &self.gamma {
            check_index("gamma", *i, m)?;
            check_index("gamma", *p, n)?;
            check_index("gamma", *k, m)?;
            t.set_gamma(*i, *p, *k, s.parse()?);
        }
        for (i, j, k, s) in &self.epsilon {
            check_index("epsilon", *j, m)?;
            check_index("epsilon", *k, m)?;
            if i >= j {
                return Err(bad(format!("epsilon entry ({i},{j}) needs i < j")));
            }
            t.set_epsilon(*i, *j, *k, s.parse()?);
        }
        for (i, p, q, s) in &self.xi {
            check_index("xi", *i, m)?;
            check_index("xi", *p, n)?;
            check_index("xi", *q, n)?;
            t.set_xi(*i, *p, *q, s.parse()?);
        }
        Ok(t)
    }

    pub fn from_triple(t: &CocycleTriple) -> Self {
        let conv = |v: Vec<(usize, usize, usize, Scalar)>| {
            v.iter().map(|(i, j, k, s)| (*i, *j, *k, s.into())).collect()
        };
        CocycleFile {
            l_dim: t.l_dim(),
            a: AlgebraFile::from_algebra(t.a()),
            gamma: conv(t.gamma_entries()),
            epsilon: conv(t.epsilon_entries()),
            xi: conv(t.xi_entries()),
        }
    }
}

pub fn matrix_from_rows(rows: &MatrixRows, shape: (usize, usize)) -> Result<Matrix> {
    if rows.len() != shape.0 || rows.iter().any(|r| r.len() != shape.1) {
        return Err(bad(format!("expected a {}x{} matrix", shape.0, shape.1)));
    }
    let mut out = Matrix::zeros(shape.0, shape.1);
    for (i, r) in rows.iter().enumerate() {
        for (j, s) in r.iter().enumerate() {
            out[(i, j)] = s.parse()?;
        }
    }
    Ok(out)
}

pub fn matrix_to_rows(m: &Matrix) -> MatrixRows {
    m.row_vecs().iter().map(|r| r.iter().map(ScalarRepr::from).collect()).collect()
}

impl TauFile {
    pub fn to_shift(&self, t: &CocycleTriple) -> Result<TauShift> {
        let (m, n) = (t.l_dim(), t.a_dim());
        let tau = matrix_from_rows(&self.tau, (n, m))?;
        let sb = self.sigma_bar.as_ref().map(|r| matrix_from_rows(r, (m, m))).transpose()?;
        TauShift::new(tau, sb)
    }

    pub fn from_shift(s: &TauShift) -> Self {
        TauFile { tau: matrix_to_rows(s.tau()), sigma_bar: s.sigma_bar().map(matrix_to_rows) }
    }
}

/// Reads one JSON value from text, mapping serde errors to [`Error::Parse`].
pub fn parse_json<T: serde::de::DeserializeOwned>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Parse { line: e.line(), msg: e.to_string() })
}

/// One JSON value per non-blank line.
pub fn parse_lines<T: serde::de::DeserializeOwned>(text: &str) -> Result<Vec<T>> {
    let mut out = Vec::new();
    for (no, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        out.push(serde_json::from_str(line).map_err(|e| Error::Parse {
            line: no + 1,
            msg: e.to_string(),
        })?);
    }
    Ok(out)
}

pub fn read_file(path: &std::path::Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}
