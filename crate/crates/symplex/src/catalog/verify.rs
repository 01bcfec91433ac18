use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use super::format::{EntryFile, Family};
use crate::error::{Error, Result};
use crate::exactlin::Scalar;
use crate::group_action::{
    are_equivalent, eps_orbit_key, invariant_kappa7, invariant_l, invariant_sign_xi2, xi_nil_index,
    Verdict,
};
use crate::lie::{is_nilpotent, validate_lie};
use crate::quad_ext::{
    build_standard_model, eps_matrix, is_balanced, is_cocycle, is_nilpotent_cocycle, CocycleTriple,
};
use crate::symplectic::validate_symplectic;

/// Computes a named scalar invariant.
pub fn compute_invariant(name: &str, t: &CocycleTriple) -> Result<Scalar> {
    match name {
        "sign_xi2" => Ok(Scalar::from_integer(invariant_sign_xi2(t)?.into())),
        "kappa7" => invariant_kappa7(t),
        "l" => invariant_l(t),
        "xi_nil_index" => Ok(Scalar::from_integer((xi_nil_index(t)? as i64).into())),
        _ => Err(Error::Precondition(format!("unknown invariant {name:?}"))),
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct EntryReport {
    pub id: String,
    pub family: &'static str,
    pub cocycle_ok: bool,
    pub violated: Vec<u8>,
    pub balanced: bool,
    pub nilpotent: bool,
    pub model_lie: bool,
    pub model_symplectic: bool,
    pub model_nilpotent: bool,
    pub model_dim: usize,
    pub invariant_mismatches: Vec<String>,
    pub problems: Vec<String>,
}

impl EntryReport {
    pub fn ok(&self) -> bool {
        self.problems.is_empty()
    }
}

/// Outcome for one unordered pair inside a family.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum PairStatus {
    /// Computed invariants differ.
    Separated,
    /// Invariants agree and the two cocycles are certified equivalent (or equal).
    Unseparated,
    /// Invariants agree; distinctness rests on the classification proof only.
    AssertedByClassification,
}

#[derive(Clone, Debug, Serialize)]
pub struct PairCheck {
    pub first: String,
    pub second: String,
    pub status: PairStatus,
}

#[derive(Clone, Debug, Serialize)]
pub struct CatalogReport {
    pub entries: Vec<EntryReport>,
    pub pairs: Vec<PairCheck>,
}

impl CatalogReport {
    pub fn failed_entries(&self) -> usize {
        self.entries.iter().filter(|e| !e.ok()).count()
    }

    pub fn unseparated(&self) -> Vec<&PairCheck> {
        self.pairs.iter().filter(|p| p.status == PairStatus::Unseparated).collect()
    }

    pub fn asserted(&self) -> Vec<&PairCheck> {
        self.pairs.iter().filter(|p| p.status == PairStatus::AssertedByClassification).collect()
    }

    pub fn all_green(&self) -> bool {
        self.failed_entries() == 0 && self.unseparated().is_empty()
    }
}

pub fn verify_entry(e: &EntryFile) -> EntryReport {
    let mut rep = EntryReport {
        id: e.id.clone(),
        family: e.family.name(),
        cocycle_ok: false,
        violated: vec![],
        balanced: false,
        nilpotent: false,
        model_lie: false,
        model_symplectic: false,
        model_nilpotent: false,
        model_dim: 0,
        invariant_mismatches: vec![],
        problems: vec![],
    };
    let t = match e.cocycle.to_triple() {
        Ok(t) => t,
        Err(err) => {
            rep.problems.push(format!("cocycle does not load: {err}"));
            return rep;
        }
    };
    let cr = is_cocycle(&t);
    rep.cocycle_ok = cr.ok();
    rep.violated = cr.violated().into_iter().collect();
    rep.balanced = is_balanced(&t).ok();
    rep.nilpotent = is_nilpotent_cocycle(&t).ok();
    let model = build_standard_model(&t);
    rep.model_lie = validate_lie(&model.g).ok();
    rep.model_symplectic = validate_symplectic(&model).ok();
    rep.model_nilpotent = is_nilpotent(&model.g).0;
    rep.model_dim = model.dim();

    if !rep.cocycle_ok {
        rep.problems.push(format!("cocycle conditions violated: {:?}", rep.violated));
    }
    if rep.balanced != e.expected.balanced {
        rep.problems.push(format!("balanced = {}, expected {}", rep.balanced, e.expected.balanced));
    }
    if rep.nilpotent != e.expected.nilpotent {
        rep.problems.push(format!("nilpotent = {}, expected {}", rep.nilpotent, e.expected.nilpotent));
    }
    if !(rep.model_lie && rep.model_symplectic) {
        rep.problems.push("standard model is not a symplectic Lie algebra".into());
    }
    if rep.model_nilpotent != e.expected.nilpotent {
        rep.problems.push("model nilpotency differs from expectation".into());
    }
    if rep.model_dim != e.expected.model_dim {
        rep.problems.push(format!("model dim {} != {}", rep.model_dim, e.expected.model_dim));
    }
    for (name, want) in &e.expected.invariants {
        let msg = match (compute_invariant(name, &t), want.parse()) {
            (Ok(got), Ok(w)) if got == w => continue,
            (Ok(got), Ok(w)) => format!("{name}: got {got}, expected {w}"),
            (Err(err), _) | (_, Err(err)) => format!("{name}: {err}"),
        };
        rep.invariant_mismatches.push(msg.clone());
        rep.problems.push(msg);
    }
    rep
}

/// Everything the implemented invariants can say about an entry, as text.
fn signature(t: &CocycleTriple) -> Vec<Option<String>> {
    let mut sig: Vec<Option<String>> = ["sign_xi2", "kappa7", "l", "xi_nil_index"]
        .iter()
        .map(|n| compute_invariant(n, t).ok().map(|s| s.to_string()))
        .collect();
    let key = eps_matrix(t).ok().and_then(|m| eps_orbit_key(&m).ok());
    sig.push(key.map(|k| format!("{k:?}")));
    sig
}

fn pair_status(a: &CocycleTriple, b: &CocycleTriple, sa: &[Option<String>], sb: &[Option<String>]) -> PairStatus {
    if sa != sb {
        return PairStatus::Separated;
    }
    let same = a == b
        || (a.same_base(b) && matches!(are_equivalent(a, b), Ok(Verdict::Witness(_))));
    if same {
        PairStatus::Unseparated
    } else {
        PairStatus::AssertedByClassification
    }
}

/// Certifies every entry and runs the distinctness matrix inside each family.
/// `jobs = 0` uses rayon's default pool size.
pub fn verify_catalog(entries: &[EntryFile], jobs: usize) -> Result<CatalogReport> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Error::Precondition(format!("thread pool: {e}")))?;
    pool.install(|| {
        let reports: Vec<EntryReport> = entries.par_iter().map(verify_entry).collect();
        let triples: Vec<Option<CocycleTriple>> =
            entries.par_iter().map(|e| e.cocycle.to_triple().ok()).collect();
        let sigs: Vec<Option<Vec<Option<String>>>> =
            triples.par_iter().map(|t| t.as_ref().map(signature)).collect();
        let mut by_family: BTreeMap<Family, Vec<usize>> = BTreeMap::new();
        for (i, e) in entries.iter().enumerate() {
            by_family.entry(e.family).or_default().push(i);
        }
        let mut idx_pairs = Vec::new();
        for members in by_family.values() {
            for (x, &i) in members.iter().enumerate() {
                for &j in &members[x + 1..] {
                    idx_pairs.push((i, j));
                }
            }
        }
        let pairs = idx_pairs
            .par_iter()
            .filter_map(|&(i, j)| {
                let (ta, tb) = (triples[i].as_ref()?, triples[j].as_ref()?);
                let (sa, sb) = (sigs[i].as_ref()?, sigs[j].as_ref()?);
                Some(PairCheck {
                    first: entries[i].id.clone(),
                    second: entries[j].id.clone(),
                    status: pair_status(ta, tb, sa, sb),
                })
            })
            .collect();
        Ok(CatalogReport { entries: reports, pairs })
    })
}
