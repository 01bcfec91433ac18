//! Command-line front end. [`run`] is the whole program; the binary only forwards argv.
//!
//! Exit codes: 0 success, 1 a check failed, 2 usage, file or parse error.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

use crate::catalog::{
    self, matrix_to_rows, parse_json, read_file, AlgebraFile, CocycleFile, PairFile, PairStatus,
    TauFile,
};
use crate::error::{Error, Result};
use crate::exactlin::Matrix;
use crate::group_action::{
    act_tau, are_equivalent, eps_orbit_key, equivalence_iso, invariant_kappa7, invariant_l,
    invariant_sign_xi2, pullback, xi_nil_index, PairIso, Verdict,
};
use crate::quad_ext::{
    build_standard_model, eps_matrix, is_balanced, is_cocycle, is_nilpotent_cocycle,
};
use crate::symplectic::{check_symplectic_iso, reduce, validate_symplectic, SymplecticLieAlgebra};
use crate::CocycleTriple;

#[derive(Parser, Debug)]
#[command(name = "symplex", version, about = "Exact tools for symplectic Lie algebras with degenerate center")]
struct Cli {
    /// Machine-readable output on stdout.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Check the Lie and symplectic axioms of an algebra file.
    Validate { algebra: PathBuf },
    /// Reduce along the canonical isotropic ideal.
    Reduce {
        algebra: PathBuf,
        /// Where to write the reduced algebra.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Predicates on a cocycle triple.
    #[command(subcommand)]
    Cocycle(CocycleCmd),
    /// Standard model construction.
    #[command(subcommand)]
    Model(ModelCmd),
    /// Group actions on cocycles.
    #[command(subcommand)]
    Act(ActCmd),
    /// Pull a cocycle back along a pair (S, U).
    Pullback {
        cocycle: PathBuf,
        #[arg(long)]
        pair: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Orbit invariants that apply to the cocycle.
    Invariants { cocycle: PathBuf },
    /// Look for a shift carrying the first cocycle to the second.
    Equiv { first: PathBuf, second: PathBuf },
    /// Bundled or user catalogs.
    #[command(subcommand)]
    Catalog(CatalogCmd),
}

#[derive(Subcommand, Debug)]
enum CocycleCmd {
    /// Cocycle, balanced and nilpotency verdicts.
    Check { cocycle: PathBuf },
}

#[derive(Subcommand, Debug)]
enum ModelCmd {
    /// Write the standard model of a cocycle as an algebra file.
    Build {
        cocycle: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
    },
}

#[derive(Subcommand, Debug)]
enum ActCmd {
    /// Shift a cocycle by tau and certify the isomorphism of models.
    Tau {
        cocycle: PathBuf,
        #[arg(long)]
        tau: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Where to write the certifying matrix.
        #[arg(long)]
        phi_out: Option<PathBuf>,
    },
}

#[derive(Subcommand, Debug)]
enum CatalogCmd {
    /// Certify every entry of a catalog file.
    Verify {
        catalog: PathBuf,
        /// Worker threads; 0 picks the default.
        #[arg(long, default_value_t = 0)]
        jobs: usize,
    },
}

/// What a verb produced: a human-readable text, the JSON form, and a pass flag.
struct Outcome {
    text: String,
    json: Value,
    ok: bool,
}

/// Runs one invocation and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = write!(out, "{}", e.render());
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match dispatch(&cli.cmd) {
        Ok(o) => {
            let _ = if cli.json {
                writeln!(out, "{}", serde_json::to_string_pretty(&o.json).expect("json"))
            } else {
                write!(out, "{}", o.text)
            };
            if o.ok {
                0
            } else {
                1
            }
        }
        Err(e) => {
            let code = match e {
                Error::Parse { .. } | Error::Io(_) | Error::DimensionMismatch { .. } => 2,
                _ => 1,
            };
            let _ = if cli.json {
                writeln!(out, "{}", json!({ "error": e.to_string(), "exit": code }))
            } else {
                writeln!(out, "error: {e}")
            };
            code
        }
    }
}

fn load_algebra(p: &Path) -> Result<SymplecticLieAlgebra> {
    parse_json::<AlgebraFile>(&read_file(p)?)?.to_algebra().map_err(as_parse)
}

fn load_cocycle(p: &Path) -> Result<CocycleTriple> {
    parse_json::<CocycleFile>(&read_file(p)?)?.to_triple().map_err(as_parse)
}

/// Errors raised while turning a parsed file into algebra are input errors.
fn as_parse(e: Error) -> Error {
    match e {
        Error::Parse { .. } => e,
        other => Error::Parse { line: 0, msg: other.to_string() },
    }
}

fn write_json<T: Serialize>(p: &Path, v: &T) -> Result<()> {
    let text = serde_json::to_string_pretty(v).expect("json") + "\n";
    std::fs::write(p, text).map_err(|e| Error::Io(format!("{}: {e}", p.display())))
}

fn rows_text(m: &Matrix) -> String {
    m.row_vecs()
        .iter()
        .map(|r| {
            let cells: Vec<String> = r.iter().map(|s| format!("{s:>5}")).collect();
            format!("  [{}]\n", cells.join(" "))
        })
        .collect()
}

fn dispatch(cmd: &Cmd) -> Result<Outcome> {
    match cmd {
        Cmd::Validate { algebra } => validate(&load_algebra(algebra)?),
        Cmd::Reduce { algebra, output } => reduce_cmd(&load_algebra(algebra)?, output.as_deref()),
        Cmd::Cocycle(CocycleCmd::Check { cocycle }) => check(&load_cocycle(cocycle)?),
        Cmd::Model(ModelCmd::Build { cocycle, output }) => {
            let t = load_cocycle(cocycle)?;
            let model = build_standard_model(&t);
            write_json(output, &AlgebraFile::from_algebra(&model))?;
            let ok = validate_symplectic(&model).ok();
            Ok(Outcome {
                text: format!(
                    "wrote model of dimension {} to {} ({})\n",
                    model.dim(),
                    output.display(),
                    if ok { "valid" } else { "NOT a symplectic Lie algebra" }
                ),
                json: json!({ "dim": model.dim(), "valid": ok, "output": output }),
                ok,
            })
        }
        Cmd::Act(ActCmd::Tau { cocycle, tau, output, phi_out }) => {
            let t = load_cocycle(cocycle)?;
            let s = parse_json::<TauFile>(&read_file(tau)?)?.to_shift(&t).map_err(as_parse)?;
            let shifted = act_tau(&t, &s)?;
            let phi = equivalence_iso(&t, &s)?;
            let certified =
                check_symplectic_iso(&build_standard_model(&t), &build_standard_model(&shifted), &phi)?;
            let file = CocycleFile::from_triple(&shifted);
            if let Some(o) = output {
                write_json(o, &file)?;
            }
            if let Some(o) = phi_out {
                write_json(o, &matrix_to_rows(&phi))?;
            }
            Ok(Outcome {
                text: format!(
                    "shifted cocycle: {}\nphi ({}):\n{}",
                    serde_json::to_string(&file).expect("json"),
                    if certified { "certified" } else { "NOT certified" },
                    rows_text(&phi)
                ),
                json: json!({ "cocycle": file, "phi": matrix_to_rows(&phi), "certified": certified }),
                ok: certified,
            })
        }
        Cmd::Pullback { cocycle, pair, output } => {
            let t = load_cocycle(cocycle)?;
            let pf: PairFile = parse_json(&read_file(pair)?)?;
            let (m, n) = (t.l_dim(), t.a_dim());
            let a1 = match &pf.a1 {
                Some(a) => a.to_algebra().map_err(as_parse)?,
                None => t.a().clone(),
            };
            let s = catalog::format::matrix_from_rows(&pf.s, (m, m))?;
            let u = catalog::format::matrix_from_rows(&pf.u, (a1.dim(), n))?;
            let p = PairIso::new(s, u, a1, t.a().clone())?;
            let pulled = pullback(&t, &p)?;
            let file = CocycleFile::from_triple(&pulled);
            if let Some(o) = output {
                write_json(o, &file)?;
            }
            Ok(Outcome {
                text: format!("pulled-back cocycle: {}\n", serde_json::to_string(&file).expect("json")),
                json: json!({ "cocycle": file }),
                ok: true,
            })
        }
        Cmd::Invariants { cocycle } => invariants(&load_cocycle(cocycle)?),
        Cmd::Equiv { first, second } => {
            let (t1, t2) = (load_cocycle(first)?, load_cocycle(second)?);
            let v = are_equivalent(&t1, &t2).map_err(as_parse)?;
            Ok(match v {
                Verdict::Witness(s) => Outcome {
                    text: format!("equivalent; witness tau:\n{}", rows_text(s.tau())),
                    json: json!({ "verdict": "witness", "tau": matrix_to_rows(s.tau()) }),
                    ok: true,
                },
                Verdict::NotEquivalent => Outcome {
                    text: "not equivalent\n".into(),
                    json: json!({ "verdict": "not-equivalent" }),
                    ok: false,
                },
                Verdict::Unknown => Outcome {
                    text: "unknown (no witness found, none ruled out)\n".into(),
                    json: json!({ "verdict": "unknown" }),
                    ok: false,
                },
            })
        }
        Cmd::Catalog(CatalogCmd::Verify { catalog: path, jobs }) => {
            let entries = catalog::load(path)?;
            let rep = catalog::verify_catalog(&entries, *jobs)?;
            let mut text = String::new();
            for e in rep.entries.iter().filter(|e| !e.ok()) {
                text += &format!("FAIL {}: {}\n", e.id, e.problems.join("; "));
            }
            for p in rep.unseparated() {
                text += &format!("UNSEPARATED {} ~ {}\n", p.first, p.second);
            }
            let count = |s: PairStatus| rep.pairs.iter().filter(|p| p.status == s).count();
            text += &format!(
                "{} entries: {} ok, {} failed\npairs: {} separated, {} unseparated, {} asserted by the classification only\n",
                rep.entries.len(),
                rep.entries.len() - rep.failed_entries(),
                rep.failed_entries(),
                count(PairStatus::Separated),
                count(PairStatus::Unseparated),
                count(PairStatus::AssertedByClassification)
            );
            Ok(Outcome { text, ok: rep.all_green(), json: serde_json::to_value(&rep).expect("json") })
        }
    }
}

fn validate(s: &SymplecticLieAlgebra) -> Result<Outcome> {
    let rep = validate_symplectic(s);
    let mut text = format!("dim {}\n", s.dim());
    let yes = |b: bool| if b { "yes" } else { "NO" };
    text += &format!("antisymmetric brackets: {}\n", yes(rep.lie.antisymmetry_failures.is_empty()));
    for ((i, j, k), v) in &rep.lie.jacobi_failures {
        let v: Vec<String> = v.iter().map(|x| x.to_string()).collect();
        text += &format!("jacobi fails on (a{}, a{}, a{}): [{}]\n", i + 1, j + 1, k + 1, v.join(", "));
    }
    text += &format!("omega skew: {}\nomega non-degenerate: {}\n", yes(rep.skew), yes(rep.nondegenerate));
    for ((i, j, k), v) in &rep.closedness_failures {
        text += &format!("d omega(a{}, a{}, a{}) = {v}\n", i + 1, j + 1, k + 1);
    }
    text += &format!("symplectic Lie algebra: {}\n", yes(rep.ok()));
    let json = json!({
        "ok": rep.ok(),
        "jacobi_failures": rep.lie.jacobi_failures.iter().map(|(t, v)| json!({
            "triple": [t.0, t.1, t.2], "defect": v.iter().map(|x| x.to_string()).collect::<Vec<_>>()
        })).collect::<Vec<_>>(),
        "antisymmetry_failures": rep.lie.antisymmetry_failures,
        "skew": rep.skew,
        "nondegenerate": rep.nondegenerate,
        "closedness_failures": rep.closedness_failures.iter().map(|(t, v)| json!({
            "triple": [t.0, t.1, t.2], "value": v.to_string()
        })).collect::<Vec<_>>(),
    });
    Ok(Outcome { text, json, ok: rep.ok() })
}

fn reduce_cmd(s: &SymplecticLieAlgebra, output: Option<&Path>) -> Result<Outcome> {
    if !validate_symplectic(s).ok() {
        return Err(Error::Precondition("input is not a symplectic Lie algebra".into()));
    }
    let r = reduce(s)?;
    let basis: Vec<Vec<String>> =
        r.j.basis().iter().map(|v| v.iter().map(|x| x.to_string()).collect()).collect();
    let a_file = AlgebraFile::from_algebra(&r.a);
    if let Some(o) = output {
        write_json(o, &a_file)?;
    }
    let mut text = format!("j = z ∩ z^⊥ has dim {}\n", r.j.dim());
    for b in &basis {
        text += &format!("  [{}]\n", b.join(", "));
    }
    text += &format!("a = j^⊥/j has dim {}\nl = g/j^⊥ has dim {}\n", r.a.dim(), r.l_dim);
    Ok(Outcome {
        text,
        json: json!({ "j": basis, "a": a_file, "l_dim": r.l_dim }),
        ok: true,
    })
}

fn check(t: &CocycleTriple) -> Result<Outcome> {
    let c = is_cocycle(t);
    let b = is_balanced(t);
    let n = is_nilpotent_cocycle(t);
    let yes = |b: bool| if b { "yes" } else { "no" };
    let mut text = format!("cocycle: {}\n", yes(c.ok()));
    for f in &c.failures {
        text += &format!("  condition {} fails: {}\n", f.condition, f.witness);
    }
    text += &format!(
        "balanced: {} (a: {}, b: {}, joint kernel dim {})\nnilpotent: {} (a: {}, xi: {})\n",
        yes(b.ok()),
        yes(b.cond_a),
        yes(b.cond_b),
        b.kernel_dim,
        yes(n.ok()),
        yes(n.a_nilpotent),
        yes(n.xi_nilpotent)
    );
    let json = json!({
        "cocycle": c.ok(),
        "violated": c.violated(),
        "witnesses": c.failures.iter().map(|f| json!({"condition": f.condition, "witness": f.witness})).collect::<Vec<_>>(),
        "balanced": b.ok(),
        "balanced_a": b.cond_a,
        "balanced_b": b.cond_b,
        "nilpotent": n.ok(),
    });
    Ok(Outcome { text, json, ok: c.ok() })
}

fn invariants(t: &CocycleTriple) -> Result<Outcome> {
    let mut rows: Vec<(&str, std::result::Result<String, String>)> = vec![
        ("sign_xi2", invariant_sign_xi2(t).map(|s| s.to_string()).map_err(|e| e.to_string())),
        ("kappa7", invariant_kappa7(t).map(|s| s.to_string()).map_err(|e| e.to_string())),
        ("l", invariant_l(t).map(|s| s.to_string()).map_err(|e| e.to_string())),
        ("xi_nil_index", xi_nil_index(t).map(|s| s.to_string()).map_err(|e| e.to_string())),
    ];
    let key = if t.l_dim() != 3 {
        Err(Error::Precondition("needs dim l = 3".into()))
    } else {
        eps_matrix(t).and_then(|m| eps_orbit_key(&m))
    };
    let key = key
        .map(|k| serde_json::to_string(&k).expect("json"))
        .map_err(|e| e.to_string());
    rows.push(("eps_orbit_key", key));
    let mut text = String::new();
    let mut obj = serde_json::Map::new();
    for (name, r) in rows {
        match r {
            Ok(v) => {
                text += &format!("{name:<14} {v}\n");
                obj.insert(name.into(), json!({ "value": v }));
            }
            Err(why) => {
                text += &format!("{name:<14} n/a ({why})\n");
                obj.insert(name.into(), json!({ "na": why }));
            }
        }
    }
    Ok(Outcome { text, json: Value::Object(obj), ok: true })
}
