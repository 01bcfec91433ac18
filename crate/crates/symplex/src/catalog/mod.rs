//! Classification fixtures in dimension 4 and 6, their file format, and the
//! certification pipeline.

pub mod fixtures;
pub mod format;
mod verify;

use std::path::Path;

pub use format::{
    parse_json, parse_lines, read_file, AlgebraFile, CocycleFile, Dim4File, EntryFile, Expected,
    Family, PairFile, ScalarRepr, TauFile, matrix_from_rows, matrix_to_rows,
};
pub use verify::{
    compute_invariant, verify_catalog, verify_entry, CatalogReport, EntryReport, PairCheck,
    PairStatus,
};

use crate::error::{Error, Result};
use crate::symplectic::SymplecticLieAlgebra;
use crate::CocycleTriple;

/// Bundled dimension-4 list, one JSON value per line.
pub const DIM4_JSONL: &str = include_str!("../../data/dim4.jsonl");
/// Bundled dimension-6 list, one JSON value per line.
pub const DIM6_JSONL: &str = include_str!("../../data/dim6.jsonl");

fn at_line(line: usize, e: Error) -> Error {
    match e {
        Error::Parse { msg, .. } => Error::Parse { line, msg },
        other => Error::Parse { line, msg: other.to_string() },
    }
}

/// Parses dimension-6 entries and checks that each cocycle loads.
pub fn parse_entries(text: &str) -> Result<Vec<EntryFile>> {
    let entries: Vec<EntryFile> = parse_lines(text)?;
    let lines: Vec<usize> = text
        .lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(n, _)| n + 1)
        .collect();
    for (e, line) in entries.iter().zip(lines) {
        e.cocycle.to_triple().map_err(|err| at_line(line, err))?;
        for v in e.parameters.values().chain(e.expected.invariants.values()) {
            v.parse().map_err(|err| at_line(line, err))?;
        }
    }
    Ok(entries)
}

pub fn load(path: &Path) -> Result<Vec<EntryFile>> {
    parse_entries(&read_file(path)?)
}

pub fn parse_dim4(text: &str) -> Result<Vec<(String, SymplecticLieAlgebra)>> {
    let files: Vec<Dim4File> = parse_lines(text)?;
    files.into_iter().enumerate().map(|(i, f)| Ok((f.id, f.algebra.to_algebra().map_err(|e| at_line(i + 1, e))?))).collect()
}

pub fn load_dim4(path: &Path) -> Result<Vec<(String, SymplecticLieAlgebra)>> {
    parse_dim4(&read_file(path)?)
}

pub fn bundled_dim6() -> Vec<EntryFile> {
    parse_entries(DIM6_JSONL).expect("bundled catalog parses")
}

pub fn bundled_dim4() -> Vec<(String, SymplecticLieAlgebra)> {
    parse_dim4(DIM4_JSONL).expect("bundled dim-4 list parses")
}

/// Serializes entries as JSON lines.
pub fn to_jsonl<T: serde::Serialize>(items: &[T]) -> String {
    items.iter().map(|e| serde_json::to_string(e).expect("serializable") + "\n").collect()
}

pub fn entry_triple(e: &EntryFile) -> CocycleTriple {
    e.cocycle.to_triple().expect("entry loads")
}
