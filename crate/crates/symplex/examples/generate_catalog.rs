//! Regenerates `data/dim4.jsonl` and `data/dim6.jsonl` from the in-code fixtures.

use std::path::PathBuf;

use symplex::catalog::{fixtures, to_jsonl};

fn main() -> std::io::Result<()> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data");
    std::fs::write(dir.join("dim4.jsonl"), to_jsonl(&fixtures::dim4()))?;
    let dim6 = fixtures::dim6();
    std::fs::write(dir.join("dim6.jsonl"), to_jsonl(&dim6))?;
    println!("wrote 3 dim-4 and {} dim-6 entries to {}", dim6.len(), dir.display());
    Ok(())
}
