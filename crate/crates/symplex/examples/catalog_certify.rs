//! Certifies the bundled dimension-6 catalog and prints a summary.

use symplex::catalog::{bundled_dim6, verify_catalog, PairStatus};

fn main() -> symplex::Result<()> {
    let entries = bundled_dim6();
    let start = std::time::Instant::now();
    let rep = verify_catalog(&entries, 0)?;
    for e in &rep.entries {
        let mark = if e.ok() { "ok  " } else { "FAIL" };
        println!("{mark} {:<36} {}", e.id, e.problems.join("; "));
    }
    let count = |s: PairStatus| rep.pairs.iter().filter(|p| p.status == s).count();
    println!(
        "{} entries, {} failed; pairs: {} separated, {} unseparated, {} asserted by the classification ({:.2?})",
        rep.entries.len(),
        rep.failed_entries(),
        count(PairStatus::Separated),
        count(PairStatus::Unseparated),
        count(PairStatus::AssertedByClassification),
        start.elapsed()
    );
    for p in rep.unseparated() {
        println!("unseparated: {} ~ {}", p.first, p.second);
    }
    Ok(())
}
