//! Enumerates minimal obstructions for a pattern and prints the catalog and
//! its certificates.
//!
//! `cargo run --release --example minimal_obstructions -- M3 5`

use mpartition::{enumerate_minimal_obstructions, Pattern};

fn main() -> mpartition::Result<()> {
    let mut args = std::env::args().skip(1);
    let pattern: Pattern = args.next().as_deref().unwrap_or("M8").parse()?;
    let bound: usize = args.next().and_then(|b| b.parse().ok()).unwrap_or(4);
    let catalog = enumerate_minimal_obstructions(&pattern, bound)?;
    print!("{}", catalog.render());
    println!();
    print!("{}", catalog.render_certificates());
    let issues = catalog.verify();
    println!("\n{} entries, {} issues", catalog.entries.len(), issues.len());
    Ok(())
}
