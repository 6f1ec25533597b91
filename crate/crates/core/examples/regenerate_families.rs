//! Rewrites the stored obstruction families from a fresh enumeration.
//!
//! ```bash
//! cargo run --release -p mpartition --example regenerate_families
//! ```
//!
//! Writes `data/families/F<i>.txt` for every pattern except `M1`, whose
//! family is generated on demand. Pass a directory to write elsewhere.

use std::path::PathBuf;

use mpartition::families::regenerate_family;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dir = std::env::args()
        .nth(1)
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data/families"));
    std::fs::create_dir_all(&dir)?;
    for i in 2..=10 {
        let text = regenerate_family(i)?;
        let path = dir.join(format!("F{i}.txt"));
        std::fs::write(&path, &text)?;
        let entries = text.lines().filter(|l| !l.starts_with('#')).count();
        println!("F{i}: {entries} digraphs -> {}", path.display());
    }
    Ok(())
}
