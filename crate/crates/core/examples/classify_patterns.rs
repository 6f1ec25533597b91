//! All 36 zero-one-diagonal 2x2 patterns grouped by the canonical pattern
//! they reduce to.

use std::collections::BTreeMap;

use mpartition::{classify_2x2, Pattern};

fn main() -> mpartition::Result<()> {
    let mut groups: BTreeMap<String, Vec<String>> = BTreeMap::new();
    for p in Pattern::zero_one_diagonal_2x2() {
        let (class, t) = classify_2x2(&p)?;
        groups.entry(class.to_string()).or_default().push(format!("{p} ({})", t.chain()));
    }
    for (class, members) in &groups {
        println!("{class}: {}", members.join("  "));
    }
    println!("{} classes", groups.len());
    Ok(())
}
