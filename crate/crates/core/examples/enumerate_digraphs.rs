//! Counts digraphs up to isomorphism and lists the small ones.

use mpartition::enumerate_digraphs;

fn main() -> mpartition::Result<()> {
    for n in 1..=5 {
        let all = enumerate_digraphs(n)?;
        println!("n={n}: {} classes", all.len());
        if n <= 2 {
            for d in &all {
                println!("  {d}");
            }
        }
    }
    Ok(())
}
