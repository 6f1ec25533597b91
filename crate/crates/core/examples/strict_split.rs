//! Strict split recognition: an independent set plus a strong clique.

use mpartition::families::strict_split_check;
use mpartition::Digraph;

fn main() -> mpartition::Result<()> {
    for text in ["3:===", "4:=.=...", "4:=....=", "3:>..", "2:>"] {
        let d: Digraph = text.parse()?;
        match strict_split_check(&d) {
            Some(s) => println!("{d}: independent {:?}, clique {:?}", s.independent, s.clique),
            None => println!("{d}: not strict split"),
        }
    }
    Ok(())
}
