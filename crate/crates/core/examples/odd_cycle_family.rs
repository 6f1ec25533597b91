//! Superorientations of odd cycles are exactly the minimal obstructions for
//! `0*,*0`. Compares the generator with enumeration at small orders.

use mpartition::families::family_m1;
use mpartition::{enumerate_minimal_obstructions, Pattern};

fn main() -> mpartition::Result<()> {
    let family = family_m1(7)?;
    for len in [3, 5, 7] {
        println!("C{len}: {} superorientations", family.iter().filter(|d| d.order() == len).count());
    }
    let enumerated = enumerate_minimal_obstructions(&Pattern::canonical(1)?, 5)?;
    let small: Vec<String> = family.iter().filter(|d| d.order() <= 5).map(|d| d.to_string()).collect();
    println!("enumeration to n=5 agrees: {}", enumerated.keys() == small);
    Ok(())
}
