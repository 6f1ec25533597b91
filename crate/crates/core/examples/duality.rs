//! Complementing a digraph together with its pattern, or reversing it and
//! transposing the pattern, keeps the same partitions valid.

use mpartition::{check_partition, solve, Digraph, Pattern};

fn main() -> mpartition::Result<()> {
    let d: Digraph = "4:>>>...".parse()?;
    let p: Pattern = "01,*0".parse()?;
    let pairs = [
        ("original", d, p.clone()),
        ("complement", d.complement(), p.complement()),
        ("reverse", d.reverse(), p.transpose()),
    ];
    let witness = solve(&d, &p)?;
    for (name, g, q) in &pairs {
        let still = match &witness {
            Some(w) => check_partition(g, q, w)?.to_string(),
            None => "-".to_string(),
        };
        println!("{name:>10}: {g} against {q}, partitionable {}, same witness valid {still}", solve(g, q)?.is_some());
    }
    Ok(())
}
