//! Decide a few digraphs against a pattern, printing witnesses and, on
//! failure, a minimal obstruction found inside the input.
//!
//! `cargo run --example solve_digraph -- M1 5:>..<<..=.>`

use mpartition::{find_embedded_minimal_obstruction, solve, Digraph, Pattern};

fn main() -> mpartition::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let (pattern, inputs): (Pattern, Vec<String>) = match args.split_first() {
        Some((p, rest)) if !rest.is_empty() => (p.parse()?, rest.to_vec()),
        _ => ("M1".parse()?, vec!["4:>.<>.>".into(), "3:>>>".into(), "5:>..<<..=.>".into()]),
    };
    println!("pattern {pattern}");
    for text in inputs {
        let d: Digraph = text.parse()?;
        match solve(&d, &pattern)? {
            Some(w) => println!("{d}: YES, parts {w}"),
            None => {
                let found = find_embedded_minimal_obstruction(&d, &pattern)?;
                println!("{d}: NO, obstruction {} on vertices {:?}", found.digraph, found.vertices);
            }
        }
    }
    Ok(())
}
