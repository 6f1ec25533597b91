//! Checks every stored family against enumeration and prints the reports.
//! Use `--release`; the whole run takes a few seconds.

use mpartition::families::{verify_theorem, DEFAULT_SLACK};

fn main() -> mpartition::Result<()> {
    let mut failed = 0;
    for i in 1..=10 {
        let report = verify_theorem(i, DEFAULT_SLACK)?;
        print!("{report}");
        failed += usize::from(!report.passed());
    }
    println!("{failed} failed");
    Ok(())
}
