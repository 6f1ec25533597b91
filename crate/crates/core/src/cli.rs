//! Command-line front end. Exit codes: 0 affirmative or pass, 1 negative or
//! fail, 2 usage or input error.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand};

use crate::catalog::{diff_keys, CatalogFile};
use crate::digraph::Digraph;
use crate::enumerate::enumerate_minimal_obstructions;
use crate::error::Error;
use crate::families::{family_finite, family_m1, m7_catalog, verify_theorem, DEFAULT_SLACK};
use crate::pattern::{classify_2x2, Pattern, PatternClass};
use crate::solver::{find_embedded_minimal_obstruction, solve};

#[derive(Debug, Parser)]
#[command(name = "mpartition", version, about = "Matrix partitions and minimal obstructions of digraphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide whether a digraph admits an M-partition.
    Solve {
        /// Pattern such as `0*,*0` or an alias `M1`..`M10`.
        #[arg(long)]
        pattern: String,
        /// Digraph in `<n>:<pairs>` form.
        #[arg(long)]
        digraph: String,
        /// Print the partition as `vertex:part` lines.
        #[arg(long)]
        witness: bool,
        /// On `NO`, print an embedded minimal obstruction.
        #[arg(long)]
        obstruction: bool,
    },
    /// Reduce a 2x2 pattern to one of M1..M10.
    Classify {
        #[arg(long)]
        pattern: String,
    },
    /// Enumerate minimal obstructions up to a vertex bound.
    Enumerate {
        #[arg(long)]
        pattern: String,
        #[arg(long)]
        bound: usize,
        /// Write the catalog here and certificates to `<out>.cert`.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compare families with enumeration; all ten theorems without `--theorem`.
    Verify {
        #[arg(long)]
        theorem: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_SLACK)]
        slack: usize,
    },
    /// Print the family of obstructions for M_i in catalog format.
    Families {
        #[arg(long)]
        theorem: usize,
        /// Largest cycle order for the M1 family.
        #[arg(long, default_value_t = 5)]
        max_n: usize,
    },
    /// Compare two catalog files by canonical key.
    Diff { a: PathBuf, b: PathBuf },
}

enum Failure {
    Input(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Input(e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Input(e.to_string())
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(stderr, "{e}");
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let mut out = String::new();
    let code = match execute(&cli.command, &mut out) {
        Ok(affirmative) => {
            if affirmative {
                0
            } else {
                1
            }
        }
        Err(Failure::Input(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            2
        }
    };
    let _ = stdout.write_all(out.as_bytes());
    code
}

fn execute(cmd: &Command, out: &mut String) -> Result<bool, Failure> {
    match cmd {
        Command::Solve { pattern, digraph, witness, obstruction } => {
            let p: Pattern = pattern.parse()?;
            let d: Digraph = digraph.parse()?;
            match solve(&d, &p)? {
                Some(partition) => {
                    out.push_str("YES\n");
                    if *witness {
                        for (v, part) in partition.parts().iter().enumerate() {
                            let _ = writeln!(out, "{v}:{}", part + 1);
                        }
                    }
                    Ok(true)
                }
                None => {
                    out.push_str("NO\n");
                    if *obstruction {
                        let found = find_embedded_minimal_obstruction(&d, &p)?;
                        let _ = writeln!(out, "{}", found.digraph);
                    }
                    Ok(false)
                }
            }
        }
        Command::Classify { pattern } => {
            let p: Pattern = pattern.parse()?;
            match classify_2x2(&p)? {
                (PatternClass::StarDiagonal, _) => out.push_str("STAR-DIAGONAL\n"),
                (class, t) => {
                    let _ = writeln!(out, "{class} via {}", t.chain());
                }
            }
            Ok(true)
        }
        Command::Enumerate { pattern, bound, out: path } => {
            let p: Pattern = pattern.parse()?;
            let catalog = enumerate_minimal_obstructions(&p, *bound)?;
            for (n, c) in catalog.counts_by_order() {
                if n >= 2 {
                    let _ = writeln!(out, "n={n}: {c}");
                }
            }
            if let Some(path) = path {
                std::fs::write(path, catalog.render())?;
                let mut cert = path.clone().into_os_string();
                cert.push(".cert");
                std::fs::write(PathBuf::from(cert), catalog.render_certificates())?;
            }
            Ok(true)
        }
        Command::Verify { theorem, slack } => {
            let theorems: Vec<usize> = match theorem {
                Some(i) => vec![*i],
                None => (1..=10).collect(),
            };
            let mut all_pass = true;
            for i in theorems {
                let report = verify_theorem(i, *slack)?;
                all_pass &= report.passed();
                let _ = write!(out, "{report}");
            }
            Ok(all_pass)
        }
        Command::Families { theorem, max_n } => {
            let (pattern, digraphs) = match theorem {
                1 => (Pattern::canonical(1)?, family_m1(*max_n)?),
                7 => (Pattern::canonical(7)?, m7_catalog()),
                i => (Pattern::canonical(*i)?, family_finite(*i)?),
            };
            let _ = writeln!(out, "# family F{theorem}");
            let _ = writeln!(out, "# pattern {pattern}");
            for d in digraphs {
                let _ = writeln!(out, "{d}");
            }
            Ok(true)
        }
        Command::Diff { a, b } => {
            let fa = CatalogFile::parse(&std::fs::read_to_string(a)?)?;
            let fb = CatalogFile::parse(&std::fs::read_to_string(b)?)?;
            let (only_a, only_b) = diff_keys(&fa.keys(), &fb.keys());
            for k in &only_a {
                let _ = writeln!(out, "ONLY-A {k}");
            }
            for k in &only_b {
                let _ = writeln!(out, "ONLY-B {k}");
            }
            Ok(only_a.is_empty() && only_b.is_empty())
        }
    }
}
