//! Matrix partitions of digraphs.
//!
//! A pattern `M` over `{0, 1, *}` asks for a partition of a digraph's
//! vertices into parts whose internal adjacency and mutual domination obey
//! the matrix. This crate decides such partitions (by 2-SAT for 2x2
//! patterns, by backtracking otherwise), enumerates the minimal obstructions
//! of a pattern up to seven vertices without isomorphic duplicates, and
//! checks the obstruction families of all ten essentially different 2x2
//! patterns against that enumeration.
//!
//! ```
//! use mpartition::{solve, Digraph, Pattern};
//!
//! let path: Digraph = "3:>.>".parse().unwrap();
//! let m2: Pattern = "M2".parse().unwrap();
//! assert!(solve(&path, &m2).unwrap().is_none());
//! ```

mod canon;
pub mod catalog;
pub mod cli;
pub mod digraph;
pub mod enumerate;
pub mod error;
pub mod families;
pub mod pattern;
pub mod solver;
pub mod twosat;

pub use catalog::{catalog_diff, Certificate, ObstructionCatalog};
pub use digraph::{ArcState, CanonicalForm, Digraph};
pub use enumerate::{enumerate_digraphs, enumerate_minimal_obstructions, is_minimal_obstruction};
pub use error::{Error, Result};
pub use pattern::{classify_2x2, Cell, Pattern, PatternClass, PatternTransform};
pub use solver::{check_partition, find_embedded_minimal_obstruction, solve, solve_bruteforce, Partition};
