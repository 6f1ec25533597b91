//! Obstruction catalogs and their line-oriented file formats.
//!
//! A catalog file lists one canonical digraph per line, sorted by key, after
//! a `#` header:
//!
//! ```text
//! # pattern 00,*0
//! # bound 5
//! # tool mpartition 0.1.0
//! 2:=
//! 3:<.<
//! ```
//!
//! The certificate sidecar holds, per entry and deleted vertex, a partition
//! of the entry minus that vertex: `<key> <vertex> <parts>` with one-based
//! parts joined by commas.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::pattern::Pattern;
use crate::solver::{check_partition, solve_bruteforce, Partition};

pub const TOOL: &str = concat!("mpartition ", env!("CARGO_PKG_VERSION"));

/// Witnesses that every one-vertex deletion of an obstruction is partitionable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    /// `deletions[v]` partitions the digraph with vertex `v` removed.
    pub deletions: Vec<Partition>,
}

impl Certificate {
    /// Re-checks the certificate without the 2-SAT route: deletion witnesses
    /// by direct evaluation, non-partitionability by brute force.
    pub fn verify(&self, d: &Digraph, p: &Pattern) -> bool {
        if self.deletions.len() != d.order() {
            return false;
        }
        let deletions_ok = self
            .deletions
            .iter()
            .enumerate()
            .all(|(v, w)| check_partition(&d.without(v), p, w).unwrap_or(false));
        deletions_ok && matches!(solve_bruteforce(d, p), Ok(None))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogEntry {
    pub digraph: Digraph,
    pub certificate: Certificate,
}

impl CatalogEntry {
    pub fn key(&self) -> String {
        self.digraph.to_string()
    }
}

/// All minimal obstructions of `pattern` with at most `bound` vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ObstructionCatalog {
    pub pattern: Pattern,
    pub bound: usize,
    /// Canonical representatives, sorted by key.
    pub entries: Vec<CatalogEntry>,
}

impl ObstructionCatalog {
    pub fn new(pattern: Pattern, bound: usize, mut entries: Vec<CatalogEntry>) -> Self {
        entries.sort_by_key(|e| e.key());
        ObstructionCatalog { pattern, bound, entries }
    }

    pub fn keys(&self) -> Vec<String> {
        self.entries.iter().map(|e| e.key()).collect()
    }

    pub fn digraphs(&self) -> Vec<Digraph> {
        self.entries.iter().map(|e| e.digraph).collect()
    }

    /// Entry count for each order `1..=bound`.
    pub fn counts_by_order(&self) -> Vec<(usize, usize)> {
        (1..=self.bound)
            .map(|n| (n, self.entries.iter().filter(|e| e.digraph.order() == n).count()))
            .collect()
    }

    /// Entries of order at most `bound`.
    pub fn truncated(&self, bound: usize) -> ObstructionCatalog {
        let entries = self.entries.iter().filter(|e| e.digraph.order() <= bound).cloned().collect();
        ObstructionCatalog::new(self.pattern.clone(), bound.min(self.bound), entries)
    }

    fn header(&self) -> String {
        format!("# pattern {}\n# bound {}\n# tool {}\n", self.pattern, self.bound, TOOL)
    }

    pub fn render(&self) -> String {
        let mut out = self.header();
        for e in &self.entries {
            let _ = writeln!(out, "{}", e.key());
        }
        out
    }

    pub fn render_certificates(&self) -> String {
        let mut out = self.header();
        for e in &self.entries {
            for (v, w) in e.certificate.deletions.iter().enumerate() {
                let parts = if w.is_empty() { "-".to_string() } else { w.to_string() };
                let _ = writeln!(out, "{} {} {}", e.key(), v, parts);
            }
        }
        out
    }

    /// Reads a catalog and its certificate sidecar.
    pub fn parse(catalog: &str, certificates: &str) -> Result<ObstructionCatalog> {
        let file = CatalogFile::parse(catalog)?;
        let pattern = file.pattern.ok_or(Error::ParseCatalog { line: 0, reason: "missing pattern header".into() })?;
        let bound = file.bound.ok_or(Error::ParseCatalog { line: 0, reason: "missing bound header".into() })?;

        let mut witnesses: BTreeMap<String, Vec<(usize, Partition)>> = BTreeMap::new();
        for (idx, line) in certificates.lines().enumerate() {
            let lineno = idx + 1;
            if line.starts_with('#') || line.trim().is_empty() {
                continue;
            }
            let err = |reason: &str| Error::ParseCatalog { line: lineno, reason: reason.to_string() };
            let mut fields = line.split(' ');
            let (Some(key), Some(v), Some(parts), None) = (fields.next(), fields.next(), fields.next(), fields.next())
            else {
                return Err(err("expected `<key> <vertex> <parts>`"));
            };
            let v: usize = v.parse().map_err(|_| err("bad vertex"))?;
            let parts = if parts == "-" {
                Vec::new()
            } else {
                parts
                    .split(',')
                    .map(|s| s.parse::<usize>().ok().filter(|&q| q >= 1).map(|q| q - 1))
                    .collect::<Option<Vec<_>>>()
                    .ok_or_else(|| err("bad partition"))?
            };
            witnesses.entry(key.to_string()).or_default().push((v, Partition::new(parts)));
        }

        let mut entries = Vec::with_capacity(file.digraphs.len());
        for d in file.digraphs {
            let mut list = witnesses.remove(&d.to_string()).unwrap_or_default();
            list.sort_by_key(|(v, _)| *v);
            if list.iter().enumerate().any(|(i, (v, _))| i != *v) || list.len() != d.order() {
                return Err(Error::ParseCatalog { line: 0, reason: format!("incomplete certificate for {d}") });
            }
            let deletions = list.into_iter().map(|(_, w)| w).collect();
            entries.push(CatalogEntry { digraph: d, certificate: Certificate { deletions } });
        }
        if let Some(key) = witnesses.keys().next() {
            return Err(Error::ParseCatalog { line: 0, reason: format!("certificate for unknown entry {key}") });
        }
        Ok(ObstructionCatalog::new(pattern, bound, entries))
    }

    /// Soundness problems, empty when the catalog checks out: entries must be
    /// canonical, distinct, within the bound, certified minimal obstructions,
    /// and pairwise incomparable under induced containment.
    pub fn verify(&self) -> Vec<String> {
        let mut issues = Vec::new();
        for w in self.entries.windows(2) {
            if w[0].key() >= w[1].key() {
                issues.push(format!("entries out of order or duplicated: {} {}", w[0].key(), w[1].key()));
            }
        }
        for e in &self.entries {
            let key = e.key();
            if e.digraph.canonical().digraph != e.digraph {
                issues.push(format!("{key} is not canonical"));
            }
            if e.digraph.order() > self.bound {
                issues.push(format!("{key} exceeds bound {}", self.bound));
            }
            if !e.certificate.verify(&e.digraph, &self.pattern) {
                issues.push(format!("{key} certificate fails"));
            }
        }
        for a in &self.entries {
            for b in &self.entries {
                if a.digraph.order() < b.digraph.order() && contains_induced(&b.digraph, &a.digraph) {
                    issues.push(format!("{} embeds in {}", a.key(), b.key()));
                }
            }
        }
        issues
    }
}

/// Header fields and digraphs of a catalog-format file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogFile {
    pub pattern: Option<Pattern>,
    pub bound: Option<usize>,
    pub digraphs: Vec<Digraph>,
}

impl CatalogFile {
    pub fn parse(text: &str) -> Result<CatalogFile> {
        let mut file = CatalogFile { pattern: None, bound: None, digraphs: Vec::new() };
        for (idx, line) in text.lines().enumerate() {
            let lineno = idx + 1;
            let err = |reason: String| Error::ParseCatalog { line: lineno, reason };
            if let Some(comment) = line.strip_prefix('#') {
                let comment = comment.trim();
                if let Some(p) = comment.strip_prefix("pattern ") {
                    file.pattern = Some(p.trim().parse().map_err(|e: Error| err(e.to_string()))?);
                } else if let Some(b) = comment.strip_prefix("bound ") {
                    file.bound = Some(b.trim().parse().map_err(|_| err(format!("bad bound `{b}`")))?);
                }
                continue;
            }
            if line.trim().is_empty() {
                continue;
            }
            file.digraphs.push(line.trim().parse().map_err(|e: Error| err(e.to_string()))?);
        }
        Ok(file)
    }

    pub fn keys(&self) -> Vec<String> {
        self.digraphs.iter().map(|d| d.canonical_key()).collect()
    }
}

/// Keys only in `a` and keys only in `b`, each sorted.
pub fn diff_keys(a: &[String], b: &[String]) -> (Vec<String>, Vec<String>) {
    use std::collections::BTreeSet;
    let a: BTreeSet<&String> = a.iter().collect();
    let b: BTreeSet<&String> = b.iter().collect();
    (
        a.difference(&b).map(|s| s.to_string()).collect(),
        b.difference(&a).map(|s| s.to_string()).collect(),
    )
}

pub fn catalog_diff(a: &ObstructionCatalog, b: &ObstructionCatalog) -> (Vec<String>, Vec<String>) {
    diff_keys(&a.keys(), &b.keys())
}

/// Whether `small` is isomorphic to an induced subdigraph of `big`.
pub fn contains_induced(big: &Digraph, small: &Digraph) -> bool {
    let (n, k) = (big.order(), small.order());
    if k > n {
        return false;
    }
    let target = small.canonical().digraph;
    let mut subset: Vec<usize> = (0..k).collect();
    loop {
        if big.relabeled(&subset).canonical().digraph == target {
            return true;
        }
        // next k-subset in lexicographic order
        let Some(i) = (0..k).rev().find(|&i| subset[i] < n - k + i) else {
            return false;
        };
        subset[i] += 1;
        for j in i + 1..k {
            subset[j] = subset[j - 1] + 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(s: &str) -> Digraph {
        s.parse().unwrap()
    }

    #[test]
    fn induced_containment() {
        let tt3_plus = Digraph::from_arcs(4, &[(0, 1), (0, 2), (1, 2)]).unwrap();
        assert!(contains_induced(&tt3_plus, &d("3:>>>")));
        assert!(contains_induced(&tt3_plus, &d("2:<")));
        assert!(contains_induced(&tt3_plus, &d("2:.")));
        assert!(!contains_induced(&tt3_plus, &d("2:=")));
        assert!(!contains_induced(&tt3_plus, &d("3:>.>")));
        assert!(contains_induced(&tt3_plus, &tt3_plus));
        assert!(contains_induced(&tt3_plus, &d("0:")));
        assert!(!contains_induced(&d("2:>"), &d("3:...")));
    }

    #[test]
    fn diff_is_symmetric_set_difference() {
        let a = vec!["2:=".to_string(), "2:<".to_string()];
        let b = vec!["2:<".to_string(), "3:...".to_string()];
        assert_eq!(diff_keys(&a, &b), (vec!["2:=".to_string()], vec!["3:...".to_string()]));
        assert_eq!(diff_keys(&a, &a), (vec![], vec![]));
    }

    #[test]
    fn catalog_file_parse_errors() {
        assert!(CatalogFile::parse("# pattern 0x\n").is_err());
        assert!(CatalogFile::parse("2:x\n").is_err());
        let f = CatalogFile::parse("# pattern M6\n# bound 3\n2:<\n\n2:=\n").unwrap();
        assert_eq!(f.pattern, Some("00,00".parse().unwrap()));
        assert_eq!(f.bound, Some(3));
        assert_eq!(f.digraphs.len(), 2);
    }
}
