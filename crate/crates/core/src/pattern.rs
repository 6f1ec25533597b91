//! Patterns over `{0, 1, *}` and the symmetry group acting on 2x2 patterns.

use std::fmt;
use std::str::FromStr;

use crate::digraph::Digraph;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Cell {
    Zero,
    One,
    Star,
}

impl Cell {
    pub fn symbol(self) -> char {
        match self {
            Cell::Zero => '0',
            Cell::One => '1',
            Cell::Star => '*',
        }
    }

    pub fn from_symbol(c: char) -> Option<Cell> {
        match c {
            '0' => Some(Cell::Zero),
            '1' => Some(Cell::One),
            '*' => Some(Cell::Star),
            _ => None,
        }
    }

    pub fn complemented(self) -> Cell {
        match self {
            Cell::Zero => Cell::One,
            Cell::One => Cell::Zero,
            Cell::Star => Cell::Star,
        }
    }
}

/// An `m x m` matrix over `{0, 1, *}`.
///
/// Diagonal cell `i` constrains pairs inside part `i`; off-diagonal cell
/// `(i, j)` says whether every vertex of part `i` must (`1`) or must not (`0`)
/// dominate every vertex of part `j`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Pattern {
    m: usize,
    cells: Vec<Cell>,
}

/// The ten 2x2 patterns every zero-one-diagonal 2x2 pattern reduces to.
pub const CANONICAL_PATTERNS: [&str; 10] = [
    "0*,*0", "00,*0", "01,*0", "00,10", "01,10", "00,00", "0*,*1", "00,*1", "01,01", "00,01",
];

impl Pattern {
    pub fn new(m: usize, cells: Vec<Cell>) -> Result<Self> {
        if m == 0 || cells.len() != m * m {
            return Err(Error::ParsePattern {
                input: cells.iter().map(|c| c.symbol()).collect(),
                reason: format!("need {} cells for m = {m}", m * m),
            });
        }
        Ok(Pattern { m, cells })
    }

    /// `M1`..`M10`.
    pub fn canonical(index: usize) -> Result<Self> {
        match index {
            1..=10 => Ok(CANONICAL_PATTERNS[index - 1].parse().expect("valid literal")),
            _ => Err(Error::UnknownFamily(index)),
        }
    }

    pub fn size(&self) -> usize {
        self.m
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Cell {
        self.cells[i * self.m + j]
    }

    pub fn has_star_diagonal(&self) -> bool {
        (0..self.m).any(|i| self.get(i, i) == Cell::Star)
    }

    /// Every 0 becomes 1 and vice versa.
    pub fn complement(&self) -> Pattern {
        Pattern { m: self.m, cells: self.cells.iter().map(|c| c.complemented()).collect() }
    }

    pub fn transpose(&self) -> Pattern {
        let m = self.m;
        let cells = (0..m * m).map(|k| self.get(k % m, k / m)).collect();
        Pattern { m, cells }
    }

    /// Renames parts: new part `k` is old part `perm[k]`.
    pub fn permute_parts(&self, perm: &[usize]) -> Pattern {
        let m = self.m;
        assert_eq!(perm.len(), m);
        let cells = (0..m * m).map(|k| self.get(perm[k / m], perm[k % m])).collect();
        Pattern { m, cells }
    }

    /// Which of `M1`..`M10` this pattern literally is, if any.
    pub fn canonical_index(&self) -> Option<usize> {
        (1..=10).find(|&i| Pattern::canonical(i).ok().as_ref() == Some(self))
    }

    /// All 36 2x2 patterns with no star on the diagonal, in a fixed order.
    pub fn zero_one_diagonal_2x2() -> Vec<Pattern> {
        let diag = [Cell::Zero, Cell::One];
        let any = [Cell::Zero, Cell::One, Cell::Star];
        let mut out = Vec::with_capacity(36);
        for &a in &diag {
            for &d in &diag {
                for &b in &any {
                    for &c in &any {
                        out.push(Pattern { m: 2, cells: vec![a, b, c, d] });
                    }
                }
            }
        }
        out
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.m {
            if i > 0 {
                f.write_str(",")?;
            }
            for j in 0..self.m {
                write!(f, "{}", self.get(i, j).symbol())?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Pattern({self})")
    }
}

impl FromStr for Pattern {
    type Err = Error;

    /// Accepts `0*,*0`-style matrices and the aliases `M1`..`M10`.
    fn from_str(s: &str) -> Result<Self> {
        let err = |reason: String| Error::ParsePattern { input: s.to_string(), reason };
        if let Some(idx) = s.strip_prefix('M') {
            return match idx.parse::<usize>() {
                Ok(i @ 1..=10) if !idx.starts_with('0') => Pattern::canonical(i),
                _ => Err(err("unknown alias".into())),
            };
        }
        let rows: Vec<&str> = s.split(',').collect();
        let m = rows.len();
        let mut cells = Vec::with_capacity(m * m);
        for row in &rows {
            if row.chars().count() != m {
                return Err(err(format!("row `{row}` should have {m} cells")));
            }
            for c in row.chars() {
                cells.push(Cell::from_symbol(c).ok_or_else(|| err(format!("invalid cell `{c}`")))?);
            }
        }
        if s.is_empty() {
            return Err(err("empty pattern".into()));
        }
        Pattern::new(m, cells)
    }
}

/// An element of the group generated by complement, transpose and part
/// relabeling. The three generators commute, so a transform is applied as
/// complement, then transpose, then part permutation.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PatternTransform {
    pub complemented: bool,
    pub transposed: bool,
    /// New part `k` is old part `part_permutation[k]`.
    pub part_permutation: Vec<usize>,
}

impl PatternTransform {
    pub fn identity(m: usize) -> Self {
        PatternTransform { complemented: false, transposed: false, part_permutation: (0..m).collect() }
    }

    pub fn swaps_parts(&self) -> bool {
        self.part_permutation.iter().enumerate().any(|(k, &p)| k != p)
    }

    pub fn is_identity(&self) -> bool {
        !self.complemented && !self.transposed && !self.swaps_parts()
    }

    pub fn generator_count(&self) -> usize {
        self.complemented as usize + self.transposed as usize + self.swaps_parts() as usize
    }

    pub fn apply(&self, p: &Pattern) -> Pattern {
        let mut out = p.clone();
        if self.complemented {
            out = out.complement();
        }
        if self.transposed {
            out = out.transpose();
        }
        out.permute_parts(&self.part_permutation)
    }

    /// The matching digraph operation: a partition `P` is a `p`-partition of
    /// `d` iff `P` relabeled by the part permutation is an
    /// `apply(p)`-partition of `apply_digraph(d)`.
    pub fn apply_digraph(&self, d: &Digraph) -> Digraph {
        let mut out = *d;
        if self.complemented {
            out = out.complement();
        }
        if self.transposed {
            out = out.reverse();
        }
        out
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.part_permutation.len()];
        for (k, &p) in self.part_permutation.iter().enumerate() {
            inv[p] = k;
        }
        PatternTransform { complemented: self.complemented, transposed: self.transposed, part_permutation: inv }
    }

    pub fn compose(&self, then: &PatternTransform) -> Self {
        // permute_parts(a) followed by permute_parts(b) is permute_parts(a[b[k]])
        let perm = then.part_permutation.iter().map(|&k| self.part_permutation[k]).collect();
        PatternTransform {
            complemented: self.complemented ^ then.complemented,
            transposed: self.transposed ^ then.transposed,
            part_permutation: perm,
        }
    }

    /// Generator names in application order, or `identity`.
    pub fn chain(&self) -> String {
        let mut parts = Vec::new();
        if self.complemented {
            parts.push("complement");
        }
        if self.transposed {
            parts.push("transpose");
        }
        if self.swaps_parts() {
            parts.push("swap");
        }
        if parts.is_empty() {
            "identity".to_string()
        } else {
            parts.join("+")
        }
    }

    /// The eight elements of the 2x2 group, in tie-breaking order: identity
    /// first, then by generator count, then by `(complement, transpose, swap)`.
    pub fn all_2x2() -> Vec<PatternTransform> {
        let mut all = Vec::with_capacity(8);
        for bits in 0..8u8 {
            all.push(PatternTransform {
                complemented: bits & 4 != 0,
                transposed: bits & 2 != 0,
                part_permutation: if bits & 1 != 0 { vec![1, 0] } else { vec![0, 1] },
            });
        }
        all.sort_by_key(|t| (t.generator_count(), t.complemented, t.transposed, t.swaps_parts()));
        all
    }
}

impl fmt::Display for PatternTransform {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.chain())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PatternClass {
    /// Some diagonal cell is `*`; every digraph is partitionable.
    StarDiagonal,
    /// `M1`..`M10`.
    Canonical(usize),
}

impl fmt::Display for PatternClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PatternClass::StarDiagonal => f.write_str("STAR-DIAGONAL"),
            PatternClass::Canonical(i) => write!(f, "M{i}"),
        }
    }
}

/// Reduces a 2x2 pattern to its canonical representative.
///
/// Returns the class and a transform taking `p` literally to it. Star
/// diagonal patterns get the identity transform.
pub fn classify_2x2(p: &Pattern) -> Result<(PatternClass, PatternTransform)> {
    if p.size() != 2 {
        return Err(Error::NotTwoByTwo(p.size()));
    }
    if p.has_star_diagonal() {
        return Ok((PatternClass::StarDiagonal, PatternTransform::identity(2)));
    }
    for t in PatternTransform::all_2x2() {
        if let Some(i) = t.apply(p).canonical_index() {
            return Ok((PatternClass::Canonical(i), t));
        }
    }
    unreachable!("every zero-one-diagonal 2x2 pattern reaches a canonical one")
}

pub fn canonical_patterns() -> Vec<Pattern> {
    (1..=10).map(|i| Pattern::canonical(i).expect("1..=10")).collect()
}
