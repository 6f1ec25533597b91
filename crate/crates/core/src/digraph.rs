//! Loopless digraphs stored as one [`ArcState`] per unordered vertex pair.
//!
//! Pairs are laid out row-major over the upper triangle, `(0,1), (0,2), ...,
//! (0,n-1), (1,2), ...`, which is also the order of the text format
//! `<n>:<pairs>`:
//!
//! | symbol | state   | arcs for `i < j` |
//! |--------|---------|------------------|
//! | `.`    | `None`  | none             |
//! | `>`    | `Fwd`   | `i -> j`         |
//! | `<`    | `Bwd`   | `j -> i`         |
//! | `=`    | `Digon` | both             |

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

pub const MAX_VERTICES: usize = 12;
pub const MAX_PAIRS: usize = MAX_VERTICES * (MAX_VERTICES - 1) / 2;

/// State of an unordered pair `{i, j}` read with `i < j`.
///
/// The derived order matches the byte order of the text symbols
/// (`.` < `<` < `=` < `>`), so comparing state sequences compares their
/// rendered strings.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[repr(u8)]
pub enum ArcState {
    #[default]
    None = 0,
    Bwd = 1,
    Digon = 2,
    Fwd = 3,
}

impl ArcState {
    pub const ALL: [ArcState; 4] = [ArcState::None, ArcState::Bwd, ArcState::Digon, ArcState::Fwd];

    pub fn from_arcs(forward: bool, backward: bool) -> Self {
        match (forward, backward) {
            (false, false) => ArcState::None,
            (true, false) => ArcState::Fwd,
            (false, true) => ArcState::Bwd,
            (true, true) => ArcState::Digon,
        }
    }

    /// Arc from the lower to the higher vertex.
    pub fn forward(self) -> bool {
        matches!(self, ArcState::Fwd | ArcState::Digon)
    }

    /// Arc from the higher to the lower vertex.
    pub fn backward(self) -> bool {
        matches!(self, ArcState::Bwd | ArcState::Digon)
    }

    pub fn is_adjacent(self) -> bool {
        self != ArcState::None
    }

    /// The same pair read from the other endpoint.
    pub fn flipped(self) -> Self {
        match self {
            ArcState::Fwd => ArcState::Bwd,
            ArcState::Bwd => ArcState::Fwd,
            s => s,
        }
    }

    pub fn complemented(self) -> Self {
        ArcState::from_arcs(!self.forward(), !self.backward())
    }

    pub fn symbol(self) -> char {
        match self {
            ArcState::None => '.',
            ArcState::Fwd => '>',
            ArcState::Bwd => '<',
            ArcState::Digon => '=',
        }
    }

    pub fn from_symbol(c: char) -> Option<Self> {
        match c {
            '.' => Some(ArcState::None),
            '>' => Some(ArcState::Fwd),
            '<' => Some(ArcState::Bwd),
            '=' => Some(ArcState::Digon),
            _ => None,
        }
    }
}

pub fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

#[inline]
fn pair_index(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < n);
    i * n - i * (i + 1) / 2 + (j - i - 1)
}

/// A loopless digraph on at most [`MAX_VERTICES`] vertices.
///
/// Values are small and `Copy`; every operation returns a new digraph.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Digraph {
    n: u8,
    pairs: [ArcState; MAX_PAIRS],
}

impl Digraph {
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices { n, max: MAX_VERTICES });
        }
        Ok(Digraph { n: n as u8, pairs: [ArcState::None; MAX_PAIRS] })
    }

    pub fn from_arcs(n: usize, arcs: &[(usize, usize)]) -> Result<Self> {
        let mut d = Digraph::empty(n)?;
        for &(x, y) in arcs {
            d.check_pair(x, y)?;
            d.add_arc_unchecked(x, y);
        }
        Ok(d)
    }

    /// Builds a digraph from its pair states in row-major order.
    pub fn from_states(n: usize, states: &[ArcState]) -> Result<Self> {
        let mut d = Digraph::empty(n)?;
        if states.len() != pair_count(n) {
            return Err(Error::ParseDigraph {
                input: states.iter().map(|s| s.symbol()).collect(),
                reason: format!("expected {} pair states, got {}", pair_count(n), states.len()),
            });
        }
        d.pairs[..states.len()].copy_from_slice(states);
        Ok(d)
    }

    /// Decodes `code` as base-4 digits, pair `p` taking digit `p`.
    /// Every code below `4^(n(n-1)/2)` is a distinct labeled digraph.
    pub(crate) fn from_code(n: usize, mut code: u64) -> Self {
        let mut d = Digraph::empty(n).expect("n within bounds");
        for p in 0..pair_count(n) {
            d.pairs[p] = ArcState::ALL[(code & 3) as usize];
            code >>= 2;
        }
        d
    }

    pub fn order(&self) -> usize {
        self.n as usize
    }

    /// The pair states in row-major order.
    pub fn states(&self) -> &[ArcState] {
        &self.pairs[..pair_count(self.order())]
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.order() {
            Err(Error::VertexOutOfRange { vertex: v, n: self.order() })
        } else {
            Ok(())
        }
    }

    fn check_pair(&self, x: usize, y: usize) -> Result<()> {
        self.check_vertex(x)?;
        self.check_vertex(y)?;
        if x == y {
            return Err(Error::Loop(x));
        }
        Ok(())
    }

    /// State of `{x, y}` read from `x`: `Fwd` means `x -> y` only.
    #[inline]
    pub fn state_from(&self, x: usize, y: usize) -> ArcState {
        if x < y {
            self.pairs[pair_index(self.order(), x, y)]
        } else {
            self.pairs[pair_index(self.order(), y, x)].flipped()
        }
    }

    #[inline]
    fn set_state_from(&mut self, x: usize, y: usize, s: ArcState) {
        let n = self.order();
        if x < y {
            self.pairs[pair_index(n, x, y)] = s;
        } else {
            self.pairs[pair_index(n, y, x)] = s.flipped();
        }
    }

    fn add_arc_unchecked(&mut self, x: usize, y: usize) {
        let s = self.state_from(x, y);
        self.set_state_from(x, y, ArcState::from_arcs(true, s.backward()));
    }

    /// Sets the state of `{x, y}` as read from `x`.
    pub fn set_state(&mut self, x: usize, y: usize, s: ArcState) -> Result<()> {
        self.check_pair(x, y)?;
        self.set_state_from(x, y, s);
        Ok(())
    }

    pub fn state(&self, x: usize, y: usize) -> Result<ArcState> {
        self.check_pair(x, y)?;
        Ok(self.state_from(x, y))
    }

    /// Whether `x -> y` is an arc.
    pub fn arc(&self, x: usize, y: usize) -> Result<bool> {
        self.check_pair(x, y)?;
        Ok(self.has_arc(x, y))
    }

    /// Unchecked form of [`Digraph::arc`]; panics on out-of-range vertices.
    #[inline]
    pub fn has_arc(&self, x: usize, y: usize) -> bool {
        self.state_from(x, y).forward()
    }

    pub fn arc_count(&self) -> usize {
        self.states()
            .iter()
            .map(|s| s.forward() as usize + s.backward() as usize)
            .sum()
    }

    pub fn complement(&self) -> Digraph {
        let mut d = *self;
        for s in &mut d.pairs[..pair_count(self.order())] {
            *s = s.complemented();
        }
        d
    }

    /// The dual digraph, every arc reversed.
    pub fn reverse(&self) -> Digraph {
        let mut d = *self;
        for s in &mut d.pairs[..pair_count(self.order())] {
            *s = s.flipped();
        }
        d
    }

    /// Induced subdigraph on `vertices`, relabeled by ascending original index.
    pub fn induced(&self, vertices: &[usize]) -> Result<Digraph> {
        let mut sorted = vertices.to_vec();
        sorted.sort_unstable();
        for w in sorted.windows(2) {
            if w[0] == w[1] {
                return Err(Error::DuplicateVertex(w[0]));
            }
        }
        for &v in &sorted {
            self.check_vertex(v)?;
        }
        Ok(self.relabeled(&sorted))
    }

    /// `D - v`.
    pub fn delete_vertex(&self, v: usize) -> Result<Digraph> {
        self.check_vertex(v)?;
        Ok(self.without(v))
    }

    pub(crate) fn without(&self, v: usize) -> Digraph {
        let keep: Vec<usize> = (0..self.order()).filter(|&u| u != v).collect();
        self.relabeled(&keep)
    }

    /// Digraph whose vertex `k` is `self`'s vertex `map[k]`.
    pub(crate) fn relabeled(&self, map: &[usize]) -> Digraph {
        let k = map.len();
        let mut d = Digraph { n: k as u8, pairs: [ArcState::None; MAX_PAIRS] };
        let mut p = 0;
        for a in 0..k {
            for b in a + 1..k {
                d.pairs[p] = self.state_from(map[a], map[b]);
                p += 1;
            }
        }
        d
    }

    /// Relabels so that new vertex `k` is old vertex `perm[k]`.
    pub fn permute(&self, perm: &[usize]) -> Result<Digraph> {
        let n = self.order();
        if perm.len() != n {
            return Err(Error::PartitionLength { got: perm.len(), expected: n });
        }
        let mut seen = [false; MAX_VERTICES];
        for &v in perm {
            self.check_vertex(v)?;
            if std::mem::replace(&mut seen[v], true) {
                return Err(Error::DuplicateVertex(v));
            }
        }
        Ok(self.relabeled(perm))
    }

    /// Adds vertex `n` whose pair with each old vertex `i` has state `attach[i]`
    /// (read from `i`).
    pub fn extend(&self, attach: &[ArcState]) -> Result<Digraph> {
        let n = self.order();
        if attach.len() != n {
            return Err(Error::PartitionLength { got: attach.len(), expected: n });
        }
        let mut d = Digraph::empty(n + 1)?;
        for i in 0..n {
            for j in i + 1..n {
                d.set_state_from(i, j, self.state_from(i, j));
            }
            d.set_state_from(i, n, attach[i]);
        }
        Ok(d)
    }

    /// Whether the underlying graph has no edges.
    pub fn is_empty_digraph(&self) -> bool {
        self.states().iter().all(|s| !s.is_adjacent())
    }

    pub fn canonical(&self) -> CanonicalForm {
        crate::canon::canonical_form(self)
    }

    pub fn canonical_key(&self) -> String {
        self.canonical().key()
    }

    pub fn is_isomorphic(&self, other: &Digraph) -> bool {
        self.order() == other.order()
            && self.states().len() == other.states().len()
            && self.canonical().digraph == other.canonical().digraph
    }
}

impl fmt::Display for Digraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:", self.n)?;
        for s in self.states() {
            write!(f, "{}", s.symbol())?;
        }
        Ok(())
    }
}

impl fmt::Debug for Digraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Digraph({self})")
    }
}

impl FromStr for Digraph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let err = |reason: String| Error::ParseDigraph { input: s.to_string(), reason };
        let (count, body) = s.split_once(':').ok_or_else(|| err("missing `:`".into()))?;
        if count.is_empty() || !count.bytes().all(|b| b.is_ascii_digit()) {
            return Err(err(format!("bad vertex count `{count}`")));
        }
        let n: usize = count.parse().map_err(|_| err(format!("bad vertex count `{count}`")))?;
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices { n, max: MAX_VERTICES });
        }
        let states = body
            .chars()
            .map(|c| ArcState::from_symbol(c).ok_or_else(|| err(format!("invalid symbol `{c}`"))))
            .collect::<Result<Vec<_>>>()?;
        if states.len() != pair_count(n) {
            return Err(err(format!(
                "{n} vertices need {} pair symbols, got {}",
                pair_count(n),
                states.len()
            )));
        }
        Digraph::from_states(n, &states)
    }
}

/// Order-invariant representative of a digraph.
///
/// `digraph` is the relabeling of the input whose rendered pair string is
/// lexicographically least; `witness[k]` is the input vertex placed at
/// canonical position `k`, so `input.permute(&witness) == digraph`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalForm {
    pub digraph: Digraph,
    pub witness: Vec<usize>,
}

impl CanonicalForm {
    /// The canonical representative rendered in the text format.
    pub fn key(&self) -> String {
        self.digraph.to_string()
    }
}
