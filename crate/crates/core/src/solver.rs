//! Deciding whether a digraph admits an M-partition.
//!
//! Two independent routes: [`solve_bruteforce`] backtracks over part
//! assignments for any pattern, and the 2-SAT route ([`build_2sat`]) handles
//! 2x2 patterns with a zero-one diagonal. [`solve`] dispatches between them.

use std::fmt;

use crate::digraph::{ArcState, Digraph};
use crate::enumerate::is_minimal_obstruction;
use crate::error::{Error, Result};
use crate::pattern::{Cell, Pattern};
use crate::twosat::{Literal, TwoSatInstance, TwoSatSolution};

/// Largest `m^n` the brute-force search will attempt.
pub const BRUTE_FORCE_LIMIT: u64 = 1 << 20;

/// Part index per vertex, zero-based (part `0` is the first row of the
/// pattern).
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Self {
        Partition(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn part(&self, v: usize) -> usize {
        self.0[v]
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The partition of the induced subdigraph on `vertices` (ascending
    /// relabeling, as in [`Digraph::induced`]).
    pub fn restrict(&self, vertices: &[usize]) -> Partition {
        let mut sorted = vertices.to_vec();
        sorted.sort_unstable();
        Partition(sorted.into_iter().map(|v| self.0[v]).collect())
    }

    /// Vertices of part `part`, ascending.
    pub fn members(&self, part: usize) -> Vec<usize> {
        (0..self.0.len()).filter(|&v| self.0[v] == part).collect()
    }
}

/// One-based part numbers joined by commas, e.g. `1,2,2`.
impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", p + 1)?;
        }
        Ok(())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition({self})")
    }
}

/// Whether `x` in part `i` and `y` in part `j` is allowed, checking both
/// arc directions between `x` and `y`.
#[inline]
pub fn placement_allowed(d: &Digraph, p: &Pattern, x: usize, i: usize, y: usize, j: usize) -> bool {
    let s = d.state_from(x, y);
    if i == j {
        match p.get(i, i) {
            Cell::Zero => s == ArcState::None,
            Cell::One => s == ArcState::Digon,
            Cell::Star => true,
        }
    } else {
        let dominates = |cell: Cell, arc: bool| match cell {
            Cell::Zero => !arc,
            Cell::One => arc,
            Cell::Star => true,
        };
        dominates(p.get(i, j), s.forward()) && dominates(p.get(j, i), s.backward())
    }
}

/// Checks `partition` against every ordered pair of distinct vertices.
pub fn check_partition(d: &Digraph, p: &Pattern, partition: &Partition) -> Result<bool> {
    let n = d.order();
    if partition.len() != n {
        return Err(Error::PartitionLength { got: partition.len(), expected: n });
    }
    if let Some(&bad) = partition.parts().iter().find(|&&q| q >= p.size()) {
        return Err(Error::PartOutOfRange { part: bad, m: p.size() });
    }
    Ok(partition_is_valid(d, p, partition))
}

fn partition_is_valid(d: &Digraph, p: &Pattern, partition: &Partition) -> bool {
    let n = d.order();
    (0..n).all(|x| {
        (x + 1..n).all(|y| placement_allowed(d, p, x, partition.part(x), y, partition.part(y)))
    })
}

/// Exhaustive backtracking with forward checking; vertices are assigned in
/// ascending order and parts tried in ascending order.
pub fn solve_bruteforce(d: &Digraph, p: &Pattern) -> Result<Option<Partition>> {
    let (n, m) = (d.order(), p.size());
    let too_big = m > 64 || (m as u64).checked_pow(n as u32).is_none_or(|c| c > BRUTE_FORCE_LIMIT);
    if too_big {
        return Err(Error::SizeGuard { n, m });
    }
    let full: u64 = if m == 64 { u64::MAX } else { (1u64 << m) - 1 };
    let mut assignment = vec![0usize; n];
    let mut domains = vec![full; n];
    if backtrack(d, p, 0, &mut assignment, &mut domains) {
        Ok(Some(Partition(assignment)))
    } else {
        Ok(None)
    }
}

fn backtrack(d: &Digraph, p: &Pattern, v: usize, assignment: &mut [usize], domains: &mut [u64]) -> bool {
    let n = d.order();
    if v == n {
        return true;
    }
    let mut options = domains[v];
    while options != 0 {
        let part = options.trailing_zeros() as usize;
        options &= options - 1;
        assignment[v] = part;

        let saved: Vec<u64> = domains[v + 1..].to_vec();
        let mut dead = false;
        for u in v + 1..n {
            let mut dom = domains[u];
            let mut bits = dom;
            while bits != 0 {
                let q = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                if !placement_allowed(d, p, v, part, u, q) {
                    dom &= !(1 << q);
                }
            }
            domains[u] = dom;
            if dom == 0 {
                dead = true;
                break;
            }
        }
        if !dead && backtrack(d, p, v + 1, assignment, domains) {
            return true;
        }
        domains[v + 1..].copy_from_slice(&saved);
    }
    false
}

fn require_2x2_zero_one(p: &Pattern) -> Result<()> {
    if p.size() != 2 {
        return Err(Error::NotTwoByTwo(p.size()));
    }
    if p.has_star_diagonal() {
        return Err(Error::StarDiagonal);
    }
    Ok(())
}

/// One variable per vertex, true meaning part `1` (the second part). Each
/// joint placement of a pair that [`placement_allowed`] rejects becomes the
/// clause "not both".
pub fn build_2sat(d: &Digraph, p: &Pattern) -> Result<TwoSatInstance> {
    require_2x2_zero_one(p)?;
    let n = d.order();
    let mut inst = TwoSatInstance::new(n);
    // literal meaning "v is not in part `part`"
    let not_in = |v: usize, part: usize| if part == 0 { Literal::pos(v) } else { Literal::neg(v) };
    for x in 0..n {
        for y in x + 1..n {
            for i in 0..2 {
                for j in 0..2 {
                    if !placement_allowed(d, p, x, i, y, j) {
                        inst.add_clause(not_in(x, i), not_in(y, j));
                    }
                }
            }
        }
    }
    Ok(inst)
}

/// The 2-SAT route alone, for 2x2 zero-one-diagonal patterns.
pub fn solve_2sat(d: &Digraph, p: &Pattern) -> Result<Option<Partition>> {
    let inst = build_2sat(d, p)?;
    Ok(match inst.solve() {
        TwoSatSolution::Satisfiable(a) => Some(Partition(a.into_iter().map(usize::from).collect())),
        TwoSatSolution::Unsatisfiable { .. } => None,
    })
}

/// Decides `p`-partitionability of `d`, returning a validated witness.
///
/// A star on the diagonal puts every vertex into that part. Other 2x2
/// patterns go through 2-SAT, everything else through brute force.
pub fn solve(d: &Digraph, p: &Pattern) -> Result<Option<Partition>> {
    let n = d.order();
    let result = if let Some(star) = (0..p.size()).find(|&i| p.get(i, i) == Cell::Star) {
        Some(Partition(vec![star; n]))
    } else if p.size() == 2 {
        solve_2sat(d, p)?
    } else {
        solve_bruteforce(d, p)?
    };
    if let Some(part) = &result {
        assert!(partition_is_valid(d, p, part), "solver produced an invalid witness {part} for {d} / {p}");
    }
    Ok(result)
}

pub fn is_partitionable(d: &Digraph, p: &Pattern) -> Result<bool> {
    Ok(solve(d, p)?.is_some())
}

/// A minimal obstruction found inside a larger digraph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EmbeddedObstruction {
    /// Vertices of the host digraph, ascending.
    pub vertices: Vec<usize>,
    pub digraph: Digraph,
}

/// Deletes vertices in ascending order while the rest stays
/// non-partitionable. One pass suffices: a vertex kept because its deletion
/// was partitionable stays necessary once the set shrinks further.
pub fn find_embedded_minimal_obstruction(d: &Digraph, p: &Pattern) -> Result<EmbeddedObstruction> {
    if solve(d, p)?.is_some() {
        return Err(Error::Partitionable);
    }
    let mut keep: Vec<usize> = (0..d.order()).collect();
    let mut idx = 0;
    while idx < keep.len() {
        let mut trial = keep.clone();
        trial.remove(idx);
        if solve(&d.relabeled(&trial), p)?.is_none() {
            keep = trial;
        } else {
            idx += 1;
        }
    }
    let digraph = d.relabeled(&keep);
    assert!(is_minimal_obstruction(&digraph, p)?.is_some(), "greedy deletion left a non-minimal obstruction");
    Ok(EmbeddedObstruction { vertices: keep, digraph })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(s: &str) -> Digraph {
        s.parse().unwrap()
    }

    fn p(s: &str) -> Pattern {
        s.parse().unwrap()
    }

    fn all_partitions(n: usize, m: usize) -> impl Iterator<Item = Partition> {
        (0..m.pow(n as u32)).map(move |mut code| {
            let mut parts = vec![0; n];
            for slot in parts.iter_mut() {
                *slot = code % m;
                code /= m;
            }
            Partition(parts)
        })
    }

    #[test]
    fn check_partition_examples() {
        let m1 = p("M1");
        assert!(check_partition(&d("2:."), &m1, &Partition(vec![0, 0])).unwrap());
        assert!(check_partition(&d("2:="), &m1, &Partition(vec![0, 1])).unwrap());
        assert!(!check_partition(&d("2:="), &m1, &Partition(vec![0, 0])).unwrap());
        for part in all_partitions(2, 2) {
            assert!(!check_partition(&d("2:="), &p("M2"), &part).unwrap());
        }
    }

    #[test]
    fn check_partition_errors() {
        let m1 = p("M1");
        assert!(matches!(
            check_partition(&d("2:."), &m1, &Partition(vec![0])),
            Err(Error::PartitionLength { .. })
        ));
        assert!(matches!(
            check_partition(&d("2:."), &m1, &Partition(vec![0, 2])),
            Err(Error::PartOutOfRange { part: 2, m: 2 })
        ));
    }

    #[test]
    fn domination_is_directional() {
        // M3 = 01,*0: part 0 must dominate part 1
        let m3 = p("M3");
        assert!(check_partition(&d("2:>"), &m3, &Partition(vec![0, 1])).unwrap());
        assert!(!check_partition(&d("2:>"), &m3, &Partition(vec![1, 0])).unwrap());
        assert!(check_partition(&d("2:="), &m3, &Partition(vec![1, 0])).unwrap());
    }

    #[test]
    fn bruteforce_examples() {
        for pat in ["M1", "M6", "M10", "0", "1", "0*1,*0*,1*0"] {
            assert!(solve_bruteforce(&d("1:"), &p(pat)).unwrap().is_some());
            assert_eq!(solve_bruteforce(&d("0:"), &p(pat)).unwrap(), Some(Partition(vec![])));
        }
        assert_eq!(solve_bruteforce(&d("3:>.>"), &p("M2")).unwrap(), None);
        // a superorientation of C5: 0>1, 1<2, 2>3... closing 4=0
        let c5 = Digraph::from_arcs(5, &[(0, 1), (2, 1), (2, 3), (3, 2), (3, 4), (0, 4)]).unwrap();
        assert_eq!(solve_bruteforce(&c5, &p("M1")).unwrap(), None);
    }

    #[test]
    fn bruteforce_size_guard() {
        let big = Digraph::empty(12).unwrap();
        assert!(solve_bruteforce(&big, &p("M1")).is_ok());
        assert!(matches!(
            solve_bruteforce(&big, &p("0000,0000,0000,0000")),
            Err(Error::SizeGuard { n: 12, m: 4 })
        ));
    }

    #[test]
    fn bruteforce_agrees_with_enumeration_of_partitions() {
        for pat in ["0*1,*0*,1*0", "M5", "01,10", "1"] {
            let pat = p(pat);
            for code in 0..4u64.pow(3) {
                let g = Digraph::from_code(3, code);
                let any = all_partitions(3, pat.size()).any(|q| check_partition(&g, &pat, &q).unwrap());
                assert_eq!(solve_bruteforce(&g, &pat).unwrap().is_some(), any, "{g} {pat}");
            }
        }
    }

    #[test]
    fn build_2sat_examples() {
        let inst = build_2sat(&d("2:="), &p("M2")).unwrap();
        assert_eq!(inst.clauses().len(), 4);
        assert!(matches!(inst.solve(), TwoSatSolution::Unsatisfiable { .. }));

        let inst = build_2sat(&d("2:."), &p("M5")).unwrap();
        for a in [[false, false], [true, true]] {
            assert!(inst.is_satisfied_by(&a));
        }
        for a in [[false, true], [true, false]] {
            assert!(!inst.is_satisfied_by(&a));
        }

        let inst = build_2sat(&Digraph::empty(4).unwrap(), &p("M7")).unwrap();
        assert!(matches!(inst.solve(), TwoSatSolution::Satisfiable(_)));
        assert!(inst.clauses().len() <= 4 * 6 + 4);

        assert!(matches!(build_2sat(&d("2:."), &p("*0,0*")), Err(Error::StarDiagonal)));
        assert!(matches!(build_2sat(&d("2:."), &p("0")), Err(Error::NotTwoByTwo(1))));
    }

    #[test]
    fn solve_dispatch_examples() {
        let star = p("*0,1*");
        let w = solve(&d("3:>.>"), &star).unwrap().unwrap();
        assert_eq!(w.parts(), &[0, 0, 0]);
        assert_eq!(solve(&d("3:>.>"), &p("**,**")).unwrap().unwrap().parts(), &[0, 0, 0]);
        assert_eq!(solve(&d("4:=....="), &p("M10")).unwrap(), None);
        assert_eq!(solve(&d("3:=.="), &p("M10")).unwrap(), None);
        assert_eq!(solve(&d("0:"), &p("M6")).unwrap(), Some(Partition(vec![])));
    }

    #[test]
    fn path_of_digons_oracle() {
        // every one of the 2^3 assignments fails under M10
        let g = d("3:=.=");
        assert!(all_partitions(3, 2).all(|q| !check_partition(&g, &p("M10"), &q).unwrap()));
    }

    #[test]
    fn embedded_obstruction_examples() {
        // TT3 on {0,1,2} plus isolated vertex 3
        let tt3 = Digraph::from_arcs(4, &[(0, 1), (0, 2), (1, 2)]).unwrap();
        let found = find_embedded_minimal_obstruction(&tt3, &p("M2")).unwrap();
        assert_eq!(found.vertices, vec![0, 1, 2]);
        assert_eq!(found.digraph, d("3:>>>"));

        let path = d("3:>.>");
        let found = find_embedded_minimal_obstruction(&path, &p("M2")).unwrap();
        assert_eq!(found.digraph, path);

        assert_eq!(find_embedded_minimal_obstruction(&d("2:."), &p("M2")), Err(Error::Partitionable));
    }

    #[test]
    fn partition_display_is_one_based() {
        assert_eq!(Partition(vec![0, 1, 1]).to_string(), "1,2,2");
        assert_eq!(Partition(vec![0, 1, 1, 0]).restrict(&[3, 1]).parts(), &[1, 0]);
    }
}
