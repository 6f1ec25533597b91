//! 2-SAT by strongly connected components of the implication graph.

use std::fmt;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Literal(u32);

impl Literal {
    pub fn pos(var: usize) -> Self {
        Literal((var as u32) << 1)
    }

    pub fn neg(var: usize) -> Self {
        Literal(((var as u32) << 1) | 1)
    }

    pub fn var(self) -> usize {
        (self.0 >> 1) as usize
    }

    pub fn is_negated(self) -> bool {
        self.0 & 1 == 1
    }

    pub fn negate(self) -> Self {
        Literal(self.0 ^ 1)
    }

    /// Node of this literal in the implication graph.
    pub fn node(self) -> usize {
        self.0 as usize
    }

    pub fn eval(self, assignment: &[bool]) -> bool {
        assignment[self.var()] != self.is_negated()
    }
}

impl fmt::Debug for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_negated() {
            write!(f, "!x{}", self.var())
        } else {
            write!(f, "x{}", self.var())
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TwoSatInstance {
    vars: usize,
    clauses: Vec<(Literal, Literal)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TwoSatSolution {
    Satisfiable(Vec<bool>),
    /// `x` and `!x` share a strongly connected component.
    Unsatisfiable { variable: usize },
}

impl TwoSatInstance {
    pub fn new(vars: usize) -> Self {
        TwoSatInstance { vars, clauses: Vec::new() }
    }

    pub fn var_count(&self) -> usize {
        self.vars
    }

    pub fn clauses(&self) -> &[(Literal, Literal)] {
        &self.clauses
    }

    /// Adds the clause `a | b`.
    pub fn add_clause(&mut self, a: Literal, b: Literal) {
        assert!(a.var() < self.vars && b.var() < self.vars, "literal out of range");
        self.clauses.push((a, b));
    }

    pub fn is_satisfied_by(&self, assignment: &[bool]) -> bool {
        assignment.len() == self.vars && self.clauses.iter().all(|&(a, b)| a.eval(assignment) || b.eval(assignment))
    }

    /// Adjacency lists over `2 * vars` literal nodes; `a | b` gives
    /// `!a -> b` and `!b -> a`.
    pub fn implication_graph(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); 2 * self.vars];
        for &(a, b) in &self.clauses {
            adj[a.negate().node()].push(b.node());
            adj[b.negate().node()].push(a.node());
        }
        adj
    }

    pub fn solve(&self) -> TwoSatSolution {
        let adj = self.implication_graph();
        let comp = tarjan_scc(&adj);
        let mut assignment = vec![false; self.vars];
        for (v, value) in assignment.iter_mut().enumerate() {
            let (p, n) = (comp[Literal::pos(v).node()], comp[Literal::neg(v).node()]);
            if p == n {
                return TwoSatSolution::Unsatisfiable { variable: v };
            }
            // Components are numbered in reverse topological order.
            *value = p < n;
        }
        debug_assert!(self.is_satisfied_by(&assignment));
        TwoSatSolution::Satisfiable(assignment)
    }
}

/// Component index per node; components are numbered in the order Tarjan's
/// algorithm closes them, i.e. reverse topological order of the condensation.
fn tarjan_scc(adj: &[Vec<usize>]) -> Vec<usize> {
    const UNSET: usize = usize::MAX;
    let n = adj.len();
    let mut index = vec![UNSET; n];
    let mut low = vec![0; n];
    let mut comp = vec![UNSET; n];
    let mut on_stack = vec![false; n];
    let mut stack = Vec::new();
    let mut call: Vec<(usize, usize)> = Vec::new();
    let mut counter = 0;
    let mut comps = 0;

    // Negative literals are rooted first so an unconstrained variable closes
    // its negative component first and ends up false.
    for root in (0..n).map(|v| v ^ 1) {
        if index[root] != UNSET {
            continue;
        }
        call.push((root, 0));
        while let Some(&(u, edge)) = call.last() {
            if edge == 0 && index[u] == UNSET {
                index[u] = counter;
                low[u] = counter;
                counter += 1;
                stack.push(u);
                on_stack[u] = true;
            }
            if edge < adj[u].len() {
                let w = adj[u][edge];
                call.last_mut().expect("non-empty").1 += 1;
                if index[w] == UNSET {
                    call.push((w, 0));
                } else if on_stack[w] {
                    low[u] = low[u].min(index[w]);
                }
                continue;
            }
            call.pop();
            if low[u] == index[u] {
                loop {
                    let w = stack.pop().expect("tarjan stack");
                    on_stack[w] = false;
                    comp[w] = comps;
                    if w == u {
                        break;
                    }
                }
                comps += 1;
            }
            if let Some(&(parent, _)) = call.last() {
                low[parent] = low[parent].min(low[u]);
            }
        }
    }
    comp
}
