//! Independent oracles shared by the integration tests. Nothing here calls
//! the canonical-form search or the 2-SAT route.

#![allow(dead_code)]

use mpartition::digraph::{pair_count, ArcState};
use mpartition::{check_partition, Digraph, Partition, Pattern};
use rand::Rng;

pub fn d(s: &str) -> Digraph {
    s.parse().unwrap()
}

pub fn p(s: &str) -> Pattern {
    s.parse().unwrap()
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(n: usize, cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for v in 0..n {
            if !used[v] {
                used[v] = true;
                cur.push(v);
                rec(n, cur, used, out);
                cur.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(n, &mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// Least rendered string over all `n!` relabelings.
pub fn brute_canonical_key(g: &Digraph, perms: &[Vec<usize>]) -> String {
    perms.iter().map(|perm| g.permute(perm).unwrap().to_string()).min().unwrap()
}

/// Direct isomorphism test by permutation search.
pub fn brute_isomorphic(a: &Digraph, b: &Digraph) -> bool {
    a.order() == b.order() && permutations(a.order()).iter().any(|perm| a.permute(perm).unwrap() == *b)
}

/// Every labeled digraph on `n` vertices.
pub fn labeled(n: usize) -> impl Iterator<Item = Digraph> {
    let pairs = pair_count(n);
    (0..4u64.pow(pairs as u32)).map(move |mut code| {
        let mut states = Vec::with_capacity(pairs);
        for _ in 0..pairs {
            states.push(ArcState::ALL[(code % 4) as usize]);
            code /= 4;
        }
        Digraph::from_states(n, &states).unwrap()
    })
}

pub fn random_digraph<R: Rng>(rng: &mut R, n: usize) -> Digraph {
    let states: Vec<ArcState> = (0..pair_count(n)).map(|_| ArcState::ALL[rng.gen_range(0..4)]).collect();
    Digraph::from_states(n, &states).unwrap()
}

/// Every assignment of `n` vertices to `m` parts.
pub fn all_partitions(n: usize, m: usize) -> impl Iterator<Item = Partition> {
    (0..m.pow(n as u32)).map(move |mut code| {
        let mut parts = vec![0; n];
        for slot in parts.iter_mut() {
            *slot = code % m;
            code /= m;
        }
        Partition::new(parts)
    })
}

/// Partitionability by trying every assignment.
pub fn exhaustive_decision(g: &Digraph, pat: &Pattern) -> bool {
    all_partitions(g.order(), pat.size()).any(|q| check_partition(g, pat, &q).unwrap())
}

/// Minimality by the definition: non-partitionable and every proper induced
/// subdigraph partitionable, checked over all vertex subsets.
pub fn exhaustive_minimal(g: &Digraph, pat: &Pattern) -> bool {
    let n = g.order();
    if exhaustive_decision(g, pat) {
        return false;
    }
    (0..(1u32 << n) - 1).all(|mask| {
        let keep: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        exhaustive_decision(&g.induced(&keep).unwrap(), pat)
    })
}

/// Canonical representatives of all digraphs on `n` vertices, by brute force.
pub fn brute_classes(n: usize) -> Vec<String> {
    let perms = permutations(n);
    let mut keys: Vec<String> = labeled(n).map(|g| brute_canonical_key(&g, &perms)).collect();
    keys.sort();
    keys.dedup();
    keys
}

/// Number of isomorphism classes of digraphs on `n` vertices by Burnside:
/// average over vertex permutations of `2^(cycles on ordered pairs)`.
pub fn burnside_count(n: usize) -> u128 {
    let perms = permutations(n);
    let mut total: u128 = 0;
    for perm in &perms {
        let mut seen = vec![false; n * n];
        let mut cycles = 0;
        for i in 0..n {
            for j in 0..n {
                if i == j || seen[i * n + j] {
                    continue;
                }
                cycles += 1;
                let (mut a, mut b) = (i, j);
                while !seen[a * n + b] {
                    seen[a * n + b] = true;
                    (a, b) = (perm[a], perm[b]);
                }
            }
        }
        total += 1u128 << cycles;
    }
    total / perms.len() as u128
}
