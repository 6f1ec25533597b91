//! Isomorph-free digraph generation and minimal obstruction search.
//!
//! Orders up to [`MAX_DIRECT_ORDER`] are generated directly from every
//! labeled pair-state string. Beyond that, candidates are one-vertex
//! extensions of partitionable digraphs: every proper induced subdigraph of a
//! minimal obstruction is partitionable, and partitionability is hereditary,
//! so no obstruction or partitionable digraph is missed.

use std::collections::HashSet;
use std::sync::OnceLock;

use rayon::prelude::*;

use crate::catalog::{CatalogEntry, Certificate, ObstructionCatalog};
use crate::digraph::{pair_count, ArcState, Digraph};
use crate::error::{Error, Result};
use crate::pattern::Pattern;
use crate::solver::solve;

pub const MAX_DIRECT_ORDER: usize = 5;
pub const MAX_BOUND: usize = 7;

/// One canonical representative per isomorphism class of loopless digraphs
/// on `n <= 5` vertices, sorted by key.
pub fn enumerate_digraphs(n: usize) -> Result<Vec<Digraph>> {
    Ok(all_digraphs(n)?.to_vec())
}

fn all_digraphs(n: usize) -> Result<&'static [Digraph]> {
    static CACHE: [OnceLock<Vec<Digraph>>; MAX_DIRECT_ORDER + 1] = [const { OnceLock::new() }; MAX_DIRECT_ORDER + 1];
    if n > MAX_DIRECT_ORDER {
        return Err(Error::BoundOutOfRange { bound: n, max: MAX_DIRECT_ORDER });
    }
    Ok(CACHE[n].get_or_init(|| {
        let labeled = 1u64 << (2 * pair_count(n));
        let classes: HashSet<Digraph> =
            (0..labeled).into_par_iter().map(|code| Digraph::from_code(n, code).canonical().digraph).collect();
        let mut reps: Vec<Digraph> = classes.into_iter().collect();
        reps.sort();
        reps
    }))
}

/// `Some(certificate)` iff `d` is not `p`-partitionable but every
/// one-vertex deletion is (which covers all proper induced subdigraphs by
/// hereditarity).
pub fn is_minimal_obstruction(d: &Digraph, p: &Pattern) -> Result<Option<Certificate>> {
    if solve(d, p)?.is_some() {
        return Ok(None);
    }
    let mut deletions = Vec::with_capacity(d.order());
    for v in 0..d.order() {
        match solve(&d.without(v), p)? {
            Some(w) => deletions.push(w),
            None => return Ok(None),
        }
    }
    Ok(Some(Certificate { deletions }))
}

/// How candidate digraphs of each order are produced.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    /// Direct generation up to order 5, augmentation above.
    Hybrid,
    /// Augmentation from the single one-vertex digraph upward.
    Augment,
}

/// All minimal `p`-obstructions with at most `bound <= 7` vertices.
pub fn enumerate_minimal_obstructions(p: &Pattern, bound: usize) -> Result<ObstructionCatalog> {
    enumerate_minimal_obstructions_with(p, bound, Strategy::Hybrid)
}

pub fn enumerate_minimal_obstructions_with(p: &Pattern, bound: usize, strategy: Strategy) -> Result<ObstructionCatalog> {
    if bound > MAX_BOUND {
        return Err(Error::BoundOutOfRange { bound, max: MAX_BOUND });
    }
    // validates the pattern against the solver's size guard early
    solve(&Digraph::empty(1)?, p)?;

    let direct_top = match strategy {
        Strategy::Hybrid => bound.min(MAX_DIRECT_ORDER),
        Strategy::Augment => bound.min(1),
    };

    let mut found: Vec<Digraph> = Vec::new();
    for n in 1..=direct_top {
        let obstructions: Vec<Digraph> = all_digraphs(n)?
            .par_iter()
            .filter(|d| matches!(is_minimal_obstruction(d, p), Ok(Some(_))))
            .copied()
            .collect();
        found.extend(obstructions);
    }

    if bound > direct_top {
        let mut parents: Vec<Digraph> = all_digraphs(direct_top)?
            .par_iter()
            .filter(|d| matches!(solve(d, p), Ok(Some(_))))
            .copied()
            .collect();
        for n in direct_top + 1..=bound {
            let need_parents = n < bound;
            let (next, obstructions) = augment(&parents, p, need_parents)?;
            found.extend(obstructions);
            parents = next;
        }
    }

    let entries = found
        .into_par_iter()
        .map(|d| {
            let certificate = is_minimal_obstruction(&d, p)?.expect("candidate was checked minimal");
            Ok(CatalogEntry { digraph: d, certificate })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ObstructionCatalog::new(p.clone(), bound, entries))
}

/// Extends every parent by one vertex in all `4^k` ways. Returns the
/// canonical partitionable extensions (when asked) and the canonical minimal
/// obstructions among them, both sorted.
fn augment(parents: &[Digraph], p: &Pattern, keep_partitionable: bool) -> Result<(Vec<Digraph>, Vec<Digraph>)> {
    type Sets = (HashSet<Digraph>, HashSet<Digraph>);
    let (partitionable, obstructions): Sets = parents
        .par_iter()
        .map(|parent| -> Result<Sets> {
            let k = parent.order();
            let mut ok = HashSet::new();
            let mut obs = HashSet::new();
            let mut attach = vec![ArcState::None; k];
            for mut code in 0..1u64 << (2 * k) {
                for slot in attach.iter_mut() {
                    *slot = ArcState::ALL[(code & 3) as usize];
                    code >>= 2;
                }
                let child = parent.extend(&attach)?;
                if solve(&child, p)?.is_some() {
                    if keep_partitionable {
                        ok.insert(child.canonical().digraph);
                    }
                    continue;
                }
                // the new vertex's deletion is the partitionable parent
                let mut minimal = true;
                for v in 0..k {
                    if solve(&child.without(v), p)?.is_none() {
                        minimal = false;
                        break;
                    }
                }
                if minimal {
                    obs.insert(child.canonical().digraph);
                }
            }
            Ok((ok, obs))
        })
        .try_reduce(
            || (HashSet::new(), HashSet::new()),
            |mut a, b| {
                a.0.extend(b.0);
                a.1.extend(b.1);
                Ok(a)
            },
        )?;
    let mut partitionable: Vec<Digraph> = partitionable.into_iter().collect();
    partitionable.sort();
    let mut obstructions: Vec<Digraph> = obstructions.into_iter().collect();
    obstructions.sort();
    Ok((partitionable, obstructions))
}
