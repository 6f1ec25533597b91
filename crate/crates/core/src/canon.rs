//! Canonical labeling by lexicographically least rendered pair string.
//!
//! Vertices are placed position by position. Row `k` of the string holds the
//! states from the vertex at position `k` to the positions after it, so once
//! a prefix of positions is fixed the rows still to come depend only on the
//! ordered cells of unplaced vertices. Placing a vertex splits every cell by
//! its state towards that vertex; only expansions reaching the least row
//! survive, and partial labelings with identical remaining cells are merged
//! because their completions coincide.

use std::collections::BTreeMap;

use crate::digraph::{pair_count, ArcState, CanonicalForm, Digraph};

type Cells = Vec<u16>;

pub(crate) fn canonical_form(d: &Digraph) -> CanonicalForm {
    let n = d.order();
    if n <= 1 {
        return CanonicalForm { digraph: *d, witness: (0..n).collect() };
    }

    let all: u16 = ((1u32 << n) - 1) as u16;
    let mut frontier: Vec<(Cells, Vec<usize>)> = vec![(vec![all], Vec::with_capacity(n))];
    let mut row = Vec::with_capacity(n);

    for _ in 0..n - 1 {
        let mut best: Option<Vec<ArcState>> = None;
        let mut next: BTreeMap<Cells, Vec<usize>> = BTreeMap::new();

        for (cells, prefix) in &frontier {
            let first = cells[0];
            let mut members = first;
            while members != 0 {
                let v = members.trailing_zeros() as usize;
                members &= members - 1;

                row.clear();
                let mut refined: Cells = Vec::with_capacity(cells.len() + 3);
                for (ci, &cell) in cells.iter().enumerate() {
                    let cell = if ci == 0 { cell & !(1 << v) } else { cell };
                    if cell == 0 {
                        continue;
                    }
                    let mut split = [0u16; 4];
                    let mut rest = cell;
                    while rest != 0 {
                        let u = rest.trailing_zeros() as usize;
                        rest &= rest - 1;
                        split[d.state_from(v, u) as usize] |= 1 << u;
                    }
                    for (s, &part) in ArcState::ALL.iter().zip(split.iter()) {
                        if part != 0 {
                            refined.push(part);
                            row.extend(std::iter::repeat_n(*s, part.count_ones() as usize));
                        }
                    }
                }

                let keep = match &best {
                    None => true,
                    Some(b) => match row.as_slice().cmp(b.as_slice()) {
                        std::cmp::Ordering::Less => {
                            next.clear();
                            true
                        }
                        std::cmp::Ordering::Equal => true,
                        std::cmp::Ordering::Greater => false,
                    },
                };
                if keep {
                    if best.as_deref() != Some(row.as_slice()) {
                        best = Some(row.clone());
                    }
                    next.entry(refined).or_insert_with(|| {
                        let mut p = prefix.clone();
                        p.push(v);
                        p
                    });
                }
            }
        }

        frontier = next.into_iter().collect();
    }

    // Every surviving labeling yields the same string.
    let (cells, mut witness) = frontier.into_iter().next().expect("frontier never empties");
    debug_assert_eq!(cells.len(), 1);
    witness.push(cells[0].trailing_zeros() as usize);

    let digraph = d.relabeled(&witness);
    debug_assert_eq!(digraph.states().len(), pair_count(n));
    CanonicalForm { digraph, witness }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(s: &str) -> Digraph {
        s.parse().unwrap()
    }

    fn brute_force(g: &Digraph) -> Digraph {
        fn rec(g: &Digraph, perm: &mut Vec<usize>, used: &mut Vec<bool>, best: &mut Option<Digraph>) {
            if perm.len() == g.order() {
                let h = g.permute(perm).unwrap();
                if best.is_none_or(|b| h.states() < b.states()) {
                    *best = Some(h);
                }
                return;
            }
            for v in 0..g.order() {
                if !used[v] {
                    used[v] = true;
                    perm.push(v);
                    rec(g, perm, used, best);
                    perm.pop();
                    used[v] = false;
                }
            }
        }
        let mut best = None;
        rec(g, &mut Vec::new(), &mut vec![false; g.order()], &mut best);
        best.unwrap()
    }

    #[test]
    fn small_cases() {
        assert_eq!(d("2:>").canonical_key(), d("2:<").canonical_key());
        assert_eq!(d("2:>").canonical_key(), "2:<");
        assert_eq!(d("0:").canonical_key(), "0:");
        assert_eq!(d("1:").canonical_key(), "1:");
    }

    #[test]
    fn witness_maps_input_to_representative() {
        for s in ["3:>.>", "4:>=.<>.", "5:>...<>..=>", "4:=....="] {
            let g = d(s);
            let c = g.canonical();
            assert_eq!(g.permute(&c.witness).unwrap(), c.digraph);
        }
    }

    #[test]
    fn matches_brute_force_on_all_labeled_four_vertex_digraphs() {
        for code in 0..4u64.pow(6) {
            let g = Digraph::from_code(4, code);
            assert_eq!(g.canonical().digraph, brute_force(&g), "{g}");
        }
    }

    #[test]
    fn symmetric_twelve_vertex_inputs_are_fast() {
        let empty = Digraph::empty(12).unwrap();
        assert_eq!(empty.canonical().digraph, empty);
        let full = empty.complement();
        assert_eq!(full.canonical().digraph, full);
    }
}
