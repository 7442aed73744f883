//! Knuth moves and Knuth equivalence classes.

use std::collections::{BTreeSet, VecDeque};

use crate::config::Limits;
use crate::error::Result;
use crate::perm::Permutation;
use crate::tableau::partition::Partition;
use crate::tableau::rs::p_tableau;
use crate::tableau::syt::{syt_enumerate, StandardTableau};

/// All results of a single Knuth move. With a < b < c the moves exchange
/// factors acb <-> cab and bac <-> bca.
pub fn knuth_neighbors(sigma: &Permutation) -> BTreeSet<Permutation> {
    let w = sigma.word();
    let mut out = BTreeSet::new();
    for i in 0..w.len().saturating_sub(2) {
        let (x, y, z) = (w[i], w[i + 1], w[i + 2]);
        let swap_first = |out: &mut BTreeSet<Permutation>| {
            let mut v = w.to_vec();
            v.swap(i, i + 1);
            out.insert(Permutation::from_word(v).unwrap());
        };
        let swap_last = |out: &mut BTreeSet<Permutation>| {
            let mut v = w.to_vec();
            v.swap(i + 1, i + 2);
            out.insert(Permutation::from_word(v).unwrap());
        };
        // acb -> cab and cab -> acb move the first two letters.
        if (x < z && z < y) || (y < z && z < x) {
            swap_first(&mut out);
        }
        // bac -> bca and bca -> bac move the last two letters.
        if (y < x && x < z) || (z < x && x < y) {
            swap_last(&mut out);
        }
    }
    out
}

/// Knuth equivalence, decided by insertion-tableau equality.
pub fn knuth_equivalent(sigma: &Permutation, tau: &Permutation) -> bool {
    sigma.len() == tau.len() && p_tableau(sigma) == p_tableau(tau)
}

/// Breadth-first closure under Knuth moves.
pub fn knuth_component(start: &Permutation) -> BTreeSet<Permutation> {
    let mut seen = BTreeSet::from([start.clone()]);
    let mut queue = VecDeque::from([start.clone()]);
    while let Some(cur) = queue.pop_front() {
        for next in knuth_neighbors(&cur) {
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    seen
}

/// The Knuth class of an insertion tableau, enumerated as the move-closure of
/// its reading word.
pub fn knuth_class(p: &StandardTableau, limits: &Limits) -> Result<BTreeSet<Permutation>> {
    limits.check(p.size())?;
    Ok(knuth_component(&p.row_word()))
}

/// All permutations whose insertion tableau has the given shape.
pub fn knuth_class_shape(shape: &Partition, limits: &Limits) -> Result<BTreeSet<Permutation>> {
    limits.check(shape.size())?;
    let mut out = BTreeSet::new();
    for t in syt_enumerate(shape) {
        out.extend(knuth_component(&t.row_word()));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::{avoiders, shuffle_set, PatternSet};
    use crate::tableau::syt::{f_lambda, superstandard, Orientation};

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn pt(parts: &[u8]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn neighbors_example() {
        assert!(knuth_neighbors(&p("213")).contains(&p("231")));
        assert!(knuth_neighbors(&p("231")).contains(&p("213")));
        assert!(knuth_neighbors(&Permutation::identity(4)).is_empty());
    }

    #[test]
    fn component_of_213() {
        let class = knuth_component(&p("213"));
        assert_eq!(class, BTreeSet::from([p("213"), p("231")]));
    }

    #[test]
    fn equivalence_is_reflexive_and_matches_bfs() {
        let limits = Limits::default();
        for n in 0..=5 {
            for sigma in avoiders(n, &PatternSet::empty(), &limits).unwrap() {
                assert!(knuth_equivalent(&sigma, &sigma));
                let fiber: BTreeSet<Permutation> = avoiders(n, &PatternSet::empty(), &limits)
                    .unwrap()
                    .into_iter()
                    .filter(|t| p_tableau(t) == p_tableau(&sigma))
                    .collect();
                assert_eq!(knuth_component(&sigma), fiber, "component of {sigma}");
            }
        }
    }

    #[test]
    fn class_of_single_row_is_identity() {
        let limits = Limits::default();
        let t = superstandard(&pt(&[4]), Orientation::Row);
        assert_eq!(
            knuth_class(&t, &limits).unwrap(),
            BTreeSet::from([Permutation::identity(4)])
        );
    }

    #[test]
    fn class_sizes_count_recording_tableaux() {
        let limits = Limits::default();
        for n in 1..=6 {
            for shape in crate::tableau::partition::partitions(n) {
                let f = f_lambda(&shape);
                assert_eq!(
                    knuth_class_shape(&shape, &limits).unwrap().len() as u64,
                    f * f,
                    "shape {shape}"
                );
                for t in syt_enumerate(&shape) {
                    assert_eq!(knuth_class(&t, &limits).unwrap().len() as u64, f);
                }
            }
        }
    }

    #[test]
    fn hook_class_is_a_shuffle() {
        // The class of the row-superstandard hook (r, 1^{s-1}) consists of the
        // shuffles of 1..r-1 with the decreasing word r+s-1..r+1, each
        // followed by r.
        let limits = Limits::default();
        for (r, s) in [(2usize, 2usize), (3, 2), (2, 3), (4, 2), (3, 3)] {
            let shape = Partition::hook(r, s - 1).unwrap();
            let tab = superstandard(&shape, Orientation::Row);
            let class = knuth_class(&tab, &limits).unwrap();
            let head: Vec<u8> = (1..r as u8).collect();
            let tail: Vec<u8> = ((r + 1) as u8..=(r + s - 1) as u8).rev().collect();
            let expected: BTreeSet<Permutation> = shuffle_set(&head, &tail)
                .unwrap()
                .into_iter()
                .map(|mut w| {
                    w.push(r as u8);
                    Permutation::from_word(w).unwrap()
                })
                .collect();
            assert_eq!(class, expected, "hook ({r},1^{})", s - 1);
        }
    }

    #[test]
    fn bound_is_enforced() {
        let limits = Limits::new(3);
        let t = superstandard(&pt(&[4]), Orientation::Row);
        assert!(knuth_class(&t, &limits).is_err());
        assert!(knuth_class_shape(&pt(&[2, 2]), &limits).is_err());
    }
}
