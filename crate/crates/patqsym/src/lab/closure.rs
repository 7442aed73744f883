//! Closure notions on pattern sets: swap closure, i-descent consistency, and
//! pattern-Knuth closure (decided by the finite bound: a set with maximum
//! pattern length M is pattern-Knuth closed iff the avoiders form Knuth-class
//! unions for every n <= M+1).

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use crate::config::Limits;
use crate::error::{Error, Result};
use crate::perm::{avoiders, PatternSet, Permutation};
use crate::tableau::p_tableau;

/// Which closure notion a [`ClosureResult`] reports on.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ClosureKind {
    PatternKnuth,
    Swap,
    IDescentConsistent,
}

/// Outcome of a closure check.
#[derive(Clone, Debug)]
pub struct ClosureResult {
    pub kind: ClosureKind,
    pub holds: bool,
    /// For pattern-Knuth closure, the deciding bound M+1; for the others the
    /// maximum pattern length involved.
    pub bound_used: usize,
    /// Counterexamples, lexicographically smallest first.
    pub witnesses: Vec<String>,
}

/// Single swaps: interchanges of adjacent entries differing by more than 1.
pub fn swap_neighbors(pi: &Permutation) -> BTreeSet<Permutation> {
    let w = pi.word();
    let mut out = BTreeSet::new();
    for i in 0..w.len().saturating_sub(1) {
        if w[i].abs_diff(w[i + 1]) > 1 {
            let mut v = w.to_vec();
            v.swap(i, i + 1);
            out.insert(Permutation::from_word(v).unwrap());
        }
    }
    out
}

/// Breadth-first closure under swaps.
pub fn swap_component(start: &Permutation) -> BTreeSet<Permutation> {
    let mut seen = BTreeSet::from([start.clone()]);
    let mut queue = VecDeque::from([start.clone()]);
    while let Some(cur) = queue.pop_front() {
        for next in swap_neighbors(&cur) {
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    seen
}

/// True iff the set is a union of swap-equivalence classes. Mixed lengths are
/// checked one length at a time, since swaps preserve length.
pub fn is_swap_closed(patterns: &PatternSet) -> ClosureResult {
    let mut result = ClosureResult {
        kind: ClosureKind::Swap,
        holds: true,
        bound_used: patterns.max_len(),
        witnesses: Vec::new(),
    };
    let mut escapes: Vec<(Permutation, Permutation)> = Vec::new();
    for pi in patterns.iter() {
        for tau in swap_neighbors(pi) {
            if !patterns.contains_member(&tau) {
                escapes.push((pi.clone(), tau));
            }
        }
    }
    escapes.sort();
    if let Some((pi, tau)) = escapes.first() {
        result.holds = false;
        result.witnesses.push(format!("{pi} -> {tau}"));
    }
    result
}

/// True iff all members share one inverse-descent set. The empty set and
/// mixed lengths are rejected, matching the all-one-length setting of the
/// closure theorems.
pub fn is_i_descent_consistent(patterns: &PatternSet) -> Result<bool> {
    if patterns.is_empty() {
        return Err(Error::invalid(
            "i-descent consistency is defined for nonempty sets",
        ));
    }
    if !patterns.uniform_length() {
        return Err(Error::invalid(
            "i-descent consistency compares equal lengths only",
        ));
    }
    let mut iter = patterns.iter();
    let first = iter.next().expect("nonempty").ides();
    Ok(iter.all(|p| p.ides() == first))
}

/// Decides pattern-Knuth closure: for every n up to (max pattern length)+1,
/// membership in the avoider set must be constant on each insertion-tableau
/// fiber. The finite bound decides the property for all n.
pub fn is_pattern_knuth_closed(patterns: &PatternSet, limits: &Limits) -> Result<ClosureResult> {
    let bound = patterns.max_len() + 1;
    limits.check(bound)?;
    let mut result = ClosureResult {
        kind: ClosureKind::PatternKnuth,
        holds: true,
        bound_used: bound,
        witnesses: Vec::new(),
    };
    for n in 0..=bound {
        let mut fibers: BTreeMap<_, (Vec<Permutation>, Vec<Permutation>)> = BTreeMap::new();
        for sigma in avoiders(n, &PatternSet::empty(), limits)? {
            let avoids = patterns.avoided_by(&sigma);
            let fiber = fibers.entry(p_tableau(&sigma)).or_default();
            if avoids {
                fiber.0.push(sigma);
            } else {
                fiber.1.push(sigma);
            }
        }
        let mut split_pairs: Vec<(Permutation, Permutation)> = Vec::new();
        for (_, (ins, outs)) in fibers {
            if !ins.is_empty() && !outs.is_empty() {
                split_pairs.push((ins[0].clone(), outs[0].clone()));
            }
        }
        split_pairs.sort();
        if let Some((avoider, partner)) = split_pairs.first() {
            result.holds = false;
            result.witnesses.push(format!(
                "{avoider} avoids but its Knuth-equivalent {partner} does not (n = {n})"
            ));
            return Ok(result);
        }
    }
    Ok(result)
}

/// The permutations of n with the given inverse-descent set.
pub fn inverse_descent_class(
    n: usize,
    j_set: &BTreeSet<usize>,
    limits: &Limits,
) -> Result<BTreeSet<Permutation>> {
    if j_set.iter().any(|&j| j == 0 || j >= n) {
        return Err(Error::invalid(format!(
            "{j_set:?} is not a subset of [{}]",
            n.saturating_sub(1)
        )));
    }
    Ok(avoiders(n, &PatternSet::empty(), limits)?
        .into_iter()
        .filter(|p| &p.ides() == j_set)
        .collect())
}

/// The canonical member of the inverse-descent class: ascending blocks cut at
/// the set's elements, listed from the last block to the first.
pub fn inverse_descent_representative(j_set: &BTreeSet<usize>, n: usize) -> Result<Permutation> {
    if j_set.iter().any(|&j| j == 0 || j >= n) {
        return Err(Error::invalid(format!(
            "{j_set:?} is not a subset of [{}]",
            n.saturating_sub(1)
        )));
    }
    let mut cuts: Vec<usize> = j_set.iter().copied().collect();
    cuts.push(n);
    let mut word = Vec::with_capacity(n);
    let mut upper = n;
    for w in cuts.windows(2).rev() {
        word.extend(w[0] as u8 + 1..=w[1] as u8);
        upper = w[0];
    }
    word.extend(1..=upper as u8);
    Permutation::from_word(word)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tableau::{knuth_class, superstandard, Orientation, Partition};

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn swap_neighbor_examples() {
        assert!(swap_neighbors(&p("3124")).contains(&p("3142")));
        assert!(swap_neighbors(&Permutation::identity(2)).is_empty());
        assert!(swap_neighbors(&Permutation::decreasing(4)).is_empty());
    }

    #[test]
    fn representative_lands_in_its_class() {
        let limits = Limits::default();
        for n in 1..=5usize {
            for bits in 0u32..(1 << (n - 1)) {
                let j_set: BTreeSet<usize> =
                    (1..n).filter(|&j| bits & (1 << (j - 1)) != 0).collect();
                let rep = inverse_descent_representative(&j_set, n).unwrap();
                assert_eq!(rep.ides(), j_set, "rep {rep} for {j_set:?}");
                assert!(inverse_descent_class(n, &j_set, &limits)
                    .unwrap()
                    .contains(&rep));
            }
        }
    }

    #[test]
    fn class_extremes() {
        let limits = Limits::default();
        for n in 1..=5 {
            assert_eq!(
                inverse_descent_class(n, &BTreeSet::new(), &limits).unwrap(),
                BTreeSet::from([Permutation::identity(n)])
            );
            let full: BTreeSet<usize> = (1..n).collect();
            assert_eq!(
                inverse_descent_class(n, &full, &limits).unwrap(),
                BTreeSet::from([Permutation::decreasing(n)])
            );
        }
        assert!(inverse_descent_class(3, &BTreeSet::from([3]), &limits).is_err());
        assert!(inverse_descent_representative(&BTreeSet::from([3]), 3).is_err());
    }

    #[test]
    fn swap_closure_of_inverse_descent_classes() {
        // Each class is a single swap component, so unions of classes are
        // swap closed and proper nonempty subsets are not.
        let limits = Limits::default();
        for n in 1..=5usize {
            for bits in 0u32..(1 << (n - 1)) {
                let j_set: BTreeSet<usize> =
                    (1..n).filter(|&j| bits & (1 << (j - 1)) != 0).collect();
                let class = inverse_descent_class(n, &j_set, &limits).unwrap();
                let rep = inverse_descent_representative(&j_set, n).unwrap();
                assert_eq!(swap_component(&rep), class, "n = {n}, J = {j_set:?}");
                let as_set: PatternSet = class.iter().cloned().collect();
                assert!(is_swap_closed(&as_set).holds);
                if class.len() > 1 {
                    let smaller: PatternSet =
                        class.iter().take(class.len() - 1).cloned().collect();
                    assert!(!is_swap_closed(&smaller).holds);
                }
            }
        }
    }

    #[test]
    fn i_descent_consistency() {
        let limits = Limits::default();
        let hook = superstandard(&Partition::new(vec![2, 1, 1]).unwrap(), Orientation::Row);
        let class: PatternSet = knuth_class(&hook, &limits).unwrap().into_iter().collect();
        assert!(is_i_descent_consistent(&class).unwrap());

        let mixed = PatternSet::new([Permutation::identity(3), Permutation::decreasing(3)]);
        assert!(!is_i_descent_consistent(&mixed).unwrap());

        assert!(is_i_descent_consistent(&PatternSet::singleton(p("25143"))).unwrap());
        assert!(is_i_descent_consistent(&PatternSet::empty()).is_err());
        let lengths = PatternSet::new([p("1"), p("12")]);
        assert!(is_i_descent_consistent(&lengths).is_err());
    }

    #[test]
    fn knuth_closure_of_singleton_increasing() {
        let limits = Limits::default();
        let r = is_pattern_knuth_closed(&PatternSet::singleton(p("123")), &limits).unwrap();
        assert!(r.holds);
        assert_eq!(r.bound_used, 4);
    }

    #[test]
    fn knuth_closure_fails_for_lone_pattern() {
        let limits = Limits::default();
        let r = is_pattern_knuth_closed(&PatternSet::singleton(p("213")), &limits).unwrap();
        assert!(!r.holds);
        assert!(!r.witnesses.is_empty());
        // 213 and 231 are Knuth equivalent but only one is excluded at n = 3.
        assert!(r.witnesses[0].contains("231") || r.witnesses[0].contains("213"));
    }

    #[test]
    fn bound_is_enforced() {
        let limits = Limits::new(3);
        assert!(is_pattern_knuth_closed(&PatternSet::singleton(p("123")), &limits).is_err());
    }
}
