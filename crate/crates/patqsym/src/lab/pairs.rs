//! Single Knuth classes and unions of two: the four equivalent
//! characterizations of pattern-Knuth closure, and the two parametric
//! families of tableau pairs whose classes jointly fill an inverse-descent
//! class.

use std::collections::BTreeSet;

use crate::config::Limits;
use crate::error::{Error, Result};
use crate::lab::closure::{
    inverse_descent_class, is_pattern_knuth_closed, is_swap_closed,
};
use crate::perm::{PatternSet, Permutation};
use crate::tableau::{
    knuth_class, partitions, superstandard, syt_all, Orientation, StandardTableau,
};

/// Constructs the two displayed families of descent-complete pairs, together
/// with their transposes, deduplicated as unordered pairs.
///
/// Family one (parameter 2 <= j <= n-2): first row 1..j then n, against the
/// same hook with n dropped into the second row. Family two (4 <= j <= n):
/// first row 1, 2, j..n with column 3..j-1, against the variant with j moved
/// into the second row.
pub fn descent_complete_pairs(n: usize) -> Vec<(StandardTableau, StandardTableau)> {
    assert!(n >= 4, "descent-complete pairs need n >= 4");
    let mut pairs: BTreeSet<(StandardTableau, StandardTableau)> = BTreeSet::new();
    let mut push = |s: StandardTableau, t: StandardTableau| {
        let (a, b) = if s <= t { (s, t) } else { (t, s) };
        pairs.insert((a, b));
    };

    for j in 2..=n.saturating_sub(2) {
        let (s, t) = family_one(n, j);
        push(s.transpose(), t.transpose());
        push(s, t);
    }
    for j in 4..=n {
        let (s, t) = family_two(n, j);
        push(s.transpose(), t.transpose());
        push(s, t);
    }
    pairs.into_iter().collect()
}

fn family_one(n: usize, j: usize) -> (StandardTableau, StandardTableau) {
    let mut s_rows: Vec<Vec<u8>> = Vec::new();
    let mut top: Vec<u8> = (1..=j as u8).collect();
    top.push(n as u8);
    s_rows.push(top);
    for v in (j + 1)..n {
        s_rows.push(vec![v as u8]);
    }
    let s = StandardTableau::new(s_rows).expect("family-one first tableau is standard");

    let mut t_rows: Vec<Vec<u8>> = vec![(1..=j as u8).collect(), vec![(j + 1) as u8, n as u8]];
    for v in (j + 2)..n {
        t_rows.push(vec![v as u8]);
    }
    let t = StandardTableau::new(t_rows).expect("family-one second tableau is standard");
    (s, t)
}

fn family_two(n: usize, j: usize) -> (StandardTableau, StandardTableau) {
    let mut top: Vec<u8> = vec![1, 2];
    top.extend(j as u8..=n as u8);
    let mut s_rows = vec![top];
    for v in 3..j {
        s_rows.push(vec![v as u8]);
    }
    let s = StandardTableau::new(s_rows).expect("family-two first tableau is standard");

    let mut top: Vec<u8> = vec![1, 2];
    top.extend((j + 1) as u8..=n as u8);
    let mut t_rows = vec![top, vec![3, j as u8]];
    for v in 4..j {
        t_rows.push(vec![v as u8]);
    }
    let t = StandardTableau::new(t_rows).expect("family-two second tableau is standard");
    (s, t)
}

/// Descent sets realized by superstandard hooks of size n: the empty set, the
/// prefix intervals, and the suffix intervals of [n-1]. These are the only
/// descent sets a lone Knuth class can fill completely.
pub fn superstandard_hook_descents(n: usize) -> BTreeSet<BTreeSet<usize>> {
    let mut out = BTreeSet::new();
    for a in 1..=n {
        let b = n - a;
        let shape = crate::tableau::Partition::hook(a, b).expect("hook shape");
        out.insert(superstandard(&shape, Orientation::Row).descent_set());
        out.insert(superstandard(&shape, Orientation::Column).descent_set());
    }
    if n == 0 {
        out.insert(BTreeSet::new());
    }
    out
}

/// Descent sets realized by the descent-complete pair families at size n.
pub fn pair_family_descents(n: usize) -> BTreeSet<BTreeSet<usize>> {
    descent_complete_pairs(n)
        .into_iter()
        .map(|(s, _)| s.descent_set())
        .collect()
}

/// The four equivalent conditions evaluated on a single Knuth class or a
/// union of two, with the pattern set they describe.
#[derive(Clone, Debug)]
pub struct UnionClassification {
    pub patterns: PatternSet,
    pub pattern_knuth_closed: bool,
    pub swap_closed: bool,
    /// The union fills whole inverse-descent classes of the admissible forms.
    pub inverse_descent_form: bool,
    /// Superstandard hooks (single or distinct pair), or a displayed pair.
    pub structural_form: bool,
}

impl UnionClassification {
    pub fn all_agree(&self) -> bool {
        let v = self.pattern_knuth_closed;
        self.swap_closed == v && self.inverse_descent_form == v && self.structural_form == v
    }
}

/// Evaluates the four conditions for one tableau or an unordered pair.
pub fn classify_knuth_union(
    tableaux: &[StandardTableau],
    limits: &Limits,
) -> Result<UnionClassification> {
    let (s, t) = match tableaux {
        [s] => (s, None),
        [s, t] => {
            if s.size() != t.size() {
                return Err(Error::invalid("pair tableaux must have equal size"));
            }
            if s == t {
                return Err(Error::invalid("pair tableaux must be distinct"));
            }
            (s, Some(t))
        }
        _ => return Err(Error::invalid("classification takes one or two tableaux")),
    };
    let n = s.size();

    let mut patterns: PatternSet = knuth_class(s, limits)?.into_iter().collect();
    if let Some(t) = t {
        patterns = patterns.union(&knuth_class(t, limits)?.into_iter().collect());
    }

    let pattern_knuth_closed = is_pattern_knuth_closed(&patterns, limits)?.holds;
    let swap_closed = is_swap_closed(&patterns).holds;

    let member_set: BTreeSet<Permutation> = patterns.iter().cloned().collect();
    let hook_forms = superstandard_hook_descents(n);
    let inverse_descent_form = match t {
        None => {
            let j = s.descent_set();
            hook_forms.contains(&j) && inverse_descent_class(n, &j, limits)? == member_set
        }
        Some(t) => {
            let j = s.descent_set();
            let l = t.descent_set();
            if j != l {
                // Distinct inverse-descent classes are disjoint, so union
                // equality already forces each class to be filled exactly.
                hook_forms.contains(&j) && hook_forms.contains(&l) && {
                    let mut union = inverse_descent_class(n, &j, limits)?;
                    union.extend(inverse_descent_class(n, &l, limits)?);
                    union == member_set
                }
            } else {
                pair_family_descents(n).contains(&j)
                    && inverse_descent_class(n, &j, limits)? == member_set
            }
        }
    };

    let structural_form = match t {
        None => s.is_superstandard_hook(),
        Some(t) => {
            let both_hooks = s.is_superstandard_hook() && t.is_superstandard_hook();
            let listed = n >= 4
                && descent_complete_pairs(n)
                    .iter()
                    .any(|(a, b)| (a == s && b == t) || (a == t && b == s));
            both_hooks || listed
        }
    };

    Ok(UnionClassification {
        patterns,
        pattern_knuth_closed,
        swap_closed,
        inverse_descent_form,
        structural_form,
    })
}

/// Exhaustive search for the descent-complete pairs at size n: all unordered
/// tableau pairs whose classes exactly fill one inverse-descent class.
#[doc(hidden)]
pub fn descent_complete_pairs_by_search(
    n: usize,
    limits: &Limits,
) -> Result<Vec<(StandardTableau, StandardTableau)>> {
    let all = syt_all(n);
    let mut out = Vec::new();
    for (i, s) in all.iter().enumerate() {
        for t in &all[i + 1..] {
            if s.descent_set() != t.descent_set() {
                continue;
            }
            let mut union: BTreeSet<Permutation> = knuth_class(s, limits)?;
            union.extend(knuth_class(t, limits)?);
            if union == inverse_descent_class(n, &s.descent_set(), limits)? {
                let (a, b) = if s <= t {
                    (s.clone(), t.clone())
                } else {
                    (t.clone(), s.clone())
                };
                out.push((a, b));
            }
        }
    }
    out.sort();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tab(rows: &[&[u8]]) -> StandardTableau {
        StandardTableau::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    #[test]
    fn family_one_example() {
        let (s, t) = family_one(4, 2);
        assert_eq!(s, tab(&[&[1, 2, 4], &[3]]));
        assert_eq!(t, tab(&[&[1, 2], &[3, 4]]));
        assert_eq!(s.descent_set(), BTreeSet::from([2]));
        assert_eq!(t.descent_set(), BTreeSet::from([2]));
    }

    #[test]
    fn family_two_example() {
        let (s, t) = family_two(5, 4);
        assert_eq!(s, tab(&[&[1, 2, 4, 5], &[3]]));
        assert_eq!(t, tab(&[&[1, 2, 5], &[3, 4]]));
        assert_eq!(s.descent_set(), BTreeSet::from([2]));
        assert_eq!(t.descent_set(), BTreeSet::from([2]));
    }

    #[test]
    fn emitted_pairs_share_descents() {
        for n in 4..=6 {
            for (s, t) in descent_complete_pairs(n) {
                assert_ne!(s, t);
                assert_eq!(s.descent_set(), t.descent_set(), "{s:?} vs {t:?}");
            }
        }
    }

    #[test]
    fn pairs_fill_their_inverse_descent_class() {
        let limits = Limits::default();
        for n in 4..=6 {
            for (s, t) in descent_complete_pairs(n) {
                let mut union = knuth_class(&s, &limits).unwrap();
                union.extend(knuth_class(&t, &limits).unwrap());
                assert_eq!(
                    union,
                    inverse_descent_class(n, &s.descent_set(), &limits).unwrap(),
                    "pair {s:?}, {t:?}"
                );
            }
        }
    }

    #[test]
    fn search_reproduces_the_constructed_list() {
        let limits = Limits::default();
        for n in 4..=5 {
            assert_eq!(
                descent_complete_pairs(n),
                descent_complete_pairs_by_search(n, &limits).unwrap(),
                "n = {n}"
            );
        }
    }

    #[test]
    fn hook_descent_forms_are_intervals() {
        let forms = superstandard_hook_descents(5);
        assert!(forms.contains(&BTreeSet::new()));
        assert!(forms.contains(&BTreeSet::from([1, 2, 3, 4])));
        assert!(forms.contains(&BTreeSet::from([3, 4])));
        assert!(forms.contains(&BTreeSet::from([1, 2])));
        assert!(!forms.contains(&BTreeSet::from([2])));
        assert!(!forms.contains(&BTreeSet::from([1, 3])));
    }

    #[test]
    fn classify_superstandard_hook() {
        let limits = Limits::default();
        let hook = superstandard(
            &crate::tableau::Partition::hook(2, 2).unwrap(),
            Orientation::Row,
        );
        let c = classify_knuth_union(std::slice::from_ref(&hook), &limits).unwrap();
        assert!(c.pattern_knuth_closed);
        assert!(c.swap_closed);
        assert!(c.inverse_descent_form);
        assert!(c.structural_form);
        assert!(c.all_agree());
    }

    #[test]
    fn classify_rejects_bad_input() {
        let limits = Limits::default();
        let a = tab(&[&[1, 2]]);
        let b = tab(&[&[1], &[2]]);
        let c = tab(&[&[1, 2, 3]]);
        assert!(classify_knuth_union(&[], &limits).is_err());
        assert!(classify_knuth_union(&[a.clone(), a.clone()], &limits).is_err());
        assert!(classify_knuth_union(&[a, c], &limits).is_err());
        drop(b);
    }

    #[test]
    fn classify_non_superstandard_tableau() {
        let limits = Limits::default();
        let p0 = tab(&[&[1, 2, 4], &[3], &[5]]);
        let c = classify_knuth_union(std::slice::from_ref(&p0), &limits).unwrap();
        assert!(!c.pattern_knuth_closed);
        assert!(!c.swap_closed);
        assert!(!c.inverse_descent_form);
        assert!(!c.structural_form);
        assert!(c.all_agree());
    }
}
