//! Pattern containment, avoider enumeration, and shuffle-set constructors.

use std::collections::BTreeSet;
use std::fmt;

use rayon::prelude::*;

use crate::config::Limits;
use crate::error::{Error, Result};
use crate::perm::{standardize, Permutation};

/// A finite, deduplicated set of patterns.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Default)]
pub struct PatternSet {
    patterns: BTreeSet<Permutation>,
}

impl PatternSet {
    pub fn new(patterns: impl IntoIterator<Item = Permutation>) -> Self {
        PatternSet {
            patterns: patterns.into_iter().collect(),
        }
    }

    pub fn empty() -> Self {
        PatternSet::default()
    }

    pub fn singleton(p: Permutation) -> Self {
        PatternSet::new([p])
    }

    pub fn iter(&self) -> impl Iterator<Item = &Permutation> {
        self.patterns.iter()
    }

    pub fn len(&self) -> usize {
        self.patterns.len()
    }

    pub fn is_empty(&self) -> bool {
        self.patterns.is_empty()
    }

    pub fn contains_member(&self, p: &Permutation) -> bool {
        self.patterns.contains(p)
    }

    /// Maximum length over members; 0 for the empty set.
    pub fn max_len(&self) -> usize {
        self.patterns.iter().map(|p| p.len()).max().unwrap_or(0)
    }

    /// True when every member has the same length.
    pub fn uniform_length(&self) -> bool {
        let mut lens = self.patterns.iter().map(|p| p.len());
        match lens.next() {
            None => true,
            Some(l) => lens.all(|m| m == l),
        }
    }

    pub fn union(&self, other: &PatternSet) -> PatternSet {
        PatternSet {
            patterns: self.patterns.union(&other.patterns).cloned().collect(),
        }
    }

    pub fn reverse(&self) -> PatternSet {
        PatternSet::new(self.patterns.iter().map(Permutation::reverse))
    }

    pub fn complement(&self) -> PatternSet {
        PatternSet::new(self.patterns.iter().map(Permutation::complement))
    }

    /// True iff `sigma` avoids every member.
    pub fn avoided_by(&self, sigma: &Permutation) -> bool {
        self.patterns.iter().all(|p| !contains(sigma, p))
    }
}

impl fmt::Debug for PatternSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.patterns.iter()).finish()
    }
}

impl fmt::Display for PatternSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.patterns.iter().map(|p| p.to_string()).collect();
        write!(f, "{{{}}}", parts.join(" "))
    }
}

impl FromIterator<Permutation> for PatternSet {
    fn from_iter<I: IntoIterator<Item = Permutation>>(iter: I) -> Self {
        PatternSet::new(iter)
    }
}

/// True iff some subsequence of `sigma` standardizes to `pattern`.
pub fn contains(sigma: &Permutation, pattern: &Permutation) -> bool {
    contains_word(sigma.word(), pattern.word())
}

/// Like [`contains`], but returns the 1-indexed positions of the
/// lexicographically first occurrence found.
pub fn contains_witness(sigma: &Permutation, pattern: &Permutation) -> Option<Vec<usize>> {
    let mut chosen = Vec::with_capacity(pattern.len());
    if search(sigma.word(), pattern.word(), &mut chosen) {
        Some(chosen.iter().map(|&i| i + 1).collect())
    } else {
        None
    }
}

pub(crate) fn contains_word(sigma: &[u8], pattern: &[u8]) -> bool {
    let mut chosen = Vec::with_capacity(pattern.len());
    search(sigma, pattern, &mut chosen)
}

// Backtracking over positions with remaining-length pruning. The candidate at
// slot j must sit between the values already chosen for the pattern entries
// adjacent to pattern[j] in value order.
fn search(sigma: &[u8], pattern: &[u8], chosen: &mut Vec<usize>) -> bool {
    let k = pattern.len();
    if chosen.len() == k {
        return true;
    }
    let j = chosen.len();
    let start = chosen.last().map_or(0, |&i| i + 1);
    // Tightest value window implied by the already-matched entries.
    let mut lo = 0u8;
    let mut hi = u8::MAX;
    for (t, &pos) in chosen.iter().enumerate() {
        if pattern[t] < pattern[j] {
            lo = lo.max(sigma[pos]);
        } else {
            hi = hi.min(sigma[pos]);
        }
    }
    for i in start..sigma.len() {
        if sigma.len() - i < k - j {
            break;
        }
        if sigma[i] > lo && sigma[i] < hi {
            chosen.push(i);
            if search(sigma, pattern, chosen) {
                return true;
            }
            chosen.pop();
        }
    }
    false
}

/// All permutations in S_n avoiding every pattern in `patterns`, in
/// lexicographic order.
pub fn avoiders(n: usize, patterns: &PatternSet, limits: &Limits) -> Result<Vec<Permutation>> {
    filtered_sn(n, patterns, limits, false)
}

/// Complement enumerator: the permutations in S_n containing some pattern.
pub fn non_avoiders(n: usize, patterns: &PatternSet, limits: &Limits) -> Result<Vec<Permutation>> {
    filtered_sn(n, patterns, limits, true)
}

fn filtered_sn(
    n: usize,
    patterns: &PatternSet,
    limits: &Limits,
    complement: bool,
) -> Result<Vec<Permutation>> {
    limits.check(n)?;
    if n == 0 {
        let empty = Permutation::identity(0);
        let keep = patterns.avoided_by(&empty) != complement;
        return Ok(if keep { vec![empty] } else { vec![] });
    }
    // Split by first value; chunks are enumerated lexicographically and merged
    // in order, so thread count never changes the output.
    let chunks: Vec<Vec<Permutation>> = (1..=n as u8)
        .collect::<Vec<_>>()
        .par_iter()
        .map(|&first| {
            let rest: Vec<u8> = (1..=n as u8).filter(|&v| v != first).collect();
            let mut out = Vec::new();
            let mut word = Vec::with_capacity(n);
            word.push(first);
            lex_words(&mut word, rest, &mut |w| {
                if patterns.iter().any(|p| contains_word(w, p.word())) == complement {
                    out.push(Permutation::from_word_unchecked(w.to_vec()));
                }
            });
            out
        })
        .collect();
    Ok(chunks.into_iter().flatten().collect())
}

fn lex_words(word: &mut Vec<u8>, remaining: Vec<u8>, visit: &mut impl FnMut(&[u8])) {
    if remaining.is_empty() {
        visit(word);
        return;
    }
    for (i, &v) in remaining.iter().enumerate() {
        let mut rest = remaining.clone();
        rest.remove(i);
        word.push(v);
        lex_words(word, rest, visit);
        word.pop();
    }
}

/// All interleavings of two words on disjoint alphabets.
pub fn shuffle_set(u: &[u8], v: &[u8]) -> Result<BTreeSet<Vec<u8>>> {
    if u.iter().any(|a| v.contains(a)) {
        return Err(Error::invalid("shuffle operands share values"));
    }
    let mut out = BTreeSet::new();
    let mut buf = Vec::with_capacity(u.len() + v.len());
    shuffle_rec(u, v, &mut buf, &mut out);
    Ok(out)
}

fn shuffle_rec(u: &[u8], v: &[u8], buf: &mut Vec<u8>, out: &mut BTreeSet<Vec<u8>>) {
    if u.is_empty() && v.is_empty() {
        out.insert(buf.clone());
        return;
    }
    if let Some((&x, rest)) = u.split_first() {
        buf.push(x);
        shuffle_rec(rest, v, buf, out);
        buf.pop();
    }
    if let Some((&y, rest)) = v.split_first() {
        buf.push(y);
        shuffle_rec(u, rest, buf, out);
        buf.pop();
    }
}

/// Partial shuffle of a word with a single letter: every interleaving of `u`
/// with `a`, minus the identity permutation. Requires `u` together with `a`
/// to cover `{1..n}` exactly.
pub fn partial_shuffle(u: &[u8], a: u8) -> Result<PatternSet> {
    if u.contains(&a) {
        return Err(Error::invalid("inserted letter already occurs in the word"));
    }
    let n = u.len() + 1;
    let mut cover: Vec<u8> = u.to_vec();
    cover.push(a);
    cover.sort_unstable();
    if cover != (1..=n as u8).collect::<Vec<_>>() {
        return Err(Error::invalid(format!(
            "word plus letter {a} must cover 1..{n}"
        )));
    }
    let identity = Permutation::identity(n);
    let shuffles = shuffle_set(u, &[a])?;
    Ok(shuffles
        .into_iter()
        .map(Permutation::from_word)
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .filter(|p| *p != identity)
        .collect())
}

/// Test-only oracle: containment by exhaustive subsequence enumeration.
#[doc(hidden)]
pub fn contains_by_enumeration(sigma: &Permutation, pattern: &Permutation) -> bool {
    let n = sigma.len();
    let k = pattern.len();
    if k > n {
        return false;
    }
    subsets(n, k).into_iter().any(|positions| {
        let sub: Vec<u8> = positions.iter().map(|&i| sigma.word()[i]).collect();
        standardize(&sub).unwrap() == *pattern
    })
}

pub(crate) fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn containment_examples() {
        assert!(contains(&p("25143"), &p("132")));
        assert!(!contains(&p("25143"), &p("123")));
        let q = p("25143");
        assert!(contains(&q, &q));
        assert!(contains(&q, &Permutation::identity(0)));
        assert!(!contains(&Permutation::identity(2), &p("123")));
    }

    #[test]
    fn witness_positions_standardize_to_pattern() {
        let sigma = p("25143");
        let pat = p("132");
        let w = contains_witness(&sigma, &pat).unwrap();
        let sub: Vec<u8> = w.iter().map(|&i| sigma.word()[i - 1]).collect();
        assert_eq!(standardize(&sub).unwrap(), pat);
        assert!(contains_witness(&sigma, &p("123")).is_none());
    }

    #[test]
    fn avoiders_examples() {
        let limits = Limits::default();
        let avoid123 = avoiders(3, &PatternSet::singleton(p("123")), &limits).unwrap();
        let expect: Vec<Permutation> = ["132", "213", "231", "312", "321"]
            .iter()
            .map(|s| p(s))
            .collect();
        assert_eq!(avoid123, expect);

        let all = avoiders(4, &PatternSet::empty(), &limits).unwrap();
        assert_eq!(all.len(), 24);
        // Lexicographic enumeration order.
        assert_eq!(all[0], p("1234"));
        assert_eq!(all[23], p("4321"));

        let none = avoiders(3, &PatternSet::singleton(p("1")), &limits).unwrap();
        assert!(none.is_empty());

        let containing = non_avoiders(3, &PatternSet::singleton(p("123")), &limits).unwrap();
        assert_eq!(containing, vec![p("123")]);
    }

    #[test]
    fn avoiders_respects_bound() {
        let limits = Limits::new(3);
        assert!(avoiders(4, &PatternSet::empty(), &limits).is_err());
    }

    #[test]
    fn shuffle_counts_are_binomial() {
        let s = shuffle_set(&[1, 2], &[5, 4]).unwrap();
        assert_eq!(s.len(), 6);
        assert!(shuffle_set(&[1, 2], &[2, 3]).is_err());
    }

    #[test]
    fn partial_shuffle_example() {
        let ps = partial_shuffle(&[1, 2], 3).unwrap();
        assert_eq!(ps, PatternSet::new([p("312"), p("132")]));
        assert!(partial_shuffle(&[1, 3], 5).is_err());
        // |u shuffle a| - 1 = |u| + 1 - 1.
        let ps = partial_shuffle(&[1, 2, 3, 5], 4).unwrap();
        assert_eq!(ps.len(), 4);
    }

    #[test]
    fn containment_monotone_under_supersequence() {
        // If a subsequence contains the pattern, so does the whole word.
        let sigma = p("416253");
        let pat = p("132");
        for positions in subsets(sigma.len(), 4) {
            let sub: Vec<u8> = positions.iter().map(|&i| sigma.word()[i]).collect();
            let tau = standardize(&sub).unwrap();
            if contains(&tau, &pat) {
                assert!(contains(&sigma, &pat));
            }
        }
    }
}
