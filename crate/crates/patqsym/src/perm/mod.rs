//! Permutations of `{1..n}`: standardization, descent statistics, the
//! classical symmetry operations, and longest monotone subsequences.
//!
//! Values and positions are 1-indexed throughout the public API; only the
//! I/O layer translates indexing conventions.

mod masked;
mod pattern;

pub use masked::{k_endpoints, mask, EndpointDecomposition, MaskedEntry, MaskedWord};
pub(crate) use masked::endpoint_flags;
pub use pattern::{
    avoiders, contains, contains_witness, non_avoiders, partial_shuffle, shuffle_set, PatternSet,
};
#[doc(hidden)]
pub use pattern::{contains_by_enumeration, position_subsets};

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A permutation of `{1..n}`, stored as its one-line word.
///
/// The empty permutation (n = 0) is legal and acts as the identity of
/// concatenation.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    word: Vec<u8>,
}

impl Permutation {
    /// Builds a permutation from its one-line word, checking that the word is
    /// a bijection on `{1..n}`.
    pub fn from_word(word: Vec<u8>) -> Result<Self> {
        let n = word.len();
        let mut seen = vec![false; n + 1];
        for &v in &word {
            let v = v as usize;
            if v == 0 || v > n || seen[v] {
                return Err(Error::invalid(format!(
                    "word {:?} is not a permutation of 1..{n}",
                    word
                )));
            }
            seen[v] = true;
        }
        Ok(Permutation { word })
    }

    /// The increasing permutation `1 2 ... n`.
    pub fn identity(n: usize) -> Self {
        Permutation {
            word: (1..=n as u8).collect(),
        }
    }

    /// The decreasing permutation `n ... 2 1`.
    pub fn decreasing(n: usize) -> Self {
        Permutation {
            word: (1..=n as u8).rev().collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    pub fn word(&self) -> &[u8] {
        &self.word
    }

    /// Descent set `{i | w_i > w_{i+1}}` as 1-indexed positions in `[n-1]`.
    pub fn descent_set(&self) -> BTreeSet<usize> {
        self.word
            .windows(2)
            .enumerate()
            .filter(|(_, w)| w[0] > w[1])
            .map(|(i, _)| i + 1)
            .collect()
    }

    /// Inverse descent set: `a` is an i-descent iff `a+1` sits to the left of
    /// `a`. Equals the descent set of the inverse.
    pub fn ides(&self) -> BTreeSet<usize> {
        self.inverse().descent_set()
    }

    pub fn reverse(&self) -> Self {
        Permutation {
            word: self.word.iter().rev().copied().collect(),
        }
    }

    /// Complement: value v maps to n+1-v.
    pub fn complement(&self) -> Self {
        let n = self.word.len() as u8;
        Permutation {
            word: self.word.iter().map(|&v| n + 1 - v).collect(),
        }
    }

    pub fn inverse(&self) -> Self {
        let mut word = vec![0u8; self.word.len()];
        for (i, &v) in self.word.iter().enumerate() {
            word[v as usize - 1] = i as u8 + 1;
        }
        Permutation { word }
    }

    /// Lengths of a longest increasing and a longest decreasing subsequence.
    pub fn lis_lds(&self) -> (usize, usize) {
        (self.lis(), self.lds())
    }

    pub fn lis(&self) -> usize {
        longest_monotone(&self.word, |a, b| a < b)
    }

    pub fn lds(&self) -> usize {
        longest_monotone(&self.word, |a, b| a > b)
    }

    /// Deletes the value `m` and standardizes the rest.
    pub fn delete_value(&self, m: u8) -> Result<Permutation> {
        if !self.word.contains(&m) {
            return Err(Error::invalid(format!("value {m} not present in {self}")));
        }
        let rest: Vec<u8> = self.word.iter().copied().filter(|&v| v != m).collect();
        standardize(&rest)
    }

    /// Concatenation of two words on disjoint alphabets, as a raw word. The
    /// caller is responsible for the result being a permutation.
    pub(crate) fn from_word_unchecked(word: Vec<u8>) -> Self {
        debug_assert!(Permutation::from_word(word.clone()).is_ok());
        Permutation { word }
    }
}

fn longest_monotone(word: &[u8], ok: impl Fn(u8, u8) -> bool) -> usize {
    // O(n^2) dynamic program; desk-scale n makes anything fancier pointless.
    let mut best = vec![0usize; word.len()];
    let mut overall = 0;
    for i in 0..word.len() {
        let mut b = 1;
        for j in 0..i {
            if ok(word[j], word[i]) {
                b = b.max(best[j] + 1);
            }
        }
        best[i] = b;
        overall = overall.max(b);
    }
    overall
}

/// Standardization: relabels a sequence of distinct, totally ordered entries
/// order-isomorphically to a permutation of `1..n`.
pub fn standardize<T: PartialOrd>(seq: &[T]) -> Result<Permutation> {
    let mut idx: Vec<usize> = (0..seq.len()).collect();
    let mut bad = false;
    idx.sort_by(|&a, &b| {
        seq[a].partial_cmp(&seq[b]).unwrap_or_else(|| {
            bad = true;
            std::cmp::Ordering::Equal
        })
    });
    if bad {
        return Err(Error::invalid("entries are not totally ordered"));
    }
    for w in idx.windows(2) {
        if seq[w[0]] == seq[w[1]] {
            return Err(Error::invalid("duplicate entries cannot be standardized"));
        }
    }
    let mut word = vec![0u8; seq.len()];
    for (rank, &pos) in idx.iter().enumerate() {
        word[pos] = rank as u8 + 1;
    }
    Ok(Permutation { word })
}

impl fmt::Display for Permutation {
    /// Digit string for n <= 9, comma-separated otherwise.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.len() <= 9 {
            for &v in &self.word {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.word.iter().map(|v| v.to_string()).collect();
            write!(f, "{}", parts.join(","))
        }
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Permutation::identity(0));
        }
        let word: Vec<u8> = if s.contains(',') {
            s.split(',')
                .map(|t| {
                    t.trim()
                        .parse::<u8>()
                        .map_err(|_| Error::Parse(format!("bad entry {t:?} in permutation {s:?}")))
                })
                .collect::<Result<_>>()?
        } else {
            s.chars()
                .map(|c| {
                    c.to_digit(10)
                        .filter(|&d| d > 0)
                        .map(|d| d as u8)
                        .ok_or_else(|| Error::Parse(format!("bad digit {c:?} in permutation {s:?}")))
                })
                .collect::<Result<_>>()?
        };
        Permutation::from_word(word).map_err(|e| Error::Parse(e.to_string()))
    }
}
