//! Masked words and the endpoint machinery behind the partial-shuffle
//! bijections.
//!
//! Masking replaces a chosen subsequence with an infinity symbol that compares
//! strictly greater than every finite entry but not greater than itself.
//! Masked words keep the original values of the surviving entries.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// One entry of a masked word. The derived order puts infinity above every
/// finite value; descent logic uses [`MaskedEntry::strictly_greater`], under
/// which infinity does not exceed itself.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum MaskedEntry {
    Value(u8),
    Inf,
}

impl MaskedEntry {
    /// The strict comparison used for descents: `Inf > finite` holds,
    /// `Inf > Inf` does not.
    fn strictly_greater(self, other: MaskedEntry) -> bool {
        match (self, other) {
            (MaskedEntry::Inf, MaskedEntry::Inf) => false,
            (MaskedEntry::Inf, MaskedEntry::Value(_)) => true,
            (MaskedEntry::Value(_), MaskedEntry::Inf) => false,
            (MaskedEntry::Value(a), MaskedEntry::Value(b)) => a > b,
        }
    }
}

/// A word whose entries are distinct finite values or the infinity symbol.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MaskedWord {
    entries: Vec<MaskedEntry>,
}

impl MaskedWord {
    pub fn new(entries: Vec<MaskedEntry>) -> Result<Self> {
        let mut seen = BTreeSet::new();
        for e in &entries {
            if let MaskedEntry::Value(v) = e {
                if !seen.insert(*v) {
                    return Err(Error::invalid("finite entries of a masked word must be distinct"));
                }
            }
        }
        Ok(MaskedWord { entries })
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[MaskedEntry] {
        &self.entries
    }

    /// 1-indexed positions of the infinity entries.
    pub fn inf_positions(&self) -> Vec<usize> {
        self.entries
            .iter()
            .enumerate()
            .filter(|(_, e)| matches!(e, MaskedEntry::Inf))
            .map(|(i, _)| i + 1)
            .collect()
    }

    /// The finite entries in position order.
    pub fn finite_values(&self) -> Vec<u8> {
        self.entries
            .iter()
            .filter_map(|e| match e {
                MaskedEntry::Value(v) => Some(*v),
                MaskedEntry::Inf => None,
            })
            .collect()
    }

    /// Descents: position i is a descent iff entry i is strictly greater than
    /// entry i+1 under the infinity ordering.
    pub fn descent_set(&self) -> BTreeSet<usize> {
        self.entries
            .windows(2)
            .enumerate()
            .filter(|(_, w)| w[0].strictly_greater(w[1]))
            .map(|(i, _)| i + 1)
            .collect()
    }

    /// Replaces each infinity with the supplied values, in position order.
    pub fn fill(&self, values: &[u8]) -> Result<Permutation> {
        let slots = self.inf_positions().len();
        if values.len() != slots {
            return Err(Error::invalid(format!(
                "{} values supplied for {slots} infinity slots",
                values.len()
            )));
        }
        let mut next = values.iter();
        let word: Vec<u8> = self
            .entries
            .iter()
            .map(|e| match e {
                MaskedEntry::Value(v) => *v,
                MaskedEntry::Inf => *next.next().unwrap(),
            })
            .collect();
        Permutation::from_word(word)
    }
}

impl fmt::Display for MaskedWord {
    /// Infinity renders as `*`; layout follows the permutation text form.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.entries.len() <= 9 {
            for e in &self.entries {
                match e {
                    MaskedEntry::Value(v) => write!(f, "{v}")?,
                    MaskedEntry::Inf => write!(f, "*")?,
                }
            }
            Ok(())
        } else {
            let parts: Vec<String> = self
                .entries
                .iter()
                .map(|e| match e {
                    MaskedEntry::Value(v) => v.to_string(),
                    MaskedEntry::Inf => "*".to_string(),
                })
                .collect();
            write!(f, "{}", parts.join(","))
        }
    }
}

impl fmt::Debug for MaskedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Masks the values of `tau` inside `sigma`. `tau` is given by its values;
/// every value must occur in `sigma`.
pub fn mask(sigma: &Permutation, tau: &[u8]) -> Result<MaskedWord> {
    let masked: BTreeSet<u8> = tau.iter().copied().collect();
    for &v in tau {
        if !sigma.word().contains(&v) {
            return Err(Error::invalid(format!(
                "value {v} is not an entry of {sigma}"
            )));
        }
    }
    MaskedWord::new(
        sigma
            .word()
            .iter()
            .map(|&v| {
                if masked.contains(&v) {
                    MaskedEntry::Inf
                } else {
                    MaskedEntry::Value(v)
                }
            })
            .collect(),
    )
}

/// 1-indexed positions ending an occurrence of the increasing pattern of
/// length k.
pub fn k_endpoints(sigma: &Permutation, k: usize) -> BTreeSet<usize> {
    assert!(k >= 1, "k-endpoints need k >= 1");
    endpoint_flags(sigma.word(), k)
        .into_iter()
        .enumerate()
        .filter(|(_, is)| *is)
        .map(|(i, _)| i + 1)
        .collect()
}

// A position ends an increasing subsequence of length >= k iff the longest
// increasing subsequence ending there has length >= k.
pub(crate) fn endpoint_flags(word: &[u8], k: usize) -> Vec<bool> {
    let mut inc = vec![1usize; word.len()];
    for i in 0..word.len() {
        for j in 0..i {
            if word[j] < word[i] {
                inc[i] = inc[i].max(inc[j] + 1);
            }
        }
    }
    inc.into_iter().map(|l| l >= k).collect()
}

/// The endpoint decomposition of a permutation for a fixed k: the subsequence
/// of k-endpoints, its left-to-right minima, the remaining endpoints, and the
/// grouping of those by the minimum they follow. All subsequences are given
/// by their values in position order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EndpointDecomposition {
    /// Values of all k-endpoints in position order.
    pub endpoints: Vec<u8>,
    /// Left-to-right minima of the endpoint subsequence.
    pub minima: Vec<u8>,
    /// Endpoints that are not minima.
    pub rest: Vec<u8>,
    /// `rest` split by which minimum precedes each element positionally;
    /// block i collects the elements between minima i and i+1.
    pub blocks: Vec<Vec<u8>>,
}

impl EndpointDecomposition {
    pub fn compute(sigma: &Permutation, k: usize) -> Self {
        let word = sigma.word();
        let flags = endpoint_flags(word, k);
        let mut endpoints = Vec::new();
        let mut positions = Vec::new();
        for (i, &v) in word.iter().enumerate() {
            if flags[i] {
                endpoints.push(v);
                positions.push(i);
            }
        }
        let mut minima = Vec::new();
        let mut minima_pos = Vec::new();
        let mut min_so_far = u8::MAX;
        for (&v, &pos) in endpoints.iter().zip(&positions) {
            if v < min_so_far {
                min_so_far = v;
                minima.push(v);
                minima_pos.push(pos);
            }
        }
        let mut rest = Vec::new();
        let mut blocks = vec![Vec::new(); minima.len()];
        for (&v, &pos) in endpoints.iter().zip(&positions) {
            if minima.contains(&v) {
                continue;
            }
            rest.push(v);
            // The first endpoint is always a minimum, so pos exceeds
            // minima_pos[0] and partition_point is at least 1.
            let block = minima_pos.partition_point(|&mp| mp < pos) - 1;
            blocks[block].push(v);
        }
        EndpointDecomposition {
            endpoints,
            minima,
            rest,
            blocks,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn mask_example() {
        let m = mask(&p("7415326"), &[7, 4, 5]).unwrap();
        assert_eq!(m.to_string(), "**1*326");
        assert_eq!(m.descent_set(), BTreeSet::from([2, 4, 5]));
    }

    #[test]
    fn mask_edge_cases() {
        let sigma = p("25143");
        assert_eq!(
            mask(&sigma, &[]).unwrap().descent_set(),
            sigma.descent_set()
        );
        let all = mask(&sigma, sigma.word()).unwrap();
        assert_eq!(all.to_string(), "*****");
        assert!(all.descent_set().is_empty(), "Inf > Inf is false");
        assert!(mask(&sigma, &[9]).is_err());
    }

    #[test]
    fn fill_round_trip() {
        let sigma = p("7415326");
        let m = mask(&sigma, &[7, 4, 5]).unwrap();
        assert_eq!(m.fill(&[7, 4, 5]).unwrap(), sigma);
        assert!(m.fill(&[7]).is_err());
    }

    #[test]
    fn endpoints_examples() {
        let sigma = p("7415326");
        assert_eq!(
            k_endpoints(&sigma, 1),
            (1..=7).collect::<BTreeSet<_>>(),
            "every position is a 1-endpoint"
        );
        assert_eq!(k_endpoints(&sigma, 3), BTreeSet::from([7]));
        assert!(k_endpoints(&p("321"), 2).is_empty());
    }

    #[test]
    fn decomposition_of_identity() {
        let d = EndpointDecomposition::compute(&Permutation::identity(5), 1);
        assert_eq!(d.endpoints, vec![1, 2, 3, 4, 5]);
        assert_eq!(d.minima, vec![1]);
        assert_eq!(d.rest, vec![2, 3, 4, 5]);
        assert_eq!(d.blocks, vec![vec![2, 3, 4, 5]]);
    }

    #[test]
    fn decomposition_without_occurrence() {
        let d = EndpointDecomposition::compute(&p("321"), 2);
        assert!(d.endpoints.is_empty());
        assert!(d.minima.is_empty());
        assert!(d.rest.is_empty());
        assert!(d.blocks.is_empty());
    }
}
