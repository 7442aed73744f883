//! Compositions and exact-integer quasisymmetric/symmetric function algebra
//! in the fundamental, monomial, and Schur bases.

mod fundamental;
mod json;
mod schur;

pub use fundamental::{f_to_m, monomial_sym_to_m, QsymF, QsymM};
pub use json::BasisFunction;
pub use schur::{schur_expand, schur_to_f, SchurExpansion, SchurVector};

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::tableau::Partition;

/// Exact integer coefficients; desk-scale values fit machine words but the
/// contract is arbitrary precision with no overflow.
pub type Coeff = BigInt;

/// A composition: ordered positive parts. The empty composition of 0 is
/// legal.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Composition {
    parts: Vec<u8>,
}

impl Composition {
    pub fn new(parts: Vec<u8>) -> Result<Self> {
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::invalid("composition parts must be positive"));
        }
        Ok(Composition { parts })
    }

    pub fn empty() -> Self {
        Composition { parts: vec![] }
    }

    pub fn parts(&self) -> &[u8] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().map(|&p| p as usize).sum()
    }

    /// The partition obtained by sorting the parts decreasingly.
    pub fn sorted(&self) -> Partition {
        let mut parts = self.parts.clone();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(parts).expect("sorted positive parts form a partition")
    }

    /// True iff the parts are already weakly decreasing.
    pub fn is_partition(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] >= w[1])
    }
}

impl From<&Partition> for Composition {
    fn from(p: &Partition) -> Self {
        Composition {
            parts: p.parts().to_vec(),
        }
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl fmt::Debug for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Prefix sums excluding the total: the subset of [n-1] matching the
/// composition.
pub fn comp_to_set(alpha: &Composition) -> BTreeSet<usize> {
    let mut out = BTreeSet::new();
    let mut sum = 0usize;
    for &p in alpha.parts().iter().take(alpha.parts().len().saturating_sub(1)) {
        sum += p as usize;
        out.insert(sum);
    }
    out
}

/// Inverse of [`comp_to_set`]: requires every element below n.
pub fn set_to_comp(set: &BTreeSet<usize>, n: usize) -> Result<Composition> {
    if set.iter().any(|&s| s == 0 || s >= n) {
        return Err(Error::invalid(format!(
            "subset {set:?} is not contained in [{}]",
            n.saturating_sub(1)
        )));
    }
    let mut parts = Vec::with_capacity(set.len() + 1);
    let mut prev = 0usize;
    for &s in set {
        parts.push((s - prev) as u8);
        prev = s;
    }
    if n > prev {
        parts.push((n - prev) as u8);
    }
    Composition::new(parts)
}

/// True iff `beta` refines `alpha` (every boundary of alpha is one of beta).
pub fn refines(beta: &Composition, alpha: &Composition) -> Result<bool> {
    if beta.size() != alpha.size() {
        return Err(Error::invalid("refinement compares equal degrees only"));
    }
    Ok(comp_to_set(alpha).is_subset(&comp_to_set(beta)))
}

/// All compositions of n, i.e. all 2^(n-1) orderings.
pub fn compositions(n: usize) -> Vec<Composition> {
    if n == 0 {
        return vec![Composition::empty()];
    }
    let mut out = Vec::new();
    let mut parts = Vec::new();
    fn rec(remaining: usize, parts: &mut Vec<u8>, out: &mut Vec<Composition>) {
        if remaining == 0 {
            out.push(Composition {
                parts: parts.clone(),
            });
            return;
        }
        for next in 1..=remaining {
            parts.push(next as u8);
            rec(remaining - next, parts, out);
            parts.pop();
        }
    }
    rec(n, &mut parts, &mut out);
    out
}

/// All refinements of a composition, via supersets of its boundary set.
pub(crate) fn refinements(alpha: &Composition) -> Vec<Composition> {
    let n = alpha.size();
    let fixed = comp_to_set(alpha);
    let free: Vec<usize> = (1..n).filter(|i| !fixed.contains(i)).collect();
    let mut out = Vec::with_capacity(1 << free.len());
    for bits in 0..(1u32 << free.len()) {
        let mut set = fixed.clone();
        for (b, &pos) in free.iter().enumerate() {
            if bits & (1 << b) != 0 {
                set.insert(pos);
            }
        }
        out.push(set_to_comp(&set, n).expect("boundary sets stay within range"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(parts: &[u8]) -> Composition {
        Composition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn set_correspondence_examples() {
        assert_eq!(comp_to_set(&c(&[1, 2])), BTreeSet::from([1]));
        assert_eq!(comp_to_set(&c(&[5])), BTreeSet::new());
        assert_eq!(comp_to_set(&c(&[2, 1, 3])), BTreeSet::from([2, 3]));
        assert_eq!(set_to_comp(&BTreeSet::from([1]), 3).unwrap(), c(&[1, 2]));
        assert_eq!(set_to_comp(&BTreeSet::new(), 0).unwrap(), Composition::empty());
        assert!(set_to_comp(&BTreeSet::from([3]), 3).is_err());
    }

    #[test]
    fn set_correspondence_inverse() {
        for n in 0..=8 {
            for alpha in compositions(n) {
                assert_eq!(set_to_comp(&comp_to_set(&alpha), n).unwrap(), alpha);
            }
        }
    }

    #[test]
    fn refinement_examples() {
        assert!(refines(&c(&[1, 1, 1]), &c(&[1, 2])).unwrap());
        assert!(refines(&c(&[1, 2]), &c(&[1, 2])).unwrap());
        assert!(!refines(&c(&[2, 1]), &c(&[1, 2])).unwrap());
        assert!(refines(&c(&[2, 1]), &c(&[2])).is_err());
    }

    #[test]
    fn refinements_of_coarse() {
        // Everything refines (n).
        assert_eq!(refinements(&c(&[3])).len(), 4);
        assert_eq!(refinements(&c(&[1, 1, 1])).len(), 1);
    }

    #[test]
    fn composition_count() {
        assert_eq!(compositions(0).len(), 1);
        assert_eq!(compositions(5).len(), 16);
    }

    #[test]
    fn sorted_and_partition_check() {
        assert_eq!(c(&[1, 3, 2]).sorted().parts(), &[3, 2, 1]);
        assert!(c(&[3, 2, 2]).is_partition());
        assert!(!c(&[2, 3]).is_partition());
    }
}
