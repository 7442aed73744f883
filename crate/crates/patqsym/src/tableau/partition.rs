//! Integer partitions and their Young-diagram geometry.

use std::fmt;

use crate::error::{Error, Result};

/// A partition: weakly decreasing positive parts. The empty partition of 0 is
/// legal.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<u8>,
}

impl Partition {
    pub fn new(parts: Vec<u8>) -> Result<Self> {
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::invalid("partition parts must be positive"));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::invalid("partition parts must be weakly decreasing"));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: vec![] }
    }

    /// Single row (n).
    pub fn row(n: usize) -> Self {
        if n == 0 {
            Partition::empty()
        } else {
            Partition {
                parts: vec![n as u8],
            }
        }
    }

    /// Single column (1^n).
    pub fn column(n: usize) -> Self {
        Partition {
            parts: vec![1; n],
        }
    }

    /// Hook (a, 1^b); a >= 1 unless both are zero.
    pub fn hook(a: usize, b: usize) -> Result<Self> {
        let mut parts = vec![a as u8];
        parts.extend(std::iter::repeat(1).take(b));
        if a == 0 && b == 0 {
            return Ok(Partition::empty());
        }
        Partition::new(parts)
    }

    pub fn parts(&self) -> &[u8] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().map(|&p| p as usize).sum()
    }

    pub fn rows(&self) -> usize {
        self.parts.len()
    }

    /// Length of row i (1-indexed); 0 beyond the last row.
    pub fn row_len(&self, i: usize) -> usize {
        self.parts.get(i - 1).map_or(0, |&p| p as usize)
    }

    /// True iff the diagram has a cell in row i, column j (1-indexed).
    pub fn has_cell(&self, i: usize, j: usize) -> bool {
        i >= 1 && j >= 1 && self.row_len(i) >= j
    }

    /// Reflects the diagram across the main diagonal.
    pub fn transpose(&self) -> Partition {
        let cols = self.row_len(1);
        let parts = (1..=cols)
            .map(|j| self.parts.iter().filter(|&&p| p as usize >= j).count() as u8)
            .collect();
        Partition { parts }
    }

    /// Diagram containment: every row of `other` fits inside this shape.
    pub fn contains(&self, other: &Partition) -> bool {
        (1..=other.rows()).all(|i| self.row_len(i) >= other.row_len(i))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// All partitions of n in lexicographically decreasing order: (n) first,
/// (1^n) last.
pub fn partitions(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut parts: Vec<u8> = Vec::new();
    fn rec(remaining: usize, max: usize, parts: &mut Vec<u8>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition {
                parts: parts.clone(),
            });
            return;
        }
        for next in (1..=remaining.min(max)).rev() {
            parts.push(next as u8);
            rec(remaining - next, next, parts, out);
            parts.pop();
        }
    }
    rec(n, n.max(1), &mut parts, &mut out);
    out
}

/// Number of distinct compositions obtained by rearranging the parts.
pub fn rearrangement_count(p: &Partition) -> u64 {
    let l = p.rows() as u64;
    let mut count = factorial(l);
    let mut run = 1u64;
    for w in p.parts().windows(2) {
        if w[0] == w[1] {
            run += 1;
        } else {
            count /= factorial(run);
            run = 1;
        }
    }
    count / factorial(run)
}

pub(crate) fn factorial(n: u64) -> u64 {
    (2..=n).product::<u64>().max(1)
}
