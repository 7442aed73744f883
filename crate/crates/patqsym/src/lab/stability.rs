//! Stability: equal avoider sets at one sufficiently large size persist for
//! every larger size.

use crate::config::Limits;
use crate::error::{Error, Result};
use crate::lab::VerificationReport;
use crate::perm::{avoiders, PatternSet};
use crate::tableau::{knuth_class_shape, p_tableau, Partition, StandardTableau};

/// Compares the avoider sets of two pattern sets at size N. Equality at any
/// N at least the maximum pattern length persists for every n >= N, so a
/// passing report certifies the unbounded statement; a failing one carries
/// the smallest distinguishing permutation.
pub fn stability_check(
    a: &PatternSet,
    b: &PatternSet,
    n: usize,
    limits: &Limits,
) -> Result<VerificationReport> {
    let max_len = a.max_len().max(b.max_len());
    if n < max_len {
        return Err(Error::invalid(format!(
            "stability requires N >= {max_len}, got {n}"
        )));
    }
    let mut report = VerificationReport::new("stability")
        .param("n", n)
        .param("lhs", a)
        .param("rhs", b);
    let left = avoiders(n, a, limits)?;
    let right = avoiders(n, b, limits)?;
    report.count((left.len() + right.len()) as u64);
    // Both lists are lexicographically sorted; the first symmetric-difference
    // element is the smallest witness.
    let left: std::collections::BTreeSet<_> = left.into_iter().collect();
    let right: std::collections::BTreeSet<_> = right.into_iter().collect();
    if let Some(w) = left.symmetric_difference(&right).next() {
        let side = if left.contains(w) { "lhs" } else { "rhs" };
        report.fail(format!("{w} avoids {side} only at n = {n}"));
    }
    Ok(report)
}

/// The punctured class used by the stability counterexample: every
/// permutation whose insertion tableau has shape (3,1,1) except the class of
/// the tableau with rows 124 / 3 / 5.
pub fn pi_zero(limits: &Limits) -> Result<PatternSet> {
    let shape = Partition::new(vec![3, 1, 1])?;
    let excluded =
        StandardTableau::new(vec![vec![1, 2, 4], vec![3], vec![5]]).expect("valid tableau");
    let patterns: PatternSet = knuth_class_shape(&shape, limits)?
        .into_iter()
        .filter(|p| p_tableau(p) != excluded)
        .collect();
    Ok(patterns)
}
