//! The avoidance lab: Q_n(Pi), the closed-form Schur sums it is compared
//! against, and bounded-range checkers for every headline identity, packaged
//! as [`VerificationReport`]s behind stable claim names.

mod claims;
mod closure;
mod pairs;
mod shuffles;
mod stability;
mod survey;

pub use claims::{claim_ids, run_claim, ClaimParams};
pub use closure::{
    inverse_descent_class, inverse_descent_representative, is_i_descent_consistent,
    is_pattern_knuth_closed, is_swap_closed, swap_component, swap_neighbors, ClosureKind,
    ClosureResult,
};
pub use pairs::{classify_knuth_union, descent_complete_pairs, UnionClassification};
pub use shuffles::{
    block_interval_mask, block_interval_unmask, fattened_hook_sum, fattened_hooks, lambda_bar,
    partial_shuffle_family, partial_shuffle_general, tail_interval_mask, tail_interval_unmask,
};
pub use stability::{pi_zero, stability_check};
pub use survey::{survey_symmetric_sets, SurveyOptions, SurveyStats};

use std::collections::BTreeMap;

use serde::Serialize;

use crate::config::Limits;
use crate::error::Result;
use crate::perm::{avoiders, PatternSet};
use crate::qsym::{set_to_comp, Coeff, QsymF, SchurVector};
use crate::tableau::{f_lambda, partitions, Partition};

/// Outcome of one bounded-range check of a named claim.
#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub claim: String,
    pub params: BTreeMap<String, String>,
    pub holds: bool,
    /// Counterexamples, smallest first; nonempty whenever `holds` is false.
    pub witnesses: Vec<String>,
    /// Number of objects enumerated while checking.
    pub enumerated: u64,
}

impl VerificationReport {
    pub fn new(claim: impl Into<String>) -> Self {
        VerificationReport {
            claim: claim.into(),
            params: BTreeMap::new(),
            holds: true,
            witnesses: Vec::new(),
            enumerated: 0,
        }
    }

    pub fn param(mut self, key: &str, value: impl ToString) -> Self {
        self.params.insert(key.to_string(), value.to_string());
        self
    }

    pub fn fail(&mut self, witness: impl Into<String>) {
        self.holds = false;
        self.witnesses.push(witness.into());
    }

    pub fn count(&mut self, objects: u64) {
        self.enumerated += objects;
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serialization cannot fail")
    }
}

/// Q_n(Pi): the sum of F over the descent compositions of the avoiders.
pub fn qn(patterns: &PatternSet, n: usize, limits: &Limits) -> Result<QsymF> {
    let mut out = QsymF::zero(n);
    for sigma in avoiders(n, patterns, limits)? {
        let comp = set_to_comp(&sigma.descent_set(), n).expect("descents lie in [n-1]");
        out.add_term(comp, Coeff::from(1)).expect("degree preserved");
    }
    Ok(out)
}

/// Shape restriction for the closed-form Schur sums of the trivial avoidance
/// classes.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ShapeRestriction {
    /// No restriction: all shapes of n.
    All,
    /// First row shorter than k (avoiding the increasing pattern of length k).
    FirstRowUnder(usize),
    /// Fewer than k rows (avoiding the decreasing pattern of length k).
    RowCountUnder(usize),
}

/// Sum of f^lambda s_lambda over the shapes passing the restriction.
pub fn restricted_schur_sum(n: usize, restriction: ShapeRestriction) -> SchurVector {
    let mut out = SchurVector::zero(n);
    for shape in partitions(n) {
        let keep = match restriction {
            ShapeRestriction::All => true,
            ShapeRestriction::FirstRowUnder(k) => shape.row_len(1) < k,
            ShapeRestriction::RowCountUnder(k) => shape.rows() < k,
        };
        if keep {
            out.set(shape.clone(), Coeff::from(f_lambda(&shape)));
        }
    }
    out
}

/// Shapes of n whose diagram does not contain `mu`.
pub fn shapes_avoiding(n: usize, mu: &Partition) -> Vec<Partition> {
    partitions(n)
        .into_iter()
        .filter(|l| !l.contains(mu))
        .collect()
}

/// Sum of f^lambda s_lambda over the shapes not containing `mu`.
pub fn shape_avoider_sum(n: usize, mu: &Partition) -> SchurVector {
    let mut out = SchurVector::zero(n);
    for shape in shapes_avoiding(n, mu) {
        let f = f_lambda(&shape);
        out.set(shape, Coeff::from(f));
    }
    out
}
