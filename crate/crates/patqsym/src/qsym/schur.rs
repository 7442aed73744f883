//! Schur expansions: the descent-set expansion of a Schur function into the
//! fundamental basis, and its inverse by greedy peeling.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use crate::qsym::{set_to_comp, Coeff, Composition, QsymF};
use crate::tableau::{partitions, syt_enumerate, Partition};

/// An exact-integer vector over partitions of a fixed degree.
#[derive(Clone, PartialEq, Eq)]
pub struct SchurVector {
    degree: usize,
    coeffs: BTreeMap<Partition, Coeff>,
}

impl SchurVector {
    pub fn zero(degree: usize) -> Self {
        SchurVector {
            degree,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coefficient(&self, shape: &Partition) -> Coeff {
        self.coeffs.get(shape).cloned().unwrap_or_else(Coeff::zero)
    }

    pub fn set(&mut self, shape: Partition, coeff: Coeff) {
        assert_eq!(shape.size(), self.degree, "degree mismatch");
        if coeff.is_zero() {
            self.coeffs.remove(&shape);
        } else {
            self.coeffs.insert(shape, coeff);
        }
    }

    /// Terms in canonical order: lexicographically decreasing shapes.
    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &Coeff)> {
        self.coeffs.iter().rev()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.values().all(|c| c >= &Coeff::zero())
    }

    /// Transposes every index; coefficients follow their shapes.
    pub fn transpose(&self) -> SchurVector {
        SchurVector {
            degree: self.degree,
            coeffs: self
                .coeffs
                .iter()
                .map(|(k, v)| (k.transpose(), v.clone()))
                .collect(),
        }
    }

    /// The fundamental-basis expansion of the whole vector.
    pub fn to_fundamental(&self) -> QsymF {
        let mut out = QsymF::zero(self.degree);
        for (shape, coeff) in &self.coeffs {
            out.add_assign(&schur_to_f(shape).scaled(coeff));
        }
        out
    }
}

impl fmt::Display for SchurVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms().map(|(k, v)| format!("{k}:{v}")).collect();
        write!(f, "{}", parts.join(" "))
    }
}

impl fmt::Debug for SchurVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SchurVector[{self}]")
    }
}

/// The Schur function as a fundamental-basis object: one term per standard
/// tableau of the shape, indexed by its descent composition.
pub fn schur_to_f(shape: &Partition) -> QsymF {
    let n = shape.size();
    let mut out = QsymF::zero(n);
    for q in syt_enumerate(shape) {
        let comp = set_to_comp(&q.descent_set(), n).expect("descents lie in [n-1]");
        out.add_term(comp, Coeff::from(1)).expect("degree preserved");
    }
    out
}

/// Outcome of Schur-expansion extraction.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum SchurExpansion {
    Symmetric(SchurVector),
    /// Extraction left a nonzero remainder; the input is not symmetric.
    NotSymmetric { residue: QsymF },
}

impl SchurExpansion {
    pub fn symmetric(self) -> Option<SchurVector> {
        match self {
            SchurExpansion::Symmetric(v) => Some(v),
            SchurExpansion::NotSymmetric { .. } => None,
        }
    }

    pub fn is_symmetric(&self) -> bool {
        matches!(self, SchurExpansion::Symmetric(_))
    }
}

/// Extracts Schur coefficients by peeling partitions in lexicographically
/// decreasing order: the coefficient of the partition-shaped composition is
/// recorded and that multiple of the Schur function subtracted. A zero final
/// remainder certifies the answer; a nonzero one is returned as evidence of
/// asymmetry. Coefficients may legitimately be negative.
pub fn schur_expand(q: &QsymF) -> SchurExpansion {
    let n = q.degree();
    let mut remainder = q.clone();
    let mut out = SchurVector::zero(n);
    for shape in partitions(n) {
        let c = remainder.coefficient(&Composition::from(&shape));
        if !c.is_zero() {
            remainder.sub_assign(&schur_to_f(&shape).scaled(&c));
            out.set(shape, c);
        }
    }
    if remainder.is_zero() {
        debug_assert_eq!(out.to_fundamental(), *q, "reconstruction postcondition");
        SchurExpansion::Symmetric(out)
    } else {
        SchurExpansion::NotSymmetric { residue: remainder }
    }
}
