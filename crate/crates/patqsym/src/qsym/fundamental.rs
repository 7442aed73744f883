//! Homogeneous quasisymmetric functions in the fundamental and monomial
//! bases, as canonical coefficient maps (no explicit zeros).

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::qsym::{refinements, Coeff, Composition};
use crate::tableau::{rearrangement_count, Partition};

macro_rules! coefficient_map {
    ($name:ident, $doc:literal) => {
        #[doc = $doc]
        #[derive(Clone, PartialEq, Eq)]
        pub struct $name {
            degree: usize,
            coeffs: BTreeMap<Composition, Coeff>,
        }

        impl $name {
            pub fn zero(degree: usize) -> Self {
                Self {
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

            pub fn coefficient(&self, index: &Composition) -> Coeff {
                self.coeffs.get(index).cloned().unwrap_or_else(Coeff::zero)
            }

            /// Adds to one coefficient, dropping it if it cancels to zero.
            pub fn add_term(&mut self, index: Composition, delta: Coeff) -> Result<()> {
                if index.size() != self.degree {
                    return Err(Error::invalid(format!(
                        "term {index} does not have degree {}",
                        self.degree
                    )));
                }
                let entry = self.coeffs.entry(index).or_insert_with(Coeff::zero);
                *entry += delta;
                if entry.is_zero() {
                    // Re-fetch key by retaining; cheap at desk scale.
                    self.coeffs.retain(|_, c| !c.is_zero());
                }
                Ok(())
            }

            pub fn add_assign(&mut self, other: &Self) {
                assert_eq!(self.degree, other.degree, "degrees must agree");
                for (k, v) in &other.coeffs {
                    self.add_term(k.clone(), v.clone()).expect("degree checked");
                }
            }

            pub fn sub_assign(&mut self, other: &Self) {
                assert_eq!(self.degree, other.degree, "degrees must agree");
                for (k, v) in &other.coeffs {
                    self.add_term(k.clone(), -v.clone()).expect("degree checked");
                }
            }

            pub fn scaled(&self, factor: &Coeff) -> Self {
                if factor.is_zero() {
                    return Self::zero(self.degree);
                }
                Self {
                    degree: self.degree,
                    coeffs: self
                        .coeffs
                        .iter()
                        .map(|(k, v)| (k.clone(), v * factor))
                        .collect(),
                }
            }

            /// Terms in canonical order: lexicographically larger first part
            /// earlier.
            pub fn terms(&self) -> impl Iterator<Item = (&Composition, &Coeff)> {
                self.coeffs.iter().rev()
            }

            /// Sum of all coefficients.
            pub fn total_mass(&self) -> Coeff {
                self.coeffs.values().sum()
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                if self.is_zero() {
                    return write!(f, "0");
                }
                let parts: Vec<String> = self
                    .terms()
                    .map(|(k, v)| format!("{k}:{v}"))
                    .collect();
                write!(f, "{}", parts.join(" "))
            }
        }

        impl fmt::Debug for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "{}[{}]", stringify!($name), self)
            }
        }
    };
}

coefficient_map!(
    QsymF,
    "A degree-homogeneous quasisymmetric function in the fundamental basis."
);
coefficient_map!(
    QsymM,
    "A degree-homogeneous quasisymmetric function in the monomial basis."
);

impl QsymF {
    /// The single basis element F_alpha.
    pub fn basis_element(alpha: Composition) -> Self {
        let mut out = QsymF::zero(alpha.size());
        out.add_term(alpha, Coeff::from(1)).unwrap();
        out
    }

    /// Expands into the monomial basis: F_alpha is the sum of M_beta over
    /// refinements beta of alpha.
    pub fn to_monomial(&self) -> QsymM {
        f_to_m(self)
    }

    /// Symmetry test: after monomial expansion, every two compositions that
    /// rearrange the same partition must carry equal coefficients.
    pub fn is_symmetric(&self) -> bool {
        self.to_monomial().is_symmetric()
    }
}

impl QsymM {
    pub fn basis_element(alpha: Composition) -> Self {
        let mut out = QsymM::zero(alpha.size());
        out.add_term(alpha, Coeff::from(1)).unwrap();
        out
    }

    pub fn is_symmetric(&self) -> bool {
        let mut groups: BTreeMap<Partition, (Coeff, u64)> = BTreeMap::new();
        for (alpha, coeff) in &self.coeffs {
            let key = alpha.sorted();
            match groups.get_mut(&key) {
                None => {
                    groups.insert(key, (coeff.clone(), 1));
                }
                Some((c, count)) => {
                    if c != coeff {
                        return false;
                    }
                    *count += 1;
                }
            }
        }
        // Every rearrangement of each partition must be present.
        groups
            .iter()
            .all(|(p, (_, count))| *count == rearrangement_count(p))
    }
}

/// Linear extension of the refinement rule into the monomial basis.
pub fn f_to_m(q: &QsymF) -> QsymM {
    let mut out = QsymM::zero(q.degree());
    for (alpha, coeff) in q.terms() {
        for beta in refinements(alpha) {
            out.add_term(beta, coeff.clone()).expect("degree preserved");
        }
    }
    out
}

/// The monomial symmetric function m_lambda as a quasisymmetric object:
/// coefficient 1 on each distinct rearrangement of the parts.
pub fn monomial_sym_to_m(lambda: &Partition) -> QsymM {
    let mut out = QsymM::zero(lambda.size());
    let mut parts = lambda.parts().to_vec();
    parts.sort_unstable();
    loop {
        out.add_term(
            Composition::new(parts.clone()).expect("positive parts"),
            Coeff::from(1),
        )
        .expect("degree preserved");
        if !next_permutation(&mut parts) {
            break;
        }
    }
    out
}

// Lexicographic next_permutation; yields each distinct rearrangement once.
fn next_permutation(parts: &mut [u8]) -> bool {
    if parts.len() < 2 {
        return false;
    }
    let mut i = parts.len() - 1;
    while i > 0 && parts[i - 1] >= parts[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = parts.len() - 1;
    while parts[j] <= parts[i - 1] {
        j -= 1;
    }
    parts.swap(i - 1, j);
    parts[i..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(parts: &[u8]) -> Composition {
        Composition::new(parts.to_vec()).unwrap()
    }

    fn pt(parts: &[u8]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn refinement_expansion() {
        let m = f_to_m(&QsymF::basis_element(c(&[1, 2])));
        assert_eq!(m.coefficient(&c(&[1, 2])), Coeff::from(1));
        assert_eq!(m.coefficient(&c(&[1, 1, 1])), Coeff::from(1));
        assert_eq!(m.coefficient(&c(&[2, 1])), Coeff::from(0));
    }

    #[test]
    fn finest_composition_is_fixed() {
        let m = f_to_m(&QsymF::basis_element(c(&[1, 1, 1, 1])));
        assert_eq!(m.coefficient(&c(&[1, 1, 1, 1])), Coeff::from(1));
        assert_eq!(m.terms().count(), 1);
    }

    #[test]
    fn coarsest_composition_hits_everything() {
        let m = f_to_m(&QsymF::basis_element(c(&[4])));
        assert_eq!(m.terms().count(), 8);
    }

    #[test]
    fn monomial_symmetric_expansion() {
        let m = monomial_sym_to_m(&pt(&[2, 1]));
        assert_eq!(m.coefficient(&c(&[2, 1])), Coeff::from(1));
        assert_eq!(m.coefficient(&c(&[1, 2])), Coeff::from(1));
        assert_eq!(m.terms().count(), 2);
        assert_eq!(monomial_sym_to_m(&pt(&[5])).terms().count(), 1);
        assert_eq!(monomial_sym_to_m(&pt(&[1, 1, 1])).terms().count(), 1);
        assert_eq!(monomial_sym_to_m(&pt(&[3, 2, 2, 1])).terms().count(), 12);
    }

    #[test]
    fn symmetry_detection() {
        // F_(n) is the complete homogeneous function.
        assert!(QsymF::basis_element(c(&[3])).is_symmetric());
        assert!(!QsymF::basis_element(c(&[2, 1])).is_symmetric());
        let mut sym = QsymM::zero(3);
        sym.add_assign(&monomial_sym_to_m(&pt(&[2, 1])));
        assert!(sym.is_symmetric());
        sym.add_term(c(&[1, 2]), Coeff::from(1)).unwrap();
        assert!(!sym.is_symmetric(), "unequal coefficients within a class");
        assert!(QsymF::zero(4).is_symmetric());
    }

    #[test]
    fn canonical_term_order() {
        let mut q = QsymF::zero(3);
        for parts in [&[1u8, 1, 1][..], &[3], &[1, 2], &[2, 1]] {
            q.add_term(c(parts), Coeff::from(1)).unwrap();
        }
        let order: Vec<String> = q.terms().map(|(k, _)| k.to_string()).collect();
        assert_eq!(order, vec!["(3)", "(2,1)", "(1,2)", "(1,1,1)"]);
    }

    #[test]
    fn cancellation_drops_terms() {
        let mut q = QsymF::zero(2);
        q.add_term(c(&[2]), Coeff::from(3)).unwrap();
        q.add_term(c(&[2]), Coeff::from(-3)).unwrap();
        assert!(q.is_zero());
        assert!(q.add_term(c(&[1, 1, 1]), Coeff::from(1)).is_err());
    }

    #[test]
    fn linearity_of_expansion() {
        let a = QsymF::basis_element(c(&[2, 1]));
        let b = QsymF::basis_element(c(&[1, 2]));
        let mut combo = a.scaled(&Coeff::from(5));
        combo.add_assign(&b.scaled(&Coeff::from(-2)));
        let mut expect = f_to_m(&a).scaled(&Coeff::from(5));
        expect.add_assign(&f_to_m(&b).scaled(&Coeff::from(-2)));
        assert_eq!(f_to_m(&combo), expect);
    }
}
