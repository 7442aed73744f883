//! Byte-stable JSON form for serialized functions:
//! `{"degree":n,"basis":"F"|"M"|"s","terms":[{"index":[..],"coeff":c},..]}`
//! with terms in canonical order. Emission is by hand so coefficients of any
//! magnitude appear as plain integer literals.

use std::str::FromStr;

use num_bigint::BigInt;
use serde_json::Value;

use crate::error::{Error, Result};
use crate::qsym::{Coeff, Composition, QsymF, QsymM, SchurVector};
use crate::tableau::Partition;

/// A parsed serialized function in any of the three bases.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum BasisFunction {
    Fundamental(QsymF),
    Monomial(QsymM),
    Schur(SchurVector),
}

impl BasisFunction {
    pub fn basis_tag(&self) -> &'static str {
        match self {
            BasisFunction::Fundamental(_) => "F",
            BasisFunction::Monomial(_) => "M",
            BasisFunction::Schur(_) => "s",
        }
    }

    pub fn to_json(&self) -> String {
        match self {
            BasisFunction::Fundamental(q) => {
                emit(q.degree(), "F", q.terms().map(|(k, v)| (k.parts(), v)))
            }
            BasisFunction::Monomial(q) => {
                emit(q.degree(), "M", q.terms().map(|(k, v)| (k.parts(), v)))
            }
            BasisFunction::Schur(v) => {
                emit(v.degree(), "s", v.terms().map(|(k, c)| (k.parts(), c)))
            }
        }
    }

    pub fn from_json(json: &str) -> Result<Self> {
        let value: Value =
            serde_json::from_str(json).map_err(|e| Error::Parse(e.to_string()))?;
        let degree = value
            .get("degree")
            .and_then(Value::as_u64)
            .ok_or_else(|| Error::Parse("missing integer field \"degree\"".into()))?
            as usize;
        let basis = value
            .get("basis")
            .and_then(Value::as_str)
            .ok_or_else(|| Error::Parse("missing string field \"basis\"".into()))?;
        let terms = value
            .get("terms")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Parse("missing array field \"terms\"".into()))?;

        let mut parsed: Vec<(Vec<u8>, Coeff)> = Vec::with_capacity(terms.len());
        for t in terms {
            let index = t
                .get("index")
                .and_then(Value::as_array)
                .ok_or_else(|| Error::Parse("term without \"index\" array".into()))?
                .iter()
                .map(|v| {
                    v.as_u64()
                        .filter(|&p| p >= 1 && p <= u8::MAX as u64)
                        .map(|p| p as u8)
                        .ok_or_else(|| Error::Parse(format!("bad index part {v}")))
                })
                .collect::<Result<Vec<u8>>>()?;
            let coeff = t
                .get("coeff")
                .ok_or_else(|| Error::Parse("term without \"coeff\"".into()))?;
            let coeff = match coeff {
                Value::Number(n) => BigInt::from_str(&n.to_string())
                    .map_err(|_| Error::Parse(format!("non-integer coefficient {n}")))?,
                Value::String(s) => BigInt::from_str(s)
                    .map_err(|_| Error::Parse(format!("bad coefficient {s:?}")))?,
                other => return Err(Error::Parse(format!("bad coefficient {other}"))),
            };
            parsed.push((index, coeff));
        }

        match basis {
            "F" => {
                let mut q = QsymF::zero(degree);
                for (index, coeff) in parsed {
                    q.add_term(Composition::new(index)?, coeff)?;
                }
                Ok(BasisFunction::Fundamental(q))
            }
            "M" => {
                let mut q = QsymM::zero(degree);
                for (index, coeff) in parsed {
                    q.add_term(Composition::new(index)?, coeff)?;
                }
                Ok(BasisFunction::Monomial(q))
            }
            "s" => {
                let mut v = SchurVector::zero(degree);
                for (index, coeff) in parsed {
                    let shape = Partition::new(index)?;
                    if shape.size() != degree {
                        return Err(Error::invalid(format!(
                            "shape {shape} does not have degree {degree}"
                        )));
                    }
                    v.set(shape, coeff);
                }
                Ok(BasisFunction::Schur(v))
            }
            other => Err(Error::Parse(format!(
                "unknown basis {other:?}; expected \"F\", \"M\", or \"s\""
            ))),
        }
    }
}

fn emit<'a>(
    degree: usize,
    basis: &str,
    terms: impl Iterator<Item = (&'a [u8], &'a Coeff)>,
) -> String {
    let mut out = format!("{{\"degree\":{degree},\"basis\":\"{basis}\",\"terms\":[");
    let mut first = true;
    for (index, coeff) in terms {
        if !first {
            out.push(',');
        }
        first = false;
        let parts: Vec<String> = index.iter().map(|p| p.to_string()).collect();
        out.push_str(&format!(
            "{{\"index\":[{}],\"coeff\":{coeff}}}",
            parts.join(",")
        ));
    }
    out.push_str("]}");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qsym::schur_to_f;

    #[test]
    fn golden_fundamental_form() {
        let q = schur_to_f(&Partition::new(vec![2, 1]).unwrap());
        let json = BasisFunction::Fundamental(q.clone()).to_json();
        assert_eq!(
            json,
            r#"{"degree":3,"basis":"F","terms":[{"index":[2,1],"coeff":1},{"index":[1,2],"coeff":1}]}"#
        );
        match BasisFunction::from_json(&json).unwrap() {
            BasisFunction::Fundamental(back) => assert_eq!(back, q),
            _ => panic!("basis tag lost"),
        }
    }

    #[test]
    fn schur_form_round_trip() {
        let mut v = SchurVector::zero(4);
        v.set(Partition::new(vec![3, 1]).unwrap(), Coeff::from(-2));
        v.set(Partition::new(vec![2, 2]).unwrap(), Coeff::from(7));
        let json = BasisFunction::Schur(v.clone()).to_json();
        assert_eq!(
            json,
            r#"{"degree":4,"basis":"s","terms":[{"index":[3,1],"coeff":-2},{"index":[2,2],"coeff":7}]}"#
        );
        assert_eq!(
            BasisFunction::from_json(&json).unwrap(),
            BasisFunction::Schur(v)
        );
    }

    #[test]
    fn large_coefficients_survive() {
        let mut v = SchurVector::zero(1);
        let big: Coeff = Coeff::from(u128::MAX) * 1000;
        v.set(Partition::new(vec![1]).unwrap(), big.clone());
        let json = BasisFunction::Schur(v).to_json();
        match BasisFunction::from_json(&json).unwrap() {
            BasisFunction::Schur(back) => {
                assert_eq!(back.coefficient(&Partition::new(vec![1]).unwrap()), big)
            }
            _ => panic!(),
        }
    }

    #[test]
    fn rejects_malformed_input() {
        assert!(BasisFunction::from_json("{}").is_err());
        assert!(BasisFunction::from_json(
            r#"{"degree":2,"basis":"x","terms":[]}"#
        )
        .is_err());
        assert!(BasisFunction::from_json(
            r#"{"degree":2,"basis":"s","terms":[{"index":[1,2],"coeff":1}]}"#
        )
        .is_err());
    }
}
