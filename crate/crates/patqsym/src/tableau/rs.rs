//! The Robinson-Schensted correspondence via row insertion.

use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::tableau::syt::StandardTableau;

/// An (insertion, recording) tableau pair of equal shape.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TableauPair {
    pub insertion: StandardTableau,
    pub recording: StandardTableau,
}

impl TableauPair {
    pub fn new(insertion: StandardTableau, recording: StandardTableau) -> Result<Self> {
        if insertion.shape() != recording.shape() {
            return Err(Error::invalid("tableau pair shapes differ"));
        }
        Ok(TableauPair {
            insertion,
            recording,
        })
    }
}

/// Row-inserts a permutation, returning the insertion tableau P and the
/// recording tableau Q.
pub fn rs(sigma: &Permutation) -> TableauPair {
    let mut p: Vec<Vec<u8>> = Vec::new();
    let mut q: Vec<Vec<u8>> = Vec::new();
    for (step, &v) in sigma.word().iter().enumerate() {
        let (row, col) = insert(&mut p, v);
        debug_assert_eq!(col, p[row].len());
        if q.len() <= row {
            q.push(Vec::new());
        }
        q[row].push(step as u8 + 1);
    }
    TableauPair {
        insertion: StandardTableau::new(p).expect("row insertion yields a standard tableau"),
        recording: StandardTableau::new(q).expect("recording tableau is standard"),
    }
}

/// Insertion tableau only.
pub fn p_tableau(sigma: &Permutation) -> StandardTableau {
    rs(sigma).insertion
}

/// The shape of the insertion tableau.
pub fn rs_shape(sigma: &Permutation) -> crate::tableau::partition::Partition {
    p_tableau(sigma).shape()
}

// Returns the (row, column) of the new cell, 0-indexed.
fn insert(rows: &mut Vec<Vec<u8>>, mut v: u8) -> (usize, usize) {
    for (i, row) in rows.iter_mut().enumerate() {
        match row.iter().position(|&x| x > v) {
            None => {
                row.push(v);
                return (i, row.len() - 1);
            }
            Some(j) => {
                std::mem::swap(&mut row[j], &mut v);
            }
        }
    }
    rows.push(vec![v]);
    (rows.len() - 1, 0)
}

/// Inverts row insertion: recovers the unique permutation mapping to the
/// pair.
pub fn rs_inverse(pair: &TableauPair) -> Permutation {
    let mut p: Vec<Vec<u8>> = pair.insertion.rows().to_vec();
    let n = pair.insertion.size();
    // Find where each step's cell was added by scanning Q for n, n-1, ...
    let mut word = vec![0u8; n];
    let mut q_rows: Vec<Vec<u8>> = pair.recording.rows().to_vec();
    for step in (1..=n as u8).rev() {
        let row = q_rows
            .iter()
            .position(|r| r.last() == Some(&step))
            .expect("recording tableau contains every step");
        q_rows[row].pop();
        let mut v = p[row].pop().expect("shapes agree");
        if p[row].is_empty() {
            p.remove(row);
        }
        // Reverse-bump upwards.
        for i in (0..row).rev() {
            let j = p[i]
                .iter()
                .rposition(|&x| x < v)
                .expect("reverse bumping always finds a smaller entry");
            std::mem::swap(&mut p[i][j], &mut v);
        }
        word[step as usize - 1] = v;
    }
    Permutation::from_word(word).expect("inverse insertion yields a permutation")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::Limits;
    use crate::perm::{avoiders, PatternSet};

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn identity_maps_to_row_tableaux() {
        let pair = rs(&Permutation::identity(5));
        assert_eq!(pair.insertion.rows(), &[vec![1, 2, 3, 4, 5]]);
        assert_eq!(pair.recording.rows(), &[vec![1, 2, 3, 4, 5]]);
    }

    #[test]
    fn shape_of_reference_permutation() {
        let shape = rs_shape(&p("65127843"));
        assert_eq!(shape.parts(), &[4, 2, 1, 1]);
    }

    #[test]
    fn known_insertion_tableaux() {
        assert_eq!(p_tableau(&p("3124")).rows(), &[vec![1, 2, 4], vec![3]]);
        assert_eq!(p_tableau(&p("3142")).rows(), &[vec![1, 2], vec![3, 4]]);
        assert_eq!(p_tableau(&p("213")).rows(), &[vec![1, 3], vec![2]]);
    }

    #[test]
    fn round_trip_small() {
        let limits = Limits::default();
        for n in 0..=6 {
            for sigma in avoiders(n, &PatternSet::empty(), &limits).unwrap() {
                let pair = rs(&sigma);
                assert_eq!(pair.insertion.shape(), pair.recording.shape());
                assert_eq!(rs_inverse(&pair), sigma);
            }
        }
    }

    #[test]
    fn inverse_swaps_tableaux() {
        for s in ["25143", "65127843", "3142", "1"] {
            let sigma = p(s);
            let pair = rs(&sigma);
            let flipped = rs(&sigma.inverse());
            assert_eq!(flipped.insertion, pair.recording);
            assert_eq!(flipped.recording, pair.insertion);
        }
    }

    #[test]
    fn mismatched_shapes_rejected() {
        let a = StandardTableau::new(vec![vec![1, 2]]).unwrap();
        let b = StandardTableau::new(vec![vec![1], vec![2]]).unwrap();
        assert!(TableauPair::new(a, b).is_err());
    }
}
