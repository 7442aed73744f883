//! The partial-shuffle pattern families, the fattened-hook Schur sum they
//! generate, and the descent-preserving masking bijections between the two
//! avoidance classes.
//!
//! For a fixed k, the masking map sends an avoider to the word obtained by
//! replacing its (k+1)-endpoints with infinity. On one family the masked
//! values form a single interval ending at n; on the other they form one
//! interval per left-to-right minimum of the k-endpoint subsequence. Both
//! directions validate their domains and report the offending pattern
//! occurrence on failure.

use crate::error::{Error, Result};
use crate::perm::{
    contains_witness, endpoint_flags, mask, partial_shuffle, EndpointDecomposition, MaskedEntry,
    MaskedWord, PatternSet, Permutation,
};
use crate::qsym::{Coeff, SchurVector};
use crate::tableau::{f_lambda, partitions, Partition};

/// The general one-letter partial shuffle on 1..k+2: all interleavings of the
/// word with the letter `a` removed from its place, minus the identity.
pub fn partial_shuffle_general(k: usize, a: usize) -> Result<PatternSet> {
    if k == 0 {
        return Err(Error::invalid("partial shuffles need k >= 1"));
    }
    if a == 0 || a > k + 2 {
        return Err(Error::invalid(format!(
            "displaced letter {a} must lie in 1..={}",
            k + 2
        )));
    }
    let word: Vec<u8> = (1..=(k + 2) as u8).filter(|&v| v != a as u8).collect();
    partial_shuffle(&word, a as u8)
}

/// The two named families: family 2 displaces the letter k+2, family 1
/// displaces k+1.
pub fn partial_shuffle_family(k: usize, family: u8) -> Result<PatternSet> {
    match family {
        1 => partial_shuffle_general(k, k + 1),
        2 => partial_shuffle_general(k, k + 2),
        other => Err(Error::invalid(format!(
            "unknown partial-shuffle family {other}; expected 1 or 2"
        ))),
    }
}

/// Partitions of n whose diagram lacks the cell (2, k).
pub fn fattened_hooks(n: usize, k: usize) -> Vec<Partition> {
    assert!(k >= 1, "fattened hooks need k >= 1");
    partitions(n)
        .into_iter()
        .filter(|l| !l.has_cell(2, k))
        .collect()
}

/// Caps the first part at k. Errors when the cap would break weak decrease.
pub fn lambda_bar(shape: &Partition, k: usize) -> Result<Partition> {
    assert!(k >= 1, "the bar operator needs k >= 1");
    let mut parts = shape.parts().to_vec();
    if let Some(first) = parts.first_mut() {
        *first = (*first).min(k as u8);
    }
    Partition::new(parts).map_err(|_| {
        Error::invalid(format!(
            "capping the first part of {shape} at {k} leaves a non-partition"
        ))
    })
}

/// The closed form both partial-shuffle classes expand to: the sum over
/// shapes without cell (2, k+1) of f^(capped shape) s_shape.
pub fn fattened_hook_sum(n: usize, k: usize) -> SchurVector {
    let mut out = SchurVector::zero(n);
    for shape in fattened_hooks(n, k + 1) {
        let capped = lambda_bar(&shape, k).expect("second row fits under the cap");
        out.set(shape, Coeff::from(f_lambda(&capped)));
    }
    out
}

fn require_avoider(sigma: &Permutation, patterns: &PatternSet, label: &str) -> Result<()> {
    for pat in patterns.iter() {
        if let Some(positions) = contains_witness(sigma, pat) {
            return Err(Error::invalid(format!(
                "{sigma} is not a {label} avoider: pattern {pat} occurs at positions {positions:?}"
            )));
        }
    }
    Ok(())
}

/// Masks the (k+1)-endpoints of an avoider of the family-2 shuffle set. The
/// masked values always form the interval of top values, so no bookkeeping
/// beyond the word itself is needed to invert.
pub fn tail_interval_mask(sigma: &Permutation, k: usize) -> Result<MaskedWord> {
    require_avoider(sigma, &partial_shuffle_family(k, 2)?, "family-2")?;
    let d = EndpointDecomposition::compute(sigma, k);
    mask(sigma, &d.rest)
}

/// Inverts [`tail_interval_mask`]: fills the infinities with the top values
/// in increasing order and checks the result lands back on the input.
pub fn tail_interval_unmask(xi: &MaskedWord, k: usize) -> Result<Permutation> {
    let n = xi.len();
    let slots = xi.inf_positions().len();
    let fill: Vec<u8> = ((n - slots + 1) as u8..=n as u8).collect();
    let sigma = xi.fill(&fill)?;
    let back = tail_interval_mask(&sigma, k)?;
    if back != *xi {
        return Err(Error::invalid(format!(
            "{xi} is not in the masked image for k = {k}"
        )));
    }
    Ok(sigma)
}

/// Masks the (k+1)-endpoints of an avoider of the family-1 shuffle set.
pub fn block_interval_mask(sigma: &Permutation, k: usize) -> Result<MaskedWord> {
    require_avoider(sigma, &partial_shuffle_family(k, 1)?, "family-1")?;
    let d = EndpointDecomposition::compute(sigma, k);
    mask(sigma, &d.rest)
}

/// Inverts [`block_interval_mask`]. The k-endpoints of the finite subword are
/// exactly the left-to-right minima of the original endpoint subsequence
/// (nothing masked can take part in an increasing run ending at a finite
/// entry), so each infinity run is filled from the interval just above the
/// minimum it follows.
pub fn block_interval_unmask(xi: &MaskedWord, k: usize) -> Result<Permutation> {
    let finite = xi.finite_values();
    let flags = endpoint_flags(&finite, k);

    // Value and position (within xi) of each surviving k-endpoint.
    let mut minima: Vec<(usize, u8)> = Vec::new();
    let mut seen_finite = 0usize;
    for (pos, entry) in xi.entries().iter().enumerate() {
        if let MaskedEntry::Value(v) = entry {
            if flags[seen_finite] {
                minima.push((pos, *v));
            }
            seen_finite += 1;
        }
    }

    let mut fill = Vec::with_capacity(xi.inf_positions().len());
    let mut offsets: Vec<u8> = vec![0; minima.len()];
    for (pos, entry) in xi.entries().iter().enumerate() {
        if matches!(entry, MaskedEntry::Inf) {
            let block = minima.partition_point(|&(mp, _)| mp < pos);
            if block == 0 {
                return Err(Error::invalid(format!(
                    "{xi} has a masked slot before any surviving endpoint (k = {k})"
                )));
            }
            let (_, r) = minima[block - 1];
            offsets[block - 1] += 1;
            fill.push(r + offsets[block - 1]);
        }
    }

    let sigma = xi.fill(&fill)?;
    let back = block_interval_mask(&sigma, k)?;
    if back != *xi {
        return Err(Error::invalid(format!(
            "{xi} is not in the masked image for k = {k}"
        )));
    }
    Ok(sigma)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::Limits;
    use crate::perm::avoiders;
    use crate::tableau::{knuth_class, superstandard, Orientation};

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn pt(parts: &[u8]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn family_definitions() {
        let f2 = partial_shuffle_family(1, 2).unwrap();
        assert_eq!(f2, PatternSet::new([p("312"), p("132")]));
        let f1 = partial_shuffle_family(1, 1).unwrap();
        assert_eq!(f1, PatternSet::new([p("213"), p("231")]));
        // The general form specializes to both families.
        assert_eq!(partial_shuffle_general(1, 3).unwrap(), f2);
        assert_eq!(partial_shuffle_general(1, 2).unwrap(), f1);
        assert!(partial_shuffle_general(1, 4).is_err());
        for a in 1..=4 {
            assert_eq!(partial_shuffle_general(2, a).unwrap().len(), 3);
        }
    }

    #[test]
    fn family_two_is_a_hook_class() {
        let limits = Limits::default();
        for k in 1..=3 {
            let hook = superstandard(&Partition::hook(k + 1, 1).unwrap(), Orientation::Row);
            let class: PatternSet = knuth_class(&hook, &limits).unwrap().into_iter().collect();
            assert_eq!(partial_shuffle_family(k, 2).unwrap(), class, "k = {k}");
        }
    }

    #[test]
    fn fattened_hook_examples() {
        let h42 = fattened_hooks(4, 2);
        assert_eq!(
            h42,
            vec![pt(&[4]), pt(&[3, 1]), pt(&[2, 1, 1]), pt(&[1, 1, 1, 1])]
        );
        assert_eq!(lambda_bar(&pt(&[5, 1, 1]), 3).unwrap(), pt(&[3, 1, 1]));
        assert_eq!(lambda_bar(&pt(&[2, 1]), 4).unwrap(), pt(&[2, 1]));
        assert!(lambda_bar(&pt(&[3, 3]), 2).is_err());
    }

    #[test]
    fn hook_sum_below_threshold_is_unrestricted() {
        // For n <= k no shape has cell (2, k+1) and no first row exceeds k.
        use crate::lab::{restricted_schur_sum, ShapeRestriction};
        for k in 2..=4usize {
            for n in 0..=k {
                assert_eq!(
                    fattened_hook_sum(n, k),
                    restricted_schur_sum(n, ShapeRestriction::All)
                );
            }
        }
    }

    #[test]
    fn mask_of_total_avoider_is_identity_mask() {
        // An avoider with no increasing k-run has nothing to mask.
        let limits = Limits::default();
        let sigma = p("321");
        let m = tail_interval_mask(&sigma, 3).unwrap();
        assert_eq!(m.inf_positions().len(), 0);
        assert_eq!(tail_interval_unmask(&m, 3).unwrap(), sigma);
        drop(limits);
    }

    #[test]
    fn masking_rejects_non_avoiders() {
        // 1234 contains every family-2 member's underlying rise for k = 1.
        let err = tail_interval_mask(&p("2134"), 1);
        assert!(err.is_err());
        let msg = format!("{}", err.unwrap_err());
        assert!(msg.contains("positions"), "witness positions reported: {msg}");
    }

    #[test]
    fn round_trips_on_small_avoiders() {
        let limits = Limits::default();
        for k in 1..=2 {
            for n in 0..=6 {
                for sigma in avoiders(n, &partial_shuffle_family(k, 2).unwrap(), &limits).unwrap()
                {
                    let m = tail_interval_mask(&sigma, k).unwrap();
                    assert_eq!(m.descent_set(), sigma.descent_set(), "descents preserved");
                    assert_eq!(tail_interval_unmask(&m, k).unwrap(), sigma);
                }
                for sigma in avoiders(n, &partial_shuffle_family(k, 1).unwrap(), &limits).unwrap()
                {
                    let m = block_interval_mask(&sigma, k).unwrap();
                    assert_eq!(m.descent_set(), sigma.descent_set(), "descents preserved");
                    assert_eq!(block_interval_unmask(&m, k).unwrap(), sigma);
                }
            }
        }
    }

    #[test]
    fn unmask_rejects_words_outside_the_image() {
        // *21 cannot arise for k = 1: a masked top value left of everything
        // would have been a 2-endpoint's shadow.
        let bad = MaskedWord::new(vec![
            MaskedEntry::Inf,
            MaskedEntry::Value(2),
            MaskedEntry::Value(1),
        ])
        .unwrap();
        assert!(tail_interval_unmask(&bad, 1).is_err());
        assert!(block_interval_unmask(&bad, 1).is_err());
    }
}
