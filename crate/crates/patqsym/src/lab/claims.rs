//! The claim registry: every headline identity of the avoidance lab behind a
//! stable string id, each producing a [`VerificationReport`] over an explicit
//! bounded range.

use std::collections::BTreeSet;

use crate::config::Limits;
use crate::error::{Error, Result};
use crate::lab::closure::{
    inverse_descent_class, is_pattern_knuth_closed, is_swap_closed, swap_component,
};
use crate::lab::pairs::{
    classify_knuth_union, descent_complete_pairs, descent_complete_pairs_by_search,
};
use crate::lab::shuffles::{
    block_interval_mask, block_interval_unmask, fattened_hook_sum, partial_shuffle_family,
    partial_shuffle_general, tail_interval_mask, tail_interval_unmask,
};
use crate::lab::stability::{pi_zero, stability_check};
use crate::lab::survey::{survey_symmetric_sets, SurveyOptions};
use crate::lab::{qn, restricted_schur_sum, shape_avoider_sum, ShapeRestriction, VerificationReport};
use crate::perm::{avoiders, EndpointDecomposition, PatternSet, Permutation};
use crate::qsym::{schur_expand, Coeff, SchurExpansion, SchurVector};
use crate::tableau::{
    av_tableaux, knuth_class, knuth_class_shape, p_tableau, rs_shape, superstandard, syt_all,
    Orientation, Partition, StandardTableau,
};

/// Optional overrides for a claim's default parameter ranges.
#[derive(Clone, Copy, Debug, Default)]
pub struct ClaimParams {
    /// Upper bound on the degree n (claims run every n up to this).
    pub n: Option<usize>,
    pub k: Option<usize>,
    pub r: Option<usize>,
    pub s: Option<usize>,
    pub a: Option<usize>,
    pub b: Option<usize>,
}

/// All registered claim ids.
pub fn claim_ids() -> Vec<&'static str> {
    vec![
        "lemma-iode",
        "thm-size-1",
        "lemma-iota-delta",
        "thm-size-2",
        "sec2-exception",
        "thm-ss",
        "thm-hook-expansion",
        "thm-ps",
        "sec4-general-shuffle",
        "prop-union",
        "lemma-uid",
        "thm-pkc-shape",
        "lemma-ssh",
        "lemma-swap-closed",
        "thm-swap-closed",
        "lemma-4points",
        "lemma-swap-right",
        "lemma-pkc-induct",
        "lemma-1n",
        "lemma-rs-ds",
        "thm-single",
        "lemma-doubles",
        "thm-pairs",
        "sec5-counterexample",
        "sec6-stability",
    ]
}

/// Runs one claim by id.
pub fn run_claim(id: &str, params: &ClaimParams, limits: &Limits) -> Result<VerificationReport> {
    match id {
        "lemma-iode" => iode(params.n.unwrap_or(7), params.k.unwrap_or(5), limits),
        "thm-size-1" => size_one(params.k.unwrap_or(4), params.n.unwrap_or(7), limits),
        "lemma-iota-delta" => iota_delta(params.k.unwrap_or(4), params.n.unwrap_or(7), limits),
        "thm-size-2" => size_two(params.n.unwrap_or(6), limits),
        "sec2-exception" => sporadic_pair(params.n.unwrap_or(8), limits),
        "thm-ss" => superstandard_closure(params.n.unwrap_or(5), limits),
        "thm-hook-expansion" => hook_expansion(params, limits),
        "thm-ps" => partial_shuffles(params, limits),
        "sec4-general-shuffle" => general_shuffle(params, limits),
        "prop-union" => union_closure(limits),
        "lemma-uid" => monotone_union_shapes(params.n.unwrap_or(8), limits),
        "thm-pkc-shape" => shape_union(params, limits),
        "lemma-ssh" => single_class_forms(params.n.unwrap_or(5), limits),
        "lemma-swap-closed" => swap_class_structure(params.n.unwrap_or(5), limits),
        "thm-swap-closed" => consistent_closed_sets(params.n.unwrap_or(5), limits),
        "lemma-4points" => four_points(params.n.unwrap_or(6), limits),
        "lemma-swap-right" => swap_right(params.n.unwrap_or(5), limits),
        "lemma-pkc-induct" => closure_after_deletion(params.n.unwrap_or(5), limits),
        "lemma-1n" => extreme_positions(params.n.unwrap_or(5), limits),
        "lemma-rs-ds" => append_max_conditions(params.n.unwrap_or(6), limits),
        "thm-single" => single_classes(params.n.unwrap_or(5), limits),
        "lemma-doubles" => pair_families(params.n.unwrap_or(5), limits),
        "thm-pairs" => pair_classes(params.n.unwrap_or(5), limits),
        "sec5-counterexample" => three_class_counterexample(limits),
        "sec6-stability" => stability_triple(params.n.unwrap_or(8), limits),
        other => Err(Error::invalid(format!(
            "unknown claim {other:?}; known claims: {}",
            claim_ids().join(", ")
        ))),
    }
}

fn expand_or_fail(
    report: &mut VerificationReport,
    value: &crate::qsym::QsymF,
    context: &str,
) -> Option<SchurVector> {
    match schur_expand(value) {
        SchurExpansion::Symmetric(v) => Some(v),
        SchurExpansion::NotSymmetric { residue } => {
            report.fail(format!("{context}: not symmetric, residue {residue}"));
            None
        }
    }
}

// Q_n of the empty set, a lone increasing pattern, and a lone decreasing
// pattern have the three closed-form Schur expansions.
fn iode(n_max: usize, k_max: usize, limits: &Limits) -> Result<VerificationReport> {
    let mut report = VerificationReport::new("lemma-iode")
        .param("n_max", n_max)
        .param("k_max", k_max);
    for n in 0..=n_max {
        let q = qn(&PatternSet::empty(), n, limits)?;
        report.count(q.total_mass().try_into().unwrap_or(u64::MAX));
        if let Some(v) = expand_or_fail(&mut report, &q, &format!("Q_{n}(empty)")) {
            if v != restricted_schur_sum(n, ShapeRestriction::All) {
                report.fail(format!("Q_{n}(empty) misses the unrestricted sum"));
            }
        }
        for k in 1..=k_max {
            let inc = qn(&PatternSet::singleton(Permutation::identity(k)), n, limits)?;
            if let Some(v) = expand_or_fail(&mut report, &inc, &format!("Q_{n}(inc {k})")) {
                if v != restricted_schur_sum(n, ShapeRestriction::FirstRowUnder(k)) {
                    report.fail(format!("Q_{n}(increasing {k}) misses its sum"));
                }
            }
            let dec = qn(&PatternSet::singleton(Permutation::decreasing(k)), n, limits)?;
            if let Some(v) = expand_or_fail(&mut report, &dec, &format!("Q_{n}(dec {k})")) {
                if v != restricted_schur_sum(n, ShapeRestriction::RowCountUnder(k)) {
                    report.fail(format!("Q_{n}(decreasing {k}) misses its sum"));
                }
            }
        }
    }
    Ok(report)
}

// A lone pattern keeps Q_n symmetric exactly when it is monotone; asymmetry
// already shows at n = k.
fn size_one(k_max: usize, n_max: usize, limits: &Limits) -> Result<VerificationReport> {
    let mut report = VerificationReport::new("thm-size-1")
        .param("k_max", k_max)
        .param("n_max", n_max);
    for k in 1..=k_max {
        for pi in avoiders(k, &PatternSet::empty(), limits)? {
            report.count(1);
            let monotone = pi == Permutation::identity(k) || pi == Permutation::decreasing(k);
            let symmetric = qn(&PatternSet::singleton(pi.clone()), k, limits)?.is_symmetric();
            if symmetric != monotone {
                report.fail(format!("Q_{k}({pi}) symmetric = {symmetric}"));
            }
            if monotone {
                for n in 0..=n_max {
                    if !qn(&PatternSet::singleton(pi.clone()), n, limits)?.is_symmetric() {
                        report.fail(format!("Q_{n}({pi}) should stay symmetric"));
                    }
                }
            }
        }
    }
    Ok(report)
}

// One increasing and one decreasing pattern together keep Q_n symmetric and
// Schur nonnegative.
fn iota_delta(k_max: usize, n_max: usize, limits: &Limits) -> Result<VerificationReport> {
    let mut report = VerificationReport::new("lemma-iota-delta")
        .param("k_max", k_max)
        .param("n_max", n_max);
    for k in 1..=k_max {
        for l in 1..=k_max {
            let patterns =
                PatternSet::new([Permutation::identity(k), Permutation::decreasing(l)]);
            for n in 0..=n_max {
                report.count(1);
                let q = qn(&patterns, n, limits)?;
                match expand_or_fail(&mut report, &q, &format!("Q_{n}(inc {k}, dec {l})")) {
                    Some(v) if !v.is_nonnegative() => {
                        report.fail(format!("Q_{n}(inc {k}, dec {l}) has a negative coefficient"))
                    }
                    _ => {}
                }
            }
        }
    }
    Ok(report)
}

// Among two-element subsets of S_4, only the monotone pair stays symmetric.
fn size_two(n_max: usize, limits: &Limits) -> Result<VerificationReport> {
    let mut report = VerificationReport::new("thm-size-2").param("n_max", n_max);
    let mut survivors = Vec::new();
    let stats = survey_symmetric_sets(
        4,
        2,
        n_max,
        &SurveyOptions::default(),
        limits,
        |s| survivors.push(s.clone()),
    )?;
    report.count(stats.total_sets);
    let monotone = PatternSet::new([Permutation::identity(4), Permutation::decreasing(4)]);
    if survivors != vec![monotone] {
        report.fail(format!(
            "expected exactly the monotone pair, found {} survivors",
            survivors.len()
        ));
        for s in survivors {
            report.fail(format!("survivor {s}"));
        }
    }
    Ok(report)
}

// The sporadic k = 3 pair stays symmetric and Schur nonnegative.
fn sporadic_pair(n_max: usize, limits: &Limits) -> Result<VerificationReport> {
    let mut report = VerificationReport::new("sec2-exception").param("n_max", n_max);
    let patterns = PatternSet::new(["213".parse().unwrap(), "231".parse().unwrap()]);
    for n in 0..=n_max {
        report.count(1);
        let q = qn(&patterns, n, limits)?;
        match expand_or_fail(&mut report, &q, &format!("Q_{n}(213, 231)")) {
            Some(v) if !v.is_nonnegative() => {
                report.fail(format!("Q_{n}(213, 231) has a negative coefficient"))
            }
            _ => {}
        }
    }
    Ok(report)
}

// A single Knuth class is pattern-Knuth closed exactly for superstandard
// hooks. The finite closure bound decides each instance completely.
fn superstandard_closure(size_max: usize, limits: &Limits) -> Result<VerificationReport> {
    let mut report = VerificationReport::new("thm-ss").param("size_max", size_max);
    for m in 1..=size_max {
        for tab in syt_all(m) {
            report.count(1);
            let class: PatternSet = knuth_class(&tab, limits)?.into_iter().collect();
            let closed = is_pattern_knuth_closed(&class, limits)?.holds;
            if closed != tab.is_superstandard_hook() {
                report.fail(format!(
                    "class of {tab:?} closed = {closed} but superstandard hook = {}",
                    tab.is_superstandard_hook()
                ));
            }
        }
    }
    Ok(report)
}

const HOOK_EXPANSION_PAIRS: [(usize, usize); 6] = [(2, 2), (3, 2), (2, 3), (4, 2), (3, 3), (2, 4)];

// Schur coefficients of the hook-class generating function count the
// tableaux with no ascending sequence out of cell (1, r).
fn hook_expansion(params: &ClaimParams, limits: &Limits) -> Result<VerificationReport> {
    let n_max = params.n.unwrap_or(8);
    let pairs: Vec<(usize, usize)> = match (params.r, params.s) {
        (Some(r), Some(s)) => vec![(r, s)],
        _ => HOOK_EXPANSION_PAIRS.to_vec(),
    };
    let mut report = VerificationReport::new("thm-hook-expansion")
        .param("n_max", n_max)
        .param("pairs", format!("{pairs:?}"));
    for &(r, s) in &pairs {
        let shape = Partition::hook(r, s - 1)?;
        let tab = superstandard(&shape, Orientation::Row);
        let class: PatternSet = knuth_class(&tab, limits)?.into_iter().collect();
        for n in 0..=n_max {
            report.count(1);
            let q = qn(&class, n, limits)?;
            let Some(v) = expand_or_fail(&mut report, &q, &format!("Q_{n}(K hook {r},{s})"))
            else {
                continue;
            };
            let mut counted = SchurVector::zero(n);
            for (shape, count) in av_tableaux(n, r, s) {
                counted.set(shape, Coeff::from(count));
            }
            if v != counted {
                report.fail(format!(
                    "Q_{n} of the ({r},{s}) hook class disagrees with the tableau count"
                ));
            }
        }
    }
    Ok(report)
}

// The two partial-shuffle families have equal generating functions, both
// given by the fattened-hook sum, via descent-preserving maskings.
fn partial_shuffles(params: &ClaimParams, limits: &Limits) -> Result<VerificationReport> {
    let n_max = params.n.unwrap_or(8);
    let ks: Vec<usize> = match params.k {
        Some(k) => vec![k],
        None => vec![1, 2, 3],
    };
    let bijection_bound = n_max.min(7);
    let mut report = VerificationReport::new("thm-ps")
        .param("n_max", n_max)
        .param("k", format!("{ks:?}"));
    for &k in &ks {
        let family1 = partial_shuffle_family(k, 1)?;
        let family2 = partial_shuffle_family(k, 2)?;
        for n in 0..=n_max {
            report.count(1);
            let q1 = qn(&family1, n, limits)?;
            let q2 = qn(&family2, n, limits)?;
            if q1 != q2 {
                report.fail(format!("Q_{n} differs between the k = {k} families"));
            }
            let Some(v) = expand_or_fail(&mut report, &q2, &format!("Q_{n}(family 2, k = {k})"))
            else {
                continue;
            };
            if v != fattened_hook_sum(n, k) {
                report.fail(format!("Q_{n} (k = {k}) misses the fattened-hook sum"));
            }
        }
        // Masking bijections: domain characterization, descent preservation,
        // and exact round trips.
        for n in 0..=bijection_bound {
            let avoid2: BTreeSet<Permutation> =
                avoiders(n, &family2, limits)?.into_iter().collect();
            for sigma in avoiders(n, &PatternSet::empty(), limits)? {
                report.count(1);
                let d = EndpointDecomposition::compute(&sigma, k);
                let tail_ok = d.rest.windows(2).all(|w| w[0] < w[1])
                    && d.rest
                        .iter()
                        .zip((n - d.rest.len() + 1) as u8..=n as u8)
                        .all(|(&v, expect)| v == expect);
                if tail_ok != avoid2.contains(&sigma) {
                    report.fail(format!(
                        "interval characterization fails at {sigma} (k = {k})"
                    ));
                }
            }
            for sigma in &avoid2 {
                let m = tail_interval_mask(sigma, k)?;
                if m.descent_set() != sigma.descent_set() {
                    report.fail(format!("masking changed descents of {sigma} (k = {k})"));
                }
                if &tail_interval_unmask(&m, k)? != sigma {
                    report.fail(format!("unmasking failed on {sigma} (k = {k})"));
                }
            }
            for sigma in avoiders(n, &family1, limits)? {
                let m = block_interval_mask(&sigma, k)?;
                if m.descent_set() != sigma.descent_set() {
                    report.fail(format!(
                        "block masking changed descents of {sigma} (k = {k})"
                    ));
                }
                if block_interval_unmask(&m, k)? != sigma {
                    report.fail(format!("block unmasking failed on {sigma} (k = {k})"));
                }
            }
        }
    }
    Ok(report)
}

// Evidence-level: displacing any letter of the staircase gives the same
// generating function. Stated without proof in the source material.
fn general_shuffle(params: &ClaimParams, limits: &Limits) -> Result<VerificationReport> {
    let n_max = params.n.unwrap_or(8);
    let ks: Vec<usize> = match params.k {
        Some(k) => vec![k],
        None => vec![1, 2, 3],
    };
    let mut report = VerificationReport::new("sec4-general-shuffle")
        .param("n_max", n_max)
        .param("k", format!("{ks:?}"))
        .param("evidence_level", "true");
    for &k in &ks {
        for a in 1..=(k + 2) {
            let patterns = partial_shuffle_general(k, a)?;
            for n in 0..=n_max {
                report.count(1);
                let q = qn(&patterns, n, limits)?;
                let Some(v) =
                    expand_or_fail(&mut report, &q, &format!("Q_{n}(displaced {a}, k = {k})"))
                else {
                    continue;
                };
                if v != fattened_hook_sum(n, k) {
                    report.fail(format!(
                        "Q_{n} with displaced letter {a} (k = {k}) misses the sum"
                    ));
                }
            }
        }
    }
    Ok(report)
}

// Unions of pattern-Knuth closed sets are pattern-Knuth closed.
fn union_closure(limits: &Limits) -> Result<VerificationReport> {
    let mut report = VerificationReport::new("prop-union");
    let mut closed_sets: Vec<PatternSet> = vec![
        PatternSet::singleton(Permutation::identity(3)),
        PatternSet::singleton(Permutation::decreasing(4)),
        knuth_class_shape(&Partition::new(vec![3, 1, 1])?, limits)?
            .into_iter()
            .collect(),
    ];
    // Superstandard hook classes and inverse-descent classes at n = 4.
    for (a, b) in [(2usize, 2usize), (3, 1)] {
        let hook = superstandard(&Partition::hook(a, b)?, Orientation::Row);
        closed_sets.push(knuth_class(&hook, limits)?.into_iter().collect());
    }
    closed_sets.push(
        inverse_descent_class(4, &BTreeSet::from([1]), limits)?
            .into_iter()
            .collect(),
    );
    for set in &closed_sets {
        if !is_pattern_knuth_closed(set, limits)?.holds {
            report.fail(format!("base set {set} is not closed"));
        }
    }
    for (i, a) in closed_sets.iter().enumerate() {
        for b in &closed_sets[i + 1..] {
            report.count(1);
            if !is_pattern_knuth_closed(&a.union(b), limits)?.holds {
                report.fail(format!("union of {a} and {b} is not closed"));
            }
        }
    }
    Ok(report)
}

// A permutation split into an increasing and a decreasing part has one of
// three near-hook shapes.
fn monotone_union_shapes(n_max: usize, limits: &Limits) -> Result<VerificationReport> {
    let mut report = VerificationReport::new("lemma-uid").param("n_max", n_max);
    for n in 0..=n_max {
        for sigma in avoiders(n, &PatternSet::empty(), limits)? {
            report.count(1);
            let shape = rs_shape(&sigma);
            let word = sigma.word();
            for mask in 0u32..(1 << n) {
                let mut inc_prev = 0u8;
                let mut dec_prev = u8::MAX;
                let mut ok = true;
                let mut a = 0usize;
                for (i, &v) in word.iter().enumerate() {
                    if mask & (1 << i) != 0 {
                        if v <= inc_prev {
                            ok = false;
                            break;
                        }
                        inc_prev = v;
                        a += 1;
                    } else {
                        if v >= dec_prev {
                            ok = false;
                            break;
                        }
                        dec_prev = v;
                    }
                }
                if !ok {
                    continue;
                }
                let b = n - a;
                // Candidate shapes; constructors reject the degenerate ones.
                let mut allowed: Vec<Partition> = Vec::new();
                allowed.extend(Partition::hook(a, b));
                if b >= 1 {
                    allowed.extend(Partition::hook(a + 1, b - 1));
                }
                if b >= 2 {
                    let mut parts = vec![a as u8, 2];
                    parts.extend(std::iter::repeat(1).take(b - 2));
                    allowed.extend(Partition::new(parts));
                }
                if !allowed.contains(&shape) {
                    report.fail(format!(
                        "{sigma} splits as increasing {a} + decreasing {b} but has shape {shape}"
                    ));
                }
            }
        }
    }
    // The reference witness needs the third shape.
    let witness: Permutation = "65127843".parse().unwrap();
    if rs_shape(&witness).parts() != [4, 2, 1, 1] {
        report.fail("65127843 no longer realizes the exceptional shape".to_string());
    }
    Ok(report)
}

const SHAPE_UNION_PAIRS: [(usize, usize); 4] = [(2, 1), (3, 1), (2, 2), (3, 2)];

// The union of the two shape classes K(a,1^b) and K(a,2,1^{b-1}) is
// pattern-Knuth closed with generating function summing over shapes that do
// not contain the hook.
fn shape_union(params: &ClaimParams, limits: &Limits) -> Result<VerificationReport> {
    let n_max = params.n.unwrap_or(7);
    let pairs: Vec<(usize, usize)> = match (params.a, params.b) {
        (Some(a), Some(b)) => vec![(a, b)],
        _ => SHAPE_UNION_PAIRS.to_vec(),
    };
    let mut report = VerificationReport::new("thm-pkc-shape")
        .param("n_max", n_max)
        .param("pairs", format!("{pairs:?}"));
    for &(a, b) in &pairs {
        let mu = Partition::hook(a, b)?;
        let mut tau_parts = vec![a as u8, 2];
        tau_parts.extend(std::iter::repeat(1).take(b - 1));
        let tau = Partition::new(tau_parts)?;
        let patterns = knuth_class_shape(&mu, limits)?
            .into_iter()
            .chain(knuth_class_shape(&tau, limits)?)
            .collect::<PatternSet>();
        if !is_pattern_knuth_closed(&patterns, limits)?.holds {
            report.fail(format!("K{mu} + K{tau} is not pattern-Knuth closed"));
        }
        for n in 0..=n_max {
            report.count(1);
            let q = qn(&patterns, n, limits)?;
            let Some(v) = expand_or_fail(&mut report, &q, &format!("Q_{n}(K{mu} + K{tau})"))
            else {
                continue;
            };
            if v != shape_avoider_sum(n, &mu) {
                report.fail(format!("Q_{n}(K{mu} + K{tau}) misses the shape sum"));
            }
        }
    }
    Ok(report)
}

// A single class fills a whole inverse-descent class iff the tableau is a
// superstandard hook; the realizable descent sets are prefix or suffix
// intervals.
fn single_class_forms(n_max: usize, limits: &Limits) -> Result<VerificationReport> {
    let mut report = VerificationReport::new("lemma-ssh").param("n_max", n_max);
    for n in 1..=n_max {
        let forms = crate::lab::pairs::superstandard_hook_descents(n);
        for tab in syt_all(n) {
            report.count(1);
            let class = knuth_class(&tab, limits)?;
            // (i) the class fills its inverse-descent class; (ii) it does so
            // with an interval descent set; (iii) superstandard hook.
            let fills = class == inverse_descent_class(n, &tab.descent_set(), limits)?;
            let fills_interval = fills && forms.contains(&tab.descent_set());
            let hook = tab.is_superstandard_hook();
            if fills != fills_interval || fills_interval != hook {
                report.fail(format!(
                    "{tab:?}: fills = {fills}, interval fill = {fills_interval}, hook = {hook}"
                ));
            }
        }
    }
    Ok(report)
}

// Swap classes are exactly the inverse-descent classes.
fn swap_class_structure(n_max: usize, limits: &Limits) -> Result<VerificationReport> {
    let mut report = VerificationReport::new("lemma-swap-closed").param("n_max", n_max);
    for n in 1..=n_max {
        for bits in 0u32..(1 << (n - 1)) {
            report.count(1);
            let j_set: BTreeSet<usize> = (1..n).filter(|&j| bits & (1 << (j - 1)) != 0).collect();
            let class = inverse_descent_class(n, &j_set, limits)?;
            let rep = crate::lab::closure::inverse_descent_representative(&j_set, n)?;
            if swap_component(&rep) != class {
                report.fail(format!(
                    "swap component of {rep} differs from the class of {j_set:?}"
                ));
            }
            let as_set: PatternSet = class.iter().cloned().collect();
            if !is_swap_closed(&as_set).holds {
                report.fail(format!("class of {j_set:?} is not swap closed"));
            }
        }
    }
    Ok(report)
}

// All unions of Knuth classes sharing one descent set, as candidate
// i-descent-consistent sets: pattern-Knuth closure holds exactly for the
// full inverse-descent class. Sets that are not class unions cannot be
// closed, so this candidate space is exhaustive.
fn consistent_closed_sets(n_max: usize, limits: &Limits) -> Result<VerificationReport> {
    let mut report = VerificationReport::new("thm-swap-closed").param("n_max", n_max);
    for n in 1..=n_max {
        let tableaux = syt_all(n);
        let mut by_descents: std::collections::BTreeMap<BTreeSet<usize>, Vec<StandardTableau>> =
            std::collections::BTreeMap::new();
        for t in tableaux {
            by_descents.entry(t.descent_set()).or_default().push(t);
        }
        for (j_set, fiber) in by_descents {
            let full = inverse_descent_class(n, &j_set, limits)?;
            for bits in 1u32..(1 << fiber.len()) {
                report.count(1);
                let mut members: BTreeSet<Permutation> = BTreeSet::new();
                for (i, t) in fiber.iter().enumerate() {
                    if bits & (1 << i) != 0 {
                        members.extend(knuth_class(t, limits)?);
                    }
                }
                let patterns: PatternSet = members.iter().cloned().collect();
                let closed = is_pattern_knuth_closed(&patterns, limits)?.holds;
                let swap = is_swap_closed(&patterns).holds;
                let is_full = members == full;
                if closed != is_full {
                    report.fail(format!(
                        "classes {bits:#b} of {j_set:?}: closed = {closed}, full = {is_full}"
                    ));
                }
                if closed && !swap {
                    report.fail(format!(
                        "closed consistent set for {j_set:?} is not swap closed"
                    ));
                }
            }
        }
    }
    Ok(report)
}

// Deleting any value other than the marked one changes the inverse descents.
fn four_points(n_max: usize, limits: &Limits) -> Result<VerificationReport> {
    let mut report = VerificationReport::new("lemma-4points").param("n_max", n_max);
    for n in 4..=n_max {
        for sigma in avoiders(n, &PatternSet::empty(), limits)? {
            let word = sigma.word();
            let pos = |v: u8| word.iter().position(|&w| w == v).unwrap();
            for m in 4..=n as u8 {
                if !(pos(m - 3) < pos(m - 1) && pos(m - 1) < pos(m) && pos(m) < pos(m - 2)) {
                    continue;
                }
                report.count(1);
                let reference = sigma.delete_value(m - 2)?.ides();
                for x in 1..=n as u8 {
                    let same = sigma.delete_value(x)?.ides() == reference;
                    if same != (x == m - 2) {
                        report.fail(format!("{sigma}: deleting {x} matches deleting {}", m - 2));
                    }
                }
            }
        }
    }
    Ok(report)
}

/// All unions of Knuth classes of S_n, capped at `max_classes` classes per
/// union when given.
fn class_unions(
    n: usize,
    max_classes: Option<usize>,
    limits: &Limits,
) -> Result<Vec<PatternSet>> {
    let classes: Vec<BTreeSet<Permutation>> = syt_all(n)
        .iter()
        .map(|t| knuth_class(t, limits))
        .collect::<Result<_>>()?;
    let mut out = Vec::new();
    let count = classes.len();
    if let Some(cap) = max_classes {
        // Unions of up to `cap` classes, plus the full union.
        use itertools::Itertools;
        for size in 1..=cap.min(count) {
            for combo in (0..count).combinations(size) {
                let mut members = BTreeSet::new();
                for i in combo {
                    members.extend(classes[i].iter().cloned());
                }
                out.push(members.into_iter().collect());
            }
        }
        let mut all = BTreeSet::new();
        for c in &classes {
            all.extend(c.iter().cloned());
        }
        out.push(all.into_iter().collect());
    } else {
        for bits in 1u64..(1 << count) {
            let mut members = BTreeSet::new();
            for (i, class) in classes.iter().enumerate() {
                if bits & (1 << i) != 0 {
                    members.extend(class.iter().cloned());
                }
            }
            out.push(members.into_iter().collect());
        }
    }
    Ok(out)
}

fn move_max_right(pi: &Permutation) -> Permutation {
    let n = pi.len() as u8;
    let mut word: Vec<u8> = pi.word().iter().copied().filter(|&v| v != n).collect();
    word.push(n);
    Permutation::from_word(word).unwrap()
}

fn move_max_left(pi: &Permutation) -> Permutation {
    let n = pi.len() as u8;
    let mut word = vec![n];
    word.extend(pi.word().iter().copied().filter(|&v| v != n));
    Permutation::from_word(word).unwrap()
}

fn swap_max_right(pi: &Permutation) -> Permutation {
    let n = pi.len() as u8;
    let word = pi.word();
    let i = word.iter().position(|&v| v == n).unwrap();
    if i + 1 >= word.len() || word[i + 1] == n - 1 {
        return pi.clone();
    }
    let mut next = word.to_vec();
    next.swap(i, i + 1);
    Permutation::from_word(next).unwrap()
}

// In a closed set avoiding the top inverse descent, the maximum can always
// swap one step right. Exhaustive over class unions at small n, capped
// union sizes above that.
fn swap_right(n_max: usize, limits: &Limits) -> Result<VerificationReport> {
    let mut report = VerificationReport::new("lemma-swap-right").param("n_max", n_max);
    for n in 2..=n_max {
        let cap = if n <= 4 { None } else { Some(2) };
        for patterns in class_unions(n, cap, limits)? {
            if patterns.iter().any(|p| p.ides().contains(&(n - 1))) {
                continue;
            }
            if !is_pattern_knuth_closed(&patterns, limits)?.holds {
                continue;
            }
            report.count(1);
            for pi in patterns.iter() {
                if !patterns.contains_member(&swap_max_right(pi)) {
                    report.fail(format!("{pi} cannot swap its maximum right in {patterns}"));
                }
            }
        }
    }
    Ok(report)
}

// Deleting the maximum from a closed set whose members can all park the
// maximum at one end leaves a closed set.
fn closure_after_deletion(n_max: usize, limits: &Limits) -> Result<VerificationReport> {
    let mut report = VerificationReport::new("lemma-pkc-induct").param("n_max", n_max);
    for n in 2..=n_max {
        let cap = if n <= 4 { None } else { Some(2) };
        for patterns in class_unions(n, cap, limits)? {
            if !is_pattern_knuth_closed(&patterns, limits)?.holds {
                continue;
            }
            let parks = patterns.iter().all(|pi| {
                patterns.contains_member(&move_max_right(pi))
                    || patterns.contains_member(&move_max_left(pi))
            });
            if !parks {
                continue;
            }
            report.count(1);
            let deleted: PatternSet = patterns
                .iter()
                .map(|pi| pi.delete_value(n as u8).expect("maximum present"))
                .collect();
            if !is_pattern_knuth_closed(&deleted, limits)?.holds {
                report.fail(format!("deletion of the maximum from {patterns} is not closed"));
            }
        }
    }
    Ok(report)
}

// For a closed pair with opposite top descents and split bottom descent,
// some member of the first class ends in n and some member of the second
// starts with n.
fn extreme_positions(n_max: usize, limits: &Limits) -> Result<VerificationReport> {
    let mut report = VerificationReport::new("lemma-1n").param("n_max", n_max);
    for n in 4..=n_max {
        let tableaux = syt_all(n);
        for s in &tableaux {
            for t in &tableaux {
                if s == t {
                    continue;
                }
                let ds = s.descent_set();
                let dt = t.descent_set();
                if ds.contains(&(n - 1)) || !dt.contains(&(n - 1)) {
                    continue;
                }
                if ds.contains(&1) == dt.contains(&1) {
                    continue;
                }
                let class_s = knuth_class(s, limits)?;
                let class_t = knuth_class(t, limits)?;
                let patterns: PatternSet =
                    class_s.iter().chain(class_t.iter()).cloned().collect();
                if !is_pattern_knuth_closed(&patterns, limits)?.holds {
                    continue;
                }
                report.count(1);
                let ends = class_s.iter().any(|p| p.word().last() == Some(&(n as u8)));
                let starts = class_t.iter().any(|p| p.word().first() == Some(&(n as u8)));
                if !ends || !starts {
                    report.fail(format!(
                        "pair {s:?}, {t:?}: ends = {ends}, starts = {starts}"
                    ));
                }
            }
        }
    }
    Ok(report)
}

// Three equivalent descriptions of classes whose tableau keeps the maximum
// in the top row.
fn append_max_conditions(n_max: usize, limits: &Limits) -> Result<VerificationReport> {
    let mut report = VerificationReport::new("lemma-rs-ds").param("n_max", n_max);
    for n in 1..=n_max {
        for tab in syt_all(n) {
            report.count(1);
            let class = knuth_class(&tab, limits)?;
            let ends_in_max = class.iter().any(|p| p.word().last() == Some(&(n as u8)));
            let deleted_class: BTreeSet<Permutation> = class
                .iter()
                .map(|p| p.delete_value(n as u8).expect("maximum present"))
                .collect();
            let hat = tab.delete_max()?;
            let top_row = tab.position_of(n as u8).map(|(row, _)| row) == Some(1);
            let class_of_hat = knuth_class(&hat, limits)?;
            let deletion_commutes = deleted_class == class_of_hat && top_row;
            let append_stays = class.iter().all(|p| class.contains(&move_max_right(p)));
            if !(ends_in_max == deletion_commutes && deletion_commutes == append_stays) {
                report.fail(format!(
                    "{tab:?}: ends = {ends_in_max}, deletion = {deletion_commutes}, append = {append_stays}"
                ));
            }
        }
    }
    Ok(report)
}

// The four equivalent conditions for a single Knuth class.
fn single_classes(n_max: usize, limits: &Limits) -> Result<VerificationReport> {
    let mut report = VerificationReport::new("thm-single").param("n_max", n_max);
    for n in 1..=n_max {
        for tab in syt_all(n) {
            report.count(1);
            let c = classify_knuth_union(std::slice::from_ref(&tab), limits)?;
            if !c.all_agree() {
                report.fail(format!(
                    "{tab:?}: closed = {}, swap = {}, descent form = {}, structural = {}",
                    c.pattern_knuth_closed, c.swap_closed, c.inverse_descent_form, c.structural_form
                ));
            }
        }
    }
    Ok(report)
}

// The constructed pair families match an exhaustive search and fill their
// inverse-descent classes.
fn pair_families(n_max: usize, limits: &Limits) -> Result<VerificationReport> {
    let mut report = VerificationReport::new("lemma-doubles").param("n_max", n_max);
    for n in 4..=n_max {
        let constructed = descent_complete_pairs(n);
        report.count(constructed.len() as u64);
        for (s, t) in &constructed {
            let mut union = knuth_class(s, limits)?;
            union.extend(knuth_class(t, limits)?);
            if union != inverse_descent_class(n, &s.descent_set(), limits)? {
                report.fail(format!("pair {s:?}, {t:?} does not fill its class"));
            }
        }
        let searched = descent_complete_pairs_by_search(n, limits)?;
        if constructed != searched {
            report.fail(format!(
                "constructed {} pairs but search found {} at n = {n}",
                constructed.len(),
                searched.len()
            ));
        }
    }
    Ok(report)
}

// The four equivalent conditions for unions of two Knuth classes.
fn pair_classes(n_max: usize, limits: &Limits) -> Result<VerificationReport> {
    let mut report = VerificationReport::new("thm-pairs").param("n_max", n_max);
    for n in 1..=n_max {
        let tableaux = syt_all(n);
        for (i, s) in tableaux.iter().enumerate() {
            for t in &tableaux[i + 1..] {
                report.count(1);
                let c = classify_knuth_union(&[s.clone(), t.clone()], limits)?;
                if !c.all_agree() {
                    report.fail(format!(
                        "{s:?} + {t:?}: closed = {}, swap = {}, descent form = {}, structural = {}",
                        c.pattern_knuth_closed,
                        c.swap_closed,
                        c.inverse_descent_form,
                        c.structural_form
                    ));
                }
            }
        }
    }
    Ok(report)
}

// Pattern-Knuth closure does not imply swap closure: the three-class union
// escapes via one swap into a fourth class.
fn three_class_counterexample(limits: &Limits) -> Result<VerificationReport> {
    let mut report = VerificationReport::new("sec5-counterexample");
    let t1 = StandardTableau::new(vec![vec![1, 2, 4], vec![3]])?;
    let t2 = StandardTableau::new(vec![vec![1, 3, 4], vec![2]])?;
    let t3 = StandardTableau::new(vec![vec![1, 2, 3], vec![4]])?;
    let t4 = StandardTableau::new(vec![vec![1, 2], vec![3, 4]])?;
    let mut members: BTreeSet<Permutation> = knuth_class(&t1, limits)?;
    members.extend(knuth_class(&t2, limits)?);
    members.extend(knuth_class(&t3, limits)?);
    let patterns: PatternSet = members.into_iter().collect();
    report.count(patterns.len() as u64);

    if !is_pattern_knuth_closed(&patterns, limits)?.holds {
        report.fail("three-class union should be pattern-Knuth closed".to_string());
    }
    if is_swap_closed(&patterns).holds {
        report.fail("three-class union should not be swap closed".to_string());
    }
    let start: Permutation = "3124".parse().unwrap();
    let target: Permutation = "3142".parse().unwrap();
    if !patterns.contains_member(&start) || p_tableau(&start) != t1 {
        report.fail("3124 should sit in the first class".to_string());
    }
    if !crate::lab::closure::swap_neighbors(&start).contains(&target) {
        report.fail("3124 -> 3142 should be a single swap".to_string());
    }
    if patterns.contains_member(&target) || p_tableau(&target) != t4 {
        report.fail("3142 should escape into the fourth class".to_string());
    }
    Ok(report)
}

// The stability triple: the full shape class is closed, the punctured class
// is asymmetric at degree 6, the two avoider sets agree at size 7, hence the
// punctured class is Schur nonnegative from 7 on.
fn stability_triple(n_max: usize, limits: &Limits) -> Result<VerificationReport> {
    let mut report = VerificationReport::new("sec6-stability").param("n_max", n_max);
    let shape = Partition::new(vec![3, 1, 1])?;
    let full: PatternSet = knuth_class_shape(&shape, limits)?.into_iter().collect();
    let punctured = pi_zero(limits)?;
    report.count((full.len() + punctured.len()) as u64);

    if !is_pattern_knuth_closed(&full, limits)?.holds {
        report.fail("the (3,1,1) shape class should be pattern-Knuth closed".to_string());
    }
    if qn(&punctured, 6, limits)?.is_symmetric() {
        report.fail("the punctured class should not be symmetric at degree 6".to_string());
    }
    let stable = stability_check(&punctured, &full, 7, limits)?;
    if !stable.holds {
        report.fail(format!(
            "avoider sets differ at size 7: {:?}",
            stable.witnesses
        ));
    }
    let below = stability_check(&punctured, &full, 6, limits)?;
    if below.holds {
        report.fail("avoider sets should differ at size 6".to_string());
    }
    for n in 7..=n_max {
        let q = qn(&punctured, n, limits)?;
        match expand_or_fail(&mut report, &q, &format!("Q_{n}(punctured class)")) {
            Some(v) if !v.is_nonnegative() => {
                report.fail(format!("Q_{n} of the punctured class has a negative coefficient"))
            }
            _ => {}
        }
    }
    Ok(report)
}
