//! Exploratory survey: which p-element pattern sets drawn from one symmetric
//! group keep Q_n symmetric through a bounded range of n. Evidence only — no
//! unbounded claim is made.

use itertools::Itertools;

use crate::config::Limits;
use crate::error::{Error, Result};
use crate::lab::qn;
use crate::perm::{avoiders, PatternSet};

#[derive(Clone, Copy, Debug)]
pub struct SurveyOptions {
    /// Upper bound on the number of p-subsets examined.
    pub budget: u64,
    /// Check one representative per reverse/complement orbit. Symmetry of
    /// Q_n transfers across the orbit, so survivors are reported orbit-wide
    /// either way.
    pub canonicalize: bool,
}

impl Default for SurveyOptions {
    fn default() -> Self {
        SurveyOptions {
            budget: 1_000_000,
            canonicalize: true,
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SurveyStats {
    /// Number of p-subsets of the symmetric group.
    pub total_sets: u64,
    /// Sets actually run through the symmetry check.
    pub checked: u64,
    /// Sets reported as symmetric through the whole range.
    pub survivors: u64,
}

fn orbit(patterns: &PatternSet) -> Vec<PatternSet> {
    let r = patterns.reverse();
    let c = patterns.complement();
    let rc = r.complement();
    let mut all = vec![patterns.clone(), r, c, rc];
    all.sort();
    all.dedup();
    all
}

fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let mut out: u128 = 1;
    for i in 0..k.min(n - k) {
        out = out * (n - i) as u128 / (i + 1) as u128;
        if out > u64::MAX as u128 {
            return u64::MAX;
        }
    }
    out as u64
}

/// Enumerates the p-subsets of S_k and reports, through the callback, each
/// set whose Q_n stays symmetric for every n <= n_max. Survivors are emitted
/// in lexicographic order.
pub fn survey_symmetric_sets(
    k: usize,
    p: usize,
    n_max: usize,
    options: &SurveyOptions,
    limits: &Limits,
    mut on_survivor: impl FnMut(&PatternSet),
) -> Result<SurveyStats> {
    limits.check(k)?;
    limits.check(n_max)?;
    let group = avoiders(k, &PatternSet::empty(), limits)?;
    let total_sets = binomial(group.len() as u64, p as u64);
    if total_sets > options.budget {
        return Err(Error::limit(format!(
            "{total_sets} candidate sets exceed the budget of {}",
            options.budget
        )));
    }

    let mut stats = SurveyStats {
        total_sets,
        ..SurveyStats::default()
    };
    let mut survivors: Vec<PatternSet> = Vec::new();
    for combo in group.into_iter().combinations(p) {
        let patterns = PatternSet::new(combo);
        let members = orbit(&patterns);
        if options.canonicalize && members[0] != patterns {
            continue; // another orbit member is (or was) checked
        }
        stats.checked += 1;
        let mut symmetric = true;
        for n in 0..=n_max {
            if !qn(&patterns, n, limits)?.is_symmetric() {
                symmetric = false;
                break;
            }
        }
        if symmetric {
            if options.canonicalize {
                survivors.extend(members);
            } else {
                survivors.push(patterns);
            }
        }
    }
    survivors.sort();
    survivors.dedup();
    stats.survivors = survivors.len() as u64;
    for s in &survivors {
        on_survivor(s);
    }
    Ok(stats)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::Permutation;

    fn collect_survivors(
        k: usize,
        p: usize,
        n_max: usize,
        options: &SurveyOptions,
    ) -> (Vec<PatternSet>, SurveyStats) {
        let limits = Limits::default();
        let mut out = Vec::new();
        let stats =
            survey_symmetric_sets(k, p, n_max, options, &limits, |s| out.push(s.clone())).unwrap();
        (out, stats)
    }

    #[test]
    fn singletons_survive_only_at_the_extremes() {
        let (survivors, stats) = collect_survivors(3, 1, 5, &SurveyOptions::default());
        assert_eq!(
            survivors,
            vec![
                PatternSet::singleton(Permutation::identity(3)),
                PatternSet::singleton(Permutation::decreasing(3)),
            ]
        );
        assert_eq!(stats.total_sets, 6);
        assert_eq!(stats.survivors, 2);
    }

    #[test]
    fn canonicalization_does_not_change_survivors() {
        let all = SurveyOptions {
            canonicalize: false,
            ..SurveyOptions::default()
        };
        let (full, full_stats) = collect_survivors(3, 2, 6, &all);
        let (canon, canon_stats) = collect_survivors(3, 2, 6, &SurveyOptions::default());
        assert_eq!(full, canon);
        assert!(canon_stats.checked < full_stats.checked);
        // The known sporadic pair survives.
        let sporadic = PatternSet::new(["213".parse().unwrap(), "231".parse().unwrap()]);
        assert!(full.contains(&sporadic));
    }

    #[test]
    fn budget_is_enforced() {
        let tight = SurveyOptions {
            budget: 5,
            ..SurveyOptions::default()
        };
        let limits = Limits::default();
        let err = survey_symmetric_sets(3, 2, 4, &tight, &limits, |_| {});
        assert!(matches!(err, Err(crate::error::Error::ResourceLimit(_))));
    }
}
