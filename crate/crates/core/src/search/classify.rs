use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use super::{enumerate_barker, SearchMode, SearchSpec};
use crate::error::Result;
use crate::lemmalab::{
    all_barker_prefix, balanced_profile, check_lemma, check_p_odd, BalancedProfile, LemmaId,
    Verdict,
};
use crate::limits::Limits;
use crate::seqcore::{encode_rle, BinarySequence, RunLengthEncoding};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LengthCount {
    pub n: usize,
    pub barker_count: usize,
}

/// One normalized RLE (`p > 1`, start sign `+`) together with the checks run on it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassifiedRle {
    pub n: usize,
    pub rle: RunLengthEncoding,
    pub profile: BalancedProfile,
    /// `r_1 = r_2 = 3, r_3 = 1` or `r_1 in {3, 5}, r_2 = 2`; `None` for `n <= 5`.
    pub prefix_condition: Option<bool>,
    /// `n <= p + s_{nu+1} + alpha + 1`; `None` for `n <= 5`.
    pub length_bound: Option<bool>,
    pub p_odd: Verdict,
    pub all_barker: Verdict,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassificationReport {
    pub n_max: usize,
    /// Raw (unnormalized) Barker counts for every odd `n <= n_max`.
    pub counts: Vec<LengthCount>,
    /// Sorted by `n`, then by runs.
    pub rles: Vec<ClassifiedRle>,
    /// Sequences whose RLE keeps `p = 1` after reversal (only `n = 1`).
    pub excluded: Vec<String>,
    pub notes: Vec<String>,
}

impl ClassificationReport {
    pub fn rle_set(&self) -> BTreeSet<Vec<usize>> {
        self.rles.iter().map(|c| c.rle.runs().to_vec()).collect()
    }

    /// Every check recorded on the classified RLEs passed.
    pub fn all_checks_pass(&self) -> bool {
        self.rles.iter().all(|c| {
            c.prefix_condition != Some(false)
                && c.length_bound != Some(false)
                && !c.p_odd.is_failure()
                && !c.all_barker.is_failure()
        })
    }
}

/// Reversal when `r_1 = 1`, then negation so that `a_1 = +`.
fn normalize(seq: &BinarySequence) -> BinarySequence {
    let oriented = if encode_rle(seq).p() == 1 {
        seq.reversed()
    } else {
        seq.clone()
    };
    if oriented.elems()[0] < 0 {
        oriented.negated()
    } else {
        oriented
    }
}

pub fn classify_odd_barker(n_max: usize) -> Result<ClassificationReport> {
    classify_odd_barker_with(n_max, &Limits::default(), None)
}

/// Classifies the RLEs of all odd-length Barker sequences with `n <= n_max`,
/// found by the skew-restricted search.
pub fn classify_odd_barker_with(
    n_max: usize,
    limits: &Limits,
    workers: Option<usize>,
) -> Result<ClassificationReport> {
    let max_odd = if n_max.is_multiple_of(2) { n_max.saturating_sub(1) } else { n_max };
    let mut spec = SearchSpec::new(1, max_odd.max(1), SearchMode::SkewRestricted);
    spec.limits = *limits;
    spec.workers = workers;
    let found = enumerate_barker(&spec)?;

    let mut counts: BTreeMap<usize, usize> = spec.lengths().into_iter().map(|n| (n, 0)).collect();
    let mut rles = BTreeSet::new();
    let mut excluded = BTreeSet::new();
    for seq in found.iter().filter(|s| s.len() <= max_odd) {
        *counts.entry(seq.len()).or_default() += 1;
        let rle = encode_rle(&normalize(seq));
        if rle.p() > 1 {
            rles.insert((rle.n(), rle));
        } else {
            excluded.insert(seq.to_string());
        }
    }

    let rles = rles
        .into_iter()
        .map(|(n, rle)| {
            let profile = balanced_profile(&rle)?;
            let (prefix_condition, length_bound) = if n > 5 {
                (Some(all_barker_prefix(&rle)), Some(n <= profile.k0 + 1))
            } else {
                (None, None)
            };
            Ok(ClassifiedRle {
                n,
                p_odd: check_p_odd(&rle),
                all_barker: check_lemma(LemmaId::AllBarker, &rle, None)?,
                rle,
                profile,
                prefix_condition,
                length_bound,
            })
        })
        .collect::<Result<Vec<_>>>()?;

    let mut notes = Vec::new();
    if !excluded.is_empty() {
        notes.push("n = 1 is excluded from the p > 1 classification: r = (1) has p = 1".to_string());
    }
    Ok(ClassificationReport {
        n_max,
        counts: counts
            .into_iter()
            .map(|(n, barker_count)| LengthCount { n, barker_count })
            .collect(),
        rles,
        excluded: excluded.into_iter().collect(),
        notes,
    })
}
