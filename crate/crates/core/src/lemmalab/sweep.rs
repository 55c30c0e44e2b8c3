use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use super::lemmas::{check_instance, Instance, LemmaId};
use super::oracle::{delta_lag, theorem1_residual};
use super::predictions::barker_predictions;
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::search::{barker_full, enumerate_balanced_rles, with_workers};
use crate::seqcore::{
    aperiodic_autocorrelations, encode_rle, is_balanced, is_skew_symmetric, run_structure,
    run_vector, BinarySequence, RunVector,
};

/// Witnesses kept per entry; `failure_count` has the full number.
pub const MAX_WITNESSES: usize = 16;

/// A verifier together with the population it is swept over.
///
/// | target            | population per `n`                                   |
/// |-------------------|------------------------------------------------------|
/// | `theorem1`        | all `2^n` sequences                                  |
/// | `appendix-a`      | all `2^n` sequences                                  |
/// | `prop-skew`       | all `2^n` sequences, odd `n`                         |
/// | lemma ids         | balanced RLEs of odd `n`, times the lemma parameter  |
/// | `barker-balanced` | Barker sequences of odd `n` from the pruned search   |
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(into = "String")]
pub enum Target {
    Theorem1,
    AppendixA,
    PropSkew,
    Lemma(LemmaId),
    BarkerBalanced,
}

impl Target {
    pub fn all() -> Vec<Target> {
        let mut v = vec![Target::Theorem1, Target::AppendixA, Target::PropSkew];
        v.extend(LemmaId::ALL.into_iter().map(Target::Lemma));
        v.push(Target::BarkerBalanced);
        v
    }

    pub fn limit(self, limits: &Limits) -> usize {
        match self {
            Target::Theorem1 | Target::AppendixA => limits.sequence_sweep_max_n,
            Target::PropSkew => limits.prop_skew_max_n,
            Target::Lemma(_) => limits.rle_sweep_max_n,
            Target::BarkerBalanced => limits.full_max_n,
        }
    }

    fn odd_only(self) -> bool {
        !matches!(self, Target::Theorem1 | Target::AppendixA)
    }

    /// Parses a comma-separated list. `all` selects every target and `lemmas`
    /// selects `L1` through `L6`.
    pub fn parse_list(s: &str) -> Result<Vec<Target>> {
        let mut out = Vec::new();
        for item in s.split(',').map(str::trim).filter(|x| !x.is_empty()) {
            match item.to_ascii_lowercase().as_str() {
                "all" => out.extend(Target::all()),
                "lemmas" => out.extend(LemmaId::ALL[..6].iter().copied().map(Target::Lemma)),
                _ => out.push(item.parse()?),
            }
        }
        if out.is_empty() {
            return Err(Error::UnknownLemma(s.to_string()));
        }
        out.sort();
        out.dedup();
        Ok(out)
    }
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Target::Theorem1 => f.write_str("theorem1"),
            Target::AppendixA => f.write_str("appendix-a"),
            Target::PropSkew => f.write_str("prop-skew"),
            Target::Lemma(id) => f.write_str(id.as_str()),
            Target::BarkerBalanced => f.write_str("barker-balanced"),
        }
    }
}

impl From<Target> for String {
    fn from(t: Target) -> Self {
        t.to_string()
    }
}

impl FromStr for Target {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "theorem1" => Ok(Target::Theorem1),
            "appendix-a" => Ok(Target::AppendixA),
            "prop-skew" => Ok(Target::PropSkew),
            "barker-balanced" => Ok(Target::BarkerBalanced),
            _ => s.parse().map(Target::Lemma),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub instance: String,
    pub parameter: Option<i64>,
    pub detail: String,
}

/// JSON shape: `{target, n, population, hypotheses_met_count, failure_count, failures}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepEntry {
    pub target: Target,
    pub n: usize,
    pub population: u64,
    pub hypotheses_met_count: u64,
    pub failure_count: u64,
    /// The first [`MAX_WITNESSES`] failures in canonical instance order.
    pub failures: Vec<Witness>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Truncation {
    pub target: Target,
    pub limit: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepReport {
    pub n_max: usize,
    /// False when some target was cut at its limit.
    pub complete: bool,
    pub truncated: Vec<Truncation>,
    pub entries: Vec<SweepEntry>,
}

impl SweepReport {
    pub fn failure_count(&self) -> u64 {
        self.entries.iter().map(|e| e.failure_count).sum()
    }

    pub fn is_success(&self) -> bool {
        self.complete && self.failure_count() == 0
    }

    pub fn entries_for(&self, target: Target) -> impl Iterator<Item = &SweepEntry> {
        self.entries.iter().filter(move |e| e.target == target)
    }
}

#[derive(Debug, Clone, Default)]
pub struct SweepConfig {
    pub limits: Limits,
    /// `None` uses the global rayon pool.
    pub workers: Option<usize>,
}

#[derive(Default)]
struct Tally {
    population: u64,
    met: u64,
    failure_count: u64,
    failures: Vec<Witness>,
}

impl Tally {
    fn record(&mut self, met: bool, failure: Option<Witness>) {
        self.population += 1;
        self.met += u64::from(met);
        if let Some(w) = failure {
            self.failure_count += 1;
            if self.failures.len() < MAX_WITNESSES {
                self.failures.push(w);
            }
        }
    }

    fn merge(mut self, other: Tally) -> Tally {
        self.population += other.population;
        self.met += other.met;
        self.failure_count += other.failure_count;
        let room = MAX_WITNESSES - self.failures.len();
        self.failures.extend(other.failures.into_iter().take(room));
        self
    }

    fn into_entry(self, target: Target, n: usize) -> SweepEntry {
        SweepEntry {
            target,
            n,
            population: self.population,
            hypotheses_met_count: self.met,
            failure_count: self.failure_count,
            failures: self.failures,
        }
    }
}

/// Ordered parallel fold: the merged tally does not depend on scheduling.
fn fold_ordered(parts: Vec<Tally>) -> Tally {
    parts.into_iter().fold(Tally::default(), Tally::merge)
}

fn over_sequences(n: usize, per: impl Fn(&BinarySequence, &mut Tally) + Sync) -> Tally {
    let total = 1u64 << n;
    let chunk = 1u64 << 10;
    let parts = (0..total.div_ceil(chunk))
        .into_par_iter()
        .map(|c| {
            let mut tally = Tally::default();
            for bits in c * chunk..((c + 1) * chunk).min(total) {
                per(&BinarySequence::from_bits(bits, n).unwrap(), &mut tally);
            }
            tally
        })
        .collect();
    fold_ordered(parts)
}

fn witness(instance: impl ToString, parameter: Option<i64>, detail: String) -> Option<Witness> {
    Some(Witness {
        instance: instance.to_string(),
        parameter,
        detail,
    })
}

fn theorem1_one(seq: &BinarySequence, tally: &mut Tally) {
    let residual = theorem1_residual(seq);
    let bad = residual.iter().position(|&x| x != 0);
    tally.record(
        true,
        bad.and_then(|i| witness(seq, Some(i as i64 + 1), format!("residual = {}", residual[i]))),
    );
}

fn appendix_a_one(seq: &BinarySequence, tally: &mut Tally) {
    let n = seq.len();
    let c = aperiodic_autocorrelations(seq);
    let rv = run_vector(seq);
    let bad = (1..n).find_map(|k| {
        let d = delta_lag(seq, k as i64);
        let second_difference = -c[k + 1] + 2 * c[k] - c[k - 1];
        (d != 2 * rv.at(k) || d != second_difference).then(|| {
            (k, format!("C_k(delta) = {d}, 2 R_k = {}, -C_(k+1) + 2C_k - C_(k-1) = {second_difference}", 2 * rv.at(k)))
        })
    });
    tally.record(true, bad.and_then(|(k, detail)| witness(seq, Some(k as i64), detail)));
}

fn prop_skew_one(seq: &BinarySequence, tally: &mut Tally) {
    let skew = is_skew_symmetric(seq);
    let balanced = is_balanced(&run_structure(&encode_rle(seq)));
    let failure = (skew != balanced)
        .then(|| format!("skew-symmetric = {skew}, balanced = {balanced}"))
        .and_then(|d| witness(seq, None, d));
    tally.record(skew, failure);
}

fn barker_balanced(n: usize) -> Result<Tally> {
    let predicted = barker_predictions(n)?;
    let mut tally = Tally::default();
    for seq in barker_full(n) {
        let rs = run_structure(&encode_rle(&seq));
        let rv = RunVector::from_structure(&rs);
        let c = aperiodic_autocorrelations(&seq);
        let mut problems = Vec::new();
        if !is_balanced(&rs) {
            problems.push("RLE not balanced".to_string());
        }
        if rs.gamma != n.div_ceil(2) {
            problems.push(format!("gamma = {}", rs.gamma));
        }
        if c[1..n] != predicted.c[..] {
            problems.push(format!("C = {:?}", &c[1..n]));
        }
        if rv.r != predicted.r {
            problems.push(format!("R = {:?}", rv.r));
        }
        if rv.r_tilde != predicted.r_tilde {
            problems.push(format!("R~ = {:?}", rv.r_tilde));
        }
        let failure = (!problems.is_empty()).then(|| problems.join("; "));
        tally.record(true, failure.and_then(|d| witness(&seq, None, d)));
    }
    Ok(tally)
}

fn lemma_over_rles(id: LemmaId, n: usize) -> Result<Tally> {
    let rles = enumerate_balanced_rles(n)?;
    let parts = rles
        .par_iter()
        .map(|rle| {
            let inst = Instance::new(rle);
            let params: Vec<Option<i64>> = match id.parameter() {
                None => vec![None],
                Some("mu") => (1..inst.rs.gamma as i64).map(Some).collect(),
                Some(_) => (1..n as i64).map(Some).collect(),
            };
            let mut tally = Tally::default();
            for param in params {
                let v = check_instance(id, &inst, param)?;
                let failure = v
                    .is_failure()
                    .then(|| v.witness.clone().unwrap_or_default())
                    .and_then(|d| witness(&v.instance, v.parameter, d));
                tally.record(v.hypotheses_met, failure);
            }
            Ok(tally)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(fold_ordered(parts))
}

fn run_entry(target: Target, n: usize) -> Result<SweepEntry> {
    let tally = match target {
        Target::Theorem1 => over_sequences(n, theorem1_one),
        Target::AppendixA => over_sequences(n, appendix_a_one),
        Target::PropSkew => over_sequences(n, prop_skew_one),
        Target::Lemma(id) => lemma_over_rles(id, n)?,
        Target::BarkerBalanced => barker_balanced(n)?,
    };
    Ok(tally.into_entry(target, n))
}

pub fn sweep(n_max: usize, targets: &[Target]) -> Result<SweepReport> {
    sweep_with(n_max, targets, &SweepConfig::default())
}

/// Runs each target over every `n <= n_max` (odd `n` only where the population
/// requires it). A target whose limit is below `n_max` is run up to the limit and
/// the report is flagged incomplete.
pub fn sweep_with(n_max: usize, targets: &[Target], config: &SweepConfig) -> Result<SweepReport> {
    config.limits.validate()?;
    let mut truncated = Vec::new();
    let mut jobs = Vec::new();
    for &target in targets {
        let limit = target.limit(&config.limits);
        if n_max > limit {
            truncated.push(Truncation { target, limit });
        }
        let step = if target.odd_only() { 2 } else { 1 };
        jobs.extend((1..=n_max.min(limit)).step_by(step).map(|n| (target, n)));
    }
    let entries = with_workers(config.workers, || {
        jobs.into_iter()
            .map(|(target, n)| run_entry(target, n))
            .collect::<Result<Vec<_>>>()
    })?;
    Ok(SweepReport {
        n_max,
        complete: truncated.is_empty(),
        truncated,
        entries,
    })
}

/// Skew-symmetry against balance for every sequence of odd length `<= n_max`.
pub fn verify_prop_skew_balanced(n_max: usize) -> Result<SweepReport> {
    sweep(n_max, &[Target::PropSkew])
}
