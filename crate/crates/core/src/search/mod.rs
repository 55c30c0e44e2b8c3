//! Exhaustive enumeration of Barker sequences and balanced RLEs.
//!
//! Two independent routes find Barker sequences: a pruned depth-first search
//! over all sequences ([`SearchMode::Full`]) and an enumeration of the free half
//! of skew-symmetric sequences ([`SearchMode::SkewRestricted`]). Both verify
//! every candidate with [`is_barker`] before emitting it. Results are sorted in
//! canonical order (shorter first, then lexicographic with `+` before `-`) and do
//! not depend on the number of workers.

mod balanced;
mod classify;
mod full;
mod skew;

pub use balanced::{enumerate_balanced_rles, MAX_BALANCED_N};
pub use classify::{classify_odd_barker, classify_odd_barker_with, ClassificationReport, ClassifiedRle, LengthCount};
pub use full::{barker_filter_unpruned, barker_full};
pub use skew::barker_skew;

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::seqcore::{is_barker, BinarySequence};

/// Largest off-peak `|C_k|` a Barker sequence may have.
pub const PRUNE_THRESHOLD: i64 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SearchMode {
    Full,
    SkewRestricted,
}

impl FromStr for SearchMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "full" => Ok(SearchMode::Full),
            "skew" | "skew_restricted" | "skew-restricted" => Ok(SearchMode::SkewRestricted),
            other => Err(Error::UnknownMode(other.to_string())),
        }
    }
}

impl fmt::Display for SearchMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SearchMode::Full => "full",
            SearchMode::SkewRestricted => "skew_restricted",
        })
    }
}

/// Full mode covers every length in `min_n..=max_n`; skew-restricted mode needs
/// odd bounds and covers the odd lengths only.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchSpec {
    pub min_n: usize,
    pub max_n: usize,
    pub mode: SearchMode,
    /// Keep one representative per negation/reversal orbit.
    pub normalize: bool,
    /// `None` uses the global rayon pool.
    pub workers: Option<usize>,
    pub limits: Limits,
}

impl SearchSpec {
    pub fn new(min_n: usize, max_n: usize, mode: SearchMode) -> Self {
        SearchSpec {
            min_n,
            max_n,
            mode,
            normalize: false,
            workers: None,
            limits: Limits::default(),
        }
    }

    pub fn validate(&self) -> Result<()> {
        self.limits.validate()?;
        if self.min_n == 0 {
            return Err(Error::OutOfRange {
                what: "min_n",
                value: 0,
                lo: 1,
                hi: self.max_n as i64,
            });
        }
        if self.min_n > self.max_n {
            return Err(Error::EmptyRange {
                min: self.min_n,
                max: self.max_n,
            });
        }
        let (what, limit) = match self.mode {
            SearchMode::Full => ("full search", self.limits.full_max_n),
            SearchMode::SkewRestricted => ("skew-restricted search", self.limits.skew_max_n),
        };
        if self.max_n > limit {
            return Err(Error::LimitExceeded {
                what,
                n: self.max_n,
                limit,
            });
        }
        if self.mode == SearchMode::SkewRestricted {
            for n in [self.min_n, self.max_n] {
                if n % 2 == 0 {
                    return Err(Error::EvenLength(n));
                }
            }
        }
        Ok(())
    }

    pub fn lengths(&self) -> Vec<usize> {
        let step = match self.mode {
            SearchMode::Full => 1,
            SearchMode::SkewRestricted => 2,
        };
        (self.min_n..=self.max_n).step_by(step).collect()
    }
}

/// Runs `f` on a dedicated pool when a worker count is given.
pub(crate) fn with_workers<T: Send>(workers: Option<usize>, f: impl FnOnce() -> T + Send) -> T {
    match workers {
        None => f(),
        Some(w) => rayon::ThreadPoolBuilder::new()
            .num_threads(w.max(1))
            .build()
            .expect("thread pool")
            .install(f),
    }
}

/// Every Barker sequence with length in `spec.min_n..=spec.max_n`, in canonical order.
pub fn enumerate_barker(spec: &SearchSpec) -> Result<Vec<BinarySequence>> {
    spec.validate()?;
    let found = with_workers(spec.workers, || {
        spec.lengths()
            .into_iter()
            .flat_map(|n| match spec.mode {
                SearchMode::Full => barker_full(n),
                SearchMode::SkewRestricted => barker_skew(n),
            })
            .collect::<Vec<_>>()
    });
    if let Some(bad) = found.iter().find(|s| !is_barker(s)) {
        return Err(Error::Invariant(format!("search emitted non-Barker {bad}")));
    }
    Ok(if spec.normalize {
        let mut canon: Vec<_> = found.iter().map(BinarySequence::canonical).collect();
        canon.sort();
        canon.dedup();
        canon
    } else {
        found
    })
}
