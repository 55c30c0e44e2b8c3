use serde::Serialize;

use crate::error::{Error, Result};

/// Largest length any packed search path supports.
pub const HARD_MAX_N: usize = 63;

/// Resource limits for searches and sweeps, all in terms of the largest `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Limits {
    /// Pruned full-mode Barker search.
    pub full_max_n: usize,
    /// Skew-restricted Barker search and classification.
    pub skew_max_n: usize,
    /// Sweeps over all `2^n` sequences (`theorem1`, `appendix-a`).
    pub sequence_sweep_max_n: usize,
    /// `prop-skew` sweep over all sequences of odd length.
    pub prop_skew_max_n: usize,
    /// Lemma sweeps over balanced RLEs.
    pub rle_sweep_max_n: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            full_max_n: 25,
            skew_max_n: 45,
            sequence_sweep_max_n: 20,
            prop_skew_max_n: 21,
            rle_sweep_max_n: 31,
        }
    }
}

impl Limits {
    pub fn validate(&self) -> Result<()> {
        for (what, n) in [
            ("full_max_n", self.full_max_n),
            ("skew_max_n", self.skew_max_n),
            ("sequence_sweep_max_n", self.sequence_sweep_max_n),
            ("prop_skew_max_n", self.prop_skew_max_n),
            ("rle_sweep_max_n", self.rle_sweep_max_n),
        ] {
            if n > HARD_MAX_N {
                return Err(Error::LimitExceeded {
                    what,
                    n,
                    limit: HARD_MAX_N,
                });
            }
        }
        Ok(())
    }
}
