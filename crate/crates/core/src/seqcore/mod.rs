//! Sequences, run-length encodings, autocorrelations and the run vector.
//!
//! Index mapping, used by every vector exposed here and in the JSON output:
//!
//! | vector        | slot `i` holds      | length  |
//! |---------------|---------------------|---------|
//! | `C`           | `C_i`               | `n + 1` |
//! | `C_periodic`  | `C~_i`              | `n`     |
//! | `r_tilde`     | `R~_{i+1}`          | `n - 1` |
//! | `r`           | `R_{i+1}`           | `n - 1` |
//! | `s`, `t`      | `s_{i+1}`, `t_{i+1}`| `gamma` |
//! | `runs`        | `r_{i+1}`           | `gamma` |
//!
//! The boundary conventions `a_0 = a_{n+1} = 0` and `C_n = 0` are applied by the
//! operations and never stored.

mod autocorr;
mod rle;
mod sequence;
mod structure;

pub use autocorr::{aperiodic_autocorrelations, periodic_autocorrelations, AutocorrelationProfile};
pub(crate) use autocorr::aperiodic_lag;
pub use rle::{decode_rle, encode_rle, RunLengthEncoding};
pub use sequence::BinarySequence;
pub use structure::{is_balanced, run_structure, RunStructure, SignValues};

use serde::Serialize;

/// `r_tilde[k-1] = R~_k = f(k) + 2 U_k` and `r[k-1] = R_k = (-1)^gamma R~_{n-k}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RunVector {
    pub r_tilde: Vec<i64>,
    pub r: Vec<i64>,
}

impl RunVector {
    pub fn from_structure(rs: &RunStructure) -> Self {
        let n = rs.n;
        let r_tilde: Vec<i64> = (1..n as i64)
            .map(|k| rs.f(k) + 2 * rs.u_unchecked(k))
            .collect();
        let sign = if rs.gamma.is_multiple_of(2) { 1 } else { -1 };
        let r = (1..n).map(|k| sign * r_tilde[n - k - 1]).collect();
        RunVector { r_tilde, r }
    }

    /// `R~_k`, 1-based.
    pub fn tilde(&self, k: usize) -> i64 {
        self.r_tilde[k - 1]
    }

    /// `R_k`, 1-based.
    pub fn at(&self, k: usize) -> i64 {
        self.r[k - 1]
    }
}

/// Empty for `n = 1`.
pub fn run_vector(seq: &BinarySequence) -> RunVector {
    RunVector::from_structure(&run_structure(&encode_rle(seq)))
}

/// `a_{m-j} = (-1)^j a_{m+j}` for `1 <= j <= m-1`, where `n = 2m - 1`.
/// Even lengths are never skew-symmetric.
pub fn is_skew_symmetric(seq: &BinarySequence) -> bool {
    let n = seq.len();
    if n.is_multiple_of(2) {
        return false;
    }
    let m = (n as i64 + 1) / 2;
    (1..m).all(|j| {
        let sign = if j % 2 == 0 { 1 } else { -1 };
        seq.at(m - j) == sign * seq.at(m + j)
    })
}

/// `|C_k| <= 1` for every off-peak lag.
pub fn is_barker(seq: &BinarySequence) -> bool {
    let a = seq.elems();
    (1..a.len()).all(|k| aperiodic_lag(a, k).abs() <= 1)
}
