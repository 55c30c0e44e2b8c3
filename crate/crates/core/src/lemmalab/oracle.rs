use crate::error::{check_range, Result};
use crate::seqcore::{aperiodic_autocorrelations, run_vector, BinarySequence};

/// Entry `k-1` holds `C_{k+1} - 2 C_k + C_{k-1} + 2 R_k` for `1 <= k <= n-1`.
/// The second-difference identity holds iff every entry is zero.
pub fn theorem1_residual(seq: &BinarySequence) -> Vec<i64> {
    let c = aperiodic_autocorrelations(seq);
    let rv = run_vector(seq);
    (1..seq.len())
        .map(|k| c[k + 1] - 2 * c[k] + c[k - 1] + 2 * rv.at(k))
        .collect()
}

/// Autocorrelation at lag `k` of the difference sequence `d_i = a_i - a_{i-1}`,
/// `1 <= i <= n+1`, with `a_0 = a_{n+1} = 0`.
pub fn delta_autocorrelation(seq: &BinarySequence, k: i64) -> Result<i64> {
    let n = seq.len() as i64;
    check_range("k", k, 1, n - 1)?;
    Ok(delta_lag(seq, k))
}

pub(crate) fn delta_lag(seq: &BinarySequence, k: i64) -> i64 {
    let n = seq.len() as i64;
    let delta = |i: i64| seq.at(i) - seq.at(i - 1);
    (1..=n + 1 - k).map(|i| delta(i) * delta(i + k)).sum()
}
