use serde::{Deserialize, Serialize};

use super::BinarySequence;

/// Aperiodic autocorrelations `C_0..=C_n`; slot `k` holds `C_k` and `C_n = 0`.
pub fn aperiodic_autocorrelations(seq: &BinarySequence) -> Vec<i64> {
    let a = seq.elems();
    let n = a.len();
    (0..=n).map(|k| aperiodic_lag(a, k)).collect()
}

pub(crate) fn aperiodic_lag(a: &[i8], k: usize) -> i64 {
    if k >= a.len() {
        return 0;
    }
    a.iter()
        .zip(&a[k..])
        .map(|(&x, &y)| i64::from(x * y))
        .sum()
}

/// Periodic autocorrelations `C~_0..C~_{n-1}`; slot `k` holds `C~_k`.
pub fn periodic_autocorrelations(seq: &BinarySequence) -> Vec<i64> {
    let a = seq.elems();
    let n = a.len();
    (0..n)
        .map(|k| (0..n).map(|i| i64::from(a[i] * a[(i + k) % n])).sum())
        .collect()
}

/// JSON shape: `{"C": [C_0, ..., C_n], "C_periodic": [C~_0, ..., C~_{n-1}]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AutocorrelationProfile {
    #[serde(rename = "C")]
    pub aperiodic: Vec<i64>,
    #[serde(rename = "C_periodic")]
    pub periodic: Vec<i64>,
}

impl AutocorrelationProfile {
    pub fn of(seq: &BinarySequence) -> Self {
        AutocorrelationProfile {
            aperiodic: aperiodic_autocorrelations(seq),
            periodic: periodic_autocorrelations(seq),
        }
    }

    pub fn n(&self) -> usize {
        self.periodic.len()
    }
}
