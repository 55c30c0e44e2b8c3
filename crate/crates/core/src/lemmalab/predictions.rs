use serde::Serialize;

use crate::error::{Error, Result};

/// Closed-form profile any odd-length Barker sequence must have.
/// Each vector has `n - 1` entries; slot `k-1` holds lag `k`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BarkerPrediction {
    pub n: usize,
    #[serde(rename = "C")]
    pub c: Vec<i64>,
    pub r: Vec<i64>,
    pub r_tilde: Vec<i64>,
}

fn pow_neg1(e: usize) -> i64 {
    if e.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Predictions for odd `n = 2m - 1`:
/// `C_k = 0` for odd `k` and `(-1)^(m+1)` for even `k`;
/// `R_1 = -m` (`m` odd) or `1 - m` (`m` even), `R_k = (-1)^(k+m+1)` for `k >= 2`;
/// `R~_k = (-1)^k` for `k <= n-2` and `R~_{n-1} = gamma` (odd) or `1 - gamma` (even)
/// with `gamma = m`.
pub fn barker_predictions(n: usize) -> Result<BarkerPrediction> {
    if n.is_multiple_of(2) {
        return Err(Error::EvenLength(n));
    }
    let m = n.div_ceil(2);
    let c = (1..n)
        .map(|k| if k % 2 == 1 { 0 } else { pow_neg1(m + 1) })
        .collect();
    let r = (1..n)
        .map(|k| match k {
            1 if m % 2 == 1 => -(m as i64),
            1 => 1 - m as i64,
            _ => pow_neg1(k + m + 1),
        })
        .collect();
    let r_tilde = (1..n)
        .map(|k| {
            if k + 2 <= n {
                pow_neg1(k)
            } else if m % 2 == 1 {
                m as i64
            } else {
                1 - m as i64
            }
        })
        .collect();
    Ok(BarkerPrediction { n, c, r, r_tilde })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let p13 = barker_predictions(13).unwrap();
        assert_eq!(p13.c[1], 1);
        assert_eq!(p13.r[0], -7);
        assert_eq!(p13.r_tilde[11], 7);

        let p7 = barker_predictions(7).unwrap();
        assert_eq!(p7.c[1], -1);
        assert_eq!(p7.r[0], -3);
        assert_eq!(p7.r_tilde[5], -3);
        assert_eq!(p7.r_tilde, [-1, 1, -1, 1, -1, -3]);

        let p1 = barker_predictions(1).unwrap();
        assert!(p1.c.is_empty() && p1.r.is_empty() && p1.r_tilde.is_empty());

        assert_eq!(barker_predictions(4), Err(Error::EvenLength(4)));
    }

    #[test]
    fn tilde_and_plain_are_mirrors() {
        for n in (1..40).step_by(2) {
            let p = barker_predictions(n).unwrap();
            let gamma = n.div_ceil(2);
            for k in 1..n {
                assert_eq!(p.r[k - 1], pow_neg1(gamma) * p.r_tilde[n - k - 1], "n = {n}, k = {k}");
            }
        }
    }
}
