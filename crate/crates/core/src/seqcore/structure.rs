use serde::Serialize;

use super::RunLengthEncoding;
use crate::error::{check_range, Result};

/// Prefix sums and boundary sets of an RLE.
///
/// `s[j-1] = s_j = r_1 + ... + r_j` and `t[j-1] = t_j = r_gamma + ... + r_{gamma-j+1}`
/// for `1 <= j <= gamma`. `S = {s_1..s_{gamma-1}}` and `T = {t_1..t_{gamma-1}}` are
/// stored as ascending vectors.
///
/// JSON shape: `{"s": [...], "t": [...], "S": [...], "T": [...], "gamma": g, "n": n}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RunStructure {
    pub s: Vec<usize>,
    pub t: Vec<usize>,
    #[serde(rename = "S")]
    pub s_set: Vec<usize>,
    #[serde(rename = "T")]
    pub t_set: Vec<usize>,
    pub gamma: usize,
    pub n: usize,
    /// `f_S(k)` for `0 <= k <= n`.
    #[serde(skip)]
    fs_table: Vec<i8>,
    #[serde(skip)]
    ft_table: Vec<i8>,
}

/// `(f_S(k), f_T(k), f(k))`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SignValues {
    pub fs: i64,
    pub ft: i64,
    pub f: i64,
}

fn alternating(j: usize) -> i8 {
    if j.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

pub fn run_structure(rle: &RunLengthEncoding) -> RunStructure {
    let runs = rle.runs();
    let gamma = runs.len();
    let n = rle.n();
    let s: Vec<usize> = runs
        .iter()
        .scan(0, |acc, &r| {
            *acc += r;
            Some(*acc)
        })
        .collect();
    let t: Vec<usize> = runs
        .iter()
        .rev()
        .scan(0, |acc, &r| {
            *acc += r;
            Some(*acc)
        })
        .collect();
    let mut fs_table = vec![0i8; n + 1];
    let mut ft_table = vec![0i8; n + 1];
    for j in 1..gamma {
        fs_table[s[j - 1]] = alternating(j);
        ft_table[t[j - 1]] = alternating(j);
    }
    RunStructure {
        s_set: s[..gamma - 1].to_vec(),
        t_set: t[..gamma - 1].to_vec(),
        s,
        t,
        gamma,
        n,
        fs_table,
        ft_table,
    }
}

impl RunStructure {
    /// `s_j`, with `s_0 = 0`.
    pub fn s_at(&self, j: usize) -> usize {
        if j == 0 {
            0
        } else {
            self.s[j - 1]
        }
    }

    /// `t_j`, with `t_0 = 0`.
    pub fn t_at(&self, j: usize) -> usize {
        if j == 0 {
            0
        } else {
            self.t[j - 1]
        }
    }

    pub fn in_s(&self, k: i64) -> bool {
        self.f_s(k) != 0
    }

    pub fn in_t(&self, k: i64) -> bool {
        self.f_t(k) != 0
    }

    pub fn f_s(&self, k: i64) -> i64 {
        lookup(&self.fs_table, k)
    }

    pub fn f_t(&self, k: i64) -> i64 {
        lookup(&self.ft_table, k)
    }

    pub fn f(&self, k: i64) -> i64 {
        self.f_s(k) + self.f_t(k)
    }

    /// Total over all integers; zero outside `S ∪ T`.
    pub fn f_eval(&self, k: i64) -> SignValues {
        let fs = self.f_s(k);
        let ft = self.f_t(k);
        SignValues { fs, ft, f: fs + ft }
    }

    /// `U_k = sum_{j=1}^{gamma-1} (-1)^j f_T(k - s_j)` for `1 <= k <= n-1`.
    pub fn u_k(&self, k: i64) -> Result<i64> {
        check_range("k", k, 1, self.n as i64 - 1)?;
        Ok(self.u_unchecked(k))
    }

    pub(crate) fn u_unchecked(&self, k: i64) -> i64 {
        let mut u = 0;
        for (j, &sj) in self.s_set.iter().enumerate() {
            let arg = k - sj as i64;
            if arg <= 0 {
                break;
            }
            u += i64::from(alternating(j + 1)) * self.f_t(arg);
        }
        u
    }

    /// The 1-based index `mu` with `s_{mu-1} < k <= s_mu`, for `1 <= k <= n`.
    pub fn block_of(&self, k: usize) -> usize {
        self.s.partition_point(|&sj| sj < k) + 1
    }
}

fn lookup(table: &[i8], k: i64) -> i64 {
    if k < 0 {
        return 0;
    }
    table.get(k as usize).map_or(0, |&v| v.into())
}

/// `S ∪ T = {1, ..., n-1}` and `S ∩ T = ∅`.
pub fn is_balanced(rs: &RunStructure) -> bool {
    (1..rs.n as i64).all(|k| rs.in_s(k) != rs.in_t(k))
}
