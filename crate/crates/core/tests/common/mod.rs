#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use runvec_core::{
    aperiodic_autocorrelations, encode_rle, periodic_autocorrelations, run_structure, BinarySequence,
};

/// `n` uniform random sequences with lengths in `1..=max_len`, reproducible.
pub fn random_sequences(seed: u64, count: usize, max_len: usize) -> Vec<BinarySequence> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(1..=max_len);
            let elems = (0..n).map(|_| if rng.gen::<bool>() { 1 } else { -1 }).collect();
            BinarySequence::new(elems).unwrap()
        })
        .collect()
}

pub fn exhaustive(max_len: usize) -> impl Iterator<Item = BinarySequence> {
    (1..=max_len).flat_map(BinarySequence::all)
}

fn sign(e: usize) -> i64 {
    if e.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Checks the parity, periodic, mod-4, `C_1`, prefix-sum and sign-function
/// identities on one sequence. Returns a description of the first violation.
pub fn congruence_violation(seq: &BinarySequence) -> Option<String> {
    let n = seq.len();
    let c = aperiodic_autocorrelations(seq);
    let cp = periodic_autocorrelations(seq);
    let rle = encode_rle(seq);
    let rs = run_structure(&rle);
    let gamma = rle.gamma();

    if c[0] != n as i64 || c[n] != 0 {
        return Some(format!("C_0 = {}, C_n = {}", c[0], c[n]));
    }
    for (k, &ck) in c.iter().enumerate().skip(1) {
        if (ck - (n - k) as i64).rem_euclid(2) != 0 {
            return Some(format!("C_{k} = {ck} has the wrong parity"));
        }
    }
    for k in 0..n {
        if (cp[k] - n as i64).rem_euclid(4) != 0 {
            return Some(format!("C~_{k} = {} is not n mod 4", cp[k]));
        }
        if k >= 1 && (cp[k] != c[k] + c[n - k] || cp[k] != cp[n - k]) {
            return Some(format!("C~_{k} = {} vs C_k + C_(n-k) = {}", cp[k], c[k] + c[n - k]));
        }
    }
    if n >= 2 && c[1] != 1 + n as i64 - 2 * gamma as i64 {
        return Some(format!("C_1 = {} but gamma = {gamma}", c[1]));
    }

    if rs.s.windows(2).any(|w| w[0] >= w[1]) || rs.t.windows(2).any(|w| w[0] >= w[1]) {
        return Some("prefix sums not strictly increasing".into());
    }
    if rs.s[0] < 1 || rs.t[0] < 1 || rs.s[gamma - 1] != n || rs.t[gamma - 1] != n {
        return Some("prefix sums out of range".into());
    }
    for j in 1..=gamma {
        if rs.s_at(j) + rs.t_at(gamma - j) != n {
            return Some(format!("s_{j} + t_(gamma-{j}) != n"));
        }
    }
    if rs.s_set.len() != gamma - 1 || rs.t_set.len() != gamma - 1 {
        return Some("S or T has the wrong size".into());
    }
    let (ni, g) = (n as i64, gamma);
    for k in 1..ni {
        let sign_change = seq.at(k) * seq.at(k + 1) == -1;
        if rs.in_s(k) != sign_change || rs.in_s(k) != rs.in_t(ni - k) {
            return Some(format!("membership of {k} in S disagrees with the sign changes"));
        }
    }
    for k in -2..=ni + 2 {
        if rs.f_s(k) != sign(g) * rs.f_t(ni - k) {
            return Some(format!("f_S({k}) != (-1)^gamma f_T(n-{k})"));
        }
    }
    None
}
