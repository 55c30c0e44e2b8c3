//! Deterministic inputs shared by the benchmarks.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use runvec_core::BinarySequence;

pub const BARKER_13: &str = "+++++--++-+-+";

/// `count` random sequences of exactly `n` elements.
pub fn random_sequences(seed: u64, count: usize, n: usize) -> Vec<BinarySequence> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let elems = (0..n).map(|_| if rng.gen::<bool>() { 1 } else { -1 }).collect();
            BinarySequence::new(elems).expect("n > 0")
        })
        .collect()
}

pub fn barker_13() -> BinarySequence {
    BARKER_13.parse().expect("valid literal")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixtures_are_stable() {
        assert!(runvec_core::is_barker(&barker_13()));
        let a = random_sequences(1, 4, 32);
        assert_eq!(a, random_sequences(1, 4, 32));
        assert!(a.iter().all(|s| s.len() == 32));
    }
}
