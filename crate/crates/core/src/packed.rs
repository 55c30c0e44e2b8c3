//! Word-packed sequences with popcount autocorrelations.
//!
//! Packing is the one used by [`BinarySequence::from_bits`]: bit `n-1` is `a_1`,
//! bit 0 is `a_n`, and a set bit is `-1`.

use crate::seqcore::BinarySequence;

pub const MAX_PACKED_LEN: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PackedSequence {
    bits: u64,
    n: u32,
}

#[inline]
fn low_mask(width: u32) -> u64 {
    if width >= 64 {
        u64::MAX
    } else {
        (1u64 << width) - 1
    }
}

impl PackedSequence {
    /// Only the low `n` bits of `bits` are kept.
    pub fn new(bits: u64, n: usize) -> Self {
        assert!(
            (1..=MAX_PACKED_LEN).contains(&n),
            "packed length must be in 1..=64"
        );
        let n = n as u32;
        PackedSequence {
            bits: bits & low_mask(n),
            n,
        }
    }

    pub fn from_sequence(seq: &BinarySequence) -> Option<Self> {
        seq.to_bits().map(|bits| PackedSequence::new(bits, seq.len()))
    }

    pub fn to_sequence(self) -> BinarySequence {
        BinarySequence::from_bits(self.bits, self.n as usize).unwrap()
    }

    pub fn bits(self) -> u64 {
        self.bits
    }

    pub fn len(self) -> usize {
        self.n as usize
    }

    pub fn is_empty(self) -> bool {
        false
    }

    /// `C_k`: `(n-k) - 2 * popcount` of the disagreeing pairs at distance `k`.
    #[inline]
    pub fn aperiodic(self, k: usize) -> i64 {
        let k = k as u32;
        if k >= self.n {
            return 0;
        }
        let width = self.n - k;
        let disagree = ((self.bits ^ (self.bits >> k)) & low_mask(width)).count_ones();
        i64::from(width) - 2 * i64::from(disagree)
    }

    #[inline]
    pub fn is_barker(self) -> bool {
        (1..self.n as usize).all(|k| self.aperiodic(k).abs() <= 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::seqcore::aperiodic_autocorrelations;

    #[test]
    fn agrees_with_scalar_correlations() {
        for n in 1..=12 {
            for s in BinarySequence::all(n) {
                let packed = PackedSequence::from_sequence(&s).unwrap();
                let c: Vec<_> = (0..=n).map(|k| packed.aperiodic(k)).collect();
                assert_eq!(c, aperiodic_autocorrelations(&s), "{s}");
                assert_eq!(packed.to_sequence(), s);
            }
        }
    }

    #[test]
    fn full_width_word() {
        let s: BinarySequence = "+-".repeat(32).parse().unwrap();
        let packed = PackedSequence::from_sequence(&s).unwrap();
        assert_eq!(packed.len(), 64);
        assert_eq!(packed.aperiodic(0), 64);
        assert_eq!(packed.aperiodic(1), -63);
        assert_eq!(packed.aperiodic(2), 62);
    }
}
