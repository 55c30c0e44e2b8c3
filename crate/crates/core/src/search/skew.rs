use rayon::prelude::*;

use crate::packed::PackedSequence;
use crate::seqcore::{is_barker, is_skew_symmetric, BinarySequence};

/// Packs the skew-symmetric sequence of length `2m - 1` whose first `m` elements
/// are the `m` bits of `half` (same bit convention as [`PackedSequence`]).
///
/// `a_{m+j} = (-1)^j a_{m-j}`: the tail is the reversal of `a_1..a_{m-1}` with
/// every element at odd distance from the centre flipped.
#[inline]
pub(crate) fn skew_from_half(half: u64, m: usize) -> u64 {
    if m == 1 {
        return half & 1;
    }
    let w = m - 1;
    let mirrored = (half >> 1).reverse_bits() >> (64 - w);
    (mirrored ^ odd_distance_mask(m)) | (half << w)
}

/// Bits of `a_{m+j}` for odd `j`, i.e. bit `m-1-j` in the tail.
#[inline]
fn odd_distance_mask(m: usize) -> u64 {
    (1..m)
        .step_by(2)
        .fold(0u64, |mask, j| mask | 1 << (m - 1 - j))
}

/// All Barker sequences of odd length `n` among the `2^m` skew-symmetric ones.
///
/// Only halves with `a_1 = +` are generated; negation maps skew-symmetric Barker
/// sequences to skew-symmetric Barker sequences, so the complements are added.
pub fn barker_skew(n: usize) -> Vec<BinarySequence> {
    assert!(n % 2 == 1 && n < 64, "skew search needs odd n < 64");
    let m = n.div_ceil(2);
    let halves = 1u64 << (m - 1);
    let chunk = 1u64 << 14;
    let mut found: Vec<BinarySequence> = (0..halves.div_ceil(chunk))
        .into_par_iter()
        .flat_map_iter(|c| {
            (c * chunk..((c + 1) * chunk).min(halves))
                .map(move |half| PackedSequence::new(skew_from_half(half, m), n))
                .filter(|p| p.is_barker())
                .flat_map(|p| {
                    let neg = PackedSequence::new(!p.bits(), n);
                    [p.to_sequence(), neg.to_sequence()]
                })
        })
        .filter(|s| is_barker(s) && is_skew_symmetric(s))
        .collect();
    found.sort();
    found
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mirror_generates_exactly_the_skew_sequences() {
        for n in (1..=15usize).step_by(2) {
            let m = n.div_ceil(2);
            let mut generated: Vec<_> = (0..1u64 << m)
                .map(|h| BinarySequence::from_bits(skew_from_half(h, m), n).unwrap())
                .collect();
            generated.sort();
            let expected: Vec<_> = BinarySequence::all(n).filter(is_skew_symmetric).collect();
            assert_eq!(generated, expected, "n = {n}");
        }
    }

    #[test]
    fn negation_is_complement() {
        let m = 7;
        for h in 0..1u64 << (m - 1) {
            let comp = !h & ((1 << m) - 1);
            let word = skew_from_half(h, m);
            assert_eq!(skew_from_half(comp, m), !word & ((1 << (2 * m - 1)) - 1));
        }
    }

    #[test]
    fn agrees_with_full_search_small() {
        for n in (1..=15).step_by(2) {
            assert_eq!(barker_skew(n), super::super::barker_full(n), "n = {n}");
        }
    }
}
