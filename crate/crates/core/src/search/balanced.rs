use super::skew::skew_from_half;
use crate::error::{Error, Result};
use crate::seqcore::{encode_rle, is_balanced, run_structure, BinarySequence, RunLengthEncoding};

pub const MAX_BALANCED_N: usize = 41;

/// The `2^((n+1)/2 - 1)` balanced RLEs with length sum `n`, all with start sign `+`.
///
/// They are read off the skew-symmetric sequences with `a_1 = +` (skew-symmetric
/// and balanced are equivalent, and negation does not change the runs), in
/// canonical sequence order. Each one is re-checked with [`is_balanced`].
pub fn enumerate_balanced_rles(n: usize) -> Result<Vec<RunLengthEncoding>> {
    if n.is_multiple_of(2) {
        return Err(Error::EvenLength(n));
    }
    if n > MAX_BALANCED_N {
        return Err(Error::LimitExceeded {
            what: "balanced RLE enumeration",
            n,
            limit: MAX_BALANCED_N,
        });
    }
    let m = n.div_ceil(2);
    (0..1u64 << (m - 1))
        .map(|half| {
            let seq = BinarySequence::from_bits(skew_from_half(half, m), n)?;
            let rle = encode_rle(&seq);
            if !is_balanced(&run_structure(&rle)) {
                return Err(Error::Invariant(format!("{seq} is skew-symmetric but {rle} is not balanced")));
            }
            Ok(rle)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn runs(v: &[RunLengthEncoding]) -> Vec<Vec<usize>> {
        v.iter().map(|r| r.runs().to_vec()).collect()
    }

    #[test]
    fn examples() {
        assert_eq!(runs(&enumerate_balanced_rles(3).unwrap()), [vec![2, 1], vec![1, 2]]);
        assert_eq!(runs(&enumerate_balanced_rles(1).unwrap()), [vec![1]]);
        let seven = enumerate_balanced_rles(7).unwrap();
        assert_eq!(seven.len(), 8);
        assert!(runs(&seven).contains(&vec![3, 2, 1, 1]));
        assert_eq!(enumerate_balanced_rles(4), Err(Error::EvenLength(4)));
    }

    /// Filter over every composition of `n`, independent of the skew route.
    fn balanced_compositions(n: usize) -> BTreeSet<Vec<usize>> {
        (0..1u64 << (n - 1))
            .map(|cuts| {
                let mut runs = vec![1];
                for i in 0..n - 1 {
                    if cuts >> i & 1 == 1 {
                        runs.push(1);
                    } else {
                        *runs.last_mut().unwrap() += 1;
                    }
                }
                runs
            })
            .filter(|r| is_balanced(&run_structure(&RunLengthEncoding::new(1, r.clone()).unwrap())))
            .collect()
    }

    #[test]
    fn complete_against_composition_filter() {
        for n in (1..=17).step_by(2) {
            let got: BTreeSet<_> = runs(&enumerate_balanced_rles(n).unwrap()).into_iter().collect();
            assert_eq!(got.len(), 1 << (n.div_ceil(2) - 1));
            assert_eq!(got, balanced_compositions(n), "n = {n}");
        }
    }
}
