use rayon::prelude::*;

use super::PRUNE_THRESHOLD;
use crate::packed::PackedSequence;
use crate::seqcore::{aperiodic_lag, is_barker, BinarySequence};

/// Levels expanded sequentially before the search fans out to workers.
const SEED_DEPTH: usize = 3;

/// All Barker sequences of length `n`, by depth-first search from both ends.
///
/// Level `t` fixes `a_{t+1}` and `a_{n-t}`. After it, the lag `n-1-t` only involves
/// fixed elements, so its correlation is final and the branch is cut as soon as
/// it exceeds the threshold. Complete assignments are re-checked in full.
pub fn barker_full(n: usize) -> Vec<BinarySequence> {
    assert!(n >= 1);
    let mut seeds = Vec::new();
    expand(&mut vec![0i8; n], 0, SEED_DEPTH, &mut |a, t| seeds.push((a.to_vec(), t)));
    let mut found: Vec<BinarySequence> = seeds
        .into_par_iter()
        .flat_map_iter(|(mut a, t)| {
            let mut out = Vec::new();
            expand(&mut a, t, usize::MAX, &mut |a, _| {
                if is_complete_barker(a) {
                    out.push(BinarySequence::new(a.to_vec()).unwrap());
                }
            });
            out
        })
        .collect();
    found.sort();
    found
}

/// Walks the pruned tree from level `t`; `visit` receives every surviving node at
/// level `stop` and every complete assignment reached before it.
fn expand(a: &mut [i8], t: usize, stop: usize, visit: &mut impl FnMut(&[i8], usize)) {
    let n = a.len();
    if 2 * t >= n || t == stop {
        visit(a, t);
        return;
    }
    let front = t;
    let back = n - 1 - t;
    if front == back {
        for x in [1, -1] {
            a[front] = x;
            expand(a, t + 1, stop, visit);
        }
        a[front] = 0;
        return;
    }
    for x in [1, -1] {
        a[front] = x;
        for y in [1, -1] {
            a[back] = y;
            if final_lag(a, t).abs() <= PRUNE_THRESHOLD {
                expand(a, t + 1, stop, visit);
            }
        }
    }
    a[front] = 0;
    a[back] = 0;
}

/// `C_{n-1-t}` once the first and last `t+1` elements are fixed.
#[inline]
fn final_lag(a: &[i8], t: usize) -> i64 {
    let k = a.len() - 1 - t;
    (0..=t).map(|i| i64::from(a[i] * a[i + k])).sum()
}

fn is_complete_barker(a: &[i8]) -> bool {
    a.iter().all(|&x| x != 0) && (1..a.len()).all(|k| aperiodic_lag(a, k).abs() <= PRUNE_THRESHOLD)
}

/// Brute-force reference: tests every one of the `2^n` sequences with packed
/// popcount correlations.
pub fn barker_filter_unpruned(n: usize) -> Vec<BinarySequence> {
    assert!((1..=32).contains(&n), "unpruned filter is limited to n <= 32");
    let total = 1u64 << n;
    let chunk = 1u64 << 12;
    let mut found: Vec<BinarySequence> = (0..total.div_ceil(chunk))
        .into_par_iter()
        .flat_map_iter(|c| {
            (c * chunk..((c + 1) * chunk).min(total))
                .map(move |bits| PackedSequence::new(bits, n))
                .filter(|p| p.is_barker())
                .map(PackedSequence::to_sequence)
        })
        .collect();
    found.sort();
    debug_assert!(found.iter().all(is_barker));
    found
}
