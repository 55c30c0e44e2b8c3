use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A finite sequence over {-1, +1}.
///
/// Elements are stored 0-based: `elems()[i]` is `a_{i+1}`. Use [`BinarySequence::at`]
/// for 1-based access with the boundary convention `a_0 = a_{n+1} = 0`.
///
/// JSON shape: `{"elems": [1, 1, -1], "n": 3}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawSequence", into = "RawSequence")]
pub struct BinarySequence {
    elems: Vec<i8>,
}

#[derive(Serialize, Deserialize)]
struct RawSequence {
    elems: Vec<i64>,
    n: usize,
}

impl TryFrom<RawSequence> for BinarySequence {
    type Error = Error;

    fn try_from(raw: RawSequence) -> Result<Self> {
        if raw.n != raw.elems.len() {
            return Err(Error::Invariant(format!(
                "n = {} but {} elements given",
                raw.n,
                raw.elems.len()
            )));
        }
        let elems = raw
            .elems
            .into_iter()
            .map(|x| match x {
                1 => Ok(1i8),
                -1 => Ok(-1i8),
                other => Err(Error::BadSign(other)),
            })
            .collect::<Result<Vec<_>>>()?;
        BinarySequence::new(elems)
    }
}

impl From<BinarySequence> for RawSequence {
    fn from(seq: BinarySequence) -> Self {
        RawSequence {
            n: seq.len(),
            elems: seq.elems.into_iter().map(i64::from).collect(),
        }
    }
}

impl BinarySequence {
    pub fn new(elems: Vec<i8>) -> Result<Self> {
        if elems.is_empty() {
            return Err(Error::Empty);
        }
        if let Some(&bad) = elems.iter().find(|&&x| x != 1 && x != -1) {
            return Err(Error::BadSign(bad.into()));
        }
        Ok(BinarySequence { elems })
    }

    /// Builds a sequence from the low `n` bits of `bits`. Bit `n-1` holds `a_1`,
    /// bit 0 holds `a_n`, and a set bit means `-1`; numeric order on `bits` is
    /// therefore the canonical lexicographic order with `+` before `-`.
    pub fn from_bits(bits: u64, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::Empty);
        }
        if n > 64 {
            return Err(Error::LimitExceeded {
                what: "packed sequence",
                n,
                limit: 64,
            });
        }
        let elems = (0..n)
            .map(|i| if bits >> (n - 1 - i) & 1 == 1 { -1 } else { 1 })
            .collect();
        Ok(BinarySequence { elems })
    }

    /// Inverse of [`BinarySequence::from_bits`]; `None` when `n > 64`.
    pub fn to_bits(&self) -> Option<u64> {
        if self.len() > 64 {
            return None;
        }
        Some(
            self.elems
                .iter()
                .fold(0u64, |acc, &x| (acc << 1) | u64::from(x < 0)),
        )
    }

    /// Every sequence of length `n`, in canonical order.
    pub fn all(n: usize) -> impl Iterator<Item = BinarySequence> {
        assert!((1..64).contains(&n), "exhaustive enumeration needs 1 <= n < 64");
        (0..1u64 << n).map(move |bits| BinarySequence::from_bits(bits, n).unwrap())
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    /// Always false; kept for API symmetry with `len`.
    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn elems(&self) -> &[i8] {
        &self.elems
    }

    /// `a_i` with 1-based `i`; zero outside `1..=n`.
    pub fn at(&self, i: i64) -> i64 {
        if i >= 1 && (i as usize) <= self.len() {
            self.elems[i as usize - 1].into()
        } else {
            0
        }
    }

    pub fn negated(&self) -> Self {
        BinarySequence {
            elems: self.elems.iter().map(|&x| -x).collect(),
        }
    }

    pub fn reversed(&self) -> Self {
        BinarySequence {
            elems: self.elems.iter().rev().copied().collect(),
        }
    }

    /// Smallest member, in canonical order, of the orbit under negation and reversal.
    pub fn canonical(&self) -> Self {
        let rev = self.reversed();
        [self.negated(), rev.negated(), rev, self.clone()]
            .into_iter()
            .min()
            .unwrap()
    }
}

impl Ord for BinarySequence {
    /// Shorter sequences first, then lexicographic with `+` before `-`.
    fn cmp(&self, other: &Self) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| {
            self.elems
                .iter()
                .map(|&x| -x)
                .cmp(other.elems.iter().map(|&x| -x))
        })
    }
}

impl PartialOrd for BinarySequence {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl FromStr for BinarySequence {
    type Err = Error;

    /// Parses a string of `+` and `-` characters.
    fn from_str(s: &str) -> Result<Self> {
        let elems = s
            .chars()
            .enumerate()
            .map(|(position, c)| match c {
                '+' => Ok(1),
                '-' => Ok(-1),
                found => Err(Error::Parse { position, found }),
            })
            .collect::<Result<Vec<_>>>()?;
        BinarySequence::new(elems)
    }
}

impl fmt::Display for BinarySequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &x in &self.elems {
            f.write_str(if x > 0 { "+" } else { "-" })?;
        }
        Ok(())
    }
}
