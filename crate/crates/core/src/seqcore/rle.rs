use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::BinarySequence;
use crate::error::{Error, Result};

/// Run-length encoding `r = (r_1, ..., r_gamma)` together with the sign of `a_1`.
///
/// `runs()[j]` is `r_{j+1}`. Text form is the sign followed by the comma-separated
/// runs, e.g. `+,3,2,1,1`. JSON shape:
/// `{"start_sign": 1, "runs": [3, 2, 1, 1], "gamma": 4, "n": 7}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawRle", into = "RawRle")]
pub struct RunLengthEncoding {
    start_sign: i8,
    runs: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct RawRle {
    start_sign: i64,
    runs: Vec<usize>,
    gamma: usize,
    n: usize,
}

impl TryFrom<RawRle> for RunLengthEncoding {
    type Error = Error;

    fn try_from(raw: RawRle) -> Result<Self> {
        let sign = match raw.start_sign {
            1 => 1,
            -1 => -1,
            other => return Err(Error::BadSign(other)),
        };
        let rle = RunLengthEncoding::new(sign, raw.runs)?;
        if rle.gamma() != raw.gamma || rle.n() != raw.n {
            return Err(Error::Invariant(format!(
                "gamma/n fields ({}, {}) disagree with runs ({}, {})",
                raw.gamma,
                raw.n,
                rle.gamma(),
                rle.n()
            )));
        }
        Ok(rle)
    }
}

impl From<RunLengthEncoding> for RawRle {
    fn from(rle: RunLengthEncoding) -> Self {
        RawRle {
            start_sign: rle.start_sign.into(),
            gamma: rle.gamma(),
            n: rle.n(),
            runs: rle.runs,
        }
    }
}

impl RunLengthEncoding {
    pub fn new(start_sign: i8, runs: Vec<usize>) -> Result<Self> {
        if start_sign != 1 && start_sign != -1 {
            return Err(Error::BadSign(start_sign.into()));
        }
        if runs.is_empty() {
            return Err(Error::Empty);
        }
        if let Some(index) = runs.iter().position(|&r| r == 0) {
            return Err(Error::ZeroRun { index: index + 1 });
        }
        Ok(RunLengthEncoding { start_sign, runs })
    }

    pub fn start_sign(&self) -> i8 {
        self.start_sign
    }

    pub fn runs(&self) -> &[usize] {
        &self.runs
    }

    /// `r_j`, 1-based.
    pub fn run(&self, j: usize) -> usize {
        self.runs[j - 1]
    }

    pub fn gamma(&self) -> usize {
        self.runs.len()
    }

    pub fn n(&self) -> usize {
        self.runs.iter().sum()
    }

    /// `p = r_1`.
    pub fn p(&self) -> usize {
        self.runs[0]
    }

    /// Encoding of the reversed sequence.
    pub fn reversed(&self) -> Self {
        let last_sign = if self.gamma() % 2 == 1 {
            self.start_sign
        } else {
            -self.start_sign
        };
        RunLengthEncoding {
            start_sign: last_sign,
            runs: self.runs.iter().rev().copied().collect(),
        }
    }

    pub fn negated(&self) -> Self {
        RunLengthEncoding {
            start_sign: -self.start_sign,
            runs: self.runs.clone(),
        }
    }

    /// The runs alone, comma separated: `3,2,1,1`.
    pub fn runs_text(&self) -> String {
        self.runs
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join(",")
    }
}

pub fn encode_rle(seq: &BinarySequence) -> RunLengthEncoding {
    let elems = seq.elems();
    let mut runs = Vec::new();
    let mut len = 1;
    for w in elems.windows(2) {
        if w[0] == w[1] {
            len += 1;
        } else {
            runs.push(len);
            len = 1;
        }
    }
    runs.push(len);
    RunLengthEncoding {
        start_sign: elems[0],
        runs,
    }
}

pub fn decode_rle(rle: &RunLengthEncoding) -> BinarySequence {
    let mut elems = Vec::with_capacity(rle.n());
    let mut sign = rle.start_sign;
    for &r in &rle.runs {
        elems.extend(std::iter::repeat_n(sign, r));
        sign = -sign;
    }
    BinarySequence::new(elems).expect("valid encoding decodes to a valid sequence")
}

impl FromStr for RunLengthEncoding {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut chars = s.char_indices();
        let sign = match chars.next() {
            None => return Err(Error::Empty),
            Some((_, '+')) => 1,
            Some((_, '-')) => -1,
            Some((position, found)) => return Err(Error::Parse { position, found }),
        };
        let mut rest = &s[1..];
        let mut offset = 1;
        if let Some(stripped) = rest.strip_prefix(',') {
            rest = stripped;
            offset += 1;
        }
        if rest.is_empty() {
            return Err(Error::Empty);
        }
        let mut runs = Vec::new();
        for field in rest.split(',') {
            let trimmed = field.trim();
            if let Some((i, bad)) =
                field.char_indices().find(|(_, c)| !c.is_ascii_digit() && !c.is_whitespace())
            {
                return Err(Error::Parse {
                    position: offset + i,
                    found: bad,
                });
            }
            match trimmed.parse::<usize>() {
                Ok(r) if r > 0 => runs.push(r),
                _ => {
                    return Err(Error::BadRunLength {
                        position: offset,
                        value: trimmed.to_string(),
                    })
                }
            }
            offset += field.len() + 1;
        }
        RunLengthEncoding::new(sign, runs)
    }
}

impl fmt::Display for RunLengthEncoding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.start_sign > 0 { '+' } else { '-' };
        write!(f, "{sign},{}", self.runs_text())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(s: &str) -> BinarySequence {
        s.parse().unwrap()
    }

    #[test]
    fn encode_examples() {
        let r = encode_rle(&seq("++-"));
        assert_eq!((r.start_sign(), r.runs()), (1, &[2, 1][..]));
        let r = encode_rle(&seq("+"));
        assert_eq!((r.start_sign(), r.runs()), (1, &[1][..]));
        let r = encode_rle(&seq("+++--+-"));
        assert_eq!(r.runs(), &[3, 2, 1, 1]);
        assert_eq!(r.gamma(), 4);
        assert_eq!(r.n(), 7);
    }

    #[test]
    fn decode_examples() {
        let rle: RunLengthEncoding = "+,5,2,2,1,1,1,1".parse().unwrap();
        assert_eq!(decode_rle(&rle).to_string(), "+++++--++-+-+");
        let rle = RunLengthEncoding::new(-1, vec![1]).unwrap();
        assert_eq!(decode_rle(&rle).to_string(), "-");
        let rle: RunLengthEncoding = "+,3,3,1,2,1,1".parse().unwrap();
        assert_eq!(decode_rle(&rle).to_string(), "+++---+--+-");
    }

    #[test]
    fn rejects_nonpositive_runs() {
        assert_eq!(
            RunLengthEncoding::new(1, vec![2, 0, 1]),
            Err(Error::ZeroRun { index: 2 })
        );
        assert!(matches!(
            "+,3,0".parse::<RunLengthEncoding>(),
            Err(Error::BadRunLength { .. })
        ));
        assert!(matches!(
            "+,3,-1".parse::<RunLengthEncoding>(),
            Err(Error::Parse {
                position: 4,
                found: '-'
            })
        ));
        assert!(matches!(
            "*,3".parse::<RunLengthEncoding>(),
            Err(Error::Parse {
                position: 0,
                found: '*'
            })
        ));
    }

    #[test]
    fn text_round_trip() {
        for text in ["+,3,2,1,1", "-,1", "+,12,1"] {
            let rle: RunLengthEncoding = text.parse().unwrap();
            assert_eq!(rle.to_string(), text);
        }
        let loose: RunLengthEncoding = "+3,2, 1".parse().unwrap();
        assert_eq!(loose.to_string(), "+,3,2,1");
    }

    #[test]
    fn reversal_matches_sequence_reversal() {
        for n in 1..=8 {
            for s in BinarySequence::all(n) {
                assert_eq!(encode_rle(&s.reversed()), encode_rle(&s).reversed());
                assert_eq!(encode_rle(&s.negated()), encode_rle(&s).negated());
            }
        }
    }

    #[test]
    fn json_shape() {
        let rle: RunLengthEncoding = "+,3,2,1,1".parse().unwrap();
        let json = serde_json::to_string(&rle).unwrap();
        assert_eq!(json, r#"{"start_sign":1,"runs":[3,2,1,1],"gamma":4,"n":7}"#);
        assert_eq!(serde_json::from_str::<RunLengthEncoding>(&json).unwrap(), rle);
        let bad = r#"{"start_sign":1,"runs":[3,2],"gamma":4,"n":5}"#;
        assert!(serde_json::from_str::<RunLengthEncoding>(bad).is_err());
    }
}
