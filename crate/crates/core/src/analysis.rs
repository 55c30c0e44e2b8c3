use serde::Serialize;

use crate::seqcore::{
    encode_rle, is_balanced, is_barker, is_skew_symmetric, run_structure, AutocorrelationProfile,
    BinarySequence, RunLengthEncoding, RunVector,
};

/// Everything `seqcore` derives from one sequence. Vector index mappings are
/// those documented in [`crate::seqcore`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Analysis {
    pub sequence: String,
    pub n: usize,
    pub gamma: usize,
    pub rle: RunLengthEncoding,
    #[serde(rename = "S")]
    pub s_set: Vec<usize>,
    #[serde(rename = "T")]
    pub t_set: Vec<usize>,
    #[serde(rename = "C")]
    pub aperiodic: Vec<i64>,
    #[serde(rename = "C_periodic")]
    pub periodic: Vec<i64>,
    pub r_tilde: Vec<i64>,
    pub r: Vec<i64>,
    pub balanced: bool,
    pub skew_symmetric: bool,
    pub barker: bool,
}

impl Analysis {
    pub fn of(seq: &BinarySequence) -> Self {
        let rle = encode_rle(seq);
        let rs = run_structure(&rle);
        let rv = RunVector::from_structure(&rs);
        let ac = AutocorrelationProfile::of(seq);
        Analysis {
            sequence: seq.to_string(),
            n: seq.len(),
            gamma: rle.gamma(),
            balanced: is_balanced(&rs),
            skew_symmetric: is_skew_symmetric(seq),
            barker: is_barker(seq),
            s_set: rs.s_set,
            t_set: rs.t_set,
            aperiodic: ac.aperiodic,
            periodic: ac.periodic,
            r_tilde: rv.r_tilde,
            r: rv.r,
            rle,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn barker_seven() {
        let a = Analysis::of(&"+++--+-".parse().unwrap());
        assert!(a.barker && a.balanced && a.skew_symmetric);
        assert_eq!(a.rle.runs(), &[3, 2, 1, 1]);
        assert_eq!(a.gamma, 4);
    }

    #[test]
    fn rle_input_not_barker() {
        let rle: RunLengthEncoding = "+,3,2,2,1,1".parse().unwrap();
        let a = Analysis::of(&crate::decode_rle(&rle));
        assert!(!a.barker);
        assert_eq!(a.r_tilde[5], -1);
    }

    #[test]
    fn single_element() {
        let a = Analysis::of(&"+".parse().unwrap());
        assert_eq!(a.n, 1);
        assert!(a.barker && a.r_tilde.is_empty());
        assert_eq!(a.aperiodic, [1, 0]);
    }
}
