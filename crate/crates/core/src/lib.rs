//! Run-vector calculus for binary sequences, machine checks of its identities
//! and lemmas, and an exhaustive search for odd-length Barker sequences.
//!
//! * [`seqcore`]: sequences, RLEs, autocorrelations, run structure, run vector.
//! * [`lemmalab`]: verifiers, the difference-sequence oracle, sweeps.
//! * [`search`]: pruned and skew-restricted Barker search, classification.

pub mod analysis;
pub mod error;
pub mod lemmalab;
pub mod limits;
pub mod packed;
pub mod search;
pub mod seqcore;

pub use analysis::Analysis;
pub use error::{Error, Result};
pub use lemmalab::{BalancedProfile, LemmaId, SweepReport, Target, Verdict};
pub use limits::Limits;
pub use search::{ClassificationReport, SearchMode, SearchSpec};
pub use seqcore::{
    aperiodic_autocorrelations, decode_rle, encode_rle, is_balanced, is_barker, is_skew_symmetric,
    periodic_autocorrelations, run_structure, run_vector, AutocorrelationProfile, BinarySequence,
    RunLengthEncoding, RunStructure, RunVector, SignValues,
};
