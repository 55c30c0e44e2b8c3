//! Executable checks of the run-vector identities and lemmas.
//!
//! Every lemma is a conditional. A [`Verdict`] first records whether the
//! instance meets the hypotheses and only then whether the conclusion holds;
//! an instance outside the hypotheses is never counted as a failure.

mod lemmas;
mod oracle;
mod predictions;
mod profile;
mod sweep;

pub use lemmas::{all_barker_prefix, check_lemma, check_p_odd, LemmaId, Verdict};
pub use oracle::{delta_autocorrelation, theorem1_residual};
pub use predictions::{barker_predictions, BarkerPrediction};
pub use profile::{balanced_profile, BalancedProfile};
pub use sweep::{
    sweep, sweep_with, verify_prop_skew_balanced, SweepConfig, SweepEntry, SweepReport, Target,
    Truncation, Witness, MAX_WITNESSES,
};
