use serde::Serialize;

use crate::error::{Error, Result};
use crate::seqcore::{is_balanced, run_structure, RunLengthEncoding, RunStructure, RunVector};

/// Parameters of a balanced RLE with `p = r_1 > 1`.
///
/// `nu` is the smallest `1 <= j < gamma` with `r_{j+1} mod p != 0`, `q = r_{nu+1}`,
/// `alpha = 1` iff `q mod p = 1`, and `k0 = p + s_{nu+1} + alpha`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BalancedProfile {
    pub p: usize,
    pub nu: usize,
    pub q: usize,
    pub alpha: usize,
    pub s_nu_plus_1: usize,
    pub k0: usize,
}

pub fn balanced_profile(rle: &RunLengthEncoding) -> Result<BalancedProfile> {
    let rs = run_structure(rle);
    if !is_balanced(&rs) {
        return Err(Error::NotBalanced);
    }
    let profile = profile_of(rle, &rs)?;

    // R~_p = -1 and, for p >= 3, s_{nu+1} <= gamma + 1.
    let rv = RunVector::from_structure(&rs);
    if rv.tilde(profile.p) != -1 {
        return Err(Error::Invariant(format!(
            "{rle}: R~_p = {} (expected -1)",
            rv.tilde(profile.p)
        )));
    }
    if profile.p >= 3 && profile.s_nu_plus_1 > rs.gamma + 1 {
        return Err(Error::Invariant(format!(
            "{rle}: s_(nu+1) = {} > gamma + 1 = {}",
            profile.s_nu_plus_1,
            rs.gamma + 1
        )));
    }
    Ok(profile)
}

/// The defining computation, without the balance check or lemma assertions.
pub(crate) fn profile_of(rle: &RunLengthEncoding, rs: &RunStructure) -> Result<BalancedProfile> {
    let p = rle.p();
    if p <= 1 {
        return Err(Error::PTooSmall);
    }
    let gamma = rle.gamma();
    let nu = (1..gamma)
        .find(|&j| !rle.run(j + 1).is_multiple_of(p))
        .ok_or_else(|| Error::Invariant(format!("{rle}: every run is a multiple of p")))?;
    let q = rle.run(nu + 1);
    let alpha = usize::from(q % p == 1);
    let s_nu_plus_1 = rs.s_at(nu + 1);
    Ok(BalancedProfile {
        p,
        nu,
        q,
        alpha,
        s_nu_plus_1,
        k0: p + s_nu_plus_1 + alpha,
    })
}
