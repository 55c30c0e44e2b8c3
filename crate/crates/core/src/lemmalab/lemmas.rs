use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use super::profile::{profile_of, BalancedProfile};
use crate::error::{check_range, Error, Result};
use crate::seqcore::{
    aperiodic_autocorrelations, decode_rle, is_balanced, is_barker, run_structure,
    RunLengthEncoding, RunStructure, RunVector,
};

/// The checkable statements about run vectors. External ids are given by
/// [`LemmaId::as_str`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(into = "&'static str")]
pub enum LemmaId {
    /// `L1`: balanced iff every `R~_k` is odd.
    BalancedParity,
    /// `L2`: `f(k) = f_T(k) = -(-1)^(k+mu)` strictly inside a block.
    GapSign,
    /// `L3`: `f(s-1) = -f(s)` and `f(s+1) = f(s)` around an odd `s` in `S`.
    NeighborSign,
    /// `L4`: `U_k = mu (mod 2)` iff `k = 2s` with `s` in `S`.
    UParity,
    /// `L5`: for `k` in `S`, `k = 2s` with `s` in `S` iff `R~_k = 1 (mod 4)`.
    Mod4,
    /// `L6`: long leading runs force short trailing runs.
    Tail,
    /// `L7`: `|R~_k0 + R~_(k0-1)| >= 2`.
    PairBound,
    /// `L7n`: the pair bound forces some `|C_j| >= 3` near `n - k0`.
    PairBoundRemark,
    /// `sj-mod-q`: `R~_p = -1`, the residues of `s_j` mod `p`, and `s_(nu+1) <= gamma + 1`.
    SjModQ,
    /// `p-odd`: structure of `p` and `s_(nu+1)` for odd Barker sequences.
    POdd,
    /// `all-barker`: odd Barker with `n > 5`, `p > 1` has `n <= 13` and one of
    /// three prefixes.
    AllBarker,
}

impl LemmaId {
    pub const ALL: [LemmaId; 11] = [
        LemmaId::BalancedParity,
        LemmaId::GapSign,
        LemmaId::NeighborSign,
        LemmaId::UParity,
        LemmaId::Mod4,
        LemmaId::Tail,
        LemmaId::PairBound,
        LemmaId::PairBoundRemark,
        LemmaId::SjModQ,
        LemmaId::POdd,
        LemmaId::AllBarker,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            LemmaId::BalancedParity => "L1",
            LemmaId::GapSign => "L2",
            LemmaId::NeighborSign => "L3",
            LemmaId::UParity => "L4",
            LemmaId::Mod4 => "L5",
            LemmaId::Tail => "L6",
            LemmaId::PairBound => "L7",
            LemmaId::PairBoundRemark => "L7n",
            LemmaId::SjModQ => "sj-mod-q",
            LemmaId::POdd => "p-odd",
            LemmaId::AllBarker => "all-barker",
        }
    }

    /// Name of the parameter the check ranges over, if any.
    pub fn parameter(self) -> Option<&'static str> {
        match self {
            LemmaId::GapSign | LemmaId::UParity | LemmaId::Mod4 => Some("k"),
            LemmaId::NeighborSign => Some("s"),
            LemmaId::Tail => Some("mu"),
            _ => None,
        }
    }
}

impl From<LemmaId> for &'static str {
    fn from(id: LemmaId) -> Self {
        id.as_str()
    }
}

impl fmt::Display for LemmaId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for LemmaId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        LemmaId::ALL
            .into_iter()
            .find(|id| id.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::UnknownLemma(s.to_string()))
    }
}

/// Outcome of one check. `conclusion_holds` is only meaningful when
/// `hypotheses_met`; it is `false` otherwise.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub lemma_id: LemmaId,
    /// RLE text of the instance.
    pub instance: String,
    pub parameter: Option<i64>,
    pub hypotheses_met: bool,
    pub conclusion_holds: bool,
    pub witness: Option<String>,
}

impl Verdict {
    /// Hypotheses met and conclusion false.
    pub fn is_failure(&self) -> bool {
        self.hypotheses_met && !self.conclusion_holds
    }
}

/// Everything the verifiers read off one RLE, computed once.
pub(crate) struct Instance {
    pub rle: RunLengthEncoding,
    pub rs: RunStructure,
    pub rv: RunVector,
    pub balanced: bool,
    pub c: Vec<i64>,
}

impl Instance {
    pub fn new(rle: &RunLengthEncoding) -> Self {
        let rs = run_structure(rle);
        let rv = RunVector::from_structure(&rs);
        Instance {
            balanced: is_balanced(&rs),
            c: aperiodic_autocorrelations(&decode_rle(rle)),
            rle: rle.clone(),
            rs,
            rv,
        }
    }

    fn n(&self) -> usize {
        self.rs.n
    }

    fn gamma(&self) -> usize {
        self.rs.gamma
    }

    fn profile(&self) -> Option<BalancedProfile> {
        if self.balanced {
            profile_of(&self.rle, &self.rs).ok()
        } else {
            None
        }
    }

    /// `C_j`, zero outside `0..=n`.
    fn c_at(&self, j: i64) -> i64 {
        if j < 0 {
            0
        } else {
            self.c.get(j as usize).copied().unwrap_or(0)
        }
    }
}

struct Check {
    id: LemmaId,
    parameter: Option<i64>,
}

impl Check {
    fn skip(&self, inst: &Instance) -> Verdict {
        self.verdict(inst, false, false, None)
    }

    fn conclude(&self, inst: &Instance, holds: bool, witness: impl FnOnce() -> String) -> Verdict {
        let witness = if holds { None } else { Some(witness()) };
        self.verdict(inst, true, holds, witness)
    }

    fn verdict(
        &self,
        inst: &Instance,
        hypotheses_met: bool,
        conclusion_holds: bool,
        witness: Option<String>,
    ) -> Verdict {
        Verdict {
            lemma_id: self.id,
            instance: inst.rle.to_string(),
            parameter: self.parameter,
            hypotheses_met,
            conclusion_holds,
            witness,
        }
    }
}

fn odd_sign(e: i64) -> i64 {
    if e.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// Evaluates `id` on `rle`. `parameter` is required for the lemmas that range
/// over an index (see [`LemmaId::parameter`]) and ignored otherwise.
pub fn check_lemma(id: LemmaId, rle: &RunLengthEncoding, parameter: Option<i64>) -> Result<Verdict> {
    check_instance(id, &Instance::new(rle), parameter)
}

pub(crate) fn check_instance(id: LemmaId, inst: &Instance, parameter: Option<i64>) -> Result<Verdict> {
    let n = inst.n() as i64;
    let gamma = inst.gamma() as i64;
    let required = |name: &'static str, lo: i64, hi: i64| -> Result<i64> {
        let value = parameter.ok_or(Error::MissingParameter(name))?;
        check_range(name, value, lo, hi)?;
        Ok(value)
    };
    let param = match id.parameter() {
        Some("mu") => Some(required("mu", 1, gamma - 1)?),
        Some(name) => Some(required(name, 1, n - 1)?),
        None => None,
    };
    let check = Check { id, parameter: param };
    let rs = &inst.rs;
    let rv = &inst.rv;

    let verdict = match id {
        LemmaId::BalancedParity => {
            let all_odd = rv.r_tilde.iter().all(|x| x.rem_euclid(2) == 1);
            check.conclude(inst, inst.balanced == all_odd, || {
                let k = rv.r_tilde.iter().position(|x| x.rem_euclid(2) == 0);
                format!("balanced = {}, first even R~ at k = {:?}", inst.balanced, k.map(|k| k + 1))
            })
        }
        LemmaId::GapSign => {
            let k = param.unwrap();
            if !inst.balanced || rs.in_s(k) {
                check.skip(inst)
            } else {
                let mu = rs.block_of(k as usize) as i64;
                let expected = -odd_sign(k + mu);
                let holds = rs.f(k) == rs.f_t(k) && rs.f_t(k) == expected;
                check.conclude(inst, holds, || {
                    format!("mu = {mu}: f = {}, f_T = {}, expected {expected}", rs.f(k), rs.f_t(k))
                })
            }
        }
        LemmaId::NeighborSign => {
            let s = param.unwrap();
            if !inst.balanced || !rs.in_s(s) || s % 2 == 0 {
                check.skip(inst)
            } else {
                let first = s <= 1 || rs.f(s - 1) == -rs.f(s);
                let second = !rs.in_t(s + 1) || rs.f(s + 1) == rs.f(s);
                check.conclude(inst, first && second, || {
                    format!(
                        "f(s-1) = {}, f(s) = {}, f(s+1) = {}, s+1 in T = {}",
                        rs.f(s - 1),
                        rs.f(s),
                        rs.f(s + 1),
                        rs.in_t(s + 1)
                    )
                })
            }
        }
        LemmaId::UParity => {
            let k = param.unwrap();
            if !inst.balanced {
                check.skip(inst)
            } else {
                let mu = rs.block_of(k as usize) as i64;
                let u = rs.u_unchecked(k);
                let parity_matches = (u - mu).rem_euclid(2) == 0;
                let doubled = k % 2 == 0 && rs.in_s(k / 2);
                check.conclude(inst, parity_matches == doubled, || {
                    format!("mu = {mu}, U_k = {u}, k = 2s with s in S: {doubled}")
                })
            }
        }
        LemmaId::Mod4 => {
            let k = param.unwrap();
            if !inst.balanced || !rs.in_s(k) {
                check.skip(inst)
            } else {
                let rt = rv.tilde(k as usize);
                let doubled = k % 2 == 0 && rs.in_s(k / 2);
                check.conclude(inst, doubled == (rt.rem_euclid(4) == 1), || {
                    format!("R~_k = {rt}, k = 2s with s in S: {doubled}")
                })
            }
        }
        LemmaId::Tail => {
            let mu = param.unwrap() as usize;
            let long_prefix = (1..mu).all(|j| inst.rle.run(j) >= 2);
            if !inst.balanced || !long_prefix {
                check.skip(inst)
            } else {
                let gamma = inst.gamma();
                let d = rs.s_at(mu) - mu;
                if d >= gamma {
                    check.conclude(inst, false, || format!("s_mu - mu = {d} >= gamma = {gamma}"))
                } else {
                    let bad = (1..=d).find(|&j| inst.rle.run(gamma + 1 - j) > 2);
                    check.conclude(inst, bad.is_none(), || {
                        let j = bad.unwrap();
                        format!("j = {j}: r_(gamma+1-j) = {}", inst.rle.run(gamma + 1 - j))
                    })
                }
            }
        }
        LemmaId::PairBound | LemmaId::PairBoundRemark => match pair_bound_k(inst) {
            None => check.skip(inst),
            Some(k) => {
                let sum = rv.tilde(k) + rv.tilde(k - 1);
                if id == LemmaId::PairBound {
                    check.conclude(inst, sum.abs() >= 2, || {
                        format!("k0 = {k}: R~_k0 + R~_(k0-1) = {sum}")
                    })
                } else if sum.abs() < 2 {
                    check.skip(inst)
                } else {
                    pair_bound_remark(&check, inst, k, sum)
                }
            }
        },
        LemmaId::SjModQ => match inst.profile() {
            None => check.skip(inst),
            Some(pr) => {
                let mut problems = Vec::new();
                if rv.tilde(pr.p) != -1 {
                    problems.push(format!("(i) R~_p = {}", rv.tilde(pr.p)));
                }
                if let Some(j) = (1..=pr.nu).find(|&j| !rs.s_at(j).is_multiple_of(pr.p)) {
                    problems.push(format!("(ii) s_{j} = {} not divisible by p", rs.s_at(j)));
                }
                if pr.s_nu_plus_1 % pr.p == 0 || pr.q % pr.p == 0 {
                    problems.push(format!("(iii) s_(nu+1) = {}, q = {}", pr.s_nu_plus_1, pr.q));
                }
                if pr.p >= 3 && pr.s_nu_plus_1 > inst.gamma() + 1 {
                    problems.push(format!("(iv) s_(nu+1) = {} > gamma + 1", pr.s_nu_plus_1));
                }
                check.conclude(inst, problems.is_empty(), || problems.join("; "))
            }
        },
        LemmaId::POdd => p_odd(&check, inst),
        LemmaId::AllBarker => all_barker(&check, inst),
    };
    Ok(verdict)
}

/// `k0` when the pair-bound hypotheses hold and `k0 < n`.
fn pair_bound_k(inst: &Instance) -> Option<usize> {
    let pr = inst.profile()?;
    let hypotheses = pr.p >= 3
        && pr.p % 2 == 1
        && pr.s_nu_plus_1 % 2 == 1
        && (pr.alpha == 0 || inst.rs.in_t(pr.s_nu_plus_1 as i64 + 1));
    (hypotheses && pr.k0 < inst.n()).then_some(pr.k0)
}

fn pair_bound_remark(check: &Check, inst: &Instance, k: usize, sum: i64) -> Verdict {
    let n = inst.n() as i64;
    let k = k as i64;
    let (hi, lo) = if k % 2 == 1 {
        (n - k + 2, n - k)
    } else {
        (n - k + 1, n - k - 1)
    };
    let diff = inst.c_at(hi) - inst.c_at(lo);
    let identity = 2 * sum.abs() == diff.abs();
    // j = 0 is in the window when k = n - 1; the peak C_0 = n then qualifies.
    let big = (n - k - 1..=n - k + 2)
        .filter(|&j| (0..=n).contains(&j))
        .find(|&j| inst.c_at(j).abs() >= 3);
    check.conclude(inst, identity && big.is_some(), || {
        let window: Vec<_> = (n - k - 1..=n - k + 2).map(|j| (j, inst.c_at(j))).collect();
        format!(
            "k0 = {k}: 2|R~ sum| = {}, |C_{hi} - C_{lo}| = {}, (j, C_j) = {window:?}",
            2 * sum.abs(),
            diff.abs()
        )
    })
}

/// Shared hypotheses of `p-odd` and `all-barker`: an odd Barker sequence with `p > 1`.
fn odd_barker_with_long_start(inst: &Instance) -> bool {
    inst.n() % 2 == 1 && inst.rle.p() > 1 && is_barker(&decode_rle(&inst.rle))
}

fn p_odd(check: &Check, inst: &Instance) -> Verdict {
    if !odd_barker_with_long_start(inst) {
        return check.skip(inst);
    }
    let n = inst.n();
    let Some(pr) = inst.profile() else {
        return check.conclude(inst, false, || "Barker RLE is not balanced".into());
    };
    let mut problems = Vec::new();
    if n > 3 && pr.p % 2 == 0 {
        problems.push(format!("(i) p = {} is even", pr.p));
    }
    if n > 5 {
        if pr.s_nu_plus_1 % 2 == 0 {
            problems.push(format!("(ii) s_(nu+1) = {} is even", pr.s_nu_plus_1));
        }
        if pr.alpha == 1 && !inst.rs.in_t(pr.s_nu_plus_1 as i64 + 1) {
            problems.push("(iii) s_(nu+1) + 1 not in T".into());
        }
        if n > pr.k0 + 1 {
            problems.push(format!("(iv) n = {n} > p + s_(nu+1) + alpha + 1 = {}", pr.k0 + 1));
        }
    }
    check.conclude(inst, problems.is_empty(), || problems.join("; "))
}

fn all_barker(check: &Check, inst: &Instance) -> Verdict {
    if !odd_barker_with_long_start(inst) || inst.n() <= 5 {
        return check.skip(inst);
    }
    let holds = inst.n() <= 13 && all_barker_prefix(&inst.rle);
    check.conclude(inst, holds, || format!("n = {}, r = ({})", inst.n(), inst.rle.runs_text()))
}

/// `r_1 = r_2 = 3, r_3 = 1` or `r_1 in {3, 5}, r_2 = 2`.
pub fn all_barker_prefix(rle: &RunLengthEncoding) -> bool {
    matches!(rle.runs(), [3, 3, 1, ..] | [3 | 5, 2, ..])
}

/// Checks the `p-odd` statement on `rle`; hypotheses require an odd Barker
/// sequence with `p > 1`.
pub fn check_p_odd(rle: &RunLengthEncoding) -> Verdict {
    check_lemma(LemmaId::POdd, rle, None).expect("p-odd takes no parameter")
}
