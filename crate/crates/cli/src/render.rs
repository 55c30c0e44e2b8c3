//! Human-readable tables and the line-oriented machine formats.

use std::fmt::Write as _;

use runvec_core::lemmalab::{SweepReport, Verdict};
use runvec_core::{
    aperiodic_autocorrelations, encode_rle, Analysis, BinarySequence, ClassificationReport,
    RunLengthEncoding, SearchSpec,
};
use serde::Serialize;

fn list(v: &[impl ToString]) -> String {
    let items: Vec<_> = v.iter().map(ToString::to_string).collect();
    format!("[{}]", items.join(", "))
}

pub fn analysis(a: &Analysis) -> String {
    let mut out = String::new();
    let rows: [(&str, String); 13] = [
        ("sequence", a.sequence.clone()),
        ("n", a.n.to_string()),
        ("gamma", a.gamma.to_string()),
        ("rle", a.rle.to_string()),
        ("S", list(&a.s_set)),
        ("T", list(&a.t_set)),
        ("C", list(&a.aperiodic)),
        ("C_periodic", list(&a.periodic)),
        ("R~", list(&a.r_tilde)),
        ("R", list(&a.r)),
        ("balanced", a.balanced.to_string()),
        ("skew_symmetric", a.skew_symmetric.to_string()),
        ("barker", a.barker.to_string()),
    ];
    for (key, value) in rows {
        writeln!(out, "{key:<15}{value}").unwrap();
    }
    out
}

pub fn sweep(report: &SweepReport) -> String {
    let mut out = String::new();
    writeln!(
        out,
        "{:<16}{:>4}{:>12}{:>12}{:>10}",
        "target", "n", "cases", "hyp_met", "failures"
    )
    .unwrap();
    for e in &report.entries {
        writeln!(
            out,
            "{:<16}{:>4}{:>12}{:>12}{:>10}",
            e.target.to_string(),
            e.n,
            e.population,
            e.hypotheses_met_count,
            e.failure_count
        )
        .unwrap();
    }
    for e in report.entries.iter().filter(|e| e.failure_count > 0) {
        for w in &e.failures {
            let param = w.parameter.map(|p| format!(" @ {p}")).unwrap_or_default();
            writeln!(out, "FAIL {} n={} {}{param}: {}", e.target, e.n, w.instance, w.detail).unwrap();
        }
    }
    for t in &report.truncated {
        writeln!(out, "note: {} stopped at its limit n = {}", t.target, t.limit).unwrap();
    }
    writeln!(
        out,
        "{} failures over {} entries, max n {}",
        report.failure_count(),
        report.entries.len(),
        report.n_max
    )
    .unwrap();
    out
}

#[derive(Serialize)]
struct SearchLine<'a> {
    n: usize,
    sequence: String,
    rle: RunLengthEncoding,
    #[serde(rename = "C")]
    c: Vec<i64>,
    verdict: &'a str,
}

pub fn search_json_lines(found: &[BinarySequence]) -> String {
    let mut out = String::new();
    for seq in found {
        let line = SearchLine {
            n: seq.len(),
            sequence: seq.to_string(),
            rle: encode_rle(seq),
            c: aperiodic_autocorrelations(seq),
            verdict: "barker",
        };
        out.push_str(&serde_json::to_string(&line).expect("serializable"));
        out.push('\n');
    }
    out
}

pub fn counts_csv(counts: impl Iterator<Item = (usize, usize)>) -> String {
    let mut out = String::from("n,count\n");
    for (n, count) in counts {
        writeln!(out, "{n},{count}").unwrap();
    }
    out
}

pub fn search(spec: &SearchSpec, found: &[BinarySequence]) -> String {
    let mut out = String::new();
    for seq in found {
        writeln!(out, "{:>3}  {:<28}{}", seq.len(), seq.to_string(), encode_rle(seq)).unwrap();
    }
    writeln!(
        out,
        "{} Barker sequences, {} search, n in {}..={}",
        found.len(),
        spec.mode,
        spec.min_n,
        spec.max_n
    )
    .unwrap();
    out
}

fn verdict(v: &Verdict) -> &'static str {
    match (v.hypotheses_met, v.conclusion_holds) {
        (false, _) => "n/a",
        (true, true) => "holds",
        (true, false) => "FAILS",
    }
}

fn check(b: Option<bool>) -> &'static str {
    match b {
        None => "n/a",
        Some(true) => "yes",
        Some(false) => "NO",
    }
}

pub fn classification(report: &ClassificationReport) -> String {
    let mut out = String::new();
    writeln!(out, "counts: {}", {
        let parts: Vec<_> = report
            .counts
            .iter()
            .map(|c| format!("n={}:{}", c.n, c.barker_count))
            .collect();
        parts.join(" ")
    })
    .unwrap();
    writeln!(
        out,
        "{:>3}  {:<22}{:>3}{:>4}{:>4}{:>4}{:>4}  {:<8}{:<8}{:<8}all-barker",
        "n", "rle", "p", "nu", "q", "a", "k0", "prefix", "bound", "p-odd"
    )
    .unwrap();
    for c in &report.rles {
        let pr = &c.profile;
        writeln!(
            out,
            "{:>3}  {:<22}{:>3}{:>4}{:>4}{:>4}{:>4}  {:<8}{:<8}{:<8}{}",
            c.n,
            c.rle.to_string(),
            pr.p,
            pr.nu,
            pr.q,
            pr.alpha,
            pr.k0,
            check(c.prefix_condition),
            check(c.length_bound),
            verdict(&c.p_odd),
            verdict(&c.all_barker)
        )
        .unwrap();
    }
    if !report.excluded.is_empty() {
        writeln!(out, "excluded (p = 1): {}", report.excluded.join(" ")).unwrap();
    }
    for note in &report.notes {
        writeln!(out, "note: {note}").unwrap();
    }
    out
}
