mod common;

use runvec_core::lemmalab::{sweep_with, SweepConfig, Target};
use runvec_core::search::{
    barker_filter_unpruned, barker_full, enumerate_barker, SearchMode, SearchSpec,
};
use runvec_core::{is_barker, BinarySequence};

#[test]
fn pruned_search_is_sound_and_complete() {
    for n in 1..=16 {
        let pruned = barker_full(n);
        assert_eq!(pruned, barker_filter_unpruned(n), "n = {n}");
        // independent scalar check of every sequence, emitted or not
        let scalar: Vec<_> = BinarySequence::all(n).filter(is_barker).collect();
        assert_eq!(pruned, scalar, "n = {n}");
    }
}

#[test]
fn modes_agree_on_odd_lengths() {
    for n in (1..=21).step_by(2) {
        let full = enumerate_barker(&SearchSpec::new(n, n, SearchMode::Full)).unwrap();
        let skew = enumerate_barker(&SearchSpec::new(n, n, SearchMode::SkewRestricted)).unwrap();
        assert_eq!(full, skew, "n = {n}");
    }
}

#[test]
fn results_do_not_depend_on_workers() {
    let run = |mode, lo, hi, workers| {
        let mut spec = SearchSpec::new(lo, hi, mode);
        spec.workers = Some(workers);
        enumerate_barker(&spec).unwrap()
    };
    for mode in [SearchMode::Full, SearchMode::SkewRestricted] {
        let one = run(mode, 1, 21, 1);
        assert_eq!(one, run(mode, 1, 21, 3));
        assert_eq!(one, run(mode, 1, 21, 8));
    }

    let targets = Target::parse_list("theorem1,prop-skew,L4,L7").unwrap();
    let report = |workers| {
        let config = SweepConfig {
            workers: Some(workers),
            ..SweepConfig::default()
        };
        serde_json::to_string(&sweep_with(13, &targets, &config).unwrap()).unwrap()
    };
    assert_eq!(report(1), report(6));
}

#[test]
fn canonical_order_within_output() {
    let found = enumerate_barker(&SearchSpec::new(1, 13, SearchMode::Full)).unwrap();
    assert!(found.windows(2).all(|w| w[0] < w[1]));
    assert_eq!(found.first().unwrap().to_string(), "+");
}

#[test]
fn normalized_output_is_one_per_orbit() {
    let mut spec = SearchSpec::new(1, 13, SearchMode::Full);
    spec.normalize = true;
    let text: Vec<_> = enumerate_barker(&spec)
        .unwrap()
        .iter()
        .map(ToString::to_string)
        .collect();
    assert_eq!(
        text,
        ["+", "++", "+-", "++-", "+++-", "++-+", "+++-+", "+++--+-", "+++---+--+-", "+++++--++-+-+"]
    );
}
