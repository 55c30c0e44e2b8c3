use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use runvec_bench::random_sequences;
use runvec_core::lemmalab::theorem1_residual;
use runvec_core::packed::PackedSequence;
use runvec_core::{aperiodic_autocorrelations, is_barker, run_vector};
use std::hint::black_box;

fn correlations(c: &mut Criterion) {
    let mut group = c.benchmark_group("aperiodic");
    for n in [13, 32, 63] {
        let seqs = random_sequences(n as u64, 64, n);
        let packed: Vec<_> = seqs
            .iter()
            .map(|s| PackedSequence::from_sequence(s).unwrap())
            .collect();
        group.bench_with_input(BenchmarkId::new("scalar", n), &seqs, |b, seqs| {
            b.iter(|| {
                for s in seqs {
                    black_box(aperiodic_autocorrelations(s));
                }
            })
        });
        group.bench_with_input(BenchmarkId::new("packed", n), &packed, |b, packed| {
            b.iter(|| {
                for p in packed {
                    black_box((1..n).map(|k| p.aperiodic(k)).sum::<i64>());
                }
            })
        });
        group.bench_with_input(BenchmarkId::new("is_barker_scalar", n), &seqs, |b, seqs| {
            b.iter(|| seqs.iter().filter(|s| is_barker(s)).count())
        });
        group.bench_with_input(BenchmarkId::new("is_barker_packed", n), &packed, |b, packed| {
            b.iter(|| packed.iter().filter(|p| p.is_barker()).count())
        });
    }
    group.finish();
}

fn run_vectors(c: &mut Criterion) {
    let mut group = c.benchmark_group("run_vector");
    for n in [16, 64, 256] {
        let seqs = random_sequences(7 + n as u64, 32, n);
        group.bench_with_input(BenchmarkId::new("run_vector", n), &seqs, |b, seqs| {
            b.iter(|| {
                for s in seqs {
                    black_box(run_vector(s));
                }
            })
        });
        group.bench_with_input(BenchmarkId::new("theorem1_residual", n), &seqs, |b, seqs| {
            b.iter(|| {
                for s in seqs {
                    black_box(theorem1_residual(s));
                }
            })
        });
    }
    group.finish();
}

criterion_group!(benches, correlations, run_vectors);
criterion_main!(benches);
