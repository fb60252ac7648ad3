use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use qds_bench::{noisy_words, random_matrix, steane_bch};
use qds_core::sim::run_cell;
use qds_core::BchCode;

fn bch_decode(c: &mut Criterion) {
    let mut group = c.benchmark_group("bch_decode");
    for (m, t, a) in [(5, 3, 10), (7, 11, 47), (10, 20, 0)] {
        let code = BchCode::new(m, t).unwrap().shorten(a).unwrap();
        let words = noisy_words(&code, 64, 1);
        group.bench_with_input(BenchmarkId::from_parameter(code.to_string()), &words, |b, words| {
            b.iter(|| {
                for w in words {
                    black_box(code.decode(w).unwrap());
                }
            })
        });
    }
    group.finish();
}

fn bch_construct(c: &mut Criterion) {
    c.bench_function("bch_construct m=10 t=20", |b| b.iter(|| BchCode::new(black_box(10), black_box(20)).unwrap()));
}

fn mat_mul(c: &mut Criterion) {
    let mut group = c.benchmark_group("mat_mul");
    for n in [64, 256] {
        let (a, b_) = (random_matrix(n, n, 2), random_matrix(n, n, 3));
        group.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, _| b.iter(|| a.mul(black_box(&b_)).unwrap()));
    }
    group.finish();
}

fn row_reduce(c: &mut Criterion) {
    let m = random_matrix(256, 512, 4);
    c.bench_function("row_reduce 256x512", |b| b.iter(|| black_box(&m).rank()));
}

fn monte_carlo_cell(c: &mut Criterion) {
    let (q, dec) = steane_bch();
    c.bench_function("run_cell steane+bch (2,4) x1000", |b| {
        b.iter(|| run_cell(&q, &dec, 2, 4, 0, 1000, black_box(7)).unwrap())
    });
}

criterion_group!(benches, bch_decode, bch_construct, mat_mul, row_reduce, monte_carlo_cell);
criterion_main!(benches);
