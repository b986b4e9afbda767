use std::hint::black_box;

use boxkite_core::lariat::switching_yard;
use boxkite_core::{blade_mul, build_box_kite, find_box_kites, trip_sync_sweep, Hypercomplex};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

fn blades(c: &mut Criterion) {
    let mut group = c.benchmark_group("blade_mul");
    for n in [4u32, 6, 10] {
        let dim = 1u32 << n;
        group.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, &n| {
            b.iter(|| {
                let mut acc = 0u32;
                for p in (0..dim).step_by(7) {
                    for q in (0..dim).step_by(5) {
                        acc ^= blade_mul(black_box(p), black_box(q), n).unwrap().index;
                    }
                }
                acc
            })
        });
    }
    group.finish();
}

fn products(c: &mut Criterion) {
    let x = Hypercomplex::from_terms(5, (0..32).map(|i| (i, i as i64 - 16))).unwrap();
    let y = Hypercomplex::from_terms(5, (0..32).map(|i| (i, 3 - i as i64))).unwrap();
    c.bench_function("hypercomplex_mul_dense_32", |b| b.iter(|| black_box(&x) * black_box(&y)));
}

fn yards(c: &mut Criterion) {
    let bk = build_box_kite(1).unwrap();
    c.bench_function("switching_yard", |b| b.iter(|| switching_yard(black_box(&bk)).unwrap()));
}

fn searches(c: &mut Criterion) {
    let mut group = c.benchmark_group("find_box_kites");
    group.sample_size(10);
    for (n, s) in [(5u32, 1u32), (5, 9), (6, 1), (6, 17)] {
        group.bench_with_input(BenchmarkId::new(format!("n{n}"), s), &(n, s), |b, &(n, s)| {
            b.iter(|| find_box_kites(n, s).unwrap())
        });
    }
    group.finish();
    let mut group = c.benchmark_group("trip_sync_sweep");
    group.sample_size(10);
    group.bench_function("n5_all", |b| b.iter(|| trip_sync_sweep(5, &(1..16).collect::<Vec<_>>()).unwrap()));
    group.finish();
}

criterion_group!(benches, blades, products, yards, searches);
criterion_main!(benches);
