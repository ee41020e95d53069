use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use opcalc_core::closedforms::{q_binomial_expand, shift_p_compositions, shift_p_table, weyl_expand};
use opcalc_core::{AlgebraKind, ExactRational, NormalPoly, UniPoly};

fn shift_coefficients(c: &mut Criterion) {
    let mut group = c.benchmark_group("shift_coefficients");
    for r in [4u32, 8, 12, 16] {
        group.bench_with_input(BenchmarkId::new("recurrence", r), &r, |b, &r| b.iter(|| shift_p_table(black_box(r))));
        // 2^r compositions in total; r = 16 takes seconds per iteration
        if r <= 12 {
            group.bench_with_input(BenchmarkId::new("compositions", r), &r, |b, &r| {
                b.iter(|| (0..=i64::from(r)).map(|d| shift_p_compositions(black_box(r), d)).collect::<Vec<_>>())
            });
        }
        let base = NormalPoly::<ExactRational>::generator_sum(AlgebraKind::Shift);
        group.bench_with_input(BenchmarkId::new("power", r), &r, |b, &r| b.iter(|| base.pow(black_box(r))));
    }
    group.finish();
}

fn other_algebras(c: &mut Criterion) {
    let mut group = c.benchmark_group("closed_vs_power");
    let r = 10;
    group.bench_function("weyl_closed", |b| b.iter(|| weyl_expand(black_box(r))));
    let weyl = NormalPoly::<ExactRational>::generator_sum(AlgebraKind::Weyl);
    group.bench_function("weyl_power", |b| b.iter(|| weyl.pow(black_box(r))));
    group.bench_function("q_closed", |b| b.iter(|| q_binomial_expand(black_box(r))));
    let q = NormalPoly::<UniPoly>::generator_sum(AlgebraKind::QCommutative);
    group.bench_function("q_power", |b| b.iter(|| q.pow(black_box(r))));
    group.finish();
}

criterion_group!(benches, shift_coefficients, other_algebras);
criterion_main!(benches);
