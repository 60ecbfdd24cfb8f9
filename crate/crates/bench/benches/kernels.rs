use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use friable_bench::{interval, primitive_target, unit_difference};
use friable_core::{
    enumerate_solutions, friable_window, psi_exact, search_decompositions, FactorTable, Mode, PsiCounter, SearchLimits,
    SmoothnessThreshold,
};
use std::hint::black_box;

fn factor_table(c: &mut Criterion) {
    let mut g = c.benchmark_group("factor_table");
    for limit in [100_000u64, 1_000_000] {
        g.bench_with_input(BenchmarkId::from_parameter(limit), &limit, |b, &n| {
            b.iter(|| FactorTable::build(black_box(n)).unwrap())
        });
    }
    g.finish();

    let table = FactorTable::build(1_000_000).unwrap();
    let y = SmoothnessThreshold::constant(100.0).unwrap();
    c.bench_function("friable_window/1e6", |b| b.iter(|| friable_window(&y, 1, black_box(1_000_000), &table).unwrap()));
}

fn psi(c: &mut Criterion) {
    let mut g = c.benchmark_group("psi_exact");
    for (x, y) in [(1_000_000u64, 31.0), (10_000_000, 1009.0), (1_000_000_000, 101.0)] {
        g.bench_with_input(BenchmarkId::new(format!("y={y}"), x), &(x, y), |b, &(x, y)| {
            b.iter(|| psi_exact(black_box(x), y).unwrap())
        });
    }
    g.finish();

    c.bench_function("psi_counter/row_x=20000", |b| {
        b.iter(|| {
            let counter = PsiCounter::new(20_000).unwrap();
            (2..=20_000u64).step_by(97).map(|y| counter.count(20_000, y as f64).unwrap()).sum::<u64>()
        })
    });
}

fn sunit(c: &mut Criterion) {
    let mut g = c.benchmark_group("enumerate_solutions");
    for (primes, bound) in [(&[2u64, 3][..], 8u32), (&[2, 3, 5], 4), (&[2, 3, 5, 7], 3)] {
        let (eq, set, domain) = unit_difference(primes);
        g.bench_with_input(BenchmarkId::new(format!("{primes:?}"), bound), &bound, |b, &bound| {
            b.iter(|| enumerate_solutions(&eq, &set, bound, domain).unwrap())
        });
    }
    g.finish();
}

fn search(c: &mut Criterion) {
    let limits = SearchLimits::default();
    let mut g = c.benchmark_group("search_decompositions");
    for n in [8u64, 12] {
        let t = interval(n);
        g.bench_with_input(BenchmarkId::new("interval", n), &t, |b, t| {
            b.iter(|| search_decompositions(t, Mode::Additive, t.n(), &limits).unwrap())
        });
    }
    let t = primitive_target();
    g.bench_function("primitive", |b| b.iter(|| search_decompositions(&t, Mode::Additive, t.n(), &limits).unwrap()));
    g.finish();
}

criterion_group!(benches, factor_table, psi, sunit, search);
criterion_main!(benches);
