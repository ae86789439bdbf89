use cheatbot_bench::{bodyguard_cases, psi_cases, pursuit_cases};
use cheatbot_core::engine::BodyguardOptions;
use cheatbot_core::psi::{check_ccr_le_k, PsiOptions};
use cheatbot_core::solver::{BodyguardTable, PursuitTable, Variant};
use criterion::{black_box, criterion_group, criterion_main, Criterion};

fn pursuit(c: &mut Criterion) {
    let mut group = c.benchmark_group("pursuit");
    group.sample_size(10);
    for case in pursuit_cases() {
        for (label, variant) in [("cheating", Variant::Cheating), ("surround", Variant::Surround)] {
            group.bench_function(format!("{label} {}", case.name), |b| {
                b.iter(|| PursuitTable::solve(black_box(&case.graph), case.k, variant, u64::MAX).unwrap())
            });
        }
    }
    group.finish();
}

fn psi(c: &mut Criterion) {
    let mut group = c.benchmark_group("psi");
    group.sample_size(10);
    for case in psi_cases() {
        group.bench_function(case.name, |b| {
            b.iter(|| check_ccr_le_k(black_box(&case.graph), case.k, PsiOptions::default(), u64::MAX).unwrap())
        });
    }
    group.finish();
}

fn bodyguard(c: &mut Criterion) {
    let mut group = c.benchmark_group("bodyguard");
    group.sample_size(10);
    for case in bodyguard_cases() {
        group.bench_function(case.name, |b| {
            b.iter(|| BodyguardTable::solve(black_box(&case.graph), case.k, BodyguardOptions::default(), u64::MAX).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, pursuit, psi, bodyguard);
criterion_main!(benches);
