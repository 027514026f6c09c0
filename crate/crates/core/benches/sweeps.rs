//! Sequential vs rayon batch evaluation of the two heaviest exact-arithmetic
//! sweeps: the moduli consistency oracle (build, transport, classify,
//! compare) and full structure validation (eigenbundle over Q(i) plus
//! involutivity membership tests).

use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use gcg_core::batch::{first_failure_par, first_failure_seq};
use gcg_core::gcs::{validate, GCStructure, Modulus, ModulusRole};
use gcg_core::mirror::consistency_check;
use gcg_core::sample;
use gcg_core::ThreeForm;

fn moduli_batch(len: usize) -> Vec<Modulus> {
    let mut rng = sample::rng(0xBE ^ len as u64);
    (0..len)
        .map(|i| {
            let role = if i % 2 == 0 {
                ModulusRole::Complex
            } else {
                ModulusRole::Symplectic
            };
            sample::modulus(&mut rng, role, 9)
        })
        .collect()
}

fn structure_batch(len: usize) -> Vec<GCStructure> {
    moduli_batch(len)
        .iter()
        .map(|m| match m.role() {
            ModulusRole::Complex => gcg_core::from_complex(
                &gcg_core::SplitFrame::torus2(),
                &gcg_core::complex_from_modulus(m).unwrap(),
            )
            .unwrap(),
            ModulusRole::Symplectic => gcg_core::b_symplectic_from_modulus(m).unwrap(),
        })
        .collect()
}

fn bench_consistency_sweep(c: &mut Criterion) {
    let mut group = c.benchmark_group("consistency_sweep");
    group.sample_size(10);
    for len in [64usize, 512, 2048] {
        let batch = moduli_batch(len);
        let check = |m: &Modulus| consistency_check(m).map(|r| r.passed).unwrap_or(false);
        group.bench_with_input(BenchmarkId::new("seq", len), &batch, |b, batch| {
            b.iter(|| black_box(first_failure_seq(batch, check)))
        });
        group.bench_with_input(BenchmarkId::new("par", len), &batch, |b, batch| {
            b.iter(|| black_box(first_failure_par(batch, check)))
        });
    }
    group.finish();
}

fn bench_validate_sweep(c: &mut Criterion) {
    let mut group = c.benchmark_group("validate_sweep");
    group.sample_size(10);
    for len in [64usize, 512, 2048] {
        let batch = structure_batch(len);
        let h = ThreeForm::zero(2);
        let check = move |s: &GCStructure| validate(s, &h).map(|r| r.all_ok()).unwrap_or(false);
        group.bench_with_input(BenchmarkId::new("seq", len), &batch, |b, batch| {
            b.iter(|| black_box(first_failure_seq(batch, &check)))
        });
        group.bench_with_input(BenchmarkId::new("par", len), &batch, |b, batch| {
            b.iter(|| black_box(first_failure_par(batch, &check)))
        });
    }
    group.finish();
}

criterion_group!(benches, bench_consistency_sweep, bench_validate_sweep);
criterion_main!(benches);
