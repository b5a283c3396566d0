//! Throughput benchmarks for the estimator hot loop, single-policy
//! simulation, and a full replication of the two-arm abrupt-change scenario.

use criterion::{criterion_group, criterion_main, BatchSize, Criterion};
use driftbandit_core::aff::{AffState, StepSize};
use driftbandit_core::config::preset;
use driftbandit_core::harness::run_replication;
use driftbandit_core::policies::{AutoParams, PolicyKind};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::hint::black_box;

fn aff_observe(c: &mut Criterion) {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let rewards: Vec<f64> = (0..10_000).map(|_| f64::from(rng.random::<bool>())).collect();
    c.bench_function("aff_observe_10k", |b| {
        b.iter_batched(
            || AffState::new(0.001).unwrap(),
            |mut state| {
                for (t, &y) in rewards.iter().enumerate() {
                    state.observe(y, t as u64 + 1).unwrap();
                }
                black_box(state.mean())
            },
            BatchSize::SmallInput,
        )
    });
}

fn policy_loop(c: &mut Criterion) {
    let kinds = [
        ("ucb", PolicyKind::Ucb),
        (
            "aff_ucb2",
            PolicyKind::AffUcb2 {
                eta: StepSize::Fixed(0.001),
            },
        ),
        (
            "aff_ots",
            PolicyKind::AffOts {
                eta: StepSize::Fixed(0.001),
                alpha0: 2.0,
                beta0: 2.0,
            },
        ),
    ];
    let mut group = c.benchmark_group("policy_10k_steps");
    for (name, kind) in kinds {
        group.bench_function(name, |b| {
            b.iter(|| {
                let mut policy = kind.build(2, &AutoParams::default()).unwrap();
                let mut rng = ChaCha8Rng::seed_from_u64(2);
                for t in 1..=10_000u64 {
                    let arm = policy.choose(t, &mut rng);
                    let y = f64::from(rng.random::<bool>());
                    policy.feed(arm, y, t);
                }
                black_box(policy)
            })
        });
    }
    group.finish();
}

fn full_replication(c: &mut Criterion) {
    let config = preset("case1", None, None).unwrap();
    c.bench_function("case1_replication_14_policies", |b| {
        b.iter(|| black_box(run_replication(&config, 0).unwrap()))
    });
}

criterion_group!(benches, aff_observe, policy_loop, full_replication);
criterion_main!(benches);
