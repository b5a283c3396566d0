//! Randomised invariant checks for the estimator, environments, posterior
//! updates, summary statistics, and the config round-trip.

use driftbandit_core::aff::{AffState, StepSize};
use driftbandit_core::config::{parse_config, render_config};
use driftbandit_core::env::{reflect, ClockParams, EnvSpec};
use driftbandit_core::harness::{ExperimentConfig, PolicyEntry, Quartiles};
use driftbandit_core::policies::{dts_update, BetaParams, PolicyKind};
use proptest::prelude::*;

fn reward_stream() -> impl Strategy<Value = Vec<f64>> {
    prop::collection::vec(prop::bool::ANY.prop_map(f64::from), 1..120)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn estimator_invariants(rewards in reward_stream(), eta in 0.0f64..0.05) {
        let mut state = AffState::with_step(StepSize::Fixed(eta)).unwrap();
        for (i, &y) in rewards.iter().enumerate() {
            state.observe(y, i as u64 + 1).unwrap();
            let n = state.n_obs as f64;
            prop_assert!((0.0..=1.0).contains(&state.lambda));
            prop_assert!((0.0..=1.0).contains(&state.lambda_prev));
            // each weight is in (0, 1], so the sums are ordered and bounded
            prop_assert!(state.k >= 1.0 - 1e-12);
            prop_assert!(state.k <= state.w + 1e-12);
            prop_assert!(state.w <= n + 1e-12);
            prop_assert!(state.m <= state.w + 1e-12);
            let mean = state.mean().unwrap();
            prop_assert!((-1e-12..=1.0 + 1e-12).contains(&mean));
        }
    }

    #[test]
    fn discounted_ratios_cancel(rewards in reward_stream(), gap in 0u64..200) {
        let mut state = AffState::new(0.01).unwrap();
        for (i, &y) in rewards.iter().enumerate() {
            state.observe(y, i as u64 + 1).unwrap();
        }
        let t_now = state.t_last + gap;
        let (m_t, w_t, k_t) = state.discounted_quantities(t_now, 2).unwrap();
        if w_t > 1e-12 {
            prop_assert!((m_t / w_t - state.m / state.w).abs() < 1e-9);
            prop_assert!(
                (k_t / (w_t * w_t) - state.k / (state.w * state.w)).abs() < 1e-9
            );
        }
    }

    #[test]
    fn reflect_maps_into_unit_interval(x in -50.0f64..50.0) {
        let r = reflect(x);
        prop_assert!((0.0..=1.0).contains(&r));
        // already-folded values are fixed points
        prop_assert!((reflect(r) - r).abs() < 1e-12);
    }

    #[test]
    fn dts_mass_stays_bounded(
        alpha in 1e-3f64..50.0,
        beta in 1e-3f64..50.0,
        c in 0.5f64..40.0,
        ys in prop::collection::vec(prop::bool::ANY.prop_map(f64::from), 1..200),
    ) {
        let mut p = BetaParams::new(alpha, beta);
        let cap = (alpha + beta).max(c) + 1.0;
        for y in ys {
            p = dts_update(p, y, c).unwrap();
            prop_assert!(p.alpha > 0.0 && p.beta > 0.0);
            prop_assert!(p.alpha + p.beta <= cap + 1e-9);
        }
    }

    #[test]
    fn quartiles_are_ordered(values in prop::collection::vec(-1e3f64..1e3, 1..60)) {
        let q = Quartiles::of(&values);
        let lo = values.iter().cloned().fold(f64::INFINITY, f64::min);
        let hi = values.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
        prop_assert!(q.min <= q.q1 && q.q1 <= q.median);
        prop_assert!(q.median <= q.q3 && q.q3 <= q.max);
        prop_assert!((q.min - lo).abs() < 1e-12 && (q.max - hi).abs() < 1e-12);
    }

    #[test]
    fn config_round_trips(
        picks in prop::collection::vec(0usize..14, 1..6),
        horizon in 100u64..5000,
        replications in 1u32..20,
        seed in 0u64..1_000_000,
        theta1 in 1e-4f64..0.05,
        theta2 in 1e-4f64..0.05,
    ) {
        let pool: Vec<PolicyKind> = vec![
            PolicyKind::EpsGreedy { epsilon: 0.1 },
            PolicyKind::Ucb,
            PolicyKind::Ts { alpha0: 2.0, beta0: 2.0 },
            PolicyKind::Ots { alpha0: 2.0, beta0: 2.0 },
            PolicyKind::Dts { alpha0: 2.0, beta0: 2.0, c: 100.0 },
            PolicyKind::DUcb { lambda: None, xi: 0.5, scale: 2.0 },
            PolicyKind::DUcb { lambda: Some(0.95), xi: 0.5, scale: 2.0 },
            PolicyKind::SwUcb { window: Some(250), xi: 0.5 },
            PolicyKind::AffDGreedy { eta: StepSize::Fixed(0.001), d: 0.001 },
            PolicyKind::AffUcb1 { eta: StepSize::Fixed(0.001), m: 10 },
            PolicyKind::AffUcb2 { eta: StepSize::InverseVariance { base: 1e-4 } },
            PolicyKind::AffTs { eta: StepSize::Fixed(0.001), alpha0: 2.0, beta0: 2.0 },
            PolicyKind::AffOts { eta: StepSize::Fixed(0.01), alpha0: 1.0, beta0: 3.0 },
            PolicyKind::AffDts2 {
                eta: StepSize::Fixed(0.001),
                alpha0: 2.0,
                beta0: 2.0,
                c_init: 100.0,
            },
        ];
        let policies: Vec<PolicyEntry> = picks
            .iter()
            .map(|&i| PolicyEntry::new(pool[i].clone()))
            .collect();
        let env = EnvSpec::ExponentialClock {
            arms: vec![
                ClockParams { theta: theta1, r_low: 0.0, r_high: 1.0 },
                ClockParams { theta: theta2, r_low: 0.3, r_high: 0.9 },
            ],
        };
        let mut config = ExperimentConfig::new(env, 2, policies);
        config.horizon = horizon;
        config.replications = replications;
        config.seed = seed;
        prop_assume!(config.validate().is_ok());

        // parsing dedupes repeated labels, so normalise once before asserting
        // the render/parse fixed point
        let normalised = parse_config(&render_config(&config)).unwrap();
        let text = render_config(&normalised);
        let parsed = parse_config(&text).unwrap();
        prop_assert_eq!(render_config(&parsed), text);
    }
}
