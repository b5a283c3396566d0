//! Per-arm expected-reward trajectory generators and the Bernoulli reward
//! sampler.
//!
//! Four dynamic models plus static means. Trajectories are generated once per
//! replication and shared read-only by every policy in that replication.

use rand::Rng;
use rand_distr::{Distribution, Normal};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum EnvError {
    #[error("expected reward {0} outside [0, 1]")]
    MeanOutOfRange(f64),
    #[error("model defines {model} arms but {requested} were requested")]
    ArmCountMismatch { model: usize, requested: usize },
    #[error("environment needs at least one arm parameter set")]
    NoArms,
}

/// Exponential-clock parameters for one arm: change rate and the uniform
/// range the new expected reward is drawn from.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ClockParams {
    pub theta: f64,
    pub r_low: f64,
    pub r_high: f64,
}

/// Description of how each arm's expected reward evolves.
///
/// Parameter lists shorter than the arm count are applied cyclically, so the
/// two-arm cases scale to 50 or 100 arms without restating parameters.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub enum EnvSpec {
    /// Constant expected rewards.
    Fixed { means: Vec<f64> },
    /// Three arms; arms 1 and 2 hold at 0.5 and 0.3, arm 3 jumps from 0.4
    /// to 0.8 at t = 3000 and back to 0.4 at t = 5000.
    SmallChange,
    /// Piecewise-constant rewards with change instants driven by a
    /// per-arm exponential clock.
    ExponentialClock { arms: Vec<ClockParams> },
    /// Gaussian random walk with reflecting bounds at 0 and 1.
    ReflectingWalk { sigma2: Vec<f64> },
    /// Gaussian random walk passed through the logistic function.
    LogisticWalk { sigma2: Vec<f64> },
}

impl EnvSpec {
    /// Natural arm count of the spec, before cyclic extension.
    pub fn base_arms(&self) -> usize {
        match self {
            EnvSpec::Fixed { means } => means.len(),
            EnvSpec::SmallChange => 3,
            EnvSpec::ExponentialClock { arms } => arms.len(),
            EnvSpec::ReflectingWalk { sigma2 } | EnvSpec::LogisticWalk { sigma2 } => sigma2.len(),
        }
    }
}

/// Reflects a real onto [0, 1]: `x' = |x| mod 2`, then fold the upper half
/// of [0, 2] back down.
pub fn reflect(x: f64) -> f64 {
    let xp = x.abs() % 2.0;
    if xp <= 1.0 {
        xp
    } else {
        2.0 - xp
    }
}

/// One Bernoulli reward draw.
pub fn sample_reward<R: Rng + ?Sized>(mu: f64, rng: &mut R) -> Result<f64, EnvError> {
    if !(0.0..=1.0).contains(&mu) {
        return Err(EnvError::MeanOutOfRange(mu));
    }
    Ok(if rng.random::<f64>() < mu { 1.0 } else { 0.0 })
}

enum ArmState {
    Fixed {
        mean: f64,
    },
    SmallChangeArm {
        index: usize,
    },
    Clock {
        params: ClockParams,
        mu: f64,
        change_prob: f64,
    },
    Reflecting {
        noise: Normal<f64>,
        mu: f64,
    },
    Logistic {
        noise: Normal<f64>,
        z: f64,
    },
}

/// Instantiated environment: per-arm latent state, advanced one global step
/// at a time.
pub struct EnvState {
    arms: Vec<ArmState>,
}

impl EnvState {
    /// Initialise per-arm state, drawing starting points from `rng`.
    /// `num_arms` may exceed the spec's parameter lists; parameters repeat
    /// cyclically. `SmallChange` and `Fixed` require an exact match.
    pub fn init<R: Rng + ?Sized>(
        spec: &EnvSpec,
        num_arms: usize,
        rng: &mut R,
    ) -> Result<Self, EnvError> {
        if spec.base_arms() == 0 {
            return Err(EnvError::NoArms);
        }
        let exact = matches!(spec, EnvSpec::Fixed { .. } | EnvSpec::SmallChange);
        if exact && spec.base_arms() != num_arms {
            return Err(EnvError::ArmCountMismatch {
                model: spec.base_arms(),
                requested: num_arms,
            });
        }
        let arms = (0..num_arms)
            .map(|a| match spec {
                EnvSpec::Fixed { means } => {
                    if !(0.0..=1.0).contains(&means[a]) {
                        return Err(EnvError::MeanOutOfRange(means[a]));
                    }
                    Ok(ArmState::Fixed { mean: means[a] })
                }
                EnvSpec::SmallChange => Ok(ArmState::SmallChangeArm { index: a }),
                EnvSpec::ExponentialClock { arms } => {
                    let params = arms[a % arms.len()];
                    let mu = rng.random_range(params.r_low..params.r_high);
                    Ok(ArmState::Clock {
                        params,
                        mu,
                        change_prob: 1.0 - (-params.theta).exp(),
                    })
                }
                EnvSpec::ReflectingWalk { sigma2 } => {
                    let s2 = sigma2[a % sigma2.len()];
                    Ok(ArmState::Reflecting {
                        noise: Normal::new(0.0, s2.sqrt()).expect("sigma2 must be finite"),
                        mu: rng.random_range(0.0..1.0),
                    })
                }
                EnvSpec::LogisticWalk { sigma2 } => {
                    let s2 = sigma2[a % sigma2.len()];
                    Ok(ArmState::Logistic {
                        noise: Normal::new(0.0, s2.sqrt()).expect("sigma2 must be finite"),
                        z: rng.random_range(0.0..1.0),
                    })
                }
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(EnvState { arms })
    }

    pub fn num_arms(&self) -> usize {
        self.arms.len()
    }

    /// Advance one arm to global step `t` (1-based) and return its expected
    /// reward.
    pub fn step_mean<R: Rng + ?Sized>(&mut self, arm: usize, t: u64, rng: &mut R) -> f64 {
        match &mut self.arms[arm] {
            ArmState::Fixed { mean } => *mean,
            ArmState::SmallChangeArm { index } => match index {
                0 => 0.5,
                1 => 0.3,
                // the new value applies from the change instant inclusive
                _ => {
                    if (3000..5000).contains(&t) {
                        0.8
                    } else {
                        0.4
                    }
                }
            },
            ArmState::Clock {
                params,
                mu,
                change_prob,
            } => {
                if rng.random::<f64>() < *change_prob {
                    *mu = rng.random_range(params.r_low..params.r_high);
                }
                *mu
            }
            ArmState::Reflecting { noise, mu } => {
                *mu = reflect(*mu + noise.sample(rng));
                *mu
            }
            ArmState::Logistic { noise, z } => {
                *z += noise.sample(rng);
                1.0 / (1.0 + (-*z).exp())
            }
        }
    }
}

/// Full expected-reward trajectory for one replication.
#[derive(Debug, Clone, PartialEq)]
pub struct TrajectoryLog {
    /// `mu[t - 1][arm]` for t = 1..=horizon.
    pub mu: Vec<Vec<f64>>,
    /// Index of the optimal arm per step (first index on ties).
    pub optimal: Vec<usize>,
}

impl TrajectoryLog {
    /// Generate a trajectory of `horizon` steps by advancing every arm once
    /// per step, arms in index order.
    pub fn generate<R: Rng + ?Sized>(
        spec: &EnvSpec,
        num_arms: usize,
        horizon: u64,
        rng: &mut R,
    ) -> Result<Self, EnvError> {
        let mut state = EnvState::init(spec, num_arms, rng)?;
        let mut mu = Vec::with_capacity(horizon as usize);
        let mut optimal = Vec::with_capacity(horizon as usize);
        for t in 1..=horizon {
            let row: Vec<f64> = (0..num_arms).map(|a| state.step_mean(a, t, rng)).collect();
            optimal.push(argmax_first(&row));
            mu.push(row);
        }
        Ok(TrajectoryLog { mu, optimal })
    }

    pub fn horizon(&self) -> u64 {
        self.mu.len() as u64
    }

    pub fn optimal_mean(&self, t: u64) -> f64 {
        self.mu[(t - 1) as usize][self.optimal[(t - 1) as usize]]
    }
}

/// Number of steps at which the optimal arm differs from the previous step.
pub fn count_switch_points(log: &TrajectoryLog) -> u64 {
    log.optimal.windows(2).filter(|w| w[0] != w[1]).count() as u64
}

fn argmax_first(row: &[f64]) -> usize {
    let mut best = 0;
    for (i, &v) in row.iter().enumerate().skip(1) {
        if v > row[best] {
            best = i;
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn rng(seed: u64) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(seed)
    }

    #[test]
    fn reflect_examples() {
        assert_eq!(reflect(0.5), 0.5);
        assert!((reflect(1.2) - 0.8).abs() < 1e-12);
        assert!((reflect(-2.7) - 0.7).abs() < 1e-12);
    }

    #[test]
    fn reflect_idempotent_on_unit_interval() {
        for i in 0..=100 {
            let x = i as f64 / 100.0;
            assert_eq!(reflect(x), x);
        }
        for &x in &[-3.7, -1.0, 1.5, 2.0, 7.25] {
            assert_eq!(reflect(reflect(x)), reflect(x));
        }
    }

    #[test]
    fn sample_reward_extremes() {
        let mut r = rng(1);
        for _ in 0..100 {
            assert_eq!(sample_reward(0.0, &mut r).unwrap(), 0.0);
            assert_eq!(sample_reward(1.0, &mut r).unwrap(), 1.0);
        }
        assert!(sample_reward(1.1, &mut r).is_err());
        assert!(sample_reward(-0.1, &mut r).is_err());
    }

    #[test]
    fn sample_reward_law_of_large_numbers() {
        let mut r = rng(2);
        let n = 100_000;
        let sum: f64 = (0..n)
            .map(|_| sample_reward(0.3, &mut r).unwrap())
            .sum();
        assert!((sum / n as f64 - 0.3).abs() < 0.005);
    }

    #[test]
    fn small_change_breakpoints() {
        let mut r = rng(3);
        let log = TrajectoryLog::generate(&EnvSpec::SmallChange, 3, 10_000, &mut r).unwrap();
        assert_eq!(log.mu[0], vec![0.5, 0.3, 0.4]);
        assert_eq!(log.mu[2998][2], 0.4);
        assert_eq!(log.mu[2999][2], 0.8); // t = 3000
        assert_eq!(log.mu[4998][2], 0.8);
        assert_eq!(log.mu[4999][2], 0.4); // t = 5000
        assert_eq!(count_switch_points(&log), 2);
    }

    #[test]
    fn fixed_means_have_no_switches() {
        let mut r = rng(4);
        let spec = EnvSpec::Fixed {
            means: vec![0.9, 0.1],
        };
        let log = TrajectoryLog::generate(&spec, 2, 500, &mut r).unwrap();
        assert_eq!(count_switch_points(&log), 0);
        assert!(log.mu.iter().all(|row| row == &vec![0.9, 0.1]));
    }

    #[test]
    fn zero_rate_clock_is_constant() {
        let mut r = rng(5);
        let spec = EnvSpec::ExponentialClock {
            arms: vec![ClockParams {
                theta: 0.0,
                r_low: 0.0,
                r_high: 1.0,
            }],
        };
        let log = TrajectoryLog::generate(&spec, 1, 1000, &mut r).unwrap();
        let first = log.mu[0][0];
        assert!(log.mu.iter().all(|row| row[0] == first));
    }

    #[test]
    fn switch_count_matches_brute_scan() {
        let mut r = rng(6);
        let spec = EnvSpec::ExponentialClock {
            arms: vec![
                ClockParams {
                    theta: 0.01,
                    r_low: 0.0,
                    r_high: 1.0,
                },
                ClockParams {
                    theta: 0.02,
                    r_low: 0.0,
                    r_high: 1.0,
                },
            ],
        };
        let log = TrajectoryLog::generate(&spec, 2, 5000, &mut r).unwrap();
        let argmax: Vec<usize> = log
            .mu
            .iter()
            .map(|row| if row[1] > row[0] { 1 } else { 0 })
            .collect();
        let brute = argmax
            .iter()
            .zip(argmax.iter().skip(1))
            .filter(|(a, b)| a != b)
            .count() as u64;
        assert_eq!(count_switch_points(&log), brute);
    }

    #[test]
    fn trajectories_stay_in_unit_interval() {
        let mut r = rng(7);
        let specs = vec![
            EnvSpec::ReflectingWalk {
                sigma2: vec![0.0001, 0.001],
            },
            EnvSpec::LogisticWalk {
                sigma2: vec![0.001],
            },
            EnvSpec::ExponentialClock {
                arms: vec![ClockParams {
                    theta: 0.01,
                    r_low: 0.3,
                    r_high: 1.0,
                }],
            },
        ];
        for spec in specs {
            let log = TrajectoryLog::generate(&spec, 2, 20_000, &mut r).unwrap();
            for row in &log.mu {
                for &m in row {
                    assert!((0.0..=1.0).contains(&m), "mu {m} out of range");
                }
            }
            if matches!(spec, EnvSpec::LogisticWalk { .. }) {
                assert!(log.mu.iter().flatten().all(|&m| m > 0.0 && m < 1.0));
            }
        }
    }

    #[test]
    fn cyclic_parameter_assignment() {
        let mut r = rng(8);
        let spec = EnvSpec::ExponentialClock {
            arms: vec![
                ClockParams {
                    theta: 0.001,
                    r_low: 0.3,
                    r_high: 1.0,
                },
                ClockParams {
                    theta: 0.010,
                    r_low: 0.0,
                    r_high: 0.7,
                },
            ],
        };
        let log = TrajectoryLog::generate(&spec, 5, 100, &mut r).unwrap();
        // odd arms carry the second parameter set, bounded by 0.7
        for row in &log.mu {
            assert!(row[1] <= 0.7 && row[3] <= 0.7);
        }
    }

    #[test]
    fn arm_count_mismatch_rejected() {
        let mut r = rng(9);
        assert!(matches!(
            EnvState::init(&EnvSpec::SmallChange, 2, &mut r),
            Err(EnvError::ArmCountMismatch { .. })
        ));
    }
}
