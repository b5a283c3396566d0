//! Replicated experiment execution: wiring environments to policies, regret
//! accounting, parameter sweeps, and cross-replication summaries.
//!
//! RNG contract: the master seed seeds one ChaCha generator per purpose via
//! distinct stream ids, so trajectories are shared across policies within a
//! replication while reward draws and decision randomness stay isolated per
//! policy. Replications run in parallel; aggregation is an ordered reduction
//! over replication index, so output is bit-stable for a fixed master seed.

use crate::aff::StepSize;
use crate::env::{count_switch_points, sample_reward, EnvError, EnvSpec, TrajectoryLog};
use crate::policies::{AutoParams, PolicyError, PolicyKind};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error("horizon {horizon} shorter than the longest burn-in {burn_in}")]
    HorizonTooShort { horizon: u64, burn_in: u64 },
    #[error("experiment needs at least one replication")]
    NoReplications,
    #[error("experiment needs at least one policy")]
    NoPolicies,
    #[error("sweep needs at least one value")]
    EmptySweep,
    #[error("sweep parameter {0} applies to no configured policy")]
    SweepNotApplicable(&'static str),
    #[error(transparent)]
    Env(#[from] EnvError),
    #[error(transparent)]
    Policy(#[from] PolicyError),
}

/// One policy entry of an experiment: the kind plus the label used in
/// outputs.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PolicyEntry {
    pub label: String,
    pub kind: PolicyKind,
}

impl PolicyEntry {
    pub fn new(kind: PolicyKind) -> Self {
        PolicyEntry {
            label: kind.name().to_string(),
            kind,
        }
    }

    pub fn labeled(label: impl Into<String>, kind: PolicyKind) -> Self {
        PolicyEntry {
            label: label.into(),
            kind,
        }
    }
}

/// Full description of one benchmark run.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExperimentConfig {
    pub env: EnvSpec,
    pub num_arms: usize,
    pub horizon: u64,
    pub replications: u32,
    pub seed: u64,
    pub policies: Vec<PolicyEntry>,
    /// Extra epsilon-Greedy grid evaluated by [`epsilon_grid_best`].
    pub epsilon_grid: Vec<f64>,
    /// Share one pregenerated reward matrix across policies (common random
    /// numbers) instead of per-policy reward streams.
    pub common_rewards: bool,
    /// Keep per-step records every k-th step (None disables step logging).
    pub step_log_every: Option<u64>,
}

impl ExperimentConfig {
    pub fn new(env: EnvSpec, num_arms: usize, policies: Vec<PolicyEntry>) -> Self {
        ExperimentConfig {
            env,
            num_arms,
            horizon: 10_000,
            replications: 100,
            seed: 0,
            policies,
            epsilon_grid: Vec::new(),
            common_rewards: false,
            step_log_every: None,
        }
    }

    pub fn validate(&self) -> Result<(), HarnessError> {
        if self.replications == 0 {
            return Err(HarnessError::NoReplications);
        }
        if self.policies.is_empty() {
            return Err(HarnessError::NoPolicies);
        }
        let burn_in = self
            .policies
            .iter()
            .map(|p| p.kind.burn_in(self.num_arms))
            .max()
            .unwrap_or(0);
        if self.horizon < burn_in {
            return Err(HarnessError::HorizonTooShort {
                horizon: self.horizon,
                burn_in,
            });
        }
        Ok(())
    }
}

/// One logged step of one policy in one replication.
#[derive(Debug, Clone, PartialEq)]
pub struct StepRecord {
    pub rep: u32,
    pub policy: String,
    pub t: u64,
    pub arm: usize,
    pub reward: f64,
    pub mu_chosen: f64,
    pub mu_opt: f64,
    pub regret_inst: f64,
    pub regret_cum: f64,
    pub correct: bool,
}

/// Per-policy outcome of a single replication.
pub struct PolicyRunResult {
    pub label: String,
    pub total_regret: f64,
    /// Cumulative regret after each step, length = horizon.
    pub cum_regret: Vec<f64>,
    /// 1 where the chosen arm was optimal.
    pub correct: Vec<u8>,
    pub steps: Vec<StepRecord>,
}

/// Cross-replication summary for one policy.
#[derive(Debug, Clone, PartialEq)]
pub struct SummaryStats {
    pub label: String,
    pub total_regrets: Vec<f64>,
    pub mean_total_regret: f64,
    pub min: f64,
    pub q1: f64,
    pub median: f64,
    pub q3: f64,
    pub max: f64,
    /// Mean cumulative regret per step, averaged over replications.
    pub mean_cum_regret: Vec<f64>,
    /// Percentage of replications that chose the optimal arm, per step.
    pub pct_correct: Vec<f64>,
}

pub struct ExperimentResult {
    pub summaries: Vec<SummaryStats>,
    pub steps: Vec<StepRecord>,
}

// Stream-id channels within one master seed.
const CHANNEL_TRAJECTORY: u64 = 0;
const CHANNEL_REWARD: u64 = 1;
const CHANNEL_DECISION: u64 = 2;
const CHANNEL_COMMON_REWARD: u64 = 3;

/// Deterministic per-(replication, purpose, policy) generator.
fn stream_rng(seed: u64, rep: u32, channel: u64, policy_idx: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(((rep as u64) << 20) | ((policy_idx as u64) << 4) | channel);
    rng
}

/// Run every configured policy over one shared trajectory.
pub fn run_replication(
    config: &ExperimentConfig,
    rep: u32,
) -> Result<Vec<PolicyRunResult>, HarnessError> {
    config.validate()?;
    let mut traj_rng = stream_rng(config.seed, rep, CHANNEL_TRAJECTORY, 0);
    let trajectory =
        TrajectoryLog::generate(&config.env, config.num_arms, config.horizon, &mut traj_rng)?;
    let auto = AutoParams::from_switch_points(count_switch_points(&trajectory), config.horizon);

    let common: Option<Vec<Vec<f64>>> = if config.common_rewards {
        let mut rng = stream_rng(config.seed, rep, CHANNEL_COMMON_REWARD, 0);
        Some(
            trajectory
                .mu
                .iter()
                .map(|row| {
                    row.iter()
                        .map(|&mu| sample_reward(mu, &mut rng).expect("trajectory in range"))
                        .collect()
                })
                .collect(),
        )
    } else {
        None
    };

    config
        .policies
        .iter()
        .enumerate()
        .map(|(idx, entry)| {
            run_policy(config, rep, idx, entry, &trajectory, &auto, common.as_deref())
        })
        .collect()
}

fn run_policy(
    config: &ExperimentConfig,
    rep: u32,
    idx: usize,
    entry: &PolicyEntry,
    trajectory: &TrajectoryLog,
    auto: &AutoParams,
    common: Option<&[Vec<f64>]>,
) -> Result<PolicyRunResult, HarnessError> {
    let mut policy = entry.kind.build(config.num_arms, auto)?;
    let mut decision_rng = stream_rng(config.seed, rep, CHANNEL_DECISION, idx);
    let mut reward_rng = stream_rng(config.seed, rep, CHANNEL_REWARD, idx);

    let horizon = config.horizon as usize;
    let mut cum_regret = Vec::with_capacity(horizon);
    let mut correct = Vec::with_capacity(horizon);
    let mut steps = Vec::new();
    let mut cum = 0.0;

    for t in 1..=config.horizon {
        let arm = policy.choose(t, &mut decision_rng);
        debug_assert!(arm < config.num_arms);
        let mu_chosen = trajectory.mu[(t - 1) as usize][arm];
        let y = match common {
            Some(matrix) => matrix[(t - 1) as usize][arm],
            None => sample_reward(mu_chosen, &mut reward_rng).expect("trajectory in range"),
        };
        policy.feed(arm, y, t);

        let mu_opt = trajectory.optimal_mean(t);
        let regret_inst = mu_opt - mu_chosen;
        cum += regret_inst;
        cum_regret.push(cum);
        let is_correct = arm == trajectory.optimal[(t - 1) as usize];
        correct.push(is_correct as u8);

        if let Some(k) = config.step_log_every {
            if k > 0 && t % k == 0 {
                steps.push(StepRecord {
                    rep,
                    policy: entry.label.clone(),
                    t,
                    arm,
                    reward: y,
                    mu_chosen,
                    mu_opt,
                    regret_inst,
                    regret_cum: cum,
                    correct: is_correct,
                });
            }
        }
    }

    Ok(PolicyRunResult {
        label: entry.label.clone(),
        total_regret: cum,
        cum_regret,
        correct,
        steps,
    })
}

/// Execute all replications (in parallel) and aggregate per-policy
/// summaries. Aggregation is ordered by replication index.
pub fn run_experiment(config: &ExperimentConfig) -> Result<ExperimentResult, HarnessError> {
    config.validate()?;
    let reps: Vec<Vec<PolicyRunResult>> = (0..config.replications)
        .into_par_iter()
        .map(|rep| run_replication(config, rep))
        .collect::<Result<_, _>>()?;
    Ok(aggregate(config, reps))
}

fn aggregate(config: &ExperimentConfig, reps: Vec<Vec<PolicyRunResult>>) -> ExperimentResult {
    let horizon = config.horizon as usize;
    let n_policies = config.policies.len();
    let n_reps = reps.len();

    let mut totals = vec![Vec::with_capacity(n_reps); n_policies];
    let mut cum_sum = vec![vec![0.0f64; horizon]; n_policies];
    let mut correct_sum = vec![vec![0u32; horizon]; n_policies];
    let mut steps = Vec::new();

    for rep_results in reps {
        for (p, result) in rep_results.into_iter().enumerate() {
            totals[p].push(result.total_regret);
            for (acc, v) in cum_sum[p].iter_mut().zip(&result.cum_regret) {
                *acc += v;
            }
            for (acc, &c) in correct_sum[p].iter_mut().zip(&result.correct) {
                *acc += c as u32;
            }
            steps.extend(result.steps);
        }
    }

    let summaries = config
        .policies
        .iter()
        .enumerate()
        .map(|(p, entry)| {
            let q = Quartiles::of(&totals[p]);
            SummaryStats {
                label: entry.label.clone(),
                mean_total_regret: totals[p].iter().sum::<f64>() / n_reps as f64,
                min: q.min,
                q1: q.q1,
                median: q.median,
                q3: q.q3,
                max: q.max,
                mean_cum_regret: cum_sum[p].iter().map(|s| s / n_reps as f64).collect(),
                pct_correct: correct_sum[p]
                    .iter()
                    .map(|&c| 100.0 * c as f64 / n_reps as f64)
                    .collect(),
                total_regrets: totals[p].clone(),
            }
        })
        .collect();

    ExperimentResult { summaries, steps }
}

/// Five-number summary with linearly interpolated quartiles.
pub struct Quartiles {
    pub min: f64,
    pub q1: f64,
    pub median: f64,
    pub q3: f64,
    pub max: f64,
}

impl Quartiles {
    pub fn of(values: &[f64]) -> Self {
        let mut sorted = values.to_vec();
        sorted.sort_by(|a, b| a.partial_cmp(b).expect("regrets are finite"));
        let quantile = |q: f64| -> f64 {
            if sorted.len() == 1 {
                return sorted[0];
            }
            let pos = q * (sorted.len() - 1) as f64;
            let lo = pos.floor() as usize;
            let hi = pos.ceil() as usize;
            sorted[lo] + (pos - lo as f64) * (sorted[hi] - sorted[lo])
        };
        Quartiles {
            min: sorted[0],
            q1: quantile(0.25),
            median: quantile(0.5),
            q3: quantile(0.75),
            max: sorted[sorted.len() - 1],
        }
    }
}

/// Run epsilon-Greedy once per grid value over the shared replication seeds
/// and return the value minimising mean total regret with its summary.
pub fn epsilon_grid_best(
    config: &ExperimentConfig,
    grid: &[f64],
) -> Result<(f64, SummaryStats), HarnessError> {
    if grid.is_empty() {
        return Err(HarnessError::EmptySweep);
    }
    let mut best: Option<(f64, SummaryStats)> = None;
    for &epsilon in grid {
        let mut cfg = config.clone();
        cfg.policies = vec![PolicyEntry::labeled(
            format!("eps-greedy(e={epsilon})"),
            PolicyKind::EpsGreedy { epsilon },
        )];
        cfg.step_log_every = None;
        let result = run_experiment(&cfg)?;
        let summary = result.summaries.into_iter().next().expect("one policy");
        let better = match &best {
            Some((_, s)) => summary.mean_total_regret < s.mean_total_regret,
            None => true,
        };
        if better {
            best = Some((epsilon, summary));
        }
    }
    Ok(best.expect("grid is nonempty"))
}

/// Which policy parameter a sensitivity sweep varies.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum SweepParameter {
    Eta,
    LambdaFixed,
    Window,
    DtsC,
}

impl SweepParameter {
    pub fn name(&self) -> &'static str {
        match self {
            SweepParameter::Eta => "eta",
            SweepParameter::LambdaFixed => "lambda_fixed",
            SweepParameter::Window => "window",
            SweepParameter::DtsC => "c",
        }
    }
}

/// One value of a sensitivity sweep.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum SweepValue {
    Number(f64),
    /// The step-size schedule `base / s2` (eta sweeps only).
    AdaptiveEta { base: f64 },
}

impl SweepValue {
    pub fn label(&self, parameter: SweepParameter) -> String {
        match self {
            SweepValue::Number(v) => format!("{}={v}", parameter.name()),
            SweepValue::AdaptiveEta { base } => format!("eta={base}/s2"),
        }
    }
}

/// A sweep request: vary one parameter over the given values.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepSpec {
    pub parameter: SweepParameter,
    pub values: Vec<SweepValue>,
}

/// Re-run the experiment once per sweep value, rewriting the parameter on
/// every policy it applies to. Seeds are shared across values.
pub fn sensitivity_sweep(
    config: &ExperimentConfig,
    sweep: &SweepSpec,
) -> Result<Vec<(SweepValue, Vec<SummaryStats>)>, HarnessError> {
    if sweep.values.is_empty() {
        return Err(HarnessError::EmptySweep);
    }
    let applicable = config
        .policies
        .iter()
        .any(|p| apply_sweep(&p.kind, sweep.parameter, SweepValue::Number(0.5)).is_some());
    if !applicable {
        return Err(HarnessError::SweepNotApplicable(sweep.parameter.name()));
    }

    let mut out = Vec::with_capacity(sweep.values.len());
    for &value in &sweep.values {
        let mut cfg = config.clone();
        cfg.policies = config
            .policies
            .iter()
            .map(|entry| match apply_sweep(&entry.kind, sweep.parameter, value) {
                Some(kind) => PolicyEntry::labeled(
                    format!("{}[{}]", entry.label, value.label(sweep.parameter)),
                    kind,
                ),
                None => entry.clone(),
            })
            .collect();
        let result = run_experiment(&cfg)?;
        out.push((value, result.summaries));
    }
    Ok(out)
}

fn sweep_step_size(value: SweepValue) -> StepSize {
    match value {
        SweepValue::Number(v) => StepSize::Fixed(v),
        SweepValue::AdaptiveEta { base } => StepSize::InverseVariance { base },
    }
}

/// New kind with the swept parameter substituted, or None when the
/// parameter does not apply to this policy.
fn apply_sweep(kind: &PolicyKind, parameter: SweepParameter, value: SweepValue) -> Option<PolicyKind> {
    let num = match value {
        SweepValue::Number(v) => v,
        SweepValue::AdaptiveEta { base } => base,
    };
    match (parameter, kind.clone()) {
        (SweepParameter::Eta, PolicyKind::AffDGreedy { d, .. }) => Some(PolicyKind::AffDGreedy {
            eta: sweep_step_size(value),
            d,
        }),
        (SweepParameter::Eta, PolicyKind::AffUcb1 { m, .. }) => Some(PolicyKind::AffUcb1 {
            eta: sweep_step_size(value),
            m,
        }),
        (SweepParameter::Eta, PolicyKind::AffUcb2 { .. }) => Some(PolicyKind::AffUcb2 {
            eta: sweep_step_size(value),
        }),
        (SweepParameter::Eta, PolicyKind::AffTs { alpha0, beta0, .. }) => Some(PolicyKind::AffTs {
            eta: sweep_step_size(value),
            alpha0,
            beta0,
        }),
        (SweepParameter::Eta, PolicyKind::AffOts { alpha0, beta0, .. }) => {
            Some(PolicyKind::AffOts {
                eta: sweep_step_size(value),
                alpha0,
                beta0,
            })
        }
        (
            SweepParameter::Eta,
            PolicyKind::AffDts1 {
                alpha0,
                beta0,
                c_init,
                ..
            },
        ) => Some(PolicyKind::AffDts1 {
            eta: sweep_step_size(value),
            alpha0,
            beta0,
            c_init,
        }),
        (
            SweepParameter::Eta,
            PolicyKind::AffDts2 {
                alpha0,
                beta0,
                c_init,
                ..
            },
        ) => Some(PolicyKind::AffDts2 {
            eta: sweep_step_size(value),
            alpha0,
            beta0,
            c_init,
        }),
        (SweepParameter::LambdaFixed, PolicyKind::DUcb { xi, scale, .. }) => {
            Some(PolicyKind::DUcb {
                lambda: Some(num),
                xi,
                scale,
            })
        }
        (SweepParameter::Window, PolicyKind::SwUcb { xi, .. }) => Some(PolicyKind::SwUcb {
            window: Some(num.round() as u64),
            xi,
        }),
        (SweepParameter::DtsC, PolicyKind::Dts { alpha0, beta0, .. }) => Some(PolicyKind::Dts {
            alpha0,
            beta0,
            c: num,
        }),
        (
            SweepParameter::DtsC,
            PolicyKind::AffDts1 {
                eta, alpha0, beta0, ..
            },
        ) => Some(PolicyKind::AffDts1 {
            eta,
            alpha0,
            beta0,
            c_init: num,
        }),
        (
            SweepParameter::DtsC,
            PolicyKind::AffDts2 {
                eta, alpha0, beta0, ..
            },
        ) => Some(PolicyKind::AffDts2 {
            eta,
            alpha0,
            beta0,
            c_init: num,
        }),
        _ => None,
    }
}

/// Build a thread pool honoring the `DRIFTBANDIT_THREADS` cap and run `f`
/// inside it. With the variable unset, rayon's default pool is used.
pub fn with_thread_cap<T: Send>(f: impl FnOnce() -> T + Send) -> T {
    match std::env::var("DRIFTBANDIT_THREADS")
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
    {
        Some(n) if n > 0 => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .expect("thread pool")
            .install(f),
        _ => f(),
    }
}
