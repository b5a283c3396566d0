//! Experiment configuration: a flat key-value file format with repeated
//! policy blocks, plus canned presets for the benchmark scenarios.
//!
//! Format example:
//!
//! ```text
//! env.model = exp-clock
//! env.theta = 0.001, 0.010
//! env.r_low = 0, 0
//! env.r_high = 1, 1
//! horizon = 10000
//! replications = 100
//! seed = 42
//!
//! policy.name = aff-ts
//! policy.eta = 0.001
//!
//! policy.name = sw-ucb
//! policy.window = auto
//! ```
//!
//! `policy.name` starts a new block; every other `policy.*` key attaches to
//! the most recent block. Unset parameters take the documented defaults.

use crate::aff::StepSize;
use crate::env::EnvSpec;
use crate::env::ClockParams;
use crate::harness::{ExperimentConfig, PolicyEntry};
use crate::policies::{AutoParams, PolicyKind};
use std::collections::HashMap;
use std::fmt::Write as _;
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum ConfigError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("missing required key `{0}`")]
    Missing(String),
    #[error("unknown preset `{0}`")]
    UnknownPreset(String),
    #[error("preset `{preset}`: {message}")]
    PresetArgs { preset: String, message: String },
}

fn err(line: usize, message: impl Into<String>) -> ConfigError {
    ConfigError::Parse {
        line,
        message: message.into(),
    }
}

/// Default AFF gradient step size.
pub const DEFAULT_ETA: f64 = 0.001;
/// Default Beta prior hyperparameters.
pub const DEFAULT_ALPHA0: f64 = 2.0;
pub const DEFAULT_BETA0: f64 = 2.0;
/// Default burn-in rounds for the variance-based bonus policy.
pub const DEFAULT_M: u64 = 10;
/// Default posterior-mass threshold for DTS-style policies.
pub const DEFAULT_C: f64 = 100.0;
/// Default exploration constants for the discounted/windowed baselines.
pub const DEFAULT_XI: f64 = 0.5;
pub const DEFAULT_SCALE: f64 = 2.0;
/// Default exploration probability for epsilon-Greedy.
pub const DEFAULT_EPSILON: f64 = 0.1;

struct RawValue {
    line: usize,
    text: String,
}

struct RawPolicy {
    line: usize,
    name: String,
    params: HashMap<String, RawValue>,
}

/// Parse a configuration document into a validated [`ExperimentConfig`]
/// with defaults applied.
pub fn parse_config(text: &str) -> Result<ExperimentConfig, ConfigError> {
    let mut top: HashMap<String, RawValue> = HashMap::new();
    let mut policies: Vec<RawPolicy> = Vec::new();

    for (idx, raw_line) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw_line.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let (key, value) = content
            .split_once('=')
            .ok_or_else(|| err(line, format!("expected `key = value`, got `{content}`")))?;
        let key = key.trim().to_string();
        let value = RawValue {
            line,
            text: value.trim().to_string(),
        };
        if key == "policy.name" {
            policies.push(RawPolicy {
                line,
                name: value.text,
                params: HashMap::new(),
            });
        } else if let Some(param) = key.strip_prefix("policy.") {
            let block = policies
                .last_mut()
                .ok_or_else(|| err(line, format!("`{key}` before any `policy.name`")))?;
            if block.params.insert(param.to_string(), value).is_some() {
                return Err(err(line, format!("duplicate key `{key}` in policy block")));
            }
        } else {
            if top.contains_key(&key) {
                return Err(err(line, format!("duplicate key `{key}`")));
            }
            top.insert(key, value);
        }
    }

    let env = parse_env(&mut top)?;
    let num_arms = match top.remove("arms") {
        Some(v) => parse_num::<usize>(&v, "arms")?,
        None => env.base_arms(),
    };

    let mut config = ExperimentConfig::new(env, num_arms, Vec::new());
    if let Some(v) = top.remove("horizon") {
        config.horizon = parse_num(&v, "horizon")?;
    }
    if let Some(v) = top.remove("replications") {
        config.replications = parse_num(&v, "replications")?;
    }
    if let Some(v) = top.remove("seed") {
        config.seed = parse_num(&v, "seed")?;
    }
    if let Some(v) = top.remove("step_log_every") {
        config.step_log_every = Some(parse_num(&v, "step_log_every")?);
    }
    if let Some(v) = top.remove("common_rewards") {
        config.common_rewards = match v.text.as_str() {
            "true" => true,
            "false" => false,
            other => {
                return Err(err(
                    v.line,
                    format!("common_rewards must be true/false, got `{other}`"),
                ))
            }
        };
    }
    if let Some(v) = top.remove("epsilon_grid") {
        config.epsilon_grid = parse_list(&v, "epsilon_grid")?;
    }
    if let Some((key, v)) = top.into_iter().next() {
        return Err(err(v.line, format!("unknown key `{key}`")));
    }

    if policies.is_empty() {
        return Err(ConfigError::Missing("policy.name".into()));
    }
    for raw in policies {
        let entry = parse_policy(raw, num_arms)?;
        config.policies.push(entry);
    }
    dedupe_labels(&mut config.policies);
    config
        .validate()
        .map_err(|e| err(0, e.to_string()))?;
    Ok(config)
}

fn parse_env(top: &mut HashMap<String, RawValue>) -> Result<EnvSpec, ConfigError> {
    let model = top
        .remove("env.model")
        .ok_or_else(|| ConfigError::Missing("env.model".into()))?;
    let take_list = |top: &mut HashMap<String, RawValue>, key: &str| -> Result<Vec<f64>, ConfigError> {
        let v = top
            .remove(key)
            .ok_or_else(|| ConfigError::Missing(key.into()))?;
        parse_list(&v, key)
    };
    match model.text.as_str() {
        "fixed" => Ok(EnvSpec::Fixed {
            means: take_list(top, "env.means")?,
        }),
        "small-change" => Ok(EnvSpec::SmallChange),
        "exp-clock" => {
            let theta = take_list(top, "env.theta")?;
            let r_low = take_list(top, "env.r_low")?;
            let r_high = take_list(top, "env.r_high")?;
            if theta.len() != r_low.len() || theta.len() != r_high.len() {
                return Err(err(
                    model.line,
                    "env.theta, env.r_low, env.r_high must have equal lengths",
                ));
            }
            Ok(EnvSpec::ExponentialClock {
                arms: theta
                    .into_iter()
                    .zip(r_low)
                    .zip(r_high)
                    .map(|((theta, r_low), r_high)| ClockParams {
                        theta,
                        r_low,
                        r_high,
                    })
                    .collect(),
            })
        }
        "reflecting-walk" => Ok(EnvSpec::ReflectingWalk {
            sigma2: take_list(top, "env.sigma2")?,
        }),
        "logistic-walk" => Ok(EnvSpec::LogisticWalk {
            sigma2: take_list(top, "env.sigma2")?,
        }),
        other => Err(err(model.line, format!("unknown env.model `{other}`"))),
    }
}

fn parse_num<T: std::str::FromStr>(v: &RawValue, key: &str) -> Result<T, ConfigError> {
    v.text
        .parse()
        .map_err(|_| err(v.line, format!("invalid value `{}` for `{key}`", v.text)))
}

fn parse_list(v: &RawValue, key: &str) -> Result<Vec<f64>, ConfigError> {
    v.text
        .split(',')
        .map(|s| {
            s.trim()
                .parse()
                .map_err(|_| err(v.line, format!("invalid number `{}` in `{key}`", s.trim())))
        })
        .collect()
}

fn parse_policy(mut raw: RawPolicy, num_arms: usize) -> Result<PolicyEntry, ConfigError> {
    let block_line = raw.line;
    let num = |raw: &mut RawPolicy, key: &str, default: f64| -> Result<f64, ConfigError> {
        match raw.params.remove(key) {
            Some(v) => parse_num(&v, key),
            None => Ok(default),
        }
    };
    let eta = |raw: &mut RawPolicy| -> Result<StepSize, ConfigError> {
        match raw.params.remove("eta") {
            Some(v) => match v.text.strip_prefix("inv_var:") {
                Some(base) => base
                    .trim()
                    .parse()
                    .map(|base| StepSize::InverseVariance { base })
                    .map_err(|_| err(v.line, format!("invalid inv_var base `{}`", v.text))),
                None => parse_num(&v, "eta").map(StepSize::Fixed),
            },
            None => Ok(StepSize::Fixed(DEFAULT_ETA)),
        }
    };

    let kind = match raw.name.as_str() {
        "eps-greedy" => PolicyKind::EpsGreedy {
            epsilon: num(&mut raw, "epsilon", DEFAULT_EPSILON)?,
        },
        "ucb" => PolicyKind::Ucb,
        "ts" => PolicyKind::Ts {
            alpha0: num(&mut raw, "alpha0", DEFAULT_ALPHA0)?,
            beta0: num(&mut raw, "beta0", DEFAULT_BETA0)?,
        },
        "ots" => PolicyKind::Ots {
            alpha0: num(&mut raw, "alpha0", DEFAULT_ALPHA0)?,
            beta0: num(&mut raw, "beta0", DEFAULT_BETA0)?,
        },
        "dts" => PolicyKind::Dts {
            alpha0: num(&mut raw, "alpha0", DEFAULT_ALPHA0)?,
            beta0: num(&mut raw, "beta0", DEFAULT_BETA0)?,
            c: num(&mut raw, "c", DEFAULT_C)?,
        },
        "d-ucb" => PolicyKind::DUcb {
            lambda: match raw.params.remove("lambda") {
                None => None,
                Some(v) if v.text == "auto" => None,
                Some(v) => Some(parse_num(&v, "lambda")?),
            },
            xi: num(&mut raw, "xi", DEFAULT_XI)?,
            scale: num(&mut raw, "scale", DEFAULT_SCALE)?,
        },
        "sw-ucb" => PolicyKind::SwUcb {
            window: match raw.params.remove("window") {
                None => None,
                Some(v) if v.text == "auto" => None,
                Some(v) => Some(parse_num(&v, "window")?),
            },
            xi: num(&mut raw, "xi", DEFAULT_XI)?,
        },
        "aff-d-greedy" => {
            let eta = eta(&mut raw)?;
            PolicyKind::AffDGreedy {
                d: num(&mut raw, "d", eta.base())?,
                eta,
            }
        }
        "aff-ucb1" => PolicyKind::AffUcb1 {
            eta: eta(&mut raw)?,
            m: num(&mut raw, "m", DEFAULT_M as f64)? as u64,
        },
        "aff-ucb2" => PolicyKind::AffUcb2 {
            eta: eta(&mut raw)?,
        },
        "aff-ts" => PolicyKind::AffTs {
            eta: eta(&mut raw)?,
            alpha0: num(&mut raw, "alpha0", DEFAULT_ALPHA0)?,
            beta0: num(&mut raw, "beta0", DEFAULT_BETA0)?,
        },
        "aff-ots" => PolicyKind::AffOts {
            eta: eta(&mut raw)?,
            alpha0: num(&mut raw, "alpha0", DEFAULT_ALPHA0)?,
            beta0: num(&mut raw, "beta0", DEFAULT_BETA0)?,
        },
        "aff-dts1" => PolicyKind::AffDts1 {
            eta: eta(&mut raw)?,
            alpha0: num(&mut raw, "alpha0", DEFAULT_ALPHA0)?,
            beta0: num(&mut raw, "beta0", DEFAULT_BETA0)?,
            c_init: num(&mut raw, "c", DEFAULT_C)?,
        },
        "aff-dts2" => PolicyKind::AffDts2 {
            eta: eta(&mut raw)?,
            alpha0: num(&mut raw, "alpha0", DEFAULT_ALPHA0)?,
            beta0: num(&mut raw, "beta0", DEFAULT_BETA0)?,
            c_init: num(&mut raw, "c", DEFAULT_C)?,
        },
        "fixed" => PolicyKind::FixedArm {
            arm: num(&mut raw, "arm", 0.0)? as usize,
        },
        other => {
            return Err(err(block_line, format!("unknown policy name `{other}`")));
        }
    };

    let label = match raw.params.remove("label") {
        Some(v) => v.text,
        None => kind.name().to_string(),
    };
    if let Some((key, v)) = raw.params.into_iter().next() {
        return Err(err(
            v.line,
            format!("unknown parameter `policy.{key}` for policy `{}`", raw.name),
        ));
    }
    // surface range errors with the block's location
    kind.build(num_arms.max(1), &AutoParams::default())
        .map_err(|e| err(block_line, e.to_string()))?;
    Ok(PolicyEntry::labeled(label, kind))
}

/// Make duplicate labels unique by suffixing `-2`, `-3`, ...
fn dedupe_labels(policies: &mut [PolicyEntry]) {
    let mut seen: HashMap<String, usize> = HashMap::new();
    for entry in policies.iter_mut() {
        let count = seen.entry(entry.label.clone()).or_insert(0);
        *count += 1;
        if *count > 1 {
            entry.label = format!("{}-{}", entry.label, count);
        }
    }
}

/// Render a config back into the key-value format; `parse_config` on the
/// result reproduces an equivalent config.
pub fn render_config(config: &ExperimentConfig) -> String {
    let mut out = String::new();
    let join = |xs: &[f64]| {
        xs.iter()
            .map(|x| format!("{x:?}"))
            .collect::<Vec<_>>()
            .join(", ")
    };
    match &config.env {
        EnvSpec::Fixed { means } => {
            out.push_str("env.model = fixed\n");
            let _ = writeln!(out, "env.means = {}", join(means));
        }
        EnvSpec::SmallChange => out.push_str("env.model = small-change\n"),
        EnvSpec::ExponentialClock { arms } => {
            out.push_str("env.model = exp-clock\n");
            let theta: Vec<f64> = arms.iter().map(|a| a.theta).collect();
            let r_low: Vec<f64> = arms.iter().map(|a| a.r_low).collect();
            let r_high: Vec<f64> = arms.iter().map(|a| a.r_high).collect();
            let _ = writeln!(out, "env.theta = {}", join(&theta));
            let _ = writeln!(out, "env.r_low = {}", join(&r_low));
            let _ = writeln!(out, "env.r_high = {}", join(&r_high));
        }
        EnvSpec::ReflectingWalk { sigma2 } => {
            out.push_str("env.model = reflecting-walk\n");
            let _ = writeln!(out, "env.sigma2 = {}", join(sigma2));
        }
        EnvSpec::LogisticWalk { sigma2 } => {
            out.push_str("env.model = logistic-walk\n");
            let _ = writeln!(out, "env.sigma2 = {}", join(sigma2));
        }
    }
    let _ = writeln!(out, "arms = {}", config.num_arms);
    let _ = writeln!(out, "horizon = {}", config.horizon);
    let _ = writeln!(out, "replications = {}", config.replications);
    let _ = writeln!(out, "seed = {}", config.seed);
    if let Some(k) = config.step_log_every {
        let _ = writeln!(out, "step_log_every = {k}");
    }
    if config.common_rewards {
        out.push_str("common_rewards = true\n");
    }
    if !config.epsilon_grid.is_empty() {
        let _ = writeln!(out, "epsilon_grid = {}", join(&config.epsilon_grid));
    }
    for entry in &config.policies {
        out.push('\n');
        let _ = writeln!(out, "policy.name = {}", entry.kind.name());
        let _ = writeln!(out, "policy.label = {}", entry.label);
        let step = |out: &mut String, eta: &StepSize| {
            let _ = match eta {
                StepSize::Fixed(v) => writeln!(out, "policy.eta = {v:?}"),
                StepSize::InverseVariance { base } => writeln!(out, "policy.eta = inv_var:{base:?}"),
            };
        };
        let beta_prior = |out: &mut String, alpha0: f64, beta0: f64| {
            let _ = writeln!(out, "policy.alpha0 = {alpha0:?}");
            let _ = writeln!(out, "policy.beta0 = {beta0:?}");
        };
        match &entry.kind {
            PolicyKind::EpsGreedy { epsilon } => {
                let _ = writeln!(out, "policy.epsilon = {epsilon:?}");
            }
            PolicyKind::Ucb => {}
            PolicyKind::Ts { alpha0, beta0 } | PolicyKind::Ots { alpha0, beta0 } => {
                beta_prior(&mut out, *alpha0, *beta0);
            }
            PolicyKind::Dts { alpha0, beta0, c } => {
                beta_prior(&mut out, *alpha0, *beta0);
                let _ = writeln!(out, "policy.c = {c:?}");
            }
            PolicyKind::DUcb { lambda, xi, scale } => {
                let _ = match lambda {
                    Some(l) => writeln!(out, "policy.lambda = {l:?}"),
                    None => writeln!(out, "policy.lambda = auto"),
                };
                let _ = writeln!(out, "policy.xi = {xi:?}");
                let _ = writeln!(out, "policy.scale = {scale:?}");
            }
            PolicyKind::SwUcb { window, xi } => {
                let _ = match window {
                    Some(w) => writeln!(out, "policy.window = {w}"),
                    None => writeln!(out, "policy.window = auto"),
                };
                let _ = writeln!(out, "policy.xi = {xi:?}");
            }
            PolicyKind::AffDGreedy { eta, d } => {
                step(&mut out, eta);
                let _ = writeln!(out, "policy.d = {d:?}");
            }
            PolicyKind::AffUcb1 { eta, m } => {
                step(&mut out, eta);
                let _ = writeln!(out, "policy.m = {m}");
            }
            PolicyKind::AffUcb2 { eta } => step(&mut out, eta),
            PolicyKind::AffTs { eta, alpha0, beta0 } | PolicyKind::AffOts { eta, alpha0, beta0 } => {
                step(&mut out, eta);
                beta_prior(&mut out, *alpha0, *beta0);
            }
            PolicyKind::AffDts1 {
                eta,
                alpha0,
                beta0,
                c_init,
            }
            | PolicyKind::AffDts2 {
                eta,
                alpha0,
                beta0,
                c_init,
            } => {
                step(&mut out, eta);
                beta_prior(&mut out, *alpha0, *beta0);
                let _ = writeln!(out, "policy.c = {c_init:?}");
            }
            PolicyKind::FixedArm { arm } => {
                let _ = writeln!(out, "policy.arm = {arm}");
            }
        }
    }
    out
}

fn case_env(case: &str) -> Option<EnvSpec> {
    match case {
        "case1" => Some(EnvSpec::ExponentialClock {
            arms: vec![
                ClockParams {
                    theta: 0.001,
                    r_low: 0.0,
                    r_high: 1.0,
                },
                ClockParams {
                    theta: 0.010,
                    r_low: 0.0,
                    r_high: 1.0,
                },
            ],
        }),
        "case2" => Some(EnvSpec::ExponentialClock {
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
        }),
        "case3" => Some(EnvSpec::ReflectingWalk {
            sigma2: vec![0.0001, 0.0001],
        }),
        "case4" => Some(EnvSpec::LogisticWalk {
            sigma2: vec![0.001, 0.001],
        }),
        _ => None,
    }
}

fn eta_fixed() -> StepSize {
    StepSize::Fixed(DEFAULT_ETA)
}

/// The full policy roster compared in the main benchmark scenarios.
pub fn full_roster() -> Vec<PolicyEntry> {
    [
        PolicyKind::EpsGreedy {
            epsilon: DEFAULT_EPSILON,
        },
        PolicyKind::Ucb,
        PolicyKind::Ts {
            alpha0: DEFAULT_ALPHA0,
            beta0: DEFAULT_BETA0,
        },
        PolicyKind::Ots {
            alpha0: DEFAULT_ALPHA0,
            beta0: DEFAULT_BETA0,
        },
        PolicyKind::Dts {
            alpha0: DEFAULT_ALPHA0,
            beta0: DEFAULT_BETA0,
            c: DEFAULT_C,
        },
        PolicyKind::DUcb {
            lambda: None,
            xi: DEFAULT_XI,
            scale: DEFAULT_SCALE,
        },
        PolicyKind::SwUcb {
            window: None,
            xi: DEFAULT_XI,
        },
        PolicyKind::AffDGreedy {
            eta: eta_fixed(),
            d: DEFAULT_ETA,
        },
        PolicyKind::AffUcb1 {
            eta: eta_fixed(),
            m: DEFAULT_M,
        },
        PolicyKind::AffUcb2 { eta: eta_fixed() },
        PolicyKind::AffTs {
            eta: eta_fixed(),
            alpha0: DEFAULT_ALPHA0,
            beta0: DEFAULT_BETA0,
        },
        PolicyKind::AffOts {
            eta: eta_fixed(),
            alpha0: DEFAULT_ALPHA0,
            beta0: DEFAULT_BETA0,
        },
        PolicyKind::AffDts1 {
            eta: eta_fixed(),
            alpha0: DEFAULT_ALPHA0,
            beta0: DEFAULT_BETA0,
            c_init: DEFAULT_C,
        },
        PolicyKind::AffDts2 {
            eta: eta_fixed(),
            alpha0: DEFAULT_ALPHA0,
            beta0: DEFAULT_BETA0,
            c_init: DEFAULT_C,
        },
    ]
    .into_iter()
    .map(PolicyEntry::new)
    .collect()
}

fn epsilon_grid() -> Vec<f64> {
    (1..=9).map(|i| i as f64 / 10.0).collect()
}

/// Canned experiment configurations. `arms` and `case` are required by the
/// `large-arms` preset and rejected elsewhere.
pub fn preset(
    name: &str,
    arms: Option<usize>,
    case: Option<&str>,
) -> Result<ExperimentConfig, ConfigError> {
    let args_err = |preset: &str, message: &str| ConfigError::PresetArgs {
        preset: preset.into(),
        message: message.into(),
    };
    if name != "large-arms" && (arms.is_some() || case.is_some()) {
        return Err(args_err(name, "--arms/--case apply only to `large-arms`"));
    }
    let mut config = match name {
        "small-change" => {
            let mut c = ExperimentConfig::new(EnvSpec::SmallChange, 3, full_roster());
            c.epsilon_grid = epsilon_grid();
            c
        }
        "case1" | "case2" | "case3" | "case4" => {
            let env = case_env(name).expect("matched above");
            let mut c = ExperimentConfig::new(env, 2, full_roster());
            c.epsilon_grid = epsilon_grid();
            c
        }
        "large-arms" => {
            let arms = arms.ok_or_else(|| args_err(name, "requires --arms 50|100"))?;
            if arms != 50 && arms != 100 {
                return Err(args_err(name, "arm count must be 50 or 100"));
            }
            let case = case.ok_or_else(|| args_err(name, "requires --case case1..case4"))?;
            let env = case_env(case)
                .ok_or_else(|| args_err(name, "case must be one of case1..case4"))?;
            ExperimentConfig::new(env, arms, full_roster())
        }
        "eta-sweep" => {
            let env = case_env("case1").expect("known case");
            let etas = [
                ("eta=0.0001", StepSize::Fixed(0.0001)),
                ("eta=0.001", StepSize::Fixed(0.001)),
                ("eta=0.01", StepSize::Fixed(0.01)),
                (
                    "eta=0.0001/s2",
                    StepSize::InverseVariance { base: 0.0001 },
                ),
            ];
            let mut policies = Vec::new();
            for (tag, eta) in etas {
                let d = eta.base().max(1e-12);
                let kinds = [
                    PolicyKind::AffDGreedy { eta, d },
                    PolicyKind::AffUcb1 { eta, m: DEFAULT_M },
                    PolicyKind::AffUcb2 { eta },
                    PolicyKind::AffTs {
                        eta,
                        alpha0: DEFAULT_ALPHA0,
                        beta0: DEFAULT_BETA0,
                    },
                    PolicyKind::AffOts {
                        eta,
                        alpha0: DEFAULT_ALPHA0,
                        beta0: DEFAULT_BETA0,
                    },
                    PolicyKind::AffDts1 {
                        eta,
                        alpha0: DEFAULT_ALPHA0,
                        beta0: DEFAULT_BETA0,
                        c_init: DEFAULT_C,
                    },
                    PolicyKind::AffDts2 {
                        eta,
                        alpha0: DEFAULT_ALPHA0,
                        beta0: DEFAULT_BETA0,
                        c_init: DEFAULT_C,
                    },
                ];
                for kind in kinds {
                    policies.push(PolicyEntry::labeled(
                        format!("{}[{tag}]", kind.name()),
                        kind,
                    ));
                }
            }
            ExperimentConfig::new(env, 2, policies)
        }
        "baseline-sweep" => {
            let env = case_env("case1").expect("known case");
            let mut policies = Vec::new();
            for lambda in [None, Some(0.99), Some(0.8), Some(0.5)] {
                let tag = lambda.map_or("auto".to_string(), |l| format!("{l}"));
                policies.push(PolicyEntry::labeled(
                    format!("d-ucb[lambda={tag}]"),
                    PolicyKind::DUcb {
                        lambda,
                        xi: DEFAULT_XI,
                        scale: DEFAULT_SCALE,
                    },
                ));
            }
            for window in [None, Some(10), Some(100), Some(1000)] {
                let tag = window.map_or("auto".to_string(), |w| format!("{w}"));
                policies.push(PolicyEntry::labeled(
                    format!("sw-ucb[window={tag}]"),
                    PolicyKind::SwUcb {
                        window,
                        xi: DEFAULT_XI,
                    },
                ));
            }
            ExperimentConfig::new(env, 2, policies)
        }
        "dts-c" => {
            let env = case_env("case1").expect("known case");
            let mut policies = Vec::new();
            for c in [5.0, 10.0, 100.0, 1000.0] {
                policies.push(PolicyEntry::labeled(
                    format!("dts[c={c}]"),
                    PolicyKind::Dts {
                        alpha0: DEFAULT_ALPHA0,
                        beta0: DEFAULT_BETA0,
                        c,
                    },
                ));
                policies.push(PolicyEntry::labeled(
                    format!("aff-dts1[c={c}]"),
                    PolicyKind::AffDts1 {
                        eta: eta_fixed(),
                        alpha0: DEFAULT_ALPHA0,
                        beta0: DEFAULT_BETA0,
                        c_init: c,
                    },
                ));
                policies.push(PolicyEntry::labeled(
                    format!("aff-dts2[c={c}]"),
                    PolicyKind::AffDts2 {
                        eta: eta_fixed(),
                        alpha0: DEFAULT_ALPHA0,
                        beta0: DEFAULT_BETA0,
                        c_init: c,
                    },
                ));
            }
            policies.push(PolicyEntry::new(PolicyKind::AffOts {
                eta: eta_fixed(),
                alpha0: DEFAULT_ALPHA0,
                beta0: DEFAULT_BETA0,
            }));
            ExperimentConfig::new(env, 2, policies)
        }
        other => return Err(ConfigError::UnknownPreset(other.to_string())),
    };
    config.horizon = 10_000;
    config.replications = 100;
    Ok(config)
}

/// All recognized preset names.
pub const PRESET_NAMES: &[&str] = &[
    "small-change",
    "case1",
    "case2",
    "case3",
    "case4",
    "large-arms",
    "eta-sweep",
    "baseline-sweep",
    "dts-c",
];
