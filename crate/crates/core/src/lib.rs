//! Simulation library for dynamic Bernoulli bandits.
//!
//! The crate provides an adaptive-forgetting estimator of drifting reward
//! means ([`aff`]), a set of arm-selection policies built on it alongside
//! classic baselines ([`policies`]), nonstationary environment models
//! ([`env`]), a replicated benchmark harness with deterministic seeding
//! ([`harness`]), experiment configuration and presets ([`config`]), and CSV
//! output writers ([`csvio`]).

pub mod aff;
pub mod config;
pub mod csvio;
pub mod env;
pub mod harness;
pub mod policies;

pub use aff::{AffError, AffState, StepSize};
pub use config::{parse_config, preset, render_config, ConfigError};
pub use env::{EnvError, EnvSpec, TrajectoryLog};
pub use harness::{
    run_experiment, run_replication, ExperimentConfig, ExperimentResult, HarnessError,
    PolicyEntry, SummaryStats,
};
pub use policies::{Policy, PolicyError, PolicyKind};
