//! Adaptive-forgetting-factor (AFF) estimation of a single reward stream.
//!
//! The estimator keeps a running weighted mean and variance in which the
//! weight on older observations decays by a forgetting factor that is itself
//! re-tuned every step by one gradient descent step on the one-step-ahead
//! squared prediction error.

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum AffError {
    #[error("step size eta must be positive, got {0}")]
    NonPositiveEta(f64),
    #[error("reward {0} outside [0, 1]")]
    RewardOutOfRange(f64),
    #[error("observation time {t} does not advance past {t_last}")]
    NonIncreasingTime { t: u64, t_last: u64 },
    #[error("estimator has no observations")]
    Empty,
    #[error("variance undefined before two observations")]
    VarianceUndefined,
    #[error("query time {t_now} precedes last observation {t_last}")]
    TimeBeforeLast { t_now: u64, t_last: u64 },
    #[error("lambda sequence length {lambdas} must be rewards length {rewards} minus one")]
    LengthMismatch { rewards: usize, lambdas: usize },
}

/// How the gradient step size is chosen at each observation.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum StepSize {
    /// Constant step size.
    Fixed(f64),
    /// `base / s2` recomputed each observation from the current AFF
    /// variance; falls back to `base` while the variance is still zero.
    InverseVariance { base: f64 },
}

impl StepSize {
    pub fn base(&self) -> f64 {
        match *self {
            StepSize::Fixed(eta) => eta,
            StepSize::InverseVariance { base } => base,
        }
    }

    fn effective(&self, s2: f64) -> f64 {
        match *self {
            StepSize::Fixed(eta) => eta,
            StepSize::InverseVariance { base } => {
                if s2 > 0.0 {
                    base / s2
                } else {
                    base
                }
            }
        }
    }
}

/// Per-arm adaptive estimator state.
///
/// A plain value: cloning or moving it is cheap and all operations are
/// deterministic given inputs. While an arm is idle every field keeps the
/// value it had at `t_last`.
#[derive(Debug, Clone, PartialEq)]
pub struct AffState {
    /// Current forgetting factor, in [0, 1].
    pub lambda: f64,
    /// Previous forgetting factor, kept for the |Δλ| exploration test.
    pub lambda_prev: f64,
    /// Weighted reward sum.
    pub m: f64,
    /// Weight sum.
    pub w: f64,
    /// Squared-weight sum.
    pub k: f64,
    /// Derivative helper for m.
    pub m_dot: f64,
    /// Derivative helper for w.
    pub w_dot: f64,
    /// AFF variance.
    pub s2: f64,
    /// Variance normaliser, `w * (1 - k / w^2)`.
    pub v: f64,
    /// Number of rewards fed so far.
    pub n_obs: u64,
    /// Global time index of the most recent observation.
    pub t_last: u64,
    /// Gradient step size.
    pub step: StepSize,
}

impl AffState {
    /// Empty pre-burn-in state with a fixed positive step size.
    pub fn new(eta: f64) -> Result<Self, AffError> {
        if !(eta > 0.0) {
            return Err(AffError::NonPositiveEta(eta));
        }
        Self::with_step(StepSize::Fixed(eta))
    }

    /// Like [`AffState::new`] but also admits a zero step size (which pins
    /// lambda at its initial value 1) and the inverse-variance schedule.
    pub fn with_step(step: StepSize) -> Result<Self, AffError> {
        if !(step.base() >= 0.0) {
            return Err(AffError::NonPositiveEta(step.base()));
        }
        Ok(AffState {
            lambda: 1.0,
            lambda_prev: 1.0,
            m: 0.0,
            w: 0.0,
            k: 0.0,
            m_dot: 0.0,
            w_dot: 0.0,
            s2: 0.0,
            v: 0.0,
            n_obs: 0,
            t_last: 0,
            step,
        })
    }

    /// Feed one reward observed at global time `t`.
    ///
    /// All discounting in this step uses the pre-step lambda; the gradient
    /// step produces the lambda that discounts the next observation.
    pub fn observe(&mut self, y: f64, t: u64) -> Result<(), AffError> {
        if !(0.0..=1.0).contains(&y) {
            return Err(AffError::RewardOutOfRange(y));
        }
        if self.n_obs > 0 && t <= self.t_last {
            return Err(AffError::NonIncreasingTime {
                t,
                t_last: self.t_last,
            });
        }

        let lam = self.lambda;
        let (m0, w0, k0) = (self.m, self.w, self.k);
        let (m_dot0, w_dot0) = (self.m_dot, self.w_dot);
        let (s2_0, v0) = (self.s2, self.v);

        // Gradient step on the one-step-ahead squared prediction error.
        // No prediction exists at the first observation, so lambda is
        // unchanged by the first reward.
        let mut y_hat = 0.0;
        if self.n_obs >= 1 {
            y_hat = m0 / w0;
            let grad = 2.0 * (y_hat - y) * (m_dot0 - w_dot0 * y_hat) / w0;
            let eta = self.step.effective(s2_0);
            self.lambda_prev = lam;
            self.lambda = (lam - eta * grad).clamp(0.0, 1.0);
        }

        self.m_dot = lam * m_dot0 + m0;
        self.w_dot = lam * w_dot0 + w0;

        self.m = lam * m0 + y;
        self.w = lam * w0 + 1.0;
        self.k = lam * lam * k0 + 1.0;
        self.v = self.w * (1.0 - self.k / (self.w * self.w));

        if self.n_obs >= 1 && self.v > 0.0 {
            self.s2 = (lam * v0 * s2_0 + ((self.w - 1.0) / self.w) * (y_hat - y).powi(2)) / self.v;
        } else {
            self.s2 = 0.0;
        }

        self.n_obs += 1;
        self.t_last = t;
        Ok(())
    }

    /// AFF mean `m / w`.
    pub fn mean(&self) -> Result<f64, AffError> {
        if self.n_obs == 0 {
            return Err(AffError::Empty);
        }
        Ok(self.m / self.w)
    }

    /// AFF variance. Undefined before the second observation (v = 0).
    pub fn variance(&self) -> Result<f64, AffError> {
        if self.n_obs < 2 || self.v <= 0.0 {
            return Err(AffError::VarianceUndefined);
        }
        Ok(self.s2)
    }

    /// Intermediate quantities discounted for idle time: `(m~, w~, k~)`.
    ///
    /// The exponent is `(t_now - t_last) / num_arms`, evaluated as a real
    /// power. With a zero gap this returns `(m, w, k)` exactly (0^0 = 1).
    pub fn discounted_quantities(
        &self,
        t_now: u64,
        num_arms: usize,
    ) -> Result<(f64, f64, f64), AffError> {
        if self.n_obs == 0 {
            return Err(AffError::Empty);
        }
        if t_now < self.t_last {
            return Err(AffError::TimeBeforeLast {
                t_now,
                t_last: self.t_last,
            });
        }
        let gap = (t_now - self.t_last) as f64 / num_arms as f64;
        if gap == 0.0 {
            return Ok((self.m, self.w, self.k));
        }
        let f = self.lambda.powf(gap);
        Ok((f * self.m, f * self.w, (self.lambda * self.lambda).powf(gap) * self.k))
    }

    /// Idle gap since the last observation.
    pub fn idle_gap(&self, t_now: u64) -> u64 {
        t_now.saturating_sub(self.t_last)
    }
}

/// Direct (non-recursive) evaluation of the AFF mean from the raw reward and
/// lambda sequences. `lambdas[i]` discounts `rewards[i]`; the last reward
/// carries the empty product 1. Used as an independent oracle for the
/// recursive updates.
pub fn direct_mean(rewards: &[f64], lambdas: &[f64]) -> Result<f64, AffError> {
    let (num, den) = direct_sums(rewards, lambdas)?;
    Ok(num / den)
}

/// Numerator and denominator of the direct AFF mean: each reward `Y_i` is
/// weighted by the product of every lambda recorded after it.
pub fn direct_sums(rewards: &[f64], lambdas: &[f64]) -> Result<(f64, f64), AffError> {
    if rewards.is_empty() || lambdas.len() + 1 != rewards.len() {
        return Err(AffError::LengthMismatch {
            rewards: rewards.len(),
            lambdas: lambdas.len(),
        });
    }
    let mut num = 0.0;
    let mut den = 0.0;
    for (i, &y) in rewards.iter().enumerate() {
        let weight: f64 = lambdas[i..].iter().product();
        num += weight * y;
        den += weight;
    }
    Ok((num, den))
}
