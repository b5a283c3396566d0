//! AFF-estimator variants of the baseline policies.
//!
//! All of them hold one [`AffState`] per arm. At selection time for step `t`
//! the idle-discounted quantities and bonuses are evaluated at `t - 1`, so an
//! arm played at the previous step has a zero idle gap.

use super::{
    aff_dts_threshold, aff_ts_update, aff_ucb1_bonus, aff_ucb2_bonus, argmax_tiebreak, dts_update,
    BetaParams, BurnIn, Policy, PolicyError,
};
use crate::aff::{AffState, StepSize};
use rand::{Rng, RngCore};

fn states(num_arms: usize, eta: StepSize) -> Result<Vec<AffState>, PolicyError> {
    (0..num_arms)
        .map(|_| AffState::with_step(eta).map_err(PolicyError::from))
        .collect()
}

/// AFF analogue of epsilon-Greedy: explores uniformly only when the greedy
/// arm's forgetting factor just moved by at least `d`.
pub struct AffDGreedy {
    states: Vec<AffState>,
    d: f64,
    fed: u64,
    burn_in: BurnIn,
}

impl AffDGreedy {
    pub fn new(num_arms: usize, eta: StepSize, d: f64) -> Result<Self, PolicyError> {
        Ok(AffDGreedy {
            states: states(num_arms, eta)?,
            d,
            fed: 0,
            burn_in: BurnIn::new(num_arms, 1),
        })
    }

    pub fn state(&self, arm: usize) -> &AffState {
        &self.states[arm]
    }
}

impl Policy for AffDGreedy {
    fn choose(&mut self, t: u64, rng: &mut dyn RngCore) -> usize {
        if let Some(arm) = self.burn_in.arm(self.fed) {
            return arm;
        }
        let means: Vec<f64> = self
            .states
            .iter()
            .map(|s| s.mean().expect("burn-in fed every arm"))
            .collect();
        let greedy = argmax_tiebreak(&means, rng);
        let s = &self.states[greedy];
        // The trigger compares the greedy arm's forgetting factor at the two
        // preceding steps. An arm that sat idle at step t-1 kept its factor
        // unchanged, so idleness never triggers exploration.
        if s.t_last + 1 == t && (s.lambda - s.lambda_prev).abs() >= self.d {
            // uniform over all arms, the greedy arm included
            rng.random_range(0..self.states.len())
        } else {
            greedy
        }
    }

    fn feed(&mut self, arm: usize, y: f64, t: u64) {
        self.states[arm].observe(y, t).expect("time advances");
        self.fed += 1;
        self.burn_in.record();
    }
}

/// AFF-UCB with an idle-inflated bonus on top of the Hoeffding term.
/// Burn-in plays each arm `m` times so the AFF variance is defined.
pub struct AffUcb1 {
    states: Vec<AffState>,
    fed: u64,
    burn_in: BurnIn,
}

impl AffUcb1 {
    pub fn new(num_arms: usize, eta: StepSize, m: u64) -> Result<Self, PolicyError> {
        Ok(AffUcb1 {
            states: states(num_arms, eta)?,
            fed: 0,
            burn_in: BurnIn::new(num_arms, m),
        })
    }
}

impl Policy for AffUcb1 {
    fn choose(&mut self, t: u64, rng: &mut dyn RngCore) -> usize {
        if let Some(arm) = self.burn_in.arm(self.fed) {
            return arm;
        }
        let num_arms = self.states.len();
        let scores: Vec<f64> = self
            .states
            .iter()
            .map(|s| {
                s.mean().expect("burn-in fed every arm")
                    + aff_ucb1_bonus(s, t - 1, num_arms).expect("M-fold burn-in defines variance")
            })
            .collect();
        argmax_tiebreak(&scores, rng)
    }

    fn feed(&mut self, arm: usize, y: f64, t: u64) {
        self.states[arm].observe(y, t).expect("time advances");
        self.fed += 1;
        self.burn_in.record();
    }
}

/// AFF-UCB with idle time folded into the Hoeffding bonus through the
/// discounted weight sums.
pub struct AffUcb2 {
    states: Vec<AffState>,
    fed: u64,
    burn_in: BurnIn,
}

impl AffUcb2 {
    pub fn new(num_arms: usize, eta: StepSize) -> Result<Self, PolicyError> {
        Ok(AffUcb2 {
            states: states(num_arms, eta)?,
            fed: 0,
            burn_in: BurnIn::new(num_arms, 1),
        })
    }

    pub fn state(&self, arm: usize) -> &AffState {
        &self.states[arm]
    }
}

impl Policy for AffUcb2 {
    fn choose(&mut self, t: u64, rng: &mut dyn RngCore) -> usize {
        if let Some(arm) = self.burn_in.arm(self.fed) {
            return arm;
        }
        let num_arms = self.states.len();
        let scores: Vec<f64> = self
            .states
            .iter()
            .map(|s| {
                s.mean().expect("burn-in fed every arm")
                    + aff_ucb2_bonus(s, t - 1, num_arms).expect("burn-in fed every arm")
            })
            .collect();
        argmax_tiebreak(&scores, rng)
    }

    fn feed(&mut self, arm: usize, y: f64, t: u64) {
        self.states[arm].observe(y, t).expect("time advances");
        self.fed += 1;
        self.burn_in.record();
    }
}

/// AFF Thompson sampling: the Beta posterior of every arm is recomputed each
/// step from the idle-discounted quantities, so idle posteriors flatten
/// toward the prior. `optimistic` floors each drawn sample at its posterior
/// mean.
pub struct AffTs {
    states: Vec<AffState>,
    alpha0: f64,
    beta0: f64,
    optimistic: bool,
    fed: u64,
    burn_in: BurnIn,
}

impl AffTs {
    pub fn new(
        num_arms: usize,
        eta: StepSize,
        alpha0: f64,
        beta0: f64,
        optimistic: bool,
    ) -> Result<Self, PolicyError> {
        Ok(AffTs {
            states: states(num_arms, eta)?,
            alpha0,
            beta0,
            optimistic,
            fed: 0,
            burn_in: BurnIn::new(num_arms, 1),
        })
    }

    /// Posterior of one arm at query time `t_now`.
    pub fn posterior(&self, arm: usize, t_now: u64) -> Result<BetaParams, PolicyError> {
        aff_ts_update(
            self.alpha0,
            self.beta0,
            &self.states[arm],
            t_now,
            self.states.len(),
        )
    }
}

impl Policy for AffTs {
    fn choose(&mut self, t: u64, rng: &mut dyn RngCore) -> usize {
        if let Some(arm) = self.burn_in.arm(self.fed) {
            return arm;
        }
        let num_arms = self.states.len();
        let scores: Vec<f64> = self
            .states
            .iter()
            .map(|s| {
                let post = aff_ts_update(self.alpha0, self.beta0, s, t - 1, num_arms)
                    .expect("burn-in fed every arm");
                let x = post.sample(rng);
                if self.optimistic {
                    x.max(post.mean())
                } else {
                    x
                }
            })
            .collect();
        argmax_tiebreak(&scores, rng)
    }

    fn feed(&mut self, arm: usize, y: f64, t: u64) {
        self.states[arm].observe(y, t).expect("time advances");
        self.fed += 1;
        self.burn_in.record();
    }
}

/// Which self-tuning rule drives the DTS threshold.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DtsVariant {
    /// `C_t = 4 / s2 - 1`.
    InverseVariance,
    /// `C_t = w - 1`.
    WeightSum,
}

/// DTS with the threshold re-tuned each step from the selected arm's AFF
/// state.
pub struct AffDts {
    states: Vec<AffState>,
    posts: Vec<BetaParams>,
    c_init: f64,
    variant: DtsVariant,
    fed: u64,
    burn_in: BurnIn,
}

impl AffDts {
    pub fn new(
        num_arms: usize,
        eta: StepSize,
        alpha0: f64,
        beta0: f64,
        c_init: f64,
        variant: DtsVariant,
    ) -> Result<Self, PolicyError> {
        Ok(AffDts {
            states: states(num_arms, eta)?,
            posts: vec![BetaParams::new(alpha0, beta0); num_arms],
            c_init,
            variant,
            fed: 0,
            burn_in: BurnIn::new(num_arms, 1),
        })
    }
}

impl Policy for AffDts {
    fn choose(&mut self, _t: u64, rng: &mut dyn RngCore) -> usize {
        if let Some(arm) = self.burn_in.arm(self.fed) {
            return arm;
        }
        let scores: Vec<f64> = self.posts.iter().map(|p| p.sample(rng)).collect();
        argmax_tiebreak(&scores, rng)
    }

    fn feed(&mut self, arm: usize, y: f64, t: u64) {
        self.states[arm].observe(y, t).expect("time advances");
        let c = aff_dts_threshold(self.variant, &self.states[arm], self.c_init);
        self.posts[arm] = dts_update(self.posts[arm], y, c).expect("threshold fallback keeps c positive");
        self.fed += 1;
        self.burn_in.record();
    }
}
