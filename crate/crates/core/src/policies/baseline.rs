//! Static-estimator baselines: epsilon-Greedy, UCB, TS/OTS, and DTS.

use super::{argmax_tiebreak, dts_update, ts_update, BetaParams, BurnIn, Policy};
use rand::{Rng, RngCore};

/// Sample-mean epsilon-Greedy.
pub struct EpsGreedy {
    epsilon: f64,
    means: Vec<f64>,
    counts: Vec<u64>,
    fed: u64,
    burn_in: BurnIn,
}

impl EpsGreedy {
    pub fn new(num_arms: usize, epsilon: f64) -> Self {
        EpsGreedy {
            epsilon,
            means: vec![0.0; num_arms],
            counts: vec![0; num_arms],
            fed: 0,
            burn_in: BurnIn::new(num_arms, 1),
        }
    }
}

impl Policy for EpsGreedy {
    fn choose(&mut self, _t: u64, rng: &mut dyn RngCore) -> usize {
        if let Some(arm) = self.burn_in.arm(self.fed) {
            return arm;
        }
        if rng.random::<f64>() < self.epsilon {
            rng.random_range(0..self.means.len())
        } else {
            argmax_tiebreak(&self.means, rng)
        }
    }

    fn feed(&mut self, arm: usize, y: f64, _t: u64) {
        self.counts[arm] += 1;
        self.means[arm] += (y - self.means[arm]) / self.counts[arm] as f64;
        self.fed += 1;
        self.burn_in.record();
    }
}

/// Classic UCB on sample means with bonus `sqrt(2 ln t / N)`.
pub struct Ucb {
    means: Vec<f64>,
    counts: Vec<u64>,
    fed: u64,
    burn_in: BurnIn,
}

impl Ucb {
    pub fn new(num_arms: usize) -> Self {
        Ucb {
            means: vec![0.0; num_arms],
            counts: vec![0; num_arms],
            fed: 0,
            burn_in: BurnIn::new(num_arms, 1),
        }
    }
}

/// UCB exploration bonus at time `t` for an arm pulled `n` times.
pub fn ucb_bonus(t: u64, n: u64) -> f64 {
    (2.0 * (t as f64).ln() / n as f64).sqrt()
}

impl Policy for Ucb {
    fn choose(&mut self, t: u64, rng: &mut dyn RngCore) -> usize {
        if let Some(arm) = self.burn_in.arm(self.fed) {
            return arm;
        }
        let scores: Vec<f64> = self
            .means
            .iter()
            .zip(&self.counts)
            .map(|(&m, &n)| m + ucb_bonus(t, n))
            .collect();
        argmax_tiebreak(&scores, rng)
    }

    fn feed(&mut self, arm: usize, y: f64, _t: u64) {
        self.counts[arm] += 1;
        self.means[arm] += (y - self.means[arm]) / self.counts[arm] as f64;
        self.fed += 1;
        self.burn_in.record();
    }
}

/// Thompson sampling with a Beta prior; `optimistic` floors each drawn
/// sample at its posterior mean (OTS).
pub struct Ts {
    posts: Vec<BetaParams>,
    optimistic: bool,
    fed: u64,
    burn_in: BurnIn,
}

impl Ts {
    pub fn new(num_arms: usize, alpha0: f64, beta0: f64, optimistic: bool) -> Self {
        Ts {
            posts: vec![BetaParams::new(alpha0, beta0); num_arms],
            optimistic,
            fed: 0,
            burn_in: BurnIn::new(num_arms, 1),
        }
    }
}

impl Policy for Ts {
    fn choose(&mut self, _t: u64, rng: &mut dyn RngCore) -> usize {
        if let Some(arm) = self.burn_in.arm(self.fed) {
            return arm;
        }
        let scores: Vec<f64> = self
            .posts
            .iter()
            .map(|p| {
                let x = p.sample(rng);
                if self.optimistic {
                    x.max(p.mean())
                } else {
                    x
                }
            })
            .collect();
        argmax_tiebreak(&scores, rng)
    }

    fn feed(&mut self, arm: usize, y: f64, _t: u64) {
        self.posts[arm] = ts_update(self.posts[arm], y);
        self.fed += 1;
        self.burn_in.record();
    }
}

/// Dynamic Thompson sampling: standard TS selection with the capped
/// posterior update.
pub struct Dts {
    posts: Vec<BetaParams>,
    c: f64,
    fed: u64,
    burn_in: BurnIn,
}

impl Dts {
    pub fn new(num_arms: usize, alpha0: f64, beta0: f64, c: f64) -> Self {
        Dts {
            posts: vec![BetaParams::new(alpha0, beta0); num_arms],
            c,
            fed: 0,
            burn_in: BurnIn::new(num_arms, 1),
        }
    }
}

impl Policy for Dts {
    fn choose(&mut self, _t: u64, rng: &mut dyn RngCore) -> usize {
        if let Some(arm) = self.burn_in.arm(self.fed) {
            return arm;
        }
        let scores: Vec<f64> = self.posts.iter().map(|p| p.sample(rng)).collect();
        argmax_tiebreak(&scores, rng)
    }

    fn feed(&mut self, arm: usize, y: f64, _t: u64) {
        self.posts[arm] =
            dts_update(self.posts[arm], y, self.c).expect("threshold validated at build");
        self.fed += 1;
        self.burn_in.record();
    }
}

/// Always plays one arm. Debug/oracle policy for harness tests.
pub struct FixedArm {
    arm: usize,
}

impl FixedArm {
    pub fn new(arm: usize) -> Self {
        FixedArm { arm }
    }
}

impl Policy for FixedArm {
    fn choose(&mut self, _t: u64, _rng: &mut dyn RngCore) -> usize {
        self.arm
    }

    fn feed(&mut self, _arm: usize, _y: f64, _t: u64) {}
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn rng(seed: u64) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(seed)
    }

    fn past_burn_in<P: Policy>(p: &mut P, rewards: &[f64]) {
        for (i, &y) in rewards.iter().enumerate() {
            p.feed(i % rewards.len(), y, i as u64 + 1);
        }
    }

    #[test]
    fn eps_zero_is_pure_greedy() {
        let mut p = EpsGreedy::new(2, 0.0);
        p.feed(0, 0.0, 1);
        p.feed(1, 1.0, 2);
        let mut r = rng(1);
        for t in 3..100 {
            assert_eq!(p.choose(t, &mut r), 1);
        }
    }

    #[test]
    fn eps_one_is_uniform() {
        let mut p = EpsGreedy::new(3, 1.0);
        past_burn_in(&mut p, &[0.9, 0.1, 0.1]);
        let mut r = rng(2);
        let mut hits = [0u32; 3];
        let n = 100_000;
        for i in 0..n {
            hits[p.choose(4 + i, &mut r)] += 1;
        }
        for &h in &hits {
            assert!((h as f64 / n as f64 - 1.0 / 3.0).abs() < 0.01);
        }
    }

    #[test]
    fn eps_half_frequency() {
        // means (0.7, 0.2): greedy arm picked with prob 0.5 + 0.5 * 0.5
        let mut p = EpsGreedy::new(2, 0.5);
        p.feed(0, 1.0, 1);
        p.feed(1, 0.0, 2);
        p.means = vec![0.7, 0.2];
        let mut r = rng(3);
        let n = 100_000u64;
        let hits = (0..n).filter(|i| p.choose(3 + i, &mut r) == 0).count();
        assert!((hits as f64 / n as f64 - 0.75).abs() < 0.01);
    }

    #[test]
    fn ucb_bonus_spot_value() {
        assert!((ucb_bonus(100, 100) - 0.30349).abs() < 1e-5);
        assert_eq!(ucb_bonus(1, 5), 0.0);
    }

    #[test]
    fn ucb_prefers_least_pulled_on_equal_means() {
        let mut p = Ucb::new(2);
        p.feed(0, 1.0, 1);
        p.feed(1, 1.0, 2);
        p.feed(0, 1.0, 3);
        let mut r = rng(4);
        assert_eq!(p.choose(4, &mut r), 1);
    }

    #[test]
    fn burn_in_is_round_robin() {
        let mut r = rng(5);
        let mut p = Ts::new(4, 2.0, 2.0, false);
        for t in 1..=4u64 {
            let arm = p.choose(t, &mut r);
            assert_eq!(arm, (t - 1) as usize);
            p.feed(arm, 1.0, t);
        }
    }

    #[test]
    fn ts_posterior_tracks_rewards() {
        let mut p = Ts::new(2, 2.0, 2.0, false);
        p.feed(0, 1.0, 1);
        p.feed(1, 0.0, 2);
        assert_eq!((p.posts[0].alpha, p.posts[0].beta), (3.0, 2.0));
        assert_eq!((p.posts[1].alpha, p.posts[1].beta), (2.0, 3.0));
    }

    #[test]
    fn dts_caps_posterior_mass() {
        let mut p = Dts::new(1, 2.0, 2.0, 5.0);
        for t in 1..50u64 {
            p.feed(0, (t % 2) as f64, t);
            assert!(p.posts[0].alpha + p.posts[0].beta <= 5.0 + 1e-9);
        }
    }

    #[test]
    fn fixed_arm_never_moves() {
        let mut p = FixedArm::new(1);
        let mut r = rng(6);
        for t in 1..100 {
            assert_eq!(p.choose(t, &mut r), 1);
        }
    }
}
