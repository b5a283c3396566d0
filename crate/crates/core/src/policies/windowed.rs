//! Baselines that bound the reward history explicitly: discounted UCB and
//! sliding-window UCB.

use super::{argmax_tiebreak, BurnIn, Policy};
use rand::RngCore;
use std::collections::VecDeque;

/// Discounted UCB: every step all arms' reward sums and pull counts decay by
/// a fixed factor, so idle arms regain exploration bonus over time.
pub struct DUcb {
    lambda: f64,
    /// Exploration constant inside the square root.
    xi: f64,
    /// Multiplier outside the square root (2B in the usual construction).
    scale: f64,
    sums: Vec<f64>,
    counts: Vec<f64>,
    fed: u64,
    burn_in: BurnIn,
}

impl DUcb {
    pub fn new(num_arms: usize, lambda: f64, xi: f64, scale: f64) -> Self {
        DUcb {
            lambda,
            xi,
            scale,
            sums: vec![0.0; num_arms],
            counts: vec![0.0; num_arms],
            fed: 0,
            burn_in: BurnIn::new(num_arms, 1),
        }
    }

    /// Discounted mean of one arm (for tests).
    pub fn discounted_mean(&self, arm: usize) -> f64 {
        self.sums[arm] / self.counts[arm]
    }

    pub fn discounted_count(&self, arm: usize) -> f64 {
        self.counts[arm]
    }
}

impl Policy for DUcb {
    fn choose(&mut self, _t: u64, rng: &mut dyn RngCore) -> usize {
        if let Some(arm) = self.burn_in.arm(self.fed) {
            return arm;
        }
        let n_t: f64 = self.counts.iter().sum();
        let log_n = n_t.ln().max(0.0);
        let scores: Vec<f64> = self
            .sums
            .iter()
            .zip(&self.counts)
            .map(|(&s, &n)| s / n + self.scale * (self.xi * log_n / n).sqrt())
            .collect();
        argmax_tiebreak(&scores, rng)
    }

    fn feed(&mut self, arm: usize, y: f64, _t: u64) {
        for a in 0..self.sums.len() {
            self.sums[a] *= self.lambda;
            self.counts[a] *= self.lambda;
        }
        self.sums[arm] += y;
        self.counts[arm] += 1.0;
        self.fed += 1;
        self.burn_in.record();
    }
}

/// Sliding-window UCB: statistics over the last `window` plays only; arms
/// absent from the window get an infinite score so they are re-explored.
pub struct SwUcb {
    window: u64,
    xi: f64,
    history: VecDeque<(usize, f64)>,
    sums: Vec<f64>,
    counts: Vec<u64>,
    fed: u64,
    burn_in: BurnIn,
}

impl SwUcb {
    pub fn new(num_arms: usize, window: u64, xi: f64) -> Self {
        SwUcb {
            window,
            xi,
            history: VecDeque::new(),
            sums: vec![0.0; num_arms],
            counts: vec![0; num_arms],
            fed: 0,
            burn_in: BurnIn::new(num_arms, 1),
        }
    }
}

impl Policy for SwUcb {
    fn choose(&mut self, t: u64, rng: &mut dyn RngCore) -> usize {
        if let Some(arm) = self.burn_in.arm(self.fed) {
            return arm;
        }
        let log_h = ((t.min(self.window)) as f64).ln().max(0.0);
        let scores: Vec<f64> = self
            .sums
            .iter()
            .zip(&self.counts)
            .map(|(&s, &n)| {
                if n == 0 {
                    f64::INFINITY
                } else {
                    s / n as f64 + (self.xi * log_h / n as f64).sqrt()
                }
            })
            .collect();
        argmax_tiebreak(&scores, rng)
    }

    fn feed(&mut self, arm: usize, y: f64, _t: u64) {
        self.history.push_back((arm, y));
        self.sums[arm] += y;
        self.counts[arm] += 1;
        if self.history.len() as u64 > self.window {
            let (old_arm, old_y) = self.history.pop_front().expect("window is nonempty");
            self.sums[old_arm] -= old_y;
            self.counts[old_arm] -= 1;
        }
        self.fed += 1;
        self.burn_in.record();
    }
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
    fn d_ucb_decay_trace() {
        let mut p = DUcb::new(2, 0.9, 0.5, 2.0);
        p.feed(0, 1.0, 1);
        p.feed(1, 0.0, 2); // one idle step for arm 0
        assert!((p.sums[0] - 0.9).abs() < 1e-12);
        assert!((p.counts[0] - 0.9).abs() < 1e-12);
        assert!((p.discounted_mean(0) - 1.0).abs() < 1e-12);
    }

    #[test]
    fn d_ucb_unit_lambda_keeps_plain_counts() {
        let mut p = DUcb::new(2, 1.0, 0.5, 2.0);
        for t in 1..=10u64 {
            p.feed((t % 2) as usize, 1.0, t);
        }
        assert_eq!(p.counts, vec![5.0, 5.0]);
    }

    #[test]
    fn d_ucb_uniform_on_ties() {
        let mut p = DUcb::new(3, 1.0, 0.5, 2.0);
        for t in 1..=3u64 {
            p.feed((t - 1) as usize, 1.0, t);
        }
        let mut r = rng(1);
        let mut hits = [0u32; 3];
        let n = 60_000;
        for i in 0..n {
            hits[p.choose(4 + i, &mut r)] += 1;
        }
        for &h in &hits {
            assert!((h as f64 / n as f64 - 1.0 / 3.0).abs() < 0.02);
        }
    }

    #[test]
    fn sw_ucb_window_one_forces_alternation() {
        let mut p = SwUcb::new(2, 1, 0.5);
        let mut r = rng(2);
        let mut prev = None;
        for t in 1..=2u64 {
            let arm = p.choose(t, &mut r);
            p.feed(arm, 1.0, t);
            prev = Some(arm);
        }
        for t in 3..50u64 {
            let arm = p.choose(t, &mut r);
            assert_ne!(Some(arm), prev, "window of 1 must alternate");
            p.feed(arm, 1.0, t);
            prev = Some(arm);
        }
    }

    #[test]
    fn sw_ucb_absent_arm_wins() {
        let mut p = SwUcb::new(3, 3, 0.5);
        p.feed(0, 1.0, 1);
        p.feed(1, 1.0, 2);
        p.feed(0, 1.0, 3); // arm 2 never enters the window
        let mut r = rng(3);
        assert_eq!(p.choose(4, &mut r), 2);
    }

    #[test]
    fn sw_ucb_eviction_is_fifo() {
        let mut p = SwUcb::new(2, 3, 0.5);
        p.feed(0, 1.0, 1);
        p.feed(1, 0.0, 2);
        p.feed(0, 0.0, 3);
        p.feed(0, 1.0, 4); // evicts the t=1 reward of arm 0
        assert_eq!(p.counts, vec![2, 1]);
        assert_eq!(p.sums[0], 1.0);
    }
}
