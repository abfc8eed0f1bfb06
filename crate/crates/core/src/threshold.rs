//! Monte Carlo estimates of `P(K_n is cover solvable)` with `t` random
//! pebbles.
//!
//! Each trial samples a configuration and applies the odd-stack criterion
//! `X + t >= 2n`, which is exact on complete graphs, so a trial costs `O(t)`.
//! Trial `i` at pebble count `t` draws from stream `(t << 32) | i` of the
//! caller's seed; results are therefore independent of how trials are
//! scheduled, and any partition of the trial range sums to the same count.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::Range;

use rand::Rng;

use crate::random::{mb_fill, polya_fill, RandomModel, SeededStream};
use crate::solve::odd_stack_rule_holds;

#[derive(Debug, Clone, PartialEq)]
pub struct SweepRecord {
    pub model: RandomModel,
    pub n: usize,
    pub t: u64,
    pub trials: u64,
    pub solvable_count: u64,
    pub p_hat: f64,
    pub seed: u64,
}

impl SweepRecord {
    pub fn new(
        model: RandomModel,
        n: usize,
        t: u64,
        trials: u64,
        solvable_count: u64,
        seed: u64,
    ) -> Self {
        assert!(solvable_count <= trials);
        SweepRecord {
            model,
            n,
            t,
            trials,
            solvable_count,
            p_hat: solvable_count as f64 / trials as f64,
            seed,
        }
    }
}

/// Stream index of trial `trial` at pebble count `t`.
///
/// # Panics
/// If either value needs more than 32 bits.
pub fn trial_stream(seed: u64, t: u64, trial: u64) -> SeededStream {
    assert!(
        t < 1 << 32 && trial < 1 << 32,
        "t and trial index must fit in 32 bits"
    );
    SeededStream::new(seed, (t << 32) | trial)
}

/// Reusable buffers for running trials on one thread.
#[derive(Debug, Default)]
pub struct TrialRunner {
    counts: Vec<u64>,
    parity: Vec<bool>,
    urn: Vec<u32>,
}

impl TrialRunner {
    pub fn new() -> Self {
        Self::default()
    }

    /// Whether trial `trial` yields a solvable configuration.
    pub fn trial(&mut self, model: RandomModel, n: usize, t: u64, seed: u64, trial: u64) -> bool {
        // Below n pebbles nothing is solvable; from 2n - 1 on everything is.
        if t < n as u64 {
            return false;
        }
        if t + 1 >= 2 * n as u64 {
            return true;
        }
        let mut rng = trial_stream(seed, t, trial).rng();
        let odd = match model {
            RandomModel::MaxwellBoltzmann => self.mb_odd(n, t, &mut rng),
            RandomModel::BoseEinstein => {
                self.counts.clear();
                self.counts.resize(n, 0);
                polya_fill(&mut self.counts, t, &mut self.urn, &mut rng);
                self.counts.iter().filter(|&&c| c & 1 == 1).count()
            }
        };
        odd_stack_rule_holds(n, odd, t)
    }

    fn mb_odd<R: Rng>(&mut self, n: usize, t: u64, rng: &mut R) -> usize {
        // Only parities matter, so track them and the odd count directly.
        self.parity.clear();
        self.parity.resize(n, false);
        let mut odd = 0usize;
        for _ in 0..t {
            let v = rng.random_range(0..n);
            let p = &mut self.parity[v];
            *p = !*p;
            if *p {
                odd += 1;
            } else {
                odd -= 1;
            }
        }
        odd
    }

    /// Number of solvable trials among `trials`.
    pub fn count(
        &mut self,
        model: RandomModel,
        n: usize,
        t: u64,
        seed: u64,
        trials: Range<u64>,
    ) -> u64 {
        trials.filter(|&i| self.trial(model, n, t, seed, i)).count() as u64
    }
}

/// The configuration behind trial `trial`, from the same draws that
/// [`TrialRunner::trial`] consumes.
pub fn trial_configuration(
    model: RandomModel,
    n: usize,
    t: u64,
    seed: u64,
    trial: u64,
) -> Vec<u64> {
    let mut rng = trial_stream(seed, t, trial).rng();
    let mut counts = vec![0u64; n];
    match model {
        RandomModel::MaxwellBoltzmann => mb_fill(&mut counts, t, &mut rng),
        RandomModel::BoseEinstein => polya_fill(&mut counts, t, &mut Vec::new(), &mut rng),
    }
    counts
}

/// Estimates `P(K_n solvable)` from `trials` samples of `t` pebbles.
pub fn estimate_solvable_probability(
    model: RandomModel,
    n: usize,
    t: u64,
    trials: u64,
    seed: u64,
) -> SweepRecord {
    assert!(n >= 1 && trials >= 1);
    let count = TrialRunner::new().count(model, n, t, seed, 0..trials);
    SweepRecord::new(model, n, t, trials, count, seed)
}

/// The pebble counts `t_min, t_min + step, ..., <= t_max`.
pub fn sweep_points(t_min: u64, t_max: u64, step: u64) -> Vec<u64> {
    assert!(t_min <= t_max && step >= 1);
    (t_min..=t_max).step_by(step as usize).collect()
}

/// Records sorted by `t`, sharing model, `n`, trial count and seed.
#[derive(Debug, Clone, PartialEq)]
pub struct ThresholdCurve {
    pub records: Vec<SweepRecord>,
}

impl ThresholdCurve {
    pub fn new(mut records: Vec<SweepRecord>) -> Self {
        records.sort_by_key(|r| r.t);
        records.dedup_by_key(|r| r.t);
        ThresholdCurve { records }
    }

    /// `t*` where the curve crosses 0.5.
    pub fn crossing(&self) -> Option<f64> {
        crossing_point(self, 0.5)
    }
}

/// Single-threaded sweep over `t_min..=t_max` in steps of `step`.
pub fn sweep(
    model: RandomModel,
    n: usize,
    t_min: u64,
    t_max: u64,
    step: u64,
    trials: u64,
    seed: u64,
) -> ThresholdCurve {
    let records = sweep_points(t_min, t_max, step)
        .into_iter()
        .map(|t| estimate_solvable_probability(model, n, t, trials, seed))
        .collect();
    ThresholdCurve::new(records)
}

/// Linear interpolation between the last record below `level` and the first
/// later record at or above it.
pub fn crossing_point(curve: &ThresholdCurve, level: f64) -> Option<f64> {
    let recs = &curve.records;
    let below = recs.iter().rposition(|r| r.p_hat < level)?;
    let above = below + 1 + recs[below + 1..].iter().position(|r| r.p_hat >= level)?;
    let (lo, hi) = (&recs[below], &recs[above]);
    let frac = (level - lo.p_hat) / (hi.p_hat - lo.p_hat);
    Some(lo.t as f64 + frac * (hi.t as f64 - lo.t as f64))
}
