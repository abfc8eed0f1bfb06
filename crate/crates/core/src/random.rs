//! Random pebble configurations and the odd-stack statistics behind the
//! complete-graph thresholds.
//!
//! Two models place `t` pebbles on `n` vertices:
//!
//! - **Maxwell-Boltzmann**: distinguishable pebbles, each thrown onto a
//!   uniform vertex, so all `n^t` labelled outcomes are equally likely.
//! - **Bose-Einstein**: indistinguishable pebbles, every one of the
//!   `C(n+t-1, n-1)` compositions equally likely. Sampled with a Pólya urn
//!   that starts with one ball per vertex and returns each drawn ball with
//!   a duplicate.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigUint;
use rand::seq::index;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::exact::{binomial, Ratio};
use crate::graph::Configuration;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RandomModel {
    MaxwellBoltzmann,
    BoseEinstein,
}

impl RandomModel {
    /// Short tag: `mb` or `be`.
    pub fn tag(self) -> &'static str {
        match self {
            RandomModel::MaxwellBoltzmann => "mb",
            RandomModel::BoseEinstein => "be",
        }
    }

    pub fn from_tag(tag: &str) -> Option<Self> {
        match tag {
            "mb" => Some(RandomModel::MaxwellBoltzmann),
            "be" => Some(RandomModel::BoseEinstein),
            _ => None,
        }
    }
}

/// Identifies one reproducible random stream.
///
/// The generator is ChaCha8 keyed by `seed` with `stream_index` selecting
/// one of its 2^64 independent streams, so draws depend only on the pair and
/// not on which thread runs them.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SeededStream {
    pub seed: u64,
    pub stream_index: u64,
}

impl SeededStream {
    pub fn new(seed: u64, stream_index: u64) -> Self {
        SeededStream { seed, stream_index }
    }

    pub fn rng(self) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(self.stream_index);
        rng
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NoVertices;

impl core::fmt::Display for NoVertices {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str("cannot place pebbles on zero vertices")
    }
}

impl core::error::Error for NoVertices {}

fn check_n(n: usize, t: u64) -> Result<(), NoVertices> {
    if n == 0 && t > 0 {
        Err(NoVertices)
    } else {
        Ok(())
    }
}

fn into_config(counts: Vec<u64>) -> Configuration {
    Configuration::new(counts).expect("counts sum to t")
}

/// Maxwell-Boltzmann: each pebble lands on an independent uniform vertex.
pub fn sample_mb(n: usize, t: u64, s: SeededStream) -> Result<Configuration, NoVertices> {
    check_n(n, t)?;
    let mut counts = vec![0u64; n];
    mb_fill(&mut counts, t, &mut s.rng());
    Ok(into_config(counts))
}

pub(crate) fn mb_fill<R: Rng>(counts: &mut [u64], t: u64, rng: &mut R) {
    let n = counts.len();
    for _ in 0..t {
        counts[rng.random_range(0..n)] += 1;
    }
}

/// Bose-Einstein via Pólya sampling: draw `k` (1-based) picks vertex `j`
/// with probability `(1 + count_j) / (n + k - 1)`.
pub fn sample_be_polya(n: usize, t: u64, s: SeededStream) -> Result<Configuration, NoVertices> {
    check_n(n, t)?;
    let mut counts = vec![0u64; n];
    let mut urn = Vec::new();
    polya_fill(&mut counts, t, &mut urn, &mut s.rng());
    Ok(into_config(counts))
}

/// Runs the urn with `urn` as scratch space. A uniform pick among the
/// `n + k - 1` balls hits vertex `j` with probability `(1 + count_j)/(n + k - 1)`.
pub(crate) fn polya_fill<R: Rng>(counts: &mut [u64], t: u64, urn: &mut Vec<u32>, rng: &mut R) {
    let n = counts.len();
    urn.clear();
    urn.extend(0..n as u32);
    for _ in 0..t {
        let ball = urn[rng.random_range(0..urn.len())];
        counts[ball as usize] += 1;
        urn.push(ball);
    }
}

/// Bose-Einstein by stars and bars: a uniform `t`-subset of `n + t - 1`
/// slots marks the pebbles, the rest are separators.
///
/// Independent of the urn scheme; used to cross-check it.
pub fn sample_be_stars_bars(
    n: usize,
    t: u64,
    s: SeededStream,
) -> Result<Configuration, NoVertices> {
    check_n(n, t)?;
    let mut counts = vec![0u64; n];
    if n > 0 && t > 0 {
        let slots = n + t as usize - 1;
        let mut stars = vec![false; slots];
        for i in index::sample(&mut s.rng(), slots, t as usize) {
            stars[i] = true;
        }
        let mut v = 0;
        for is_star in stars {
            if is_star {
                counts[v] += 1;
            } else {
                v += 1;
            }
        }
    }
    Ok(into_config(counts))
}

/// Exact `P(X = x)` for the number of odd stacks under Bose-Einstein.
///
/// `C(n, x) C((t-x)/2 + n - 1, n - 1) / C(n + t - 1, n - 1)` when `x` and
/// `t` share parity and `x <= min(n, t)`; zero otherwise.
pub fn be_odd_stack_pmf(n: u64, t: u64, x: u64) -> Ratio {
    assert!(n >= 1, "n must be positive");
    if x > t || x > n || !(t - x).is_multiple_of(2) {
        return Ratio::zero();
    }
    let pairs = (t - x) / 2;
    let favourable = binomial(n, x) * binomial(pairs + n - 1, n - 1);
    Ratio::new(favourable, binomial(n + t - 1, n - 1))
}

/// Exact Bose-Einstein `E(X) = sum_x x P(X = x)`.
pub fn be_expected_odd_stacks_exact(n: u64, t: u64) -> Ratio {
    let mut acc = Ratio::zero();
    for x in (t % 2..=n.min(t)).step_by(2) {
        acc += &(&be_odd_stack_pmf(n, t, x) * x);
    }
    acc
}

/// Large-`n` approximation `nt / (n + 2t)` to the Bose-Einstein `E(X)`.
pub fn be_expected_odd_stacks_approx(n: f64, t: f64) -> f64 {
    if t == 0.0 {
        return 0.0;
    }
    n * t / (n + 2.0 * t)
}

/// Maxwell-Boltzmann `E(X) = (n/2)(1 - (1 - 2/n)^t)`.
pub fn mb_expected_odd_stacks(n: f64, t: f64) -> f64 {
    n / 2.0 * (1.0 - libm::pow(1.0 - 2.0 / n, t))
}

/// Maxwell-Boltzmann `Var(X)`.
pub fn mb_variance_odd_stacks(n: f64, t: f64) -> f64 {
    let a = libm::pow(1.0 - 2.0 / n, 2.0 * t);
    let b = libm::pow(1.0 - 4.0 / n, t);
    n / 4.0 * (1.0 - a) + n * (n - 1.0) / 4.0 * (b - a)
}

/// Root of `A - exp(-2A)/2 = 3/2` on `[1, 2]`: the Maxwell-Boltzmann
/// threshold coefficient, `t ~ A0 n`.
pub fn mb_threshold_constant() -> f64 {
    let f = |a: f64| a - 0.5 * libm::exp(-2.0 * a) - 1.5;
    let (mut lo, mut hi) = (1.0f64, 2.0f64);
    while hi - lo > 1e-12 {
        let mid = 0.5 * (lo + hi);
        if f(mid) < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// The golden ratio: the Bose-Einstein threshold coefficient.
pub fn be_threshold_constant() -> f64 {
    (1.0 + libm::sqrt(5.0)) / 2.0
}

/// `C(n + t - 1, n - 1)`: the number of compositions of `t` into `n` parts.
pub fn composition_count(n: u64, t: u64) -> BigUint {
    binomial(n + t - 1, n - 1)
}
