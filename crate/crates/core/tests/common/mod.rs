#![allow(dead_code)]

use pebbling_core::{Configuration, Graph};
use rand::seq::SliceRandom;
use rand::Rng;

/// Random connected graph on `n` vertices: a random spanning tree plus each
/// remaining pair with probability `extra`.
pub fn random_connected<R: Rng>(rng: &mut R, n: usize, extra: f64) -> Graph {
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut edges = Vec::new();
    for i in 1..n {
        edges.push((order[rng.random_range(0..i)], order[i]));
    }
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(extra) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, &edges).unwrap()
}

/// Uniformly random placement of `t` labelled pebbles.
pub fn random_config<R: Rng>(rng: &mut R, n: usize, t: u64) -> Configuration {
    let mut c = vec![0u64; n];
    for _ in 0..t {
        c[rng.random_range(0..n)] += 1;
    }
    Configuration::new(c).unwrap()
}

/// Every composition of `t` into `n` non-negative parts.
pub fn compositions(n: usize, t: u64) -> Vec<Vec<u64>> {
    fn rec(n: usize, t: u64, prefix: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if n == 1 {
            prefix.push(t);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for k in 0..=t {
            prefix.push(k);
            rec(n - 1, t - k, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        rec(n, t, &mut Vec::new(), &mut out);
    }
    out
}
