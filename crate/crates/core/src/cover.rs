//! Cover pebbling numbers.
//!
//! For a connected graph the cover pebbling number equals the largest
//! stacking weight `sum_u 2^dist(u, v)` over all vertices `v`: the worst
//! starting configuration puts every pebble on one vertex. Weights are exact
//! big integers since `2^diameter` leaves 64-bit range on long paths.

use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CoverError {
    EmptyGraph,
    /// No path joins `u` and `v`.
    Disconnected(usize, usize),
    VertexOutOfRange(usize),
}

impl fmt::Display for CoverError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoverError::EmptyGraph => f.write_str("graph has no vertices"),
            CoverError::Disconnected(u, v) => {
                write!(f, "graph is disconnected: no path between {u} and {v}")
            }
            CoverError::VertexOutOfRange(v) => write!(f, "vertex {v} out of range"),
        }
    }
}

impl core::error::Error for CoverError {}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StackingResult {
    pub lambda: BigUint,
    /// Smallest vertex attaining `lambda`.
    pub argmax: usize,
    pub weights: Vec<BigUint>,
}

/// `sum_u 2^dist(u, v)`.
pub fn stacking_weight(g: &Graph, v: usize) -> Result<BigUint, CoverError> {
    if v >= g.vertex_count() {
        return Err(CoverError::VertexOutOfRange(v));
    }
    let row = g.distances().row(v);
    let mut total = BigUint::zero();
    for (u, &d) in row.iter().enumerate() {
        if d == crate::graph::DistanceMatrix::UNREACHABLE {
            return Err(CoverError::Disconnected(v.min(u), v.max(u)));
        }
        total += BigUint::one() << d;
    }
    Ok(total)
}

/// Cover pebbling number of a connected graph.
pub fn cover_pebbling_number(g: &Graph) -> Result<StackingResult, CoverError> {
    if g.vertex_count() == 0 {
        return Err(CoverError::EmptyGraph);
    }
    if let Some((u, v)) = g.distances().unreachable_pair() {
        return Err(CoverError::Disconnected(u, v));
    }
    let weights = (0..g.vertex_count())
        .map(|v| stacking_weight(g, v))
        .collect::<Result<Vec<_>, _>>()?;
    let mut argmax = 0;
    for (v, w) in weights.iter().enumerate().skip(1) {
        if *w > weights[argmax] {
            argmax = v;
        }
    }
    Ok(StackingResult {
        lambda: weights[argmax].clone(),
        argmax,
        weights,
    })
}
