//! Cover pebbling on finite simple graphs.
//!
//! A pebbling move removes two pebbles from a vertex and places one of them
//! on a neighbour. A configuration is *cover solvable* when some sequence of
//! moves leaves at least one pebble on every vertex at once. This crate
//! provides:
//!
//! - [`graph`]: graphs, configurations, hop distances and standard families;
//! - [`cover`]: the cover pebbling number via stacking weights;
//! - [`solve`]: odd-stack bookkeeping, move certificates, an exact solver and
//!   a brute-force reference oracle;
//! - [`random`]: Maxwell-Boltzmann and Bose-Einstein configuration samplers,
//!   exact odd-stack distributions and the two complete-graph threshold
//!   constants;
//! - [`threshold`]: Monte Carlo estimation of solvability probabilities on
//!   complete graphs;
//! - [`reduction`]: the exact-cover-by-4-sets gadget and its oracles.
//!
//! The crate is `no_std` and only needs `alloc`. File formats, the parallel
//! sweep driver and the command-line tool live in the `pebbling` crate.
#![no_std]
#![deny(unsafe_code)]

extern crate alloc;

pub mod cover;
pub mod exact;
pub mod graph;
pub mod random;
pub mod reduction;
pub mod solve;
pub mod threshold;

pub use cover::{cover_pebbling_number, stacking_weight, CoverError, StackingResult};
pub use exact::Ratio;
pub use graph::{distance_matrix, Configuration, DistanceMatrix, Family, Graph, GraphError};
pub use random::{RandomModel, SeededStream};
pub use solve::{
    apply_moves, complete_graph_solvable, execute_certificate, odd_stack_summary, solve,
    solve_bruteforce, solve_with_budget, verify_certificate, FastPath, MoveCertificate,
    OddStackSummary, Outcome, SolveError, SolveResult, DEFAULT_BUDGET,
};
