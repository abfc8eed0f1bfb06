//! Exact cover by 4-sets, encoded as a cover pebbling instance.
//!
//! Given a ground set of `4n` elements and `m > n` four-element sets, the
//! gadget graph has
//!
//! - an element vertex `T_j` per element (0 pebbles),
//! - a set vertex `B_i` per set (9 pebbles), joined to its four elements,
//! - a chain `B_i - B'_i - B''_i - v` per set, with 1 pebble on each `B'_i`
//!   and `B''_i`,
//! - a collector `v` holding `2^(m-n) - (m-n) + 1` pebbles, and a path of
//!   length `m - n` from `v` to a sink `w` (0 pebbles) whose interior vertices
//!   hold 1 pebble each.
//!
//! The configuration is cover solvable iff the sets contain an exact cover:
//! the `n` cover sets spend 8 pebbles each on their elements, and each of
//! the `m - n` other sets can push exactly one pebble down its chain to `v`,
//! which is what `v` needs to reach `w`.
//!
//! That makes `3n + 4m + 1` vertices and `8m - n` edges.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::graph::{Configuration, Graph};
use crate::solve::{solve_with_budget, verify_certificate, FastPath, MoveCertificate};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct X4CInstance {
    /// `4n`.
    pub ground_set_size: usize,
    pub sets: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InstanceError {
    GroundSetSize(usize),
    SetSize { set: usize, size: usize },
    ElementOutOfRange { set: usize, element: usize },
    RepeatedElement { set: usize, element: usize },
    TooFewSets { sets: usize, needed: usize },
}

impl fmt::Display for InstanceError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            InstanceError::GroundSetSize(s) => {
                write!(f, "ground set size {s} is not a multiple of 4")
            }
            InstanceError::SetSize { set, size } => {
                write!(f, "set {set} has {size} elements, expected 4")
            }
            InstanceError::ElementOutOfRange { set, element } => {
                write!(f, "set {set} contains {element}, outside the ground set")
            }
            InstanceError::RepeatedElement { set, element } => {
                write!(f, "set {set} repeats element {element}")
            }
            InstanceError::TooFewSets { sets, needed } => {
                write!(f, "{sets} sets given, at least {needed} required")
            }
        }
    }
}

impl core::error::Error for InstanceError {}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ReductionError {
    Invalid(Vec<InstanceError>),
    /// The drain path needs `m > n`.
    NotEnoughSets {
        sets: usize,
        n: usize,
    },
    /// `2^(m-n)` pebbles on the collector overflow 64 bits.
    TooManySurplusSets(usize),
}

impl fmt::Display for ReductionError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ReductionError::Invalid(errs) => {
                f.write_str("invalid instance:")?;
                for e in errs {
                    write!(f, " {e};")?;
                }
                Ok(())
            }
            ReductionError::NotEnoughSets { sets, n } => write!(
                f,
                "the gadget needs more sets than n: got {sets} sets with n = {n}"
            ),
            ReductionError::TooManySurplusSets(k) => {
                write!(f, "m - n = {k} makes the collector stack overflow 64 bits")
            }
        }
    }
}

impl core::error::Error for ReductionError {}

impl X4CInstance {
    pub fn new(ground_set_size: usize, sets: Vec<Vec<usize>>) -> Self {
        X4CInstance {
            ground_set_size,
            sets,
        }
    }

    /// Number of sets in a cover, `|S| / 4`.
    pub fn n(&self) -> usize {
        self.ground_set_size / 4
    }

    pub fn m(&self) -> usize {
        self.sets.len()
    }

    pub fn validate(&self) -> Result<(), Vec<InstanceError>> {
        let mut errs = Vec::new();
        if !self.ground_set_size.is_multiple_of(4) {
            errs.push(InstanceError::GroundSetSize(self.ground_set_size));
        }
        for (i, set) in self.sets.iter().enumerate() {
            if set.len() != 4 {
                errs.push(InstanceError::SetSize {
                    set: i,
                    size: set.len(),
                });
            }
            for (k, &e) in set.iter().enumerate() {
                if e >= self.ground_set_size {
                    errs.push(InstanceError::ElementOutOfRange { set: i, element: e });
                } else if set[..k].contains(&e) {
                    errs.push(InstanceError::RepeatedElement { set: i, element: e });
                }
            }
        }
        if self.sets.len() < self.n() {
            errs.push(InstanceError::TooFewSets {
                sets: self.sets.len(),
                needed: self.n(),
            });
        }
        if errs.is_empty() {
            Ok(())
        } else {
            Err(errs)
        }
    }
}

/// What a gadget vertex stands for.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Role {
    /// `T_j`, ground element `j`.
    Element(usize),
    /// `B_i`, set `i`.
    Set(usize),
    /// `B'_i`.
    SetBuffer(usize),
    /// `B''_i`.
    SetRelay(usize),
    /// `v`.
    Collector,
    /// `k`-th interior vertex of the drain path, `1 <= k < m - n`.
    Drain(usize),
    /// `w`.
    Sink,
}

impl fmt::Display for Role {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Role::Element(j) => write!(f, "T_{j}"),
            Role::Set(i) => write!(f, "B_{i}"),
            Role::SetBuffer(i) => write!(f, "B'_{i}"),
            Role::SetRelay(i) => write!(f, "B''_{i}"),
            Role::Collector => f.write_str("v"),
            Role::Drain(k) => write!(f, "path_u_{k}"),
            Role::Sink => f.write_str("w"),
        }
    }
}

/// Vertex numbering of the gadget: elements, sets, buffers, relays,
/// collector, drain interior, sink.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Layout {
    pub n: usize,
    pub m: usize,
}

impl Layout {
    pub fn element(&self, j: usize) -> usize {
        j
    }
    pub fn set(&self, i: usize) -> usize {
        4 * self.n + i
    }
    pub fn buffer(&self, i: usize) -> usize {
        4 * self.n + self.m + i
    }
    pub fn relay(&self, i: usize) -> usize {
        4 * self.n + 2 * self.m + i
    }
    pub fn collector(&self) -> usize {
        4 * self.n + 3 * self.m
    }
    /// `k`-th vertex along the drain, `0` being the collector and `m - n`
    /// the sink.
    pub fn drain(&self, k: usize) -> usize {
        self.collector() + k
    }
    pub fn sink(&self) -> usize {
        self.drain(self.m - self.n)
    }
    pub fn vertex_count(&self) -> usize {
        3 * self.n + 4 * self.m + 1
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionOutput {
    pub graph: Graph,
    pub config: Configuration,
    pub labels: Vec<Role>,
    pub layout: Layout,
}

impl ReductionOutput {
    pub fn label(&self, v: usize) -> String {
        alloc::format!("{}", self.labels[v])
    }
}

/// Builds the gadget graph and configuration.
pub fn build_reduction(x: &X4CInstance) -> Result<ReductionOutput, ReductionError> {
    x.validate().map_err(ReductionError::Invalid)?;
    let (n, m) = (x.n(), x.m());
    if m <= n {
        return Err(ReductionError::NotEnoughSets { sets: m, n });
    }
    let surplus = m - n;
    if surplus >= 64 {
        return Err(ReductionError::TooManySurplusSets(surplus));
    }
    let layout = Layout { n, m };
    let total = layout.vertex_count();

    let mut edges = Vec::with_capacity(8 * m - n);
    let mut labels = Vec::with_capacity(total);
    let mut pebbles = vec![0u64; total];

    labels.extend((0..4 * n).map(Role::Element));
    labels.extend((0..m).map(Role::Set));
    labels.extend((0..m).map(Role::SetBuffer));
    labels.extend((0..m).map(Role::SetRelay));
    labels.push(Role::Collector);
    labels.extend((1..surplus).map(Role::Drain));
    labels.push(Role::Sink);
    debug_assert_eq!(labels.len(), total);

    for (i, set) in x.sets.iter().enumerate() {
        for &e in set {
            edges.push((layout.set(i), layout.element(e)));
        }
        edges.push((layout.set(i), layout.buffer(i)));
        edges.push((layout.buffer(i), layout.relay(i)));
        edges.push((layout.relay(i), layout.collector()));
        pebbles[layout.set(i)] = 9;
        pebbles[layout.buffer(i)] = 1;
        pebbles[layout.relay(i)] = 1;
    }
    for k in 0..surplus {
        edges.push((layout.drain(k), layout.drain(k + 1)));
    }
    for k in 1..surplus {
        pebbles[layout.drain(k)] = 1;
    }
    pebbles[layout.collector()] = (1u64 << surplus) - surplus as u64 + 1;

    let graph = Graph::new(total, &edges).expect("gadget edges are in range and loop-free");
    let config = Configuration::new(pebbles).expect("gadget pebble total fits in 64 bits");
    Ok(ReductionOutput {
        graph,
        config,
        labels,
        layout,
    })
}

/// Indices of `n` disjoint sets covering the ground set, if any exist.
///
/// Exhaustive backtracking: always branches on the smallest uncovered
/// element, over every set containing it. Returned indices are ascending.
pub fn exact_cover_bruteforce(x: &X4CInstance) -> Option<Vec<usize>> {
    let mut covered = vec![false; x.ground_set_size];
    let mut chosen = Vec::new();
    if extend_cover(x, &mut covered, &mut chosen) {
        chosen.sort_unstable();
        Some(chosen)
    } else {
        None
    }
}

fn extend_cover(x: &X4CInstance, covered: &mut [bool], chosen: &mut Vec<usize>) -> bool {
    let Some(first) = covered.iter().position(|&c| !c) else {
        return true;
    };
    for (i, set) in x.sets.iter().enumerate() {
        if !set.contains(&first) || set.iter().any(|&e| covered[e]) {
            continue;
        }
        for &e in set {
            covered[e] = true;
        }
        chosen.push(i);
        if extend_cover(x, covered, chosen) {
            return true;
        }
        chosen.pop();
        for &e in set {
            covered[e] = false;
        }
    }
    false
}

/// The explicit solution for a gadget built from an instance with exact
/// cover `cover`.
///
/// Each cover set sends one pebble to each of its elements. Every other set
/// forwards one pebble to the collector through its chain (4 moves out of
/// `B_i`, 2 out of `B'_i`, 1 out of `B''_i`). The collector then feeds the
/// drain, `2^(k-1-j)` moves across the `j`-th drain edge.
pub fn witness_certificate(
    x: &X4CInstance,
    out: &ReductionOutput,
    cover: &[usize],
) -> MoveCertificate {
    let lay = out.layout;
    let mut cert = MoveCertificate::new();
    for (i, set) in x.sets.iter().enumerate() {
        if cover.contains(&i) {
            for &e in set {
                cert.add(lay.set(i), lay.element(e), 1);
            }
        } else {
            cert.add(lay.set(i), lay.buffer(i), 4);
            cert.add(lay.buffer(i), lay.relay(i), 2);
            cert.add(lay.relay(i), lay.collector(), 1);
        }
    }
    let surplus = lay.m - lay.n;
    for j in 0..surplus {
        cert.add(lay.drain(j), lay.drain(j + 1), 1 << (surplus - 1 - j));
    }
    cert
}

/// How the pebbling side of an equivalence check was decided.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PebblingRoute {
    /// Verified the explicit certificate built from the exact cover.
    Witness,
    Solver(FastPath),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquivalenceReport {
    pub cover: Option<Vec<usize>>,
    /// `None` when the solver ran out of budget.
    pub pebbling_solvable: Option<bool>,
    pub route: PebblingRoute,
    pub nodes: u64,
    pub certificate: Option<MoveCertificate>,
}

impl EquivalenceReport {
    pub fn cover_exists(&self) -> bool {
        self.cover.is_some()
    }

    /// `None` if the pebbling side is undecided.
    pub fn agree(&self) -> Option<bool> {
        self.pebbling_solvable.map(|p| p == self.cover_exists())
    }
}

/// Runs both oracles on `x`: exact cover by search, and cover solvability
/// of the gadget.
///
/// When a cover exists the gadget is decided by verifying the explicit
/// witness certificate; otherwise the general solver runs under `budget`.
pub fn reduction_equivalence_check(
    x: &X4CInstance,
    budget: u64,
) -> Result<EquivalenceReport, ReductionError> {
    let out = build_reduction(x)?;
    let cover = exact_cover_bruteforce(x);
    if let Some(ref chosen) = cover {
        let cert = witness_certificate(x, &out, chosen);
        if verify_certificate(&out.graph, &out.config, &cert) == Ok(true) {
            return Ok(EquivalenceReport {
                cover,
                pebbling_solvable: Some(true),
                route: PebblingRoute::Witness,
                nodes: 0,
                certificate: Some(cert),
            });
        }
    }
    let r = solve_with_budget(&out.graph, &out.config, budget)
        .expect("gadget configuration matches its graph");
    Ok(EquivalenceReport {
        cover,
        pebbling_solvable: r.solvable(),
        route: PebblingRoute::Solver(r.path),
        nodes: r.nodes,
        certificate: r.certificate().cloned(),
    })
}
