//! Cover solvability.
//!
//! A configuration is cover solvable exactly when there are non-negative
//! move counts `n_ij`, positive only on edges, with
//! `C(k) + sum_l n_lk - 2 * sum_l n_kl >= 1` for every vertex `k`. Such a
//! [`MoveCertificate`] is checked in linear time by [`verify_certificate`]
//! and turned into a legal move order by [`execute_certificate`].
//!
//! [`solve`] decides solvability exactly. Complete graphs use the odd-stack
//! criterion `X + t >= 2n`; everything else goes through a memoized
//! depth-first search over configurations. Because the order of moves never
//! matters, a configuration is the whole search state, and since every move
//! burns one pebble the state graph is acyclic with depth at most `t - n`.
//!
//! The search prunes with two necessary conditions:
//!
//! - at least one move must land on every empty vertex, so
//!   `t - n >= #empty`;
//! - for each target `v` the potential `sum_u C(u) 2^-dist(u,v)` never
//!   increases under a move, and a covering configuration has potential at
//!   least `sum_u 2^-dist(u,v)`, so any state below that is dead.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use hashbrown::{HashMap, HashSet};

use crate::cover::cover_pebbling_number;
use crate::graph::{Configuration, Graph, GraphError};

/// Default limit on expanded search nodes.
pub const DEFAULT_BUDGET: u64 = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SolveError {
    EmptyGraph,
    /// Configuration or certificate does not fit the graph.
    DimensionMismatch {
        vertices: usize,
        found: usize,
    },
    /// Move `index` of a sequence is not legal when reached.
    IllegalMove {
        index: usize,
        from: usize,
        to: usize,
    },
    /// The certificate fails verification.
    InvalidCertificate,
    /// Greedy execution stopped with moves outstanding.
    Stalled {
        remaining: u64,
    },
}

impl fmt::Display for SolveError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SolveError::EmptyGraph => f.write_str("graph has no vertices"),
            SolveError::DimensionMismatch { vertices, found } => write!(
                f,
                "dimension mismatch: graph has {vertices} vertices, input refers to {found}"
            ),
            SolveError::IllegalMove { index, from, to } => {
                write!(f, "move #{index} ({from} -> {to}) is not legal")
            }
            SolveError::InvalidCertificate => f.write_str("certificate does not verify"),
            SolveError::Stalled { remaining } => {
                write!(f, "execution stalled with {remaining} moves outstanding")
            }
        }
    }
}

impl core::error::Error for SolveError {}

impl From<GraphError> for SolveError {
    fn from(e: GraphError) -> Self {
        match e {
            GraphError::LengthMismatch { expected, found } => SolveError::DimensionMismatch {
                vertices: expected,
                found,
            },
            _ => SolveError::InvalidCertificate,
        }
    }
}

/// Parity bookkeeping for a configuration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OddStackSummary {
    /// `X`: vertices holding an odd number of pebbles.
    pub odd_count: usize,
    /// `E`: vertices holding an even number, zero included.
    pub even_count: usize,
    pub total: u64,
    /// `Y_i`: how many vertices hold exactly `i` pebbles (non-zero entries only).
    pub histogram: BTreeMap<u64, usize>,
}

pub fn odd_stack_summary(c: &Configuration) -> OddStackSummary {
    let mut histogram = BTreeMap::new();
    let mut odd_count = 0;
    for &p in c.pebbles() {
        odd_count += (p & 1) as usize;
        *histogram.entry(p).or_insert(0) += 1;
    }
    OddStackSummary {
        odd_count,
        even_count: c.len() - odd_count,
        total: c.total(),
        histogram,
    }
}

/// `X + t >= 2n` with `X` odd stacks and `t` pebbles on `K_n`.
#[inline]
pub fn odd_stack_rule_holds(n: usize, odd_count: usize, total: u64) -> bool {
    (odd_count as u128) + u128::from(total) >= 2 * n as u128
}

/// Cover solvability of `c` on the complete graph `K_n`.
///
/// # Panics
/// If `c.len() != n`.
pub fn complete_graph_solvable(n: usize, c: &Configuration) -> bool {
    assert_eq!(c.len(), n, "configuration length must equal n");
    let odd = c.pebbles().iter().filter(|&&p| p & 1 == 1).count();
    odd_stack_rule_holds(n, odd, c.total())
}

/// Move counts `n_ij` for ordered vertex pairs.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct MoveCertificate {
    moves: BTreeMap<(usize, usize), u64>,
}

impl MoveCertificate {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds `count` moves from `from` to `to`.
    pub fn add(&mut self, from: usize, to: usize, count: u64) {
        if count > 0 {
            *self.moves.entry((from, to)).or_insert(0) += count;
        }
    }

    pub fn from_sequence(seq: &[(usize, usize)]) -> Self {
        let mut cert = Self::new();
        for &(i, j) in seq {
            cert.add(i, j, 1);
        }
        cert
    }

    pub fn get(&self, from: usize, to: usize) -> u64 {
        self.moves.get(&(from, to)).copied().unwrap_or(0)
    }

    /// `(from, to, count)` in lexicographic order, positive counts only.
    pub fn iter(&self) -> impl Iterator<Item = (usize, usize, u64)> + '_ {
        self.moves.iter().map(|(&(i, j), &c)| (i, j, c))
    }

    pub fn total_moves(&self) -> u64 {
        self.moves.values().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.moves.is_empty()
    }

    fn max_vertex(&self) -> Option<usize> {
        self.moves.keys().map(|&(i, j)| i.max(j)).max()
    }
}

impl FromIterator<(usize, usize, u64)> for MoveCertificate {
    fn from_iter<I: IntoIterator<Item = (usize, usize, u64)>>(iter: I) -> Self {
        let mut cert = Self::new();
        for (i, j, c) in iter {
            cert.add(i, j, c);
        }
        cert
    }
}

fn check_dims(g: &Graph, c: &Configuration) -> Result<(), SolveError> {
    if c.len() != g.vertex_count() {
        return Err(SolveError::DimensionMismatch {
            vertices: g.vertex_count(),
            found: c.len(),
        });
    }
    Ok(())
}

/// Checks a move certificate against `(g, c)`.
///
/// True iff every positive count sits on an edge and every vertex ends with
/// at least one pebble. Linear in the size of the certificate plus `n`.
pub fn verify_certificate(
    g: &Graph,
    c: &Configuration,
    m: &MoveCertificate,
) -> Result<bool, SolveError> {
    check_dims(g, c)?;
    let n = g.vertex_count();
    if let Some(v) = m.max_vertex().filter(|&v| v >= n) {
        return Err(SolveError::DimensionMismatch {
            vertices: n,
            found: v + 1,
        });
    }
    let mut balance: Vec<i128> = c.pebbles().iter().map(|&p| i128::from(p)).collect();
    for (i, j, count) in m.iter() {
        if !g.has_edge(i, j) {
            return Ok(false);
        }
        balance[i] -= 2 * i128::from(count);
        balance[j] += i128::from(count);
    }
    Ok(balance.iter().all(|&b| b >= 1))
}

/// Orders the moves of a valid certificate into a legal sequence.
///
/// Greedy: keep making any outstanding move whose source holds two or more
/// pebbles. For a valid certificate this never stalls.
pub fn execute_certificate(
    g: &Graph,
    c: &Configuration,
    m: &MoveCertificate,
) -> Result<Vec<(usize, usize)>, SolveError> {
    if !verify_certificate(g, c, m)? {
        return Err(SolveError::InvalidCertificate);
    }
    let mut pebbles = c.pebbles().to_vec();
    let mut pending: Vec<(usize, usize, u64)> = m.iter().collect();
    let mut seq = Vec::with_capacity(m.total_moves().min(1 << 20) as usize);
    loop {
        let mut progressed = false;
        for (i, j, left) in pending.iter_mut() {
            while *left > 0 && pebbles[*i] >= 2 {
                pebbles[*i] -= 2;
                pebbles[*j] += 1;
                *left -= 1;
                seq.push((*i, *j));
                progressed = true;
            }
        }
        pending.retain(|&(_, _, left)| left > 0);
        if pending.is_empty() {
            break;
        }
        if !progressed {
            return Err(SolveError::Stalled {
                remaining: pending.iter().map(|p| p.2).sum(),
            });
        }
    }
    debug_assert!(pebbles.iter().all(|&p| p >= 1));
    Ok(seq)
}

/// Replays a move sequence, rejecting the first illegal move.
pub fn apply_moves(
    g: &Graph,
    c: &Configuration,
    seq: &[(usize, usize)],
) -> Result<Configuration, SolveError> {
    check_dims(g, c)?;
    let mut pebbles = c.pebbles().to_vec();
    for (index, &(from, to)) in seq.iter().enumerate() {
        if !g.has_edge(from, to) || pebbles[from] < 2 {
            return Err(SolveError::IllegalMove { index, from, to });
        }
        pebbles[from] -= 2;
        pebbles[to] += 1;
    }
    Ok(Configuration::new(pebbles)?)
}

/// How [`solve`] reached its answer.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FastPath {
    /// Odd-stack criterion on a complete graph.
    OddStackRule,
    /// At least as many pebbles as the cover pebbling number.
    StackingBound,
    /// Already covered.
    AllCovered,
    /// Fewer spare pebbles than empty vertices.
    TrivialDeficit,
    /// Some vertex fails the distance-weighted potential bound.
    WeightBound,
    Search,
}

impl FastPath {
    pub fn as_str(self) -> &'static str {
        match self {
            FastPath::OddStackRule => "lemma1",
            FastPath::StackingBound => "stacking-bound",
            FastPath::AllCovered => "all-covered",
            FastPath::TrivialDeficit => "trivial-deficit",
            FastPath::WeightBound => "weight-bound",
            FastPath::Search => "search",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Solvable(MoveCertificate),
    Unsolvable,
    /// The node budget ran out first. Never a claim about solvability.
    Undecided,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveResult {
    pub outcome: Outcome,
    pub path: FastPath,
    pub nodes: u64,
}

impl SolveResult {
    /// `None` when undecided.
    pub fn solvable(&self) -> Option<bool> {
        match self.outcome {
            Outcome::Solvable(_) => Some(true),
            Outcome::Unsolvable => Some(false),
            Outcome::Undecided => None,
        }
    }

    pub fn certificate(&self) -> Option<&MoveCertificate> {
        match &self.outcome {
            Outcome::Solvable(m) => Some(m),
            _ => None,
        }
    }
}

/// Decides cover solvability with [`DEFAULT_BUDGET`].
pub fn solve(g: &Graph, c: &Configuration) -> Result<SolveResult, SolveError> {
    solve_with_budget(g, c, DEFAULT_BUDGET)
}

/// Decides cover solvability, expanding at most `budget` search nodes.
///
/// A disconnected graph is solvable iff each component is; components are
/// solved independently.
pub fn solve_with_budget(
    g: &Graph,
    c: &Configuration,
    budget: u64,
) -> Result<SolveResult, SolveError> {
    check_dims(g, c)?;
    if g.vertex_count() == 0 {
        return Err(SolveError::EmptyGraph);
    }
    if c.is_covering() {
        return Ok(SolveResult {
            outcome: Outcome::Solvable(MoveCertificate::new()),
            path: FastPath::AllCovered,
            nodes: 0,
        });
    }
    if g.is_connected() {
        return Ok(solve_connected(g, c, budget));
    }

    let components = components(g);
    let mut cert = MoveCertificate::new();
    let mut nodes = 0;
    let mut undecided = false;
    for verts in components {
        let (sub, sub_c) = induced(g, c, &verts);
        let r = solve_connected(&sub, &sub_c, budget.saturating_sub(nodes));
        nodes += r.nodes;
        match r.outcome {
            Outcome::Solvable(m) => {
                for (i, j, k) in m.iter() {
                    cert.add(verts[i], verts[j], k);
                }
            }
            Outcome::Unsolvable => {
                return Ok(SolveResult {
                    outcome: Outcome::Unsolvable,
                    path: r.path,
                    nodes,
                })
            }
            Outcome::Undecided => undecided = true,
        }
    }
    Ok(SolveResult {
        outcome: if undecided {
            Outcome::Undecided
        } else {
            Outcome::Solvable(cert)
        },
        path: FastPath::Search,
        nodes,
    })
}

fn components(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.vertex_count();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        let row = g.distances().row(s);
        let verts: Vec<usize> = (0..n)
            .filter(|&v| row[v] != crate::graph::DistanceMatrix::UNREACHABLE)
            .collect();
        for &v in &verts {
            seen[v] = true;
        }
        out.push(verts);
    }
    out
}

fn induced(g: &Graph, c: &Configuration, verts: &[usize]) -> (Graph, Configuration) {
    let mut index = vec![usize::MAX; g.vertex_count()];
    for (k, &v) in verts.iter().enumerate() {
        index[v] = k;
    }
    let edges: Vec<_> = g
        .edges()
        .iter()
        .filter(|&&(u, _)| index[u] != usize::MAX)
        .map(|&(u, v)| (index[u], index[v]))
        .collect();
    let sub = Graph::new(verts.len(), &edges).expect("induced subgraph is valid");
    let pebbles = verts.iter().map(|&v| c.get(v)).collect();
    (
        sub,
        Configuration::new(pebbles).expect("sub-sum cannot overflow"),
    )
}

fn solve_connected(g: &Graph, c: &Configuration, budget: u64) -> SolveResult {
    let n = g.vertex_count();
    let done = |outcome, path, nodes| SolveResult {
        outcome,
        path,
        nodes,
    };
    if c.is_covering() {
        return done(
            Outcome::Solvable(MoveCertificate::new()),
            FastPath::AllCovered,
            0,
        );
    }
    let empty = c.pebbles().iter().filter(|&&p| p == 0).count() as u64;
    let n64 = n as u64;
    if c.total() < n64 || c.total() - n64 < empty {
        return done(Outcome::Unsolvable, FastPath::TrivialDeficit, 0);
    }
    if g.is_complete() {
        return if complete_graph_solvable(n, c) {
            done(
                Outcome::Solvable(complete_graph_certificate(c)),
                FastPath::OddStackRule,
                0,
            )
        } else {
            done(Outcome::Unsolvable, FastPath::OddStackRule, 0)
        };
    }

    let search = Search::new(g);
    let mut path = FastPath::Search;
    let lambda = cover_pebbling_number(g)
        .expect("connected, non-empty")
        .lambda;
    if num_bigint::BigUint::from(c.total()) >= lambda {
        path = FastPath::StackingBound;
    } else if !search.viable(c.pebbles()) {
        return done(Outcome::Unsolvable, FastPath::WeightBound, 0);
    }
    let (outcome, nodes) = search.run(c.pebbles(), budget);
    debug_assert!(path != FastPath::StackingBound || outcome != Outcome::Unsolvable);
    done(outcome, path, nodes)
}

/// Certificate for a configuration on `K_n` satisfying `X + t >= 2n`: each
/// vertex with `c >= 2` pebbles feeds `(c - 1) / 2` empty vertices directly.
fn complete_graph_certificate(c: &Configuration) -> MoveCertificate {
    let mut cert = MoveCertificate::new();
    let mut donors = c
        .pebbles()
        .iter()
        .enumerate()
        .filter(|&(_, &p)| p >= 3)
        .map(|(v, &p)| (v, (p - 1) / 2));
    let mut current = donors.next();
    for (target, _) in c.pebbles().iter().enumerate().filter(|&(_, &p)| p == 0) {
        while let Some((_, 0)) = current {
            current = donors.next();
        }
        let (donor, spare) = current
            .as_mut()
            .expect("odd-stack criterion guarantees donors");
        cert.add(*donor, target, 1);
        *spare -= 1;
    }
    cert
}

/// Memoized depth-first search over configurations of a connected graph.
struct Search<'a> {
    g: &'a Graph,
    /// `layers[v][d]`: vertices at distance `d` from `v`.
    layers: Vec<Vec<Vec<usize>>>,
}

impl<'a> Search<'a> {
    fn new(g: &'a Graph) -> Self {
        let n = g.vertex_count();
        let layers = (0..n)
            .map(|v| {
                let row = g.distances().row(v);
                let depth = row.iter().copied().max().unwrap_or(0) as usize;
                let mut layers = vec![Vec::new(); depth + 1];
                for (u, &d) in row.iter().enumerate() {
                    layers[d as usize].push(u);
                }
                layers
            })
            .collect();
        Search { g, layers }
    }

    /// Necessary conditions for solvability; see the module docs.
    fn viable(&self, pebbles: &[u64]) -> bool {
        let n = pebbles.len() as u64;
        let total: u64 = pebbles.iter().sum();
        let empty = pebbles.iter().filter(|&&p| p == 0).count() as u64;
        if total < n || total - n < empty {
            return false;
        }
        self.layers.iter().all(|layers| {
            // floor(sum_d x_d 2^-d) by Horner from the outermost layer,
            // where x_d = sum over layer d of (C(u) - 1).
            let mut acc: i128 = 0;
            for layer in layers.iter().rev() {
                let x: i128 = layer.iter().map(|&u| i128::from(pebbles[u]) - 1).sum();
                acc = x + acc.div_euclid(2);
            }
            acc >= 0
        })
    }

    fn moves(&self, pebbles: &[u64]) -> Vec<(usize, usize)> {
        let g = self.g;
        let empties: Vec<usize> = (0..pebbles.len()).filter(|&v| pebbles[v] == 0).collect();
        let gap = |v: usize| {
            let row = g.distances().row(v);
            empties.iter().map(|&e| row[e]).min().unwrap_or(0)
        };
        let mut moves: Vec<(usize, usize)> = (0..pebbles.len())
            .filter(|&u| pebbles[u] >= 2)
            .flat_map(|u| g.neighbors(u).iter().map(move |&v| (u, v)))
            .collect();
        // Fill empty vertices first, then draw on the tallest stacks, then
        // head toward the nearest hole.
        moves.sort_by_key(|&(u, v)| {
            (
                pebbles[v] != 0,
                core::cmp::Reverse(pebbles[u]),
                gap(v),
                u,
                v,
            )
        });
        moves
    }

    fn run(&self, start: &[u64], budget: u64) -> (Outcome, u64) {
        struct Frame {
            moves: Vec<(usize, usize)>,
            next: usize,
        }

        let mut state = start.to_vec();
        let mut dead: HashSet<Vec<u8>> = HashSet::new();
        let mut path: Vec<(usize, usize)> = Vec::new();
        let mut nodes = 1u64;
        let mut frames = vec![Frame {
            moves: self.moves(&state),
            next: 0,
        }];

        while let Some(top) = frames.last_mut() {
            if top.next == top.moves.len() {
                dead.insert(encode(&state));
                frames.pop();
                if let Some((u, v)) = path.pop() {
                    state[u] += 2;
                    state[v] -= 1;
                }
                continue;
            }
            let (u, v) = top.moves[top.next];
            top.next += 1;
            state[u] -= 2;
            state[v] += 1;
            if state.iter().all(|&p| p >= 1) {
                path.push((u, v));
                return (
                    Outcome::Solvable(MoveCertificate::from_sequence(&path)),
                    nodes,
                );
            }
            if !self.viable(&state) || dead.contains(&encode(&state)) {
                state[u] += 2;
                state[v] -= 1;
                continue;
            }
            if nodes >= budget {
                return (Outcome::Undecided, nodes);
            }
            nodes += 1;
            path.push((u, v));
            frames.push(Frame {
                moves: self.moves(&state),
                next: 0,
            });
        }
        (Outcome::Unsolvable, nodes)
    }
}

/// LEB128 encoding of a pebble vector, used as a compact memo key.
fn encode(pebbles: &[u64]) -> Vec<u8> {
    let mut out = Vec::with_capacity(pebbles.len() + 4);
    for &p in pebbles {
        let mut p = p;
        loop {
            let byte = (p & 0x7f) as u8;
            p >>= 7;
            if p == 0 {
                out.push(byte);
                break;
            }
            out.push(byte | 0x80);
        }
    }
    out
}

/// Exhaustive reference decision: tries every legal move from every
/// reachable configuration, with memoization and nothing else.
///
/// Meant for tiny inputs (a handful of vertices, a dozen or so pebbles).
pub fn solve_bruteforce(g: &Graph, c: &Configuration) -> Result<bool, SolveError> {
    check_dims(g, c)?;
    let mut memo = HashMap::new();
    let mut state = c.pebbles().to_vec();
    Ok(reachable_cover(g, &mut state, &mut memo))
}

fn reachable_cover(g: &Graph, state: &mut Vec<u64>, memo: &mut HashMap<Vec<u64>, bool>) -> bool {
    if state.iter().all(|&p| p >= 1) {
        return true;
    }
    if let Some(&known) = memo.get(state.as_slice()) {
        return known;
    }
    let mut found = false;
    'outer: for &(a, b) in g.edges() {
        for (from, to) in [(a, b), (b, a)] {
            if state[from] >= 2 {
                state[from] -= 2;
                state[to] += 1;
                found = reachable_cover(g, state, memo);
                state[from] += 2;
                state[to] -= 1;
                if found {
                    break 'outer;
                }
            }
        }
    }
    memo.insert(state.clone(), found);
    found
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Family;

    fn cfg(p: &[u64]) -> Configuration {
        Configuration::new(p.to_vec()).unwrap()
    }

    #[test]
    fn summaries() {
        let s = odd_stack_summary(&cfg(&[1, 1, 1]));
        assert_eq!((s.odd_count, s.even_count, s.total), (3, 0, 3));
        let s = odd_stack_summary(&cfg(&[2, 0, 4]));
        assert_eq!((s.odd_count, s.even_count, s.total), (0, 3, 6));
        let s = odd_stack_summary(&cfg(&[3, 0, 0]));
        assert_eq!((s.odd_count, s.even_count, s.total), (1, 2, 3));
        assert_eq!(s.histogram.get(&0), Some(&2));
        assert_eq!(s.histogram.get(&3), Some(&1));
    }

    #[test]
    fn odd_stack_criterion_cases() {
        assert!(complete_graph_solvable(3, &cfg(&[5, 0, 0])));
        assert!(complete_graph_solvable(3, &cfg(&[1, 1, 1])));
        assert!(!complete_graph_solvable(3, &cfg(&[2, 2, 0])));
        assert!(!complete_graph_solvable(3, &cfg(&[3, 0, 0])));
    }

    #[test]
    fn verify_examples() {
        let k2 = Family::Complete(2).generate().unwrap();
        let m: MoveCertificate = [(0, 1, 1)].into_iter().collect();
        assert!(verify_certificate(&k2, &cfg(&[3, 0]), &m).unwrap());
        assert!(!verify_certificate(&k2, &cfg(&[2, 0]), &m).unwrap());

        let p3 = Family::Path(3).generate().unwrap();
        assert!(verify_certificate(&p3, &cfg(&[1, 1, 1]), &MoveCertificate::new()).unwrap());
        let jump: MoveCertificate = [(0, 2, 1)].into_iter().collect();
        assert!(!verify_certificate(&p3, &cfg(&[7, 0, 0]), &jump).unwrap());
    }

    #[test]
    fn verify_dimension_errors() {
        let k2 = Family::Complete(2).generate().unwrap();
        assert!(matches!(
            verify_certificate(&k2, &cfg(&[1, 1, 1]), &MoveCertificate::new()),
            Err(SolveError::DimensionMismatch { .. })
        ));
        let far: MoveCertificate = [(0, 5, 1)].into_iter().collect();
        assert!(matches!(
            verify_certificate(&k2, &cfg(&[3, 0]), &far),
            Err(SolveError::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn execute_examples() {
        let p3 = Family::Path(3).generate().unwrap();
        let c = cfg(&[7, 0, 0]);
        let m: MoveCertificate = [(0, 1, 3), (1, 2, 1)].into_iter().collect();
        let seq = execute_certificate(&p3, &c, &m).unwrap();
        assert_eq!(seq.len(), 4);
        assert_eq!(apply_moves(&p3, &c, &seq).unwrap().pebbles(), &[1, 1, 1]);

        assert!(
            execute_certificate(&p3, &cfg(&[1, 1, 1]), &MoveCertificate::new())
                .unwrap()
                .is_empty()
        );

        let k2 = Family::Complete(2).generate().unwrap();
        let m: MoveCertificate = [(0, 1, 1)].into_iter().collect();
        let seq = execute_certificate(&k2, &cfg(&[3, 0]), &m).unwrap();
        assert_eq!(seq, vec![(0, 1)]);
        assert_eq!(
            execute_certificate(&k2, &cfg(&[2, 0]), &m),
            Err(SolveError::InvalidCertificate)
        );
    }

    #[test]
    fn execute_orders_relay_moves() {
        // (1 -> 2) is listed first but only becomes legal after (0 -> 1) x2.
        let p3 = Family::Path(3).generate().unwrap();
        let c = cfg(&[5, 0, 0]);
        let m: MoveCertificate = [(0, 1, 2), (1, 2, 1)].into_iter().collect();
        assert!(!verify_certificate(&p3, &c, &m).unwrap());
        let c = cfg(&[5, 1, 0]);
        let seq = execute_certificate(&p3, &c, &m).unwrap();
        assert_eq!(seq, vec![(0, 1), (0, 1), (1, 2)]);
    }

    #[test]
    fn apply_moves_examples() {
        let k2 = Family::Complete(2).generate().unwrap();
        let c = cfg(&[4, 0]);
        assert_eq!(
            apply_moves(&k2, &c, &[(0, 1), (0, 1)]).unwrap().pebbles(),
            &[0, 2]
        );
        assert_eq!(apply_moves(&k2, &c, &[]).unwrap(), c);
        assert_eq!(
            apply_moves(&k2, &cfg(&[1, 0]), &[(0, 1)]),
            Err(SolveError::IllegalMove {
                index: 0,
                from: 0,
                to: 1
            })
        );
        let p3 = Family::Path(3).generate().unwrap();
        assert!(apply_moves(&p3, &cfg(&[4, 0, 0]), &[(0, 2)]).is_err());
    }

    #[test]
    fn solve_examples() {
        let k3 = Family::Complete(3).generate().unwrap();
        let r = solve(&k3, &cfg(&[5, 0, 0])).unwrap();
        assert_eq!(r.solvable(), Some(true));
        assert_eq!(r.path, FastPath::OddStackRule);
        assert!(verify_certificate(&k3, &cfg(&[5, 0, 0]), r.certificate().unwrap()).unwrap());

        let p3 = Family::Path(3).generate().unwrap();
        assert_eq!(
            solve(&p3, &cfg(&[6, 0, 0])).unwrap().solvable(),
            Some(false)
        );
        let r = solve(&p3, &cfg(&[7, 0, 0])).unwrap();
        let want: MoveCertificate = [(0, 1, 3), (1, 2, 1)].into_iter().collect();
        assert_eq!(r.certificate(), Some(&want));
        assert_eq!(r.path, FastPath::StackingBound);
    }

    #[test]
    fn solve_fast_paths() {
        let p3 = Family::Path(3).generate().unwrap();
        assert_eq!(
            solve(&p3, &cfg(&[1, 1, 1])).unwrap().path,
            FastPath::AllCovered
        );
        assert_eq!(
            solve(&p3, &cfg(&[2, 0, 0])).unwrap().path,
            FastPath::TrivialDeficit
        );
        // Enough spare pebbles, but 3 pebbles at the far end can't reach 0.
        let p4 = Family::Path(4).generate().unwrap();
        let r = solve(&p4, &cfg(&[0, 1, 1, 3])).unwrap();
        assert_eq!(r.solvable(), Some(false));
        assert_eq!(r.path, FastPath::WeightBound);
    }

    #[test]
    fn solve_disconnected_per_component() {
        let g = Graph::new(4, &[(0, 1), (2, 3)]).unwrap();
        let r = solve(&g, &cfg(&[3, 0, 0, 3])).unwrap();
        let m = r.certificate().unwrap();
        assert!(verify_certificate(&g, &cfg(&[3, 0, 0, 3]), m).unwrap());
        assert_eq!(
            solve(&g, &cfg(&[5, 0, 0, 1])).unwrap().solvable(),
            Some(false)
        );
        let lone = Graph::new(2, &[]).unwrap();
        assert_eq!(solve(&lone, &cfg(&[9, 0])).unwrap().solvable(), Some(false));
    }

    #[test]
    fn bruteforce_examples() {
        let k2 = Family::Complete(2).generate().unwrap();
        assert!(!solve_bruteforce(&k2, &cfg(&[2, 0])).unwrap());
        assert!(solve_bruteforce(&k2, &cfg(&[3, 0])).unwrap());
        let k1 = Family::Complete(1).generate().unwrap();
        assert!(solve_bruteforce(&k1, &cfg(&[1])).unwrap());
        assert!(!solve_bruteforce(&k1, &cfg(&[0])).unwrap());
    }

    #[test]
    fn encode_is_injective_on_samples() {
        let a = encode(&[128, 1]);
        let b = encode(&[0, 1, 1]);
        assert_ne!(a, b);
        assert_eq!(encode(&[300]), vec![0xac, 0x02]);
    }
}
