//! Graphs, pebble configurations and hop distances.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphError {
    /// An edge names a vertex `>= n`.
    EndpointOutOfRange {
        edge: (usize, usize),
        n: usize,
    },
    SelfLoop(usize),
    /// Pebble counts sum past `u64::MAX`.
    PebbleOverflow,
    /// A configuration does not match the graph it is paired with.
    LengthMismatch {
        expected: usize,
        found: usize,
    },
    InvalidFamily(&'static str),
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphError::EndpointOutOfRange { edge, n } => write!(
                f,
                "edge ({}, {}) has an endpoint outside 0..{}",
                edge.0, edge.1, n
            ),
            GraphError::SelfLoop(v) => write!(f, "self-loop at vertex {v}"),
            GraphError::PebbleOverflow => f.write_str("total pebble count overflows 64 bits"),
            GraphError::LengthMismatch { expected, found } => write!(
                f,
                "configuration has {found} entries but the graph has {expected} vertices"
            ),
            GraphError::InvalidFamily(why) => write!(f, "invalid family parameters: {why}"),
        }
    }
}

impl core::error::Error for GraphError {}

/// All-pairs hop distances.
///
/// Unreachable pairs are stored as [`DistanceMatrix::UNREACHABLE`] and read
/// back as `None`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    dist: Vec<u32>,
}

impl DistanceMatrix {
    pub const UNREACHABLE: u32 = u32::MAX;

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    #[inline]
    pub fn get(&self, u: usize, v: usize) -> Option<u32> {
        let d = self.dist[u * self.n + v];
        (d != Self::UNREACHABLE).then_some(d)
    }

    /// Raw row for `v`, with `UNREACHABLE` sentinels.
    #[inline]
    pub fn row(&self, v: usize) -> &[u32] {
        &self.dist[v * self.n..(v + 1) * self.n]
    }

    /// First pair `(u, v)` with `u < v` that has no connecting path.
    pub fn unreachable_pair(&self) -> Option<(usize, usize)> {
        (0..self.n)
            .flat_map(|u| (u + 1..self.n).map(move |v| (u, v)))
            .find(|&(u, v)| self.get(u, v).is_none())
    }

    pub fn is_connected(&self) -> bool {
        self.unreachable_pair().is_none()
    }

    /// Largest finite distance.
    pub fn max_finite(&self) -> u32 {
        self.dist
            .iter()
            .copied()
            .filter(|&d| d != Self::UNREACHABLE)
            .max()
            .unwrap_or(0)
    }
}

/// An undirected simple graph on vertices `0..n`.
///
/// Edges are stored once as `(u, v)` with `u < v`, sorted. Hop distances are
/// computed at construction and never change afterwards.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
    dist: DistanceMatrix,
}

impl Graph {
    /// Builds a graph, dropping duplicate edges (in either orientation).
    pub fn new(n: usize, edge_list: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut edges = Vec::with_capacity(edge_list.len());
        for &(a, b) in edge_list {
            if a >= n || b >= n {
                return Err(GraphError::EndpointOutOfRange { edge: (a, b), n });
            }
            if a == b {
                return Err(GraphError::SelfLoop(a));
            }
            edges.push((a.min(b), a.max(b)));
        }
        edges.sort_unstable();
        edges.dedup();

        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        let dist = bfs_all_pairs(n, &adj);
        Ok(Graph {
            n,
            edges,
            adj,
            dist,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    pub fn distances(&self) -> &DistanceMatrix {
        &self.dist
    }

    pub fn is_connected(&self) -> bool {
        self.dist.is_connected()
    }

    /// Every vertex adjacent to every other one.
    pub fn is_complete(&self) -> bool {
        self.adj.iter().all(|a| a.len() + 1 == self.n)
    }

    /// The same graph with vertex `v` renamed to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph, GraphError> {
        if perm.len() != self.n {
            return Err(GraphError::LengthMismatch {
                expected: self.n,
                found: perm.len(),
            });
        }
        let edges: Vec<_> = self
            .edges
            .iter()
            .map(|&(u, v)| (perm[u], perm[v]))
            .collect();
        Graph::new(self.n, &edges)
    }
}

/// Hop distances between all pairs of vertices.
pub fn distance_matrix(g: &Graph) -> DistanceMatrix {
    g.dist.clone()
}

fn bfs_all_pairs(n: usize, adj: &[Vec<usize>]) -> DistanceMatrix {
    let mut dist = vec![DistanceMatrix::UNREACHABLE; n * n];
    let mut queue = VecDeque::with_capacity(n);
    for s in 0..n {
        let row = &mut dist[s * n..(s + 1) * n];
        row[s] = 0;
        queue.clear();
        queue.push_back(s);
        while let Some(u) = queue.pop_front() {
            let du = row[u];
            for &w in &adj[u] {
                if row[w] == DistanceMatrix::UNREACHABLE {
                    row[w] = du + 1;
                    queue.push_back(w);
                }
            }
        }
    }
    DistanceMatrix { n, dist }
}

/// Pebble counts per vertex, with the total cached.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Configuration {
    pebbles: Vec<u64>,
    total: u64,
}

impl Configuration {
    pub fn new(pebbles: Vec<u64>) -> Result<Self, GraphError> {
        let total = pebbles
            .iter()
            .try_fold(0u64, |acc, &c| acc.checked_add(c))
            .ok_or(GraphError::PebbleOverflow)?;
        Ok(Configuration { pebbles, total })
    }

    pub fn zeros(n: usize) -> Self {
        Configuration {
            pebbles: vec![0; n],
            total: 0,
        }
    }

    pub fn len(&self) -> usize {
        self.pebbles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pebbles.is_empty()
    }

    pub fn total(&self) -> u64 {
        self.total
    }

    pub fn pebbles(&self) -> &[u64] {
        &self.pebbles
    }

    pub fn get(&self, v: usize) -> u64 {
        self.pebbles[v]
    }

    pub fn into_pebbles(self) -> Vec<u64> {
        self.pebbles
    }

    /// Every vertex holds at least one pebble.
    pub fn is_covering(&self) -> bool {
        self.pebbles.iter().all(|&c| c >= 1)
    }

    pub fn check_len(&self, g: &Graph) -> Result<(), GraphError> {
        if self.len() == g.vertex_count() {
            Ok(())
        } else {
            Err(GraphError::LengthMismatch {
                expected: g.vertex_count(),
                found: self.len(),
            })
        }
    }
}

/// Named graph families.
#[derive(Debug, Clone, PartialEq)]
pub enum Family {
    /// `K_n`.
    Complete(usize),
    /// `P_n`, `n` vertices in a line.
    Path(usize),
    /// `C_n`, `n >= 3`.
    Cycle(usize),
    /// Binary `d`-cube: bit strings of length `d`, adjacent at Hamming distance 1.
    Cube(u32),
    /// `K_{r_1, ..., r_m}` with `r_1 >= r_2 >= ... >= r_m >= 1`.
    CompleteMultipartite(Vec<usize>),
    /// Random recursive tree: vertex `i > 0` attaches to a uniform earlier vertex.
    RandomTree { n: usize, seed: u64 },
    /// Erdős–Rényi `G(n, p)`.
    Gnp { n: usize, p: f64, seed: u64 },
}

impl Family {
    pub fn generate(&self) -> Result<Graph, GraphError> {
        match *self {
            Family::Complete(n) => {
                if n == 0 {
                    return Err(GraphError::InvalidFamily("K_n needs n >= 1"));
                }
                let edges: Vec<_> = (0..n)
                    .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                    .collect();
                Graph::new(n, &edges)
            }
            Family::Path(n) => {
                if n == 0 {
                    return Err(GraphError::InvalidFamily("P_n needs n >= 1"));
                }
                let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
                Graph::new(n, &edges)
            }
            Family::Cycle(n) => {
                if n < 3 {
                    return Err(GraphError::InvalidFamily("C_n needs n >= 3"));
                }
                let edges: Vec<_> = (0..n).map(|v| (v, (v + 1) % n)).collect();
                Graph::new(n, &edges)
            }
            Family::Cube(d) => {
                if d > 16 {
                    return Err(GraphError::InvalidFamily("cube dimension above 16"));
                }
                let n = 1usize << d;
                let edges: Vec<_> = (0..n)
                    .flat_map(|u| {
                        (0..d)
                            .map(move |b| (u, u ^ (1 << b)))
                            .filter(|&(u, v)| u < v)
                    })
                    .collect();
                Graph::new(n, &edges)
            }
            Family::CompleteMultipartite(ref parts) => {
                if parts.is_empty() || parts.contains(&0) {
                    return Err(GraphError::InvalidFamily(
                        "parts must be non-empty and positive",
                    ));
                }
                if parts.windows(2).any(|w| w[0] < w[1]) {
                    return Err(GraphError::InvalidFamily("parts must be sorted descending"));
                }
                let mut part_of = Vec::new();
                for (i, &r) in parts.iter().enumerate() {
                    part_of.extend(core::iter::repeat_n(i, r));
                }
                let n = part_of.len();
                let part_of = &part_of;
                let edges: Vec<_> = (0..n)
                    .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                    .filter(|&(u, v)| part_of[u] != part_of[v])
                    .collect();
                Graph::new(n, &edges)
            }
            Family::RandomTree { n, seed } => {
                if n == 0 {
                    return Err(GraphError::InvalidFamily("tree needs n >= 1"));
                }
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                let edges: Vec<_> = (1..n).map(|v| (rng.random_range(0..v), v)).collect();
                Graph::new(n, &edges)
            }
            Family::Gnp { n, p, seed } => {
                if n == 0 {
                    return Err(GraphError::InvalidFamily("G(n,p) needs n >= 1"));
                }
                if !(0.0..=1.0).contains(&p) {
                    return Err(GraphError::InvalidFamily("p must lie in [0, 1]"));
                }
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                let mut edges = Vec::new();
                for u in 0..n {
                    for v in u + 1..n {
                        if rng.random_bool(p) {
                            edges.push((u, v));
                        }
                    }
                }
                Graph::new(n, &edges)
            }
        }
    }
}
