//! Vertex connectivity and minimum separating sets.
//!
//! Pairwise cuts come from a max-flow on the vertex-split digraph; the
//! exhaustive subset search in [`kappa_bruteforce`] is kept alongside as an
//! oracle.

use std::collections::VecDeque;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{sorted_set, Graph, Vertex};

/// Default order limit for [`kappa_bruteforce`].
pub const KAPPA_BRUTEFORCE_LIMIT: usize = 12;

/// A vertex set whose removal leaves the host graph disconnected or with a
/// single vertex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SeparatingSet {
    pub vertices: Vec<Vertex>,
    pub host_size: usize,
}

impl SeparatingSet {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Re-checks the separating property against `host`.
    pub fn is_valid_for(&self, host: &Graph) -> bool {
        self.host_size == host.order() && is_separating(host, &self.vertices)
    }
}

/// True when `g - set` is disconnected or consists of exactly one vertex.
pub fn is_separating(g: &Graph, set: &[Vertex]) -> bool {
    if g.check_vertices(set).is_err() {
        return false;
    }
    let set = sorted_set(set);
    match g.order() - set.len() {
        0 => false,
        1 => true,
        _ => g.components_without(&set).len() > 1,
    }
}

struct FlowNetwork {
    adj: Vec<Vec<usize>>,
    to: Vec<usize>,
    cap: Vec<usize>,
}

impl FlowNetwork {
    fn new(nodes: usize) -> Self {
        FlowNetwork {
            adj: vec![Vec::new(); nodes],
            to: Vec::new(),
            cap: Vec::new(),
        }
    }

    fn add_arc(&mut self, from: usize, to: usize, cap: usize) {
        self.adj[from].push(self.to.len());
        self.to.push(to);
        self.cap.push(cap);
        self.adj[to].push(self.to.len());
        self.to.push(from);
        self.cap.push(0);
    }

    /// BFS over residual arcs; returns the parent arc of every reached node.
    fn residual_bfs(&self, source: usize) -> Vec<Option<usize>> {
        let mut parent = vec![None; self.adj.len()];
        let mut seen = vec![false; self.adj.len()];
        seen[source] = true;
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            for &e in &self.adj[u] {
                let v = self.to[e];
                if self.cap[e] > 0 && !seen[v] {
                    seen[v] = true;
                    parent[v] = Some(e);
                    queue.push_back(v);
                }
            }
        }
        parent
    }

    /// Edmonds-Karp. Returns the flow value and the residual-reachable set.
    fn max_flow(&mut self, source: usize, sink: usize) -> (usize, Vec<bool>) {
        let mut flow = 0;
        loop {
            let parent = self.residual_bfs(source);
            if parent[sink].is_none() {
                let mut reach: Vec<bool> = parent.iter().map(Option::is_some).collect();
                reach[source] = true;
                return (flow, reach);
            }
            let mut bottleneck = usize::MAX;
            let mut v = sink;
            while let Some(e) = parent[v] {
                bottleneck = bottleneck.min(self.cap[e]);
                v = self.to[e ^ 1];
            }
            let mut v = sink;
            while let Some(e) = parent[v] {
                self.cap[e] -= bottleneck;
                self.cap[e ^ 1] += bottleneck;
                v = self.to[e ^ 1];
            }
            flow += bottleneck;
        }
    }
}

/// Minimum `s`-`t` vertex cut for nonadjacent `s != t`, as `(size, cut)`.
pub fn min_vertex_cut_pair(g: &Graph, s: Vertex, t: Vertex) -> Result<(usize, Vec<Vertex>)> {
    g.check_vertices(&[s, t])?;
    if s == t {
        return Err(Error::IdenticalTerminals);
    }
    if g.has_edge(s, t) {
        return Err(Error::AdjacentTerminals(s, t));
    }
    let n = g.order();
    let inf = n + 1;
    // v_in = 2v, v_out = 2v + 1
    let mut net = FlowNetwork::new(2 * n);
    for v in 0..n {
        let cap = if v == s || v == t { inf } else { 1 };
        net.add_arc(2 * v, 2 * v + 1, cap);
    }
    for (u, v) in g.edges() {
        net.add_arc(2 * u + 1, 2 * v, inf);
        net.add_arc(2 * v + 1, 2 * u, inf);
    }
    let (flow, reach) = net.max_flow(2 * s + 1, 2 * t);
    let cut: Vec<Vertex> = (0..n)
        .filter(|&v| reach[2 * v] && !reach[2 * v + 1])
        .collect();
    debug_assert_eq!(cut.len(), flow);
    Ok((flow, cut))
}

/// `κ(g)` with a minimum separating set.
///
/// Disconnected graphs and `K1` give `(0, ∅)`. `K_n` gives `n - 1` with every
/// vertex except `0` removed. Otherwise every nonadjacent pair is cut and the
/// smallest cut wins, ties going to the lexicographically smallest one.
pub fn kappa_with_witness(g: &Graph) -> (usize, SeparatingSet) {
    let n = g.order();
    let witness = |vertices: Vec<Vertex>| SeparatingSet {
        vertices,
        host_size: n,
    };
    if n == 1 || !g.is_connected() {
        return (0, witness(Vec::new()));
    }
    if g.is_complete() {
        return (n - 1, witness((1..n).collect()));
    }
    let mut best: Option<(usize, Vec<Vertex>)> = None;
    for s in 0..n {
        for t in s + 1..n {
            if g.has_edge(s, t) {
                continue;
            }
            let cand = min_vertex_cut_pair(g, s, t).expect("nonadjacent pair");
            if best.as_ref().is_none_or(|b| cand < *b) {
                best = Some(cand);
            }
        }
    }
    let (k, cut) = best.expect("non-complete graph has a nonadjacent pair");
    (k, witness(cut))
}

pub fn kappa(g: &Graph) -> usize {
    kappa_with_witness(g).0
}

/// Smallest `k` such that some `k`-subset is separating, by exhaustive
/// search. Rejects graphs with more than [`KAPPA_BRUTEFORCE_LIMIT`] vertices.
pub fn kappa_bruteforce(g: &Graph) -> Result<usize> {
    kappa_bruteforce_limited(g, KAPPA_BRUTEFORCE_LIMIT)
}

pub fn kappa_bruteforce_limited(g: &Graph, limit: usize) -> Result<usize> {
    let n = g.order();
    if n > limit || n > 30 {
        return Err(Error::TooLarge { n, limit });
    }
    for k in 0..n {
        if subsets_of_size(n, k).any(|set| is_separating(g, &set)) {
            return Ok(k);
        }
    }
    unreachable!("removing n - 1 vertices always leaves a single vertex")
}

/// All `k`-subsets of `0..n` in increasing bitmask order.
pub(crate) fn subsets_of_size(n: usize, k: usize) -> impl Iterator<Item = Vec<Vertex>> {
    let limit: u64 = 1 << n;
    let first: u64 = if k == 0 { 0 } else { (1 << k) - 1 };
    let mut next = Some(first);
    std::iter::from_fn(move || {
        let mask = next?;
        next = if mask == 0 {
            None
        } else {
            // Gosper's hack
            let c = mask & mask.wrapping_neg();
            let r = mask + c;
            let succ = (((r ^ mask) >> 2) / c) | r;
            (succ < limit).then_some(succ)
        };
        Some((0..n).filter(|&i| mask >> i & 1 == 1).collect())
    })
}
