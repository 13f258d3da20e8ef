//! Test-only oracles, written independently of the library algorithms.

#![allow(dead_code)]

use k2conn::theorem::{gnp_random, trial_parameters, FuzzConfig};
use k2conn::Graph;

/// Every labelled simple graph on `n` vertices.
pub fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let count = 1u64 << pairs.len();
    (0..count).map(move |mask| {
        let edges: Vec<_> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        Graph::new(n, &edges).unwrap()
    })
}

/// Reproducible stream of random graphs with order in `n_min..=n_max`.
pub fn random_graphs(
    count: usize,
    n_min: usize,
    n_max: usize,
    p_choices: &[f64],
    seed: u64,
) -> Vec<(String, Graph)> {
    let cfg = FuzzConfig {
        trials: count,
        n_min,
        n_max,
        p_choices: p_choices.to_vec(),
        master_seed: seed,
        oracle_limit: 0,
    };
    (0..count)
        .map(|i| {
            let (n, p, s) = trial_parameters(&cfg, i);
            (
                format!("#{i} n={n} p={p} seed={s}"),
                gnp_random(n, p, s).unwrap(),
            )
        })
        .collect()
}

/// Bipartiteness by trying every 2-colouring.
pub fn bipartite_by_colorings(g: &Graph) -> bool {
    let n = g.order();
    (0u32..1 << n).any(|c| g.edges().all(|(u, v)| (c >> u & 1) != (c >> v & 1)))
}

/// Backtracking isomorphism test.
pub fn isomorphic(g: &Graph, h: &Graph) -> bool {
    fn extend(g: &Graph, h: &Graph, map: &mut Vec<usize>, used: &mut [bool]) -> bool {
        let k = map.len();
        if k == g.order() {
            return true;
        }
        for t in 0..h.order() {
            if used[t] || g.degree(k) != h.degree(t) {
                continue;
            }
            if (0..k).all(|i| g.has_edge(i, k) == h.has_edge(map[i], t)) {
                map.push(t);
                used[t] = true;
                if extend(g, h, map, used) {
                    return true;
                }
                map.pop();
                used[t] = false;
            }
        }
        false
    }
    g.order() == h.order()
        && g.size() == h.size()
        && extend(g, h, &mut Vec::new(), &mut vec![false; h.order()])
}

/// Number of components by union-find over the edge list.
pub fn component_count(g: &Graph) -> usize {
    let mut parent: Vec<usize> = (0..g.order()).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        p[x] = r;
        r
    }
    let mut count = g.order();
    for (u, v) in g.edges() {
        let (a, b) = (find(&mut parent, u), find(&mut parent, v));
        if a != b {
            parent[a] = b;
            count -= 1;
        }
    }
    count
}
