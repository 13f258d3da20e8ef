//! b-pairs and the invariant `b(G)`.
//!
//! A b-pair is a pair of disjoint vertex sets `(X, Y)` such that `G - (X ∪ Y)`
//! keeps a bipartite component `C` and `G[C ∪ {x}]` stays bipartite for every
//! `x ∈ X`. `b(G)` is the least `|X| + 2|Y|` over all b-pairs.
//!
//! [`b_number`] searches connected bipartite vertex sets `W` and prices each
//! with its canonical pair: `X` is the part of `N(W)` whose neighbours in `W`
//! lie on one side of the bipartition, `Y` the rest of `N(W)`. Any b-pair with
//! component `W` costs at least this much, so the minimum over `W` is `b(G)`.
//! [`b_bruteforce`] tries all `3^n` assignments instead and serves as the
//! oracle for that reduction.

use serde::Serialize;

use crate::connectivity::subsets_of_size;
use crate::error::{Error, Result};
use crate::graph::{sorted_set, Bipartition, Graph, Vertex};

/// Default order limit for [`b_bruteforce`].
pub const B_BRUTEFORCE_LIMIT: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BPair {
    pub x: Vec<Vertex>,
    pub y: Vec<Vertex>,
    /// Vertex set of the witnessing bipartite component.
    pub component_w: Vec<Vertex>,
    pub value: usize,
}

impl BPair {
    /// Bipartition `(P, Q)` of `G[W]`; `P` holds the smallest vertex of `W`.
    pub fn component_bipartition(&self, g: &Graph) -> Bipartition {
        let mask = g.mask_of(&self.component_w);
        let color = g
            .two_color_within(&mask)
            .expect("b-pair component is bipartite");
        let (mut part_a, mut part_b) = (Vec::new(), Vec::new());
        for &v in &self.component_w {
            if color[v] == Some(0) {
                part_a.push(v);
            } else {
                part_b.push(v);
            }
        }
        Bipartition { part_a, part_b }
    }
}

/// Checks the b-pair conditions for `(x_set, y_set)`.
///
/// Returns `Ok(None)` when the remainder is empty or no component
/// qualifies. When several components qualify, the one with the smallest
/// minimum vertex is reported.
pub fn is_bpair(g: &Graph, x_set: &[Vertex], y_set: &[Vertex]) -> Result<Option<BPair>> {
    g.check_vertices(x_set)?;
    g.check_vertices(y_set)?;
    let x = sorted_set(x_set);
    let y = sorted_set(y_set);
    if let Some(&v) = x.iter().find(|v| y.binary_search(v).is_ok()) {
        return Err(Error::OverlappingSets(v));
    }
    let mut keep = vec![true; g.order()];
    for &v in x.iter().chain(&y) {
        keep[v] = false;
    }
    let found = g.components_within(&keep).into_iter().find(|comp| {
        let mut mask = g.mask_of(comp);
        if !g.is_bipartite_within(&mask) {
            return false;
        }
        x.iter().all(|&xv| {
            mask[xv] = true;
            let ok = g.is_bipartite_within(&mask);
            mask[xv] = false;
            ok
        })
    });
    Ok(found.map(|component_w| BPair {
        value: x.len() + 2 * y.len(),
        x,
        y,
        component_w,
    }))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalPair {
    pub cost: usize,
    pub x: Vec<Vertex>,
    pub y: Vec<Vertex>,
}

/// Canonical pair of a connected bipartite set `w`; `None` if `G[w]` is
/// disconnected or has an odd cycle.
pub fn canonical_cost(g: &Graph, w: &[Vertex]) -> Result<Option<CanonicalPair>> {
    if w.is_empty() {
        return Err(Error::EmptyVertexSet);
    }
    g.check_vertices(w)?;
    let mask = g.mask_of(w);
    if g.components_within(&mask).len() != 1 {
        return Ok(None);
    }
    let Some(color) = g.two_color_within(&mask) else {
        return Ok(None);
    };
    let (x, y) = split_neighborhood(g, &mask, &color);
    Ok(Some(CanonicalPair {
        cost: x.len() + 2 * y.len(),
        x,
        y,
    }))
}

/// Splits `N(W)` into vertices seeing one colour class of `W` and vertices
/// seeing both.
fn split_neighborhood(
    g: &Graph,
    in_w: &[bool],
    color: &[Option<u8>],
) -> (Vec<Vertex>, Vec<Vertex>) {
    let (mut x, mut y) = (Vec::new(), Vec::new());
    for v in 0..g.order() {
        if in_w[v] {
            continue;
        }
        let mut seen = [false; 2];
        for &u in g.neighbors(v) {
            if in_w[u] {
                seen[color[u].expect("coloured") as usize] = true;
            }
        }
        match seen {
            [true, true] => y.push(v),
            [false, false] => {}
            _ => x.push(v),
        }
    }
    (x, y)
}

#[derive(Debug, Clone)]
struct Best {
    cost: usize,
    w: Vec<Vertex>,
    x: Vec<Vertex>,
    y: Vec<Vertex>,
}

impl Best {
    fn key(&self) -> (usize, usize, &[Vertex]) {
        (self.cost, self.w.len(), &self.w)
    }
}

struct Search<'g> {
    g: &'g Graph,
    cap: Option<usize>,
    bound: usize,
    best: Option<Best>,
    in_w: Vec<bool>,
    color: Vec<Option<u8>>,
    members: Vec<Vertex>,
}

impl Search<'_> {
    fn offer(&mut self, cost: usize, x: Vec<Vertex>, y: Vec<Vertex>) {
        let mut w = self.members.clone();
        w.sort_unstable();
        let cand = Best { cost, w, x, y };
        if self.best.as_ref().is_none_or(|b| cand.key() < b.key()) {
            self.bound = self.bound.min(cost);
            self.best = Some(cand);
        }
    }

    /// Visits the current set, then every connected bipartite superset that
    /// avoids `blocked`. `cand` is `N(W)` minus the blocked vertices.
    fn visit(&mut self, cand: &[Vertex], blocked: &[bool]) {
        let (x, y) = split_neighborhood(self.g, &self.in_w, &self.color);
        // Y stays Y in every superset and blocked X vertices stay outside.
        let lower = 2 * y.len() + x.iter().filter(|&&v| blocked[v]).count();
        self.offer(x.len() + 2 * y.len(), x, y);
        if lower > self.bound || self.cap.is_some_and(|c| lower >= c) {
            return;
        }

        let mut blocked = blocked.to_vec();
        let mut cand = cand.to_vec();
        while let Some(v) = cand.pop() {
            let mut seen = [false; 2];
            for &u in self.g.neighbors(v) {
                if self.in_w[u] {
                    seen[self.color[u].unwrap() as usize] = true;
                }
            }
            if seen == [true, true] {
                blocked[v] = true;
                continue;
            }
            self.color[v] = Some(if seen[0] { 1 } else { 0 });
            self.in_w[v] = true;
            self.members.push(v);

            let mut next = cand.clone();
            for &u in self.g.neighbors(v) {
                if !self.in_w[u] && !blocked[u] && !next.contains(&u) {
                    next.push(u);
                }
            }
            self.visit(&next, &blocked);

            self.members.pop();
            self.in_w[v] = false;
            self.color[v] = None;
            blocked[v] = true;
        }
    }
}

/// `b(G)` with a witnessing b-pair.
///
/// With `cap = Some(c)`, branches that provably cost at least `c` are cut, so
/// the returned value is exact whenever `b(G) < c` and otherwise only known
/// to be at least `c`. Among optimal sets the smallest `|W|`, then the
/// lexicographically smallest `W`, is reported.
pub fn b_number(g: &Graph, cap: Option<usize>) -> (usize, BPair) {
    if let Some(comp) = g
        .components()
        .into_iter()
        .filter(|c| g.is_bipartite_within(&g.mask_of(c)))
        .min_by(|a, b| (a.len(), a).cmp(&(b.len(), b)))
    {
        let pair = BPair {
            x: Vec::new(),
            y: Vec::new(),
            component_w: comp,
            value: 0,
        };
        return (0, pair);
    }

    let n = g.order();
    let mut search = Search {
        g,
        cap,
        bound: g.min_degree(),
        best: None,
        in_w: vec![false; n],
        color: vec![None; n],
        members: Vec::new(),
    };
    for seed in 0..n {
        let blocked: Vec<bool> = (0..n).map(|v| v < seed).collect();
        let cand: Vec<Vertex> = g
            .neighbors(seed)
            .iter()
            .copied()
            .filter(|&v| v > seed)
            .collect();
        search.in_w[seed] = true;
        search.color[seed] = Some(0);
        search.members.push(seed);
        search.visit(&cand, &blocked);
        search.members.pop();
        search.in_w[seed] = false;
        search.color[seed] = None;
    }
    let best = search.best.expect("every singleton is a candidate");
    let pair = BPair {
        value: best.cost,
        x: best.x,
        y: best.y,
        component_w: best.w,
    };
    (pair.value, pair)
}

/// `b(G)` straight from the definition: every split of `V` into `X`, `Y` and
/// a nonempty remainder is checked with [`is_bpair`].
pub fn b_bruteforce(g: &Graph) -> Result<usize> {
    b_bruteforce_limited(g, B_BRUTEFORCE_LIMIT)
}

pub fn b_bruteforce_limited(g: &Graph, limit: usize) -> Result<usize> {
    let n = g.order();
    if n > limit || n > 20 {
        return Err(Error::TooLarge { n, limit });
    }
    let mut best = usize::MAX;
    let mut digits = vec![0u8; n];
    loop {
        let x: Vec<Vertex> = (0..n).filter(|&v| digits[v] == 1).collect();
        let y: Vec<Vertex> = (0..n).filter(|&v| digits[v] == 2).collect();
        let value = x.len() + 2 * y.len();
        if value < best && is_bpair(g, &x, &y)?.is_some() {
            best = value;
        }
        // base-3 increment
        let mut i = 0;
        while i < n && digits[i] == 2 {
            digits[i] = 0;
            i += 1;
        }
        if i == n {
            break;
        }
        digits[i] += 1;
    }
    Ok(best)
}

/// All nonempty connected bipartite vertex sets, found by subset scan.
/// Only used to cross-check the enumeration in tests.
pub fn connected_bipartite_sets_bruteforce(g: &Graph) -> Vec<Vec<Vertex>> {
    let n = g.order();
    (1..=n)
        .flat_map(|k| subsets_of_size(n, k))
        .filter(|w| matches!(canonical_cost(g, w), Ok(Some(_))))
        .collect()
}
