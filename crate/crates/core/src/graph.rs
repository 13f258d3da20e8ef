//! Immutable simple undirected graphs on the dense vertex range `0..n`.
//!
//! Every vertex set handed back by this module is sorted ascending. Vertex
//! sets passed in are treated as sets: order and repeats are ignored.

use std::collections::VecDeque;

use crate::error::{Error, Result};

pub type Vertex = usize;

/// Simple undirected graph with sorted adjacency lists.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<Vertex>>,
    m: usize,
}

/// Two-part vertex partition with every edge crossing between the parts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bipartition {
    pub part_a: Vec<Vertex>,
    pub part_b: Vec<Vertex>,
}

impl Bipartition {
    pub fn swapped(&self) -> Bipartition {
        Bipartition {
            part_a: self.part_b.clone(),
            part_b: self.part_a.clone(),
        }
    }

    /// Checks that this is a valid bipartition of `g`.
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        let mut side = vec![None; g.order()];
        for (&v, s) in self
            .part_a
            .iter()
            .map(|v| (v, 0u8))
            .chain(self.part_b.iter().map(|v| (v, 1u8)))
        {
            if v >= g.order() || side[v].is_some() {
                return false;
            }
            side[v] = Some(s);
        }
        side.iter().all(Option::is_some) && g.edges().all(|(u, v)| side[u] != side[v])
    }
}

impl Graph {
    /// Builds a graph from an edge list, rejecting loops, out-of-range
    /// endpoints and repeated pairs in either orientation.
    pub fn new(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Graph> {
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u == v {
                return Err(Error::Loop(u));
            }
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for (u, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                let (a, b) = (u.min(w[0]), u.max(w[0]));
                return Err(Error::DuplicateEdge(a, b));
            }
        }
        Ok(Graph {
            adj,
            m: edges.len(),
        })
    }

    pub fn empty(n: usize) -> Result<Graph> {
        Graph::new(n, &[])
    }

    pub fn complete(n: usize) -> Result<Graph> {
        let edges: Vec<_> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        Graph::new(n, &edges)
    }

    pub fn cycle(n: usize) -> Result<Graph> {
        if n < 3 {
            return Err(Error::InvalidParameter(format!(
                "cycle needs n >= 3, got {n}"
            )));
        }
        let edges: Vec<_> = (0..n).map(|u| (u, (u + 1) % n)).collect();
        Graph::new(n, &edges)
    }

    pub fn path(n: usize) -> Result<Graph> {
        let edges: Vec<_> = (1..n).map(|u| (u - 1, u)).collect();
        Graph::new(n, &edges)
    }

    pub fn complete_bipartite(p: usize, q: usize) -> Result<Graph> {
        let edges: Vec<_> = (0..p)
            .flat_map(|u| (p..p + q).map(move |v| (u, v)))
            .collect();
        Graph::new(p + q, &edges)
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn size(&self) -> usize {
        self.m
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn is_complete(&self) -> bool {
        let n = self.order();
        self.adj.iter().all(|list| list.len() == n - 1)
    }

    pub(crate) fn check_vertices(&self, vs: &[Vertex]) -> Result<()> {
        match vs.iter().find(|&&v| v >= self.order()) {
            Some(&vertex) => Err(Error::VertexOutOfRange {
                vertex,
                n: self.order(),
            }),
            None => Ok(()),
        }
    }

    pub(crate) fn mask_of(&self, vs: &[Vertex]) -> Vec<bool> {
        let mut mask = vec![false; self.order()];
        for &v in vs {
            mask[v] = true;
        }
        mask
    }

    /// Connected components, each sorted, ordered by their minimum vertex.
    pub fn components(&self) -> Vec<Vec<Vertex>> {
        self.components_within(&vec![true; self.order()])
    }

    /// Components of the subgraph induced on the vertices flagged in `keep`.
    pub fn components_within(&self, keep: &[bool]) -> Vec<Vec<Vertex>> {
        let mut seen = vec![false; self.order()];
        let mut out = Vec::new();
        let mut queue = VecDeque::new();
        for s in 0..self.order() {
            if !keep[s] || seen[s] {
                continue;
            }
            seen[s] = true;
            queue.push_back(s);
            let mut comp = Vec::new();
            while let Some(u) = queue.pop_front() {
                comp.push(u);
                for &v in &self.adj[u] {
                    if keep[v] && !seen[v] {
                        seen[v] = true;
                        queue.push_back(v);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Components of `g - removed`.
    pub fn components_without(&self, removed: &[Vertex]) -> Vec<Vec<Vertex>> {
        let keep: Vec<bool> = self.mask_of(removed).into_iter().map(|r| !r).collect();
        self.components_within(&keep)
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    /// 2-colouring of the subgraph induced on `keep`. Within each component
    /// the smallest vertex gets colour 0.
    pub(crate) fn two_color_within(&self, keep: &[bool]) -> Option<Vec<Option<u8>>> {
        let mut color: Vec<Option<u8>> = vec![None; self.order()];
        let mut queue = VecDeque::new();
        for s in 0..self.order() {
            if !keep[s] || color[s].is_some() {
                continue;
            }
            color[s] = Some(0);
            queue.push_back(s);
            while let Some(u) = queue.pop_front() {
                let cu = color[u].unwrap();
                for &v in &self.adj[u] {
                    if !keep[v] {
                        continue;
                    }
                    match color[v] {
                        None => {
                            color[v] = Some(1 - cu);
                            queue.push_back(v);
                        }
                        Some(cv) if cv == cu => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(color)
    }

    pub(crate) fn is_bipartite_within(&self, keep: &[bool]) -> bool {
        self.two_color_within(keep).is_some()
    }

    /// Bipartition of the whole graph, or `None` when there is an odd cycle.
    /// The part holding the smallest vertex of each component is `part_a`.
    pub fn bipartition(&self) -> Option<Bipartition> {
        let color = self.two_color_within(&vec![true; self.order()])?;
        let (mut part_a, mut part_b) = (Vec::new(), Vec::new());
        for (v, c) in color.into_iter().enumerate() {
            match c {
                Some(0) => part_a.push(v),
                _ => part_b.push(v),
            }
        }
        Some(Bipartition { part_a, part_b })
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// Subgraph induced on `w`, relabelled `0..|w|` in ascending order,
    /// together with the old-to-new index map (`None` for dropped vertices).
    pub fn induced_subgraph(&self, w: &[Vertex]) -> Result<(Graph, Vec<Option<Vertex>>)> {
        if w.is_empty() {
            return Err(Error::EmptyVertexSet);
        }
        self.check_vertices(w)?;
        let mut index: Vec<Option<Vertex>> = vec![None; self.order()];
        let mut next = 0;
        for (v, keep) in self.mask_of(w).into_iter().enumerate() {
            if keep {
                index[v] = Some(next);
                next += 1;
            }
        }
        let edges: Vec<_> = self
            .edges()
            .filter_map(|(u, v)| Some((index[u]?, index[v]?)))
            .collect();
        Ok((Graph::new(next, &edges)?, index))
    }

    /// `g - u` with the remaining vertices relabelled in ascending order.
    pub fn remove_vertex(&self, u: Vertex) -> Result<(Graph, Vec<Option<Vertex>>)> {
        self.check_vertices(&[u])?;
        let rest: Vec<_> = (0..self.order()).filter(|&v| v != u).collect();
        self.induced_subgraph(&rest)
    }

    /// Vertices outside `w` with at least one neighbour in `w`.
    pub fn open_neighborhood(&self, w: &[Vertex]) -> Result<Vec<Vertex>> {
        self.check_vertices(w)?;
        let inside = self.mask_of(w);
        Ok((0..self.order())
            .filter(|&x| !inside[x] && self.adj[x].iter().any(|&y| inside[y]))
            .collect())
    }

    /// Copy of this graph with edge `{u, v}` added.
    pub fn with_edge(&self, u: Vertex, v: Vertex) -> Result<Graph> {
        let mut edges: Vec<_> = self.edges().collect();
        edges.push((u, v));
        Graph::new(self.order(), &edges)
    }
}

/// Normalises a vertex list into a sorted set.
pub(crate) fn sorted_set(vs: &[Vertex]) -> Vec<Vertex> {
    let mut out = vs.to_vec();
    out.sort_unstable();
    out.dedup();
    out
}
