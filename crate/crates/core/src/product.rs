//! Kronecker (direct) products and the bipartite double cover `G x K2`.
//!
//! Product vertex `(u, v)` of `G x H` is encoded as `u * |H| + v`. For the
//! double cover this is `2u + side` with side `a = 0` and `b = 1`.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{Bipartition, Graph, Vertex};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Side {
    A = 0,
    B = 1,
}

impl Side {
    pub fn flip(self) -> Side {
        match self {
            Side::A => Side::B,
            Side::B => Side::A,
        }
    }
}

/// A vertex `(u, side)` of `G x K2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ProductVertex {
    pub base: Vertex,
    pub side: Side,
}

impl ProductVertex {
    pub fn new(base: Vertex, side: Side) -> Self {
        ProductVertex { base, side }
    }

    pub fn encode(self) -> Vertex {
        2 * self.base + self.side as usize
    }

    pub fn decode(code: Vertex) -> Self {
        let side = if code.is_multiple_of(2) {
            Side::A
        } else {
            Side::B
        };
        ProductVertex {
            base: code / 2,
            side,
        }
    }
}

impl fmt::Display for ProductVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let side = match self.side {
            Side::A => 'a',
            Side::B => 'b',
        };
        write!(f, "({},{})", self.base, side)
    }
}

/// Encodes `(u, v)` of `G x H` where `|H| = h`.
pub fn encode_pair(u: Vertex, v: Vertex, h: usize) -> Vertex {
    u * h + v
}

pub fn kronecker_product(g: &Graph, h: &Graph) -> Graph {
    let hn = h.order();
    let mut edges = Vec::with_capacity(2 * g.size() * h.size());
    for (u1, u2) in g.edges() {
        for (v1, v2) in h.edges() {
            edges.push((encode_pair(u1, v1, hn), encode_pair(u2, v2, hn)));
            edges.push((encode_pair(u1, v2, hn), encode_pair(u2, v1, hn)));
        }
    }
    Graph::new(g.order() * hn, &edges).expect("product of simple graphs is simple")
}

/// `G x K2`.
pub fn double_cover(g: &Graph) -> Graph {
    let k2 = Graph::complete(2).expect("K2");
    kronecker_product(g, &k2)
}

/// Connectedness of `G x H` predicted from the factors: both connected and
/// at least one nonbipartite. Both factors must have at least two vertices.
pub fn weichsel_connected(g: &Graph, h: &Graph) -> Result<bool> {
    if g.order() < 2 || h.order() < 2 {
        return Err(Error::TrivialFactor);
    }
    Ok(g.is_connected() && h.is_connected() && !(g.is_bipartite() && h.is_bipartite()))
}

/// The two components of the double cover of a connected bipartite graph,
/// with explicit isomorphisms (product code -> base vertex) onto the graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverComponents {
    /// `(P x {a}) ∪ (Q x {b})`, encoded.
    pub first: Vec<Vertex>,
    /// `(P x {b}) ∪ (Q x {a})`, encoded.
    pub second: Vec<Vertex>,
    pub iso_first: BTreeMap<Vertex, Vertex>,
    pub iso_second: BTreeMap<Vertex, Vertex>,
}

pub fn bipartite_cover_components(g: &Graph, bip: &Bipartition) -> Result<CoverComponents> {
    if !g.is_connected() {
        return Err(Error::NotConnected);
    }
    if !bip.is_valid_for(g) {
        return Err(Error::NotBipartite);
    }
    let mut iso_first = BTreeMap::new();
    let mut iso_second = BTreeMap::new();
    for &p in &bip.part_a {
        iso_first.insert(ProductVertex::new(p, Side::A).encode(), p);
        iso_second.insert(ProductVertex::new(p, Side::B).encode(), p);
    }
    for &q in &bip.part_b {
        iso_first.insert(ProductVertex::new(q, Side::B).encode(), q);
        iso_second.insert(ProductVertex::new(q, Side::A).encode(), q);
    }
    Ok(CoverComponents {
        first: iso_first.keys().copied().collect(),
        second: iso_second.keys().copied().collect(),
        iso_first,
        iso_second,
    })
}

/// Checks that `iso` is a bijection from `domain` onto `V(target)` that
/// preserves adjacency and non-adjacency between `host` and `target`.
pub fn is_isomorphism(
    host: &Graph,
    domain: &[Vertex],
    target: &Graph,
    iso: &BTreeMap<Vertex, Vertex>,
) -> bool {
    if domain.len() != target.order() || iso.len() != domain.len() {
        return false;
    }
    let mut hit = vec![false; target.order()];
    for &d in domain {
        match iso.get(&d) {
            Some(&t) if t < target.order() && !hit[t] => hit[t] = true,
            _ => return false,
        }
    }
    domain.iter().all(|&x| {
        domain
            .iter()
            .all(|&y| x == y || host.has_edge(x, y) == target.has_edge(iso[&x], iso[&y]))
    })
}
