//! Small hand-analysable graphs used as regression anchors.

use crate::graph::Graph;

pub const NAMES: [&str; 6] = ["c5", "k3", "k4", "petersen", "k33", "triangle-pendant"];

pub fn petersen() -> Graph {
    let mut edges = Vec::with_capacity(15);
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    Graph::new(10, &edges).expect("petersen")
}

/// Triangle `0 1 2` with the pendant edge `2 3`.
pub fn triangle_pendant() -> Graph {
    Graph::new(4, &[(0, 1), (1, 2), (2, 0), (2, 3)]).expect("triangle with pendant")
}

pub fn named_graph(name: &str) -> Option<Graph> {
    let g = match name {
        "c5" => Graph::cycle(5),
        "k3" => Graph::complete(3),
        "k4" => Graph::complete(4),
        "petersen" => Ok(petersen()),
        "k33" => Graph::complete_bipartite(3, 3),
        "triangle-pendant" => Ok(triangle_pendant()),
        _ => return None,
    };
    g.ok()
}
