//! Small named graphs used throughout the tests and docs.

use crate::graph::{Graph, Multigraph};

/// K4 minus the edge 0-3.
pub fn diamond() -> Graph {
    Graph::from_edges(4, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]).unwrap()
}

/// K4 on `{0,1,2,3}` plus vertices 4, 5, 6 each joined to all of `{0,1,2,3}`.
pub fn g7() -> Graph {
    let mut g = Graph::complete(7);
    for (u, v) in [(4, 5), (4, 6), (5, 6)] {
        g = remove_edge(&g, u, v);
    }
    g
}

pub fn two_disjoint_k4() -> Graph {
    disjoint_cliques(4, 2)
}

pub fn two_disjoint_k3() -> Graph {
    disjoint_cliques(3, 2)
}

pub fn disjoint_cliques(k: usize, t: usize) -> Graph {
    let mut g = Graph::empty(k * t);
    for c in 0..t {
        for i in 0..k {
            for j in i + 1..k {
                g.add_edge(c * k + i, c * k + j);
            }
        }
    }
    g
}

pub fn triangle_multigraph() -> Multigraph {
    Multigraph::new(3, vec![(0, 1), (1, 2), (0, 2)]).unwrap()
}

/// Triangle with edge 0-1 doubled; its line graph is K4.
pub fn doubled_edge_triangle() -> Multigraph {
    Multigraph::new(3, vec![(0, 1), (0, 1), (0, 2), (1, 2)]).unwrap()
}

fn remove_edge(g: &Graph, a: usize, b: usize) -> Graph {
    let edges: Vec<_> = g.edges().into_iter().filter(|&e| e != (a.min(b), a.max(b))).collect();
    Graph::from_edges(g.n(), &edges).unwrap()
}
