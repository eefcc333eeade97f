//! Simple graphs and multigraphs.

use serde::{Deserialize, Serialize};

use crate::bitset::VertexSet;
use crate::error::{Error, Result};

/// Largest vertex count accepted by any constructor.
pub const MAX_VERTICES: usize = 4096;

/// Simple undirected graph on `0..n` with one neighbour bitset per vertex.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<VertexSet>,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        assert!(n <= MAX_VERTICES, "graph with {n} vertices exceeds cap {MAX_VERTICES}");
        Graph {
            adj: (0..n).map(|_| VertexSet::new(n)).collect(),
        }
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Self::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v);
            }
        }
        g
    }

    pub fn cycle(n: usize) -> Self {
        let mut g = Self::empty(n);
        for u in 0..n {
            g.add_edge(u, (u + 1) % n);
        }
        g
    }

    pub fn path(n: usize) -> Self {
        let mut g = Self::empty(n);
        for u in 1..n {
            g.add_edge(u - 1, u);
        }
        g
    }

    /// Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5.
    pub fn petersen() -> Self {
        let mut g = Self::empty(10);
        for i in 0..5 {
            g.add_edge(i, (i + 1) % 5);
            g.add_edge(5 + i, 5 + (i + 2) % 5);
            g.add_edge(i, i + 5);
        }
        g
    }

    /// Validating constructor: rejects loops and out-of-range endpoints,
    /// silently merges duplicate edges.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::ResourceCap { what: "vertex count", cap: MAX_VERTICES });
        }
        let mut g = Self::empty(n);
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidGraph(format!("edge ({u},{v}) out of range for n={n}")));
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("loop at vertex {u}")));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    /// Adds `uv`. Panics on loops or out-of-range endpoints.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert_ne!(u, v, "loop at {u}");
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n() {
            out.extend(self.adj[u].iter().filter(|&v| v > u).map(|v| (u, v)));
        }
        out
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    /// Maximum degree; 0 for the graph without vertices.
    pub fn max_degree(&self) -> usize {
        (0..self.n()).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// `(Δ, degree sequence indexed by vertex)`.
    pub fn degree_stats(&self) -> (usize, Vec<usize>) {
        let degs: Vec<usize> = (0..self.n()).map(|v| self.degree(v)).collect();
        (degs.iter().copied().max().unwrap_or(0), degs)
    }

    pub fn complement(&self) -> Graph {
        let n = self.n();
        let full = VertexSet::full(n);
        let adj = (0..n)
            .map(|v| {
                let mut s = full.difference(&self.adj[v]);
                s.remove(v);
                s
            })
            .collect();
        Graph { adj }
    }

    pub fn is_clique(&self, s: &VertexSet) -> bool {
        s.iter().all(|v| {
            let mut rest = s.clone();
            rest.remove(v);
            rest.is_subset(&self.adj[v])
        })
    }

    pub fn is_independent(&self, s: &VertexSet) -> bool {
        s.iter().all(|v| !self.adj[v].intersects(s))
    }

    /// True when `s` is independent and no outside vertex can be added.
    pub fn is_maximal_independent(&self, s: &VertexSet) -> bool {
        self.is_independent(s)
            && (0..self.n()).all(|v| s.contains(v) || self.adj[v].intersects(s))
    }

    /// Subgraph induced by `keep`, relabelled to `0..|keep|` in ascending
    /// order. The second component maps new labels to old ones.
    pub fn induced(&self, keep: &VertexSet) -> (Graph, Vec<usize>) {
        let map: Vec<usize> = keep.iter().collect();
        let mut index = vec![usize::MAX; self.n()];
        for (new, &old) in map.iter().enumerate() {
            index[old] = new;
        }
        let mut h = Graph::empty(map.len());
        for (new_u, &u) in map.iter().enumerate() {
            for v in self.adj[u].intersection(keep).iter() {
                if index[v] > new_u {
                    h.add_edge(new_u, index[v]);
                }
            }
        }
        (h, map)
    }

    /// `G - removed`, relabelled as in [`Graph::induced`].
    pub fn remove_vertices(&self, removed: &VertexSet) -> (Graph, Vec<usize>) {
        self.induced(&self.vertex_set().difference(removed))
    }

    /// Checks the representation invariants: symmetry, no loops, members in range.
    pub fn validate(&self) -> Result<()> {
        let n = self.n();
        for u in 0..n {
            if self.adj[u].capacity() != n {
                return Err(Error::InvalidGraph(format!("row {u} has wrong capacity")));
            }
            if self.adj[u].contains(u) {
                return Err(Error::InvalidGraph(format!("loop at vertex {u}")));
            }
            for v in self.adj[u].iter() {
                if !self.adj[v].contains(u) {
                    return Err(Error::InvalidGraph(format!("asymmetric edge {u}->{v}")));
                }
            }
        }
        Ok(())
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n(), self.edges())
    }
}

/// Undirected multigraph: parallel edges allowed, loops forbidden. Edge order
/// is preserved and determines line-graph vertex order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Multigraph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Multigraph {
    pub fn new(n: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        for &(u, v) in &edges {
            if u >= n || v >= n {
                return Err(Error::InvalidGraph(format!("edge ({u},{v}) out of range for n={n}")));
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("loop at vertex {u}")));
            }
        }
        if edges.len() > MAX_VERTICES {
            return Err(Error::ResourceCap { what: "multigraph edge count", cap: MAX_VERTICES });
        }
        Ok(Multigraph { n, edges })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Maximum degree counting edge multiplicity.
    pub fn max_degree(&self) -> usize {
        let mut deg = vec![0usize; self.n];
        for &(u, v) in &self.edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        deg.into_iter().max().unwrap_or(0)
    }

    /// Line graph: one vertex per edge, adjacent iff the edges share an
    /// endpoint. Vertex `i` of the result is `edges()[i]`, so the returned
    /// mapping is that edge list.
    pub fn line_graph(&self) -> (Graph, Vec<(usize, usize)>) {
        let m = self.edges.len();
        let mut l = Graph::empty(m);
        for i in 0..m {
            let (a, b) = self.edges[i];
            for j in i + 1..m {
                let (c, d) = self.edges[j];
                if a == c || a == d || b == c || b == d {
                    l.add_edge(i, j);
                }
            }
        }
        (l, self.edges.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degree_stats_examples() {
        assert_eq!(Graph::complete(4).degree_stats().0, 3);
        assert_eq!(Graph::cycle(5).degree_stats().0, 2);
        assert_eq!(Graph::empty(0).degree_stats(), (0, vec![]));
    }

    #[test]
    fn petersen_is_cubic() {
        let p = Graph::petersen();
        assert_eq!(p.edge_count(), 15);
        assert!((0..10).all(|v| p.degree(v) == 3));
        p.validate().unwrap();
    }

    #[test]
    fn from_edges_rejects_loops_and_range() {
        assert!(Graph::from_edges(3, &[(1, 1)]).is_err());
        assert!(Graph::from_edges(3, &[(0, 3)]).is_err());
        let g = Graph::from_edges(3, &[(0, 1), (1, 0)]).unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn line_graph_examples() {
        let tri = Multigraph::new(3, vec![(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(tri.line_graph().0, Graph::complete(3));
        let doubled = Multigraph::new(3, vec![(0, 1), (0, 1), (0, 2), (1, 2)]).unwrap();
        assert_eq!(doubled.line_graph().0, Graph::complete(4));
        let single = Multigraph::new(2, vec![(0, 1)]).unwrap();
        let (l, map) = single.line_graph();
        assert_eq!(l.n(), 1);
        assert_eq!(map, vec![(0, 1)]);
    }

    #[test]
    fn multigraph_degree_counts_multiplicity() {
        let h = Multigraph::new(3, vec![(0, 1), (0, 1), (0, 2)]).unwrap();
        assert_eq!(h.max_degree(), 3);
        assert!(Multigraph::new(2, vec![(0, 0)]).is_err());
    }

    #[test]
    fn induced_relabels() {
        let g = Graph::cycle(5);
        let (h, map) = g.remove_vertices(&VertexSet::from_iter_with_capacity(5, [0]));
        assert_eq!(map, vec![1, 2, 3, 4]);
        assert_eq!(h, Graph::path(4));
    }

    #[test]
    fn complement_of_complete_is_empty() {
        assert_eq!(Graph::complete(5).complement(), Graph::empty(5));
        assert_eq!(Graph::cycle(5).complement().edge_count(), 5);
    }
}
