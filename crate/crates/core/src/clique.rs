//! Exhaustive clique enumeration, clique intersection graphs and their cores.

use serde::Serialize;

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Default bound on how many maximum (or maximal) cliques may be collected.
pub const DEFAULT_CLIQUE_CAP: usize = 100_000;

/// Every maximum clique of `host`, sorted lexicographically.
#[derive(Clone, Debug)]
pub struct CliqueFamily<'g> {
    host: &'g Graph,
    cliques: Vec<VertexSet>,
    omega: usize,
}

impl<'g> CliqueFamily<'g> {
    pub fn host(&self) -> &'g Graph {
        self.host
    }

    pub fn cliques(&self) -> &[VertexSet] {
        &self.cliques
    }

    pub fn omega(&self) -> usize {
        self.omega
    }

    pub fn len(&self) -> usize {
        self.cliques.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cliques.is_empty()
    }
}

/// Pivot for Bron–Kerbosch: the vertex of `P ∪ X` with the most neighbours
/// in `P`, lowest index on ties.
fn choose_pivot(g: &Graph, p: &VertexSet, x: &VertexSet) -> Option<usize> {
    let mut best: Option<(usize, usize)> = None;
    for u in p.union(x).iter() {
        let c = g.neighbors(u).intersection_len(p);
        if best.is_none_or(|(_, bc)| c > bc) {
            best = Some((u, c));
        }
    }
    best.map(|(u, _)| u)
}

/// Pivoting Bron–Kerbosch. `prune(|R|, |P|)` may cut branches that cannot
/// produce an interesting clique; `visit` receives each maximal clique found
/// and returns `false` to abort.
fn bron_kerbosch<F, V>(
    g: &Graph,
    r: &mut VertexSet,
    r_len: usize,
    mut p: VertexSet,
    mut x: VertexSet,
    prune: &F,
    visit: &mut V,
) -> bool
where
    F: Fn(usize, usize) -> bool,
    V: FnMut(&VertexSet, usize) -> bool,
{
    if p.is_empty() {
        if x.is_empty() {
            return visit(r, r_len);
        }
        return true;
    }
    if prune(r_len, p.len()) {
        return true;
    }
    let pivot = choose_pivot(g, &p, &x).expect("P nonempty");
    let candidates = p.difference(g.neighbors(pivot));
    for v in candidates.iter() {
        let nv = g.neighbors(v);
        r.insert(v);
        let keep_going = bron_kerbosch(g, r, r_len + 1, p.intersection(nv), x.intersection(nv), prune, visit);
        r.remove(v);
        if !keep_going {
            return false;
        }
        p.remove(v);
        x.insert(v);
    }
    true
}

/// All maximal cliques of `g`, sorted lexicographically. The graph without
/// vertices has the single maximal clique `∅`.
pub fn maximal_cliques(g: &Graph, cap: usize) -> Result<Vec<VertexSet>> {
    let n = g.n();
    let mut out = Vec::new();
    let mut over = false;
    let mut r = VertexSet::new(n);
    bron_kerbosch(
        g,
        &mut r,
        0,
        VertexSet::full(n),
        VertexSet::new(n),
        &|_, _| false,
        &mut |c, _| {
            if out.len() == cap {
                over = true;
                return false;
            }
            out.push(c.clone());
            true
        },
    );
    if over {
        return Err(Error::ResourceCap { what: "maximal clique count", cap });
    }
    out.sort();
    Ok(out)
}

/// Collects every maximum clique. Branches that cannot reach the current
/// best size are pruned, which leaves the result identical to filtering the
/// full maximal-clique list.
pub fn max_cliques_capped(g: &Graph, cap: usize) -> Result<CliqueFamily<'_>> {
    let n = g.n();
    if n == 0 {
        return Ok(CliqueFamily { host: g, cliques: Vec::new(), omega: 0 });
    }
    let best = std::cell::Cell::new(0usize);
    let mut found: Vec<VertexSet> = Vec::new();
    let mut over = false;
    let mut r = VertexSet::new(n);
    bron_kerbosch(
        g,
        &mut r,
        0,
        VertexSet::full(n),
        VertexSet::new(n),
        &|r_len, p_len| r_len + p_len < best.get(),
        &mut |c, size| {
            if size > best.get() {
                best.set(size);
                found.clear();
            }
            if size == best.get() {
                if found.len() == cap {
                    over = true;
                    return false;
                }
                found.push(c.clone());
            }
            true
        },
    );
    if over {
        return Err(Error::ResourceCap { what: "maximum clique count", cap });
    }
    found.sort();
    Ok(CliqueFamily { host: g, cliques: found, omega: best.get() })
}

pub fn max_cliques(g: &Graph) -> Result<CliqueFamily<'_>> {
    max_cliques_capped(g, DEFAULT_CLIQUE_CAP)
}

/// Clique number by branch and bound; 0 for the graph without vertices.
pub fn omega(g: &Graph) -> usize {
    let n = g.n();
    if n == 0 {
        return 0;
    }
    let best = std::cell::Cell::new(0usize);
    let mut r = VertexSet::new(n);
    bron_kerbosch(
        g,
        &mut r,
        0,
        VertexSet::full(n),
        VertexSet::new(n),
        &|r_len, p_len| r_len + p_len <= best.get(),
        &mut |_, size| {
            if size > best.get() {
                best.set(size);
            }
            true
        },
    );
    best.get()
}

/// Intersection graph of a clique family: `i ~ j` iff cliques `i` and `j`
/// share a vertex.
#[derive(Clone, Debug)]
pub struct IntersectionGraph<'f, 'g> {
    family: &'f CliqueFamily<'g>,
    adj: Vec<Vec<usize>>,
}

impl<'f, 'g> IntersectionGraph<'f, 'g> {
    pub fn new(family: &'f CliqueFamily<'g>) -> Self {
        let q = family.cliques();
        let mut adj = vec![Vec::new(); q.len()];
        for i in 0..q.len() {
            for j in i + 1..q.len() {
                if q[i].intersects(&q[j]) {
                    adj[i].push(j);
                    adj[j].push(i);
                }
            }
        }
        for row in &mut adj {
            row.sort_unstable();
        }
        IntersectionGraph { family, adj }
    }

    pub fn family(&self) -> &'f CliqueFamily<'g> {
        self.family
    }

    pub fn len(&self) -> usize {
        self.adj.len()
    }

    pub fn is_empty(&self) -> bool {
        self.adj.is_empty()
    }

    pub fn neighbors(&self, i: usize) -> &[usize] {
        &self.adj[i]
    }

    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        self.adj[i].binary_search(&j).is_ok()
    }

    /// Connected components as ascending index lists, ordered by their
    /// smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.len()];
        let mut comps = Vec::new();
        for start in 0..self.len() {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut comp = vec![start];
            let mut head = 0;
            while head < comp.len() {
                let i = comp[head];
                head += 1;
                for &j in &self.adj[i] {
                    if !seen[j] {
                        seen[j] = true;
                        comp.push(j);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }
}

pub fn intersection_graph<'f, 'g>(family: &'f CliqueFamily<'g>) -> IntersectionGraph<'f, 'g> {
    IntersectionGraph::new(family)
}

/// One connected component of the intersection graph together with the
/// common intersection of its cliques.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CliqueCore {
    pub component: Vec<usize>,
    pub core: VertexSet,
}

pub fn component_cores(x: &IntersectionGraph<'_, '_>) -> Vec<CliqueCore> {
    let q = x.family().cliques();
    x.components()
        .into_iter()
        .map(|component| {
            let mut core = q[component[0]].clone();
            for &i in &component[1..] {
                core.intersect_with(&q[i]);
            }
            CliqueCore { component, core }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn sets(f: &CliqueFamily) -> Vec<Vec<usize>> {
        f.cliques().iter().map(VertexSet::to_vec).collect()
    }

    #[test]
    fn max_cliques_examples() {
        let k4 = Graph::complete(4);
        let f = max_cliques(&k4).unwrap();
        assert_eq!((sets(&f), f.omega()), (vec![vec![0, 1, 2, 3]], 4));

        let d = fixtures::diamond();
        let f = max_cliques(&d).unwrap();
        assert_eq!((sets(&f), f.omega()), (vec![vec![0, 1, 2], vec![1, 2, 3]], 3));

        let c5 = Graph::cycle(5);
        let f = max_cliques(&c5).unwrap();
        assert_eq!(f.omega(), 2);
        assert_eq!(sets(&f), vec![vec![0, 1], vec![0, 4], vec![1, 2], vec![2, 3], vec![3, 4]]);
    }

    #[test]
    fn omega_examples() {
        assert_eq!(omega(&Graph::complete(4)), 4);
        assert_eq!(omega(&Graph::petersen()), 2);
        assert_eq!(omega(&Graph::empty(5)), 1);
        assert_eq!(omega(&Graph::empty(0)), 0);
    }

    #[test]
    fn cap_is_enforced() {
        // Three disjoint edges: 3 maximum cliques.
        let g = Graph::from_edges(6, &[(0, 1), (2, 3), (4, 5)]).unwrap();
        assert!(max_cliques_capped(&g, 3).is_ok());
        assert!(matches!(max_cliques_capped(&g, 2), Err(Error::ResourceCap { .. })));
        assert!(maximal_cliques(&g, 2).unwrap_err().is_resource_cap());
    }

    #[test]
    fn intersection_graph_examples() {
        let d = fixtures::diamond();
        let f = max_cliques(&d).unwrap();
        let x = intersection_graph(&f);
        assert!(x.adjacent(0, 1));
        assert_eq!(x.components(), vec![vec![0, 1]]);

        let two = fixtures::two_disjoint_k4();
        let f = max_cliques(&two).unwrap();
        let x = intersection_graph(&f);
        assert_eq!(x.len(), 2);
        assert!(!x.adjacent(0, 1));

        let k3 = Graph::complete(3);
        let f = max_cliques(&k3).unwrap();
        assert_eq!(intersection_graph(&f).components(), vec![vec![0]]);
    }

    #[test]
    fn component_core_examples() {
        let d = fixtures::diamond();
        let f = max_cliques(&d).unwrap();
        let cores = component_cores(&intersection_graph(&f));
        assert_eq!(cores.len(), 1);
        assert_eq!(cores[0].core.to_vec(), vec![1, 2]);

        let two = fixtures::two_disjoint_k4();
        let f = max_cliques(&two).unwrap();
        let cores = component_cores(&intersection_graph(&f));
        let got: Vec<_> = cores.iter().map(|c| c.core.to_vec()).collect();
        assert_eq!(got, vec![vec![0, 1, 2, 3], vec![4, 5, 6, 7]]);

        let g7 = fixtures::g7();
        let f = max_cliques(&g7).unwrap();
        assert_eq!(f.omega(), 5);
        assert_eq!(f.len(), 3);
        let cores = component_cores(&intersection_graph(&f));
        assert_eq!(cores.len(), 1);
        assert_eq!(cores[0].component, vec![0, 1, 2]);
        assert_eq!(cores[0].core.to_vec(), vec![0, 1, 2, 3]);
    }
}
