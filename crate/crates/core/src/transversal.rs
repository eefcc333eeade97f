//! Independent transversals of a vertex partition.

use serde::{Deserialize, Serialize};

use crate::bitset::VertexSet;
use crate::clique::CliqueCore;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::io::GraphJson;
use crate::rng::Rng;

/// A graph whose vertex set is partitioned into parts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransversalInstance {
    pub aux: Graph,
    pub parts: Vec<VertexSet>,
    /// `origin[v]` is the host-graph vertex behind aux vertex `v`.
    pub origin: Option<Vec<usize>>,
}

/// One pick per part, indexed like the parts.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Transversal {
    pub picks: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceJson {
    pub aux: GraphJson,
    pub parts: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub origin: Option<Vec<usize>>,
}

impl TransversalInstance {
    pub fn new(aux: Graph, parts: Vec<VertexSet>, origin: Option<Vec<usize>>) -> Result<Self> {
        let t = TransversalInstance { aux, parts, origin };
        t.validate()?;
        Ok(t)
    }

    pub fn from_parts(aux: Graph, parts: &[&[usize]]) -> Result<Self> {
        let n = aux.n();
        let parts = parts
            .iter()
            .map(|p| {
                if let Some(&v) = p.iter().find(|&&v| v >= n) {
                    return Err(Error::InvalidGraph(format!("part member {v} out of range")));
                }
                Ok(VertexSet::from_iter_with_capacity(n, p.iter().copied()))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(aux, parts, None)
    }

    /// Parts nonempty, pairwise disjoint, covering, with no internal edges.
    pub fn validate(&self) -> Result<()> {
        let n = self.aux.n();
        let mut covered = VertexSet::new(n);
        for (i, p) in self.parts.iter().enumerate() {
            if p.capacity() != n {
                return Err(Error::Internal(format!("part {i} has wrong capacity")));
            }
            if p.is_empty() {
                return Err(Error::Internal(format!("part {i} is empty")));
            }
            if covered.intersects(p) {
                return Err(Error::Internal(format!("part {i} overlaps an earlier part")));
            }
            if !self.aux.is_independent(p) {
                return Err(Error::Internal(format!("part {i} contains an aux edge")));
            }
            covered.union_with(p);
        }
        if covered.len() != n {
            return Err(Error::Internal("parts do not cover the aux graph".into()));
        }
        if let Some(o) = &self.origin {
            if o.len() != n {
                return Err(Error::Internal("origin map has wrong length".into()));
            }
        }
        Ok(())
    }

    pub fn to_json(&self) -> InstanceJson {
        InstanceJson {
            aux: GraphJson::from(&self.aux),
            parts: self.parts.iter().map(VertexSet::to_vec).collect(),
            origin: self.origin.clone(),
        }
    }

    pub fn from_json(j: &InstanceJson) -> Result<Self> {
        let aux = j.aux.to_graph()?;
        let n = aux.n();
        let mut parts = Vec::with_capacity(j.parts.len());
        for p in &j.parts {
            if p.iter().any(|&v| v >= n) {
                return Err(Error::InvalidGraph("part member out of range".into()));
            }
            parts.push(VertexSet::from_iter_with_capacity(n, p.iter().copied()));
        }
        Self::new(aux, parts, j.origin.clone())
    }

    /// Host-graph vertices of a transversal (aux labels if no origin is kept).
    pub fn to_host(&self, t: &Transversal) -> Vec<usize> {
        match &self.origin {
            Some(o) => t.picks.iter().map(|&v| o[v]).collect(),
            None => t.picks.clone(),
        }
    }
}

/// Builds the auxiliary graph over the union of the cores: its edges are the
/// host edges joining two different cores, and its parts are the cores.
/// Aux vertices are the core members relabelled in ascending host order.
pub fn build_aux_graph(g: &Graph, cores: &[CliqueCore]) -> Result<TransversalInstance> {
    let n = g.n();
    let mut all = VertexSet::new(n);
    let mut owner = vec![usize::MAX; n];
    for (i, c) in cores.iter().enumerate() {
        if all.intersects(&c.core) {
            return Err(Error::Internal(format!("core {i} overlaps an earlier core")));
        }
        all.union_with(&c.core);
        for v in c.core.iter() {
            owner[v] = i;
        }
    }
    let origin: Vec<usize> = all.to_vec();
    let mut index = vec![usize::MAX; n];
    for (a, &v) in origin.iter().enumerate() {
        index[v] = a;
    }
    let m = origin.len();
    let mut aux = Graph::empty(m);
    for (a, &v) in origin.iter().enumerate() {
        for w in g.neighbors(v).intersection(&all).iter() {
            if owner[w] != owner[v] && index[w] > a {
                aux.add_edge(a, index[w]);
            }
        }
    }
    let parts = cores
        .iter()
        .map(|c| VertexSet::from_iter_with_capacity(m, c.core.iter().map(|v| index[v])))
        .collect();
    TransversalInstance::new(aux, parts, Some(origin))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct HaxellCondition {
    /// Maximum degree of the aux graph.
    pub k: usize,
    pub min_part: usize,
    pub satisfied: bool,
}

/// Every part has at least `2 * Δ(aux)` vertices.
pub fn haxell_precondition(t: &TransversalInstance) -> HaxellCondition {
    let k = t.aux.max_degree();
    let min_part = t.parts.iter().map(VertexSet::len).min().unwrap_or(0);
    HaxellCondition { k, min_part, satisfied: t.parts.iter().all(|p| p.len() >= 2 * k) }
}

/// Checks a transversal against its instance without trusting any solver.
pub fn is_valid_transversal(t: &TransversalInstance, tr: &Transversal) -> bool {
    if tr.picks.len() != t.parts.len() {
        return false;
    }
    if !tr.picks.iter().zip(&t.parts).all(|(&v, p)| p.contains(v)) {
        return false;
    }
    let set = VertexSet::from_iter_with_capacity(t.aux.n(), tr.picks.iter().copied());
    set.len() == tr.picks.len() && t.aux.is_independent(&set)
}

/// Exhaustive backtracking. Parts are visited in ascending size (then
/// index) and candidates in ascending vertex order, so the first transversal
/// in that order is returned. `None` means no transversal exists.
pub fn find_transversal(t: &TransversalInstance) -> Option<Transversal> {
    let mut order: Vec<usize> = (0..t.parts.len()).collect();
    order.sort_by_key(|&i| (t.parts[i].len(), i));
    let parts: Vec<Vec<usize>> = t.parts.iter().map(VertexSet::to_vec).collect();
    let mut picks = vec![usize::MAX; parts.len()];
    let blocked = VertexSet::new(t.aux.n());
    if search(&t.aux, &parts, &order, 0, &blocked, &mut picks) {
        Some(Transversal { picks })
    } else {
        None
    }
}

fn search(
    aux: &Graph,
    parts: &[Vec<usize>],
    order: &[usize],
    depth: usize,
    blocked: &VertexSet,
    picks: &mut [usize],
) -> bool {
    let Some(&part) = order.get(depth) else {
        return true;
    };
    for &v in &parts[part] {
        if blocked.contains(v) {
            continue;
        }
        picks[part] = v;
        let next = blocked.union(aux.neighbors(v));
        if search(aux, parts, order, depth + 1, &next, picks) {
            return true;
        }
    }
    false
}

/// Randomized min-conflicts search with `50 * parts` repair steps. A `None`
/// result is inconclusive; fall back to [`find_transversal`].
pub fn greedy_transversal(t: &TransversalInstance, seed: u64) -> Option<Transversal> {
    let r = t.parts.len();
    if r == 0 {
        return Some(Transversal { picks: Vec::new() });
    }
    let mut rng = Rng::new(seed);
    let parts: Vec<Vec<usize>> = t.parts.iter().map(VertexSet::to_vec).collect();
    let mut picks: Vec<usize> = parts
        .iter()
        .map(|p| p[rng.below(p.len() as u64) as usize])
        .collect();

    let conflicts = |picks: &[usize], skip: usize, v: usize| {
        picks
            .iter()
            .enumerate()
            .filter(|&(j, &w)| j != skip && t.aux.has_edge(v, w))
            .count()
    };

    for _ in 0..50 * r {
        let bad: Vec<usize> = (0..r).filter(|&i| conflicts(&picks, i, picks[i]) > 0).collect();
        if bad.is_empty() {
            break;
        }
        let i = bad[rng.below(bad.len() as u64) as usize];
        let scores: Vec<usize> = parts[i].iter().map(|&v| conflicts(&picks, i, v)).collect();
        let best = *scores.iter().min().expect("parts are nonempty");
        let ties: Vec<usize> = (0..scores.len()).filter(|&c| scores[c] == best).collect();
        picks[i] = parts[i][ties[rng.below(ties.len() as u64) as usize]];
    }

    let tr = Transversal { picks };
    is_valid_transversal(t, &tr).then_some(tr)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clique::{component_cores, intersection_graph, max_cliques};
    use crate::fixtures;

    fn instance_for(g: &Graph) -> TransversalInstance {
        let f = max_cliques(g).unwrap();
        build_aux_graph(g, &component_cores(&intersection_graph(&f))).unwrap()
    }

    #[test]
    fn aux_graph_examples() {
        let t = instance_for(&fixtures::diamond());
        assert_eq!(t.aux, Graph::empty(2));
        assert_eq!(t.parts.len(), 1);
        assert_eq!(t.origin, Some(vec![1, 2]));

        let t = instance_for(&fixtures::two_disjoint_k4());
        assert_eq!(t.aux, Graph::empty(8));
        assert_eq!(t.parts.len(), 2);

        // Two singleton cores joined by a host edge.
        let g = Graph::from_edges(2, &[(0, 1)]).unwrap();
        let cores = vec![
            CliqueCore { component: vec![0], core: VertexSet::from_iter_with_capacity(2, [0]) },
            CliqueCore { component: vec![1], core: VertexSet::from_iter_with_capacity(2, [1]) },
        ];
        let t = build_aux_graph(&g, &cores).unwrap();
        assert_eq!(t.aux.edges(), vec![(0, 1)]);
    }

    #[test]
    fn overlapping_cores_rejected() {
        let g = Graph::complete(3);
        let c = CliqueCore { component: vec![0], core: VertexSet::from_iter_with_capacity(3, [0, 1]) };
        assert!(matches!(build_aux_graph(&g, &[c.clone(), c]), Err(Error::Internal(_))));
    }

    #[test]
    fn haxell_examples() {
        let h = haxell_precondition(&instance_for(&fixtures::diamond()));
        assert_eq!((h.k, h.min_part, h.satisfied), (0, 2, true));

        let edge = TransversalInstance::from_parts(Graph::from_edges(2, &[(0, 1)]).unwrap(), &[&[0], &[1]]).unwrap();
        let h = haxell_precondition(&edge);
        assert_eq!((h.k, h.min_part, h.satisfied), (1, 1, false));

        let h = haxell_precondition(&instance_for(&fixtures::two_disjoint_k4()));
        assert_eq!((h.k, h.satisfied), (0, true));
    }

    #[test]
    fn find_transversal_examples() {
        let free = TransversalInstance::from_parts(Graph::empty(2), &[&[0], &[1]]).unwrap();
        assert_eq!(find_transversal(&free).unwrap().picks, vec![0, 1]);

        let edge = TransversalInstance::from_parts(Graph::from_edges(2, &[(0, 1)]).unwrap(), &[&[0], &[1]]).unwrap();
        assert_eq!(find_transversal(&edge), None);

        // x1=0, y1=1, x2=2, y2=3; edges x1-x2, x1-y2.
        let g = Graph::from_edges(4, &[(0, 2), (0, 3)]).unwrap();
        let t = TransversalInstance::from_parts(g, &[&[0, 1], &[2, 3]]).unwrap();
        assert_eq!(find_transversal(&t).unwrap().picks, vec![1, 2]);
    }

    #[test]
    fn greedy_examples() {
        let free = TransversalInstance::from_parts(Graph::empty(3), &[&[0], &[1, 2]]).unwrap();
        assert!(is_valid_transversal(&free, &greedy_transversal(&free, 1).unwrap()));

        let edge = TransversalInstance::from_parts(Graph::from_edges(2, &[(0, 1)]).unwrap(), &[&[0], &[1]]).unwrap();
        assert_eq!(greedy_transversal(&edge, 1), None);

        let d = instance_for(&fixtures::diamond());
        for seed in 0..10 {
            let tr = greedy_transversal(&d, seed).unwrap();
            assert!(matches!(d.to_host(&tr).as_slice(), [1] | [2]));
        }
    }

    #[test]
    fn validator_rejects_bad_picks() {
        let g = Graph::from_edges(4, &[(0, 2)]).unwrap();
        let t = TransversalInstance::from_parts(g, &[&[0, 1], &[2, 3]]).unwrap();
        assert!(!is_valid_transversal(&t, &Transversal { picks: vec![0, 2] }));
        assert!(!is_valid_transversal(&t, &Transversal { picks: vec![2, 0] }));
        assert!(!is_valid_transversal(&t, &Transversal { picks: vec![0] }));
        assert!(is_valid_transversal(&t, &Transversal { picks: vec![0, 3] }));
    }

    #[test]
    fn instance_json_round_trip() {
        let t = instance_for(&fixtures::g7());
        let text = serde_json::to_string(&t.to_json()).unwrap();
        let back = TransversalInstance::from_json(&serde_json::from_str(&text).unwrap()).unwrap();
        assert_eq!(back, t);
        let bad = r#"{"aux":{"n":2,"edges":[[0,1]]},"parts":[[0,1]]}"#;
        assert!(TransversalInstance::from_json(&serde_json::from_str(bad).unwrap()).is_err());
    }
}
