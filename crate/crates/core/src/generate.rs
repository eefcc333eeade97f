//! Seeded graph generators. Every generator draws from [`Rng`] in a fixed
//! order, so equal arguments give identical graphs on every platform.

use crate::clique::omega;
use crate::error::{Error, Result};
use crate::graph::{Graph, Multigraph};
use crate::main_lemma::three_quarters_hypothesis;
use crate::rng::{derive_seed, Rng};

/// Retry budget for generators that filter their output.
pub const GENERATION_ATTEMPTS: usize = 16;

/// Erdős–Rényi `G(n, p)`: pairs `(u, v)`, `u < v`, are visited in
/// lexicographic order and each is kept when the next uniform float is `< p`.
pub fn gen_er(n: usize, p: f64, seed: u64) -> Graph {
    assert!((0.0..=1.0).contains(&p), "edge probability {p} outside [0, 1]");
    let mut rng = Rng::new(seed);
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.bernoulli(p) {
                g.add_edge(u, v);
            }
        }
    }
    g
}

/// Adds random cross-cluster edges (pairs in lexicographic order, each
/// proposed with probability `q`) while keeping every degree `<= cap`.
fn add_capped_noise(g: &mut Graph, cluster_of: &[usize], q: f64, cap: usize, rng: &mut Rng) {
    let n = g.n();
    for u in 0..n {
        for v in u + 1..n {
            if cluster_of[u] == cluster_of[v] || !rng.bernoulli(q) {
                continue;
            }
            if g.degree(u) < cap && g.degree(v) < cap {
                g.add_edge(u, v);
            }
        }
    }
}

/// `t` disjoint `k`-cliques plus noise edges between them that keep
/// `Δ <= ⌊4k/3⌋ - 1`. The result is checked to have `ω = k` and
/// `4ω >= 3(Δ+1)`; failed attempts retry with seeds derived from `seed`.
pub fn gen_hypothesis(k: usize, t: usize, q: f64, seed: u64) -> Result<Graph> {
    if k == 0 || t == 0 {
        return Err(Error::Precondition(format!("need k >= 1 and t >= 1, got k={k}, t={t}")));
    }
    assert!((0.0..=1.0).contains(&q), "noise probability {q} outside [0, 1]");
    let cap = (4 * k / 3).saturating_sub(1);
    let cluster_of: Vec<usize> = (0..k * t).map(|v| v / k).collect();
    for attempt in 0..GENERATION_ATTEMPTS {
        let mut rng = Rng::new(derive_seed(seed, attempt as u64));
        let mut g = Graph::empty(k * t);
        for c in 0..t {
            for i in 0..k {
                for j in i + 1..k {
                    g.add_edge(c * k + i, c * k + j);
                }
            }
        }
        add_capped_noise(&mut g, &cluster_of, q, cap, &mut rng);
        let w = omega(&g);
        if w == k && three_quarters_hypothesis(w, g.max_degree()) {
            return Ok(g);
        }
    }
    Err(Error::GenerationFailed {
        attempts: GENERATION_ATTEMPTS,
        params: format!("gen_hypothesis(k={k}, t={t}, q={q}, seed={seed})"),
    })
}

/// Clusters made of a `core`-clique plus `satellites` pairwise non-adjacent
/// vertices joined to the whole core, so each cluster carries several
/// overlapping maximum cliques. Cross-cluster noise keeps
/// `Δ <= ⌊4(core+1)/3⌋ - 1`. Output satisfies `4ω >= 3(Δ+1)`.
pub fn gen_core_satellite(clusters: usize, core: usize, satellites: usize, q: f64, seed: u64) -> Result<Graph> {
    if clusters == 0 || core == 0 {
        return Err(Error::Precondition("need at least one cluster with a nonempty core".into()));
    }
    let size = core + satellites;
    let n = clusters * size;
    let cluster_of: Vec<usize> = (0..n).map(|v| v / size).collect();
    let w = core + usize::from(satellites > 0);
    let cap = (4 * w / 3).saturating_sub(1);
    for attempt in 0..GENERATION_ATTEMPTS {
        let mut rng = Rng::new(derive_seed(seed, attempt as u64));
        let mut g = Graph::empty(n);
        for c in 0..clusters {
            let base = c * size;
            for i in 0..core {
                for j in i + 1..size {
                    g.add_edge(base + i, base + j);
                }
            }
        }
        add_capped_noise(&mut g, &cluster_of, q, cap, &mut rng);
        let gw = omega(&g);
        if three_quarters_hypothesis(gw, g.max_degree()) {
            return Ok(g);
        }
    }
    Err(Error::GenerationFailed {
        attempts: GENERATION_ATTEMPTS,
        params: format!("gen_core_satellite(clusters={clusters}, core={core}, satellites={satellites}, q={q}, seed={seed})"),
    })
}

/// `edges` random edges on `n >= 2` vertices; each edge draws `u` then a
/// distinct `v` uniformly. Parallel edges are kept.
pub fn gen_multigraph(n: usize, edges: usize, seed: u64) -> Multigraph {
    assert!(n >= 2 || edges == 0, "need two vertices to place an edge");
    let mut rng = Rng::new(seed);
    let list = (0..edges)
        .map(|_| {
            let u = rng.below(n as u64) as usize;
            let mut v = rng.below(n as u64 - 1) as usize;
            if v >= u {
                v += 1;
            }
            (u.min(v), u.max(v))
        })
        .collect();
    Multigraph::new(n, list).expect("generated endpoints are valid")
}
