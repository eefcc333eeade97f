//! Brute-force oracles. None of these share code paths with the library
//! algorithms they check; they only use `Graph` adjacency queries.
#![allow(dead_code)]

use cliquepeel::Graph;

pub fn is_clique_mask(g: &Graph, mask: u32) -> bool {
    let vs: Vec<usize> = (0..g.n()).filter(|&v| mask >> v & 1 == 1).collect();
    vs.iter().enumerate().all(|(i, &u)| vs[i + 1..].iter().all(|&v| g.has_edge(u, v)))
}

pub fn is_independent_mask(g: &Graph, mask: u32) -> bool {
    let vs: Vec<usize> = (0..g.n()).filter(|&v| mask >> v & 1 == 1).collect();
    vs.iter().enumerate().all(|(i, &u)| vs[i + 1..].iter().all(|&v| !g.has_edge(u, v)))
}

pub fn mask_to_vec(mask: u32) -> Vec<usize> {
    (0..32).filter(|&v| mask >> v & 1 == 1).collect()
}

/// All maximum cliques by scanning every subset, sorted lexicographically.
pub fn brute_max_cliques(g: &Graph) -> (usize, Vec<Vec<usize>>) {
    assert!(g.n() <= 20);
    let mut best = 0;
    let mut found = Vec::new();
    for mask in 0u32..(1 << g.n()) {
        if !is_clique_mask(g, mask) {
            continue;
        }
        let size = mask.count_ones() as usize;
        if size > best {
            best = size;
            found.clear();
        }
        if size == best {
            found.push(mask_to_vec(mask));
        }
    }
    found.sort();
    (best, found)
}

pub fn brute_omega(g: &Graph) -> usize {
    brute_max_cliques(g).0
}

pub fn brute_alpha(g: &Graph) -> usize {
    (0u32..(1 << g.n()))
        .filter(|&m| is_independent_mask(g, m))
        .map(|m| m.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

/// Smallest k admitting a proper coloring, by enumerating all k^n maps.
pub fn brute_chromatic(g: &Graph) -> usize {
    let n = g.n();
    if n == 0 {
        return 0;
    }
    let edges = g.edges();
    for k in 1..=n {
        let mut colors = vec![0usize; n];
        loop {
            if edges.iter().all(|&(u, v)| colors[u] != colors[v]) {
                return k;
            }
            let mut i = 0;
            while i < n {
                colors[i] += 1;
                if colors[i] < k {
                    break;
                }
                colors[i] = 0;
                i += 1;
            }
            if i == n {
                break;
            }
        }
    }
    n
}

/// Whether one pick per part can be made pairwise non-adjacent, by
/// enumerating the full product of the parts.
pub fn brute_transversal_exists(aux: &Graph, parts: &[Vec<usize>]) -> bool {
    let mut idx = vec![0usize; parts.len()];
    loop {
        let picks: Vec<usize> = parts.iter().zip(&idx).map(|(p, &i)| p[i]).collect();
        let ok = picks
            .iter()
            .enumerate()
            .all(|(a, &u)| picks[a + 1..].iter().all(|&v| u != v && !aux.has_edge(u, v)));
        if ok {
            return true;
        }
        let mut i = 0;
        while i < parts.len() {
            idx[i] += 1;
            if idx[i] < parts[i].len() {
                break;
            }
            idx[i] = 0;
            i += 1;
        }
        if i == parts.len() {
            return false;
        }
    }
}

/// Random graph from a small inline LCG, independent of the crate's PRNG.
pub fn lcg_graph(n: usize, p_percent: u64, seed: u64) -> Graph {
    let mut state = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            if (state >> 33) % 100 < p_percent {
                g.add_edge(u, v);
            }
        }
    }
    g
}
