use serde::{Deserialize, Serialize};

use crate::clique::omega;
use crate::graph::Graph;

/// A proper vertex coloring using colors `0..color_count`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColoringCertificate {
    pub colors: Vec<usize>,
    pub color_count: usize,
    pub bound_claimed: Option<usize>,
}

impl ColoringCertificate {
    /// Renumbers colors by first appearance so they occupy `0..count`.
    pub fn from_colors(colors: &[usize]) -> Self {
        let mut remap = std::collections::HashMap::new();
        let colors: Vec<usize> = colors
            .iter()
            .map(|c| {
                let next = remap.len();
                *remap.entry(*c).or_insert(next)
            })
            .collect();
        ColoringCertificate { color_count: remap.len(), colors, bound_claimed: None }
    }

    pub fn with_bound(mut self, bound: usize) -> Self {
        self.bound_claimed = Some(bound);
        self
    }

    /// Properness, count consistency, index range, and the claimed bound.
    pub fn verify(&self, g: &Graph) -> bool {
        if self.colors.len() != g.n() {
            return false;
        }
        if self.colors.iter().any(|&c| c >= self.color_count) {
            return false;
        }
        let mut used = vec![false; self.color_count];
        for &c in &self.colors {
            used[c] = true;
        }
        if used.iter().any(|u| !u) {
            return false;
        }
        if g.edges().iter().any(|&(u, v)| self.colors[u] == self.colors[v]) {
            return false;
        }
        self.bound_claimed.is_none_or(|b| self.color_count <= b)
    }
}

/// DSATUR greedy coloring: highest saturation, then highest degree, then
/// lowest index; each vertex gets the smallest free color.
pub fn dsatur(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut colors = vec![usize::MAX; n];
    let mut seen: Vec<Vec<bool>> = vec![Vec::new(); n];
    let mut sat = vec![0usize; n];
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| colors[v] == usize::MAX)
            .max_by(|&a, &b| (sat[a], g.degree(a)).cmp(&(sat[b], g.degree(b))).then(b.cmp(&a)))
            .expect("an uncolored vertex remains");
        let c = (0..).find(|&c| !seen[v].get(c).copied().unwrap_or(false)).unwrap();
        colors[v] = c;
        for w in g.neighbors(v).iter() {
            if seen[w].len() <= c {
                seen[w].resize(c + 1, false);
            }
            if !seen[w][c] {
                seen[w][c] = true;
                sat[w] += 1;
            }
        }
    }
    colors
}

struct KColoring<'a> {
    g: &'a Graph,
    k: usize,
    colors: Vec<usize>,
    /// `counts[v * k + c]`: neighbours of `v` currently colored `c`.
    counts: Vec<u32>,
    sat: Vec<usize>,
}

impl KColoring<'_> {
    fn assign(&mut self, v: usize, c: usize) {
        self.colors[v] = c;
        for w in self.g.neighbors(v).iter() {
            let slot = &mut self.counts[w * self.k + c];
            if *slot == 0 {
                self.sat[w] += 1;
            }
            *slot += 1;
        }
    }

    fn unassign(&mut self, v: usize, c: usize) {
        self.colors[v] = usize::MAX;
        for w in self.g.neighbors(v).iter() {
            let slot = &mut self.counts[w * self.k + c];
            *slot -= 1;
            if *slot == 0 {
                self.sat[w] -= 1;
            }
        }
    }

    fn solve(&mut self, colored: usize, used: usize) -> bool {
        let n = self.g.n();
        if colored == n {
            return true;
        }
        let v = (0..n)
            .filter(|&v| self.colors[v] == usize::MAX)
            .max_by(|&a, &b| {
                (self.sat[a], self.g.degree(a))
                    .cmp(&(self.sat[b], self.g.degree(b)))
                    .then(b.cmp(&a))
            })
            .expect("an uncolored vertex remains");
        if self.sat[v] >= self.k {
            return false;
        }
        // New colors are interchangeable, so only the first unused one is tried.
        for c in 0..self.k.min(used + 1) {
            if self.counts[v * self.k + c] != 0 {
                continue;
            }
            self.assign(v, c);
            if self.solve(colored + 1, used.max(c + 1)) {
                return true;
            }
            self.unassign(v, c);
        }
        false
    }
}

/// A proper coloring with at most `k` colors, if one exists.
pub fn k_coloring(g: &Graph, k: usize) -> Option<Vec<usize>> {
    let n = g.n();
    if n == 0 {
        return Some(Vec::new());
    }
    if k == 0 {
        return None;
    }
    let mut s = KColoring { g, k, colors: vec![usize::MAX; n], counts: vec![0; n * k], sat: vec![0; n] };
    s.solve(0, 0).then_some(s.colors)
}

/// Exact chromatic number: DSATUR upper bound, clique lower bound, then
/// k-colorability tests from the lower bound upward.
pub fn chromatic_number(g: &Graph) -> (usize, ColoringCertificate) {
    if g.n() == 0 {
        return (0, ColoringCertificate::from_colors(&[]));
    }
    let greedy = ColoringCertificate::from_colors(&dsatur(g));
    let lower = omega(g);
    for k in lower..greedy.color_count {
        if let Some(c) = k_coloring(g, k) {
            let cert = ColoringCertificate::from_colors(&c);
            return (cert.color_count, cert);
        }
    }
    (greedy.color_count, greedy)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn chromatic_examples() {
        for (g, chi) in [
            (Graph::complete(4), 4),
            (Graph::cycle(5), 3),
            (Graph::petersen(), 3),
            (fixtures::diamond(), 3),
            (Graph::empty(3), 1),
            (Graph::empty(0), 0),
            (Graph::cycle(6), 2),
        ] {
            let (got, cert) = chromatic_number(&g);
            assert_eq!(got, chi, "{g:?}");
            assert!(cert.verify(&g));
            assert_eq!(cert.color_count, chi);
        }
    }

    #[test]
    fn odd_cycle_not_two_colorable() {
        assert!(k_coloring(&Graph::cycle(5), 2).is_none());
        assert!(k_coloring(&Graph::petersen(), 2).is_none());
        assert!(k_coloring(&Graph::petersen(), 3).is_some());
    }

    #[test]
    fn dsatur_is_proper() {
        let g = Graph::petersen();
        assert!(ColoringCertificate::from_colors(&dsatur(&g)).verify(&g));
    }

    #[test]
    fn verify_catches_defects() {
        let g = Graph::complete(2);
        assert!(!ColoringCertificate::from_colors(&[0, 0]).verify(&g));
        let gap = ColoringCertificate { colors: vec![0, 2], color_count: 3, bound_claimed: None };
        assert!(!gap.verify(&g));
        assert!(!ColoringCertificate::from_colors(&[0, 1]).with_bound(1).verify(&g));
        assert!(ColoringCertificate::from_colors(&[5, 3]).verify(&g));
    }
}
