//! Independent sets that lower the clique number.
//!
//! When `4ω >= 3(Δ+1)`, the maximum cliques fall into intersection-graph
//! components whose common cores are large. Cross-core host edges form an
//! auxiliary graph of small degree, and one independent pick per core hits
//! every maximum clique exactly once.

use serde::{Deserialize, Serialize};

use crate::bitset::VertexSet;
use crate::clique::{component_cores, intersection_graph, max_cliques, omega};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::transversal::{
    build_aux_graph, find_transversal, greedy_transversal, haxell_precondition, is_valid_transversal,
    HaxellCondition, TransversalInstance,
};

/// `4ω >= 3(Δ+1)`.
pub fn three_quarters_hypothesis(omega: usize, delta: usize) -> bool {
    4 * omega >= 3 * (delta + 1)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DestructionCertificate {
    #[serde(rename = "I")]
    pub independent_set: VertexSet,
    pub omega_before: usize,
    pub omega_after: usize,
    pub maximal: bool,
    pub delta_before: usize,
    pub delta_after: usize,
}

/// The four inequalities bounding core sizes from below by twice the aux
/// degree, each evaluated separately in integers with `D = Δ+1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct HaxellChain {
    pub min_core: usize,
    pub aux_max_degree: usize,
    /// `min |F_i| >= 2ω - D`
    pub core_size: bool,
    /// `2(2ω - D) >= D`
    pub half_degree: bool,
    /// `D >= 4(D - ω)`
    pub outside_bound: bool,
    /// `D - ω >= Δ(H)`
    pub aux_degree: bool,
}

impl HaxellChain {
    pub fn evaluate(omega: usize, delta: usize, min_core: usize, aux_max_degree: usize) -> Self {
        let w = omega as i64;
        let d = delta as i64 + 1;
        HaxellChain {
            min_core,
            aux_max_degree,
            core_size: min_core as i64 >= 2 * w - d,
            half_degree: 2 * (2 * w - d) >= d,
            outside_bound: d >= 4 * (d - w),
            aux_degree: d - w >= aux_max_degree as i64,
        }
    }

    pub fn holds(&self) -> bool {
        self.core_size && self.half_degree && self.outside_bound && self.aux_degree
    }
}

/// Everything the construction produced on the way to its certificate.
#[derive(Clone, Debug)]
pub struct DestructionTrace {
    pub instance: TransversalInstance,
    pub condition: HaxellCondition,
    pub chain: HaxellChain,
    pub used_greedy: bool,
    pub certificate: DestructionCertificate,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct DestroyOptions {
    /// Try the randomized transversal search with this seed before the
    /// exact one. `None` runs the exact search only, which makes the result
    /// the first transversal in the documented search order.
    pub greedy_seed: Option<u64>,
}

pub fn destroy_clique(g: &Graph) -> Result<DestructionCertificate> {
    destroy_clique_traced(g, DestroyOptions::default()).map(|t| t.certificate)
}

pub fn destroy_clique_traced(g: &Graph, opts: DestroyOptions) -> Result<DestructionTrace> {
    if g.n() == 0 {
        return Err(Error::Precondition("graph has no vertices".into()));
    }
    let delta = g.max_degree();
    let family = max_cliques(g)?;
    let w = family.omega();
    if !three_quarters_hypothesis(w, delta) {
        return Err(Error::Hypothesis { omega: w, delta });
    }
    let cores = component_cores(&intersection_graph(&family));
    let instance = build_aux_graph(g, &cores)?;
    let condition = haxell_precondition(&instance);
    let min_core = cores.iter().map(|c| c.core.len()).min().unwrap_or(0);
    let chain = HaxellChain::evaluate(w, delta, min_core, condition.k);
    if !chain.holds() || !condition.satisfied {
        return Err(Error::Refuted {
            check: "main_lemma",
            detail: format!("core-size chain failed: {chain:?}, {condition:?}"),
            witness: g.clone(),
        });
    }

    let greedy = opts.greedy_seed.and_then(|s| greedy_transversal(&instance, s));
    let used_greedy = greedy.is_some();
    let transversal = match greedy {
        Some(t) => t,
        None => find_transversal(&instance).ok_or_else(|| Error::Refuted {
            check: "haxell",
            detail: format!("no independent transversal although {condition:?}"),
            witness: g.clone(),
        })?,
    };
    if !is_valid_transversal(&instance, &transversal) {
        return Err(Error::Internal("transversal solver returned an invalid pick".into()));
    }

    let set = VertexSet::from_iter_with_capacity(g.n(), instance.to_host(&transversal));
    let certificate = certify(g, set, w, delta)?;
    if certificate.omega_after + 1 != w {
        return Err(Error::Internal(format!(
            "clique number dropped from {w} to {}",
            certificate.omega_after
        )));
    }
    Ok(DestructionTrace { instance, condition, chain, used_greedy, certificate })
}

/// As [`destroy_clique`], then grows the set to a maximal independent set.
pub fn destroy_clique_maximal(g: &Graph) -> Result<DestructionCertificate> {
    let cert = destroy_clique(g)?;
    let grown = extend_to_maximal(g, &cert.independent_set)?;
    certify(g, grown, cert.omega_before, cert.delta_before)
}

fn certify(g: &Graph, set: VertexSet, omega_before: usize, delta_before: usize) -> Result<DestructionCertificate> {
    if !g.is_independent(&set) {
        return Err(Error::Internal("constructed set is not independent".into()));
    }
    let (rest, _) = g.remove_vertices(&set);
    Ok(DestructionCertificate {
        maximal: g.is_maximal_independent(&set),
        independent_set: set,
        omega_before,
        omega_after: omega(&rest),
        delta_before,
        delta_after: rest.max_degree(),
    })
}

/// Greedily adds vertices in ascending order while independence is kept.
pub fn extend_to_maximal(g: &Graph, set: &VertexSet) -> Result<VertexSet> {
    if set.capacity() != g.n() || !g.is_independent(set) {
        return Err(Error::Precondition(format!("{set:?} is not an independent set of the graph")));
    }
    let mut out = set.clone();
    let mut blocked = set.clone();
    for v in set.iter() {
        blocked.union_with(g.neighbors(v));
    }
    for v in 0..g.n() {
        if !blocked.contains(v) {
            out.insert(v);
            blocked.insert(v);
            blocked.union_with(g.neighbors(v));
        }
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DestructionFailure {
    OutOfRange,
    Independence,
    OmegaDrop,
    OmegaBefore,
    OmegaAfter,
    DeltaBefore,
    DeltaAfter,
    Maximality,
    DeltaDrop,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verification {
    Pass,
    Fail(DestructionFailure),
}

/// Recomputes every certificate field from scratch. The first failing
/// check, in declaration order of [`DestructionFailure`], is reported.
pub fn verify_destruction(g: &Graph, cert: &DestructionCertificate) -> Verification {
    use DestructionFailure::*;
    if cert.independent_set.iter().any(|v| v >= g.n()) {
        return Verification::Fail(OutOfRange);
    }
    let set = VertexSet::from_iter_with_capacity(g.n(), cert.independent_set.iter());
    if !g.is_independent(&set) {
        return Verification::Fail(Independence);
    }
    if cert.omega_after >= cert.omega_before {
        return Verification::Fail(OmegaDrop);
    }
    if omega(g) != cert.omega_before {
        return Verification::Fail(OmegaBefore);
    }
    let (rest, _) = g.remove_vertices(&set);
    if omega(&rest) != cert.omega_after {
        return Verification::Fail(OmegaAfter);
    }
    if g.max_degree() != cert.delta_before {
        return Verification::Fail(DeltaBefore);
    }
    if rest.max_degree() != cert.delta_after {
        return Verification::Fail(DeltaAfter);
    }
    if g.is_maximal_independent(&set) != cert.maximal {
        return Verification::Fail(Maximality);
    }
    if cert.maximal && rest.n() > 0 && cert.delta_after >= cert.delta_before {
        return Verification::Fail(DeltaDrop);
    }
    Verification::Pass
}
