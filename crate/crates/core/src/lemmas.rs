//! Checkers for the clique-intersection lemmas.
//!
//! Each checker recomputes both sides of its inequality with exact integer
//! arithmetic. A check whose premise holds but whose conclusion fails is
//! reported as [`Status::Refuted`] with a replayable witness, never dropped.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::bitset::VertexSet;
use crate::clique::{component_cores, intersection_graph, max_cliques, omega};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::io::GraphJson;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Status {
    Pass,
    Refuted,
    PremiseNotMet,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub graph: GraphJson,
    pub detail: String,
}

impl Witness {
    pub fn new(g: &Graph, detail: impl Into<String>) -> Self {
        Witness { graph: GraphJson::from(g), detail: detail.into() }
    }
}

/// Uniform JSON shape shared by all lemma checkers.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LemmaReport {
    pub lemma: String,
    pub premise_holds: bool,
    pub status: Status,
    pub witness: Option<Witness>,
    pub numbers: BTreeMap<String, i64>,
}

impl LemmaReport {
    pub fn premise_not_met(lemma: &str, numbers: BTreeMap<String, i64>) -> Self {
        LemmaReport {
            lemma: lemma.to_string(),
            premise_holds: false,
            status: Status::PremiseNotMet,
            witness: None,
            numbers,
        }
    }
}

pub(crate) fn numbers<const N: usize>(pairs: [(&str, i64); N]) -> BTreeMap<String, i64> {
    pairs.into_iter().map(|(k, v)| (k.to_string(), v)).collect()
}

/// `3ω > 2(Δ+1)`.
pub fn two_thirds_premise(omega: usize, delta: usize) -> bool {
    3 * omega > 2 * (delta + 1)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HajnalReport {
    pub intersection_size: usize,
    pub union_size: usize,
    /// `2ω - |∪Q|`, may be negative.
    pub bound: i64,
    pub holds: bool,
    pub status: Status,
}

impl HajnalReport {
    pub fn to_report(&self, g: &Graph, omega: usize) -> LemmaReport {
        LemmaReport {
            lemma: "hajnal".into(),
            premise_holds: true,
            status: self.status,
            witness: (!self.holds).then(|| Witness::new(g, format!("{self:?}"))),
            numbers: numbers([
                ("omega", omega as i64),
                ("intersection", self.intersection_size as i64),
                ("union", self.union_size as i64),
                ("bound", self.bound),
            ]),
        }
    }
}

/// `|∩Q| >= 2ω - |∪Q|` for a nonempty family of maximum cliques of `g`.
pub fn hajnal_check(g: &Graph, sub: &[VertexSet]) -> Result<HajnalReport> {
    hajnal_check_with_omega(g, omega(g), sub)
}

/// As [`hajnal_check`] with a precomputed clique number.
pub fn hajnal_check_with_omega(g: &Graph, omega: usize, sub: &[VertexSet]) -> Result<HajnalReport> {
    let first = sub
        .first()
        .ok_or_else(|| Error::Precondition("Hajnal check needs a nonempty family".into()))?;
    for q in sub {
        if q.capacity() != g.n() || q.len() != omega || !g.is_clique(q) {
            return Err(Error::Precondition(format!("{q:?} is not a maximum clique (omega={omega})")));
        }
    }
    let mut inter = first.clone();
    let mut union = first.clone();
    for q in &sub[1..] {
        inter.intersect_with(q);
        union.union_with(q);
    }
    let (i, u) = (inter.len(), union.len());
    let bound = 2 * omega as i64 - u as i64;
    let holds = i as i64 >= bound;
    Ok(HajnalReport {
        intersection_size: i,
        union_size: u,
        bound,
        holds,
        status: if holds { Status::Pass } else { Status::Refuted },
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComponentCompleteness {
    pub cliques: Vec<usize>,
    pub complete: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Lemma2Report {
    pub omega: usize,
    pub delta: usize,
    pub clique_count: usize,
    pub components: Vec<ComponentCompleteness>,
    pub status: Status,
    pub witness: Option<Witness>,
}

impl Lemma2Report {
    pub fn to_report(&self) -> LemmaReport {
        LemmaReport {
            lemma: "lemma2".into(),
            premise_holds: true,
            status: self.status,
            witness: self.witness.clone(),
            numbers: numbers([
                ("omega", self.omega as i64),
                ("delta", self.delta as i64),
                ("cliques", self.clique_count as i64),
                ("components", self.components.len() as i64),
            ]),
        }
    }
}

fn require_two_thirds(lemma: &'static str, g: &Graph) -> Result<(usize, usize)> {
    let delta = g.max_degree();
    let w = omega(g);
    if !two_thirds_premise(w, delta) {
        return Err(Error::PremiseNotMet {
            lemma,
            detail: format!("3*omega={} <= 2*(delta+1)={}", 3 * w, 2 * (delta + 1)),
        });
    }
    Ok((w, delta))
}

/// Under `3ω > 2(Δ+1)`, every connected component of the intersection graph
/// of all maximum cliques is complete.
pub fn transitivity_check(g: &Graph) -> Result<Lemma2Report> {
    let (w, delta) = require_two_thirds("lemma2", g)?;
    let family = max_cliques(g)?;
    let x = intersection_graph(&family);
    let mut witness = None;
    let components = x
        .components()
        .into_iter()
        .map(|comp| {
            let missing = comp
                .iter()
                .enumerate()
                .flat_map(|(a, &i)| comp[a + 1..].iter().map(move |&j| (i, j)))
                .find(|&(i, j)| !x.adjacent(i, j));
            if let (Some((i, j)), None) = (missing, &witness) {
                witness = Some(Witness::new(
                    g,
                    format!(
                        "cliques {:?} and {:?} share a component but are disjoint",
                        family.cliques()[i],
                        family.cliques()[j]
                    ),
                ));
            }
            ComponentCompleteness { cliques: comp, complete: missing.is_none() }
        })
        .collect::<Vec<_>>();
    let status = if witness.is_none() { Status::Pass } else { Status::Refuted };
    Ok(Lemma2Report { omega: w, delta, clique_count: family.len(), components, status, witness })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoreCheck {
    pub component: Vec<usize>,
    pub core: VertexSet,
    pub nonempty: bool,
    /// `|core| >= 2ω - (Δ+1)`.
    pub meets_size_bound: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KostochkaReport {
    pub omega: usize,
    pub delta: usize,
    pub size_bound: i64,
    pub cores: Vec<CoreCheck>,
    pub status: Status,
    pub witness: Option<Witness>,
}

impl KostochkaReport {
    pub fn to_report(&self) -> LemmaReport {
        let min_core = self.cores.iter().map(|c| c.core.len()).min().unwrap_or(0);
        LemmaReport {
            lemma: "kostochka".into(),
            premise_holds: true,
            status: self.status,
            witness: self.witness.clone(),
            numbers: numbers([
                ("omega", self.omega as i64),
                ("delta", self.delta as i64),
                ("components", self.cores.len() as i64),
                ("min_core", min_core as i64),
                ("size_bound", self.size_bound),
            ]),
        }
    }
}

/// Under `3ω > 2(Δ+1)`, the cliques of each component share a common vertex,
/// and in fact at least `2ω - (Δ+1)` of them.
pub fn kostochka_check(g: &Graph) -> Result<KostochkaReport> {
    let (w, delta) = require_two_thirds("kostochka", g)?;
    let family = max_cliques(g)?;
    let size_bound = 2 * w as i64 - (delta as i64 + 1);
    let mut witness = None;
    let cores = component_cores(&intersection_graph(&family))
        .into_iter()
        .map(|c| {
            let nonempty = !c.core.is_empty();
            let meets_size_bound = c.core.len() as i64 >= size_bound;
            if (!nonempty || !meets_size_bound) && witness.is_none() {
                witness = Some(Witness::new(
                    g,
                    format!("component {:?} has core {:?}, need size >= {size_bound}", c.component, c.core),
                ));
            }
            CoreCheck { component: c.component, core: c.core, nonempty, meets_size_bound }
        })
        .collect::<Vec<_>>();
    let status = if witness.is_none() { Status::Pass } else { Status::Refuted };
    Ok(KostochkaReport { omega: w, delta, size_bound, cores, status, witness })
}
