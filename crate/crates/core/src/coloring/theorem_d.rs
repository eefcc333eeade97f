//! Coloring by repeated clique destruction.
//!
//! While `4ω >= 3(Δ+1)`, a clique-destroying independent set is grown to a
//! maximal one and given a fresh color; this lowers ω by exactly one and Δ
//! by at least one, so one color per peel keeps the total within
//! `⌈(ω+Δ+1)/2⌉`. Once the hypothesis fails, `⌈7ω/6⌉ <= ⌈(ω+Δ+1)/2⌉` and the
//! remaining graph is handed to a base colorer bound by the larger of the
//! two quantities.

use serde::Serialize;

use super::bounds::{reed_bound, seven_sixths_bound};
use super::chromatic::{chromatic_number, ColoringCertificate};
use crate::clique::omega;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::main_lemma::{destroy_clique, extend_to_maximal, three_quarters_hypothesis};

/// Colors graphs on which the peeling step no longer applies.
///
/// Contract: on any input the returned coloring uses at most
/// `max(⌈7ω/6⌉, ⌈(ω+Δ+1)/2⌉)` colors.
pub trait BaseColorer {
    fn color(&self, g: &Graph) -> Result<ColoringCertificate>;
}

impl<F> BaseColorer for F
where
    F: Fn(&Graph) -> Result<ColoringCertificate>,
{
    fn color(&self, g: &Graph) -> Result<ColoringCertificate> {
        self(g)
    }
}

/// Exact chromatic number as the base colorer.
#[derive(Clone, Copy, Debug, Default)]
pub struct ExactColorer;

impl BaseColorer for ExactColorer {
    fn color(&self, g: &Graph) -> Result<ColoringCertificate> {
        Ok(chromatic_number(g).1)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct TheoremDColoring {
    pub certificate: ColoringCertificate,
    /// Number of independent sets peeled before the base colorer ran.
    pub peels: usize,
    pub omega: usize,
    pub delta: usize,
}

pub fn theorem_d_color<B: BaseColorer + ?Sized>(g: &Graph, base: &B) -> Result<TheoremDColoring> {
    let n = g.n();
    let w = omega(g);
    let delta = g.max_degree();
    let target = reed_bound(w, delta);
    let mut colors = vec![usize::MAX; n];
    let mut current = g.clone();
    // `labels[v]` is the vertex of `g` behind vertex `v` of `current`.
    let mut labels: Vec<usize> = (0..n).collect();
    let mut peels = 0;

    while current.n() > 0 {
        let cw = omega(&current);
        let cd = current.max_degree();
        if !three_quarters_hypothesis(cw, cd) {
            break;
        }
        let cert = destroy_clique(&current)?;
        let set = extend_to_maximal(&current, &cert.independent_set)?;
        for v in set.iter() {
            colors[labels[v]] = peels;
        }
        let (rest, map) = current.remove_vertices(&set);
        if rest.n() > 0 && (omega(&rest) + 1 != cw || rest.max_degree() >= cd) {
            return Err(Error::Internal("peeled set did not lower both omega and delta".into()));
        }
        labels = map.into_iter().map(|v| labels[v]).collect();
        current = rest;
        peels += 1;
    }
    if peels > w {
        return Err(Error::Internal(format!("{peels} peels exceed omega {w}")));
    }

    if current.n() > 0 {
        let cw = omega(&current);
        let cd = current.max_degree();
        let reed = reed_bound(cw, cd);
        let allowed = seven_sixths_bound(cw).max(reed);
        let leaf = base.color(&current)?;
        if !leaf.verify(&current) || leaf.color_count > allowed {
            return Err(Error::OracleContract { used: leaf.color_count, allowed, witness: current });
        }
        // Below the 3/4 threshold the seven-sixths term never exceeds the Reed term.
        if allowed != reed {
            return Err(Error::Internal(format!("ceil(7w/6) > reed bound at omega={cw}, delta={cd}")));
        }
        for (v, &c) in leaf.colors.iter().enumerate() {
            colors[labels[v]] = peels + c;
        }
    }

    let certificate = ColoringCertificate::from_colors(&colors).with_bound(target);
    if !certificate.verify(g) {
        return Err(Error::Internal(format!(
            "final coloring invalid or above bound: {} colors, bound {target}",
            certificate.color_count
        )));
    }
    Ok(TheoremDColoring { certificate, peels, omega: w, delta })
}
