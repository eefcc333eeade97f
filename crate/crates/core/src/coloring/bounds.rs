//! Integer bound arithmetic and the bound checkers built on exact χ, χ*, ω.

use serde::Serialize;

use super::chromatic::chromatic_number;
use super::fractional::{fractional_chromatic, RationalValue};
use crate::clique::omega;
use crate::error::Result;
use crate::graph::{Graph, Multigraph};
use crate::main_lemma::three_quarters_hypothesis;

/// `⌈a / b⌉` for `b > 0`.
pub fn ceil_div(a: usize, b: usize) -> usize {
    a.div_ceil(b)
}

/// `⌈(ω + Δ + 1) / 2⌉`.
pub fn reed_bound(omega: usize, delta: usize) -> usize {
    ceil_div(omega + delta + 1, 2)
}

/// `⌈7ω / 6⌉`.
pub fn seven_sixths_bound(omega: usize) -> usize {
    ceil_div(7 * omega, 6)
}

/// `⌊1.1Δ + 0.7⌋`, computed as `⌊(11Δ + 7) / 10⌋`.
pub fn caprara_rizzi_floor(delta: usize) -> usize {
    (11 * delta + 7) / 10
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct BoundFlags {
    /// `χ <= reed_bound`
    pub reed: bool,
    /// `χ <= max(seven_sixths, reed_bound)`
    pub max_bound: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub omega: usize,
    pub delta: usize,
    pub chi: usize,
    pub reed_bound: usize,
    pub seven_sixths: usize,
    pub hypothesis_3_4: bool,
    pub satisfied: BoundFlags,
}

pub fn reed_bound_report(g: &Graph) -> BoundReport {
    let w = omega(g);
    let delta = g.max_degree();
    let (chi, _) = chromatic_number(g);
    let reed = reed_bound(w, delta);
    let seven = seven_sixths_bound(w);
    BoundReport {
        omega: w,
        delta,
        chi,
        reed_bound: reed,
        seven_sixths: seven,
        hypothesis_3_4: three_quarters_hypothesis(w, delta),
        satisfied: BoundFlags { reed: chi <= reed, max_bound: chi <= reed.max(seven) },
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MolloyReedReport {
    pub omega: usize,
    pub delta: usize,
    pub chi_star: RationalValue,
    /// `2χ* <= ω + Δ + 1`, exactly.
    pub holds: bool,
}

pub fn molloy_reed_check(g: &Graph) -> Result<MolloyReedReport> {
    let chi_star = fractional_chromatic(g)?;
    let w = omega(g);
    let delta = g.max_degree();
    let lhs = 2 * chi_star.numerator as i128;
    let rhs = (w + delta + 1) as i128 * chi_star.denominator as i128;
    Ok(MolloyReedReport { omega: w, delta, chi_star, holds: lhs <= rhs })
}

/// Edge chromatic number: χ of the line graph.
pub fn chromatic_index(h: &Multigraph) -> usize {
    chromatic_number(&h.line_graph().0).0
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CapraraRizziReport {
    pub delta_h: usize,
    pub chi: usize,
    pub omega_l: usize,
    pub floor_term: usize,
    pub chi_star: RationalValue,
    pub chi_star_ceil: usize,
    pub bound: usize,
    pub holds: bool,
    /// `Δ(H) <= ω(L(H))`; `None` when `H` has no edges.
    pub delta_le_omega: Option<bool>,
    /// `⌊1.1ω + 0.7⌋ <= ⌈7ω/6⌉` at `ω = ω(L(H))`.
    pub floor_le_seven_sixths: bool,
}

impl CapraraRizziReport {
    pub fn all_hold(&self) -> bool {
        self.holds && self.delta_le_omega.unwrap_or(true) && self.floor_le_seven_sixths
    }
}

pub fn caprara_rizzi_check(h: &Multigraph) -> Result<CapraraRizziReport> {
    let (l, _) = h.line_graph();
    let delta_h = h.max_degree();
    let (chi, _) = chromatic_number(&l);
    let w = omega(&l);
    let chi_star = fractional_chromatic(&l)?;
    let chi_star_ceil = chi_star.ceil() as usize;
    let floor_term = caprara_rizzi_floor(delta_h);
    let bound = floor_term.max(chi_star_ceil);
    Ok(CapraraRizziReport {
        delta_h,
        chi,
        omega_l: w,
        floor_term,
        chi_star,
        chi_star_ceil,
        bound,
        holds: chi <= bound,
        delta_le_omega: (delta_h >= 1).then_some(delta_h <= w),
        floor_le_seven_sixths: caprara_rizzi_floor(w) <= seven_sixths_bound(w),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LineGraphReedReport {
    pub omega: usize,
    pub delta: usize,
    pub chi: usize,
    pub reed_bound: usize,
    pub holds: bool,
}

pub fn verify_line_graph_reed(h: &Multigraph) -> LineGraphReedReport {
    let (l, _) = h.line_graph();
    let w = omega(&l);
    let delta = l.max_degree();
    let (chi, _) = chromatic_number(&l);
    let reed = reed_bound(w, delta);
    LineGraphReedReport { omega: w, delta, chi, reed_bound: reed, holds: chi <= reed }
}
