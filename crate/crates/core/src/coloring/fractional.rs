//! Exact fractional chromatic number.
//!
//! Solves `min Σ x_S` subject to `Σ_{S ∋ v} x_S >= 1`, `x >= 0`, with one
//! column per maximal independent set, by a two-phase tableau simplex over
//! exact rationals using Bland's rule. The optimal dual (a fractional clique)
//! is read off the final tableau and returned alongside the primal weights so
//! optimality can be checked without trusting the pivoting.

use std::fmt;

use num_integer::Integer;
use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::bitset::VertexSet;
use crate::clique::{maximal_cliques, DEFAULT_CLIQUE_CAP};
use crate::error::{Error, Result};
use crate::graph::Graph;

pub const DEFAULT_FRACTIONAL_CAP: usize = 14;

type Q = Ratio<i128>;

/// A rational in lowest terms with positive denominator.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RationalValue {
    pub numerator: i64,
    pub denominator: i64,
}

impl RationalValue {
    pub fn new(numerator: i64, denominator: i64) -> Self {
        assert!(denominator != 0, "zero denominator");
        let g = numerator.gcd(&denominator).max(1);
        let s = denominator.signum();
        RationalValue { numerator: s * numerator / g, denominator: s * denominator / g }
    }

    pub fn integer(v: i64) -> Self {
        RationalValue { numerator: v, denominator: 1 }
    }

    pub fn ceil(&self) -> i64 {
        Integer::div_ceil(&self.numerator, &self.denominator)
    }

    fn from_q(q: Q) -> Self {
        RationalValue::new(
            i64::try_from(*q.numer()).expect("numerator fits i64"),
            i64::try_from(*q.denom()).expect("denominator fits i64"),
        )
    }

    pub fn as_f64(&self) -> f64 {
        self.numerator as f64 / self.denominator as f64
    }
}

impl PartialOrd for RationalValue {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for RationalValue {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.numerator as i128 * other.denominator as i128).cmp(&(other.numerator as i128 * self.denominator as i128))
    }
}

impl fmt::Display for RationalValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numerator, self.denominator)
    }
}

/// Optimal primal and dual solutions of the covering program.
#[derive(Clone, Debug, Serialize)]
pub struct FractionalCertificate {
    pub value: RationalValue,
    /// Maximal independent sets with positive weight.
    pub set_weights: Vec<(VertexSet, RationalValue)>,
    /// Dual weights, one per vertex.
    pub vertex_weights: Vec<RationalValue>,
}

pub fn fractional_chromatic(g: &Graph) -> Result<RationalValue> {
    fractional_chromatic_capped(g, DEFAULT_FRACTIONAL_CAP)
}

pub fn fractional_chromatic_capped(g: &Graph, cap: usize) -> Result<RationalValue> {
    fractional_chromatic_certified(g, cap).map(|c| c.value)
}

pub fn fractional_chromatic_certified(g: &Graph, cap: usize) -> Result<FractionalCertificate> {
    let n = g.n();
    if n > cap {
        return Err(Error::ResourceCap { what: "vertex count for fractional chromatic number", cap });
    }
    if n == 0 {
        return Ok(FractionalCertificate {
            value: RationalValue::integer(0),
            set_weights: Vec::new(),
            vertex_weights: Vec::new(),
        });
    }
    let sets = maximal_cliques(&g.complement(), DEFAULT_CLIQUE_CAP)?;
    let lp = CoverLp::new(n, &sets);
    let (x, y, value) = lp.solve();
    let set_weights = sets
        .into_iter()
        .zip(x)
        .filter(|(_, w)| *w != Q::from_integer(0))
        .map(|(s, w)| (s, RationalValue::from_q(w)))
        .collect();
    Ok(FractionalCertificate {
        value: RationalValue::from_q(value),
        set_weights,
        vertex_weights: y.into_iter().map(RationalValue::from_q).collect(),
    })
}

/// Dense tableau. Columns: `k` set variables, `n` surplus, `n` artificial,
/// then the right-hand side.
struct CoverLp {
    n: usize,
    k: usize,
    rows: Vec<Vec<Q>>,
    basis: Vec<usize>,
}

impl CoverLp {
    fn new(n: usize, sets: &[VertexSet]) -> Self {
        let k = sets.len();
        let width = k + 2 * n + 1;
        let zero = Q::from_integer(0);
        let one = Q::from_integer(1);
        let rows = (0..n)
            .map(|v| {
                let mut row = vec![zero; width];
                for (j, s) in sets.iter().enumerate() {
                    if s.contains(v) {
                        row[j] = one;
                    }
                }
                row[k + v] = -one;
                row[k + n + v] = one;
                row[width - 1] = one;
                row
            })
            .collect();
        CoverLp { n, k, rows, basis: (0..n).map(|v| k + n + v).collect() }
    }

    fn rhs(&self) -> usize {
        self.k + 2 * self.n
    }

    fn pivot(&mut self, r: usize, c: usize) {
        let p = self.rows[r][c];
        for e in self.rows[r].iter_mut() {
            *e /= p;
        }
        let pivot_row = self.rows[r].clone();
        for (i, row) in self.rows.iter_mut().enumerate() {
            if i == r {
                continue;
            }
            let f = row[c];
            if f == Q::from_integer(0) {
                continue;
            }
            for (e, pe) in row.iter_mut().zip(&pivot_row) {
                if *pe != Q::from_integer(0) {
                    *e -= f * pe;
                }
            }
        }
        self.basis[r] = c;
    }

    /// Minimizes `cost · z` over columns `< allowed`, starting from the
    /// current feasible basis, with Bland's smallest-index rule.
    fn minimize(&mut self, cost: &[Q], allowed: usize) {
        let zero = Q::from_integer(0);
        loop {
            let entering = (0..allowed).find(|&j| {
                if self.basis.contains(&j) {
                    return false;
                }
                let reduced = self
                    .basis
                    .iter()
                    .zip(&self.rows)
                    .fold(cost[j], |acc, (&b, row)| acc - cost[b] * row[j]);
                reduced < zero
            });
            let Some(c) = entering else { return };
            let rhs = self.rhs();
            let leaving = (0..self.rows.len())
                .filter(|&i| self.rows[i][c] > zero)
                .min_by(|&a, &b| {
                    let ra = self.rows[a][rhs] / self.rows[a][c];
                    let rb = self.rows[b][rhs] / self.rows[b][c];
                    ra.cmp(&rb).then(self.basis[a].cmp(&self.basis[b]))
                })
                .expect("covering program is bounded below by zero");
            self.pivot(leaving, c);
        }
    }

    /// Returns primal set weights, dual vertex weights and the optimum.
    fn solve(mut self) -> (Vec<Q>, Vec<Q>, Q) {
        let (n, k) = (self.n, self.k);
        let zero = Q::from_integer(0);
        let one = Q::from_integer(1);
        let art = k + n;

        let mut phase1 = vec![zero; k + 2 * n];
        phase1[art..].iter_mut().for_each(|c| *c = one);
        self.minimize(&phase1, k + 2 * n);

        // Every vertex lies in some maximal independent set, so phase one
        // reaches zero; drive zero-level artificials out of the basis.
        for r in 0..n {
            if self.basis[r] >= art {
                if let Some(c) = (0..art).find(|&c| self.rows[r][c] != zero) {
                    self.pivot(r, c);
                }
            }
        }

        let mut phase2 = vec![zero; k + 2 * n];
        phase2[..k].iter_mut().for_each(|c| *c = one);
        self.minimize(&phase2, art);

        let rhs = self.rhs();
        let mut x = vec![zero; k];
        for (r, &b) in self.basis.iter().enumerate() {
            if b < k {
                x[b] = self.rows[r][rhs];
            }
        }
        // The artificial columns started as the identity, so they now hold
        // the basis inverse and y = c_B B^{-1} reads off directly.
        let y: Vec<Q> = (0..n)
            .map(|v| {
                self.basis
                    .iter()
                    .zip(&self.rows)
                    .fold(zero, |acc, (&b, row)| acc + phase2[b] * row[art + v])
            })
            .collect();
        let value = x.iter().fold(zero, |a, b| a + b);
        (x, y, value)
    }
}
