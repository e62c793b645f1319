//! Vertex-deletion descent: repeatedly delete a vertex of minimum Perron
//! entry, recording the spectral quantities and the per-step lemma checks.
//!
//! This is an instrumented experiment; a trace never certifies anything
//! about forbidden subgraphs.

use serde::{Deserialize, Serialize};

use crate::bounds::{turan_q, CriterionParams};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::spectral::{q_radius, SpectralResult, Tolerance};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DescentStep {
    pub order: usize,
    pub q: f64,
    pub min_entry: f64,
    /// Position of the minimum entry in this step's labeling (lowest index
    /// among ties).
    pub min_entry_vertex: usize,
    /// Same vertex in the labeling of the input graph.
    pub original_vertex: usize,
    /// Every vertex whose entry is within `cmp_tol` of the minimum.
    pub tie_set: Vec<usize>,
    pub min_degree: usize,
    pub residual: f64,
    pub reference_q: f64,
    pub lemma32_slack: f64,
    pub mind_holds: Option<bool>,
    pub dv_growth_holds: Option<bool>,
    pub dv_reference_holds: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub graph6: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum StopReason {
    MinDegreeExceeded,
    OrderFloor,
    QDroppedBelowReference,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DescentTrace {
    pub params: CriterionParams,
    pub floor: usize,
    pub steps: Vec<DescentStep>,
    pub stop_reason: StopReason,
}

impl DescentTrace {
    /// Vertices deleted, in input labels.
    pub fn deleted(&self) -> Vec<usize> {
        self.steps[..self.steps.len() - 1].iter().map(|s| s.original_vertex).collect()
    }
}

/// `δ − x²(q² − 2qδ + nδ)` for the minimum Perron entry `x`.
pub fn lemma_min_slack(g: &Graph, pair: &SpectralResult) -> f64 {
    let n = g.n() as f64;
    let delta = g.min_degree() as f64;
    let q = pair.radius;
    let x = pair.min_entry().0;
    delta - x * x * (q * q - 2.0 * q * delta + n * delta)
}

pub fn lemma_min_check(g: &Graph, tol: &Tolerance) -> Result<f64> {
    Ok(lemma_min_slack(g, &q_radius(g, tol)?))
}

/// `x² < (1 − ε)/n` when `q(H) ≥ reference_q` and `δ(H) ≤ (π − ε)n`;
/// `None` when the preconditions fail.
pub fn lemma_mind_check(h: &Graph, reference_q: f64, params: &CriterionParams, tol: &Tolerance) -> Result<Option<bool>> {
    let pair = q_radius(h, tol)?;
    Ok(mind_from_pair(h, &pair, reference_q, params, tol))
}

fn mind_from_pair(h: &Graph, pair: &SpectralResult, reference_q: f64, params: &CriterionParams, tol: &Tolerance) -> Option<bool> {
    let n = h.n() as f64;
    let pre = pair.radius >= reference_q - tol.cmp_tol && (h.min_degree() as f64) <= (params.pi - params.epsilon) * n;
    pre.then(|| {
        let x = pair.min_entry().0;
        x * x < (1.0 - params.epsilon) / n
    })
}

/// For the minimum-entry vertex `u`: `q(H−u) ≥ q(H)(1 − (1 − ε/6)/(n − 1))`
/// and `q(H−u) > reference_q_n1`, when `q(H) ≥ reference_q_n` and
/// `x_u² < (1 − ε)/n`. Both are `None` when the preconditions fail.
pub fn lemma_dv_check(
    h: &Graph,
    u: usize,
    params: &CriterionParams,
    reference_q_n: f64,
    reference_q_n1: f64,
    tol: &Tolerance,
) -> Result<(Option<bool>, Option<bool>)> {
    if u >= h.n() {
        return Err(Error::VertexOutOfRange(u, h.n()));
    }
    let pair = q_radius(h, tol)?;
    dv_from_pair(h, &pair, u, params, reference_q_n, reference_q_n1, tol)
}

fn dv_from_pair(
    h: &Graph,
    pair: &SpectralResult,
    u: usize,
    params: &CriterionParams,
    reference_q_n: f64,
    reference_q_n1: f64,
    tol: &Tolerance,
) -> Result<(Option<bool>, Option<bool>)> {
    let n = h.n();
    let x = pair.vector[u];
    let pre = n >= 2 && pair.radius >= reference_q_n - tol.cmp_tol && x * x < (1.0 - params.epsilon) / n as f64;
    if !pre {
        return Ok((None, None));
    }
    let q_minus = q_radius(&h.delete_vertex(u)?, tol)?.radius;
    let growth = q_minus >= pair.radius * (1.0 - (1.0 - params.epsilon / 6.0) / (n - 1) as f64) - tol.cmp_tol;
    Ok((Some(growth), Some(q_minus > reference_q_n1)))
}

#[derive(Clone, Copy, Debug, Default)]
pub struct DescentOptions {
    /// Embed each step's graph as graph6.
    pub keep_graphs: bool,
}

/// Runs the deletion process from `h` down to at most `floor` vertices. The
/// reference `q(𝓖_i)` is `q(T_{i,r})`.
pub fn descent_run(h: &Graph, params: &CriterionParams, floor: usize, tol: &Tolerance, opts: DescentOptions) -> Result<DescentTrace> {
    if floor < 1 || h.n() <= floor {
        return Err(Error::InvalidInput(format!(
            "descent needs |H| > floor >= 1, got |H| = {}, floor = {floor}",
            h.n()
        )));
    }
    let reference = |i: usize| turan_q(i, params.r, tol);
    let mut labels: Vec<usize> = (0..h.n()).collect();
    let mut cur = h.clone();
    let mut steps = Vec::new();
    let mut premise: Option<bool> = None;
    loop {
        let i = cur.n();
        let pair = q_radius(&cur, tol)?;
        let (x, _) = pair.min_entry();
        let tie_set: Vec<usize> = (0..i).filter(|&v| pair.vector[v] <= x + tol.cmp_tol).collect();
        let u = tie_set[0];
        let ref_i = reference(i)?;
        let above = pair.radius >= ref_i - tol.cmp_tol;
        let started_above = *premise.get_or_insert(above);
        let (dv_growth, dv_ref) = if i >= 2 {
            dv_from_pair(&cur, &pair, u, params, ref_i, reference(i - 1)?, tol)?
        } else {
            (None, None)
        };
        let delta = cur.min_degree();
        steps.push(DescentStep {
            order: i,
            q: pair.radius,
            min_entry: pair.vector[u],
            min_entry_vertex: u,
            original_vertex: labels[u],
            tie_set,
            min_degree: delta,
            residual: pair.residual,
            reference_q: ref_i,
            lemma32_slack: lemma_min_slack(&cur, &pair),
            mind_holds: mind_from_pair(&cur, &pair, ref_i, params, tol),
            dv_growth_holds: dv_growth,
            dv_reference_holds: dv_ref,
            graph6: opts.keep_graphs.then(|| cur.to_graph6()),
        });
        let stop = if delta as f64 > (params.pi - params.epsilon) * i as f64 {
            Some(StopReason::MinDegreeExceeded)
        } else if started_above && !above {
            Some(StopReason::QDroppedBelowReference)
        } else if i <= floor {
            Some(StopReason::OrderFloor)
        } else {
            None
        };
        if let Some(stop_reason) = stop {
            return Ok(DescentTrace {
                params: *params,
                floor,
                steps,
                stop_reason,
            });
        }
        cur = cur.delete_vertex(u)?;
        labels.remove(u);
    }
}
