//! The inequality ledger: every closed-form bound and criterion condition,
//! evaluated with an explicit slack `rhs − lhs`.

use std::collections::BTreeMap;
use std::io::Write;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::families::{turan, turan_edge_count};
use crate::graph::Graph;
use crate::spectral::{adjacency_radius, q_radius, Tolerance};
use crate::subgraph::find_clique;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BoundEntry {
    pub bound_name: String,
    pub lhs: f64,
    pub rhs: f64,
    /// `rhs − lhs`.
    pub slack: f64,
    /// `slack ≥ −cmp_tol`.
    pub holds: bool,
    /// `|slack| ≤ cmp_tol`.
    pub equality: bool,
    /// Asymptotic statements are recorded but never count as violations.
    #[serde(rename = "reportOnly")]
    pub report_only: bool,
}

impl BoundEntry {
    pub fn new(name: impl Into<String>, lhs: f64, rhs: f64, tol: &Tolerance) -> Self {
        let slack = rhs - lhs;
        BoundEntry {
            bound_name: name.into(),
            lhs,
            rhs,
            slack,
            holds: slack >= -tol.cmp_tol,
            equality: slack.abs() <= tol.cmp_tol,
            report_only: false,
        }
    }

    pub fn into_report_only(mut self) -> Self {
        self.report_only = true;
        self
    }

    /// A failed entry that is not report-only.
    pub fn is_violation(&self) -> bool {
        !self.holds && !self.report_only
    }
}

/// All entries checked for one graph (or one parameter set, in which case
/// `graph6` holds a descriptive key).
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BoundReport {
    pub graph6: String,
    pub entries: Vec<BoundEntry>,
}

/// One flattened report line; the JSON-lines and CSV schema.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BoundRow {
    pub graph6: String,
    pub bound_name: String,
    pub lhs: f64,
    pub rhs: f64,
    pub slack: f64,
    pub holds: bool,
    pub equality: bool,
    #[serde(rename = "reportOnly")]
    pub report_only: bool,
}

impl BoundReport {
    pub fn new(key: impl Into<String>) -> Self {
        BoundReport {
            graph6: key.into(),
            entries: Vec::new(),
        }
    }

    pub fn for_graph(g: &Graph) -> Self {
        Self::new(g.to_graph6())
    }

    pub fn push(&mut self, entry: BoundEntry) {
        self.entries.push(entry);
    }

    pub fn violations(&self) -> impl Iterator<Item = &BoundEntry> {
        self.entries.iter().filter(|e| e.is_violation())
    }

    pub fn rows(&self) -> impl Iterator<Item = BoundRow> + '_ {
        self.entries.iter().map(|e| BoundRow {
            graph6: self.graph6.clone(),
            bound_name: e.bound_name.clone(),
            lhs: e.lhs,
            rhs: e.rhs,
            slack: e.slack,
            holds: e.holds,
            equality: e.equality,
            report_only: e.report_only,
        })
    }
}

/// Orders reports by key so that results gathered from parallel workers
/// serialize identically regardless of scheduling.
pub fn merge_reports(mut reports: Vec<BoundReport>) -> Vec<BoundReport> {
    reports.sort_by(|a, b| a.graph6.cmp(&b.graph6));
    reports
}

pub fn write_json_lines<W: Write>(reports: &[BoundReport], mut out: W) -> Result<()> {
    for row in reports.iter().flat_map(|r| r.rows()) {
        serde_json::to_writer(&mut out, &row).map_err(|e| Error::Io(e.to_string()))?;
        out.write_all(b"\n")?;
    }
    Ok(())
}

pub fn write_csv<W: Write>(reports: &[BoundReport], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    for row in reports.iter().flat_map(|r| r.rows()) {
        w.serialize(row).map_err(|e| Error::Io(e.to_string()))?;
    }
    w.flush()?;
    Ok(())
}

/// Constants of the spectral criterion: `0 < ε < 1/2`, `0 ≤ σ < ε/36`,
/// `π = 1 − 1/r`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct CriterionParams {
    pub epsilon: f64,
    pub sigma: f64,
    pub r: usize,
    pub pi: f64,
}

impl CriterionParams {
    pub fn new(epsilon: f64, sigma: f64, r: usize) -> Result<Self> {
        if !(epsilon > 0.0 && epsilon < 0.5) {
            return Err(Error::InvalidInput(format!("epsilon must satisfy 0 < eps < 1/2, got {epsilon}")));
        }
        if !(sigma >= 0.0 && sigma < epsilon / 36.0) {
            return Err(Error::InvalidInput(format!(
                "sigma must satisfy 0 <= sigma < eps/36 = {}, got {sigma}",
                epsilon / 36.0
            )));
        }
        if r < 2 {
            return Err(Error::InvalidInput(format!("r must be at least 2, got {r}")));
        }
        Ok(CriterionParams {
            epsilon,
            sigma,
            r,
            pi: 1.0 - 1.0 / r as f64,
        })
    }

    /// `ε = 0.1`, `σ = ε/40`.
    pub fn with_defaults(r: usize) -> Result<Self> {
        Self::new(0.1, 0.1 / 40.0, r)
    }
}

fn require_clique_free(g: &Graph, r: usize) -> Result<()> {
    match find_clique(g, r + 1) {
        Some(embedding) => Err(Error::ContainsForbidden { embedding }),
        None => Ok(()),
    }
}

fn one_minus_inv(r: usize) -> f64 {
    1.0 - 1.0 / r as f64
}

/// `e(G) ≤ (1 − 1/r)n²/2` and the sharp form `e(G) ≤ e(T_{n,r})` for
/// `K_{r+1}`-free `G`.
pub fn check_turan_edges(g: &Graph, r: usize, tol: &Tolerance) -> Result<Vec<BoundEntry>> {
    check_r(r)?;
    require_clique_free(g, r)?;
    let n = g.n();
    let m = g.edge_count() as f64;
    let sharp = if n == 0 { 0 } else { turan_edge_count(n, r.min(n)) };
    Ok(vec![
        BoundEntry::new("turan_edges", m, one_minus_inv(r) * (n * n) as f64 / 2.0, tol),
        BoundEntry::new("turan_edges_sharp", m, sharp as f64, tol),
    ])
}

fn check_r(r: usize) -> Result<()> {
    if r < 1 {
        return Err(Error::InvalidInput("r must be at least 1".into()));
    }
    Ok(())
}

/// `λ(G) ≤ (1 − 1/r)n` for `K_{r+1}`-free `G`.
pub fn check_wilf(g: &Graph, r: usize, tol: &Tolerance) -> Result<BoundEntry> {
    check_r(r)?;
    require_clique_free(g, r)?;
    let lambda = adjacency_radius(g, tol)?.radius;
    Ok(BoundEntry::new("wilf", lambda, one_minus_inv(r) * g.n() as f64, tol))
}

/// `4m/n ≤ 2λ(G) ≤ q(G) ≤ 2Δ(G)`.
pub fn check_bound_chain(g: &Graph, tol: &Tolerance) -> Result<Vec<BoundEntry>> {
    let n = g.n() as f64;
    let lambda = adjacency_radius(g, tol)?.radius;
    let q = q_radius(g, tol)?.radius;
    Ok(vec![
        BoundEntry::new("chain_average_degree", 4.0 * g.edge_count() as f64 / n, 2.0 * lambda, tol),
        BoundEntry::new("chain_adjacency", 2.0 * lambda, q, tol),
        BoundEntry::new("chain_max_degree", q, 2.0 * g.max_degree() as f64, tol),
    ])
}

/// `q(T_{n,r})`, with `T_{n,r} = K_n` once `r ≥ n`.
pub fn turan_q(n: usize, r: usize, tol: &Tolerance) -> Result<f64> {
    Ok(q_radius(&turan(n, r.min(n))?, tol)?.radius)
}

/// `q(G) ≤ 2(1 − 1/r)n` and the sharp form `q(G) ≤ q(T_{n,r})` for
/// `K_{r+1}`-free `G`.
pub fn check_abreu_nikiforov(g: &Graph, r: usize, tol: &Tolerance) -> Result<Vec<BoundEntry>> {
    check_r(r)?;
    require_clique_free(g, r)?;
    let n = g.n();
    let q = q_radius(g, tol)?.radius;
    Ok(vec![
        BoundEntry::new("abreu_nikiforov", q, 2.0 * one_minus_inv(r) * n as f64, tol),
        BoundEntry::new("q_turan_sharp", q, turan_q(n, r, tol)?, tol),
    ])
}

/// `q(G) ≤ max_v {d(v) + (1/d(v)) Σ_{w ∈ N(v)} d(w)}` over non-isolated `v`.
pub fn check_merris(g: &Graph, tol: &Tolerance) -> Result<BoundEntry> {
    let deg = g.degrees();
    let rhs = (0..g.n())
        .filter(|&v| deg[v] > 0)
        .map(|v| deg[v] as f64 + g.neighbors(v).map(|w| deg[w] as f64).sum::<f64>() / deg[v] as f64)
        .fold(f64::NEG_INFINITY, f64::max);
    if rhs == f64::NEG_INFINITY {
        return Err(Error::InvalidInput("the Merris bound needs a vertex of positive degree".into()));
    }
    Ok(BoundEntry::new("merris", q_radius(g, tol)?.radius, rhs, tol))
}

/// An entry together with the combinatorial prediction of its equality case.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FlaggedEntry {
    pub entry: BoundEntry,
    pub predicted_equality: bool,
}

impl FlaggedEntry {
    pub fn flag_agrees(&self) -> bool {
        self.entry.equality == self.predicted_equality
    }
}

/// Whether `d(u) + d(v)` is the same for every edge `uv`.
pub fn edge_degree_sums_constant(g: &Graph) -> bool {
    let deg = g.degrees();
    let mut sums = g.edges().map(|(u, v)| deg[u] + deg[v]);
    match sums.next() {
        None => true,
        Some(first) => sums.all(|s| s == first),
    }
}

/// `(1/m) Σ d²(v) ≤ q(G)`, equality iff the edge degree sums are constant.
pub fn check_q_lower_degree(g: &Graph, tol: &Tolerance) -> Result<FlaggedEntry> {
    let m = g.edge_count();
    if m == 0 {
        return Err(Error::InvalidInput("the degree lower bound on q needs at least one edge".into()));
    }
    let sq: u64 = g.degrees().iter().map(|&d| (d * d) as u64).sum();
    let entry = BoundEntry::new("q_lower_degree", sq as f64 / m as f64, q_radius(g, tol)?.radius, tol);
    Ok(FlaggedEntry {
        entry,
        predicted_equality: edge_degree_sums_constant(g),
    })
}

/// Equality case of `λ² ≥ (1/n)Σd²`: edgeless, or no isolated vertices and
/// every component regular or semiregular bipartite with one common value of
/// `d²` (regular) or `ab` (semiregular with side degrees `a`, `b`).
pub fn hofmeister_equality_expected(g: &Graph) -> bool {
    if g.edge_count() == 0 {
        return true;
    }
    let deg = g.degrees();
    if deg.contains(&0) {
        return false;
    }
    let mut common: Option<usize> = None;
    for comp in g.components() {
        let first = deg[comp[0]];
        let value = if comp.iter().all(|&v| deg[v] == first) {
            first * first
        } else {
            let sub = g.induced_subgraph(&comp);
            let Some(side) = sub.bipartition() else {
                return false;
            };
            let side_degree = |s: u8| {
                let mut ds = comp.iter().enumerate().filter(|(k, _)| side[*k] == s).map(|(_, &v)| deg[v]);
                let d0 = ds.next()?;
                ds.all(|d| d == d0).then_some(d0)
            };
            match (side_degree(0), side_degree(1)) {
                (Some(a), Some(b)) => a * b,
                _ => return false,
            }
        };
        if *common.get_or_insert(value) != value {
            return false;
        }
    }
    true
}

/// `(1/n) Σ d²(v) ≤ λ²(G)`.
pub fn check_hofmeister(g: &Graph, tol: &Tolerance) -> Result<FlaggedEntry> {
    let n = g.n();
    if n == 0 {
        return Err(Error::InvalidInput("the Hofmeister bound needs n >= 1".into()));
    }
    let sq: u64 = g.degrees().iter().map(|&d| (d * d) as u64).sum();
    let lambda = adjacency_radius(g, tol)?.radius;
    Ok(FlaggedEntry {
        entry: BoundEntry::new("hofmeister", sq as f64 / n as f64, lambda * lambda, tol),
        predicted_equality: hofmeister_equality_expected(g),
    })
}

/// `Σ d²(v) ≤ 2(1 − 1/r)mn` and `Σ d²(v) ≤ (1 − 1/r)² n³`.
pub fn check_degree_power(g: &Graph, r: usize, tol: &Tolerance) -> Result<Vec<BoundEntry>> {
    check_r(r)?;
    let n = g.n() as f64;
    let m = g.edge_count() as f64;
    let sq: u64 = g.degrees().iter().map(|&d| (d * d) as u64).sum();
    let c = one_minus_inv(r);
    Ok(vec![
        BoundEntry::new("degree_power", sq as f64, 2.0 * c * m * n, tol),
        BoundEntry::new("degree_power_cube", sq as f64, c * c * n * n * n, tol),
    ])
}

/// `(n/4) q(T_{n,r}) < e(T_{n,r}) + 1`; the inequality is strict, so callers
/// should require `holds && !equality`.
pub fn check_fact21_margin(n: usize, r: usize, tol: &Tolerance) -> Result<BoundEntry> {
    if r < 2 || r > n {
        return Err(Error::InvalidInput(format!("need 2 <= r <= n, got n={n}, r={r}")));
    }
    let q = turan_q(n, r, tol)?;
    Ok(BoundEntry::new("fact21_margin", n as f64 / 4.0 * q, (turan_edge_count(n, r) + 1) as f64, tol))
}

/// `|ex(n) − ex(n−1) − πn| ≤ σn`.
pub fn check_dl1(ex_seq: &BTreeMap<usize, u64>, params: &CriterionParams, n: usize, tol: &Tolerance) -> Result<BoundEntry> {
    let missing = |k: usize| Error::InvalidInput(format!("ex sequence has no value at n = {k}"));
    if n == 0 {
        return Err(missing(0));
    }
    let a = *ex_seq.get(&n).ok_or_else(|| missing(n))? as f64;
    let b = *ex_seq.get(&(n - 1)).ok_or_else(|| missing(n - 1))? as f64;
    let deviation = (a - b - params.pi * n as f64).abs();
    Ok(BoundEntry::new("dl1", deviation, params.sigma * n as f64, tol))
}

/// `|q(𝓖_n) − 4 ex(n)/n| ≤ σ`.
pub fn check_dl2(q_gn: f64, ex_n: u64, params: &CriterionParams, n: usize, tol: &Tolerance) -> Result<BoundEntry> {
    if n == 0 {
        return Err(Error::InvalidInput("dl2 needs n >= 1".into()));
    }
    let deviation = (q_gn - 4.0 * ex_n as f64 / n as f64).abs();
    Ok(BoundEntry::new("dl2", deviation, params.sigma, tol))
}

/// `|q(𝓖_n)/n − 2π|`, recorded against zero; asymptotic, so report-only.
pub fn check_qn_estimate(q_gn: f64, params: &CriterionParams, n: usize, tol: &Tolerance) -> Result<BoundEntry> {
    if n == 0 {
        return Err(Error::InvalidInput("qn estimate needs n >= 1".into()));
    }
    Ok(BoundEntry::new("qn_estimate", (q_gn / n as f64 - 2.0 * params.pi).abs(), 0.0, tol).into_report_only())
}

/// `|q(𝓖_n) − q(𝓖_{n−1}) − 2π| ≤ 7σ`; asymptotic, so report-only.
pub fn check_beg_gap(q_gn: f64, q_gn1: f64, params: &CriterionParams, tol: &Tolerance) -> BoundEntry {
    BoundEntry::new("beg_gap", (q_gn - q_gn1 - 2.0 * params.pi).abs(), 7.0 * params.sigma, tol).into_report_only()
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct StabilityOutcome {
    /// `δ(G) > (3r − 4)n / (3r − 1)`, decided in exact integers.
    pub premise: bool,
    /// Whether `G` is `r`-partite; only evaluated when the premise holds.
    pub r_partite: Option<bool>,
    /// Report-only entry with lhs = threshold, rhs = δ.
    pub premise_entry: BoundEntry,
    /// lhs = 1 for a premise-true, conclusion-false instance, else 0; rhs = 0.
    pub counterexample_entry: BoundEntry,
}

/// Degree-stability in the clique form: if `G` is `K_{r+1}`-free and
/// `δ(G) > (3r−4)n/(3r−1)` then `G` is `r`-partite.
pub fn check_min_degree_stability(g: &Graph, r: usize, tol: &Tolerance) -> Result<StabilityOutcome> {
    if r < 2 {
        return Err(Error::InvalidInput(format!("degree stability needs r >= 2, got {r}")));
    }
    require_clique_free(g, r)?;
    let n = g.n();
    let delta = if n == 0 { 0 } else { g.min_degree() };
    let premise = n > 0 && (3 * r - 1) * delta > (3 * r - 4) * n;
    let r_partite = premise.then(|| crate::chromatic::is_r_partite(g, r));
    let threshold = (3 * r - 4) as f64 * n as f64 / (3 * r - 1) as f64;
    let bad = premise && r_partite == Some(false);
    Ok(StabilityOutcome {
        premise,
        r_partite,
        premise_entry: BoundEntry::new("degree_stability_premise", threshold, delta as f64, tol).into_report_only(),
        counterexample_entry: BoundEntry::new("degree_stability", f64::from(u8::from(bad)), 0.0, tol),
    })
}

/// `ln(1 − ax) + ax + x² > 0` for `0 < a < 1`, `0 < x < 1/2`.
pub fn check_fact1(a: f64, x: f64) -> Result<bool> {
    if !(a > 0.0 && a < 1.0 && x > 0.0 && x < 0.5) {
        return Err(Error::InvalidInput(format!("fact 1 needs 0 < a < 1 and 0 < x < 1/2, got a={a}, x={x}")));
    }
    Ok(fact1_value(a, x) > 0.0)
}

/// `ln(1 − ax) + ax + x²`, evaluated without cancellation in the log.
pub fn fact1_value(a: f64, x: f64) -> f64 {
    (-a * x).ln_1p() + a * x + x * x
}

/// `1/x < ln x − ln(x − 1)` and `1/x² < 1/(x − 1) − 1/x` for `x > 1`.
pub fn check_fact2(x: f64) -> Result<bool> {
    if !(x > 1.0) || !x.is_finite() {
        return Err(Error::InvalidInput(format!("fact 2 needs x > 1, got {x}")));
    }
    let (log_gap, inv_gap) = fact2_values(x);
    Ok(1.0 / x < log_gap && 1.0 / (x * x) < inv_gap)
}

/// `(ln x − ln(x−1), 1/(x−1) − 1/x)` in cancellation-free forms.
pub fn fact2_values(x: f64) -> (f64, f64) {
    (-(-1.0 / x).ln_1p(), 1.0 / (x * (x - 1.0)))
}

/// Element `index` (from 1) of the van der Corput sequence in `base`.
pub fn halton(mut index: u64, base: u64) -> f64 {
    let mut f = 1.0;
    let mut value = 0.0;
    while index > 0 {
        f /= base as f64;
        value += f * (index % base) as f64;
        index /= base;
    }
    value
}
