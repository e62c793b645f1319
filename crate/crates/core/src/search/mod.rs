//! Exhaustive searches over isomorphism classes: extremal edge counts,
//! extremal Q-index, Turán density estimates, the minimum-degree family and
//! the `K_{s,t}^+` conjecture explorer.

mod corpus;
mod enumerate;

pub use corpus::{default_corpus_path, ingest_corpus, read_corpus, Corpus, CORPUS_DIR_ENV};
pub use enumerate::{enumerate_graphs, ENUMERATION_CAP};

use std::path::Path;
use std::sync::Arc;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bounds::CriterionParams;
use crate::chromatic::chromatic_number;
use crate::error::{Error, Result};
use crate::families::{family_l_sample, family_y_sample, kst_plus, turan};
use crate::graph::Graph;
use crate::spectral::{q_radius, q_radius_dense, Tolerance};
use crate::subgraph::is_free;

/// Where the graphs of a given order come from.
#[derive(Clone, Copy, Debug)]
pub enum Source<'a> {
    /// Built-in enumeration, falling back to `$QTURAN_CORPUS_DIR/graphs{n}.g6`
    /// above the cap.
    Auto,
    /// Graphs of the requested order read from this graph6 file.
    Corpus(&'a Path),
}

/// Every isomorphism class of order `n` from `source`. Corpus graphs of
/// other orders are ignored; corpus graphs are assumed pairwise
/// non-isomorphic.
pub fn graphs_of_order(n: usize, source: Source<'_>) -> Result<Arc<Vec<Graph>>> {
    let from_file = |path: &Path| -> Result<Arc<Vec<Graph>>> {
        let corpus = ingest_corpus(path, false)?;
        Ok(Arc::new(corpus.graphs.into_iter().filter(|g| g.n() == n).collect()))
    };
    match source {
        Source::Corpus(path) => from_file(path),
        Source::Auto if n <= ENUMERATION_CAP => enumerate_graphs(n),
        Source::Auto => match default_corpus_path(n) {
            Some(path) => from_file(&path),
            None => Err(Error::CapacityExceeded { n, cap: ENUMERATION_CAP }),
        },
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SearchMode {
    Edges,
    Q,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SearchReport {
    pub n: usize,
    /// graph6 of the forbidden graph.
    pub forbidden: String,
    pub mode: SearchMode,
    /// `ex(n, F)`.
    pub ex_edges: u64,
    /// Largest Q-index over `F`-free classes (Q mode only).
    pub max_q: Option<f64>,
    /// Canonical graph6 of every maximizer for the chosen mode.
    pub extremal_graphs: Vec<String>,
    /// Number of isomorphism classes examined.
    pub scanned: usize,
    pub elapsed_secs: f64,
}

/// `ex(n, F)` and every edge-extremal `F`-free class. Classes are tested in
/// decreasing edge count, stopping at the first count with a free class.
pub fn extremal_edges(n: usize, f: &Graph, source: Source<'_>) -> Result<SearchReport> {
    let start = Instant::now();
    let graphs = graphs_of_order(n, source)?;
    let mut by_edges: Vec<&Graph> = graphs.iter().collect();
    by_edges.sort_by_key(|g| std::cmp::Reverse(g.edge_count()));
    let mut ex = 0;
    let mut extremal = Vec::new();
    for chunk in by_edges.chunk_by(|a, b| a.edge_count() == b.edge_count()) {
        let free: Vec<&Graph> = chunk.par_iter().copied().filter(|g| is_free(g, f)).collect();
        if !free.is_empty() {
            ex = chunk[0].edge_count() as u64;
            extremal = free;
            break;
        }
    }
    let mut extremal: Vec<String> = extremal.iter().map(|g| g.to_graph6()).collect();
    extremal.sort();
    Ok(SearchReport {
        n,
        forbidden: f.to_graph6(),
        mode: SearchMode::Edges,
        ex_edges: ex,
        max_q: None,
        extremal_graphs: extremal,
        scanned: graphs.len(),
        elapsed_secs: start.elapsed().as_secs_f64(),
    })
}

/// Maximizers of `q` among `candidates` (which must be nonempty): values
/// within `10·cmp_tol` of the power-iteration maximum are re-ranked with the
/// dense solver at `eig_tol/100`, keeping those within `cmp_tol` of the top.
fn q_maximizers<'a>(candidates: &[(&'a Graph, f64)], tol: &Tolerance) -> Result<(f64, Vec<&'a Graph>)> {
    let top = candidates.iter().map(|c| c.1).fold(f64::NEG_INFINITY, f64::max);
    let tight = Tolerance::new(tol.eig_tol / 100.0, tol.cmp_tol)?;
    let near: Vec<(&Graph, f64)> = candidates
        .iter()
        .filter(|c| c.1 >= top - 10.0 * tol.cmp_tol)
        .map(|c| Ok((c.0, q_radius_dense(c.0, &tight)?.radius)))
        .collect::<Result<_>>()?;
    let best = near.iter().map(|c| c.1).fold(f64::NEG_INFINITY, f64::max);
    Ok((best, near.into_iter().filter(|c| c.1 >= best - tol.cmp_tol).map(|c| c.0).collect()))
}

/// Largest `q` over `F`-free classes of order `n`, with all maximizers.
pub fn extremal_q(n: usize, f: &Graph, source: Source<'_>, tol: &Tolerance) -> Result<SearchReport> {
    let start = Instant::now();
    let graphs = graphs_of_order(n, source)?;
    let free: Vec<(&Graph, f64)> = graphs
        .par_iter()
        .filter(|g| is_free(g, f))
        .map(|g| Ok((g, q_radius(g, tol)?.radius)))
        .collect::<Result<_>>()?;
    if free.is_empty() {
        return Err(Error::NotFound(format!("no {}-free graph of order {n} in the source", f.to_graph6())));
    }
    let ex = free.iter().map(|c| c.0.edge_count() as u64).max().unwrap_or(0);
    let (max_q, maximizers) = q_maximizers(&free, tol)?;
    let mut extremal: Vec<String> = maximizers.iter().map(|g| g.to_graph6()).collect();
    extremal.sort();
    Ok(SearchReport {
        n,
        forbidden: f.to_graph6(),
        mode: SearchMode::Q,
        ex_edges: ex,
        max_q: Some(max_q),
        extremal_graphs: extremal,
        scanned: graphs.len(),
        elapsed_secs: start.elapsed().as_secs_f64(),
    })
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DensityPoint {
    pub n: usize,
    pub ex: u64,
    /// `ex(n, F) / C(n, 2)`.
    pub density: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DensityEstimate {
    pub forbidden: String,
    pub points: Vec<DensityPoint>,
    /// `1 − 1/(χ(F) − 1)`; absent when `χ(F) < 2`.
    pub limit_hint: Option<f64>,
    /// Exact check that the quotient never increases.
    pub non_increasing: bool,
}

/// `ex(n, F)/C(n, 2)` for `n = max(|F|, 2)..=n_max`.
pub fn turan_density_estimate(f: &Graph, n_max: usize, source: Source<'_>) -> Result<DensityEstimate> {
    let mut points = Vec::new();
    for n in f.n().max(2)..=n_max {
        let ex = extremal_edges(n, f, source)?.ex_edges;
        let pairs = (n * (n - 1) / 2) as u64;
        points.push(DensityPoint {
            n,
            ex,
            density: ex as f64 / pairs as f64,
        });
    }
    let non_increasing = points.windows(2).all(|w| {
        let (a, b) = (&w[0], &w[1]);
        let pa = (a.n * (a.n - 1) / 2) as u128;
        let pb = (b.n * (b.n - 1) / 2) as u128;
        b.ex as u128 * pa <= a.ex as u128 * pb
    });
    let chi = chromatic_number(f);
    Ok(DensityEstimate {
        forbidden: f.to_graph6(),
        points,
        limit_hint: (chi >= 2).then(|| 1.0 - 1.0 / (chi - 1) as f64),
        non_increasing,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MinDegreeReport {
    pub n: usize,
    pub forbidden: String,
    pub params: CriterionParams,
    /// `(π − ε)n`; members have minimum degree strictly above it.
    pub threshold: f64,
    pub family_size: usize,
    pub max_q: Option<f64>,
    pub maximizers: Vec<String>,
    /// `δ(T_{n,r}) = ⌊(r−1)n/r⌋`.
    pub turan_min_degree: usize,
    /// Whether `T_{n,r}` is `F`-free with `δ > (π − ε)n`.
    pub turan_in_family: bool,
    /// Whether `T_{n,r}` is among the maximizers.
    pub turan_attains_max: bool,
    pub scanned: usize,
}

/// The family `𝓖_n` of `F`-free graphs with `δ(G) > (π − ε)n` and its
/// largest Q-index.
pub fn min_degree_family(n: usize, f: &Graph, params: &CriterionParams, source: Source<'_>, tol: &Tolerance) -> Result<MinDegreeReport> {
    let graphs = graphs_of_order(n, source)?;
    let threshold = (params.pi - params.epsilon) * n as f64;
    let members: Vec<(&Graph, f64)> = graphs
        .par_iter()
        .filter(|g| n > 0 && g.min_degree() as f64 > threshold && is_free(g, f))
        .map(|g| Ok((g, q_radius(g, tol)?.radius)))
        .collect::<Result<_>>()?;
    let r = params.r;
    let t = turan(n, r.min(n))?;
    let turan_min_degree = (r - 1) * n / r;
    let turan_in_family = turan_min_degree as f64 > threshold && is_free(&t, f);
    let (max_q, maximizers) = if members.is_empty() {
        (None, Vec::new())
    } else {
        let (q, ms) = q_maximizers(&members, tol)?;
        (Some(q), ms)
    };
    let t_canon = t.canonical_form();
    let turan_attains_max = maximizers.iter().any(|g| **g == t_canon);
    let mut maximizers: Vec<String> = maximizers.iter().map(|g| g.to_graph6()).collect();
    maximizers.sort();
    Ok(MinDegreeReport {
        n,
        forbidden: f.to_graph6(),
        params: *params,
        threshold,
        family_size: members.len(),
        max_q,
        maximizers,
        turan_min_degree,
        turan_in_family,
        turan_attains_max,
        scanned: graphs.len(),
    })
}

/// Whether every degree is `d`, or `d·n` is odd and the degrees are `d`
/// except for exactly one `d − 1`.
pub fn is_nearly_regular(g: &Graph, d: usize) -> bool {
    let deg = g.degrees();
    let low = deg.iter().filter(|&&x| x + 1 == d).count();
    let exact = deg.iter().filter(|&&x| x == d).count();
    exact == g.n() || (d * g.n() % 2 == 1 && low == 1 && exact + 1 == g.n())
}

fn combinations(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    if items.len() < k {
        return Vec::new();
    }
    let mut out = Vec::new();
    for (i, &x) in items.iter().enumerate() {
        for mut rest in combinations(&items[i + 1..], k - 1) {
            rest.insert(0, x);
            out.push(rest);
        }
    }
    out
}

fn nearly_regular_triangle_free_rest(g: &Graph, removed: &[usize], d: usize) -> bool {
    let keep: Vec<usize> = (0..g.n()).filter(|v| !removed.contains(v)).collect();
    let rest = g.induced_subgraph(&keep);
    rest.triangle_count() == 0 && is_nearly_regular(&rest, d)
}

/// Membership in `𝓛_{n,s,t}`: `K_{s−1}` joined to a (nearly) `(t−1)`-regular
/// triangle-free graph.
pub fn in_family_l(g: &Graph, s: usize, t: usize) -> bool {
    let n = g.n();
    if s < 1 || t < 1 || n < s {
        return false;
    }
    let universal: Vec<usize> = (0..n).filter(|&v| g.degree(v) + 1 == n).collect();
    combinations(&universal, s - 1).iter().any(|c| nearly_regular_triangle_free_rest(g, c, t - 1))
}

/// Membership in `𝓨_{n,t}`: `I_{t−1}` joined to a (nearly) `(t−1)`-regular
/// triangle-free graph.
pub fn in_family_y(g: &Graph, t: usize) -> bool {
    let n = g.n();
    if t < 1 || n < t - 1 {
        return false;
    }
    let k = t - 1;
    let cand: Vec<usize> = (0..n).filter(|&v| g.degree(v) == n - k).collect();
    combinations(&cand, k).iter().any(|set| {
        let independent = set.iter().all(|&a| set.iter().all(|&b| !g.has_edge(a, b)));
        let complete_out = set.iter().all(|&a| (0..n).filter(|v| !set.contains(v)).all(|v| g.has_edge(a, v)));
        independent && complete_out && nearly_regular_triangle_free_rest(g, set, k)
    })
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct KstMaximizer {
    pub graph6: String,
    pub in_l: bool,
    pub in_y: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct KstReport {
    pub n: usize,
    pub s: usize,
    pub t: usize,
    pub max_q: f64,
    pub maximizers: Vec<KstMaximizer>,
    pub q_l_sample: Option<f64>,
    pub q_y_sample: Option<f64>,
    /// Why a family sample could not be built, if it could not.
    pub notes: Vec<String>,
    pub scanned: usize,
}

impl KstReport {
    /// Sign of `q(L sample) − q(Y sample)` when both exist.
    pub fn l_minus_y(&self) -> Option<f64> {
        Some(self.q_l_sample? - self.q_y_sample?)
    }
}

/// Q-extremal `K_{s,t}^+`-free graphs of order `n` compared with the `𝓛` and
/// `𝓨` family samples. Report-only.
pub fn explore_kst_conjecture(n: usize, s: usize, t: usize, source: Source<'_>, tol: &Tolerance) -> Result<KstReport> {
    let f = kst_plus(s, t)?;
    let search = extremal_q(n, &f, source, tol)?;
    let mut notes = Vec::new();
    let mut sample_q = |built: Result<Graph>, name: &str| -> Result<Option<f64>> {
        match built {
            Ok(g) => Ok(Some(q_radius(&g, tol)?.radius)),
            Err(e) => {
                notes.push(format!("{name} sample unavailable: {e}"));
                Ok(None)
            }
        }
    };
    let q_l_sample = sample_q(family_l_sample(n, s, t), "L")?;
    let q_y_sample = sample_q(family_y_sample(n, t), "Y")?;
    let maximizers = search
        .extremal_graphs
        .iter()
        .map(|code| {
            let g = crate::graph::parse_graph6(code.as_bytes())?;
            Ok(KstMaximizer {
                graph6: code.clone(),
                in_l: in_family_l(&g, s, t),
                in_y: in_family_y(&g, t),
            })
        })
        .collect::<Result<_>>()?;
    Ok(KstReport {
        n,
        s,
        t,
        max_q: search.max_q.expect("q mode sets max_q"),
        maximizers,
        q_l_sample,
        q_y_sample,
        notes,
        scanned: search.scanned,
    })
}
