//! Named verification suites: exhaustive sweeps of the bound ledger over
//! small graphs, extremal searches against the Turán graphs, sampled
//! elementary inequalities and format round-trips.

use std::collections::BTreeMap;
use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bounds::{
    check_abreu_nikiforov, check_beg_gap, check_bound_chain, check_degree_power, check_dl1, check_fact1, check_fact2,
    check_hofmeister, check_merris, check_min_degree_stability, check_q_lower_degree, check_qn_estimate, check_turan_edges,
    check_wilf, fact1_value, fact2_values, halton, merge_reports, turan_q, BoundEntry, BoundReport, CriterionParams,
};
use crate::descent::lemma_min_slack;
use crate::error::{Error, Result};
use crate::families::{
    complete_bipartite, cycle, generalized_book, kst_plus, turan, turan_edge_count, wheel,
};
use crate::graph::{parse_graph6, Graph};
use crate::search::{
    default_corpus_path, enumerate_graphs, extremal_edges, extremal_q, ingest_corpus, turan_density_estimate, Source,
    ENUMERATION_CAP,
};
use crate::spectral::{q_radius, Tolerance};
use crate::subgraph::clique_number;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Chain,
    Merris,
    LowerDegree,
    Hofmeister,
    Turan,
    QTuran,
    DegreePower,
    Stability,
    LemmaMin,
    Facts,
    Graph6,
    Density,
}

impl Suite {
    pub const ALL: [Suite; 12] = [
        Suite::Chain,
        Suite::Merris,
        Suite::LowerDegree,
        Suite::Hofmeister,
        Suite::Turan,
        Suite::QTuran,
        Suite::DegreePower,
        Suite::Stability,
        Suite::LemmaMin,
        Suite::Facts,
        Suite::Graph6,
        Suite::Density,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Chain => "chain",
            Suite::Merris => "merris",
            Suite::LowerDegree => "lower-degree",
            Suite::Hofmeister => "hofmeister",
            Suite::Turan => "turan",
            Suite::QTuran => "q-turan",
            Suite::DegreePower => "degree-power",
            Suite::Stability => "stability",
            Suite::LemmaMin => "lemma-min",
            Suite::Facts => "facts",
            Suite::Graph6 => "graph6",
            Suite::Density => "density",
        }
    }

    /// Largest order swept when `--n-max` is not given.
    pub fn default_n_max(self) -> usize {
        match self {
            Suite::Turan | Suite::QTuran | Suite::DegreePower | Suite::Stability | Suite::Density => 8,
            _ => 7,
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL.into_iter().find(|suite| suite.name() == s).ok_or_else(|| {
            let names: Vec<&str> = Suite::ALL.iter().map(|s| s.name()).collect();
            Error::InvalidInput(format!("unknown suite {s:?}; valid suites: {}", names.join(", ")))
        })
    }
}

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    /// Defaults to [`Suite::default_n_max`].
    pub n_max: Option<usize>,
    /// Restricts clique-based suites to `F = K_{r+1}` for this `r`.
    pub r: Option<usize>,
    pub tol: Tolerance,
    /// `ε` and `σ` for the criterion entries (`r` is taken per check).
    pub epsilon: f64,
    pub sigma: f64,
    /// graph6 file supplying orders above the enumeration cap.
    pub corpus: Option<PathBuf>,
    /// Samples per elementary inequality in the `facts` suite.
    pub samples: usize,
    /// Random graphs added to the `lemma-min` sweep.
    pub random_graphs: usize,
    pub seed: u64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            n_max: None,
            r: None,
            tol: Tolerance::default(),
            epsilon: 0.1,
            sigma: 0.1 / 40.0,
            corpus: None,
            samples: 10_000,
            random_graphs: 1000,
            seed: 0x5eed,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub n_max: usize,
    /// Graphs or sample points examined.
    pub checked: usize,
    /// Failed hard entries.
    pub violations: usize,
    /// Failed report-only entries; never affect the outcome.
    pub report_only_failures: usize,
    /// Human-readable findings, one per line.
    pub summary: Vec<String>,
    pub reports: Vec<BoundReport>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.violations == 0
    }

    fn new(suite: Suite, n_max: usize, checked: usize, summary: Vec<String>, reports: Vec<BoundReport>) -> Self {
        let reports = merge_reports(reports);
        let entries = || reports.iter().flat_map(|r| r.entries.iter());
        SuiteReport {
            suite,
            n_max,
            checked,
            violations: entries().filter(|e| e.is_violation()).count(),
            report_only_failures: entries().filter(|e| e.report_only && !e.holds).count(),
            summary,
            reports,
        }
    }
}

/// Runs one suite; the work inside a suite is spread over the current rayon
/// pool, and the report does not depend on the pool size.
pub fn run_suite(suite: Suite, opts: &VerifyOptions) -> Result<SuiteReport> {
    let n_max = opts.n_max.unwrap_or(suite.default_n_max());
    if let Some(r) = opts.r {
        if r < 2 {
            return Err(Error::InvalidInput(format!("r must be at least 2, got {r}")));
        }
    }
    let v = Verifier { opts, n_max };
    match suite {
        Suite::Chain => v.per_graph(suite, 1, |g| g.n() >= 1, check_bound_chain),
        Suite::Merris => v.per_graph(suite, 1, |g| g.edge_count() >= 1, |g, tol| Ok(vec![check_merris(g, tol)?])),
        Suite::LowerDegree => v.per_graph(suite, 1, |g| g.edge_count() >= 1, |g, tol| {
            let f = check_q_lower_degree(g, tol)?;
            Ok(vec![flag_entry("lower_degree_equality_flag", f.flag_agrees(), tol), f.entry])
        }),
        Suite::Hofmeister => v.per_graph(suite, 1, |g| g.n() >= 1, |g, tol| {
            let f = check_hofmeister(g, tol)?;
            Ok(vec![flag_entry("hofmeister_equality_flag", f.flag_agrees(), tol), f.entry])
        }),
        Suite::Turan => v.turan(),
        Suite::QTuran => v.q_turan(),
        Suite::DegreePower => v.degree_power(),
        Suite::Stability => v.stability(),
        Suite::LemmaMin => v.lemma_min(),
        Suite::Facts => Ok(v.facts()),
        Suite::Graph6 => v.graph6(),
        Suite::Density => v.density(),
    }
}

/// An entry that fails exactly when `agrees` is false.
fn flag_entry(name: &str, agrees: bool, tol: &Tolerance) -> BoundEntry {
    BoundEntry::new(name, f64::from(u8::from(!agrees)), 0.0, tol)
}

/// An entry that fails when `count` is positive.
fn count_entry(name: &str, count: usize, tol: &Tolerance) -> BoundEntry {
    BoundEntry::new(name, count as f64, 0.0, tol)
}

struct Verifier<'a> {
    opts: &'a VerifyOptions,
    n_max: usize,
}

impl Verifier<'_> {
    fn tol(&self) -> &Tolerance {
        &self.opts.tol
    }

    fn params(&self, r: usize) -> Result<CriterionParams> {
        CriterionParams::new(self.opts.epsilon, self.opts.sigma, r)
    }

    /// Built-in enumeration up to the cap, then `--corpus` or the corpus
    /// directory.
    fn graphs(&self, n: usize) -> Result<Arc<Vec<Graph>>> {
        if n <= ENUMERATION_CAP {
            return enumerate_graphs(n);
        }
        let path = match (&self.opts.corpus, default_corpus_path(n)) {
            (Some(p), _) => p.clone(),
            (None, Some(p)) => p,
            (None, None) => return Err(Error::CapacityExceeded { n, cap: ENUMERATION_CAP }),
        };
        let corpus = ingest_corpus(&path, false)?;
        Ok(Arc::new(corpus.graphs.into_iter().filter(|g| g.n() == n).collect()))
    }

    fn source(&self) -> Source<'_> {
        match &self.opts.corpus {
            Some(p) => Source::Corpus(p),
            None => Source::Auto,
        }
    }

    /// Graphs with `n ≤ n_max` in the order they are searched: built-in
    /// below the cap, the corpus above.
    fn search_source(&self, n: usize) -> Source<'_> {
        if n <= ENUMERATION_CAP {
            Source::Auto
        } else {
            self.source()
        }
    }

    fn r_values(&self, n: usize) -> Vec<usize> {
        match self.opts.r {
            Some(r) if r < n => vec![r],
            Some(_) => Vec::new(),
            None => (2..n).collect(),
        }
    }

    fn per_graph<F, C>(&self, suite: Suite, n_min: usize, filter: F, check: C) -> Result<SuiteReport>
    where
        F: Fn(&Graph) -> bool + Sync,
        C: Fn(&Graph, &Tolerance) -> Result<Vec<BoundEntry>> + Sync,
    {
        let mut reports = Vec::new();
        let mut checked = 0;
        for n in n_min..=self.n_max {
            let graphs = self.graphs(n)?;
            let batch: Vec<BoundReport> = graphs
                .par_iter()
                .filter(|g| filter(g))
                .map(|g| {
                    Ok(BoundReport {
                        graph6: g.to_graph6(),
                        entries: check(g, self.tol())?,
                    })
                })
                .collect::<Result<_>>()?;
            checked += batch.len();
            reports.extend(batch);
        }
        let summary = vec![format!("{checked} graphs with n <= {}", self.n_max)];
        Ok(SuiteReport::new(suite, self.n_max, checked, summary, reports))
    }

    /// `ex(n, K_{r+1}) = e(T_{n,r})` with `T_{n,r}` the unique maximizer, the
    /// per-graph edge and Wilf bounds at the clique number, and the
    /// (report-only) first criterion condition.
    fn turan(&self) -> Result<SuiteReport> {
        let tol = *self.tol();
        let mut reports = Vec::new();
        let mut summary = Vec::new();
        for n in 2..=self.n_max {
            for r in self.r_values(n) {
                let search = extremal_edges(n, &Graph::complete(r + 1), self.search_source(n))?;
                let expected = turan_edge_count(n, r);
                let t = turan(n, r)?.canonical_form().to_graph6();
                let unique = search.extremal_graphs == [t];
                let mut rep = BoundReport::new(format!("n={n},r={r}"));
                rep.push(BoundEntry::new("ex_at_most_turan", search.ex_edges as f64, expected as f64, &tol));
                rep.push(BoundEntry::new("ex_at_least_turan", expected as f64, search.ex_edges as f64, &tol));
                rep.push(flag_entry("turan_unique_maximizer", unique, &tol));
                summary.push(format!(
                    "n={n} r={r}: ex={} e(T)={expected} maximizers={} unique_turan={unique}",
                    search.ex_edges,
                    search.extremal_graphs.len()
                ));
                reports.push(rep);
            }
        }
        let per_graph = self.per_graph(
            Suite::Turan,
            1,
            |g| self.opts.r.is_none_or(|r| clique_number(g) <= r),
            |g, tol| {
                let r = self.opts.r.unwrap_or_else(|| clique_number(g).max(2));
                let mut entries = check_turan_edges(g, r, tol)?;
                entries.push(check_wilf(g, r, tol)?);
                Ok(entries)
            },
        )?;
        let r_dl = self.opts.r.unwrap_or(3);
        let params = self.params(r_dl)?;
        let ex_seq: BTreeMap<usize, u64> = (0..=self.n_max).map(|n| (n, turan_edge_count(n, r_dl.min(n.max(1))))).collect();
        let mut dl = BoundReport::new(format!("dl1,r={r_dl}"));
        for n in (r_dl + 1).max(2)..=self.n_max {
            dl.push(check_dl1(&ex_seq, &params, n, &tol)?.into_report_only());
        }
        reports.push(dl);
        summary.extend(per_graph.summary.iter().map(|s| format!("per-graph bounds: {s}")));
        let checked = per_graph.checked;
        reports.extend(per_graph.reports);
        Ok(SuiteReport::new(Suite::Turan, self.n_max, checked, summary, reports))
    }

    /// `max q` over `K_{r+1}`-free graphs equals `q(T_{n,r})` with `T_{n,r}`
    /// the unique maximizer for `r ≥ 3`; for `r = 2` the maximum is `n`,
    /// attained exactly by the complete bipartite graphs. Also records the
    /// asymptotic criterion estimates as report-only entries.
    fn q_turan(&self) -> Result<SuiteReport> {
        let tol = *self.tol();
        let mut reports = Vec::new();
        let mut summary = Vec::new();
        let mut checked = 0;
        let mut previous: BTreeMap<usize, f64> = BTreeMap::new();
        for n in 2..=self.n_max {
            for r in self.r_values(n) {
                let search = extremal_q(n, &Graph::complete(r + 1), self.search_source(n), &tol)?;
                checked += search.scanned;
                let max_q = search.max_q.expect("q search reports max_q");
                let (expected_q, mut expected_set) = if r == 2 {
                    let set: Vec<String> =
                        (1..=n / 2).map(|a| complete_bipartite(a, n - a).canonical_form().to_graph6()).collect();
                    (n as f64, set)
                } else {
                    (turan_q(n, r, &tol)?, vec![turan(n, r)?.canonical_form().to_graph6()])
                };
                expected_set.sort();
                let set_ok = search.extremal_graphs == expected_set;
                let mut rep = BoundReport::new(format!("n={n},r={r}"));
                rep.push(BoundEntry::new("max_q_at_most_turan", max_q, expected_q, &tol));
                rep.push(BoundEntry::new("max_q_at_least_turan", expected_q, max_q, &tol));
                rep.push(flag_entry("q_maximizer_set", set_ok, &tol));
                let params = self.params(r)?;
                rep.push(check_qn_estimate(max_q, &params, n, &tol)?);
                if let Some(&prev) = previous.get(&r) {
                    rep.push(check_beg_gap(max_q, prev, &params, &tol));
                }
                previous.insert(r, max_q);
                summary.push(format!(
                    "n={n} r={r}: max q={max_q:.12} expected={expected_q:.12} maximizers={} as_expected={set_ok}",
                    search.extremal_graphs.len()
                ));
                reports.push(rep);
            }
        }
        let per_graph = self.per_graph(
            Suite::QTuran,
            1,
            |g| self.opts.r.is_none_or(|r| clique_number(g) <= r),
            |g, tol| check_abreu_nikiforov(g, self.opts.r.unwrap_or_else(|| clique_number(g).max(2)), tol),
        )?;
        summary.extend(per_graph.summary.iter().map(|s| format!("per-graph bounds: {s}")));
        checked += per_graph.checked;
        reports.extend(per_graph.reports);
        Ok(SuiteReport::new(Suite::QTuran, self.n_max, checked, summary, reports))
    }

    /// `Σd² ≤ 2(1 − 1/r)mn` on every `K_{r+1}`-free graph; among graphs with
    /// `m ≥ 1` equality holds exactly for `T_{n,r}` when `r | n` and never
    /// otherwise.
    fn degree_power(&self) -> Result<SuiteReport> {
        let r = self.opts.r.unwrap_or(3);
        let tol = *self.tol();
        let mut reports = Vec::new();
        let mut summary = Vec::new();
        let mut checked = 0;
        for n in 1..=self.n_max {
            let graphs = self.graphs(n)?;
            let batch: Vec<(BoundReport, bool, String)> = graphs
                .par_iter()
                .filter(|g| clique_number(g) <= r)
                .map(|g| {
                    let entries = check_degree_power(g, r, &tol)?;
                    let eq = g.edge_count() >= 1 && entries[0].equality;
                    Ok((BoundReport { graph6: g.to_graph6(), entries }, eq, g.to_graph6()))
                })
                .collect::<Result<_>>()?;
            checked += batch.len();
            let mut equality: Vec<String> = batch.iter().filter(|b| b.1).map(|b| b.2.clone()).collect();
            equality.sort();
            let expected: Vec<String> = if n % r == 0 && n >= r {
                vec![turan(n, r)?.canonical_form().to_graph6()]
            } else {
                Vec::new()
            };
            let mut rep = BoundReport::new(format!("equality_set,n={n},r={r}"));
            rep.push(flag_entry("degree_power_equality_set", equality == expected, &tol));
            summary.push(format!("n={n}: {} K{}-free graphs, equality set {equality:?}", batch.len(), r + 1));
            reports.push(rep);
            reports.extend(batch.into_iter().map(|b| b.0));
        }
        Ok(SuiteReport::new(Suite::DegreePower, self.n_max, checked, summary, reports))
    }

    /// Every `K_{r+1}`-free graph with `δ > (3r−4)n/(3r−1)` is `r`-partite,
    /// for `r = 2, 3` (or the given `r`).
    fn stability(&self) -> Result<SuiteReport> {
        let rs = self.opts.r.map_or(vec![2, 3], |r| vec![r]);
        let tol = *self.tol();
        let mut reports = Vec::new();
        let mut summary = Vec::new();
        let mut checked = 0;
        for &r in &rs {
            let mut premise_count = 0;
            for n in 1..=self.n_max {
                let graphs = self.graphs(n)?;
                let batch: Vec<(BoundReport, bool)> = graphs
                    .par_iter()
                    .filter(|g| clique_number(g) <= r)
                    .map(|g| {
                        let out = check_min_degree_stability(g, r, &tol)?;
                        let mut entries = vec![out.counterexample_entry];
                        if out.premise {
                            entries.push(out.premise_entry);
                        }
                        let rep = BoundReport {
                            graph6: format!("{},r={r}", g.to_graph6()),
                            entries,
                        };
                        Ok((rep, out.premise))
                    })
                    .collect::<Result<_>>()?;
                checked += batch.len();
                premise_count += batch.iter().filter(|b| b.1).count();
                reports.extend(batch.into_iter().map(|b| b.0));
            }
            summary.push(format!("r={r}: {premise_count} K{}-free graphs satisfy the degree premise", r + 1));
        }
        Ok(SuiteReport::new(Suite::Stability, self.n_max, checked, summary, reports))
    }

    /// `x²(q² − 2qδ + nδ) ≤ δ` on every graph of order `≤ n_max` and on
    /// seeded random graphs with `8 ≤ n ≤ 60`.
    fn lemma_min(&self) -> Result<SuiteReport> {
        let entry = |g: &Graph, tol: &Tolerance| -> Result<Vec<BoundEntry>> {
            let pair = q_radius(g, tol)?;
            let slack = lemma_min_slack(g, &pair);
            let delta = g.min_degree() as f64;
            Ok(vec![BoundEntry::new("lemma_min", delta - slack, delta, tol)])
        };
        let mut report = self.per_graph(Suite::LemmaMin, 1, |g| g.n() >= 1, entry)?;
        let mut rng = ChaCha8Rng::seed_from_u64(self.opts.seed);
        let random: Vec<Graph> = (0..self.opts.random_graphs)
            .map(|_| {
                let n = rng.gen_range(8..=60);
                let p = rng.gen_range(0.05..0.95);
                Graph::random_gnp(n, p, &mut rng)
            })
            .collect();
        let tol = *self.tol();
        let extra: Vec<BoundReport> = random
            .par_iter()
            .enumerate()
            .map(|(k, g)| {
                Ok(BoundReport {
                    graph6: format!("random#{k}:{}", g.to_graph6()),
                    entries: entry(g, &tol)?,
                })
            })
            .collect::<Result<_>>()?;
        report.summary.push(format!("{} seeded random graphs with 8 <= n <= 60", extra.len()));
        let checked = report.checked + extra.len();
        let mut reports = report.reports;
        reports.extend(extra);
        Ok(SuiteReport::new(Suite::LemmaMin, self.n_max, checked, report.summary, reports))
    }

    /// Both elementary inequalities on Halton samples of their domains plus
    /// fixed near-boundary points.
    fn facts(&self) -> SuiteReport {
        let tol = *self.tol();
        let k = self.opts.samples as u64;
        let mut fact1_points: Vec<(f64, f64)> =
            (1..=k).map(|i| (halton(i, 2), 0.5 * halton(i, 3))).filter(|&(a, x)| a > 0.0 && x > 0.0).collect();
        fact1_points.extend([(0.999, 0.499), (1e-9, 0.25), (0.5, 1e-9), (1.0 - 1e-12, 0.5 - 1e-12), (1e-12, 1e-12)]);
        let mut fact2_points: Vec<f64> = (1..=k).map(|i| 1.0 + 10f64.powf(-9.0 + 15.0 * halton(i, 5))).collect();
        fact2_points.extend([1.001, 1.0 + 1e-9, 2.0, 1e6, 1e12]);

        let fact1_fail = fact1_points.iter().filter(|&&(a, x)| !check_fact1(a, x).unwrap_or(false)).count();
        let fact1_min = fact1_points.iter().map(|&(a, x)| fact1_value(a, x) / (x * x)).fold(f64::INFINITY, f64::min);
        let fact2_fail = fact2_points.iter().filter(|&&x| !check_fact2(x).unwrap_or(false)).count();
        let fact2_min = fact2_points
            .iter()
            .map(|&x| {
                let (log_gap, inv_gap) = fact2_values(x);
                (log_gap * x - 1.0).min(inv_gap * x * x - 1.0)
            })
            .fold(f64::INFINITY, f64::min);

        let mut r1 = BoundReport::new("fact1");
        r1.push(count_entry("fact1_failures", fact1_fail, &tol));
        r1.push(BoundEntry::new("fact1_min_relative_margin", 0.0, fact1_min, &tol).into_report_only());
        let mut r2 = BoundReport::new("fact2");
        r2.push(count_entry("fact2_failures", fact2_fail, &tol));
        r2.push(BoundEntry::new("fact2_min_relative_margin", 0.0, fact2_min, &tol).into_report_only());
        let summary = vec![
            format!("fact 1: {} samples, {fact1_fail} failures, min value/x^2 = {fact1_min:.3e}", fact1_points.len()),
            format!("fact 2: {} samples, {fact2_fail} failures, min relative margin = {fact2_min:.3e}", fact2_points.len()),
        ];
        SuiteReport::new(Suite::Facts, 0, fact1_points.len() + fact2_points.len(), summary, vec![r1, r2])
    }

    /// Encode/decode identity over every graph of order `≤ n_max`, and the
    /// hand-built vectors for `K₁`, `K₂`, `K₃`.
    fn graph6(&self) -> Result<SuiteReport> {
        let tol = *self.tol();
        let mut report = self.per_graph(Suite::Graph6, 0, |_| true, |g, tol| {
            let back = parse_graph6(g.to_graph6().as_bytes())?;
            Ok(vec![flag_entry("graph6_roundtrip", back == *g, tol)])
        })?;
        let mut fixed = BoundReport::new("fixed_vectors");
        for (code, n) in [("@", 1), ("A_", 2), ("Bw", 3)] {
            let ok = parse_graph6(code.as_bytes()).is_ok_and(|g| g == Graph::complete(n));
            fixed.push(flag_entry(&format!("graph6_parse_{code}"), ok, &tol));
        }
        report.reports.push(fixed);
        report.summary.push("fixed vectors @, A_, Bw decode to K1, K2, K3".into());
        Ok(SuiteReport::new(Suite::Graph6, self.n_max, report.checked, report.summary, report.reports))
    }

    /// `ex(n, F)/C(n, 2)` is non-increasing in `n` (exact), for a fixed panel
    /// of forbidden graphs; the gap to `π(F)` is report-only.
    fn density(&self) -> Result<SuiteReport> {
        let tol = *self.tol();
        let panel: Vec<(&str, Graph)> = vec![
            ("K3", Graph::complete(3)),
            ("K4", Graph::complete(4)),
            ("C4", cycle(4)?),
            ("C5", cycle(5)?),
            ("wheel:1,5", wheel(1, 5)?),
            ("book:3,2", generalized_book(3, 2)?),
            ("kstplus:2,3", kst_plus(2, 3)?),
        ];
        let mut reports = Vec::new();
        let mut summary = Vec::new();
        let mut checked = 0;
        for (name, f) in &panel {
            if f.n() > self.n_max {
                continue;
            }
            let est = turan_density_estimate(f, self.n_max, self.search_source(self.n_max))?;
            checked += est.points.len();
            let mut rep = BoundReport::new(format!("density,{name}"));
            rep.push(flag_entry("density_non_increasing", est.non_increasing, &tol));
            if let (Some(hint), Some(last)) = (est.limit_hint, est.points.last()) {
                rep.push(BoundEntry::new("density_above_limit", hint, last.density, &tol).into_report_only());
            }
            let seq: Vec<String> = est.points.iter().map(|p| format!("{}:{}", p.n, p.ex)).collect();
            summary.push(format!(
                "{name}: ex = [{}], non_increasing={}, limit={:?}",
                seq.join(" "),
                est.non_increasing,
                est.limit_hint
            ));
            reports.push(rep);
        }
        Ok(SuiteReport::new(Suite::Density, self.n_max, checked, summary, reports))
    }
}
