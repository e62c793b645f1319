//! `qturan`: command-line front end for the Q-index toolkit.
//!
//! Exit codes: 0 when every hard check passes, 1 when a hard check fails,
//! 2 for usage and input errors. Report-only findings never change the exit
//! code.

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use qturan::bounds::{check_bound_chain, write_csv, write_json_lines, BoundReport, CriterionParams};
use qturan::descent::{descent_run, DescentOptions};
use qturan::families::parse_graph_input;
use qturan::search::{explore_kst_conjecture, extremal_edges, extremal_q, min_degree_family, turan_density_estimate, Source};
use qturan::spectral::{adjacency_radius, q_radius, Tolerance};
use qturan::subgraph::clique_number;
use qturan::verify::{run_suite, Suite, VerifyOptions};
use qturan::{Error, Graph};

#[derive(Parser, Debug)]
#[command(name = "qturan", version, about = "Signless-Laplacian spectral extremal graph toolkit")]
struct Cli {
    /// Convergence threshold on the eigen-equation residual.
    #[arg(long, global = true, default_value_t = 1e-10)]
    eig_tol: f64,
    /// Slack threshold for classifying inequalities as holding or tight.
    #[arg(long, global = true, default_value_t = 1e-9)]
    cmp_tol: f64,
    /// Worker threads (default: available parallelism).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Write a machine-readable JSON report to this path.
    #[arg(long, global = true, value_name = "PATH")]
    json: Option<PathBuf>,
    /// Write a CSV report to this path.
    #[arg(long, global = true, value_name = "PATH")]
    csv: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args, Debug, Clone)]
struct CriterionArgs {
    /// Criterion constant ε, with 0 < ε < 1/2.
    #[arg(long = "eps", default_value_t = 0.1)]
    epsilon: f64,
    /// Criterion constant σ, with 0 ≤ σ < ε/36 (default ε/40).
    #[arg(long)]
    sigma: Option<f64>,
}

impl CriterionArgs {
    fn sigma(&self) -> f64 {
        self.sigma.unwrap_or(self.epsilon / 40.0)
    }

    fn params(&self, r: usize) -> qturan::Result<CriterionParams> {
        CriterionParams::new(self.epsilon, self.sigma(), r)
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Q-index, adjacency index, degrees and the bound chain of one graph.
    Q {
        /// graph6 string or family spec such as turan:6,3.
        input: String,
    },
    /// Run a named verification suite.
    Verify {
        /// chain, merris, lower-degree, hofmeister, turan, q-turan,
        /// degree-power, stability, lemma-min, facts, graph6 or density.
        suite: String,
        #[arg(long)]
        n_max: Option<usize>,
        /// Restrict clique-based suites to F = K_{r+1}.
        #[arg(long)]
        r: Option<usize>,
        /// graph6 corpus for orders above the enumeration cap.
        #[arg(long)]
        corpus: Option<PathBuf>,
        #[command(flatten)]
        criterion: CriterionArgs,
    },
    /// Extremal search over all isomorphism classes of order n.
    Search {
        n: usize,
        /// Forbidden graph: graph6 or family spec such as clique:4.
        #[arg(long)]
        forbid: String,
        #[arg(long, value_enum, default_value_t = Mode::Edges)]
        mode: Mode,
        /// graph6 corpus to scan instead of the built-in enumeration.
        #[arg(long)]
        corpus: Option<PathBuf>,
    },
    /// Minimum-Perron-entry vertex deletion trace.
    Descent {
        input: String,
        #[command(flatten)]
        criterion: CriterionArgs,
        /// Part count of the reference Turán graphs (default: max(ω(H), 2)).
        #[arg(long)]
        r: Option<usize>,
        /// Stop once the order reaches this value.
        #[arg(long, default_value_t = 1)]
        floor: usize,
        /// Embed each step's graph as graph6 in the trace.
        #[arg(long)]
        keep_graphs: bool,
    },
    /// Report-only explorations.
    #[command(subcommand)]
    Explore(Explore),
}

#[derive(Subcommand, Debug)]
enum Explore {
    /// Q-extremal K_{s,t}^+-free graphs against the L and Y family samples.
    Kst {
        n: usize,
        s: usize,
        t: usize,
        #[arg(long)]
        corpus: Option<PathBuf>,
    },
    /// F-free graphs with δ > (π − ε)n and their largest Q-index.
    MinDegree {
        n: usize,
        #[arg(long)]
        forbid: String,
        /// π = 1 − 1/r (default: χ(F) − 1).
        #[arg(long)]
        r: Option<usize>,
        #[command(flatten)]
        criterion: CriterionArgs,
        #[arg(long)]
        corpus: Option<PathBuf>,
    },
    /// ex(n, F)/C(n, 2) for n up to n_max.
    Density {
        #[arg(long)]
        forbid: String,
        #[arg(long, default_value_t = 8)]
        n_max: usize,
        #[arg(long)]
        corpus: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Mode {
    Edges,
    Q,
}

/// How a command ended, short of an error.
enum Outcome {
    Pass,
    Violation,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global() {
            eprintln!("error: cannot configure {jobs} worker threads: {e}");
            return ExitCode::from(2);
        }
    }
    match run(&cli) {
        Ok(Outcome::Pass) => ExitCode::SUCCESS,
        Ok(Outcome::Violation) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> qturan::Result<Outcome> {
    let tol = Tolerance::new(cli.eig_tol, cli.cmp_tol)?;
    match &cli.command {
        Command::Q { input } => cmd_q(cli, &parse_graph_input(input)?, &tol),
        Command::Verify {
            suite,
            n_max,
            r,
            corpus,
            criterion,
        } => {
            let suite: Suite = suite.parse()?;
            CriterionParams::new(criterion.epsilon, criterion.sigma(), 2)?;
            let opts = VerifyOptions {
                n_max: *n_max,
                r: *r,
                tol,
                epsilon: criterion.epsilon,
                sigma: criterion.sigma(),
                corpus: corpus.clone(),
                ..VerifyOptions::default()
            };
            cmd_verify(cli, suite, &opts)
        }
        Command::Search { n, forbid, mode, corpus } => {
            let f = parse_graph_input(forbid)?;
            let source = source(corpus.as_deref());
            let report = match mode {
                Mode::Edges => extremal_edges(*n, &f, source)?,
                Mode::Q => extremal_q(*n, &f, source, &tol)?,
            };
            println!("n = {}, forbidden = {}, scanned {} classes", report.n, report.forbidden, report.scanned);
            println!("ex(n, F) = {}", report.ex_edges);
            if let Some(q) = report.max_q {
                println!("max q over F-free graphs = {q:.12}");
            }
            println!("extremal graphs ({}):", report.extremal_graphs.len());
            for g in &report.extremal_graphs {
                println!("  {g}");
            }
            write_json(cli, &report)?;
            Ok(Outcome::Pass)
        }
        Command::Descent {
            input,
            criterion,
            r,
            floor,
            keep_graphs,
        } => {
            let h = parse_graph_input(input)?;
            let r = r.unwrap_or_else(|| clique_number(&h).max(2));
            let params = criterion.params(r)?;
            let trace = descent_run(&h, &params, *floor, &tol, DescentOptions { keep_graphs: *keep_graphs })?;
            println!(
                "eps = {}, sigma = {}, r = {}, floor = {}",
                params.epsilon, params.sigma, params.r, trace.floor
            );
            println!("{:>5} {:>16} {:>12} {:>7} {:>5} {:>16}", "order", "q", "min entry", "vertex", "delta", "q(T_{i,r})");
            for s in &trace.steps {
                println!(
                    "{:>5} {:>16.10} {:>12.8} {:>7} {:>5} {:>16.10}",
                    s.order, s.q, s.min_entry, s.original_vertex, s.min_degree, s.reference_q
                );
            }
            println!("deleted (input labels): {:?}", trace.deleted());
            println!("stop: {}", serde_json::to_value(trace.stop_reason).map_err(io_err)?.as_str().unwrap_or("?"));
            write_json(cli, &trace)?;
            Ok(Outcome::Pass)
        }
        Command::Explore(e) => cmd_explore(cli, e, &tol),
    }
}

fn source(corpus: Option<&Path>) -> Source<'_> {
    corpus.map_or(Source::Auto, Source::Corpus)
}

fn io_err(e: impl std::fmt::Display) -> Error {
    Error::Io(e.to_string())
}

fn create(path: &Path) -> qturan::Result<BufWriter<File>> {
    File::create(path).map(BufWriter::new).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

fn write_json<T: serde::Serialize>(cli: &Cli, value: &T) -> qturan::Result<()> {
    if let Some(path) = &cli.json {
        let mut out = create(path)?;
        serde_json::to_writer_pretty(&mut out, value).map_err(io_err)?;
        out.write_all(b"\n")?;
        out.flush()?;
    }
    Ok(())
}

fn write_reports(cli: &Cli, reports: &[BoundReport]) -> qturan::Result<()> {
    if let Some(path) = &cli.json {
        let mut out = create(path)?;
        write_json_lines(reports, &mut out)?;
        out.flush()?;
    }
    if let Some(path) = &cli.csv {
        write_csv(reports, create(path)?)?;
    }
    Ok(())
}

fn cmd_q(cli: &Cli, g: &Graph, tol: &Tolerance) -> qturan::Result<Outcome> {
    let q = q_radius(g, tol)?;
    let lambda = adjacency_radius(g, tol)?;
    println!("graph6  {}", g.to_graph6());
    println!("n       {}", g.n());
    println!("m       {}", g.edge_count());
    println!("delta   {}", g.min_degree());
    println!("Delta   {}", g.max_degree());
    println!("q       {:.12}", q.radius);
    println!("lambda  {:.12}", lambda.radius);
    println!("residual {:.3e} ({:?}, {} iterations)", q.residual, q.method, q.iterations);
    let mut report = BoundReport::for_graph(g);
    for e in check_bound_chain(g, tol)? {
        println!("{:<22} lhs {:>14.10}  rhs {:>14.10}  slack {:>14.10}", e.bound_name, e.lhs, e.rhs, e.slack);
        report.push(e);
    }
    let violated = report.violations().next().is_some();
    if let Some(path) = &cli.json {
        let mut out = create(path)?;
        let doc = json!({
            "graph6": g.to_graph6(),
            "n": g.n(),
            "m": g.edge_count(),
            "min_degree": g.min_degree(),
            "max_degree": g.max_degree(),
            "q": q,
            "lambda": lambda,
            "bounds": report.entries,
        });
        serde_json::to_writer_pretty(&mut out, &doc).map_err(io_err)?;
        out.write_all(b"\n")?;
        out.flush()?;
    }
    if let Some(path) = &cli.csv {
        write_csv(std::slice::from_ref(&report), create(path)?)?;
    }
    Ok(if violated { Outcome::Violation } else { Outcome::Pass })
}

fn cmd_verify(cli: &Cli, suite: Suite, opts: &VerifyOptions) -> qturan::Result<Outcome> {
    let report = run_suite(suite, opts)?;
    println!("suite {} (n <= {})", report.suite, report.n_max);
    for line in &report.summary {
        println!("  {line}");
    }
    let shown: Vec<_> = report.reports.iter().flat_map(|r| r.violations().map(move |e| (r, e))).take(20).collect();
    for (r, e) in &shown {
        println!("  VIOLATION {} {}: lhs {} rhs {} slack {}", r.graph6, e.bound_name, e.lhs, e.rhs, e.slack);
    }
    println!(
        "checked {}, violations {}, report-only failures {}",
        report.checked, report.violations, report.report_only_failures
    );
    write_reports(cli, &report.reports)?;
    Ok(if report.passed() {
        println!("PASS");
        Outcome::Pass
    } else {
        println!("FAIL");
        Outcome::Violation
    })
}

fn cmd_explore(cli: &Cli, e: &Explore, tol: &Tolerance) -> qturan::Result<Outcome> {
    match e {
        Explore::Kst { n, s, t, corpus } => {
            let rep = explore_kst_conjecture(*n, *s, *t, source(corpus.as_deref()), tol)?;
            println!("n = {n}, F = K_{{{s},{t}}}^+, scanned {} classes (report-only)", rep.scanned);
            println!("max q = {:.12}", rep.max_q);
            for m in &rep.maximizers {
                println!("  {}  in L: {}  in Y: {}", m.graph6, m.in_l, m.in_y);
            }
            let fmt = |v: Option<f64>| v.map_or("unavailable".to_string(), |q| format!("{q:.12}"));
            println!("q(L sample) = {}", fmt(rep.q_l_sample));
            println!("q(Y sample) = {}", fmt(rep.q_y_sample));
            if let Some(d) = rep.l_minus_y() {
                println!("q(L) - q(Y) = {d:.3e}");
            }
            for note in &rep.notes {
                println!("note: {note}");
            }
            write_json(cli, &rep)?;
        }
        Explore::MinDegree {
            n,
            forbid,
            r,
            criterion,
            corpus,
        } => {
            let f = parse_graph_input(forbid)?;
            let r = match r {
                Some(r) => *r,
                None => qturan::chromatic::chromatic_number(&f).saturating_sub(1).max(2),
            };
            let params = criterion.params(r)?;
            let rep = min_degree_family(*n, &f, &params, source(corpus.as_deref()), tol)?;
            println!("n = {n}, F = {}, r = {r}, threshold (pi - eps) n = {:.6}", rep.forbidden, rep.threshold);
            println!("family size {} of {} classes", rep.family_size, rep.scanned);
            match rep.max_q {
                Some(q) => println!("max q = {q:.12}, maximizers: {:?}", rep.maximizers),
                None => println!("the family is empty"),
            }
            println!(
                "T_{{n,r}}: delta = {}, in family: {}, attains max: {}",
                rep.turan_min_degree, rep.turan_in_family, rep.turan_attains_max
            );
            write_json(cli, &rep)?;
        }
        Explore::Density { forbid, n_max, corpus } => {
            let f = parse_graph_input(forbid)?;
            let est = turan_density_estimate(&f, *n_max, source(corpus.as_deref()))?;
            println!("{:>3} {:>5} {:>10}", "n", "ex", "density");
            for p in &est.points {
                println!("{:>3} {:>5} {:>10.6}", p.n, p.ex, p.density);
            }
            println!("limit 1 - 1/(chi - 1) = {:?}", est.limit_hint);
            println!("non-increasing: {}", est.non_increasing);
            write_json(cli, &est)?;
        }
    }
    Ok(Outcome::Pass)
}
