//! Acceptance suite: one PASS/FAIL line per criterion. Every expected value
//! is recomputed here by the reference routines in `common`, which share no
//! code with the library.

mod common;

use std::process::ExitCode;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::{
    isomorphic, oracle_classes, oracle_graph6, oracle_lambda, oracle_q, oracle_turan_edges, oracle_turan_q, OGraph,
};
use qturan::bounds::{
    check_bound_chain, check_degree_power, check_dl1, check_fact1, check_fact2, check_fact21_margin, check_hofmeister,
    check_merris, check_min_degree_stability, check_q_lower_degree, CriterionParams,
};
use qturan::descent::lemma_min_check;
use qturan::families::{generalized_book, kst_plus, turan_edge_count, wheel};
use qturan::graph::parse_graph6;
use qturan::search::{enumerate_graphs, explore_kst_conjecture, extremal_edges, extremal_q, Source};
use qturan::spectral::{adjacency_radius, q_radius, Tolerance};
use qturan::Graph;

/// Tolerance pinned for spectral comparisons.
const SPECTRAL_TOL: f64 = 1e-9;

struct Oracle {
    /// Isomorphism classes by order, `0..=8`.
    classes: Vec<Vec<OGraph>>,
    /// Q-index of each class, same layout.
    q: Vec<Vec<f64>>,
}

impl Oracle {
    fn build() -> Self {
        let classes = oracle_classes(8);
        let q = classes
            .iter()
            .map(|level| level.iter().map(|g| if g.n == 0 { 0.0 } else { oracle_q(g).0 }).collect())
            .collect();
        Oracle { classes, q }
    }
}

fn tol() -> Tolerance {
    Tolerance::new(1e-10, SPECTRAL_TOL).unwrap()
}

fn library_graphs(n: usize) -> Vec<Graph> {
    enumerate_graphs(n).unwrap().as_ref().clone()
}

fn parse(code: &str) -> OGraph {
    OGraph::from_lib(&parse_graph6(code.as_bytes()).unwrap())
}

type Check = (bool, String);

fn c1_enumeration(o: &Oracle) -> Check {
    let expected = [1usize, 2, 4, 11, 34, 156, 1044, 12346];
    let oracle: Vec<usize> = (1..=8).map(|n| o.classes[n].len()).collect();
    let start = Instant::now();
    let library: Vec<usize> = (1..=8).map(|n| enumerate_graphs(n).unwrap().len()).collect();
    let secs = start.elapsed().as_secs_f64();
    let pass = oracle == expected && library == expected && secs < 120.0;
    (pass, format!("n=1..8 library {library:?}, oracle {oracle:?}; exact; library time {secs:.2}s (< 120s)"))
}

fn c2_turan(o: &Oracle) -> Check {
    let start = Instant::now();
    let mut bad = Vec::new();
    let mut cases = 0;
    for n in 3..=8 {
        for r in 2..n {
            cases += 1;
            let rep = extremal_edges(n, &Graph::complete(r + 1), Source::Auto).unwrap();
            let e_t = oracle_turan_edges(n, r);
            let free: Vec<&OGraph> = o.classes[n].iter().filter(|g| !g.has_clique(r + 1)).collect();
            let oracle_ex = free.iter().map(|g| g.edges()).max().unwrap() as u64;
            let oracle_max = free.iter().filter(|g| g.edges() as u64 == oracle_ex).count();
            let t = OGraph::turan(n, r);
            let ok = rep.ex_edges == e_t
                && oracle_ex == e_t
                && oracle_max == 1
                && rep.extremal_graphs.len() == 1
                && isomorphic(&parse(&rep.extremal_graphs[0]), &t);
            if !ok {
                bad.push((n, r));
            }
        }
    }
    let secs = start.elapsed().as_secs_f64();
    (
        bad.is_empty() && secs < 300.0,
        format!("{cases} cases 2<=r<n<=8: ex = e(T_n,r), unique maximizer ~ T_n,r; exact integers; failures {bad:?}; {secs:.2}s (< 300s)"),
    )
}

fn c3_q_turan(o: &Oracle) -> Check {
    let start = Instant::now();
    let t = tol();
    let mut bad = Vec::new();
    let mut worst: f64 = 0.0;
    for n in 4..=8 {
        for r in 3..n {
            let rep = extremal_q(n, &Graph::complete(r + 1), Source::Auto, &t).unwrap();
            let q_t = oracle_turan_q(n, r);
            let q_t_jacobi = oracle_q(&OGraph::turan(n, r)).0;
            let max_q = rep.max_q.unwrap();
            worst = worst.max((max_q - q_t).abs());
            let oracle_max = o.classes[n]
                .iter()
                .zip(&o.q[n])
                .filter(|(g, _)| !g.has_clique(r + 1))
                .map(|(_, &q)| q)
                .fold(f64::NEG_INFINITY, f64::max);
            let oracle_top = o.classes[n]
                .iter()
                .zip(&o.q[n])
                .filter(|(g, &q)| !g.has_clique(r + 1) && q >= oracle_max - SPECTRAL_TOL)
                .count();
            let ok = (max_q - q_t).abs() <= SPECTRAL_TOL
                && (q_t - q_t_jacobi).abs() <= SPECTRAL_TOL
                && (oracle_max - q_t).abs() <= SPECTRAL_TOL
                && oracle_top == 1
                && rep.extremal_graphs.len() == 1
                && isomorphic(&parse(&rep.extremal_graphs[0]), &OGraph::turan(n, r));
            if !ok {
                bad.push((n, r));
            }
        }
    }
    for n in 5..=8 {
        let rep = extremal_q(n, &Graph::complete(3), Source::Auto, &t).unwrap();
        let max_q = rep.max_q.unwrap();
        worst = worst.max((max_q - n as f64).abs());
        let bipartite: Vec<OGraph> = (1..=n / 2).map(|a| OGraph::complete_bipartite(a, n - a)).collect();
        let found: Vec<OGraph> = rep.extremal_graphs.iter().map(|c| parse(c)).collect();
        let each_found_is_kab = found.iter().all(|g| bipartite.iter().any(|b| isomorphic(g, b)));
        let each_kab_found = bipartite.iter().all(|b| found.iter().any(|g| isomorphic(g, b)));
        let oracle_top = o.classes[n]
            .iter()
            .zip(&o.q[n])
            .filter(|(g, &q)| !g.has_clique(3) && q >= n as f64 - SPECTRAL_TOL)
            .count();
        let ok = (max_q - n as f64).abs() <= SPECTRAL_TOL
            && found.len() == bipartite.len()
            && each_found_is_kab
            && each_kab_found
            && oracle_top == bipartite.len();
        if !ok {
            bad.push((n, 2));
        }
    }
    let secs = start.elapsed().as_secs_f64();
    (
        bad.is_empty() && secs < 900.0,
        format!(
            "3<=r<n<=8: max q = q(T_n,r), unique maximizer; r=2, n=5..8: max q = n on exactly the K_a,n-a; \
             tol {SPECTRAL_TOL:e}, worst |dq| {worst:.1e}; failures {bad:?}; {secs:.2}s (< 900s)"
        ),
    )
}

fn c4_chain() -> Check {
    let t = tol();
    let mut violations = 0;
    let mut mismatches = 0;
    let mut count = 0;
    for n in 1..=7 {
        for g in library_graphs(n) {
            count += 1;
            violations += check_bound_chain(&g, &t).unwrap().iter().filter(|e| !e.holds).count();
            let og = OGraph::from_lib(&g);
            let (q, lambda) = (oracle_q(&og).0, oracle_lambda(&og));
            let lib_q = q_radius(&g, &t).unwrap().radius;
            let lib_l = adjacency_radius(&g, &t).unwrap().radius;
            if (q - lib_q).abs() > SPECTRAL_TOL || (lambda - lib_l).abs() > SPECTRAL_TOL {
                mismatches += 1;
            }
            let avg = 4.0 * og.edges() as f64 / n as f64;
            let chain = avg <= 2.0 * lambda + SPECTRAL_TOL
                && 2.0 * lambda <= q + SPECTRAL_TOL
                && q <= 2.0 * og.max_deg() as f64 + SPECTRAL_TOL;
            if !chain {
                violations += 1;
            }
        }
    }
    (
        violations == 0 && mismatches == 0,
        format!("{count} graphs n<=7: {violations} violations, {mismatches} q/lambda mismatches vs Jacobi; tol {SPECTRAL_TOL:e}"),
    )
}

fn c5_merris() -> Check {
    let t = tol();
    let (mut violations, mut mismatches, mut count) = (0, 0, 0);
    for n in 2..=7 {
        for g in library_graphs(n).into_iter().filter(|g| g.min_degree() >= 1) {
            count += 1;
            let e = check_merris(&g, &t).unwrap();
            let og = OGraph::from_lib(&g);
            let rhs = (0..n)
                .map(|v| {
                    let d = og.deg(v) as f64;
                    let s: usize = (0..n).filter(|&w| og.has(v, w)).map(|w| og.deg(w)).sum();
                    d + s as f64 / d
                })
                .fold(f64::NEG_INFINITY, f64::max);
            if !e.holds || oracle_q(&og).0 > rhs + SPECTRAL_TOL {
                violations += 1;
            }
            if (e.rhs - rhs).abs() > 1e-12 {
                mismatches += 1;
            }
        }
    }
    (
        violations == 0 && mismatches == 0,
        format!("{count} graphs n<=7 with min degree >= 1: {violations} violations, {mismatches} rhs mismatches; tol {SPECTRAL_TOL:e}"),
    )
}

fn c6_lower_degree() -> Check {
    let t = tol();
    let (mut violations, mut disagreements, mut count, mut equalities) = (0, 0, 0, 0);
    for n in 2..=7 {
        for g in library_graphs(n).into_iter().filter(|g| g.edge_count() >= 1) {
            count += 1;
            let f = check_q_lower_degree(&g, &t).unwrap();
            let og = OGraph::from_lib(&g);
            let sums: Vec<usize> =
                (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).filter(|&(i, j)| og.has(i, j)).map(|(i, j)| og.deg(i) + og.deg(j)).collect();
            let constant = sums.iter().all(|&s| s == sums[0]);
            equalities += usize::from(constant);
            if !f.entry.holds {
                violations += 1;
            }
            if f.entry.equality != constant || f.predicted_equality != constant {
                disagreements += 1;
            }
        }
    }
    (
        violations == 0 && disagreements == 0,
        format!(
            "{count} graphs n<=7 with m>=1: {violations} violations, {disagreements} equality-flag disagreements \
             ({equalities} equality cases); tol {SPECTRAL_TOL:e}"
        ),
    )
}

/// Equality in `λ² ≥ Σd²/n`: every component is regular or bipartite
/// semiregular, all with the same value of `λ²`.
fn hofmeister_oracle(g: &OGraph) -> bool {
    let mut values = Vec::new();
    for comp in g.components() {
        let degs: Vec<usize> = comp.iter().map(|&v| g.deg(v)).collect();
        if degs.iter().all(|&d| d == degs[0]) {
            values.push(degs[0] * degs[0]);
            continue;
        }
        let sub = {
            let mut s = OGraph::empty(comp.len());
            for (a, &u) in comp.iter().enumerate() {
                for (b, &w) in comp.iter().enumerate() {
                    if g.has(u, w) {
                        s.adj[a] |= 1 << b;
                    }
                }
            }
            s
        };
        let Some(color) = sub.two_coloring() else { return false };
        let side = |c: u8| -> Vec<usize> { (0..comp.len()).filter(|&k| color[k] == c).map(|k| degs[k]).collect() };
        let (a, b) = (side(0), side(1));
        if a.iter().any(|&d| d != a[0]) || b.iter().any(|&d| d != b[0]) {
            return false;
        }
        values.push(a[0] * b[0]);
    }
    values.iter().all(|&v| v == values[0])
}

fn c7_hofmeister() -> Check {
    let t = tol();
    let (mut violations, mut disagreements, mut count, mut equalities) = (0, 0, 0, 0);
    for n in 1..=7 {
        for g in library_graphs(n) {
            count += 1;
            let f = check_hofmeister(&g, &t).unwrap();
            let expected = hofmeister_oracle(&OGraph::from_lib(&g));
            equalities += usize::from(expected);
            if !f.entry.holds {
                violations += 1;
            }
            if f.entry.equality != expected || f.predicted_equality != expected {
                disagreements += 1;
            }
        }
    }
    (
        violations == 0 && disagreements == 0,
        format!(
            "{count} graphs n<=7: {violations} violations, {disagreements} equality-flag disagreements \
             ({equalities} equality cases); tol {SPECTRAL_TOL:e}"
        ),
    )
}

fn c8_degree_power() -> Check {
    let t = tol();
    let (mut violations, mut count) = (0, 0);
    let mut eq6_oracle = Vec::new();
    let mut eq6_library = Vec::new();
    for n in 1..=8 {
        for g in library_graphs(n) {
            let og = OGraph::from_lib(&g);
            if og.has_clique(4) {
                continue;
            }
            count += 1;
            let sq: usize = (0..n).map(|v| og.deg(v) * og.deg(v)).sum();
            let (lhs, rhs) = (3 * sq, 4 * og.edges() * n);
            let entries = check_degree_power(&g, 3, &t).unwrap();
            if lhs > rhs || !entries[0].holds {
                violations += 1;
            }
            if n == 6 && og.edges() >= 1 {
                if lhs == rhs {
                    eq6_oracle.push(og.clone());
                }
                if entries[0].equality {
                    eq6_library.push(og);
                }
            }
        }
    }
    let k222 = OGraph::turan(6, 3);
    let eq_ok = eq6_oracle.len() == 1
        && isomorphic(&eq6_oracle[0], &k222)
        && eq6_library.len() == 1
        && isomorphic(&eq6_library[0], &k222);
    // Report-only: the same inequality for W6-free graphs (chi = 4, r = 3).
    let w6 = wheel(1, 5).unwrap();
    let w6_over = (1..=8)
        .flat_map(library_graphs)
        .filter(|g| qturan::subgraph::is_free(g, &w6))
        .filter(|g| !check_degree_power(g, 3, &t).unwrap()[0].holds)
        .count();
    (
        violations == 0 && eq_ok,
        format!(
            "{count} K4-free graphs n<=8: {violations} violations (exact integers); equality set at n=6 = {} graph(s), \
             K_2,2,2: {eq_ok}; report-only W6-free exceedances: {w6_over}",
            eq6_oracle.len()
        ),
    )
}

fn c9_lemma_min() -> Check {
    let t = tol();
    let (mut violations, mut mismatches, mut count) = (0, 0, 0);
    let mut worst = f64::INFINITY;
    for n in 1..=7 {
        for g in library_graphs(n) {
            count += 1;
            let slack = lemma_min_check(&g, &t).unwrap();
            worst = worst.min(slack);
            if slack < -SPECTRAL_TOL {
                violations += 1;
            }
            let og = OGraph::from_lib(&g);
            if n >= 2 && og.components().len() == 1 {
                let (q, x) = oracle_q(&og);
                let delta = og.min_deg() as f64;
                let xm = x.iter().cloned().fold(f64::INFINITY, f64::min);
                let oracle = delta - xm * xm * (q * q - 2.0 * q * delta + n as f64 * delta);
                if (oracle - slack).abs() > 1e-6 {
                    mismatches += 1;
                }
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(20261016);
    for _ in 0..1000 {
        let n = rng.gen_range(8..=60);
        let p = rng.gen_range(0.05..0.95);
        let g = Graph::from_fn(n, |_, _| rng.gen_bool(p));
        count += 1;
        let slack = lemma_min_check(&g, &t).unwrap();
        worst = worst.min(slack);
        if slack < -SPECTRAL_TOL {
            violations += 1;
        }
    }
    (
        violations == 0 && mismatches == 0,
        format!(
            "{count} graphs (all n<=7 + 1000 random 8<=n<=60): {violations} with slack < -{SPECTRAL_TOL:e}, min slack {worst:.3e}, \
             {mismatches} Jacobi mismatches (> 1e-6)"
        ),
    )
}

fn c10_fact21() -> Check {
    let t = Tolerance::new(1e-10, SPECTRAL_TOL).unwrap();
    let (mut failures, mut mismatches, mut cases) = (0, 0, 0);
    let mut min_margin = f64::INFINITY;
    for n in 3..=300 {
        for r in 2..=n.min(12) {
            cases += 1;
            let e = check_fact21_margin(n, r, &t).unwrap();
            let q = oracle_turan_q(n, r);
            let margin = (oracle_turan_edges(n, r) + 1) as f64 - n as f64 / 4.0 * q;
            min_margin = min_margin.min(margin);
            if !(e.holds && !e.equality && e.slack > 0.0 && margin > 0.0) {
                failures += 1;
            }
            if (e.lhs - n as f64 / 4.0 * q).abs() > 1e-8 * n as f64 {
                mismatches += 1;
            }
        }
    }
    (
        failures == 0 && mismatches == 0,
        format!(
            "{cases} cases 3<=n<=300, 2<=r<=min(n,12), eig_tol 1e-10: {failures} non-strict, min margin {min_margin:.4}, \
             {mismatches} mismatches vs quotient oracle"
        ),
    )
}

fn c11_dl1() -> Check {
    let params = CriterionParams::new(0.1, 0.0025, 3).unwrap();
    let t = tol();
    let ex_seq = (3..=100).map(|n| (n, turan_edge_count(n, 3))).collect();
    let (mut failures, mut identity_failures) = (0, 0);
    let mut worst: f64 = 0.0;
    for n in 4..=100 {
        let (a, b) = (oracle_turan_edges(n, 3), oracle_turan_edges(n - 1, 3));
        if a - b != (n - n.div_ceil(3)) as u64 || a != turan_edge_count(n, 3) {
            identity_failures += 1;
        }
        let deviation = (a as f64 - b as f64 - 2.0 * n as f64 / 3.0).abs();
        worst = worst.max(deviation);
        let e = check_dl1(&ex_seq, &params, n, &t).unwrap();
        if deviation >= 1.0 || (e.lhs - deviation).abs() > 1e-9 {
            failures += 1;
        }
    }
    (
        failures == 0 && identity_failures == 0,
        format!("F=K4, 4<=n<=100: max deviation {worst:.4} (< 1), {identity_failures} identity failures, {failures} failures"),
    )
}

/// `ln(1 − y) + y` by its Taylor series, for `0 < y < 1/2`.
fn log_series(y: f64) -> f64 {
    let mut sum = 0.0;
    let mut term = y;
    for k in 2..200 {
        term *= y;
        sum -= term / k as f64;
    }
    sum
}

fn c12_facts() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    let mut f1: Vec<(f64, f64)> = (0..10_000).map(|_| (rng.gen_range(1e-12..1.0), rng.gen_range(1e-12..0.5))).collect();
    f1.extend([(0.999, 0.499), (1.0 - 1e-12, 0.5 - 1e-12), (1e-9, 0.25), (0.5, 1e-6), (0.5, 0.25)]);
    let mut f2: Vec<f64> = (0..10_000).map(|_| 1.0 + 10f64.powf(rng.gen_range(-9.0..6.0))).collect();
    f2.extend([1.0 + 1e-12, 1.001, 2.0, 1e6, 1e9]);
    let fact1_bad = f1
        .iter()
        .filter(|&&(a, x)| check_fact1(a, x) != Ok(true) || log_series(a * x) + x * x <= 0.0)
        .count();
    let fact2_bad = f2.iter().filter(|&&x| check_fact2(x) != Ok(true)).count();
    let rejects = check_fact1(1.0, 0.25).is_err() && check_fact1(0.5, 0.5).is_err() && check_fact2(1.0).is_err();
    (
        fact1_bad == 0 && fact2_bad == 0 && rejects,
        format!(
            "fact 1: {} samples, {fact1_bad} failures; fact 2: {} samples, {fact2_bad} failures; \
             near-boundary points included; out-of-domain rejected: {rejects}",
            f1.len(),
            f2.len()
        ),
    )
}

fn c13_stability() -> Check {
    let t = tol();
    let (mut counterexamples, mut disagreements) = (0, 0);
    let (mut premise2, mut premise3) = (0, 0);
    for n in 1..=8 {
        for g in library_graphs(n) {
            let og = OGraph::from_lib(&g);
            let delta = og.min_deg();
            if !og.has_clique(3) {
                let premise = 5 * delta > 2 * n;
                let lib = check_min_degree_stability(&g, 2, &t).unwrap();
                if premise {
                    premise2 += 1;
                    if og.two_coloring().is_none() {
                        counterexamples += 1;
                    }
                }
                if lib.premise != premise || !lib.counterexample_entry.holds {
                    disagreements += 1;
                }
            }
            if !og.has_clique(4) {
                let premise = 8 * delta > 5 * n;
                let lib = check_min_degree_stability(&g, 3, &t).unwrap();
                if premise {
                    premise3 += 1;
                    if !og.k_colorable(3) {
                        counterexamples += 1;
                    }
                }
                if lib.premise != premise || !lib.counterexample_entry.holds {
                    disagreements += 1;
                }
            }
        }
    }
    (
        counterexamples == 0 && disagreements == 0,
        format!(
            "n<=8: {premise2} triangle-free graphs with delta > 2n/5, {premise3} K4-free with delta > 5n/8; \
             {counterexamples} counterexamples, {disagreements} library disagreements"
        ),
    )
}

fn c14_graph6() -> Check {
    let (mut failures, mut count) = (0, 0);
    for n in 0..=7 {
        for g in library_graphs(n) {
            count += 1;
            let code = g.to_graph6();
            if parse_graph6(code.as_bytes()).ok().as_ref() != Some(&g) || code != oracle_graph6(&OGraph::from_lib(&g)) {
                failures += 1;
            }
        }
    }
    let vectors = [("@", 1), ("A_", 2), ("Bw", 3)];
    let vectors_ok = vectors.iter().all(|&(code, n)| {
        let complete = {
            let mut k = OGraph::empty(n);
            for i in 0..n {
                for j in i + 1..n {
                    k.add(i, j);
                }
            }
            k
        };
        oracle_graph6(&complete) == code && parse(code) == complete
    });
    (
        failures == 0 && vectors_ok,
        format!("{count} graphs n<=7: {failures} round-trip/encoding failures; @, A_, Bw decode to K1, K2, K3: {vectors_ok}"),
    )
}

fn c15_report_only() -> Check {
    let t = tol();
    let panel: Vec<(&str, Graph)> = vec![
        ("K3", Graph::complete(3)),
        ("K4", Graph::complete(4)),
        ("C4", qturan::families::cycle(4).unwrap()),
        ("C5", qturan::families::cycle(5).unwrap()),
        ("W6", wheel(1, 5).unwrap()),
        ("B3,2", generalized_book(3, 2).unwrap()),
        ("K2,3+", kst_plus(2, 3).unwrap()),
    ];
    let mut monotone_failures = Vec::new();
    let mut notes = Vec::new();
    for (name, f) in &panel {
        let ex: Vec<(usize, u64, usize)> = (f.n().max(2)..=8)
            .map(|n| {
                let rep = extremal_edges(n, f, Source::Auto).unwrap();
                (n, rep.ex_edges, rep.extremal_graphs.len())
            })
            .collect();
        let monotone = ex.windows(2).all(|w| {
            let (n0, e0, _) = w[0];
            let (n1, e1, _) = w[1];
            e1 as u128 * (n0 * (n0 - 1)) as u128 <= e0 as u128 * (n1 * (n1 - 1)) as u128
        });
        if !monotone {
            monotone_failures.push(*name);
        }
        if matches!(*name, "W6" | "B3,2" | "K2,3+") {
            let (_, e8, k8) = ex.last().copied().unwrap();
            notes.push(format!("{name}: ex(8)={e8}, {k8} extremal class(es)"));
        }
    }
    let params = CriterionParams::new(0.1, 0.0025, 3).unwrap();
    let qs: Vec<f64> = (5..=8)
        .map(|n| extremal_q(n, &Graph::complete(4), Source::Auto, &t).unwrap().max_q.unwrap())
        .collect();
    let beg: Vec<String> = qs
        .windows(2)
        .map(|w| format!("{:.3}", (w[1] - w[0] - 2.0 * params.pi).abs()))
        .collect();
    let qn: Vec<String> = qs.iter().zip(5..).map(|(q, n)| format!("{:.3}", (q / n as f64 - 2.0 * params.pi).abs())).collect();
    notes.push(format!("K4 |q/n - 2pi| n=5..8 [{}], beg gaps [{}] vs 7 sigma = {}", qn.join(", "), beg.join(", "), 7.0 * params.sigma));
    let kst = explore_kst_conjecture(8, 2, 3, Source::Auto, &t).unwrap();
    notes.push(format!(
        "K2,3+ n=8: max q {:.4}, maximizers in L/Y: {:?}",
        kst.max_q,
        kst.maximizers.iter().map(|m| (m.in_l, m.in_y)).collect::<Vec<_>>()
    ));
    (
        monotone_failures.is_empty(),
        format!(
            "ex(n,F)/C(n,2) non-increasing (exact) for K3,K4,C4,C5,W6,B3,2,K2,3+ up to n=8, failures {monotone_failures:?}; \
             report-only: {}",
            notes.join("; ")
        ),
    )
}

fn main() -> ExitCode {
    let start = Instant::now();
    let oracle = Oracle::build();
    println!("acceptance: oracle classes built in {:.2}s", start.elapsed().as_secs_f64());
    let criteria: Vec<(&str, Box<dyn Fn() -> Check + '_>)> = vec![
        ("enumeration counts", Box::new(|| c1_enumeration(&oracle))),
        ("edge Turan theorem", Box::new(|| c2_turan(&oracle))),
        ("Q-index Turan theorem", Box::new(|| c3_q_turan(&oracle))),
        ("inequality chain", Box::new(c4_chain)),
        ("Merris bound", Box::new(c5_merris)),
        ("edge-degree lower bound", Box::new(c6_lower_degree)),
        ("Hofmeister bound", Box::new(c7_hofmeister)),
        ("degree-power bound", Box::new(c8_degree_power)),
        ("minimum Perron entry lemma", Box::new(c9_lemma_min)),
        ("Turan Q-index margin", Box::new(c10_fact21)),
        ("first criterion condition for K4", Box::new(c11_dl1)),
        ("elementary inequalities", Box::new(c12_facts)),
        ("degree stability", Box::new(c13_stability)),
        ("graph6 round trip", Box::new(c14_graph6)),
        ("asymptotic trend reports", Box::new(c15_report_only)),
    ];
    let mut failed = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let t0 = Instant::now();
        let (pass, detail) = run();
        failed += usize::from(!pass);
        println!(
            "{} [{:>2}] {name}: {detail} ({:.2}s)",
            if pass { "PASS" } else { "FAIL" },
            k + 1,
            t0.elapsed().as_secs_f64()
        );
    }
    println!("acceptance: {} of {} criteria passed in {:.1}s", criteria.len() - failed, criteria.len(), start.elapsed().as_secs_f64());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
