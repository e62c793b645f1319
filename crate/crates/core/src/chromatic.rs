//! Exact chromatic number, r-partiteness, color-criticality and
//! color-k-criticality.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::subgraph::clique_number;
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum WitnessKind {
    Edge,
    InducedMatching,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CriticalityWitness {
    pub kind: WitnessKind,
    pub edges: Vec<(usize, usize)>,
    pub chi_before: usize,
    pub chi_after: usize,
}

/// Proper coloring with at most `k` colors, found by DSATUR-ordered backtracking.
pub fn k_coloring(g: &Graph, k: usize) -> Option<Vec<usize>> {
    let n = g.n();
    if n == 0 {
        return Some(Vec::new());
    }
    if k == 0 {
        return None;
    }
    let mut colors = vec![usize::MAX; n];
    if color_rec(g, k, &mut colors, 0, 0) {
        Some(colors)
    } else {
        None
    }
}

fn pick_dsatur(g: &Graph, colors: &[usize]) -> usize {
    let mut best = (0usize, 0usize, usize::MAX);
    let mut pick = usize::MAX;
    for v in 0..g.n() {
        if colors[v] != usize::MAX {
            continue;
        }
        let mut seen = 0u128;
        let mut sat = 0;
        let mut free_deg = 0;
        for w in g.neighbors(v) {
            let c = colors[w];
            if c == usize::MAX {
                free_deg += 1;
            } else if c < 128 {
                if seen >> c & 1 == 0 {
                    seen |= 1 << c;
                    sat += 1;
                }
            } else {
                sat += 1;
            }
        }
        let key = (sat, free_deg, usize::MAX - v);
        if pick == usize::MAX || key > best {
            best = key;
            pick = v;
        }
    }
    pick
}

fn color_rec(g: &Graph, k: usize, colors: &mut [usize], done: usize, used: usize) -> bool {
    if done == g.n() {
        return true;
    }
    let v = pick_dsatur(g, colors);
    // New color classes are opened in order, so only `used + 1` choices matter.
    for c in 0..k.min(used + 1) {
        if g.neighbors(v).any(|w| colors[w] == c) {
            continue;
        }
        colors[v] = c;
        if color_rec(g, k, colors, done + 1, used.max(c + 1)) {
            return true;
        }
    }
    colors[v] = usize::MAX;
    false
}

fn greedy_dsatur(g: &Graph) -> usize {
    let n = g.n();
    let mut colors = vec![usize::MAX; n];
    let mut used = 0;
    for _ in 0..n {
        let v = pick_dsatur(g, &colors);
        let c = (0..).find(|&c| g.neighbors(v).all(|w| colors[w] != c)).unwrap();
        colors[v] = c;
        used = used.max(c + 1);
    }
    used
}

/// Exact chromatic number. Exponential in the worst case; meant for small graphs.
pub fn chromatic_number(g: &Graph) -> usize {
    if g.n() == 0 {
        return 0;
    }
    if g.edge_count() == 0 {
        return 1;
    }
    let lower = clique_number(g);
    let upper = greedy_dsatur(g);
    (lower..upper).find(|&k| k_coloring(g, k).is_some()).unwrap_or(upper)
}

pub fn is_r_partite(g: &Graph, r: usize) -> bool {
    if r == 2 {
        return g.bipartition().is_some();
    }
    k_coloring(g, r).is_some()
}

/// Whether deleting a single edge lowers the chromatic number.
pub fn is_color_critical(f: &Graph) -> Result<(bool, Option<CriticalityWitness>)> {
    if f.edge_count() == 0 {
        return Err(Error::InvalidInput("color-criticality needs at least one edge".into()));
    }
    let chi = chromatic_number(f);
    for e in f.edges() {
        let h = f.without_edges(&[e]);
        if k_coloring(&h, chi - 1).is_some() {
            return Ok((
                true,
                Some(CriticalityWitness {
                    kind: WitnessKind::Edge,
                    edges: vec![e],
                    chi_before: chi,
                    chi_after: chromatic_number(&h),
                }),
            ));
        }
    }
    Ok((false, None))
}

/// Color-k-criticality: some induced matching of size `k` whose deletion
/// lowers χ, and no deletion of `k - 1` vertices lowers χ. For `k = 1` the
/// second condition ranges over the empty vertex set only.
pub fn is_color_k_critical(f: &Graph, k: usize) -> Result<(bool, Option<CriticalityWitness>)> {
    if k == 0 {
        return Err(Error::InvalidInput("color-k-criticality needs k >= 1".into()));
    }
    let chi = chromatic_number(f);
    if chi == 0 {
        return Ok((false, None));
    }
    let witness = enumerate_induced_matchings(f, k).find_map(|m| {
        let h = f.without_edges(&m);
        if k_coloring(&h, chi - 1).is_some() {
            Some(CriticalityWitness {
                kind: WitnessKind::InducedMatching,
                chi_after: chromatic_number(&h),
                edges: m,
                chi_before: chi,
            })
        } else {
            None
        }
    });
    let Some(witness) = witness else {
        return Ok((false, None));
    };
    let robust = k == 1 || subsets(f.n(), k - 1).all(|s| f.n() > s.len() && k_coloring(&f.delete_vertices(&s).expect("in range"), chi - 1).is_none());
    if robust {
        Ok((true, Some(witness)))
    } else {
        Ok((false, None))
    }
}

/// Values of `k` in `1..=k_max` for which `f` is color-k-critical.
pub fn color_k_critical_set(f: &Graph, k_max: usize) -> Vec<usize> {
    (1..=k_max).filter(|&k| matches!(is_color_k_critical(f, k), Ok((true, _)))).collect()
}

fn subsets(n: usize, k: usize) -> impl Iterator<Item = Vec<usize>> {
    let mut cur: Option<Vec<usize>> = if k <= n { Some((0..k).collect()) } else { None };
    std::iter::from_fn(move || {
        let out = cur.clone()?;
        let mut c = out.clone();
        let mut i = k;
        loop {
            if i == 0 {
                cur = None;
                break;
            }
            i -= 1;
            if c[i] < n - k + i {
                c[i] += 1;
                for j in i + 1..k {
                    c[j] = c[j - 1] + 1;
                }
                cur = Some(c);
                break;
            }
        }
        Some(out)
    })
}

/// Lazily enumerates every induced matching of size `k`, each as an
/// ascending list of edges `(i, j)` with `i < j`.
pub fn enumerate_induced_matchings(f: &Graph, k: usize) -> InducedMatchings<'_> {
    InducedMatchings {
        g: f,
        edges: f.edges().collect(),
        k,
        stack: Vec::new(),
        next: 0,
        done: k == 0,
    }
}

pub struct InducedMatchings<'a> {
    g: &'a Graph,
    edges: Vec<(usize, usize)>,
    k: usize,
    stack: Vec<usize>,
    next: usize,
    done: bool,
}

impl InducedMatchings<'_> {
    fn compatible(&self, e: usize) -> bool {
        let (a, b) = self.edges[e];
        self.stack.iter().all(|&s| {
            let (c, d) = self.edges[s];
            [a, b].iter().all(|&x| [c, d].iter().all(|&y| x != y && !self.g.has_edge(x, y)))
        })
    }
}

impl Iterator for InducedMatchings<'_> {
    type Item = Vec<(usize, usize)>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.done {
            return None;
        }
        loop {
            if self.stack.len() == self.k {
                let out = self.stack.iter().map(|&e| self.edges[e]).collect();
                self.next = self.stack.pop().unwrap() + 1;
                return Some(out);
            }
            match (self.next..self.edges.len()).find(|&e| self.compatible(e)) {
                Some(e) => {
                    self.stack.push(e);
                    self.next = e + 1;
                }
                None => match self.stack.pop() {
                    Some(e) => self.next = e + 1,
                    None => {
                        self.done = true;
                        return None;
                    }
                },
            }
        }
    }
}
