//! Constructors for the named graph families, plus the `kind:params` text form
//! used on the command line.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::Graph;

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidInput(msg.into())
}

/// Part sizes of `T_{n,r}`: part `i` has `⌈(n − i)/r⌉` vertices, so earlier
/// parts are the larger ones.
pub fn turan_part_sizes(n: usize, r: usize) -> Vec<usize> {
    (0..r).map(|i| (n - i).div_ceil(r)).collect()
}

/// Exact `e(T_{n,r})`.
pub fn turan_edge_count(n: usize, r: usize) -> u64 {
    let sizes = turan_part_sizes(n, r);
    let n = n as u64;
    let sq: u64 = sizes.iter().map(|&s| (s * s) as u64).sum();
    (n * n - sq) / 2
}

/// Complete multipartite graph with the given part sizes, parts laid out on
/// consecutive labels.
pub fn complete_multipartite(sizes: &[usize]) -> Graph {
    let part: Vec<usize> = sizes.iter().enumerate().flat_map(|(k, &s)| std::iter::repeat_n(k, s)).collect();
    Graph::from_fn(part.len(), |i, j| part[i] != part[j])
}

pub fn turan(n: usize, r: usize) -> Result<Graph> {
    if r < 1 || r > n {
        return Err(invalid(format!("turan needs 1 <= r <= n, got n={n}, r={r}")));
    }
    Ok(complete_multipartite(&turan_part_sizes(n, r)))
}

pub fn complete(n: usize) -> Graph {
    Graph::complete(n)
}

pub fn empty(n: usize) -> Graph {
    Graph::empty(n)
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(invalid(format!("cycle needs n >= 3, got {n}")));
    }
    Ok(Graph::from_fn(n, |i, j| j == i + 1 || (i == 0 && j == n - 1)))
}

pub fn path(n: usize) -> Graph {
    Graph::from_fn(n, |i, j| j == i + 1)
}

/// `K_{1,n−1}` with the center at vertex 0.
pub fn star(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(invalid("star needs n >= 1"));
    }
    Ok(Graph::from_fn(n, |i, _| i == 0))
}

pub fn complete_bipartite(s: usize, t: usize) -> Graph {
    complete_multipartite(&[s, t])
}

/// `S_{n,k} = K_k ∨ I_{n−k}`.
pub fn split(n: usize, k: usize) -> Result<Graph> {
    if k > n {
        return Err(invalid(format!("split needs k <= n, got n={n}, k={k}")));
    }
    Ok(Graph::complete(k).join(&Graph::empty(n - k)))
}

/// `B_{r,k} = K_r ∨ I_k`.
pub fn generalized_book(r: usize, k: usize) -> Result<Graph> {
    if r < 1 || k < 1 {
        return Err(invalid(format!("book needs r, k >= 1, got r={r}, k={k}")));
    }
    split(r + k, r)
}

/// `W_{r,k} = K_r ∨ C_k`.
pub fn wheel(r: usize, k: usize) -> Result<Graph> {
    if r < 1 {
        return Err(invalid("wheel needs r >= 1"));
    }
    if k < 3 {
        return Err(invalid(format!("wheel needs k >= 3, got {k}")));
    }
    Ok(Graph::complete(r).join(&cycle(k)?))
}

/// `K_{s,t}` plus the edge `{0, 1}` inside the side of size `s`.
pub fn kst_plus(s: usize, t: usize) -> Result<Graph> {
    if s < 2 || s > t {
        return Err(invalid(format!("kst_plus needs 2 <= s <= t, got s={s}, t={t}")));
    }
    complete_bipartite(s, t).with_edge(0, 1)
}

/// `H_{n,r,k} = K_{k−1} ∨ T_{n−k+1,r}`.
pub fn h_graph(n: usize, r: usize, k: usize) -> Result<Graph> {
    if k < 1 || r < 2 || n < k - 1 + r {
        return Err(invalid(format!("h_graph needs k >= 1, r >= 2, n >= k-1+r, got n={n}, r={r}, k={k}")));
    }
    Ok(Graph::complete(k - 1).join(&turan(n - k + 1, r)?))
}

/// The Petersen graph as the Kneser graph `KG(5,2)`: vertices are the
/// 2-subsets of `{0..5}` in lexicographic order, adjacent when disjoint.
pub fn petersen() -> Graph {
    let pairs: Vec<(usize, usize)> = (0..5).flat_map(|a| (a + 1..5).map(move |b| (a, b))).collect();
    Graph::from_fn(10, |i, j| {
        let (a, b) = pairs[i];
        let (c, d) = pairs[j];
        a != c && a != d && b != c && b != d
    })
}

/// Backtracking nodes allowed before giving up on a triangle-free search.
pub const TRIANGLE_FREE_SEARCH_BUDGET: u64 = 5_000_000;

/// A triangle-free graph on `n` vertices with every degree equal to `d`;
/// when `d·n` is odd, vertex `n − 1` has degree `d − 1` instead.
///
/// Circulants are tried first, then (for even `n`) a bipartite shift
/// construction, then a backtracking search. Infeasible
/// parameters give [`Error::NotFound`]; an exhausted search budget gives
/// [`Error::Computation`].
pub fn regular_triangle_free(n: usize, d: usize) -> Result<Graph> {
    if n < 1 || d >= n {
        return Err(Error::NotFound(format!("no {d}-regular graph on {n} vertices")));
    }
    if d == 0 {
        return Ok(Graph::empty(n));
    }
    let odd = (d * n) % 2 == 1;
    // Mantel: a triangle-free graph has at most n²/4 edges.
    let edges = (d * n - usize::from(odd)) / 2;
    if 4 * edges > n * n {
        return Err(Error::NotFound(format!("{d}-regular triangle-free graph on {n} vertices exceeds n^2/4 edges")));
    }
    // With n odd and d >= 2 the degree sequence cannot be bipartite. A
    // triangle-free non-bipartite graph has minimum degree at most 2n/5
    // (Andrásfai–Erdős–Sós) and at most (n−1)²/4 + 1 edges.
    let min_deg = d - usize::from(odd);
    if n % 2 == 1 && d >= 2 && (5 * min_deg > 2 * n || 4 * edges > (n - 1) * (n - 1) + 4) {
        return Err(Error::NotFound(format!(
            "no non-bipartite triangle-free graph on {n} vertices has the degrees required for d={d}"
        )));
    }
    if !odd {
        if let Some(g) = first_circulant(n, d, |_| true) {
            return Ok(g);
        }
    } else if d >= 3 {
        // A (d−1)-regular circulant plus a perfect matching on the first
        // n − 1 vertices whose edges close no triangle.
        let mut budget = TRIANGLE_FREE_SEARCH_BUDGET;
        let mut found = None;
        first_circulant(n, d - 1, |g| {
            found = triangle_free_matching(g, n - 1, &mut budget);
            found.is_some() || budget == 0
        });
        if let Some(g) = found {
            return Ok(g);
        }
    }
    if n % 2 == 0 {
        // Bipartite double of a cyclic shift pattern: always d-regular and
        // triangle-free once d <= n/2.
        let h = n / 2;
        return Ok(Graph::from_fn(n, |i, j| i < h && j >= h && (j - h + h - i) % h < d));
    }
    let mut target = vec![d; n];
    if odd {
        target[n - 1] = d - 1;
    }
    let mut search = DegreeSearch {
        n,
        target: &target,
        adj: vec![vec![false; n]; n],
        deg: vec![0; n],
        nodes: 0,
    };
    match search.run() {
        Some(true) => {
            let adj = search.adj;
            Ok(Graph::from_fn(n, |i, j| adj[i][j]))
        }
        Some(false) => Err(Error::NotFound(format!(
            "no triangle-free graph on {n} vertices with degree sequence ({d},...,{d}{})",
            if odd { format!(",{}", d - 1) } else { String::new() }
        ))),
        None => Err(Error::Computation(format!(
            "triangle-free search for n={n}, d={d} exceeded {TRIANGLE_FREE_SEARCH_BUDGET} nodes"
        ))),
    }
}

/// First triangle-free `d`-regular circulant `C_n(S)` with
/// `S ⊆ {1..⌊n/2⌋}` (subsets in lexicographic order) accepted by `accept`.
fn first_circulant(n: usize, d: usize, mut accept: impl FnMut(&Graph) -> bool) -> Option<Graph> {
    fn build(n: usize, set: &[usize]) -> Graph {
        Graph::from_fn(n, |i, j| {
            let diff = j - i;
            set.contains(&diff) || set.contains(&(n - diff))
        })
    }
    fn rec(n: usize, d: usize, start: usize, deg: usize, chosen: &mut Vec<usize>, accept: &mut dyn FnMut(&Graph) -> bool) -> Option<Graph> {
        if deg == d {
            let g = build(n, chosen);
            return accept(&g).then_some(g);
        }
        for s in start..=n / 2 {
            let weight = if 2 * s == n { 1 } else { 2 };
            if deg + weight > d {
                continue;
            }
            chosen.push(s);
            if circulant_is_triangle_free(n, chosen) {
                if let Some(g) = rec(n, d, s + 1, deg + weight, chosen, accept) {
                    return Some(g);
                }
            }
            chosen.pop();
        }
        None
    }
    rec(n, d, 1, 0, &mut Vec::new(), &mut accept)
}

/// Adds a perfect matching on vertices `0..k` to `g` such that no matching
/// edge joins adjacent vertices or vertices with a common neighbour.
fn triangle_free_matching(g: &Graph, k: usize, budget: &mut u64) -> Option<Graph> {
    fn rec(g: &Graph, k: usize, mate: &mut Vec<usize>, budget: &mut u64) -> bool {
        if *budget == 0 {
            return false;
        }
        *budget -= 1;
        let Some(u) = (0..k).find(|&u| mate[u] == usize::MAX) else {
            return true;
        };
        for v in u + 1..k {
            if mate[v] != usize::MAX || g.has_edge(u, v) || g.row(u).iter().zip(g.row(v)).any(|(a, b)| a & b != 0) {
                continue;
            }
            mate[u] = v;
            mate[v] = u;
            if rec(g, k, mate, budget) {
                return true;
            }
            mate[u] = usize::MAX;
            mate[v] = usize::MAX;
        }
        false
    }
    if k % 2 == 1 {
        return None;
    }
    let mut mate = vec![usize::MAX; k];
    if !rec(g, k, &mut mate, budget) {
        return None;
    }
    let extra: Vec<(usize, usize)> = (0..k).filter(|&u| u < mate[u]).map(|u| (u, mate[u])).collect();
    Some(Graph::from_fn(g.n(), |i, j| g.has_edge(i, j) || extra.contains(&(i, j))))
}

fn circulant_is_triangle_free(n: usize, s: &[usize]) -> bool {
    let mut member = vec![false; n];
    for &x in s {
        member[x % n] = true;
        member[(n - x) % n] = true;
    }
    (1..n).filter(|&a| member[a]).all(|a| (1..n).filter(|&b| member[b]).all(|b| !member[(2 * n - a - b) % n] || (a + b) % n == 0))
}

struct DegreeSearch<'a> {
    n: usize,
    target: &'a [usize],
    adj: Vec<Vec<bool>>,
    deg: Vec<usize>,
    nodes: u64,
}

impl DegreeSearch<'_> {
    /// `Some(true)` on success, `Some(false)` if exhausted, `None` on budget.
    fn run(&mut self) -> Option<bool> {
        self.nodes += 1;
        if self.nodes > TRIANGLE_FREE_SEARCH_BUDGET {
            return None;
        }
        let Some(v) = (0..self.n).find(|&v| self.deg[v] < self.target[v]) else {
            return Some(true);
        };
        let need = self.target[v] - self.deg[v];
        let open: Vec<usize> = (v + 1..self.n).filter(|&w| self.deg[w] < self.target[w] && !self.adj[v][w]).collect();
        if open.len() < need {
            return Some(false);
        }
        // Untouched vertices with equal targets are interchangeable: only the
        // first of each kind is tried.
        let mut tried_fresh: Vec<usize> = Vec::new();
        for w in open {
            if self.adj[v].iter().zip(&self.adj[w]).any(|(a, b)| *a && *b) {
                continue;
            }
            if self.deg[w] == 0 {
                if tried_fresh.contains(&self.target[w]) {
                    continue;
                }
                tried_fresh.push(self.target[w]);
            }
            self.adj[v][w] = true;
            self.adj[w][v] = true;
            self.deg[v] += 1;
            self.deg[w] += 1;
            let res = self.run();
            if res != Some(false) {
                return res;
            }
            self.adj[v][w] = false;
            self.adj[w][v] = false;
            self.deg[v] -= 1;
            self.deg[w] -= 1;
        }
        Some(false)
    }
}

/// Sample of `𝓛_{n,s,t}`: `K_{s−1} ∨ R` with `R` a (nearly) `(t−1)`-regular
/// triangle-free graph on `n − s + 1` vertices.
pub fn family_l_sample(n: usize, s: usize, t: usize) -> Result<Graph> {
    if s < 2 || s > t || n < s + t {
        return Err(invalid(format!("L family needs 2 <= s <= t and n >= s+t, got n={n}, s={s}, t={t}")));
    }
    Ok(Graph::complete(s - 1).join(&regular_triangle_free(n - s + 1, t - 1)?))
}

/// Sample of `𝓨_{n,t}`: `I_{t−1} ∨ R` with `R` a (nearly) `(t−1)`-regular
/// triangle-free graph on `n − t + 1` vertices.
pub fn family_y_sample(n: usize, t: usize) -> Result<Graph> {
    if t < 2 || n < 2 * t {
        return Err(invalid(format!("Y family needs t >= 2 and n >= 2t, got n={n}, t={t}")));
    }
    Ok(Graph::empty(t - 1).join(&regular_triangle_free(n - t + 1, t - 1)?))
}

/// Textual family description such as `turan:7,3` or `book:3,2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilySpec {
    Turan { n: usize, r: usize },
    Complete { n: usize },
    Empty { n: usize },
    Cycle { n: usize },
    Path { n: usize },
    Star { n: usize },
    CompleteBipartite { s: usize, t: usize },
    Split { n: usize, k: usize },
    Book { r: usize, k: usize },
    Wheel { r: usize, k: usize },
    KstPlus { s: usize, t: usize },
    H { n: usize, r: usize, k: usize },
    RegularTriangleFree { n: usize, d: usize },
    L { n: usize, s: usize, t: usize },
    Y { n: usize, t: usize },
    Petersen,
}

pub const FAMILY_KINDS: &[&str] = &[
    "turan:n,r",
    "complete:n (alias clique)",
    "empty:n",
    "cycle:n",
    "path:n",
    "star:n",
    "kst:s,t (alias bipartite)",
    "split:n,k",
    "book:r,k",
    "wheel:r,k",
    "kstplus:s,t",
    "h:n,r,k",
    "rtf:n,d",
    "L:n,s,t",
    "Y:n,t",
    "petersen",
];

impl FamilySpec {
    pub fn build(&self) -> Result<Graph> {
        use FamilySpec::*;
        match *self {
            Turan { n, r } => turan(n, r),
            Complete { n } => Ok(complete(n)),
            Empty { n } => Ok(empty(n)),
            Cycle { n } => cycle(n),
            Path { n } => Ok(path(n)),
            Star { n } => star(n),
            CompleteBipartite { s, t } => Ok(complete_bipartite(s, t)),
            Split { n, k } => split(n, k),
            Book { r, k } => generalized_book(r, k),
            Wheel { r, k } => wheel(r, k),
            KstPlus { s, t } => kst_plus(s, t),
            H { n, r, k } => h_graph(n, r, k),
            RegularTriangleFree { n, d } => regular_triangle_free(n, d),
            L { n, s, t } => family_l_sample(n, s, t),
            Y { n, t } => family_y_sample(n, t),
            Petersen => Ok(petersen()),
        }
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let text = text.trim();
        let (kind, rest) = text.split_once(':').unwrap_or((text, ""));
        let params: Vec<usize> = if rest.trim().is_empty() {
            Vec::new()
        } else {
            rest.split(',')
                .map(|p| p.trim().parse::<usize>().map_err(|_| invalid(format!("bad parameter {p:?} in {text:?}"))))
                .collect::<Result<_>>()?
        };
        let arity = |k: usize| -> Result<()> {
            if params.len() == k {
                Ok(())
            } else {
                Err(invalid(format!("{kind} takes {k} parameter(s), got {}", params.len())))
            }
        };
        use FamilySpec::*;
        let p = &params;
        let spec = match kind {
            "turan" => arity(2).map(|_| Turan { n: p[0], r: p[1] }),
            "complete" | "clique" => arity(1).map(|_| Complete { n: p[0] }),
            "empty" => arity(1).map(|_| Empty { n: p[0] }),
            "cycle" => arity(1).map(|_| Cycle { n: p[0] }),
            "path" => arity(1).map(|_| Path { n: p[0] }),
            "star" => arity(1).map(|_| Star { n: p[0] }),
            "kst" | "bipartite" | "complete_bipartite" => arity(2).map(|_| CompleteBipartite { s: p[0], t: p[1] }),
            "split" => arity(2).map(|_| Split { n: p[0], k: p[1] }),
            "book" | "generalized_book" => arity(2).map(|_| Book { r: p[0], k: p[1] }),
            "wheel" => arity(2).map(|_| Wheel { r: p[0], k: p[1] }),
            "kstplus" | "kst_plus" => arity(2).map(|_| KstPlus { s: p[0], t: p[1] }),
            "h" | "h_graph" => arity(3).map(|_| H { n: p[0], r: p[1], k: p[2] }),
            "rtf" | "regular_triangle_free" => arity(2).map(|_| RegularTriangleFree { n: p[0], d: p[1] }),
            "L" | "L_family" => arity(3).map(|_| L { n: p[0], s: p[1], t: p[2] }),
            "Y" | "Y_family" => arity(2).map(|_| Y { n: p[0], t: p[1] }),
            "petersen" => arity(0).map(|_| Petersen),
            other => Err(invalid(format!("unknown family kind {other:?}; valid kinds: {}", FAMILY_KINDS.join(", ")))),
        }?;
        Ok(spec)
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use FamilySpec::*;
        match *self {
            Turan { n, r } => write!(f, "turan:{n},{r}"),
            Complete { n } => write!(f, "complete:{n}"),
            Empty { n } => write!(f, "empty:{n}"),
            Cycle { n } => write!(f, "cycle:{n}"),
            Path { n } => write!(f, "path:{n}"),
            Star { n } => write!(f, "star:{n}"),
            CompleteBipartite { s, t } => write!(f, "kst:{s},{t}"),
            Split { n, k } => write!(f, "split:{n},{k}"),
            Book { r, k } => write!(f, "book:{r},{k}"),
            Wheel { r, k } => write!(f, "wheel:{r},{k}"),
            KstPlus { s, t } => write!(f, "kstplus:{s},{t}"),
            H { n, r, k } => write!(f, "h:{n},{r},{k}"),
            RegularTriangleFree { n, d } => write!(f, "rtf:{n},{d}"),
            L { n, s, t } => write!(f, "L:{n},{s},{t}"),
            Y { n, t } => write!(f, "Y:{n},{t}"),
            Petersen => write!(f, "petersen"),
        }
    }
}

/// Parses either a family spec or a graph6 string.
pub fn parse_graph_input(text: &str) -> Result<Graph> {
    let text = text.trim();
    if text.contains(':') || text == "petersen" {
        text.parse::<FamilySpec>()?.build()
    } else {
        crate::graph::parse_graph6(text.as_bytes())
    }
}
