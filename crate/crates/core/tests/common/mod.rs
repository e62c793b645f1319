//! Independent reference implementations used by the integration tests.
//! Nothing here calls into the library except for converting graphs.

#![allow(dead_code)]

use std::collections::HashMap;

use qturan::Graph;

/// Small graph as adjacency bitmasks (n ≤ 32).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OGraph {
    pub n: usize,
    pub adj: Vec<u32>,
}

impl OGraph {
    pub fn empty(n: usize) -> Self {
        OGraph { n, adj: vec![0; n] }
    }

    pub fn from_lib(g: &Graph) -> Self {
        let n = g.n();
        let mut o = OGraph::empty(n);
        for i in 0..n {
            for j in 0..n {
                if i != j && g.has_edge(i, j) {
                    o.adj[i] |= 1 << j;
                }
            }
        }
        o
    }

    pub fn to_lib(&self) -> Graph {
        Graph::from_fn(self.n, |i, j| self.has(i, j))
    }

    pub fn has(&self, i: usize, j: usize) -> bool {
        self.adj[i] >> j & 1 == 1
    }

    pub fn add(&mut self, i: usize, j: usize) {
        self.adj[i] |= 1 << j;
        self.adj[j] |= 1 << i;
    }

    pub fn deg(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn edges(&self) -> usize {
        (0..self.n).map(|v| self.deg(v)).sum::<usize>() / 2
    }

    pub fn min_deg(&self) -> usize {
        (0..self.n).map(|v| self.deg(v)).min().unwrap_or(0)
    }

    pub fn max_deg(&self) -> usize {
        (0..self.n).map(|v| self.deg(v)).max().unwrap_or(0)
    }

    /// Complete multipartite graph: vertex `v` lies in part `v mod r`, which
    /// gives part sizes differing by at most one.
    pub fn turan(n: usize, r: usize) -> Self {
        let mut g = OGraph::empty(n);
        for i in 0..n {
            for j in i + 1..n {
                if i % r != j % r {
                    g.add(i, j);
                }
            }
        }
        g
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        let mut g = OGraph::empty(a + b);
        for i in 0..a {
            for j in a..a + b {
                g.add(i, j);
            }
        }
        g
    }

    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = 0u32;
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen >> s & 1 == 1 {
                continue;
            }
            let mut comp = 0u32;
            let mut frontier = 1u32 << s;
            while frontier != 0 {
                comp |= frontier;
                let mut next = 0;
                for v in 0..self.n {
                    if frontier >> v & 1 == 1 {
                        next |= self.adj[v];
                    }
                }
                frontier = next & !comp;
            }
            seen |= comp;
            out.push((0..self.n).filter(|&v| comp >> v & 1 == 1).collect());
        }
        out
    }

    pub fn two_coloring(&self) -> Option<Vec<u8>> {
        let mut color = vec![u8::MAX; self.n];
        for s in 0..self.n {
            if color[s] != u8::MAX {
                continue;
            }
            color[s] = 0;
            let mut stack = vec![s];
            while let Some(v) = stack.pop() {
                for w in 0..self.n {
                    if self.has(v, w) {
                        if color[w] == u8::MAX {
                            color[w] = 1 - color[v];
                            stack.push(w);
                        } else if color[w] == color[v] {
                            return None;
                        }
                    }
                }
            }
        }
        Some(color)
    }

    /// Brute force over all `k^n` colorings.
    pub fn k_colorable(&self, k: usize) -> bool {
        let total = k.pow(self.n as u32);
        (0..total).any(|mut code| {
            let mut c = vec![0; self.n];
            for slot in c.iter_mut() {
                *slot = code % k;
                code /= k;
            }
            (0..self.n).all(|i| (i + 1..self.n).all(|j| !self.has(i, j) || c[i] != c[j]))
        })
    }

    /// Brute force over vertex subsets of size `k`.
    pub fn has_clique(&self, k: usize) -> bool {
        if k == 0 {
            return true;
        }
        (0u32..1 << self.n).filter(|s| s.count_ones() as usize == k).any(|s| {
            (0..self.n).filter(|&v| s >> v & 1 == 1).all(|v| (s & !(1 << v)) & !self.adj[v] == 0)
        })
    }

    fn invariant(&self) -> Vec<(usize, Vec<usize>, usize)> {
        let mut inv: Vec<_> = (0..self.n)
            .map(|v| {
                let mut nd: Vec<usize> = (0..self.n).filter(|&w| self.has(v, w)).map(|w| self.deg(w)).collect();
                nd.sort();
                let tri = (0..self.n)
                    .filter(|&w| self.has(v, w))
                    .map(|w| (self.adj[v] & self.adj[w]).count_ones() as usize)
                    .sum::<usize>()
                    / 2;
                (self.deg(v), nd, tri)
            })
            .collect();
        inv.sort();
        inv
    }
}

/// Backtracking isomorphism test matching degrees vertex by vertex.
pub fn isomorphic(a: &OGraph, b: &OGraph) -> bool {
    if a.n != b.n || a.edges() != b.edges() {
        return false;
    }
    let mut da: Vec<usize> = (0..a.n).map(|v| a.deg(v)).collect();
    let mut db: Vec<usize> = (0..b.n).map(|v| b.deg(v)).collect();
    da.sort();
    db.sort();
    if da != db {
        return false;
    }
    fn extend(a: &OGraph, b: &OGraph, map: &mut Vec<usize>, used: &mut u32) -> bool {
        let i = map.len();
        if i == a.n {
            return true;
        }
        for j in 0..b.n {
            if *used >> j & 1 == 1 || a.deg(i) != b.deg(j) {
                continue;
            }
            if (0..i).all(|k| a.has(i, k) == b.has(j, map[k])) {
                map.push(j);
                *used |= 1 << j;
                if extend(a, b, map, used) {
                    return true;
                }
                *used &= !(1 << j);
                map.pop();
            }
        }
        false
    }
    extend(a, b, &mut Vec::new(), &mut 0)
}

/// Isomorphism classes of order `0..=n_max`, built by attaching a new vertex
/// to every class of the previous order in every possible way and
/// discarding children isomorphic to an earlier one.
pub fn oracle_classes(n_max: usize) -> Vec<Vec<OGraph>> {
    let mut levels = vec![vec![OGraph::empty(0)]];
    for n in 1..=n_max {
        let mut buckets: HashMap<Vec<(usize, Vec<usize>, usize)>, Vec<OGraph>> = HashMap::new();
        let mut level = Vec::new();
        for parent in &levels[n - 1] {
            for mask in 0u32..1 << (n - 1) {
                let mut child = OGraph::empty(n);
                child.adj[..n - 1].copy_from_slice(&parent.adj);
                for v in 0..n - 1 {
                    if mask >> v & 1 == 1 {
                        child.add(v, n - 1);
                    }
                }
                let bucket = buckets.entry(child.invariant()).or_default();
                if !bucket.iter().any(|g| isomorphic(g, &child)) {
                    bucket.push(child.clone());
                    level.push(child);
                }
            }
        }
        levels.push(level);
    }
    levels
}

/// Eigenvalues (ascending) and column eigenvectors of a symmetric matrix by
/// cyclic Jacobi rotations.
pub fn jacobi(mut a: Vec<f64>, n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut v = vec![0.0; n * n];
    for i in 0..n {
        v[i * n + i] = 1.0;
    }
    let off_diagonal = |a: &[f64]| -> f64 { (0..n).flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| a[i * n + j].powi(2))).sum() };
    for _ in 0..100 {
        if off_diagonal(&a) < 1e-30 {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p * n + q];
                if apq.abs() < 1e-300 {
                    continue;
                }
                let theta = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let t = if theta == 0.0 { 1.0 } else { t };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let akp = a[k * n + p];
                    let akq = a[k * n + q];
                    a[k * n + p] = c * akp - s * akq;
                    a[k * n + q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[p * n + k];
                    let aqk = a[q * n + k];
                    a[p * n + k] = c * apk - s * aqk;
                    a[q * n + k] = s * apk + c * aqk;
                }
                for k in 0..n {
                    let vkp = v[k * n + p];
                    let vkq = v[k * n + q];
                    v[k * n + p] = c * vkp - s * vkq;
                    v[k * n + q] = s * vkp + c * vkq;
                }
            }
        }
    }
    assert!(off_diagonal(&a) < 1e-24, "Jacobi sweeps did not converge");
    let mut idx: Vec<usize> = (0..n).collect();
    idx.sort_by(|&i, &j| a[i * n + i].total_cmp(&a[j * n + j]));
    let vals = idx.iter().map(|&i| a[i * n + i]).collect();
    let mut vecs = vec![0.0; n * n];
    for (col, &i) in idx.iter().enumerate() {
        for k in 0..n {
            vecs[k * n + col] = v[k * n + i];
        }
    }
    (vals, vecs)
}

pub fn q_matrix(g: &OGraph) -> Vec<f64> {
    let n = g.n;
    let mut m = vec![0.0; n * n];
    for i in 0..n {
        m[i * n + i] = g.deg(i) as f64;
        for j in 0..n {
            if g.has(i, j) {
                m[i * n + j] = 1.0;
            }
        }
    }
    m
}

pub fn a_matrix(g: &OGraph) -> Vec<f64> {
    let n = g.n;
    let mut m = vec![0.0; n * n];
    for i in 0..n {
        for j in 0..n {
            if g.has(i, j) {
                m[i * n + j] = 1.0;
            }
        }
    }
    m
}

/// Largest eigenvalue of `Q` and a nonnegative unit eigenvector for it.
pub fn oracle_q(g: &OGraph) -> (f64, Vec<f64>) {
    let n = g.n;
    let (vals, vecs) = jacobi(q_matrix(g), n);
    let mut x: Vec<f64> = (0..n).map(|k| vecs[k * n + n - 1]).collect();
    if x.iter().sum::<f64>() < 0.0 {
        x.iter_mut().for_each(|e| *e = -*e);
    }
    (vals[n - 1], x)
}

pub fn oracle_lambda(g: &OGraph) -> f64 {
    let (vals, _) = jacobi(a_matrix(g), g.n);
    vals[g.n - 1]
}

/// graph6 encoding written from the format definition: `63 + n`, then the
/// upper triangle column by column, six bits per byte, zero-padded.
pub fn oracle_graph6(g: &OGraph) -> String {
    assert!(g.n < 63);
    let mut out = vec![63 + g.n as u8];
    let mut bits = Vec::new();
    for j in 1..g.n {
        for i in 0..j {
            bits.push(g.has(i, j));
        }
    }
    for chunk in bits.chunks(6) {
        let mut byte = 0u8;
        for (k, &b) in chunk.iter().enumerate() {
            if b {
                byte |= 1 << (5 - k);
            }
        }
        out.push(63 + byte);
    }
    String::from_utf8(out).unwrap()
}

/// `e(T_{n,r})` by counting pairs in different parts.
pub fn oracle_turan_edges(n: usize, r: usize) -> u64 {
    let mut e = 0;
    for i in 0..n {
        for j in i + 1..n {
            if i % r != j % r {
                e += 1;
            }
        }
    }
    e
}

/// `q(T_{n,r})` from the two-class quotient: `k1` parts of size `a` and
/// `k2` parts of size `b`.
pub fn oracle_turan_q(n: usize, r: usize) -> f64 {
    let r = r.min(n);
    let a = n.div_ceil(r);
    let b = n / r;
    let k1 = n % r;
    let (k1, k2) = if k1 == 0 { (r, 0) } else { (k1, r - k1) };
    let (nf, af, bf) = (n as f64, a as f64, b as f64);
    let m11 = nf - af + (k1 as f64 - 1.0) * af;
    let m12 = k2 as f64 * bf;
    let m21 = k1 as f64 * af;
    let m22 = nf - bf + (k2 as f64 - 1.0) * bf;
    if k2 == 0 {
        return m11;
    }
    let tr = m11 + m22;
    let det = m11 * m22 - m12 * m21;
    tr / 2.0 + (tr * tr / 4.0 - det).sqrt()
}
