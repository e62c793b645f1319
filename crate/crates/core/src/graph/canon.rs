//! Canonical labeling by equitable refinement plus individualization.
//!
//! The search explores every leaf of the individualization tree except
//! subtrees that are images of already explored ones under a transposition
//! of twin vertices (same neighborhood up to each other). The canonical
//! form is the leaf whose relabeled adjacency rows are lexicographically
//! largest. Intended for the small orders used by enumeration and
//! isomorphism checks; highly symmetric twin-free graphs get slow past
//! a few dozen vertices.

use super::Graph;

#[derive(Clone, Debug)]
pub struct CanonicalLabeling {
    /// `graph` is `original.permuted(&order)`.
    pub graph: Graph,
    /// New vertex `k` is original vertex `order[k]`.
    pub order: Vec<usize>,
}

pub fn canonical_labeling(g: &Graph) -> CanonicalLabeling {
    canonical_labeling_colored(g, &vec![0; g.n()])
}

/// Canonical labeling that only maps vertices onto vertices of the same
/// color. Color classes occupy consecutive label ranges in ascending color
/// order.
pub fn canonical_labeling_colored(g: &Graph, colors: &[usize]) -> CanonicalLabeling {
    let n = g.n();
    assert_eq!(colors.len(), n);
    if n == 0 {
        return CanonicalLabeling {
            graph: g.clone(),
            order: Vec::new(),
        };
    }
    let mut lab: Vec<usize> = (0..n).collect();
    lab.sort_by_key(|&v| (colors[v], v));
    let mut cell_end = vec![0usize; n];
    let mut s = 0;
    while s < n {
        let mut e = s + 1;
        while e < n && colors[lab[e]] == colors[lab[s]] {
            e += 1;
        }
        cell_end[s] = e;
        s = e;
    }
    let mut part = Partition { lab, cell_end };
    let starts: Vec<usize> = part.cell_starts().collect();
    part.refine(g, starts);

    let mut search = Search {
        g,
        twin: twin_classes(g),
        best_cert: Vec::new(),
        best_order: Vec::new(),
        scratch: Vec::new(),
    };
    search.descend(part);
    let order = search.best_order;
    CanonicalLabeling {
        graph: g.permuted(&order),
        order,
    }
}

/// True iff some automorphism of `g` maps `v` to `w`.
pub(crate) fn same_orbit(g: &Graph, v: usize, w: usize) -> bool {
    if v == w {
        return true;
    }
    if g.degree(v) != g.degree(w) {
        return false;
    }
    let mut cv = vec![0; g.n()];
    cv[v] = 1;
    let mut cw = vec![0; g.n()];
    cw[w] = 1;
    canonical_labeling_colored(g, &cv).graph == canonical_labeling_colored(g, &cw).graph
}

fn twin_classes(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut id: Vec<usize> = (0..n).collect();
    for u in 0..n {
        if id[u] != u {
            continue;
        }
        for v in u + 1..n {
            if id[v] == v && are_twins(g, u, v) {
                id[v] = u;
            }
        }
    }
    id
}

fn are_twins(g: &Graph, u: usize, v: usize) -> bool {
    let (ru, rv) = (g.row(u), g.row(v));
    (0..ru.len()).all(|k| {
        let mut a = ru[k];
        let mut b = rv[k];
        if v / 64 == k {
            a &= !(1 << (v % 64));
        }
        if u / 64 == k {
            b &= !(1 << (u % 64));
        }
        a == b
    })
}

#[derive(Clone)]
struct Partition {
    /// Vertices in partition order.
    lab: Vec<usize>,
    /// For each cell start `s`, the exclusive end of that cell.
    cell_end: Vec<usize>,
}

impl Partition {
    fn cell_starts(&self) -> impl Iterator<Item = usize> + '_ {
        let mut s = 0;
        std::iter::from_fn(move || {
            if s >= self.lab.len() {
                None
            } else {
                let cur = s;
                s = self.cell_end[s];
                Some(cur)
            }
        })
    }

    fn is_discrete(&self) -> bool {
        self.cell_starts().all(|s| self.cell_end[s] == s + 1)
    }

    /// Refines to the coarsest equitable partition finer than the current one,
    /// starting from the given splitter cells.
    fn refine(&mut self, g: &Graph, splitters: Vec<usize>) {
        let n = self.lab.len();
        let words = g.row(0).len();
        let mut queued = vec![false; n];
        let mut queue = std::collections::VecDeque::new();
        for s in splitters {
            queued[s] = true;
            queue.push_back(s);
        }
        let mut mask = vec![0u64; words];
        let mut count = vec![0usize; n];
        let mut buf: Vec<(usize, usize)> = Vec::with_capacity(n);
        while let Some(ws) = queue.pop_front() {
            queued[ws] = false;
            mask.iter_mut().for_each(|m| *m = 0);
            for &w in &self.lab[ws..self.cell_end[ws]] {
                mask[w / 64] |= 1 << (w % 64);
            }
            let starts: Vec<usize> = self.cell_starts().collect();
            for s in starts {
                let e = self.cell_end[s];
                if e - s == 1 {
                    continue;
                }
                let mut uniform = true;
                for k in s..e {
                    let v = self.lab[k];
                    count[v] = g
                        .row(v)
                        .iter()
                        .zip(&mask)
                        .map(|(r, m)| (r & m).count_ones() as usize)
                        .sum();
                    if count[v] != count[self.lab[s]] {
                        uniform = false;
                    }
                }
                if uniform {
                    continue;
                }
                buf.clear();
                buf.extend(self.lab[s..e].iter().map(|&v| (count[v], v)));
                buf.sort_by_key(|&(c, _)| c);
                for (k, &(_, v)) in buf.iter().enumerate() {
                    self.lab[s + k] = v;
                }
                let was_queued = queued[s];
                let mut k = s;
                while k < e {
                    let mut j = k + 1;
                    while j < e && buf[j - s].0 == buf[k - s].0 {
                        j += 1;
                    }
                    self.cell_end[k] = j;
                    if (k != s || !was_queued) && !queued[k] {
                        queued[k] = true;
                        queue.push_back(k);
                    }
                    k = j;
                }
            }
        }
    }

    fn individualize(&self, g: &Graph, start: usize, v: usize) -> Partition {
        let mut p = self.clone();
        let e = p.cell_end[start];
        let pos = p.lab[start..e].iter().position(|&x| x == v).unwrap() + start;
        p.lab.swap(start, pos);
        p.lab[start + 1..e].sort_unstable();
        p.cell_end[start] = start + 1;
        p.cell_end[start + 1] = e;
        p.refine(g, vec![start]);
        p
    }
}

struct Search<'a> {
    g: &'a Graph,
    twin: Vec<usize>,
    best_cert: Vec<u64>,
    best_order: Vec<usize>,
    scratch: Vec<u64>,
}

impl Search<'_> {
    fn descend(&mut self, part: Partition) {
        if part.is_discrete() {
            self.leaf(&part.lab);
            return;
        }
        let start = part
            .cell_starts()
            .find(|&s| part.cell_end[s] > s + 1)
            .expect("non-discrete partition has a non-singleton cell");
        let members: Vec<usize> = part.lab[start..part.cell_end[start]].to_vec();
        let mut explored_twins: Vec<usize> = Vec::new();
        for v in members {
            if explored_twins.contains(&self.twin[v]) {
                continue;
            }
            let child = part.individualize(self.g, start, v);
            self.descend(child);
            explored_twins.push(self.twin[v]);
        }
    }

    fn leaf(&mut self, order: &[usize]) {
        let n = order.len();
        let words = n.div_ceil(64);
        let mut pos = vec![0usize; n];
        for (k, &v) in order.iter().enumerate() {
            pos[v] = k;
        }
        self.scratch.clear();
        self.scratch.resize(n * words, 0);
        for (k, &v) in order.iter().enumerate() {
            let row = &mut self.scratch[k * words..(k + 1) * words];
            for w in self.g.neighbors(v) {
                let p = pos[w];
                // Highest label first so lexicographic word order matches
                // reading the row left to right.
                let bit = n - 1 - p;
                row[bit / 64] |= 1 << (bit % 64);
            }
            row.reverse();
        }
        if self.best_order.is_empty() || self.scratch > self.best_cert {
            std::mem::swap(&mut self.best_cert, &mut self.scratch);
            self.best_order = order.to_vec();
        }
    }
}
