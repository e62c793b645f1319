//! Not-necessarily-induced subgraph containment.

use crate::graph::Graph;

fn bits_iter(words: &[u64]) -> impl Iterator<Item = usize> + '_ {
    words.iter().enumerate().flat_map(|(k, &w)| {
        let mut w = w;
        std::iter::from_fn(move || {
            if w == 0 {
                None
            } else {
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(k * 64 + b)
            }
        })
    })
}

fn popcount(words: &[u64]) -> usize {
    words.iter().map(|w| w.count_ones() as usize).sum()
}

fn full_set(n: usize) -> Vec<u64> {
    let words = n.div_ceil(64).max(1);
    let mut s = vec![u64::MAX; words];
    let used = n - (words - 1) * 64;
    if used < 64 {
        s[words - 1] = (1u64 << used) - 1;
    }
    if n == 0 {
        s[0] = 0;
    }
    s
}

/// Some clique on `size` vertices, if one exists.
pub fn find_clique(g: &Graph, size: usize) -> Option<Vec<usize>> {
    if size == 0 {
        return Some(Vec::new());
    }
    if size > g.n() {
        return None;
    }
    // A vertex of a k-clique has degree >= k - 1.
    let mut cand = full_set(g.n());
    for v in 0..g.n() {
        if g.degree(v) + 1 < size {
            cand[v / 64] &= !(1 << (v % 64));
        }
    }
    let mut chosen = Vec::with_capacity(size);
    if extend_clique(g, size, &mut chosen, cand) {
        Some(chosen)
    } else {
        None
    }
}

fn extend_clique(g: &Graph, size: usize, chosen: &mut Vec<usize>, mut cand: Vec<u64>) -> bool {
    if chosen.len() == size {
        return true;
    }
    while popcount(&cand) + chosen.len() >= size {
        let v = bits_iter(&cand).next().expect("nonempty candidate set");
        cand[v / 64] &= !(1 << (v % 64));
        let next: Vec<u64> = cand.iter().zip(g.row(v)).map(|(a, b)| a & b).collect();
        chosen.push(v);
        if extend_clique(g, size, chosen, next) {
            return true;
        }
        chosen.pop();
    }
    false
}

/// Size of a largest clique.
pub fn clique_number(g: &Graph) -> usize {
    let mut best = usize::from(g.n() > 0);
    let mut chosen = Vec::new();
    max_clique(g, &mut chosen, full_set(g.n()), &mut best);
    best
}

fn max_clique(g: &Graph, chosen: &mut Vec<usize>, mut cand: Vec<u64>, best: &mut usize) {
    if chosen.len() > *best {
        *best = chosen.len();
    }
    while chosen.len() + popcount(&cand) > *best {
        let v = bits_iter(&cand).next().expect("nonempty candidate set");
        cand[v / 64] &= !(1 << (v % 64));
        let next: Vec<u64> = cand.iter().zip(g.row(v)).map(|(a, b)| a & b).collect();
        chosen.push(v);
        max_clique(g, chosen, next, best);
        chosen.pop();
    }
}

fn is_complete(f: &Graph) -> bool {
    f.edge_count() == f.n() * f.n().saturating_sub(1) / 2
}

/// Embedding of `f` into `g` as a subgraph: `embedding[i]` is the image of
/// `f`-vertex `i`. Non-edges of `f` are unconstrained.
pub fn contains_subgraph(g: &Graph, f: &Graph) -> Option<Vec<usize>> {
    if f.n() > g.n() || f.edge_count() > g.edge_count() {
        return None;
    }
    if is_complete(f) {
        return find_clique(g, f.n());
    }
    let fdeg = f.degrees();
    let gdeg = g.degrees();

    // Non-isolated vertices first, each next vertex maximising the number of
    // already-ordered neighbours, then degree.
    let mut order: Vec<usize> = Vec::with_capacity(f.n());
    let mut placed = vec![false; f.n()];
    let active: Vec<usize> = (0..f.n()).filter(|&v| fdeg[v] > 0).collect();
    while order.len() < active.len() {
        let next = active
            .iter()
            .copied()
            .filter(|&v| !placed[v])
            .max_by_key(|&v| {
                let back = order.iter().filter(|&&u| f.has_edge(u, v)).count();
                (back, fdeg[v], std::cmp::Reverse(v))
            })
            .unwrap();
        placed[next] = true;
        order.push(next);
    }
    let isolated: Vec<usize> = (0..f.n()).filter(|&v| fdeg[v] == 0).collect();

    let back: Vec<Vec<usize>> = order
        .iter()
        .enumerate()
        .map(|(k, &v)| order[..k].iter().copied().filter(|&u| f.has_edge(u, v)).collect())
        .collect();

    let mut state = EmbedState {
        g,
        gdeg: &gdeg,
        fdeg: &fdeg,
        order: &order,
        back: &back,
        image: vec![usize::MAX; f.n()],
        used: vec![0u64; g.n().div_ceil(64).max(1)],
    };
    if !state.extend(0) {
        return None;
    }
    let mut image = state.image;
    let mut used = state.used;
    for v in isolated {
        let w = (0..g.n()).find(|&w| used[w / 64] >> (w % 64) & 1 == 0)?;
        used[w / 64] |= 1 << (w % 64);
        image[v] = w;
    }
    Some(image)
}

struct EmbedState<'a> {
    g: &'a Graph,
    gdeg: &'a [usize],
    fdeg: &'a [usize],
    order: &'a [usize],
    back: &'a [Vec<usize>],
    image: Vec<usize>,
    used: Vec<u64>,
}

impl EmbedState<'_> {
    fn extend(&mut self, depth: usize) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let v = self.order[depth];
        let mut cand = full_set(self.g.n());
        for &u in &self.back[depth] {
            for (c, r) in cand.iter_mut().zip(self.g.row(self.image[u])) {
                *c &= r;
            }
        }
        for (c, u) in cand.iter_mut().zip(&self.used) {
            *c &= !u;
        }
        let targets: Vec<usize> = bits_iter(&cand).filter(|&w| self.gdeg[w] >= self.fdeg[v]).collect();
        for w in targets {
            self.image[v] = w;
            self.used[w / 64] |= 1 << (w % 64);
            if self.extend(depth + 1) {
                return true;
            }
            self.used[w / 64] &= !(1 << (w % 64));
        }
        self.image[v] = usize::MAX;
        false
    }
}

pub fn is_free(g: &Graph, f: &Graph) -> bool {
    contains_subgraph(g, f).is_none()
}

/// Checks that `embedding` maps `f` injectively into `g` preserving edges.
pub fn is_valid_embedding(g: &Graph, f: &Graph, embedding: &[usize]) -> bool {
    if embedding.len() != f.n() || embedding.iter().any(|&w| w >= g.n()) {
        return false;
    }
    let mut seen = std::collections::HashSet::new();
    embedding.iter().all(|w| seen.insert(*w)) && f.edges().all(|(a, b)| g.has_edge(embedding[a], embedding[b]))
}
