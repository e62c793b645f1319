//! Isomorph-free generation by canonical augmentation.
//!
//! Each graph on `n` vertices is built from a parent on `n − 1` vertices by
//! adding vertex `n − 1` with some neighbourhood. A child is kept only if the
//! new vertex lies in the automorphism orbit of the child's canonical
//! deletion vertex, so each isomorphism class comes from exactly one parent
//! class; children of one parent that coincide are merged by canonical form.

use std::collections::{HashMap, HashSet};
use std::sync::{Arc, Mutex, OnceLock};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{canonical_labeling, same_orbit, Graph};

/// Largest order generated in-process.
pub const ENUMERATION_CAP: usize = 9;

fn cache() -> &'static Mutex<HashMap<usize, Arc<Vec<Graph>>>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<Vec<Graph>>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// One canonical representative per isomorphism class of graphs on `n`
/// vertices, in a deterministic order. Results are cached per process.
pub fn enumerate_graphs(n: usize) -> Result<Arc<Vec<Graph>>> {
    if n > ENUMERATION_CAP {
        return Err(Error::CapacityExceeded { n, cap: ENUMERATION_CAP });
    }
    if let Some(hit) = cache().lock().expect("cache lock").get(&n) {
        return Ok(hit.clone());
    }
    let level = if n == 0 {
        vec![Graph::empty(0)]
    } else {
        let parents = enumerate_graphs(n - 1)?;
        parents.par_iter().map(children).collect::<Vec<_>>().into_iter().flatten().collect()
    };
    let level = Arc::new(level);
    cache().lock().expect("cache lock").insert(n, level.clone());
    Ok(level)
}

/// Isomorphism-invariant vertex score; the deletion vertex is taken among
/// the vertices of maximum score.
fn score(g: &Graph, v: usize) -> (usize, usize) {
    (g.degree(v), g.neighbors(v).map(|w| g.degree(w)).sum())
}

fn children(parent: &Graph) -> Vec<Graph> {
    let p = parent.n();
    let n = p + 1;
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for mask in 0u32..1 << p {
        let child = Graph::from_fn(n, |i, j| if j == p { mask >> i & 1 == 1 } else { parent.has_edge(i, j) });
        let v = p;
        let sv = score(&child, v);
        if (0..p).any(|w| score(&child, w) > sv) {
            continue;
        }
        let lab = canonical_labeling(&child);
        let best = (0..n).map(|w| score(&child, w)).max().expect("nonempty");
        let w = *lab.order.iter().rev().find(|&&w| score(&child, w) == best).expect("some vertex attains the max");
        if w != v && !same_orbit(&child, v, w) {
            continue;
        }
        if seen.insert(lab.graph.clone()) {
            out.push(lab.graph);
        }
    }
    out
}
