//! Signless-Laplacian and adjacency spectral radii with Perron vectors.
//!
//! The main route is power iteration on `Q = D + A` (entrywise nonnegative and
//! positive semidefinite, so no shift is needed). The dense tridiagonal-QL
//! solver in [`crate::linalg`] is both the fallback and the reference route.
//! Power iteration runs on the quotient by twin classes (vertices whose
//! neighbourhoods agree apart from each other), on which every Perron vector
//! is constant; complete multipartite graphs shrink to one row per part.
//! Disconnected graphs are handled one component at a time; the winning
//! component's vector is zero-extended.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::linalg::symmetric_eigen;
use serde::{Deserialize, Serialize};

pub const MAX_POWER_ITERATIONS: usize = 1_000_000;
const START_PERTURBATION: f64 = 1e-3;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Tolerance {
    /// Convergence threshold on the eigen-equation residual.
    pub eig_tol: f64,
    /// Slack threshold used to classify inequalities as holding or tight.
    pub cmp_tol: f64,
}

impl Default for Tolerance {
    fn default() -> Self {
        Tolerance {
            eig_tol: 1e-10,
            cmp_tol: 1e-9,
        }
    }
}

impl Tolerance {
    pub fn new(eig_tol: f64, cmp_tol: f64) -> Result<Self> {
        if !(eig_tol > 0.0 && cmp_tol > 0.0) || !eig_tol.is_finite() || !cmp_tol.is_finite() {
            return Err(Error::InvalidInput(format!(
                "tolerances must be finite and strictly positive (eig_tol = {eig_tol}, cmp_tol = {cmp_tol})"
            )));
        }
        Ok(Tolerance { eig_tol, cmp_tol })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Power,
    Dense,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SpectralResult {
    pub radius: f64,
    /// Nonnegative unit eigenvector for `radius`.
    pub vector: Vec<f64>,
    /// Largest absolute entry of the eigen-equation defect.
    pub residual: f64,
    pub iterations: usize,
    pub method: Method,
}

impl SpectralResult {
    /// Smallest entry and the lowest vertex attaining it.
    pub fn min_entry(&self) -> (f64, usize) {
        self.vector
            .iter()
            .enumerate()
            .fold((f64::INFINITY, 0), |(best, at), (k, &x)| if x < best { (x, k) } else { (best, at) })
    }
}

#[derive(Clone, Copy, PartialEq)]
enum Operator {
    SignlessLaplacian,
    Adjacency,
}

/// Largest eigenvalue of `Q(G) = D(G) + A(G)` with a nonnegative unit eigenvector.
pub fn q_radius(g: &Graph, tol: &Tolerance) -> Result<SpectralResult> {
    radius_by_components(g, tol, Operator::SignlessLaplacian, false)
}

/// Largest eigenvalue of `A(G)` with a nonnegative unit eigenvector.
pub fn adjacency_radius(g: &Graph, tol: &Tolerance) -> Result<SpectralResult> {
    radius_by_components(g, tol, Operator::Adjacency, false)
}

/// `q_radius` computed with the dense eigensolver only.
pub fn q_radius_dense(g: &Graph, tol: &Tolerance) -> Result<SpectralResult> {
    radius_by_components(g, tol, Operator::SignlessLaplacian, true)
}

/// `adjacency_radius` computed with the dense eigensolver only.
pub fn adjacency_radius_dense(g: &Graph, tol: &Tolerance) -> Result<SpectralResult> {
    radius_by_components(g, tol, Operator::Adjacency, true)
}

fn radius_by_components(g: &Graph, tol: &Tolerance, op: Operator, dense_only: bool) -> Result<SpectralResult> {
    let n = g.n();
    if n == 0 {
        return Err(Error::InvalidInput("spectral radius of the null graph is undefined".into()));
    }
    let mut best: Option<(f64, Vec<usize>, Vec<f64>)> = None;
    let mut iterations = 0;
    let mut method = if dense_only { Method::Dense } else { Method::Power };
    for comp in g.components() {
        let (radius, local, iters, m) = if comp.len() == 1 {
            (0.0, vec![1.0], 0, method)
        } else {
            let sub = g.induced_subgraph(&comp);
            component_radius(&sub, tol, op, dense_only)?
        };
        iterations += iters;
        if m == Method::Dense {
            method = Method::Dense;
        }
        let better = match &best {
            None => true,
            Some((r, _, _)) => radius > r + tol.cmp_tol,
        };
        if better {
            best = Some((radius, comp, local));
        }
    }
    let (radius, comp, local) = best.expect("graph has at least one component");
    let mut vector = vec![0.0; n];
    for (&v, &x) in comp.iter().zip(&local) {
        vector[v] = x;
    }
    let residual = match op {
        Operator::SignlessLaplacian => q_residual(g, radius, &vector),
        Operator::Adjacency => adjacency_residual(g, radius, &vector),
    };
    Ok(SpectralResult {
        radius,
        vector,
        residual,
        iterations,
        method,
    })
}

/// Radius and Perron vector of a connected graph with at least two vertices.
fn component_radius(g: &Graph, tol: &Tolerance, op: Operator, dense_only: bool) -> Result<(f64, Vec<f64>, usize, Method)> {
    if !dense_only {
        if let Some((r, x, it)) = power_iteration(g, tol, op) {
            return Ok((r, x, it, Method::Power));
        }
    }
    let (r, x) = dense_perron(g, op)?;
    Ok((r, x, 0, Method::Dense))
}

/// Symmetric nonnegative operator `y = diag ⊙ x + Σ weight · x[w]`.
struct SparseOperator {
    diag: Vec<f64>,
    rows: Vec<Vec<(usize, f64)>>,
}

impl SparseOperator {
    fn apply(&self, x: &[f64], y: &mut [f64]) {
        for (v, row) in self.rows.iter().enumerate() {
            y[v] = self.diag[v] * x[v] + row.iter().map(|&(w, a)| a * x[w]).sum::<f64>();
        }
    }
}

/// Vertices with the same neighbourhood apart from each other. The Perron
/// vector of `Q` and of `A` is constant on such a class, so the problem
/// reduces to the symmetrized quotient over the classes.
fn twin_quotient(g: &Graph) -> (Vec<usize>, Vec<Vec<usize>>) {
    let n = g.n();
    let mut class = vec![usize::MAX; n];
    let mut members: Vec<Vec<usize>> = Vec::new();
    for v in 0..n {
        if class[v] != usize::MAX {
            continue;
        }
        class[v] = members.len();
        let mut m = vec![v];
        for w in v + 1..n {
            if class[w] == usize::MAX && twins(g, v, w) {
                class[w] = members.len();
                m.push(w);
            }
        }
        members.push(m);
    }
    (class, members)
}

fn twins(g: &Graph, u: usize, v: usize) -> bool {
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

fn power_iteration(g: &Graph, tol: &Tolerance, op: Operator) -> Option<(f64, Vec<f64>, usize)> {
    let n = g.n();
    let deg: Vec<f64> = (0..n).map(|v| g.degree(v) as f64).collect();
    // Adjacency spectra of bipartite graphs are symmetric; the shift keeps
    // the top eigenvalue strictly dominant in modulus.
    let shift = match op {
        Operator::SignlessLaplacian => 0.0,
        Operator::Adjacency => (deg.iter().sum::<f64>() / n as f64 / 2.0).max(0.5),
    };
    let (class, members) = twin_quotient(g);
    let size: Vec<f64> = members.iter().map(|m| m.len() as f64).collect();
    let operator = SparseOperator {
        diag: members
            .iter()
            .map(|m| {
                let u = m[0];
                // Twins in a class are either all adjacent or all not.
                let inside = if m.len() > 1 && g.has_edge(m[0], m[1]) { (m.len() - 1) as f64 } else { 0.0 };
                shift + inside + if op == Operator::SignlessLaplacian { deg[u] } else { 0.0 }
            })
            .collect(),
        rows: members
            .iter()
            .enumerate()
            .map(|(i, m)| {
                let mut row: Vec<(usize, f64)> = g
                    .neighbors(m[0])
                    .filter(|&w| class[w] != i && members[class[w]][0] == w)
                    .map(|w| (class[w], (size[i] * size[class[w]]).sqrt()))
                    .collect();
                row.sort_unstable_by_key(|&(j, _)| j);
                row
            })
            .collect(),
    };
    let k = members.len();
    let mut y: Vec<f64> = members.iter().map(|m| size[class[m[0]]].sqrt() * (deg[m[0]] + START_PERTURBATION)).collect();
    normalize(&mut y);
    let mut z = vec![0.0; k];
    for it in 1..=MAX_POWER_ITERATIONS {
        operator.apply(&y, &mut z);
        let rho: f64 = y.iter().zip(&z).map(|(a, b)| a * b).sum();
        let residual = y.iter().zip(&z).map(|(a, b)| (b - rho * a).abs()).fold(0.0, f64::max);
        if residual <= tol.eig_tol {
            let x = (0..n).map(|v| y[class[v]] / size[class[v]].sqrt()).collect();
            return Some((rho - shift, x, it));
        }
        std::mem::swap(&mut y, &mut z);
        if normalize(&mut y) == 0.0 {
            return None;
        }
    }
    None
}

fn normalize(x: &mut [f64]) -> f64 {
    let norm = x.iter().map(|v| v * v).sum::<f64>().sqrt();
    if norm > 0.0 {
        x.iter_mut().for_each(|v| *v /= norm);
    }
    norm
}

fn operator_matrix(g: &Graph, op: Operator) -> Vec<f64> {
    let n = g.n();
    let mut a = vec![0.0; n * n];
    for v in 0..n {
        for w in g.neighbors(v) {
            a[v * n + w] = 1.0;
        }
        if op == Operator::SignlessLaplacian {
            a[v * n + v] = g.degree(v) as f64;
        }
    }
    a
}

/// Row-major `Q(G)`.
pub fn signless_laplacian_matrix(g: &Graph) -> Vec<f64> {
    operator_matrix(g, Operator::SignlessLaplacian)
}

/// Row-major `A(G)`.
pub fn adjacency_matrix(g: &Graph) -> Vec<f64> {
    operator_matrix(g, Operator::Adjacency)
}

fn dense_perron(g: &Graph, op: Operator) -> Result<(f64, Vec<f64>)> {
    let n = g.n();
    let eig = symmetric_eigen(&operator_matrix(g, op), n)?;
    let radius = eig.values[n - 1];
    let mut x = eig.vectors[n - 1].clone();
    if x.iter().sum::<f64>() < 0.0 {
        x.iter_mut().for_each(|v| *v = -*v);
    }
    // Connected input: the top eigenvector is one-signed up to rounding.
    x.iter_mut().for_each(|v| *v = v.max(0.0));
    if normalize(&mut x) == 0.0 {
        return Err(Error::Computation("dense eigensolver returned a zero Perron vector".into()));
    }
    Ok((radius, x))
}

/// All eigenvalues of `Q(G)`, ascending.
pub fn q_spectrum(g: &Graph) -> Result<Vec<f64>> {
    Ok(symmetric_eigen(&signless_laplacian_matrix(g), g.n())?.values)
}

fn q_residual(g: &Graph, q: f64, x: &[f64]) -> f64 {
    (0..g.n())
        .map(|u| {
            let s: f64 = g.neighbors(u).map(|j| x[j]).sum();
            ((q - g.degree(u) as f64) * x[u] - s).abs()
        })
        .fold(0.0, f64::max)
}

fn adjacency_residual(g: &Graph, lambda: f64, x: &[f64]) -> f64 {
    (0..g.n())
        .map(|u| {
            let s: f64 = g.neighbors(u).map(|j| x[j]).sum();
            (lambda * x[u] - s).abs()
        })
        .fold(0.0, f64::max)
}

/// `max_u |(q - d(u)) x_u - Σ_{j ∈ N(u)} x_j|` for a signless-Laplacian result.
pub fn eigen_residual(g: &Graph, result: &SpectralResult) -> f64 {
    assert_eq!(result.vector.len(), g.n(), "vector length must equal the graph order");
    q_residual(g, result.radius, &result.vector)
}

/// `x^T Q(G) x = Σ_{ij ∈ E} (x_i + x_j)^2` for a unit vector `x`.
pub fn rayleigh_q(g: &Graph, x: &[f64]) -> Result<f64> {
    if x.len() != g.n() {
        return Err(Error::InvalidInput(format!("vector has length {}, graph has order {}", x.len(), g.n())));
    }
    let norm2: f64 = x.iter().map(|v| v * v).sum();
    if (norm2.sqrt() - 1.0).abs() > 1e-9 {
        return Err(Error::InvalidInput(format!("vector is not unit (norm {})", norm2.sqrt())));
    }
    Ok(g.edges().map(|(i, j)| (x[i] + x[j]).powi(2)).sum())
}

/// `Σ_v d(v)^p` for `p >= 1`.
pub fn degree_power(g: &Graph, p: f64) -> Result<f64> {
    if !(p >= 1.0) {
        return Err(Error::InvalidInput(format!("degree power needs p >= 1, got {p}")));
    }
    Ok((0..g.n()).map(|v| (g.degree(v) as f64).powf(p)).sum())
}
