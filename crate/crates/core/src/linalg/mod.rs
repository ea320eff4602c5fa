//! Signed adjacency matrices, their spectra and eigenvalue multiplicities.
//!
//! Two independent routes to a multiplicity live here: clustering the
//! numeric spectrum from the Jacobi solver, and `n - rank(pI - qA)` by
//! fraction-free integer elimination in [`exact`].

mod eigen;
pub mod exact;

pub use eigen::{symmetric_eigenvalues, EIGEN_TOL, MAX_SWEEPS};
pub use exact::{integer_rank, multiplicity_exact, rank_exact, Rational};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::SignedGraph;

/// Dense `n × n` signed adjacency matrix, entries in {−1, 0, 1}.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdjacencyMatrix {
    n: usize,
    entries: Vec<i8>,
}

impl AdjacencyMatrix {
    pub fn from_graph(g: &SignedGraph) -> AdjacencyMatrix {
        let n = g.n();
        let mut entries = vec![0i8; n * n];
        for e in g.edges() {
            entries[e.u * n + e.v] = e.sign.value();
            entries[e.v * n + e.u] = e.sign.value();
        }
        AdjacencyMatrix { n, entries }
    }

    /// Raw rows; only squareness and the entry range are checked here, the
    /// eigensolver checks symmetry.
    pub fn from_rows(rows: &[Vec<i64>]) -> Result<AdjacencyMatrix> {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * n);
        for row in rows {
            if row.len() != n {
                return Err(Error::NotSquare);
            }
            for &x in row {
                if !(-1..=1).contains(&x) {
                    return Err(Error::InvalidEntry(x));
                }
                entries.push(x as i8);
            }
        }
        Ok(AdjacencyMatrix { n, entries })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> i8 {
        self.entries[i * self.n + j]
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        self.entries
            .chunks(self.n.max(1))
            .take(self.n)
            .map(|r| r.iter().map(|&x| x as i64).collect())
            .collect()
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.entries.iter().map(|&x| x as f64).collect()
    }
}

pub fn adjacency(g: &SignedGraph) -> AdjacencyMatrix {
    AdjacencyMatrix::from_graph(g)
}

/// Eigenvalues sorted descending plus the largest off-diagonal magnitude
/// left when the solver stopped.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Spectrum {
    pub eigenvalues: Vec<f64>,
    pub residual: f64,
}

impl Spectrum {
    pub fn len(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn is_empty(&self) -> bool {
        self.eigenvalues.is_empty()
    }

    pub fn trace(&self) -> f64 {
        self.eigenvalues.iter().sum()
    }

    pub fn sum_of_squares(&self) -> f64 {
        self.eigenvalues.iter().map(|x| x * x).sum()
    }
}

pub fn eigen_symmetric(a: &AdjacencyMatrix, tol: f64) -> Result<Spectrum> {
    symmetric_eigenvalues(&a.to_f64(), a.n(), tol)
}

/// Spectrum of the signed adjacency matrix at the default tolerance.
pub fn spectrum(g: &SignedGraph) -> Result<Spectrum> {
    eigen_symmetric(&adjacency(g), EIGEN_TOL)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MultiplicityCluster {
    pub value: f64,
    pub multiplicity: usize,
    pub members: Vec<usize>,
}

/// Groups a descending spectrum: a new cluster starts whenever the gap to the
/// previous eigenvalue exceeds `cluster_tol`. Each representative is the
/// cluster mean.
pub fn cluster(spec: &Spectrum, cluster_tol: f64) -> Vec<MultiplicityCluster> {
    let mut out: Vec<MultiplicityCluster> = Vec::new();
    let mut sum = 0.0;
    for (i, &x) in spec.eigenvalues.iter().enumerate() {
        let extend = i > 0 && (spec.eigenvalues[i - 1] - x).abs() <= cluster_tol;
        if !extend {
            if let Some(last) = out.last_mut() {
                last.value = sum / last.multiplicity as f64;
            }
            out.push(MultiplicityCluster {
                value: 0.0,
                multiplicity: 0,
                members: Vec::new(),
            });
            sum = 0.0;
        }
        let last = out.last_mut().expect("a cluster was just opened");
        last.multiplicity += 1;
        last.members.push(i);
        sum += x;
    }
    if let Some(last) = out.last_mut() {
        last.value = sum / last.multiplicity as f64;
    }
    out
}

/// `1e-8 · max(1, Δ)`: well above solver error, well below the eigenvalue
/// gaps that occur for small {−1, 0, 1} matrices.
pub fn cluster_tolerance(g: &SignedGraph) -> f64 {
    1e-8 * (g.max_degree().max(1) as f64)
}

/// Numeric multiplicity of `lambda`: size of the cluster whose representative
/// lies within `cluster_tol` of it, or 0.
pub fn numeric_multiplicity(
    clusters: &[MultiplicityCluster],
    lambda: f64,
    cluster_tol: f64,
) -> usize {
    clusters
        .iter()
        .find(|c| (c.value - lambda).abs() <= cluster_tol)
        .map_or(0, |c| c.multiplicity)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct InterlaceVerdict {
    pub holds: bool,
    /// Smallest of `λ_j − μ_j` and `μ_j − λ_{n−m+j}` over all `j`.
    pub worst_margin: f64,
}

/// Checks `λ_j ≥ μ_j ≥ λ_{n−m+j}` (up to `tol`) for the subgraph induced by
/// `subset`.
pub fn interlace_check(g: &SignedGraph, subset: &[usize], tol: f64) -> Result<InterlaceVerdict> {
    let h = g.induced_subgraph(subset)?;
    let lambda = spectrum(g)?.eigenvalues;
    let mu = spectrum(&h)?.eigenvalues;
    let (n, m) = (lambda.len(), mu.len());
    let worst_margin = (0..m)
        .map(|j| (lambda[j] - mu[j]).min(mu[j] - lambda[n - m + j]))
        .fold(f64::INFINITY, f64::min);
    Ok(InterlaceVerdict {
        holds: worst_margin >= -tol,
        worst_margin,
    })
}
