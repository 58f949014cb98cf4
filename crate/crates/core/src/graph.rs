//! Finite simple graphs and their minimum-rank instances.
//!
//! A graph on n vertices induces the matrix family with ones on the
//! diagonal and zeros on edges; its minimum rank is the min-rank instance
//! with standard-basis targets and coordinate subspaces avoiding the
//! closed neighbourhoods.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::matrix::PrimeFieldMatrix;
use crate::minrank::MinRankInstance;
use crate::subspace::Subspace;

/// Vertices are 0-based internally; the text format is 1-based.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Graph {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
}

impl Graph {
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut set = BTreeSet::new();
        for (s, t) in edges {
            if s == t {
                return Err(Error::Precondition(format!("self-loop at vertex {s}")));
            }
            if s >= n || t >= n {
                return Err(Error::Precondition(format!(
                    "edge ({s},{t}) out of range for {n} vertices"
                )));
            }
            set.insert((s.min(t), s.max(t)));
        }
        Ok(Graph { n, edges: set })
    }

    pub fn empty(n: usize) -> Self {
        Graph { n, edges: BTreeSet::new() }
    }

    pub fn complete(n: usize) -> Self {
        let mut edges = BTreeSet::new();
        for s in 0..n {
            for t in s + 1..n {
                edges.insert((s, t));
            }
        }
        Graph { n, edges }
    }

    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::Precondition("cycle needs at least 3 vertices".into()));
        }
        Graph::new(n, (0..n).map(|s| (s, (s + 1) % n)))
    }

    pub fn path(n: usize) -> Self {
        let edges = (0..n.saturating_sub(1)).map(|s| (s, s + 1)).collect();
        Graph { n, edges }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> impl Iterator<Item = &(usize, usize)> {
        self.edges.iter()
    }

    pub fn adjacent(&self, s: usize, t: usize) -> bool {
        self.edges.contains(&(s.min(t), s.max(t)))
    }

    /// Coordinates forced to zero in column s: the closed neighbourhood.
    pub fn blocked(&self, s: usize) -> Vec<usize> {
        (0..self.n).filter(|&t| t == s || self.adjacent(s, t)).collect()
    }
}

/// The min-rank instance of a graph: targets are the standard basis,
/// the subspace for vertex s spans the coordinates outside its closed
/// neighbourhood.
pub fn graph_to_minrank(graph: &Graph, modulus: u64) -> Result<MinRankInstance> {
    let n = graph.vertex_count();
    let mut targets = Vec::with_capacity(n);
    let mut subspaces = Vec::with_capacity(n);
    for s in 0..n {
        let mut e = vec![0u64; n];
        e[s] = 1;
        targets.push(e);
        let blocked = graph.blocked(s);
        let rows: Vec<Vec<u64>> = (0..n)
            .filter(|t| !blocked.contains(t))
            .map(|t| {
                let mut row = vec![0u64; n];
                row[t] = 1;
                row
            })
            .collect();
        subspaces.push(Subspace::from_rows(&rows, n, modulus)?);
    }
    MinRankInstance::new(n, modulus, targets, subspaces)
}

/// Whether a matrix belongs to the family of the graph: ones on the
/// diagonal, zeros on edges.
pub fn matrix_in_family(graph: &Graph, m: &PrimeFieldMatrix) -> bool {
    let n = graph.vertex_count();
    if m.rows() != n || m.cols() != n {
        return false;
    }
    for s in 0..n {
        if m.get(s, s) != 1 {
            return false;
        }
        for t in 0..n {
            if graph.adjacent(s, t) && m.get(s, t) != 0 {
                return false;
            }
        }
    }
    true
}

/// The 0/1 matrix of a proper coloring: 1 where two vertices share a
/// color. It belongs to the graph's matrix family and its rank is the
/// number of colors used.
pub fn chromatic_witness(
    graph: &Graph,
    coloring: &[usize],
    modulus: u64,
) -> Result<PrimeFieldMatrix> {
    let n = graph.vertex_count();
    if coloring.len() != n {
        return Err(Error::Precondition("coloring must assign every vertex".into()));
    }
    for &(s, t) in &graph.edges {
        if coloring[s] == coloring[t] {
            return Err(Error::Precondition(format!(
                "improper coloring: adjacent vertices {s} and {t} share color {}",
                coloring[s]
            )));
        }
    }
    let mut m = PrimeFieldMatrix::zero(n, n, modulus)?;
    for s in 0..n {
        for t in 0..n {
            if coloring[s] == coloring[t] {
                m.set(s, t, 1);
            }
        }
    }
    Ok(m)
}
