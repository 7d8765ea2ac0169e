//! The Gallai graph, its vertex labeling, the Gallai-index set, and the
//! Gallai-simplicial complex.
//!
//! For a graph `G` with at least one edge, the Gallai graph has one vertex
//! per edge of `G`, numbered `1..=m` along the canonical edge order of `G`.
//! Vertices `a` and `b` are adjacent exactly when edges `a` and `b` of `G`
//! share one endpoint and their outer endpoints are not joined by an edge of
//! `G`.
//!
//! The Gallai-index set collects, for every such adjacent pair `{i,j}` and
//! `{j,k}`, the vertex triple `{i,j,k}`, and for every edge of `G` that is
//! isolated in the Gallai graph, its endpoint pair `{i,j}`. The
//! Gallai-simplicial complex is the complex generated by the Gallai-index
//! set.

use std::collections::BTreeSet;

use crate::complex::{Face, SimplicialComplex};
use crate::enumerate;
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};

/// Mapping between Gallai-graph vertices and the source graph's edges:
/// vertex `k` of the Gallai graph corresponds to entry `k - 1` of the
/// canonical edge order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GallaiLabeling {
    edges: Vec<Edge>,
}

impl GallaiLabeling {
    /// Source edges in Gallai-vertex order.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Number of Gallai vertices.
    pub fn n(&self) -> u32 {
        self.edges.len() as u32
    }

    /// Source edge of Gallai vertex `k` (1-based).
    pub fn edge_of(&self, k: u32) -> Result<Edge> {
        if k == 0 || k as usize > self.edges.len() {
            return Err(Error::InvalidVertex(k));
        }
        Ok(self.edges[k as usize - 1])
    }

    /// Gallai vertex (1-based) of the source edge `e`.
    pub fn vertex_of(&self, e: &Edge) -> Result<u32> {
        match self.edges.binary_search(e) {
            Ok(idx) => Ok(idx as u32 + 1),
            Err(_) => Err(Error::UnknownEdge(e.u(), e.v())),
        }
    }
}

fn require_edges(g: &Graph) -> Result<()> {
    if g.edge_count() == 0 {
        return Err(Error::NoEdges);
    }
    Ok(())
}

/// Vertex labeling of the Gallai graph of `g`.
pub fn gallai_labeling(g: &Graph) -> Result<GallaiLabeling> {
    require_edges(g)?;
    Ok(GallaiLabeling {
        edges: g.edges().to_vec(),
    })
}

/// The Gallai graph of `g`, on vertices `1..=m` in canonical edge order.
pub fn gallai(g: &Graph) -> Result<Graph> {
    require_edges(g)?;
    let pairs = enumerate::gallai_pairs(g);
    let edges = pairs
        .into_iter()
        .map(|(a, b)| Edge::new(a as u32 + 1, b as u32 + 1))
        .collect::<Result<Vec<_>>>()?;
    Graph::new(g.edge_count() as u32, edges)
}

/// The Gallai-index set of `g`: one vertex triple per adjacent Gallai pair
/// plus one endpoint pair per isolated Gallai vertex, deduplicated.
pub fn gallai_indices(g: &Graph) -> Result<BTreeSet<Face>> {
    require_edges(g)?;
    let pairs = enumerate::gallai_pairs(g);
    let edges = g.edges();
    let mut covered = vec![false; edges.len()];
    let mut out = BTreeSet::new();
    for (a, b) in pairs {
        covered[a] = true;
        covered[b] = true;
        let (ea, eb) = (edges[a], edges[b]);
        let shared = ea.common_vertex(&eb).expect("pair shares an endpoint");
        let face = Face::new(vec![
            ea.other(shared).expect("endpoint"),
            shared,
            eb.other(shared).expect("endpoint"),
        ])?;
        out.insert(face);
    }
    for (k, e) in edges.iter().enumerate() {
        if !covered[k] {
            out.insert(Face::new(vec![e.u(), e.v()])?);
        }
    }
    Ok(out)
}

/// The Gallai-simplicial complex of `g`: the complex generated by the
/// Gallai-index set. Its ground set is the union of its facets; vertices of
/// `g` covered by no Gallai index are reported by [`uncovered_vertices`].
pub fn gallai_complex(g: &Graph) -> Result<SimplicialComplex> {
    let omega = gallai_indices(g)?;
    SimplicialComplex::from_facets(omega.into_iter().collect())
}

/// Vertices of `g` that appear in no Gallai index and therefore lie outside
/// the ground set of the Gallai-simplicial complex.
pub fn uncovered_vertices(g: &Graph) -> Result<Vec<u32>> {
    let omega = gallai_indices(g)?;
    let mut covered = vec![false; g.n() as usize + 1];
    for face in &omega {
        for &v in face.vertices() {
            covered[v as usize] = true;
        }
    }
    Ok((1..=g.n()).filter(|&v| !covered[v as usize]).collect())
}
