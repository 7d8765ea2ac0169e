//! Gallai graphs, Gallai-simplicial complexes, and f-ideal checks.
//!
//! The Gallai graph of a finite simple graph `G` has one vertex per edge of
//! `G`; two of its vertices are adjacent when the corresponding edges of `G`
//! share exactly one endpoint and the third pair of endpoints is *not* an
//! edge of `G` (the two edges do not span a triangle). Collecting the vertex
//! triples behind each such adjacency, together with the endpoint pairs of
//! edges that end up isolated in the Gallai graph, yields a generating set of
//! faces whose simplicial span is the Gallai-simplicial complex of `G`.
//!
//! The crate provides:
//!
//! * [`graph`]: simple undirected graphs with canonical edge lists, edge
//!   adjacency and triangle predicates, and exhaustive isomorphism testing;
//! * [`generators`]: deterministic labeled constructions of the graph and
//!   complex families used throughout (paths, cycles, stars, ladders,
//!   triangular ladders, prisms, double stars, joined cliques, simplices and
//!   their boundaries);
//! * [`gallai`]: the Gallai graph, its vertex labeling, the Gallai-index set,
//!   and the Gallai-simplicial complex;
//! * [`complex`]: simplicial complexes given by facets, face enumeration,
//!   f-vectors and Euler characteristics;
//! * [`ideal`]: squarefree monomial ideals, facet and non-face complexes, and
//!   the f-ideal / f-graph / f-Gallai checks;
//! * [`oracle`]: independently transcribed closed forms for the Gallai-index
//!   sets and f-vectors of the triangular-ladder and prism families, kept
//!   separate from the construction pipeline so tests can compare the two;
//! * [`enumerate`]: the low-level enumeration kernels, each in sequential and
//!   (feature-gated) parallel form.
//!
//! With the default `parallel` feature the enumeration kernels fan out over
//! rayon and merge deterministically; built with `--no-default-features` the
//! same public API runs the sequential kernels. Results are byte-identical
//! either way.

pub mod complex;
pub mod enumerate;
pub mod error;
pub mod gallai;
pub mod generators;
pub mod graph;
pub mod ideal;
pub mod oracle;

pub use complex::{FVector, Face, SimplicialComplex};
pub use error::{Error, Result};
pub use gallai::{gallai, gallai_complex, gallai_indices, gallai_labeling, GallaiLabeling};
pub use graph::{Edge, Graph, VertexPermutation};
pub use ideal::{FIdealReport, MonomialIdeal};
