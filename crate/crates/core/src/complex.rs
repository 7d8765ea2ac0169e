//! Simplicial complexes given by their facets.
//!
//! A complex is stored as the list of its inclusion-maximal faces over a
//! ground set of positive integer vertex labels. The ground set is always
//! exactly the union of the facets, so every ground vertex lies in at least
//! one facet. Faces are sorted vertex lists and all renderings are
//! deterministic.

use std::collections::BTreeSet;
use std::fmt;

use crate::enumerate;
use crate::error::{Error, Result};

/// Largest total subset count (summed over facets, before deduplication)
/// that exhaustive face enumeration will attempt.
pub const MAX_FACE_ENUMERATION: u128 = 10_000_000;

/// Nonempty set of positive vertex labels, stored sorted.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Face(Vec<u32>);

impl Face {
    /// Builds a face, sorting and deduplicating the vertices.
    pub fn new(vertices: Vec<u32>) -> Result<Self> {
        let mut vs = vertices;
        vs.sort_unstable();
        vs.dedup();
        if vs.is_empty() {
            return Err(Error::EmptyFace);
        }
        if vs[0] == 0 {
            return Err(Error::InvalidVertex(0));
        }
        Ok(Face(vs))
    }

    /// Wraps an already sorted, deduplicated, nonempty vertex list.
    pub(crate) fn from_sorted_unchecked(vertices: Vec<u32>) -> Self {
        debug_assert!(!vertices.is_empty());
        debug_assert!(vertices.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(vertices[0] > 0);
        Face(vertices)
    }

    /// Vertices in increasing order.
    pub fn vertices(&self) -> &[u32] {
        &self.0
    }

    /// Number of vertices.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// Always false; kept for interface completeness.
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Dimension, one less than the vertex count.
    pub fn dimension(&self) -> usize {
        self.0.len() - 1
    }

    /// Whether `v` is a vertex of the face.
    pub fn contains(&self, v: u32) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    /// Whether every vertex of this face lies in `other`.
    pub fn is_subset_of(&self, other: &Face) -> bool {
        let mut it = other.0.iter();
        self.0.iter().all(|v| it.any(|w| w == v))
    }
}

impl fmt::Display for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for v in &self.0 {
            if !first {
                write!(f, " ")?;
            }
            write!(f, "{v}")?;
            first = false;
        }
        Ok(())
    }
}

/// Face counts by dimension: `counts()[k]` is the number of `k`-dimensional
/// faces. The empty face is never counted. The empty vector describes the
/// void complex with no faces at all.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FVector(Vec<u64>);

impl FVector {
    /// Wraps raw counts.
    pub fn new(counts: Vec<u64>) -> Self {
        FVector(counts)
    }

    /// The counts, indexed by dimension.
    pub fn counts(&self) -> &[u64] {
        &self.0
    }

    /// Whether there are no faces at all.
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Non-reduced Euler characteristic: the alternating sum of the counts.
    pub fn euler_characteristic(&self) -> i64 {
        self.0
            .iter()
            .enumerate()
            .map(|(k, &c)| {
                let signed = c as i64;
                if k % 2 == 0 {
                    signed
                } else {
                    -signed
                }
            })
            .sum()
    }

    /// The `"f = (...), chi = ..."` report line.
    pub fn report_line(&self) -> String {
        format!("f = {}, chi = {}", self, self.euler_characteristic())
    }
}

impl fmt::Display for FVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, c) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// Finite simplicial complex, stored as its inclusion-maximal faces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    facets: Vec<Face>,
    ground: Vec<u32>,
}

impl SimplicialComplex {
    /// Builds the complex generated by `faces`, keeping only the maximal
    /// ones. The input need not be an antichain; duplicates and faces
    /// contained in another are dropped.
    pub fn from_facets(faces: Vec<Face>) -> Result<Self> {
        if faces.is_empty() {
            return Err(Error::EmptyComplex);
        }
        let mut list = faces;
        list.sort_unstable();
        list.dedup();
        let facets: Vec<Face> = list
            .iter()
            .filter(|f| !list.iter().any(|g| g.len() > f.len() && f.is_subset_of(g)))
            .cloned()
            .collect();
        let ground: Vec<u32> = facets
            .iter()
            .flat_map(|f| f.vertices().iter().copied())
            .collect::<BTreeSet<u32>>()
            .into_iter()
            .collect();
        Ok(SimplicialComplex { facets, ground })
    }

    /// Facets in canonical (lexicographic) order.
    pub fn facets(&self) -> &[Face] {
        &self.facets
    }

    /// Number of facets.
    pub fn facet_count(&self) -> usize {
        self.facets.len()
    }

    /// Vertices that appear in some facet, in increasing order.
    pub fn ground(&self) -> &[u32] {
        &self.ground
    }

    /// Dimension: the largest facet dimension.
    pub fn dimension(&self) -> usize {
        self.facets
            .iter()
            .map(Face::dimension)
            .max()
            .expect("complex has at least one facet")
    }

    /// Whether all facets share the same dimension.
    pub fn is_pure(&self) -> bool {
        self.facets
            .iter()
            .all(|f| f.dimension() == self.facets[0].dimension())
    }

    /// Whether `face` is a face of the complex, i.e. contained in a facet.
    pub fn contains_face(&self, face: &Face) -> bool {
        self.facets.iter().any(|g| face.is_subset_of(g))
    }

    /// Upper bound on the subsets visited by exhaustive enumeration.
    fn enumeration_bound(&self) -> u128 {
        self.facets.iter().map(|f| 1u128 << f.len().min(127)).sum()
    }

    /// All nonempty faces, grouped by dimension and sorted within each group.
    pub fn enumerate_faces(&self) -> Result<Vec<Vec<Face>>> {
        let bound = self.enumeration_bound();
        if bound > MAX_FACE_ENUMERATION {
            return Err(Error::TooLarge(format!(
                "face enumeration would visit {bound} subsets (limit {MAX_FACE_ENUMERATION})"
            )));
        }
        let faces = enumerate::facet_faces(&self.facets);
        let mut by_dim: Vec<Vec<Face>> = vec![Vec::new(); self.dimension() + 1];
        for face in faces {
            by_dim[face.dimension()].push(face);
        }
        Ok(by_dim)
    }

    /// Face counts by dimension, the empty face excluded.
    pub fn f_vector(&self) -> Result<FVector> {
        let by_dim = self.enumerate_faces()?;
        Ok(FVector(by_dim.iter().map(|fs| fs.len() as u64).collect()))
    }

    /// Alternating sum of the face counts.
    pub fn euler_characteristic(&self) -> Result<i64> {
        Ok(self.f_vector()?.euler_characteristic())
    }

    /// Renders the facet document: a `"facets q"` header line, then one
    /// sorted vertex list per facet in canonical order.
    pub fn to_document(&self) -> String {
        let mut out = format!("facets {}\n", self.facets.len());
        for f in &self.facets {
            out.push_str(&format!("{f}\n"));
        }
        out
    }

    /// Parses the facet document format produced by [`SimplicialComplex::to_document`].
    pub fn parse_document(text: &str) -> Result<Self> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let header = lines
            .next()
            .ok_or_else(|| Error::Parse("empty facet document".into()))?;
        let mut head = header.split_whitespace();
        match head.next() {
            Some("facets") => {}
            _ => {
                return Err(Error::Parse(format!(
                    "expected header \"facets q\", got {header:?}"
                )))
            }
        }
        let q: usize = head
            .next()
            .ok_or_else(|| Error::Parse("missing facet count".into()))?
            .parse()
            .map_err(|_| Error::Parse("invalid facet count".into()))?;
        if head.next().is_some() {
            return Err(Error::Parse(format!(
                "expected header \"facets q\", got {header:?}"
            )));
        }
        let mut facets = Vec::with_capacity(q);
        for _ in 0..q {
            let line = lines
                .next()
                .ok_or_else(|| Error::Parse(format!("expected {q} facet lines")))?;
            let vs = line
                .split_whitespace()
                .map(|t| {
                    t.parse::<u32>()
                        .map_err(|_| Error::Parse(format!("invalid vertex {t:?}")))
                })
                .collect::<Result<Vec<u32>>>()?;
            facets.push(Face::new(vs)?);
        }
        if let Some(extra) = lines.next() {
            return Err(Error::Parse(format!("unexpected trailing line {extra:?}")));
        }
        SimplicialComplex::from_facets(facets)
    }
}
