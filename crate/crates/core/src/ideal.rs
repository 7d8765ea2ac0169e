//! Squarefree monomial ideals and the f-ideal checks.
//!
//! An ideal is stored as its minimal generating supports over the variables
//! `1..=nvars`. Two complexes are attached to it in opposite ways:
//!
//! * the **facet complex** has the generator supports as facets, so its
//!   ground set is the union of the supports;
//! * the **non-face complex** has as faces exactly the subsets of
//!   `1..=nvars` that contain no generator support, so every variable
//!   participates.
//!
//! The asymmetry is deliberate and preserved exactly: the two complexes may
//! differ in ground set and dimension, and the f-ideal test compares their
//! f-vectors without any padding.

use std::collections::HashSet;
use std::fmt;

use crate::complex::{FVector, Face, SimplicialComplex};
use crate::enumerate;
use crate::error::{Error, Result};
use crate::gallai::gallai;
use crate::graph::Graph;

/// Largest variable count accepted by the exhaustive non-face enumeration.
pub const MAX_EXHAUSTIVE_VARS: u32 = 22;

/// Squarefree monomial ideal: minimal generator supports over `1..=nvars`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialIdeal {
    nvars: u32,
    gens: Vec<Face>,
}

impl MonomialIdeal {
    /// Builds an ideal from generator supports, deduplicating and dropping
    /// supports that contain another (only minimal generators are kept).
    pub fn new(nvars: u32, supports: Vec<Vec<u32>>) -> Result<Self> {
        for s in &supports {
            if s.is_empty() {
                return Err(Error::UnitIdeal);
            }
            for &v in s {
                if v == 0 || v > nvars {
                    return Err(Error::InvalidVariable { variable: v, nvars });
                }
            }
        }
        let mut gens = supports
            .into_iter()
            .map(Face::new)
            .collect::<Result<Vec<_>>>()?;
        gens.sort_unstable();
        gens.dedup();
        let minimal: Vec<Face> = gens
            .iter()
            .filter(|f| !gens.iter().any(|g| g.len() < f.len() && g.is_subset_of(f)))
            .cloned()
            .collect();
        Ok(MonomialIdeal {
            nvars,
            gens: minimal,
        })
    }

    /// Number of variables.
    pub fn nvars(&self) -> u32 {
        self.nvars
    }

    /// Minimal generator supports in canonical order.
    pub fn gens(&self) -> &[Face] {
        &self.gens
    }

    /// Renders the ideal document: a `"nvars q"` header line, then one
    /// sorted variable list per generator in canonical order.
    pub fn to_document(&self) -> String {
        let mut out = format!("{} {}\n", self.nvars, self.gens.len());
        for g in &self.gens {
            out.push_str(&format!("{g}\n"));
        }
        out
    }

    /// Parses the ideal document format produced by [`MonomialIdeal::to_document`].
    pub fn parse_document(text: &str) -> Result<Self> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let header = lines
            .next()
            .ok_or_else(|| Error::Parse("empty ideal document".into()))?;
        let mut head = header.split_whitespace();
        let nvars: u32 = head
            .next()
            .ok_or_else(|| Error::Parse("missing variable count".into()))?
            .parse()
            .map_err(|_| Error::Parse("invalid variable count".into()))?;
        let q: usize = head
            .next()
            .ok_or_else(|| Error::Parse("missing generator count".into()))?
            .parse()
            .map_err(|_| Error::Parse("invalid generator count".into()))?;
        if head.next().is_some() {
            return Err(Error::Parse(format!(
                "expected header \"nvars q\", got {header:?}"
            )));
        }
        let mut supports = Vec::with_capacity(q);
        for _ in 0..q {
            let line = lines
                .next()
                .ok_or_else(|| Error::Parse(format!("expected {q} generator lines")))?;
            let vs = line
                .split_whitespace()
                .map(|t| {
                    t.parse::<u32>()
                        .map_err(|_| Error::Parse(format!("invalid variable {t:?}")))
                })
                .collect::<Result<Vec<u32>>>()?;
            supports.push(vs);
        }
        if let Some(extra) = lines.next() {
            return Err(Error::Parse(format!("unexpected trailing line {extra:?}")));
        }
        MonomialIdeal::new(nvars, supports)
    }

    /// Generator supports as bitmasks over bits `0..nvars`.
    fn gen_masks(&self) -> Vec<u32> {
        self.gens
            .iter()
            .map(|f| f.vertices().iter().fold(0u32, |m, &v| m | 1 << (v - 1)))
            .collect()
    }

    fn check_exhaustive_limit(&self) -> Result<()> {
        if self.nvars > MAX_EXHAUSTIVE_VARS {
            return Err(Error::TooLarge(format!(
                "non-face enumeration over {} variables exceeds the limit of {MAX_EXHAUSTIVE_VARS}",
                self.nvars
            )));
        }
        Ok(())
    }
}

/// Edge ideal of a graph: one degree-two generator per edge, over
/// `nvars = n(g)` variables.
pub fn edge_ideal(g: &Graph) -> Result<MonomialIdeal> {
    if g.edge_count() == 0 {
        return Err(Error::NoEdges);
    }
    let supports = g.edges().iter().map(|e| vec![e.u(), e.v()]).collect();
    MonomialIdeal::new(g.n(), supports)
}

/// Facet complex of an ideal: the generator supports as facets, over their
/// union as ground set.
pub fn facet_complex(i: &MonomialIdeal) -> Result<SimplicialComplex> {
    SimplicialComplex::from_facets(i.gens().to_vec())
}

/// Non-face complex of an ideal: the complex whose faces are exactly the
/// subsets of `1..=nvars` containing no generator support.
///
/// Exhaustive over the subset lattice, with subsets containing a generator
/// pruned together with their extensions; limited to
/// [`MAX_EXHAUSTIVE_VARS`] variables.
pub fn nonface_complex(i: &MonomialIdeal) -> Result<SimplicialComplex> {
    i.check_exhaustive_limit()?;
    let masks = enumerate::nonface_masks(i.nvars(), &i.gen_masks());
    if masks.is_empty() {
        return Err(Error::EmptyComplex);
    }
    let face_set: HashSet<u32> = masks.iter().copied().collect();
    let facets: Vec<Face> = masks
        .iter()
        .filter(|&&m| {
            (1..=i.nvars())
                .all(|w| m >> (w - 1) & 1 == 1 || !face_set.contains(&(m | 1 << (w - 1))))
        })
        .map(|&m| mask_to_face(m))
        .collect();
    SimplicialComplex::from_facets(facets)
}

/// F-vector of the non-face complex without materializing the complex; the
/// empty f-vector reports a void complex with no faces at all.
pub(crate) fn nonface_f_vector(i: &MonomialIdeal) -> Result<FVector> {
    i.check_exhaustive_limit()?;
    let masks = enumerate::nonface_masks(i.nvars(), &i.gen_masks());
    let mut counts = vec![0u64; i.nvars() as usize];
    let mut top = 0usize;
    for m in masks {
        let dim = m.count_ones() as usize - 1;
        counts[dim] += 1;
        top = top.max(dim + 1);
    }
    counts.truncate(top);
    Ok(FVector::new(counts))
}

fn mask_to_face(mask: u32) -> Face {
    let vs: Vec<u32> = (0..32)
        .filter(|b| mask >> b & 1 == 1)
        .map(|b| b + 1)
        .collect();
    Face::new(vs).expect("nonempty mask")
}

/// Outcome of the f-ideal test: the verdict and both f-vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FIdealReport {
    pub is_f_ideal: bool,
    pub facet_fvec: FVector,
    pub nonface_fvec: FVector,
}

impl fmt::Display for FIdealReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "facet    f = {}", self.facet_fvec)?;
        writeln!(f, "nonface  f = {}", self.nonface_fvec)?;
        write!(f, "f-ideal: {}", self.is_f_ideal)
    }
}

/// Whether the facet complex and the non-face complex of `i` have identical
/// f-vectors (equal dimension included; no padding).
pub fn is_f_ideal(i: &MonomialIdeal) -> Result<FIdealReport> {
    let facet_fvec = facet_complex(i)?.f_vector()?;
    let nonface_fvec = nonface_f_vector(i)?;
    Ok(FIdealReport {
        is_f_ideal: facet_fvec == nonface_fvec,
        facet_fvec,
        nonface_fvec,
    })
}

/// Whether the edge ideal of `g` is an f-ideal.
pub fn is_f_graph(g: &Graph) -> Result<bool> {
    Ok(is_f_ideal(&edge_ideal(g)?)?.is_f_ideal)
}

/// Whether the Gallai graph of `g` is an f-graph. Fails with
/// [`Error::GallaiEdgeless`] when the Gallai graph has no edges.
pub fn is_f_gallai(g: &Graph) -> Result<bool> {
    let gg = gallai(g)?;
    if gg.edge_count() == 0 {
        return Err(Error::GallaiEdgeless);
    }
    is_f_graph(&gg)
}

/// Ideal generated by the facets of a complex, over `1..=max(ground)`.
/// Inverse of [`facet_complex`] on its image.
pub fn facet_ideal(c: &SimplicialComplex) -> MonomialIdeal {
    let nvars = *c
        .ground()
        .last()
        .expect("complex has a nonempty ground set");
    MonomialIdeal {
        nvars,
        gens: c.facets().to_vec(),
    }
}

/// Ideal generated by the minimal non-faces of a complex, over
/// `1..=max(ground)`. Inverse of [`nonface_complex`] on its image.
pub fn nonface_ideal(c: &SimplicialComplex) -> Result<MonomialIdeal> {
    let nvars = *c
        .ground()
        .last()
        .expect("complex has a nonempty ground set");
    if nvars > MAX_EXHAUSTIVE_VARS {
        return Err(Error::TooLarge(format!(
            "minimal non-face search over {nvars} variables exceeds the limit of {MAX_EXHAUSTIVE_VARS}"
        )));
    }
    let mut supports: Vec<Vec<u32>> = (1..=nvars)
        .filter(|v| c.ground().binary_search(v).is_err())
        .map(|v| vec![v])
        .collect();
    // Larger minimal non-faces lie inside the ground set and arise as a face
    // extended past its maximum by one ground vertex, with all other
    // one-vertex deletions still faces.
    let by_dim = c.enumerate_faces()?;
    for face in by_dim.iter().flatten() {
        let max = *face.vertices().last().expect("face is nonempty");
        for &v in c.ground().iter().filter(|&&v| v > max) {
            let mut vs = face.vertices().to_vec();
            vs.push(v);
            let candidate = Face::new(vs)?;
            if c.contains_face(&candidate) {
                continue;
            }
            let minimal = candidate.vertices().iter().all(|&x| {
                let rest: Vec<u32> = candidate
                    .vertices()
                    .iter()
                    .copied()
                    .filter(|&y| y != x)
                    .collect();
                rest.is_empty() || c.contains_face(&Face::from_sorted_unchecked(rest))
            });
            if minimal {
                supports.push(candidate.vertices().to_vec());
            }
        }
    }
    MonomialIdeal::new(nvars, supports)
}
