//! Low-level enumeration kernels, each in a sequential and a parallel form.
//!
//! The parallel forms exist only with the `parallel` feature and merge their
//! per-branch results deterministically (set unions or ordered
//! concatenation), so for every kernel the two forms return identical
//! values. The crate-internal dispatchers pick the parallel form for inputs
//! large enough to amortize the fan-out and fall back to the sequential one
//! otherwise.

use std::collections::BTreeSet;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

use crate::complex::Face;
use crate::graph::Graph;

/// All nonempty subsets of the given facets, deduplicated.
pub fn facet_faces_seq(facets: &[Face]) -> BTreeSet<Face> {
    let mut out = BTreeSet::new();
    for f in facets {
        insert_subsets(f, &mut out);
    }
    out
}

/// Parallel form of [`facet_faces_seq`]; identical result.
#[cfg(feature = "parallel")]
pub fn facet_faces_par(facets: &[Face]) -> BTreeSet<Face> {
    facets
        .par_iter()
        .map(|f| {
            let mut set = BTreeSet::new();
            insert_subsets(f, &mut set);
            set
        })
        .reduce(BTreeSet::new, |mut a, mut b| {
            if a.len() < b.len() {
                std::mem::swap(&mut a, &mut b);
            }
            a.extend(b);
            a
        })
}

pub(crate) fn facet_faces(facets: &[Face]) -> BTreeSet<Face> {
    #[cfg(feature = "parallel")]
    if facets.len() >= 32 {
        return facet_faces_par(facets);
    }
    facet_faces_seq(facets)
}

fn insert_subsets(facet: &Face, out: &mut BTreeSet<Face>) {
    let vs = facet.vertices();
    debug_assert!(vs.len() < 64, "facet too large for subset masks");
    for mask in 1u64..(1u64 << vs.len()) {
        let picked: Vec<u32> = vs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &v)| v)
            .collect();
        out.insert(Face::from_sorted_unchecked(picked));
    }
}

/// All subsets of `1..=nvars` (as bitmasks over bits `0..nvars`) that contain
/// no generator mask, in a fixed depth-first order.
///
/// Subsets are grown in increasing vertex order; a subset containing a
/// generator is pruned together with its whole extension subtree. `nvars`
/// must be at most 32.
pub fn nonface_masks_seq(nvars: u32, gens: &[u32]) -> Vec<u32> {
    let by_max = gens_by_max(nvars, gens);
    let mut out = Vec::new();
    for v in 1..=nvars {
        branch(v, nvars, &by_max, &mut out);
    }
    out
}

/// Parallel form of [`nonface_masks_seq`]; identical result.
#[cfg(feature = "parallel")]
pub fn nonface_masks_par(nvars: u32, gens: &[u32]) -> Vec<u32> {
    let by_max = gens_by_max(nvars, gens);
    let branches: Vec<Vec<u32>> = (1..=nvars)
        .into_par_iter()
        .map(|v| {
            let mut out = Vec::new();
            branch(v, nvars, &by_max, &mut out);
            out
        })
        .collect();
    branches.concat()
}

pub(crate) fn nonface_masks(nvars: u32, gens: &[u32]) -> Vec<u32> {
    #[cfg(feature = "parallel")]
    if nvars >= 16 {
        return nonface_masks_par(nvars, gens);
    }
    nonface_masks_seq(nvars, gens)
}

/// Generator masks grouped by their highest vertex; entry 0 is unused.
fn gens_by_max(nvars: u32, gens: &[u32]) -> Vec<Vec<u32>> {
    assert!(
        nvars <= 32,
        "mask enumeration supports at most 32 variables"
    );
    let mut by_max = vec![Vec::new(); nvars as usize + 1];
    for &g in gens {
        debug_assert!(g != 0, "unit generator");
        let max = 32 - g.leading_zeros();
        by_max[max as usize].push(g);
    }
    by_max
}

/// Emits, in depth-first order, every admissible subset whose minimum is `v`.
fn branch(v: u32, nvars: u32, by_max: &[Vec<u32>], out: &mut Vec<u32>) {
    let mask = 1u32 << (v - 1);
    if by_max[v as usize].iter().any(|&g| g & !mask == 0) {
        return;
    }
    out.push(mask);
    extend(mask, v, nvars, by_max, out);
}

fn extend(mask: u32, last: u32, nvars: u32, by_max: &[Vec<u32>], out: &mut Vec<u32>) {
    for u in last + 1..=nvars {
        let next = mask | 1u32 << (u - 1);
        if by_max[u as usize].iter().any(|&g| g & !next == 0) {
            continue;
        }
        out.push(next);
        extend(next, u, nvars, by_max, out);
    }
}

/// Pairs of edge indices that are adjacent in the Gallai graph: the edges
/// share exactly one endpoint and their outer endpoints are not themselves
/// joined by an edge. Pairs are emitted as `(a, b)` with `a < b` in a fixed
/// order (grouped by shared vertex).
pub fn gallai_pairs_seq(g: &Graph) -> Vec<(usize, usize)> {
    let inc = g.incidence();
    let mut out = Vec::new();
    for v in 1..=g.n() {
        vertex_pairs(g, v, &inc[v as usize], &mut out);
    }
    out
}

/// Parallel form of [`gallai_pairs_seq`]; identical result.
#[cfg(feature = "parallel")]
pub fn gallai_pairs_par(g: &Graph) -> Vec<(usize, usize)> {
    let inc = g.incidence();
    let branches: Vec<Vec<(usize, usize)>> = (1..=g.n())
        .into_par_iter()
        .map(|v| {
            let mut out = Vec::new();
            vertex_pairs(g, v, &inc[v as usize], &mut out);
            out
        })
        .collect();
    branches.concat()
}

pub(crate) fn gallai_pairs(g: &Graph) -> Vec<(usize, usize)> {
    #[cfg(feature = "parallel")]
    if g.n() >= 256 {
        return gallai_pairs_par(g);
    }
    gallai_pairs_seq(g)
}

fn vertex_pairs(g: &Graph, v: u32, incident: &[usize], out: &mut Vec<(usize, usize)>) {
    let edges = g.edges();
    for (i, &a) in incident.iter().enumerate() {
        let ea = edges[a];
        let outer_a = ea.other(v).expect("incident edge");
        for &b in &incident[i + 1..] {
            let eb = edges[b];
            let outer_b = eb.other(v).expect("incident edge");
            if !g.has_edge(outer_a, outer_b) {
                out.push((a, b));
            }
        }
    }
}
