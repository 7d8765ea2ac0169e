//! Deterministic labeled constructions of the graph and complex families
//! used throughout the crate.
//!
//! Every generator fixes an exact labeling, not just an isomorphism type, so
//! edge lists, Gallai-index sets, and documents are reproducible byte for
//! byte.

use crate::complex::{Face, SimplicialComplex};
use crate::error::{Error, Result};
use crate::graph::Graph;

fn param_err(msg: String) -> Error {
    Error::InvalidParameter(msg)
}

/// Path on vertices `1..=n` with edges `{i, i+1}`.
pub fn path(n: u32) -> Result<Graph> {
    let pairs: Vec<(u32, u32)> = (1..n).map(|i| (i, i + 1)).collect();
    Graph::from_pairs(n, &pairs)
}

/// Cycle on vertices `1..=n` (`n >= 3`) with edges `{i, i+1}` and `{1, n}`.
pub fn cycle(n: u32) -> Result<Graph> {
    if n < 3 {
        return Err(param_err(format!("cycle requires n >= 3, got {n}")));
    }
    let mut pairs: Vec<(u32, u32)> = (1..n).map(|i| (i, i + 1)).collect();
    pairs.push((1, n));
    Graph::from_pairs(n, &pairs)
}

/// Complete graph on vertices `1..=n`.
pub fn complete(n: u32) -> Result<Graph> {
    let mut pairs = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            pairs.push((i, j));
        }
    }
    Graph::from_pairs(n, &pairs)
}

/// Star with `n >= 1` edges: center `1`, leaves `2..=n+1`.
pub fn star(n: u32) -> Result<Graph> {
    if n == 0 {
        return Err(param_err("star requires n >= 1, got 0".into()));
    }
    let pairs: Vec<(u32, u32)> = (2..=n + 1).map(|l| (1, l)).collect();
    Graph::from_pairs(n + 1, &pairs)
}

/// Ladder on `2n` vertices (`n >= 1`): rails `1..=n` and `n+1..=2n`, rungs
/// `{i, n+i}`.
pub fn ladder(n: u32) -> Result<Graph> {
    if n == 0 {
        return Err(param_err("ladder requires n >= 1, got 0".into()));
    }
    let mut pairs = Vec::new();
    for i in 1..n {
        pairs.push((i, i + 1));
        pairs.push((n + i, n + i + 1));
    }
    for i in 1..=n {
        pairs.push((i, n + i));
    }
    Graph::from_pairs(2 * n, &pairs)
}

/// Triangular ladder on `2n` vertices (`n >= 1`): the path `{i, i+1}` for
/// `1 <= i <= 2n-1` plus the chords `{i, 2n-i}` and `{i, 2n+1-i}` for
/// `1 <= i <= n-1`, giving `4n - 3` edges.
pub fn triangular_ladder(n: u32) -> Result<Graph> {
    if n == 0 {
        return Err(param_err("triangular ladder requires n >= 1, got 0".into()));
    }
    let mut pairs: Vec<(u32, u32)> = (1..2 * n).map(|i| (i, i + 1)).collect();
    for i in 1..n {
        pairs.push((i, 2 * n - i));
        pairs.push((i, 2 * n + 1 - i));
    }
    Graph::from_pairs(2 * n, &pairs)
}

/// Prism over the triangle on `3n` vertices (`n >= 1`): triangles
/// `{3i+1, 3i+2, 3i+3}` for `0 <= i <= n-1` plus the rails `{j, j+3}` for
/// `1 <= j <= 3n-3`, giving `3(2n - 1)` edges.
pub fn prism(n: u32) -> Result<Graph> {
    if n == 0 {
        return Err(param_err("prism requires n >= 1, got 0".into()));
    }
    let mut pairs = Vec::new();
    for i in 0..n {
        let b = 3 * i;
        pairs.push((b + 1, b + 2));
        pairs.push((b + 2, b + 3));
        pairs.push((b + 1, b + 3));
    }
    for j in 1..=3 * n - 3 {
        pairs.push((j, j + 3));
    }
    Graph::from_pairs(3 * n, &pairs)
}

/// Double star with `4l` edges (`l >= 1`) on `3l + 2` vertices: two stars
/// with `2l` edges each whose centers `1` and `2` are not adjacent and which
/// share exactly `l` leaves.
///
/// Vertices `3..=l+2` are the shared leaves (adjacent to both centers),
/// `l+3..=2l+2` are private leaves of center `1`, and `2l+3..=3l+2` are
/// private leaves of center `2`.
pub fn double_star_even(l: u32) -> Result<Graph> {
    if l == 0 {
        return Err(param_err("double star requires l >= 1, got 0".into()));
    }
    let mut pairs = Vec::new();
    for s in 3..=l + 2 {
        pairs.push((1, s));
        pairs.push((2, s));
    }
    for p in l + 3..=2 * l + 2 {
        pairs.push((1, p));
    }
    for q in 2 * l + 3..=3 * l + 2 {
        pairs.push((2, q));
    }
    Graph::from_pairs(3 * l + 2, &pairs)
}

/// Double star with `4l + 1` edges (`l >= 1`) on `3l + 3` vertices: the
/// even double star plus one extra private leaf `3l + 3` on center `2`.
pub fn double_star_odd(l: u32) -> Result<Graph> {
    let even = double_star_even(l)?;
    let n = 3 * l + 3;
    let mut pairs: Vec<(u32, u32)> = even.edges().iter().map(|e| e.endpoints()).collect();
    pairs.push((2, n));
    Graph::from_pairs(n, &pairs)
}

/// Two complete graphs joined by a perfect matching on `l` vertex pairs
/// (`l >= 1`): a clique on `1..=2l`, a clique on `2l+1..=4l` (or on
/// `2l+1..=4l+1` when `odd` is set), and the matching edges `{i, 2l+i}` for
/// `1 <= i <= l`.
pub fn joined_complete(l: u32, odd: bool) -> Result<Graph> {
    if l == 0 {
        return Err(param_err("joined complete requires l >= 1, got 0".into()));
    }
    let a = 2 * l;
    let b = if odd { 2 * l + 1 } else { 2 * l };
    let n = a + b;
    let mut pairs = Vec::new();
    for i in 1..=a {
        for j in i + 1..=a {
            pairs.push((i, j));
        }
    }
    for i in a + 1..=n {
        for j in i + 1..=n {
            pairs.push((i, j));
        }
    }
    for i in 1..=l {
        pairs.push((i, a + i));
    }
    Graph::from_pairs(n, &pairs)
}

/// Full `n`-simplex: the single facet `{1..=n+1}`.
pub fn simplex_complex(n: u32) -> Result<SimplicialComplex> {
    let facet = Face::new((1..=n + 1).collect())?;
    SimplicialComplex::from_facets(vec![facet])
}

/// Boundary of the `n`-simplex (`n >= 1`): all `n`-element subsets of
/// `{1..=n+1}`.
pub fn boundary_complex(n: u32) -> Result<SimplicialComplex> {
    if n == 0 {
        return Err(param_err("boundary complex requires n >= 1, got 0".into()));
    }
    let all: Vec<u32> = (1..=n + 1).collect();
    let facets: Vec<Face> = (1..=n + 1)
        .map(|drop| Face::new(all.iter().copied().filter(|&v| v != drop).collect()))
        .collect::<Result<Vec<_>>>()?;
    SimplicialComplex::from_facets(facets)
}
