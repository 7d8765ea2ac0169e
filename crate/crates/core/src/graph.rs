//! Simple undirected graphs with canonical edge lists.
//!
//! Vertices are the contiguous 1-based labels `1..=n`; isolated vertices are
//! permitted. Edges are stored sorted and deduplicated, so structurally equal
//! graphs compare equal with `==` and every rendering of a graph is
//! deterministic.

use std::collections::HashSet;
use std::fmt;

use crate::error::{Error, Result};

/// Undirected edge with ordered endpoints (`u() < v()`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    u: u32,
    v: u32,
}

impl Edge {
    /// Builds an edge from two distinct positive endpoints, swapping them
    /// into order.
    pub fn new(a: u32, b: u32) -> Result<Self> {
        if a == 0 || b == 0 {
            return Err(Error::InvalidVertex(0));
        }
        if a == b {
            return Err(Error::SelfLoop(a));
        }
        Ok(Edge {
            u: a.min(b),
            v: a.max(b),
        })
    }

    /// Smaller endpoint.
    pub fn u(&self) -> u32 {
        self.u
    }

    /// Larger endpoint.
    pub fn v(&self) -> u32 {
        self.v
    }

    /// Both endpoints as `(u, v)` with `u < v`.
    pub fn endpoints(&self) -> (u32, u32) {
        (self.u, self.v)
    }

    /// Whether `w` is an endpoint.
    pub fn contains(&self, w: u32) -> bool {
        self.u == w || self.v == w
    }

    /// The shared endpoint, if the two edges share exactly one.
    pub fn common_vertex(&self, other: &Edge) -> Option<u32> {
        if self == other {
            return None;
        }
        if other.contains(self.u) {
            Some(self.u)
        } else if other.contains(self.v) {
            Some(self.v)
        } else {
            None
        }
    }

    /// The endpoint other than `w`, if `w` is an endpoint.
    pub fn other(&self, w: u32) -> Option<u32> {
        if w == self.u {
            Some(self.v)
        } else if w == self.v {
            Some(self.u)
        } else {
            None
        }
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},{}}}", self.u, self.v)
    }
}

/// Simple undirected graph on vertices `1..=n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: u32,
    edges: Vec<Edge>,
}

impl Graph {
    /// Builds a graph on `1..=n`, sorting and deduplicating the edges.
    ///
    /// Rebuilding a graph from its own parts is a no-op: the result of
    /// `Graph::new(g.n(), g.edges().to_vec())` equals `g`.
    pub fn new(n: u32, edges: impl IntoIterator<Item = Edge>) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut list: Vec<Edge> = edges.into_iter().collect();
        for e in &list {
            if e.v > n {
                return Err(Error::InvalidVertex(e.v));
            }
        }
        list.sort_unstable();
        list.dedup();
        Ok(Graph { n, edges: list })
    }

    /// Builds a graph from raw endpoint pairs.
    pub fn from_pairs(n: u32, pairs: &[(u32, u32)]) -> Result<Self> {
        let edges = pairs
            .iter()
            .map(|&(a, b)| Edge::new(a, b))
            .collect::<Result<Vec<_>>>()?;
        Self::new(n, edges)
    }

    /// Number of vertices.
    pub fn n(&self) -> u32 {
        self.n
    }

    /// Edges in canonical (lexicographic) order.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Number of edges.
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Whether `{a, b}` is an edge. Invalid endpoint pairs are simply absent.
    pub fn has_edge(&self, a: u32, b: u32) -> bool {
        match Edge::new(a, b) {
            Ok(e) => self.contains_edge(&e),
            Err(_) => false,
        }
    }

    /// Whether `e` is an edge.
    pub fn contains_edge(&self, e: &Edge) -> bool {
        self.edges.binary_search(e).is_ok()
    }

    /// Degree of vertex `v`.
    pub fn degree(&self, v: u32) -> Result<usize> {
        if v == 0 || v > self.n {
            return Err(Error::InvalidVertex(v));
        }
        Ok(self.edges.iter().filter(|e| e.contains(v)).count())
    }

    /// Sorted multiset of vertex degrees.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut degs = vec![0usize; self.n as usize + 1];
        for e in &self.edges {
            degs[e.u as usize] += 1;
            degs[e.v as usize] += 1;
        }
        degs.remove(0);
        degs.sort_unstable();
        degs
    }

    /// Sorted neighbor list of vertex `v`.
    pub fn neighbors(&self, v: u32) -> Result<Vec<u32>> {
        if v == 0 || v > self.n {
            return Err(Error::InvalidVertex(v));
        }
        let mut out: Vec<u32> = self.edges.iter().filter_map(|e| e.other(v)).collect();
        out.sort_unstable();
        Ok(out)
    }

    /// Edge indices incident to each vertex; entry 0 is unused.
    pub(crate) fn incidence(&self) -> Vec<Vec<usize>> {
        let mut inc = vec![Vec::new(); self.n as usize + 1];
        for (k, e) in self.edges.iter().enumerate() {
            inc[e.u as usize].push(k);
            inc[e.v as usize].push(k);
        }
        inc
    }

    /// Whether the member edges `e` and `f` share exactly one endpoint.
    pub fn adjacent_edges(&self, e: &Edge, f: &Edge) -> Result<bool> {
        if !self.contains_edge(e) {
            return Err(Error::UnknownEdge(e.u, e.v));
        }
        if !self.contains_edge(f) {
            return Err(Error::UnknownEdge(f.u, f.v));
        }
        Ok(e.common_vertex(f).is_some())
    }

    /// Whether the adjacent member edges `e = {i,j}` and `f = {j,k}` close a
    /// triangle, i.e. `{i,k}` is also an edge.
    pub fn spans_triangle(&self, e: &Edge, f: &Edge) -> Result<bool> {
        if !self.contains_edge(e) {
            return Err(Error::UnknownEdge(e.u, e.v));
        }
        if !self.contains_edge(f) {
            return Err(Error::UnknownEdge(f.u, f.v));
        }
        let shared = e
            .common_vertex(f)
            .ok_or(Error::NotAdjacent(e.u, e.v, f.u, f.v))?;
        let i = e.other(shared).expect("shared endpoint belongs to e");
        let k = f.other(shared).expect("shared endpoint belongs to f");
        Ok(self.has_edge(i, k))
    }

    /// Relabels the vertices through `perm`, re-canonicalizing the edge list.
    pub fn relabel(&self, perm: &VertexPermutation) -> Result<Graph> {
        if perm.n() != self.n {
            return Err(Error::InvalidParameter(format!(
                "permutation acts on 1..={}, graph has {} vertices",
                perm.n(),
                self.n
            )));
        }
        let edges = self
            .edges
            .iter()
            .map(|e| Edge::new(perm.image(e.u), perm.image(e.v)))
            .collect::<Result<Vec<_>>>()?;
        Graph::new(self.n, edges)
    }

    /// Whether some relabeling maps this graph onto `other`.
    ///
    /// Exhaustive backtracking search, pruned by vertex count, edge count,
    /// degree sequence, and per-vertex neighbor-degree multisets. Intended
    /// for the small graphs this crate works with.
    pub fn is_isomorphic(&self, other: &Graph) -> bool {
        self.find_isomorphism(other).is_some()
    }

    /// Finds a relabeling of this graph onto `other`, if one exists.
    pub fn find_isomorphism(&self, other: &Graph) -> Option<VertexPermutation> {
        if self.n != other.n || self.edges.len() != other.edges.len() {
            return None;
        }
        if self.degree_sequence() != other.degree_sequence() {
            return None;
        }
        let sig_a = signatures(self);
        let sig_b = signatures(other);
        {
            let mut sa = sig_a.clone();
            let mut sb = sig_b.clone();
            sa.sort_unstable();
            sb.sort_unstable();
            if sa != sb {
                return None;
            }
        }
        let n = self.n as usize;
        let adj_a = adjacency_set(self);
        let adj_b = adjacency_set(other);
        // Most-constrained vertices first: rare signatures, then high degree.
        let mut order: Vec<u32> = (1..=self.n).collect();
        let mut freq = std::collections::HashMap::new();
        for s in &sig_a {
            *freq.entry(s.clone()).or_insert(0usize) += 1;
        }
        order.sort_by_key(|&v| {
            let s = &sig_a[v as usize - 1];
            (freq[s], usize::MAX - s.0)
        });
        let mut image = vec![0u32; n + 1];
        let mut used = vec![false; n + 1];
        if map_next(
            0, &order, &sig_a, &sig_b, &adj_a, &adj_b, &mut image, &mut used,
        ) {
            Some(VertexPermutation {
                image: (1..=self.n).map(|v| image[v as usize]).collect(),
            })
        } else {
            None
        }
    }

    /// Renders the canonical edge-list document: a `"n m"` header line, then
    /// one `"u v"` line per edge in canonical order.
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{} {}\n", self.n, self.edges.len());
        for e in &self.edges {
            out.push_str(&format!("{} {}\n", e.u, e.v));
        }
        out
    }

    /// Parses the edge-list document format produced by [`Graph::to_edge_list`].
    ///
    /// Parsing and re-rendering an already canonical document reproduces it
    /// byte for byte.
    pub fn parse_edge_list(text: &str) -> Result<Graph> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let header = lines
            .next()
            .ok_or_else(|| Error::Parse("empty edge-list document".into()))?;
        let mut head = header.split_whitespace();
        let n: u32 = parse_u32(head.next(), "vertex count")?;
        let m: usize = parse_u32(head.next(), "edge count")? as usize;
        if head.next().is_some() {
            return Err(Error::Parse(format!(
                "expected header \"n m\", got {header:?}"
            )));
        }
        let mut pairs = Vec::with_capacity(m);
        for _ in 0..m {
            let line = lines
                .next()
                .ok_or_else(|| Error::Parse(format!("expected {m} edge lines")))?;
            let mut it = line.split_whitespace();
            let a = parse_u32(it.next(), "edge endpoint")?;
            let b = parse_u32(it.next(), "edge endpoint")?;
            if it.next().is_some() {
                return Err(Error::Parse(format!(
                    "expected edge line \"u v\", got {line:?}"
                )));
            }
            pairs.push((a, b));
        }
        if let Some(extra) = lines.next() {
            return Err(Error::Parse(format!("unexpected trailing line {extra:?}")));
        }
        Graph::from_pairs(n, &pairs)
    }
}

fn parse_u32(token: Option<&str>, what: &str) -> Result<u32> {
    let tok = token.ok_or_else(|| Error::Parse(format!("missing {what}")))?;
    tok.parse::<u32>()
        .map_err(|_| Error::Parse(format!("invalid {what} {tok:?}")))
}

/// Per-vertex pruning signature: degree plus the sorted degrees of the
/// neighbors.
fn signatures(g: &Graph) -> Vec<(usize, Vec<usize>)> {
    let mut degs = vec![0usize; g.n as usize + 1];
    for e in &g.edges {
        degs[e.u as usize] += 1;
        degs[e.v as usize] += 1;
    }
    let inc = g.incidence();
    (1..=g.n)
        .map(|v| {
            let mut nd: Vec<usize> = inc[v as usize]
                .iter()
                .map(|&k| degs[g.edges[k].other(v).expect("incident edge") as usize])
                .collect();
            nd.sort_unstable();
            (degs[v as usize], nd)
        })
        .collect()
}

fn adjacency_set(g: &Graph) -> HashSet<(u32, u32)> {
    g.edges.iter().map(|e| (e.u, e.v)).collect()
}

fn adjacent(adj: &HashSet<(u32, u32)>, a: u32, b: u32) -> bool {
    adj.contains(&(a.min(b), a.max(b)))
}

#[allow(clippy::too_many_arguments)]
fn map_next(
    idx: usize,
    order: &[u32],
    sig_a: &[(usize, Vec<usize>)],
    sig_b: &[(usize, Vec<usize>)],
    adj_a: &HashSet<(u32, u32)>,
    adj_b: &HashSet<(u32, u32)>,
    image: &mut [u32],
    used: &mut [bool],
) -> bool {
    if idx == order.len() {
        return true;
    }
    let v = order[idx];
    for w in 1..=order.len() as u32 {
        if used[w as usize] || sig_a[v as usize - 1] != sig_b[w as usize - 1] {
            continue;
        }
        let consistent = order[..idx]
            .iter()
            .all(|&p| adjacent(adj_a, v, p) == adjacent(adj_b, w, image[p as usize]));
        if !consistent {
            continue;
        }
        image[v as usize] = w;
        used[w as usize] = true;
        if map_next(idx + 1, order, sig_a, sig_b, adj_a, adj_b, image, used) {
            return true;
        }
        used[w as usize] = false;
        image[v as usize] = 0;
    }
    false
}

/// Bijective relabeling of `1..=n`; `image(v)` is the new label of `v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexPermutation {
    image: Vec<u32>,
}

impl VertexPermutation {
    /// Builds a permutation from the image list `image[v-1] = image of v`.
    pub fn new(image: Vec<u32>) -> Result<Self> {
        let n = image.len() as u32;
        let mut seen = vec![false; image.len() + 1];
        for &w in &image {
            if w == 0 || w > n || seen[w as usize] {
                return Err(Error::InvalidParameter(format!(
                    "image list is not a bijection of 1..={n}"
                )));
            }
            seen[w as usize] = true;
        }
        Ok(VertexPermutation { image })
    }

    /// Identity on `1..=n`.
    pub fn identity(n: u32) -> Self {
        VertexPermutation {
            image: (1..=n).collect(),
        }
    }

    /// Size of the permuted range.
    pub fn n(&self) -> u32 {
        self.image.len() as u32
    }

    /// Image of vertex `v`; `v` must lie in `1..=n`.
    pub fn image(&self, v: u32) -> u32 {
        self.image[v as usize - 1]
    }

    /// The image list.
    pub fn as_slice(&self) -> &[u32] {
        &self.image
    }
}
