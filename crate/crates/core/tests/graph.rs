//! Graph construction, edge predicates, isomorphism, and the edge-list
//! document format.

use gallai_core::generators::{complete, cycle, path, star};
use gallai_core::{Edge, Error, Graph, VertexPermutation};

fn g(n: u32, pairs: &[(u32, u32)]) -> Graph {
    Graph::from_pairs(n, pairs).unwrap()
}

fn e(a: u32, b: u32) -> Edge {
    Edge::new(a, b).unwrap()
}

#[test]
fn edges_canonicalize_endpoints() {
    assert_eq!(e(5, 2), e(2, 5));
    assert_eq!(e(5, 2).endpoints(), (2, 5));
    assert_eq!(e(2, 5).to_string(), "{2,5}");
}

#[test]
fn edge_rejects_self_loops_and_zero() {
    assert_eq!(Edge::new(3, 3), Err(Error::SelfLoop(3)));
    assert_eq!(Edge::new(0, 1), Err(Error::InvalidVertex(0)));
}

#[test]
fn construction_sorts_and_deduplicates() {
    let a = g(4, &[(3, 4), (1, 2), (2, 1), (4, 3), (2, 3)]);
    let b = g(4, &[(1, 2), (2, 3), (3, 4)]);
    assert_eq!(a, b);
    assert_eq!(a.edge_count(), 3);
}

#[test]
fn construction_is_idempotent() {
    let a = g(5, &[(1, 5), (2, 4), (1, 3)]);
    let again = Graph::new(a.n(), a.edges().to_vec()).unwrap();
    assert_eq!(a, again);
}

#[test]
fn construction_rejects_bad_input() {
    assert_eq!(Graph::from_pairs(0, &[]), Err(Error::EmptyGraph));
    assert_eq!(
        Graph::from_pairs(3, &[(1, 4)]),
        Err(Error::InvalidVertex(4))
    );
    assert_eq!(Graph::from_pairs(3, &[(2, 2)]), Err(Error::SelfLoop(2)));
}

#[test]
fn isolated_vertices_are_allowed() {
    let a = g(6, &[(1, 2)]);
    assert_eq!(a.n(), 6);
    assert_eq!(a.degree(5).unwrap(), 0);
    assert_eq!(a.degree_sequence(), vec![0, 0, 0, 0, 1, 1]);
    assert_eq!(a.degree(7), Err(Error::InvalidVertex(7)));
}

#[test]
fn adjacency_of_edges() {
    let p = path(4).unwrap();
    assert!(p.adjacent_edges(&e(1, 2), &e(2, 3)).unwrap());
    assert!(!p.adjacent_edges(&e(1, 2), &e(3, 4)).unwrap());
    assert!(!p.adjacent_edges(&e(1, 2), &e(1, 2)).unwrap());
    assert_eq!(
        p.adjacent_edges(&e(1, 3), &e(1, 2)),
        Err(Error::UnknownEdge(1, 3))
    );
}

#[test]
fn triangle_spanning() {
    let k3 = complete(3).unwrap();
    assert!(k3.spans_triangle(&e(1, 2), &e(2, 3)).unwrap());
    let p = path(4).unwrap();
    assert!(!p.spans_triangle(&e(1, 2), &e(2, 3)).unwrap());
    assert_eq!(
        p.spans_triangle(&e(1, 2), &e(3, 4)),
        Err(Error::NotAdjacent(1, 2, 3, 4))
    );
    assert_eq!(
        p.spans_triangle(&e(1, 2), &e(2, 4)),
        Err(Error::UnknownEdge(2, 4))
    );
}

#[test]
fn spanning_implies_adjacent() {
    // Whenever spans_triangle succeeds, the pair is adjacent.
    let graphs = [complete(5).unwrap(), cycle(6).unwrap(), star(4).unwrap()];
    for graph in &graphs {
        for a in graph.edges() {
            for b in graph.edges() {
                if graph.spans_triangle(a, b).is_ok() {
                    assert!(graph.adjacent_edges(a, b).unwrap());
                }
            }
        }
    }
}

#[test]
fn permutations_validate_bijections() {
    assert!(VertexPermutation::new(vec![2, 3, 1]).is_ok());
    assert!(matches!(
        VertexPermutation::new(vec![2, 2, 1]),
        Err(Error::InvalidParameter(_))
    ));
    assert!(matches!(
        VertexPermutation::new(vec![0, 1, 2]),
        Err(Error::InvalidParameter(_))
    ));
    assert!(matches!(
        VertexPermutation::new(vec![1, 2, 4]),
        Err(Error::InvalidParameter(_))
    ));
}

#[test]
fn relabel_applies_permutation() {
    let p = path(3).unwrap();
    let perm = VertexPermutation::new(vec![3, 1, 2]).unwrap();
    let relabeled = p.relabel(&perm).unwrap();
    assert_eq!(relabeled, g(3, &[(1, 3), (1, 2)]));
    let wrong = VertexPermutation::identity(4);
    assert!(matches!(p.relabel(&wrong), Err(Error::InvalidParameter(_))));
}

#[test]
fn isomorphism_accepts_relabelings() {
    let a = g(6, &[(1, 2), (2, 3), (3, 1), (3, 4), (4, 5), (5, 6)]);
    let perm = VertexPermutation::new(vec![4, 2, 6, 1, 3, 5]).unwrap();
    let b = a.relabel(&perm).unwrap();
    assert!(a.is_isomorphic(&b));
    let found = a.find_isomorphism(&b).unwrap();
    assert_eq!(a.relabel(&found).unwrap(), b);
}

#[test]
fn isomorphism_is_reflexive_and_symmetric() {
    let c6 = cycle(6).unwrap();
    assert!(c6.is_isomorphic(&c6));
    let a = g(4, &[(1, 2), (2, 3), (3, 4), (4, 1)]);
    let b = g(4, &[(1, 3), (3, 2), (2, 4), (4, 1)]);
    assert!(a.is_isomorphic(&b));
    assert!(b.is_isomorphic(&a));
}

#[test]
fn isomorphism_rejects_different_structures() {
    // Same vertex and edge counts, same degree sequence: one six-cycle
    // versus two triangles.
    let c6 = cycle(6).unwrap();
    let two_triangles = g(6, &[(1, 2), (2, 3), (3, 1), (4, 5), (5, 6), (6, 4)]);
    assert_eq!(c6.degree_sequence(), two_triangles.degree_sequence());
    assert!(!c6.is_isomorphic(&two_triangles));

    assert!(!path(3).unwrap().is_isomorphic(&complete(3).unwrap()));
    assert!(!path(3).unwrap().is_isomorphic(&path(4).unwrap()));
}

#[test]
fn isomorphism_beyond_degree_pruning() {
    // Both trees share the degree sequence but differ in the neighbor-degree
    // multiset of their largest-degree vertex.
    let a = g(8, &[(1, 2), (2, 3), (3, 4), (4, 5), (2, 6), (4, 7), (4, 8)]);
    let b = g(8, &[(1, 2), (2, 3), (3, 4), (4, 5), (2, 6), (3, 7), (3, 8)]);
    assert_eq!(a.degree_sequence(), b.degree_sequence());
    assert!(!a.is_isomorphic(&b));

    // Every vertex here has degree 2 with neighbor degrees (2, 2), so only
    // the backtracking search itself can tell the graphs apart.
    let c8 = cycle(8).unwrap();
    let c5_c3 = g(
        8,
        &[
            (1, 2),
            (2, 3),
            (3, 4),
            (4, 5),
            (5, 1),
            (6, 7),
            (7, 8),
            (8, 6),
        ],
    );
    assert_eq!(c8.degree_sequence(), c5_c3.degree_sequence());
    assert!(!c8.is_isomorphic(&c5_c3));
}

#[test]
fn edge_list_round_trip_is_bit_exact() {
    let a = g(6, &[(5, 6), (1, 2), (1, 6), (2, 4)]);
    let doc = a.to_edge_list();
    assert_eq!(doc, "6 4\n1 2\n1 6\n2 4\n5 6\n");
    let parsed = Graph::parse_edge_list(&doc).unwrap();
    assert_eq!(parsed, a);
    assert_eq!(parsed.to_edge_list(), doc);
}

#[test]
fn edge_list_parse_canonicalizes() {
    let parsed = Graph::parse_edge_list("4 3\n4 3\n2 1\n1 3\n").unwrap();
    assert_eq!(parsed.to_edge_list(), "4 3\n1 2\n1 3\n3 4\n");
}

#[test]
fn edge_list_parse_rejects_malformed_documents() {
    for bad in [
        "",
        "3",
        "3 1 7\n1 2\n",
        "3 2\n1 2\n",
        "3 1\n1 2\n2 3\n",
        "3 1\n1 2 3\n",
        "3 1\nx y\n",
        "x 1\n1 2\n",
    ] {
        assert!(
            matches!(Graph::parse_edge_list(bad), Err(Error::Parse(_))),
            "accepted {bad:?}"
        );
    }
    // Structural errors keep their own cases.
    assert_eq!(
        Graph::parse_edge_list("3 1\n1 1\n"),
        Err(Error::SelfLoop(1))
    );
    assert_eq!(
        Graph::parse_edge_list("3 1\n1 9\n"),
        Err(Error::InvalidVertex(9))
    );
}
