//! Simplicial complexes: maximality filtering, face enumeration, f-vectors,
//! Euler characteristics, and the facet document format.

use gallai_core::generators::{boundary_complex, simplex_complex};
use gallai_core::{Error, FVector, Face, SimplicialComplex};

fn face(vs: &[u32]) -> Face {
    Face::new(vs.to_vec()).unwrap()
}

fn complex(facets: &[&[u32]]) -> SimplicialComplex {
    SimplicialComplex::from_facets(facets.iter().map(|f| face(f)).collect()).unwrap()
}

/// Counts faces of every dimension by scanning all subsets of the ground set.
fn brute_f_vector(c: &SimplicialComplex) -> FVector {
    let ground = c.ground();
    assert!(
        ground.len() <= 20,
        "brute-force oracle limited to 20 vertices"
    );
    let mut counts = vec![0u64; c.dimension() + 1];
    for mask in 1u32..(1 << ground.len()) {
        let subset: Vec<u32> = ground
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &v)| v)
            .collect();
        let f = Face::new(subset).unwrap();
        if c.contains_face(&f) {
            counts[f.dimension()] += 1;
        }
    }
    FVector::new(counts)
}

#[test]
fn faces_sort_and_deduplicate() {
    let f = face(&[3, 1, 2, 3]);
    assert_eq!(f.vertices(), &[1, 2, 3]);
    assert_eq!(f.dimension(), 2);
    assert_eq!(f.to_string(), "1 2 3");
}

#[test]
fn faces_reject_empty_and_zero() {
    assert_eq!(Face::new(vec![]), Err(Error::EmptyFace));
    assert_eq!(Face::new(vec![0, 1]), Err(Error::InvalidVertex(0)));
}

#[test]
fn face_subset_relation() {
    assert!(face(&[1, 3]).is_subset_of(&face(&[1, 2, 3])));
    assert!(!face(&[1, 4]).is_subset_of(&face(&[1, 2, 3])));
    assert!(face(&[2]).contains(2));
    assert!(!face(&[2]).contains(3));
}

#[test]
fn construction_keeps_only_maximal_faces() {
    let c = SimplicialComplex::from_facets(vec![
        face(&[1, 2]),
        face(&[1, 2, 3]),
        face(&[2, 3]),
        face(&[1, 2, 3]),
        face(&[4]),
    ])
    .unwrap();
    assert_eq!(c.facets(), &[face(&[1, 2, 3]), face(&[4])]);
    assert_eq!(c.ground(), &[1, 2, 3, 4]);
}

#[test]
fn construction_rejects_empty_input() {
    assert_eq!(
        SimplicialComplex::from_facets(vec![]),
        Err(Error::EmptyComplex)
    );
}

#[test]
fn five_facet_example() {
    // Mixed-dimension complex generated by one pair and four triples.
    let c = complex(&[&[2, 4], &[1, 2, 3], &[1, 3, 4], &[1, 2, 5], &[1, 4, 5]]);
    assert_eq!(c.facet_count(), 5);
    assert_eq!(c.ground(), &[1, 2, 3, 4, 5]);
    assert_eq!(c.dimension(), 2);
    assert!(!c.is_pure());
    let fv = c.f_vector().unwrap();
    assert_eq!(fv, FVector::new(vec![5, 9, 4]));
    assert_eq!(fv, brute_f_vector(&c));
    assert_eq!(c.euler_characteristic().unwrap(), 0);
}

#[test]
fn face_enumeration_groups_by_dimension() {
    let c = complex(&[&[1, 2, 3], &[2, 4]]);
    let by_dim = c.enumerate_faces().unwrap();
    assert_eq!(by_dim.len(), 3);
    assert_eq!(
        by_dim[0],
        vec![face(&[1]), face(&[2]), face(&[3]), face(&[4])]
    );
    assert_eq!(
        by_dim[1],
        vec![face(&[1, 2]), face(&[1, 3]), face(&[2, 3]), face(&[2, 4])]
    );
    assert_eq!(by_dim[2], vec![face(&[1, 2, 3])]);
}

#[test]
fn membership_test() {
    let c = complex(&[&[1, 2, 3]]);
    assert!(c.contains_face(&face(&[1, 3])));
    assert!(!c.contains_face(&face(&[1, 4])));
}

#[test]
fn simplex_complexes() {
    let s = simplex_complex(3).unwrap();
    assert_eq!(s.facets(), &[face(&[1, 2, 3, 4])]);
    assert_eq!(s.dimension(), 3);
    assert!(s.is_pure());
    // Binomial coefficients C(4, k+1).
    assert_eq!(s.f_vector().unwrap(), FVector::new(vec![4, 6, 4, 1]));
    assert_eq!(s.euler_characteristic().unwrap(), 1);

    let point = simplex_complex(0).unwrap();
    assert_eq!(point.f_vector().unwrap(), FVector::new(vec![1]));
    assert_eq!(point.euler_characteristic().unwrap(), 1);
}

#[test]
fn boundary_complexes() {
    let b = boundary_complex(2).unwrap();
    assert_eq!(b.facets(), &[face(&[1, 2]), face(&[1, 3]), face(&[2, 3])]);
    assert_eq!(b.f_vector().unwrap(), FVector::new(vec![3, 3]));
    assert_eq!(b.euler_characteristic().unwrap(), 0);

    let sphere = boundary_complex(3).unwrap();
    assert_eq!(sphere.f_vector().unwrap(), FVector::new(vec![4, 6, 4]));
    assert_eq!(sphere.euler_characteristic().unwrap(), 2);

    assert!(matches!(
        boundary_complex(0),
        Err(Error::InvalidParameter(_))
    ));
}

#[test]
fn euler_characteristic_alternates_over_dimensions() {
    for n in 0..=8 {
        assert_eq!(
            simplex_complex(n).unwrap().euler_characteristic().unwrap(),
            1,
            "simplex n={n}"
        );
    }
    for n in 1..=8u32 {
        let expect = 1 + if n % 2 == 0 { -1 } else { 1 };
        assert_eq!(
            boundary_complex(n).unwrap().euler_characteristic().unwrap(),
            expect as i64,
            "boundary n={n}"
        );
    }
}

#[test]
fn enumeration_rejects_oversized_complexes() {
    let big = simplex_complex(30).unwrap();
    assert!(matches!(big.f_vector(), Err(Error::TooLarge(_))));
    assert!(matches!(big.enumerate_faces(), Err(Error::TooLarge(_))));
    // Facet construction itself stays cheap.
    assert_eq!(big.dimension(), 30);
}

#[test]
fn f_vector_entries_start_with_ground_size() {
    let c = complex(&[&[1, 2, 3], &[3, 4], &[6]]);
    let fv = c.f_vector().unwrap();
    assert_eq!(fv.counts()[0] as usize, c.ground().len());
    assert_eq!(fv, brute_f_vector(&c));
}

#[test]
fn fvector_report_line_format() {
    let fv = FVector::new(vec![6, 14, 8]);
    assert_eq!(fv.to_string(), "(6, 14, 8)");
    assert_eq!(fv.report_line(), "f = (6, 14, 8), chi = 0");
    assert_eq!(FVector::new(vec![3]).report_line(), "f = (3), chi = 3");
    assert_eq!(FVector::new(vec![]).report_line(), "f = (), chi = 0");
    assert_eq!(
        FVector::new(vec![4, 6, 4]).report_line(),
        "f = (4, 6, 4), chi = 2"
    );
}

#[test]
fn document_round_trip_is_bit_exact() {
    let c = complex(&[&[2, 4], &[1, 2, 3], &[1, 4, 5]]);
    let doc = c.to_document();
    assert_eq!(doc, "facets 3\n1 2 3\n1 4 5\n2 4\n");
    let parsed = SimplicialComplex::parse_document(&doc).unwrap();
    assert_eq!(parsed, c);
    assert_eq!(parsed.to_document(), doc);
}

#[test]
fn document_parse_applies_maximality() {
    let parsed = SimplicialComplex::parse_document("facets 3\n1 2\n1 2 3\n3\n").unwrap();
    assert_eq!(parsed.facets(), &[face(&[1, 2, 3])]);
}

#[test]
fn document_parse_rejects_malformed_input() {
    for bad in [
        "",
        "facets\n",
        "facet 1\n1 2\n",
        "facets 2\n1 2\n",
        "facets 1\n1 2\n3 4\n",
        "facets 1\nx\n",
    ] {
        assert!(
            matches!(SimplicialComplex::parse_document(bad), Err(Error::Parse(_))),
            "accepted {bad:?}"
        );
    }
    assert_eq!(
        SimplicialComplex::parse_document("facets 1\n0 1\n"),
        Err(Error::InvalidVertex(0))
    );
}
