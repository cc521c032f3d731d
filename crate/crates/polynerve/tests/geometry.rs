use polynerve::geometry::{
    barycentric_subdivision, elementary_farey, elementary_stellar, is_refinement, is_unimodular_complex,
    RationalComplex, RationalPoint,
};
use polynerve::io::{complex_from_json, complex_to_json};
use polynerve::morphism::are_isomorphic;
use polynerve::nerve::{count_chains, nerve};
use proptest::prelude::*;

/// Applies Farey moves at the simplices picked by `picks` (indices taken modulo the face count).
fn farey_walk(mut k: RationalComplex, picks: &[usize]) -> RationalComplex {
    for &i in picks {
        let faces: Vec<Vec<usize>> = k.simplices().iter().filter(|s| s.len() > 1).cloned().collect();
        k = elementary_farey(&k, &faces[i % faces.len()]).unwrap();
    }
    k
}

#[test]
fn square_split_by_diagonal() {
    let pts = [[0, 0], [1, 0], [0, 1], [1, 1]].map(|c| RationalPoint::from_ints(&c));
    let square = RationalComplex::from_maximal(2, pts.to_vec(), vec![vec![0, 1, 2], vec![1, 2, 3]]).unwrap();
    assert!(is_unimodular_complex(&square));
    let sd = barycentric_subdivision(&square).unwrap();
    assert_eq!(sd.len() as u64, count_chains(&square.face_poset()));
    assert!(is_refinement(&sd, &square));
    // Homogeneous denominators 1, 2, 3 make each small triangle unimodular again.
    assert!(is_unimodular_complex(&sd));
}

#[test]
fn overlapping_triangles_rejected() {
    let pts = [[0, 0], [2, 0], [0, 2], [1, 1], [2, 2]].map(|c| RationalPoint::from_ints(&c));
    assert!(RationalComplex::from_maximal(2, pts.to_vec(), vec![vec![0, 1, 2], vec![0, 1, 4]]).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn farey_moves_stay_unimodular(picks in prop::collection::vec(0usize..64, 1..6)) {
        let t = RationalComplex::standard_simplex(2);
        let k = farey_walk(t.clone(), &picks);
        prop_assert!(is_unimodular_complex(&k));
        prop_assert!(is_refinement(&k, &t));
        prop_assert_eq!(complex_from_json(&complex_to_json(&k)).unwrap(), k);
    }

    #[test]
    fn subdivision_face_poset_is_nerve(picks in prop::collection::vec(0usize..64, 0..3)) {
        let k = farey_walk(RationalComplex::standard_simplex(2), &picks);
        let sd = barycentric_subdivision(&k).unwrap();
        let faces = k.face_poset();
        prop_assert_eq!(sd.len() as u64, count_chains(&faces));
        prop_assert!(are_isomorphic(&sd.face_poset(), &nerve(&faces).unwrap().poset).unwrap().is_some());
    }

    #[test]
    fn stellar_at_interior_point(a in 1i64..20, b in 1i64..20, d in 41i64..60) {
        let t = RationalComplex::standard_simplex(2);
        let p = RationalPoint::from_fractions(&[(a, d), (b, d)]);
        let s = elementary_stellar(&t, &p).unwrap();
        prop_assert_eq!(s.f_vector(), vec![4, 6, 3]);
        prop_assert!(is_refinement(&s, &t));
    }
}
