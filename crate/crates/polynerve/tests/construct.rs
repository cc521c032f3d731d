use std::collections::BTreeSet;

use polynerve::construct::{gradify_with_scott, gradify_without_scott, nervify, starlike_witness, ConstructionResult};
use polynerve::io::{poset_from_json, poset_to_json, witness_from_value, witness_to_value};
use polynerve::logic::validates_sfl;
use polynerve::nerve::nerve;
use polynerve::poset::FinitePoset;
use polynerve::random::{random_rooted_poset, seeded};
use polynerve::signature::Signature;
use polynerve::starlike::is_alpha_connected;
use proptest::prelude::*;

fn lambda(list: &str) -> Vec<Signature> {
    Signature::parse_list(list).unwrap()
}

/// The image of every principal upset is the principal upset of the image, computed element by element.
fn maps_upsets_onto_upsets(r: &ConstructionResult, base: &FinitePoset) -> bool {
    let out = &r.output;
    let img = |x: usize| r.witness.image(x).expect("total");
    (0..out.len()).all(|x| {
        let image: BTreeSet<usize> = (0..out.len()).filter(|&y| out.leq(x, y)).map(img).collect();
        let expected: BTreeSet<usize> = (0..base.len()).filter(|&z| base.leq(img(x), z)).collect();
        image == expected
    }) && (0..out.len()).map(img).collect::<BTreeSet<_>>().len() == base.len()
}

fn admissible() -> impl Strategy<Value = (FinitePoset, Vec<Signature>)> {
    let lambdas = prop::sample::select(vec!["2.1", "1^3", "2.1,1^3", "2^2", "3.1,1^4"]);
    (any::<u64>(), 1usize..=6, lambdas)
        .prop_map(|(seed, n, l)| (random_rooted_poset(&mut seeded(seed), n, 0.35), lambda(l)))
        .prop_filter("frame must validate the logic", |(f, l)| validates_sfl(f, l).unwrap())
}

#[test]
fn gradify_levels_a_long_side() {
    let closed = FinitePoset::build(&["r", "a", "b", "c", "t"], &[("r", "a"), ("a", "b"), ("b", "t"), ("r", "c"), ("c", "t")])
        .unwrap();
    for (f, r) in [
        (&closed, gradify_with_scott(&closed, &lambda("2.1")).unwrap()),
        (&closed, gradify_without_scott(&closed, &lambda("1^3")).unwrap()),
    ] {
        assert!(!f.is_graded() && r.output.is_graded());
        assert!(maps_upsets_onto_upsets(&r, f));
    }
}

#[test]
fn nervify_chain_is_unchanged() {
    let c = FinitePoset::chain(4);
    let r = nervify(&c).unwrap();
    assert_eq!(r.output.len(), 4);
}

#[test]
fn witness_file_round_trip() {
    let f = poset_from_json(&std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/data/kite.json")).unwrap()).unwrap();
    let r = starlike_witness(&f, &lambda("2.1")).unwrap();
    let out = poset_from_json(&poset_to_json(&r.output)).unwrap();
    assert_eq!(out, r.output);
    assert_eq!(witness_from_value(&witness_to_value(&r.witness), &out, &f).unwrap(), r.witness);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn witness_output_nerve_validates((f, l) in admissible()) {
        let r = starlike_witness(&f, &l).unwrap();
        prop_assert!(maps_upsets_onto_upsets(&r, &f));
        let n = nerve(&r.output).unwrap().poset;
        for a in &l {
            prop_assert!(is_alpha_connected(&n, a));
        }
    }
}
