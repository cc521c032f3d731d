use polynerve::morphism::validates_jankov;
use polynerve::nerve::nerve;
use polynerve::poset::FinitePoset;
use polynerve::random::{random_rooted_poset, seeded};
use polynerve::signature::Signature;
use polynerve::starlike::{is_alpha_connected, is_alpha_nerve_connected, nerve_validates_starlike, starlike_tree};
use proptest::prelude::*;

fn sig(s: &str) -> Signature {
    s.parse().unwrap()
}

fn alphas() -> impl Strategy<Value = Signature> {
    prop::sample::select(vec!["2", "3", "1^3", "2.1", "2^2", "3.1"]).prop_map(sig)
}

fn rooted() -> impl Strategy<Value = FinitePoset> {
    (any::<u64>(), 2usize..=7, 0.2f64..0.7).prop_map(|(seed, n, p)| random_rooted_poset(&mut seeded(seed), n, p))
}

// Without a root the nerve side and the diamond side can disagree.
#[test]
fn unrooted_counterexample() {
    let f = FinitePoset::build(
        &["x0", "x1", "x2", "x3", "x4"],
        &[("x0", "x3"), ("x0", "x4"), ("x1", "x3"), ("x1", "x4"), ("x2", "x4")],
    )
    .unwrap();
    let alpha = sig("1^3");
    assert!(is_alpha_nerve_connected(&f, &alpha));
    assert!(nerve_validates_starlike(&f, &alpha).unwrap());
    let n = nerve(&f).unwrap().poset;
    assert!(!is_alpha_connected(&n, &alpha));
    assert!(!validates_jankov(&n, &starlike_tree(&alpha)).unwrap());
}

#[test]
fn fork_is_not_fork_connected() {
    let fork = starlike_tree(&sig("1^2"));
    assert!(!is_alpha_connected(&fork, &sig("1^2")));
    assert!(!validates_jankov(&fork, &fork).unwrap());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    // A search for an up-reduction onto the tree against the partition test.
    #[test]
    fn jankov_matches_connectedness(f in rooted(), alpha in alphas()) {
        let tree = starlike_tree(&alpha);
        prop_assert_eq!(validates_jankov(&f, &tree).unwrap(), is_alpha_connected(&f, &alpha));
    }

    #[test]
    fn rooted_nerve_agrees(f in rooted(), alpha in alphas()) {
        let diamonds = nerve_validates_starlike(&f, &alpha).unwrap();
        let n = nerve(&f).unwrap().poset;
        prop_assert_eq!(diamonds, is_alpha_connected(&n, &alpha));
        prop_assert_eq!(diamonds, is_alpha_nerve_connected(&n, &alpha));
        if n.len() <= 24 {
            prop_assert_eq!(diamonds, validates_jankov(&n, &starlike_tree(&alpha)).unwrap());
        }
    }
}
