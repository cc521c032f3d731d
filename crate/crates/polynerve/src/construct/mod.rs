//! Frame constructions that turn a finite rooted frame of a starlike logic into
//! one whose nerve still validates the logic, each with a p-morphism back onto
//! the input. Every construction re-checks its postconditions before returning.

mod gradify;
mod nervify;
mod witness;

pub use gradify::{gradify_with_scott, gradify_without_scott};
pub use nervify::{diamond_sample, nervify, nervify_preserving};
pub use witness::starlike_witness;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::logic::validates_sfl;
use crate::morphism::PMorphism;
use crate::poset::FinitePoset;
use crate::signature::Signature;

/// One audited step of a construction.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct TraceStep {
    pub step: String,
    pub added_elements: Vec<String>,
    pub added_edges: Vec<(String, String)>,
    pub identified_classes: Vec<Vec<String>>,
}

impl TraceStep {
    fn named(step: &str) -> Self {
        TraceStep { step: step.to_string(), ..Default::default() }
    }
}

/// Output frame, the p-morphism from it onto the input, and the steps taken.
#[derive(Clone, Debug)]
pub struct ConstructionResult {
    pub output: FinitePoset,
    pub witness: PMorphism,
    pub trace: Vec<TraceStep>,
}

impl ConstructionResult {
    fn unchanged(f: &FinitePoset, reason: &str) -> Self {
        ConstructionResult {
            output: f.clone(),
            witness: PMorphism::identity(f),
            trace: vec![TraceStep::named(reason)],
        }
    }
}

/// Accumulates elements with their witness images, and covering edges.
struct Builder {
    labels: Vec<String>,
    image: Vec<usize>,
    edges: Vec<(usize, usize)>,
}

impl Builder {
    fn new() -> Self {
        Builder { labels: Vec::new(), image: Vec::new(), edges: Vec::new() }
    }

    fn add(&mut self, label: String, image: usize) -> usize {
        self.labels.push(label);
        self.image.push(image);
        self.labels.len() - 1
    }

    fn edge(&mut self, lo: usize, hi: usize) {
        self.edges.push((lo, hi));
    }

    fn edge_names(&self, from: usize) -> Vec<(String, String)> {
        self.edges[from..]
            .iter()
            .map(|&(a, b)| (self.labels[a].clone(), self.labels[b].clone()))
            .collect()
    }

    fn finish(self, input: &FinitePoset) -> Result<(FinitePoset, PMorphism)> {
        let output = FinitePoset::from_edges(self.labels, &self.edges)?;
        let witness = PMorphism::total(output.clone(), input.clone(), self.image)?;
        Ok((output, witness))
    }
}

fn ensure(holds: bool, what: impl FnOnce() -> String) -> Result<()> {
    if holds {
        Ok(())
    } else {
        Err(Error::ConstructionPostconditionFailed(what()))
    }
}

fn check_witness(witness: &PMorphism) -> Result<()> {
    ensure(witness.is_p_morphism(), || "witness is not a p-morphism".into())?;
    ensure(witness.is_surjective(), || "witness is not surjective".into())
}

/// ConType of every strict upset agrees with that of its image, for `x` in `elements`.
fn check_con_types(witness: &PMorphism, elements: impl IntoIterator<Item = usize>) -> Result<()> {
    let (src, dst) = (witness.source(), witness.target());
    for x in elements {
        let fx = witness.image(x).expect("total witness");
        let (here, there) = (src.con_type_above(x), dst.con_type_above(fx));
        ensure(here == there, || {
            format!("upset type {here} at {} differs from {there} at {}", src.label(x), dst.label(fx))
        })?;
    }
    Ok(())
}

fn require_frame(f: &FinitePoset, lambda: &[Signature]) -> Result<()> {
    if !f.is_rooted() {
        return Err(Error::PreconditionViolated("input must be rooted".into()));
    }
    if !validates_sfl(f, lambda)? {
        return Err(Error::PreconditionViolated("input does not validate the starlike logic".into()));
    }
    Ok(())
}

/// The deepest common ancestor of two tree nodes.
fn tree_meet(tree: &FinitePoset, p: usize, q: usize) -> usize {
    let mut common = tree.down_set(p).clone();
    common.intersect_with(tree.down_set(q));
    common.ones().max_by_key(|&x| tree.height_of(x)).expect("rooted tree")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::starlike::{is_alpha_connected, is_alpha_diamond_connected};

    fn sig(s: &str) -> Signature {
        s.parse().unwrap()
    }

    fn poset(edges: &[(&str, &str)]) -> FinitePoset {
        let mut labels: Vec<&str> = Vec::new();
        for &(a, b) in edges {
            for x in [a, b] {
                if !labels.contains(&x) {
                    labels.push(x);
                }
            }
        }
        FinitePoset::build(&labels, edges).unwrap()
    }

    fn tops(f: &FinitePoset) -> usize {
        f.maximal_elements().len()
    }

    /// Padding example: two tops, height five, several paths into each top.
    fn padding_example() -> FinitePoset {
        poset(&[
            ("a0", "b0"), ("a0", "b1"), ("a0", "b2"), ("b0", "c0"), ("b1", "c1"), ("c1", "c0"),
            ("b2", "c2"), ("c2", "c1"), ("c2", "d1"), ("d1", "e1"), ("e1", "c0"), ("e1", "f1"),
            ("c2", "d2"), ("d2", "f1"),
        ])
    }

    fn zigzag_example() -> FinitePoset {
        poset(&[
            ("a", "b3"), ("b3", "c3"), ("c3", "d3"), ("d3", "e3"), ("a", "b1"), ("b1", "e3"),
            ("b1", "e2"), ("e2", "n"),
        ])
    }

    fn naive_counterexample() -> FinitePoset {
        poset(&[("a", "b1"), ("b1", "b2"), ("b2", "d"), ("a", "c"), ("c", "d"), ("c", "f1"), ("f1", "f2")])
    }

    fn four_branches() -> FinitePoset {
        poset(&[
            ("a1", "b1"), ("b1", "b2"), ("b2", "b3"), ("b3", "b4"), ("b4", "x"),
            ("a1", "c1"), ("c1", "d1"), ("d1", "d2"), ("d2", "d3"), ("d3", "x"),
            ("c1", "e1"), ("e1", "e2"), ("e2", "e3"), ("e3", "x"),
            ("a1", "g1"), ("g1", "g2"), ("g2", "g3"), ("g3", "g4"), ("g4", "x"),
        ])
    }

    #[test]
    fn padding_merges_tops() {
        let f = padding_example();
        assert_eq!(f.height().unwrap(), 5);
        let lam = [sig("2.1")];
        let r = gradify_with_scott(&f, &lam).unwrap();
        assert_eq!(r.output.len(), 19);
        assert_eq!(tops(&r.output), 2);
        assert_eq!(r.output.height().unwrap(), 5);
        assert!(r.output.is_graded());
        assert!(r.witness.is_p_morphism() && r.witness.is_surjective());
        let merged: usize = r.trace[1].identified_classes.iter().map(Vec::len).sum();
        assert_eq!(merged, 6);
    }

    #[test]
    fn padding_trivial_cases() {
        let one = FinitePoset::chain(1);
        let r = gradify_with_scott(&one, &[sig("2.1")]).unwrap();
        assert_eq!(r.output, one);
        let c = FinitePoset::chain(4);
        let r = gradify_with_scott(&c, &[sig("2.1")]).unwrap();
        assert_eq!(r.output.len(), 4);
        assert!(matches!(gradify_with_scott(&c, &[sig("2^2")]), Err(Error::PreconditionViolated(_))));
    }

    #[test]
    fn zigzag_bridges() {
        let f = zigzag_example();
        for lam in [vec![sig("2^2")], vec![sig("1^3")]] {
            let r = gradify_without_scott(&f, &lam).unwrap();
            assert_eq!(r.output.len(), 19);
            assert_eq!(r.trace.len(), 1);
            assert_eq!(r.trace[0].added_elements.len(), 10);
            assert!(r.output.is_graded());
            // three tree tops plus the two upper zigzag points
            assert_eq!(tops(&r.output), 5);
        }
        assert!(matches!(gradify_without_scott(&f, &[sig("2.1")]), Err(Error::PreconditionViolated(_))));
    }

    #[test]
    fn zigzag_keeps_upset_types_where_padding_does_not() {
        let f = naive_counterexample();
        let lam = [sig("2^2")];
        assert!(is_alpha_connected(&f, &lam[0]));
        let r = gradify_without_scott(&f, &lam).unwrap();
        assert!(r.output.is_graded());
        assert!(is_alpha_connected(&r.output, &lam[0]));
    }

    #[test]
    fn zigzag_on_trees_is_identity_shaped() {
        let f = poset(&[("r", "a"), ("a", "b"), ("r", "c")]);
        let r = gradify_without_scott(&f, &[sig("2^2")]).unwrap();
        assert_eq!(r.output.len(), f.len());
        assert_eq!(r.trace[0].step, "no bridges needed");
    }

    #[test]
    fn chevrons_on_four_branches() {
        let f = four_branches();
        assert_eq!(f.len(), 17);
        let r = nervify(&f).unwrap();
        assert_eq!(r.output.len(), 27);
        let out = &r.output;
        let a = |s: &str| out.index_of(s).unwrap();
        assert_eq!(out.lower_covers(a("a(1,1)@x")), [a("b1"), a("c1")]);
        assert_eq!(out.lower_covers(a("a(2,1)@x")).len(), 2);
        assert!(out.lt(a("d1"), a("a(2,1)@x")) && out.lt(a("e1"), a("a(2,1)@x")));
        assert!(out.lt(a("c1"), a("a(3,1)@x")) && out.lt(a("g1"), a("a(3,1)@x")));
        assert!(out.index_of("a(2,4)@x").is_err());
        assert!(out.index_of("a(3,4)@x").is_ok());
    }

    #[test]
    fn chevrons_on_two_branches() {
        let f = poset(&[
            ("a", "b1"), ("b1", "b2"), ("b2", "b3"), ("b3", "t"), ("a", "c1"), ("c1", "c2"), ("c2", "c3"), ("c3", "t"),
        ]);
        let r = nervify(&f).unwrap();
        assert_eq!(r.output.len(), 10);
        let out = &r.output;
        for j in 1..=3 {
            let x = out.index_of(&format!("a(1,{j})@t")).unwrap();
            let mut below: Vec<&str> = out.lower_covers(x).iter().map(|&y| out.label(y)).collect();
            below.sort();
            let mut expected = vec![format!("b{j}"), format!("c{j}")];
            if j > 1 {
                expected.insert(0, format!("a(1,{})@t", j - 1));
            }
            assert_eq!(below, expected);
        }
        assert!(is_alpha_diamond_connected(out, &sig("2.1")));
        assert!(!is_alpha_diamond_connected(&f, &sig("2.1")));
    }

    #[test]
    fn nervify_chain_is_unchanged_and_rejects_bad_input() {
        let c = FinitePoset::chain(3);
        let r = nervify(&c).unwrap();
        assert_eq!(r.output.len(), 3);
        assert_eq!(r.witness.map(), [Some(0), Some(1), Some(2)]);
        assert_eq!(nervify(&FinitePoset::antichain(2)).unwrap_err(), Error::NotRooted);
        let ungraded = poset(&[("r", "a"), ("a", "b"), ("r", "c"), ("c", "b"), ("r", "d"), ("d", "e"), ("e", "b")]);
        assert_eq!(nervify(&ungraded).unwrap_err(), Error::NotGraded);
    }

    #[test]
    fn pipeline_on_scott_frame() {
        let f = poset(&[("r", "a1"), ("a1", "a2"), ("r", "b"), ("a2", "t"), ("b", "t")]);
        let lam = [sig("2.1")];
        let r = starlike_witness(&f, &lam).unwrap();
        assert!(r.witness.is_p_morphism() && r.witness.is_surjective());
        assert!(crate::starlike::is_alpha_nerve_connected(&r.output, &lam[0]));
        let json = serde_json::to_string(&r.trace).unwrap();
        assert!(json.contains("\"identified_classes\""));
    }

    #[test]
    fn pipeline_rejects_invalid_frames() {
        let fork = crate::starlike::starlike_tree(&sig("1^3"));
        assert!(matches!(starlike_witness(&fork, &[sig("1^3")]), Err(Error::PreconditionViolated(_))));
        assert!(matches!(starlike_witness(&fork, &[sig("1^2")]), Err(Error::ForbiddenSignature(_))));
    }
}
