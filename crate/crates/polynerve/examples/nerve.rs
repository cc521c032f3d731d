//! Nerve of a small poset, its size, and the map sending a chain to its top.

use polynerve::nerve::{count_chains, iterated_nerve, nerve};
use polynerve::poset::FinitePoset;

fn main() -> polynerve::error::Result<()> {
    let f = FinitePoset::build(
        &["r", "a1", "a2", "b", "t"],
        &[("r", "a1"), ("a1", "a2"), ("r", "b"), ("a2", "t"), ("b", "t")],
    )?;
    let n = nerve(&f)?;
    println!("{} elements, {} chains", f.len(), count_chains(&f));
    println!("nerve has {} elements of height {}", n.poset.len(), n.poset.height()?);

    let top = n.max_map();
    for x in n.poset.maximal_elements() {
        println!("  maximal chain {} -> {}", n.poset.label(x), f.label(top.image(x).unwrap()));
    }
    assert!(top.is_up_reduction());

    let twice = iterated_nerve(&f, 2)?;
    println!("second nerve has {} elements", twice.len());
    Ok(())
}
