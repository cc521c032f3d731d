//! From a frame of a starlike logic to a frame whose nerve validates it.

use polynerve::construct::starlike_witness;
use polynerve::nerve::nerve;
use polynerve::poset::FinitePoset;
use polynerve::signature::Signature;
use polynerve::starlike::is_alpha_connected;

fn main() -> polynerve::error::Result<()> {
    let f = FinitePoset::build(
        &["x0", "x1", "x2", "x3", "x4", "x5", "x6"],
        &[("x0", "x1"), ("x0", "x2"), ("x0", "x3"), ("x1", "x4"), ("x2", "x5"), ("x2", "x6"),
          ("x3", "x5"), ("x3", "x6"), ("x4", "x5"), ("x4", "x6")],
    )?;
    let lambda = Signature::parse_list("2.1,1^3")?;
    println!("input: {} elements, graded {}", f.len(), f.is_graded());

    let r = starlike_witness(&f, &lambda)?;
    for step in &r.trace {
        println!(
            "{:10} +{} elements +{} edges, {} classes identified",
            step.step,
            step.added_elements.len(),
            step.added_edges.len(),
            step.identified_classes.len()
        );
    }
    let w = &r.witness;
    println!("output: {} elements, graded {}", r.output.len(), r.output.is_graded());
    println!("witness total {} p-morphism {} onto {}", w.is_total(), w.is_p_morphism(), w.is_surjective());

    let n = nerve(&r.output)?.poset;
    for a in &lambda {
        println!("nerve of output {a}-connected: {}", is_alpha_connected(&n, a));
    }
    Ok(())
}
