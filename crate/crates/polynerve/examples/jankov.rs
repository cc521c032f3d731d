//! Searching for an up-reduction onto a starlike tree, against the partition test.

use polynerve::morphism::find_up_reduction;
use polynerve::nerve::nerve;
use polynerve::poset::FinitePoset;
use polynerve::signature::Signature;
use polynerve::starlike::{is_alpha_connected, starlike_tree};

fn main() -> polynerve::error::Result<()> {
    let f = FinitePoset::build(
        &["r", "a1", "a2", "b", "t"],
        &[("r", "a1"), ("a1", "a2"), ("r", "b"), ("a2", "t"), ("b", "t")],
    )?;
    let n = nerve(&f)?.poset;
    for alpha in ["2", "1^3", "2.1"] {
        let alpha: Signature = alpha.parse()?;
        let tree = starlike_tree(&alpha);
        for (name, g) in [("F", &f), ("N(F)", &n)] {
            let reduction = find_up_reduction(g, &tree)?;
            println!(
                "{name:5} alpha={alpha:4} connected={:5} reduction={}",
                is_alpha_connected(g, &alpha),
                reduction.as_ref().map_or("none".to_string(), |w| format!("apex {}", g.label(w.apex().unwrap()))),
            );
            if let Some(apex) = reduction.and_then(|w| w.apex()) {
                let parts = g.components_of(&g.strict_up(apex));
                let named: Vec<Vec<&str>> = parts.iter().map(|p| p.iter().map(|&x| g.label(x)).collect()).collect();
                println!("      above the apex: {named:?}");
            }
        }
    }
    Ok(())
}
