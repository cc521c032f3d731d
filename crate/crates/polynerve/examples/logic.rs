//! Validity of formulas on finite frames, with a refuting valuation when one exists.

use polynerve::logic::{counter_valuation, parse_formula, validates_bd, LogicSpec};
use polynerve::poset::FinitePoset;

fn main() -> polynerve::error::Result<()> {
    let fork = FinitePoset::build(&["root", "left", "right"], &[("root", "left"), ("root", "right")])?;
    let chain = FinitePoset::chain(3);

    for logic in ["KC", "LC", "BD:2", "SFL:1^3", "(p -> q) | (q -> p)"] {
        let spec: LogicSpec = logic.parse()?;
        println!("{logic:22} fork={:5} chain={}", spec.validated_by(&fork)?, spec.validated_by(&chain)?);
    }
    println!("chain of 3 has depth 3: BD2 {} BD3 {}", validates_bd(&chain, 2), validates_bd(&chain, 3));

    let phi = parse_formula("~p | ~~p")?;
    if let Some(val) = counter_valuation(&fork, &phi)? {
        for (var, set) in &val {
            let labels: Vec<&str> = set.ones().map(|x| fork.label(x)).collect();
            println!("{phi} fails on the fork with {var} = {labels:?}");
        }
    }
    Ok(())
}
