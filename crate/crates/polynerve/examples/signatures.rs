//! The signature order and the up-reductions between starlike trees that realise it.

use polynerve::signature::Signature;
use polynerve::starlike::{signature_reduction, starlike_tree};

fn main() -> polynerve::error::Result<()> {
    let list = Signature::parse_list("1^3,2,2.1,3.1,2^2")?;
    for a in &list {
        for b in &list {
            if a != b && a.leq(b) {
                let w = signature_reduction(b, a)?;
                println!("{a} <= {b}: tree of {} elements reduces onto {}", starlike_tree(b).len(), starlike_tree(a).len());
                assert!(w.is_up_reduction());
            }
        }
    }
    let fork = Signature::ones(2);
    println!("{fork} forbidden: {}", fork.is_forbidden());
    Ok(())
}
