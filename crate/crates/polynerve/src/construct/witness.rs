use super::{check_witness, ensure, gradify_with_scott, gradify_without_scott, nervify_preserving, require_frame, ConstructionResult};
use crate::error::{Error, Result};
use crate::nerve::nerve;
use crate::poset::FinitePoset;
use crate::signature::Signature;
use crate::starlike::{is_alpha_connected, is_alpha_nerve_connected};

/// A frame that nerve-validates the starlike logic of `lambda`, with a
/// surjective p-morphism onto `f`: gradify unless `f` is already graded (using
/// the `2.1` variant exactly when `2.1` is in `lambda`), then nervify.
pub fn starlike_witness(f: &FinitePoset, lambda: &[Signature]) -> Result<ConstructionResult> {
    if let Some(a) = lambda.iter().find(|a| a.is_forbidden()) {
        return Err(Error::ForbiddenSignature(a.to_string()));
    }
    require_frame(f, lambda)?;
    let graded = if f.is_graded() {
        ConstructionResult::unchanged(f, "already graded")
    } else if lambda.contains(&Signature::scott()) {
        gradify_with_scott(f, lambda)?
    } else {
        gradify_without_scott(f, lambda)?
    };
    let nerved = nervify_preserving(&graded.output, lambda)?;
    let witness = nerved.witness.then(&graded.witness)?;
    let output = nerved.output;

    check_witness(&witness)?;
    ensure(output.is_graded(), || "output is not graded".into())?;
    let n = nerve(&output)?;
    for alpha in lambda {
        ensure(is_alpha_nerve_connected(&output, alpha), || format!("output is not {alpha}-nerve-connected"))?;
        ensure(is_alpha_connected(&n.poset, alpha), || format!("nerve of the output is not {alpha}-connected"))?;
    }
    let mut trace = graded.trace;
    trace.extend(nerved.trace);
    Ok(ConstructionResult { output, witness, trace })
}
