use crate::error::{Error, Result};
use crate::logic::formula::Formula;

fn p(i: usize) -> Formula {
    Formula::var(format!("p{i}"))
}

/// The formula for a named axiom. `KC`, `LC` and `SL` take no parameter;
/// `BW`, `BTW` and `BC` need `n`.
pub fn named_formula(name: &str, n: Option<usize>) -> Result<Formula> {
    let need = || n.ok_or_else(|| Error::MissingParameter(name.to_string()));
    let pv = Formula::var("p");
    let q = Formula::var("q");
    match name {
        "KC" => Ok(Formula::or(Formula::not(pv.clone()), Formula::not(Formula::not(pv)))),
        "LC" => Ok(Formula::or(Formula::imp(pv.clone(), q.clone()), Formula::imp(q, pv))),
        "SL" => {
            let nn = Formula::not(Formula::not(pv.clone()));
            let premise = Formula::imp(
                Formula::imp(nn.clone(), pv.clone()),
                Formula::or(pv.clone(), Formula::not(pv.clone())),
            );
            Ok(Formula::imp(premise, Formula::or(Formula::not(pv), nn)))
        }
        "BW" => {
            let n = need()?;
            Ok(Formula::disj((0..=n).map(|i| {
                Formula::imp(p(i), Formula::disj((0..=n).filter(|&j| j != i).map(p)))
            })))
        }
        "BTW" => {
            let n = need()?;
            let pairs = (0..=n).flat_map(|i| (i + 1..=n).map(move |j| (i, j)));
            let premise = Formula::conj(
                pairs.map(|(i, j)| Formula::not(Formula::and(Formula::not(p(i)), Formula::not(p(j))))),
            );
            let conclusion = Formula::disj((0..=n).map(|i| {
                Formula::imp(
                    Formula::not(p(i)),
                    Formula::disj((0..=n).filter(|&j| j != i).map(|j| Formula::not(p(j)))),
                )
            }));
            Ok(Formula::imp(premise, conclusion))
        }
        "BC" => {
            let n = need()?;
            let head = p(0);
            let tail = (1..=n).map(|i| Formula::imp(Formula::conj((0..i).map(p)), p(i)));
            Ok(Formula::disj(std::iter::once(head).chain(tail)))
        }
        other => Err(Error::UnknownName(other.to_string())),
    }
}
