use std::str::FromStr;

use crate::error::{Error, Result};
use crate::logic::algebra::frame_validates;
use crate::logic::formula::{parse_formula, Formula};
use crate::logic::named::named_formula;
use crate::morphism::validates_jankov;
use crate::poset::FinitePoset;
use crate::signature::Signature;
use crate::starlike::{is_alpha_connected, starlike_tree};

/// Bounded depth: the chain on `n + 1` elements does not up-reduce from `f`,
/// i.e. `height(f) <= n - 1`. Both readings are computed and must agree.
pub fn validates_bd(f: &FinitePoset, n: usize) -> bool {
    let by_height = f.height().map_or(true, |h| h < n);
    let by_jankov = validates_jankov(f, &FinitePoset::chain(n + 1)).unwrap_or(by_height);
    assert_eq!(by_height, by_jankov, "height and Jankov-Fine readings of BD disagree");
    by_height
}

fn check_admissible(lambda: &[Signature]) -> Result<()> {
    match lambda.iter().find(|a| a.is_forbidden()) {
        Some(a) => Err(Error::ForbiddenSignature(a.to_string())),
        None => Ok(()),
    }
}

/// Validity of the starlike logic axiomatised by the trees of `lambda`: the
/// frame is `alpha`-connected for each `alpha` in `lambda`.
pub fn validates_sfl(f: &FinitePoset, lambda: &[Signature]) -> Result<bool> {
    check_admissible(lambda)?;
    Ok(lambda.iter().all(|a| is_alpha_connected(f, a)))
}

/// The depth-based description available once `2.1` is in `lambda`: with `n`
/// the least chain signature and `k` the least `1^k` in `lambda` (absent means
/// unbounded), `height < n`, `|strict_up(x)| < k` at depth 1, and a connected
/// strict upset at depth above 1.
pub fn scott_frame_conditions(f: &FinitePoset, lambda: &[Signature]) -> Result<bool> {
    check_admissible(lambda)?;
    if !lambda.contains(&Signature::scott()) {
        return Err(Error::PreconditionViolated("2.1 must belong to the signature set".into()));
    }
    let holds = scott_conditions_hold(f, lambda);
    debug_assert_eq!(Some(holds), validates_sfl(f, lambda).ok(), "depth description disagrees");
    Ok(holds)
}

fn scott_conditions_hold(f: &FinitePoset, lambda: &[Signature]) -> bool {
    let n = lambda.iter().filter_map(Signature::chain_height).min();
    let k = lambda.iter().filter_map(Signature::ones_count).min();
    if let (Some(n), Ok(h)) = (n, f.height()) {
        if h >= n {
            return false;
        }
    }
    for x in 0..f.len() {
        let above = f.strict_up(x);
        match f.depth_of(x) {
            1 => {
                if k.is_some_and(|k| above.count_ones(..) >= k) {
                    return false;
                }
            }
            d if d > 1 && f.components_of(&above).len() > 1 => return false,
            _ => {}
        }
    }
    true
}

/// A logic named on the command line: `BD:3`, `SFL:2.1,1^3`, `KC`, `BW:2`, or
/// any formula in the parser's grammar.
#[derive(Clone, Debug, PartialEq)]
pub enum LogicSpec {
    BoundedDepth(usize),
    Starlike(Vec<Signature>),
    Formula(Formula),
}

impl FromStr for LogicSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (name, param) = match s.split_once(':') {
            Some((a, b)) => (a.trim(), Some(b.trim())),
            None => (s, None),
        };
        let number = |p: Option<&str>| -> Result<Option<usize>> {
            p.map(|t| t.parse::<usize>().map_err(|_| Error::InvalidInput(format!("bad parameter {t:?}"))))
                .transpose()
        };
        match name {
            "BD" => number(param)?
                .map(LogicSpec::BoundedDepth)
                .ok_or_else(|| Error::MissingParameter("BD".into())),
            "SFL" => Ok(LogicSpec::Starlike(Signature::parse_list(param.unwrap_or(""))?)),
            "KC" | "LC" | "SL" | "BW" | "BTW" | "BC" => Ok(LogicSpec::Formula(named_formula(name, number(param)?)?)),
            _ => Ok(LogicSpec::Formula(parse_formula(s)?)),
        }
    }
}

impl LogicSpec {
    pub fn validated_by(&self, f: &FinitePoset) -> Result<bool> {
        match self {
            LogicSpec::BoundedDepth(n) => Ok(validates_bd(f, *n)),
            LogicSpec::Starlike(lambda) => validates_sfl(f, lambda),
            LogicSpec::Formula(phi) => frame_validates(f, phi),
        }
    }
}

/// Jankov-Fine validity for the starlike tree of `alpha`, by search.
pub fn validates_starlike_jankov(f: &FinitePoset, alpha: &Signature) -> Result<bool> {
    validates_jankov(f, &starlike_tree(alpha))
}
