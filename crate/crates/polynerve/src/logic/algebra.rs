use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::logic::formula::Formula;
use crate::poset::{ElementSet, FinitePoset};

/// Default cap on `|Up F| ^ #variables` for exhaustive validity checks.
pub const DEFAULT_VALUATION_BUDGET: u64 = 10_000_000;

/// Assignment of upsets to variable names.
pub type Valuation = BTreeMap<String, ElementSet>;

/// The Heyting algebra of upward-closed subsets of a finite poset.
pub struct UpsetAlgebra<'a> {
    poset: &'a FinitePoset,
}

impl<'a> UpsetAlgebra<'a> {
    pub fn new(poset: &'a FinitePoset) -> Self {
        UpsetAlgebra { poset }
    }

    pub fn poset(&self) -> &FinitePoset {
        self.poset
    }

    pub fn bottom(&self) -> ElementSet {
        self.poset.empty_set()
    }

    pub fn top(&self) -> ElementSet {
        self.poset.full_set()
    }

    pub fn meet(&self, u: &ElementSet, v: &ElementSet) -> ElementSet {
        let mut w = u.clone();
        w.intersect_with(v);
        w
    }

    pub fn join(&self, u: &ElementSet, v: &ElementSet) -> ElementSet {
        let mut w = u.clone();
        w.union_with(v);
        w
    }

    /// `{x | up(x) ∩ u ⊆ v}`.
    pub fn implies(&self, u: &ElementSet, v: &ElementSet) -> ElementSet {
        let mut w = self.poset.empty_set();
        for x in 0..self.poset.len() {
            let mut hit = self.poset.up_set(x).clone();
            hit.intersect_with(u);
            if hit.is_subset(v) {
                w.insert(x);
            }
        }
        w
    }

    pub fn negate(&self, u: &ElementSet) -> ElementSet {
        self.implies(u, &self.bottom())
    }

    /// Number of upsets, stopping once `cap` is exceeded.
    pub fn count_upsets(&self, cap: u64) -> u64 {
        let mut count = 0u64;
        self.walk_upsets(&mut |_| {
            count += 1;
            count <= cap
        });
        count
    }

    /// Every upset, found by deciding elements from the top down: an element may
    /// join only if all of its upper covers already have.
    pub fn upsets(&self) -> Vec<ElementSet> {
        let mut out = Vec::new();
        self.walk_upsets(&mut |u| {
            out.push(u.clone());
            true
        });
        out
    }

    fn walk_upsets(&self, visit: &mut dyn FnMut(&ElementSet) -> bool) {
        let order: Vec<usize> = self.poset.linear_extension().iter().rev().copied().collect();
        let mut current = self.poset.empty_set();
        fn go(
            p: &FinitePoset,
            order: &[usize],
            i: usize,
            cur: &mut ElementSet,
            visit: &mut dyn FnMut(&ElementSet) -> bool,
        ) -> bool {
            if i == order.len() {
                return visit(cur);
            }
            let x = order[i];
            if !go(p, order, i + 1, cur, visit) {
                return false;
            }
            if p.upper_covers(x).iter().all(|&y| cur.contains(y)) {
                cur.insert(x);
                let keep = go(p, order, i + 1, cur, visit);
                cur.set(x, false);
                return keep;
            }
            true
        }
        go(self.poset, &order, 0, &mut current, visit);
    }

    /// Truth set of `phi`; variables missing from `val` are read as the empty upset.
    pub fn eval(&self, phi: &Formula, val: &Valuation) -> ElementSet {
        match phi {
            Formula::Var(v) => val.get(v).cloned().unwrap_or_else(|| self.bottom()),
            Formula::Top => self.top(),
            Formula::Bot => self.bottom(),
            Formula::And(a, b) => self.meet(&self.eval(a, val), &self.eval(b, val)),
            Formula::Or(a, b) => self.join(&self.eval(a, val), &self.eval(b, val)),
            Formula::Imp(a, b) => self.implies(&self.eval(a, val), &self.eval(b, val)),
        }
    }
}

/// A valuation under which `phi` fails somewhere, or `None` if `phi` is valid on `f`.
pub fn counter_valuation(f: &FinitePoset, phi: &Formula) -> Result<Option<Valuation>> {
    counter_valuation_with_budget(f, phi, DEFAULT_VALUATION_BUDGET)
}

pub fn counter_valuation_with_budget(f: &FinitePoset, phi: &Formula, budget: u64) -> Result<Option<Valuation>> {
    let alg = UpsetAlgebra::new(f);
    let vars = phi.variables();
    let cap = budget.saturating_add(1);
    let count = alg.count_upsets(cap);
    let needed = (0..vars.len()).try_fold(1u64, |acc, _| acc.checked_mul(count)).unwrap_or(u64::MAX);
    if needed > budget {
        return Err(Error::SizeBudgetExceeded { budget, needed });
    }
    let ups = alg.upsets();
    let full = alg.top();
    let mut digits = vec![0usize; vars.len()];
    loop {
        let val: Valuation = vars.iter().cloned().zip(digits.iter().map(|&d| ups[d].clone())).collect();
        if alg.eval(phi, &val) != full {
            return Ok(Some(val));
        }
        let mut i = 0;
        loop {
            if i == digits.len() {
                return Ok(None);
            }
            digits[i] += 1;
            if digits[i] < ups.len() {
                break;
            }
            digits[i] = 0;
            i += 1;
        }
    }
}

/// Validity of `phi` on the frame `f`: true under every upset valuation.
pub fn frame_validates(f: &FinitePoset, phi: &Formula) -> Result<bool> {
    Ok(counter_valuation(f, phi)?.is_none())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::logic::formula::parse_formula;

    fn fork() -> FinitePoset {
        FinitePoset::build(&["r", "a", "b"], &[("r", "a"), ("r", "b")]).unwrap()
    }

    #[test]
    fn upset_counts() {
        assert_eq!(UpsetAlgebra::new(&FinitePoset::chain(3)).upsets().len(), 4);
        assert_eq!(UpsetAlgebra::new(&fork()).upsets().len(), 5);
        assert_eq!(UpsetAlgebra::new(&FinitePoset::antichain(3)).upsets().len(), 8);
        assert_eq!(UpsetAlgebra::new(&FinitePoset::empty()).upsets().len(), 1);
        for u in UpsetAlgebra::new(&fork()).upsets() {
            assert!(fork().is_up_closed(&u));
        }
    }

    #[test]
    fn small_validities() {
        let lc = parse_formula("(p->q)|(q->p)").unwrap();
        assert!(frame_validates(&FinitePoset::chain(2), &lc).unwrap());
        let kc = parse_formula("~p|~~p").unwrap();
        let cv = counter_valuation(&fork(), &kc).unwrap().unwrap();
        assert_eq!(cv["p"].count_ones(..), 1);
        assert!(frame_validates(&fork(), &parse_formula("p->p").unwrap()).unwrap());
        assert!(!frame_validates(&FinitePoset::chain(2), &parse_formula("p|~p").unwrap()).unwrap());
    }

    #[test]
    fn budget_guard() {
        let phi = parse_formula("a&b&c&d&e&f&g&h").unwrap();
        let err = frame_validates(&FinitePoset::antichain(3), &phi).unwrap_err();
        assert!(matches!(err, Error::SizeBudgetExceeded { .. }));
    }
}
