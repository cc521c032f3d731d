//! The nerve: nonempty chains of a poset ordered by inclusion.

use crate::error::{Error, Result};
use crate::morphism::PMorphism;
use crate::poset::FinitePoset;

/// Default cap on the number of chains materialised.
pub const DEFAULT_NERVE_BUDGET: u64 = 1_000_000;

/// A nerve together with the chains its elements stand for.
#[derive(Clone, Debug)]
pub struct Nerve {
    pub poset: FinitePoset,
    /// Base element indices of each chain, listed bottom-up.
    pub chains: Vec<Vec<usize>>,
    pub base: FinitePoset,
}

/// Number of nonempty chains, saturating at `u64::MAX`.
pub fn count_chains(f: &FinitePoset) -> u64 {
    // starting[x] counts chains whose least element is x.
    let mut starting = vec![0u64; f.len()];
    for &x in f.linear_extension().iter().rev() {
        let above: u64 = f
            .strict_up(x)
            .ones()
            .fold(0u64, |acc, y| acc.saturating_add(starting[y]));
        starting[x] = above.saturating_add(1);
    }
    starting.iter().fold(0u64, |a, &b| a.saturating_add(b))
}

/// Canonical label of a chain: member labels sorted, joined by `|`, in parentheses.
pub fn chain_label(f: &FinitePoset, chain: &[usize]) -> String {
    let mut names: Vec<&str> = chain.iter().map(|&x| f.label(x)).collect();
    names.sort_unstable();
    format!("({})", names.join("|"))
}

pub fn nerve(f: &FinitePoset) -> Result<Nerve> {
    nerve_with_budget(f, DEFAULT_NERVE_BUDGET)
}

/// Elements are ordered by chain size, then lexicographically by index sequence.
pub fn nerve_with_budget(f: &FinitePoset, budget: u64) -> Result<Nerve> {
    let needed = count_chains(f);
    if needed > budget {
        return Err(Error::SizeBudgetExceeded { budget, needed });
    }
    let mut chains: Vec<Vec<usize>> = Vec::with_capacity(needed as usize);
    let mut stack: Vec<Vec<usize>> = f.linear_extension().iter().map(|&x| vec![x]).collect();
    while let Some(c) = stack.pop() {
        let top = *c.last().unwrap();
        for y in f.strict_up(top).ones() {
            let mut next = c.clone();
            next.push(y);
            stack.push(next);
        }
        chains.push(c);
    }
    chains.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    let position: std::collections::HashMap<&[usize], usize> =
        chains.iter().enumerate().map(|(i, c)| (c.as_slice(), i)).collect();
    let mut edges = Vec::new();
    for (i, c) in chains.iter().enumerate() {
        if c.len() < 2 {
            continue;
        }
        for drop in 0..c.len() {
            let mut sub = c.clone();
            sub.remove(drop);
            edges.push((position[sub.as_slice()], i));
        }
    }
    let labels = chains.iter().map(|c| chain_label(f, c)).collect();
    let poset = FinitePoset::from_edges(labels, &edges)?;
    Ok(Nerve { poset, chains, base: f.clone() })
}

/// The `k`-fold nerve; `k = 0` returns a copy of `f`.
pub fn iterated_nerve(f: &FinitePoset, k: usize) -> Result<FinitePoset> {
    iterated_nerve_with_budget(f, k, DEFAULT_NERVE_BUDGET)
}

pub fn iterated_nerve_with_budget(f: &FinitePoset, k: usize, budget: u64) -> Result<FinitePoset> {
    let mut cur = f.clone();
    for _ in 0..k {
        cur = nerve_with_budget(&cur, budget)?.poset;
    }
    Ok(cur)
}

impl Nerve {
    /// The surjective p-morphism sending each chain to its maximum.
    pub fn max_map(&self) -> PMorphism {
        let map = self.chains.iter().map(|c| *c.last().unwrap()).collect();
        PMorphism::total(self.poset.clone(), self.base.clone(), map).expect("total map")
    }
}

pub fn max_map(f: &FinitePoset) -> Result<PMorphism> {
    if f.is_empty() {
        return Err(Error::EmptyPoset);
    }
    Ok(nerve(f)?.max_map())
}
