//! P-morphisms, up-reductions and the backtracking searches built on them.

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::poset::{ElementSet, FinitePoset};

/// Default cap on visited search states.
pub const DEFAULT_SEARCH_BUDGET: u64 = 10_000_000;

/// A map from an upward-closed part of `source` into `target`.
///
/// `map[x]` is `None` outside the domain. Construction rejects domains that are
/// not upward closed; the forth/back conditions are checked on demand.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PMorphism {
    source: FinitePoset,
    target: FinitePoset,
    map: Vec<Option<usize>>,
}

impl PMorphism {
    pub fn new(source: FinitePoset, target: FinitePoset, map: Vec<Option<usize>>) -> Result<Self> {
        if map.len() != source.len() {
            return Err(Error::InvalidInput(format!(
                "map has {} entries for a source of {} elements",
                map.len(),
                source.len()
            )));
        }
        if let Some(bad) = map.iter().flatten().find(|&&v| v >= target.len()) {
            return Err(Error::UnknownElement(format!("#{bad}")));
        }
        for x in 0..source.len() {
            if map[x].is_some() && source.up_set(x).ones().any(|y| map[y].is_none()) {
                return Err(Error::DomainNotUpClosed(source.label(x).to_string()));
            }
        }
        Ok(PMorphism { source, target, map })
    }

    pub fn total(source: FinitePoset, target: FinitePoset, map: Vec<usize>) -> Result<Self> {
        Self::new(source, target, map.into_iter().map(Some).collect())
    }

    pub fn identity(f: &FinitePoset) -> Self {
        PMorphism { source: f.clone(), target: f.clone(), map: (0..f.len()).map(Some).collect() }
    }

    pub fn source(&self) -> &FinitePoset {
        &self.source
    }

    pub fn target(&self) -> &FinitePoset {
        &self.target
    }

    pub fn image(&self, x: usize) -> Option<usize> {
        self.map[x]
    }

    pub fn map(&self) -> &[Option<usize>] {
        &self.map
    }

    pub fn domain(&self) -> Vec<usize> {
        (0..self.map.len()).filter(|&x| self.map[x].is_some()).collect()
    }

    pub fn domain_set(&self) -> ElementSet {
        let mut s = self.source.empty_set();
        s.extend(self.domain());
        s
    }

    pub fn is_total(&self) -> bool {
        self.map.iter().all(Option::is_some)
    }

    /// Forth and back: `f(up(x)) = up(f(x))` for every `x` in the domain.
    pub fn is_p_morphism(&self) -> bool {
        for x in 0..self.source.len() {
            let Some(fx) = self.map[x] else { continue };
            let mut img = self.target.empty_set();
            for y in self.source.up_set(x).ones() {
                img.insert(self.map[y].expect("domain is up-closed"));
            }
            if img != *self.target.up_set(fx) {
                return false;
            }
        }
        true
    }

    pub fn is_surjective(&self) -> bool {
        let mut hit = self.target.empty_set();
        hit.extend(self.map.iter().flatten().copied());
        hit.count_ones(..) == self.target.len()
    }

    pub fn is_up_reduction(&self) -> bool {
        self.is_surjective() && self.is_p_morphism()
    }

    /// `next ∘ self`. The target of `self` must carry the same labels and order
    /// as the source of `next`.
    pub fn then(&self, next: &PMorphism) -> Result<PMorphism> {
        if self.target != next.source {
            return Err(Error::InvalidInput("composed maps do not share a middle poset".into()));
        }
        let map = self.map.iter().map(|m| m.and_then(|y| next.map[y])).collect();
        PMorphism::new(self.source.clone(), next.target.clone(), map)
    }

    /// The unique element sent to the root of the target, if the map is pointed:
    /// its domain is the upset of that element and nothing else reaches the root.
    pub fn apex(&self) -> Option<usize> {
        let root = self.target.root()?;
        let pre: Vec<usize> = (0..self.map.len()).filter(|&x| self.map[x] == Some(root)).collect();
        match pre.as_slice() {
            [x] if *self.source.up_set(*x) == self.domain_set() => Some(*x),
            _ => None,
        }
    }
}

/// Searches for an up-reduction of `f` onto the rooted poset `q`.
pub fn find_up_reduction(f: &FinitePoset, q: &FinitePoset) -> Result<Option<PMorphism>> {
    find_up_reduction_with_budget(f, q, DEFAULT_SEARCH_BUDGET)
}

/// Backtracking over pointed up-reductions, which suffice: any up-reduction
/// onto a rooted target restricts to one whose root fiber is a single maximal
/// element of the original root fiber. Apexes are tried by decreasing height;
/// inside an apex, domain elements are assigned top-down and candidate images
/// are tried in the target's canonical linear extension, so the first witness
/// found is the least one in that order.
pub fn find_up_reduction_with_budget(
    f: &FinitePoset,
    q: &FinitePoset,
    budget: u64,
) -> Result<Option<PMorphism>> {
    let root = q.root().ok_or(Error::TargetNotRooted)?;
    if f.is_empty() {
        return Ok(None);
    }
    let q_height = q.height()?;
    let mut apexes: Vec<usize> = (0..f.len()).collect();
    apexes.sort_by_key(|&x| (std::cmp::Reverse(f.height_of(x)), x));
    let values: Vec<usize> = q.linear_extension().iter().copied().filter(|&v| v != root).collect();
    let mut visited = 0u64;
    for apex in apexes {
        if f.depth_of(apex) < q_height || f.up_set(apex).count_ones(..) < q.len() {
            continue;
        }
        let mut order: Vec<usize> = f.up_set(apex).ones().filter(|&y| y != apex).collect();
        order.sort_by_key(|&y| (std::cmp::Reverse(f.height_of(y)), y));
        let mut search = PointedSearch {
            f,
            q,
            apex,
            order: &order,
            values: &values,
            assign: vec![usize::MAX; f.len()],
            img_up: vec![FixedBitSet::new(); f.len()],
            visited: &mut visited,
            budget,
        };
        if search.extend(0)? {
            let mut map = vec![None; f.len()];
            for &y in &order {
                map[y] = Some(search.assign[y]);
            }
            map[apex] = Some(root);
            return Ok(Some(PMorphism::new(f.clone(), q.clone(), map)?));
        }
    }
    Ok(None)
}

struct PointedSearch<'a> {
    f: &'a FinitePoset,
    q: &'a FinitePoset,
    apex: usize,
    order: &'a [usize],
    values: &'a [usize],
    assign: Vec<usize>,
    img_up: Vec<FixedBitSet>,
    visited: &'a mut u64,
    budget: u64,
}

impl PointedSearch<'_> {
    /// Assigns `order[i..]`, then checks back at the apex.
    fn extend(&mut self, i: usize) -> Result<bool> {
        if i == self.order.len() {
            return Ok(self.apex_ok());
        }
        let y = self.order[i];
        for &v in self.values {
            *self.visited += 1;
            if *self.visited > self.budget {
                return Err(Error::SearchBudgetExceeded(self.budget));
            }
            if !self.f.upper_covers(y).iter().all(|&z| self.q.leq(v, self.assign[z])) {
                continue;
            }
            let mut img = self.q.empty_set();
            img.insert(v);
            for &z in self.f.upper_covers(y) {
                img.union_with(&self.img_up[z]);
            }
            if img != *self.q.up_set(v) {
                continue;
            }
            self.assign[y] = v;
            self.img_up[y] = img;
            if self.extend(i + 1)? {
                return Ok(true);
            }
        }
        self.assign[y] = usize::MAX;
        Ok(false)
    }

    fn apex_ok(&self) -> bool {
        let mut img = self.q.empty_set();
        img.extend(self.q.root());
        for &z in self.f.upper_covers(self.apex) {
            img.union_with(&self.img_up[z]);
        }
        img.count_ones(..) == self.q.len()
    }
}

/// Jankov-Fine validity: `f` validates the formula of `q` exactly when `f` has
/// no up-reduction onto `q`.
pub fn validates_jankov(f: &FinitePoset, q: &FinitePoset) -> Result<bool> {
    Ok(find_up_reduction(f, q)?.is_none())
}

pub fn validates_jankov_with_budget(f: &FinitePoset, q: &FinitePoset, budget: u64) -> Result<bool> {
    Ok(find_up_reduction_with_budget(f, q, budget)?.is_none())
}

fn invariant(p: &FinitePoset, x: usize) -> (usize, usize, usize, usize, usize, usize) {
    (
        p.height_of(x),
        p.depth_of(x),
        p.up_set(x).count_ones(..),
        p.down_set(x).count_ones(..),
        p.upper_covers(x).len(),
        p.lower_covers(x).len(),
    )
}

/// An order isomorphism `f -> g` as an index map, if one exists.
pub fn are_isomorphic(f: &FinitePoset, g: &FinitePoset) -> Result<Option<Vec<usize>>> {
    find_isomorphism(f, g, DEFAULT_SEARCH_BUDGET)
}

pub fn find_isomorphism(f: &FinitePoset, g: &FinitePoset, budget: u64) -> Result<Option<Vec<usize>>> {
    if f.len() != g.len() {
        return Ok(None);
    }
    let key_f: Vec<_> = (0..f.len()).map(|x| invariant(f, x)).collect();
    let key_g: Vec<_> = (0..g.len()).map(|x| invariant(g, x)).collect();
    let mut sf = key_f.clone();
    let mut sg = key_g.clone();
    sf.sort_unstable();
    sg.sort_unstable();
    if sf != sg {
        return Ok(None);
    }
    // Visit each component breadth-first along covers so that every element
    // after the first in its component has an already-placed neighbour.
    let mut order = Vec::with_capacity(f.len());
    let mut anchor: Vec<Option<(usize, bool)>> = vec![None; f.len()];
    let mut seen = vec![false; f.len()];
    for s in 0..f.len() {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(y) = queue.pop_front() {
            order.push(y);
            for (&z, above) in f
                .upper_covers(y)
                .iter()
                .map(|z| (z, true))
                .chain(f.lower_covers(y).iter().map(|z| (z, false)))
            {
                if !seen[z] {
                    seen[z] = true;
                    anchor[z] = Some((y, above));
                    queue.push_back(z);
                }
            }
        }
    }
    let mut search = IsoSearch {
        f,
        g,
        key_f: &key_f,
        key_g: &key_g,
        order: &order,
        anchor: &anchor,
        assign: vec![usize::MAX; f.len()],
        used: vec![false; g.len()],
        visited: 0,
        budget,
    };
    if search.extend(0)? {
        Ok(Some(search.assign))
    } else {
        Ok(None)
    }
}

type Key = (usize, usize, usize, usize, usize, usize);

struct IsoSearch<'a> {
    f: &'a FinitePoset,
    g: &'a FinitePoset,
    key_f: &'a [Key],
    key_g: &'a [Key],
    order: &'a [usize],
    anchor: &'a [Option<(usize, bool)>],
    assign: Vec<usize>,
    used: Vec<bool>,
    visited: u64,
    budget: u64,
}

impl IsoSearch<'_> {
    fn extend(&mut self, i: usize) -> Result<bool> {
        if i == self.order.len() {
            return Ok(true);
        }
        let y = self.order[i];
        let candidates: Vec<usize> = match self.anchor[y] {
            // `y` was reached from `a`; `above` means `y` covers `a`.
            Some((a, above)) => {
                let ga = self.assign[a];
                if above {
                    self.g.upper_covers(ga).to_vec()
                } else {
                    self.g.lower_covers(ga).to_vec()
                }
            }
            None => (0..self.g.len()).collect(),
        };
        for c in candidates {
            if self.used[c] || self.key_g[c] != self.key_f[y] {
                continue;
            }
            self.visited += 1;
            if self.visited > self.budget {
                return Err(Error::SearchBudgetExceeded(self.budget));
            }
            let consistent = self.order[..i].iter().all(|&w| {
                let gw = self.assign[w];
                self.f.leq(y, w) == self.g.leq(c, gw) && self.f.leq(w, y) == self.g.leq(gw, c)
            });
            if !consistent {
                continue;
            }
            self.assign[y] = c;
            self.used[c] = true;
            if self.extend(i + 1)? {
                return Ok(true);
            }
            self.used[c] = false;
        }
        self.assign[y] = usize::MAX;
        Ok(false)
    }
}

/// Some order-preserving surjection `f -> g`, if one exists.
pub fn find_monotone_surjection(f: &FinitePoset, g: &FinitePoset, budget: u64) -> Result<Option<Vec<usize>>> {
    if g.len() > f.len() {
        return Ok(None);
    }
    if f.is_empty() {
        return Ok(Some(Vec::new()));
    }
    let order = f.linear_extension().to_vec();
    let mut assign = vec![usize::MAX; f.len()];
    let mut hits = vec![0usize; g.len()];
    let mut visited = 0u64;
    fn go(
        f: &FinitePoset,
        g: &FinitePoset,
        order: &[usize],
        i: usize,
        assign: &mut [usize],
        hits: &mut [usize],
        missing: usize,
        visited: &mut u64,
        budget: u64,
    ) -> Result<bool> {
        if missing > order.len() - i {
            return Ok(false);
        }
        if i == order.len() {
            return Ok(true);
        }
        let y = order[i];
        for v in 0..g.len() {
            *visited += 1;
            if *visited > budget {
                return Err(Error::SearchBudgetExceeded(budget));
            }
            if !f.lower_covers(y).iter().all(|&x| g.leq(assign[x], v)) {
                continue;
            }
            assign[y] = v;
            hits[v] += 1;
            let m = if hits[v] == 1 { missing - 1 } else { missing };
            if go(f, g, order, i + 1, assign, hits, m, visited, budget)? {
                return Ok(true);
            }
            hits[v] -= 1;
        }
        assign[y] = usize::MAX;
        Ok(false)
    }
    if go(f, g, &order, 0, &mut assign, &mut hits, g.len(), &mut visited, budget)? {
        Ok(Some(assign))
    } else {
        Ok(None)
    }
}

pub fn exists_monotone_surjection(f: &FinitePoset, g: &FinitePoset) -> Result<bool> {
    Ok(find_monotone_surjection(f, g, DEFAULT_SEARCH_BUDGET)?.is_some())
}
