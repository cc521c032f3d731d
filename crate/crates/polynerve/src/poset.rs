//! Finite posets and the order-theoretic primitives used everywhere else.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::signature::Signature;

/// A set of element indices of one poset.
pub type ElementSet = FixedBitSet;

/// Label given to the top added by [`FinitePoset::completion`].
pub const COMPLETION_TOP: &str = "inf";

/// Width is computed by subset search and refuses larger inputs.
pub const WIDTH_LIMIT: usize = 20;

/// A finite partial order over labelled elements.
///
/// Elements are addressed by index; labels exist for I/O. All derived data
/// (up/down sets, covers, heights, depths) is computed once at construction.
#[derive(Clone)]
pub struct FinitePoset {
    labels: Vec<String>,
    index: HashMap<String, usize>,
    up: Vec<FixedBitSet>,
    down: Vec<FixedBitSet>,
    upper_covers: Vec<Vec<usize>>,
    lower_covers: Vec<Vec<usize>>,
    heights: Vec<usize>,
    depths: Vec<usize>,
    linear: Vec<usize>,
}

impl FinitePoset {
    /// Builds the poset generated by `edges` (pairs `a < b` over label indices),
    /// taking the reflexive-transitive closure.
    pub fn from_edges(labels: Vec<String>, edges: &[(usize, usize)]) -> Result<Self> {
        let n = labels.len();
        let mut index = HashMap::with_capacity(n);
        for (i, l) in labels.iter().enumerate() {
            if index.insert(l.clone(), i).is_some() {
                return Err(Error::DuplicateLabel(l.clone()));
            }
        }
        let mut succ: Vec<Vec<usize>> = vec![Vec::new(); n];
        let mut indeg = vec![0usize; n];
        for &(a, b) in edges {
            if a >= n || b >= n {
                return Err(Error::UnknownElement(format!("#{}", a.max(b))));
            }
            if a == b {
                return Err(Error::CycleDetected(labels[a].clone(), labels[b].clone()));
            }
            succ[a].push(b);
        }
        for s in succ.iter_mut() {
            s.sort_unstable();
            s.dedup();
        }
        for s in &succ {
            for &b in s {
                indeg[b] += 1;
            }
        }
        let mut queue: VecDeque<usize> = (0..n).filter(|&i| indeg[i] == 0).collect();
        let mut topo = Vec::with_capacity(n);
        while let Some(x) = queue.pop_front() {
            topo.push(x);
            for &y in &succ[x] {
                indeg[y] -= 1;
                if indeg[y] == 0 {
                    queue.push_back(y);
                }
            }
        }
        if topo.len() < n {
            let stuck = (0..n).find(|&i| indeg[i] > 0).unwrap();
            let other = (0..n)
                .find(|&j| indeg[j] > 0 && succ[j].contains(&stuck))
                .unwrap_or(stuck);
            return Err(Error::CycleDetected(labels[other].clone(), labels[stuck].clone()));
        }
        let mut pred: Vec<Vec<usize>> = vec![Vec::new(); n];
        for (a, s) in succ.iter().enumerate() {
            for &b in s {
                pred[b].push(a);
            }
        }
        let mut down = vec![FixedBitSet::with_capacity(n); n];
        for &y in &topo {
            let mut d = FixedBitSet::with_capacity(n);
            d.insert(y);
            for &x in &pred[y] {
                d.union_with(&down[x]);
            }
            down[y] = d;
        }
        Ok(Self::from_down_sets(labels, index, down, topo))
    }

    /// Convenience constructor over string labels; edges name their endpoints.
    pub fn build(labels: &[&str], edges: &[(&str, &str)]) -> Result<Self> {
        let owned: Vec<String> = labels.iter().map(|s| s.to_string()).collect();
        let pos: HashMap<&str, usize> = labels.iter().enumerate().map(|(i, l)| (*l, i)).collect();
        let mut idx = Vec::with_capacity(edges.len());
        for (a, b) in edges {
            let ia = *pos.get(a).ok_or_else(|| Error::UnknownElement(a.to_string()))?;
            let ib = *pos.get(b).ok_or_else(|| Error::UnknownElement(b.to_string()))?;
            idx.push((ia, ib));
        }
        Self::from_edges(owned, &idx)
    }

    fn from_down_sets(
        labels: Vec<String>,
        index: HashMap<String, usize>,
        down: Vec<FixedBitSet>,
        topo: Vec<usize>,
    ) -> Self {
        let n = labels.len();
        let mut up = vec![FixedBitSet::with_capacity(n); n];
        for (y, d) in down.iter().enumerate() {
            for x in d.ones() {
                up[x].insert(y);
            }
        }
        let mut lower_covers = vec![Vec::new(); n];
        for y in 0..n {
            let mut below = down[y].clone();
            below.set(y, false);
            let mut covered = FixedBitSet::with_capacity(n);
            for x in below.ones() {
                let mut sx = down[x].clone();
                sx.set(x, false);
                covered.union_with(&sx);
            }
            below.difference_with(&covered);
            lower_covers[y] = below.ones().collect();
        }
        let mut upper_covers = vec![Vec::new(); n];
        for y in 0..n {
            for &x in &lower_covers[y] {
                upper_covers[x].push(y);
            }
        }
        let mut heights = vec![0usize; n];
        for &y in &topo {
            heights[y] = lower_covers[y].iter().map(|&x| heights[x] + 1).max().unwrap_or(0);
        }
        let mut depths = vec![0usize; n];
        for &y in topo.iter().rev() {
            depths[y] = upper_covers[y].iter().map(|&x| depths[x] + 1).max().unwrap_or(0);
        }
        let mut linear: Vec<usize> = (0..n).collect();
        linear.sort_by_key(|&x| (heights[x], x));
        FinitePoset { labels, index, up, down, upper_covers, lower_covers, heights, depths, linear }
    }

    pub fn empty() -> Self {
        Self::from_edges(Vec::new(), &[]).expect("empty poset")
    }

    /// The chain `x0 < x1 < ... < x(n-1)`.
    pub fn chain(n: usize) -> Self {
        let labels = (0..n).map(|i| format!("x{i}")).collect();
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Self::from_edges(labels, &edges).expect("chain")
    }

    pub fn antichain(n: usize) -> Self {
        let labels = (0..n).map(|i| format!("x{i}")).collect();
        Self::from_edges(labels, &[]).expect("antichain")
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn label(&self, x: usize) -> &str {
        &self.labels[x]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.index.get(label).copied().ok_or_else(|| Error::UnknownElement(label.to_string()))
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.up[x].contains(y)
    }

    pub fn lt(&self, x: usize, y: usize) -> bool {
        x != y && self.up[x].contains(y)
    }

    pub fn comparable(&self, x: usize, y: usize) -> bool {
        self.leq(x, y) || self.leq(y, x)
    }

    pub fn empty_set(&self) -> ElementSet {
        FixedBitSet::with_capacity(self.len())
    }

    pub fn full_set(&self) -> ElementSet {
        let mut s = self.empty_set();
        s.insert_range(..);
        s
    }

    pub fn up_set(&self, x: usize) -> &ElementSet {
        &self.up[x]
    }

    pub fn down_set(&self, x: usize) -> &ElementSet {
        &self.down[x]
    }

    pub fn strict_up(&self, x: usize) -> ElementSet {
        let mut s = self.up[x].clone();
        s.set(x, false);
        s
    }

    pub fn strict_down(&self, x: usize) -> ElementSet {
        let mut s = self.down[x].clone();
        s.set(x, false);
        s
    }

    /// Upward closure of a set.
    pub fn up_closure(&self, set: &ElementSet) -> ElementSet {
        let mut s = self.empty_set();
        for x in set.ones() {
            s.union_with(&self.up[x]);
        }
        s
    }

    pub fn down_closure(&self, set: &ElementSet) -> ElementSet {
        let mut s = self.empty_set();
        for x in set.ones() {
            s.union_with(&self.down[x]);
        }
        s
    }

    pub fn is_up_closed(&self, set: &ElementSet) -> bool {
        set.ones().all(|x| self.up[x].is_subset(set))
    }

    pub fn is_down_closed(&self, set: &ElementSet) -> bool {
        set.ones().all(|x| self.down[x].is_subset(set))
    }

    pub fn upper_covers(&self, x: usize) -> &[usize] {
        &self.upper_covers[x]
    }

    pub fn lower_covers(&self, x: usize) -> &[usize] {
        &self.lower_covers[x]
    }

    /// Element indices sorted by height, then index: a canonical linear extension.
    pub fn linear_extension(&self) -> &[usize] {
        &self.linear
    }

    /// Length of the longest chain minus one.
    pub fn height(&self) -> Result<usize> {
        self.heights.iter().copied().max().ok_or(Error::EmptyPoset)
    }

    /// Height of the downset of `x`.
    pub fn height_of(&self, x: usize) -> usize {
        self.heights[x]
    }

    /// Height of the upset of `x`.
    pub fn depth_of(&self, x: usize) -> usize {
        self.depths[x]
    }

    pub fn minimal_elements(&self) -> Vec<usize> {
        (0..self.len()).filter(|&x| self.lower_covers[x].is_empty()).collect()
    }

    pub fn maximal_elements(&self) -> Vec<usize> {
        (0..self.len()).filter(|&x| self.upper_covers[x].is_empty()).collect()
    }

    /// The least element, if there is one.
    pub fn root(&self) -> Option<usize> {
        match self.minimal_elements().as_slice() {
            [r] => Some(*r),
            _ => None,
        }
    }

    pub fn is_rooted(&self) -> bool {
        self.root().is_some()
    }

    pub fn is_chain_set(&self, set: &ElementSet) -> bool {
        let members: Vec<usize> = set.ones().collect();
        members
            .iter()
            .enumerate()
            .all(|(i, &a)| members[i + 1..].iter().all(|&b| self.comparable(a, b)))
    }

    pub fn is_antichain_set(&self, set: &ElementSet) -> bool {
        let members: Vec<usize> = set.ones().collect();
        members
            .iter()
            .enumerate()
            .all(|(i, &a)| members[i + 1..].iter().all(|&b| !self.comparable(a, b)))
    }

    /// Size of the largest antichain.
    pub fn width(&self) -> Result<usize> {
        if self.is_empty() {
            return Err(Error::EmptyPoset);
        }
        if self.len() > WIDTH_LIMIT {
            return Err(Error::WidthLimit { limit: WIDTH_LIMIT, size: self.len() });
        }
        fn grow(p: &FinitePoset, next: usize, allowed: &ElementSet, size: usize, best: &mut usize) {
            *best = (*best).max(size);
            let remaining = allowed.ones().filter(|&y| y >= next).count();
            if size + remaining <= *best {
                return;
            }
            for x in allowed.ones().filter(|&y| y >= next) {
                let mut rest = allowed.clone();
                rest.difference_with(&p.up[x]);
                rest.difference_with(&p.down[x]);
                grow(p, x + 1, &rest, size + 1, best);
            }
        }
        let mut best = 0;
        grow(self, 0, &self.full_set(), 0, &mut best);
        Ok(best)
    }

    /// Connected components of the whole poset, each sorted, ordered by least member.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        self.components_of(&self.full_set())
    }

    /// Connected components of the subposet induced on `set`.
    pub fn components_of(&self, set: &ElementSet) -> Vec<Vec<usize>> {
        let mut unseen = set.clone();
        let mut out = Vec::new();
        while let Some(start) = unseen.ones().next() {
            unseen.set(start, false);
            let mut comp = vec![start];
            let mut stack = vec![start];
            while let Some(y) = stack.pop() {
                let mut nb = self.up[y].clone();
                nb.union_with(&self.down[y]);
                nb.intersect_with(&unseen);
                for z in nb.ones() {
                    unseen.set(z, false);
                    comp.push(z);
                    stack.push(z);
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Height of the subposet induced on `set`; `None` for the empty set.
    pub fn height_of_set(&self, set: &ElementSet) -> Option<usize> {
        let mut h = vec![0usize; self.len()];
        let mut best = None;
        for &y in &self.linear {
            if !set.contains(y) {
                continue;
            }
            let mut below = self.down[y].clone();
            below.set(y, false);
            below.intersect_with(set);
            h[y] = below.ones().map(|x| h[x] + 1).max().unwrap_or(0);
            best = best.max(Some(h[y]));
        }
        best
    }

    /// Connectedness type of the subposet induced on `set`.
    pub fn con_type_of(&self, set: &ElementSet) -> Signature {
        if self.is_convex(set) {
            return self.convex_con_type(set);
        }
        let heights = self.components_of(set).into_iter().map(|c| {
            let mut s = self.empty_set();
            s.extend(c);
            self.height_of_set(&s).unwrap() + 1
        });
        Signature::from_heights(heights).expect("component heights are positive")
    }

    pub fn con_type(&self) -> Signature {
        self.convex_con_type(&self.full_set())
    }

    pub fn is_convex(&self, set: &ElementSet) -> bool {
        let up = self.up_closure(set);
        let mut between = self.down_closure(set);
        between.intersect_with(&up);
        between.is_subset(set)
    }

    /// ConType for convex sets, walking covering edges only. Within a convex
    /// set comparability paths and maximal chains can both be taken through covers.
    pub(crate) fn convex_con_type(&self, set: &ElementSet) -> Signature {
        let n = self.len();
        let mut comp = vec![usize::MAX; n];
        let mut comp_height: Vec<usize> = Vec::new();
        let mut h = vec![0usize; n];
        for &y in &self.linear {
            if !set.contains(y) {
                continue;
            }
            h[y] = self.lower_covers[y]
                .iter()
                .filter(|&&x| set.contains(x))
                .map(|&x| h[x] + 1)
                .max()
                .unwrap_or(0);
        }
        for start in set.ones() {
            if comp[start] != usize::MAX {
                continue;
            }
            let c = comp_height.len();
            comp[start] = c;
            let mut best = h[start];
            let mut stack = vec![start];
            while let Some(y) = stack.pop() {
                for &z in self.upper_covers[y].iter().chain(self.lower_covers[y].iter()) {
                    if set.contains(z) && comp[z] == usize::MAX {
                        comp[z] = c;
                        best = best.max(h[z]);
                        stack.push(z);
                    }
                }
            }
            comp_height.push(best + 1);
        }
        Signature::from_heights(comp_height).expect("component heights are positive")
    }

    /// ConType of the strict upset of `x`.
    pub fn con_type_above(&self, x: usize) -> Signature {
        self.convex_con_type(&self.strict_up(x))
    }

    /// The rank function if the poset is graded: every maximal chain below each
    /// element has the same length, so rank equals height.
    pub fn rank_function(&self) -> Result<Option<Vec<usize>>> {
        if self.is_empty() {
            return Err(Error::EmptyPoset);
        }
        for y in 0..self.len() {
            if self.lower_covers[y].iter().any(|&x| self.heights[x] + 1 != self.heights[y]) {
                return Ok(None);
            }
        }
        Ok(Some(self.heights.clone()))
    }

    pub fn is_graded(&self) -> bool {
        matches!(self.rank_function(), Ok(Some(_)))
    }

    /// `up(x) ∩ down(y)`; requires `x <= y`.
    pub fn diamond(&self, x: usize, y: usize) -> Result<ElementSet> {
        if !self.leq(x, y) {
            return Err(Error::NotComparable(self.labels[x].clone(), self.labels[y].clone()));
        }
        let mut s = self.up[x].clone();
        s.intersect_with(&self.down[y]);
        Ok(s)
    }

    pub fn strict_diamond(&self, x: usize, y: usize) -> Result<ElementSet> {
        let mut s = self.diamond(x, y)?;
        s.set(x, false);
        s.set(y, false);
        Ok(s)
    }

    /// The poset with a fresh top labelled [`COMPLETION_TOP`] above everything.
    pub fn completion(&self) -> Result<FinitePoset> {
        if self.index.contains_key(COMPLETION_TOP) {
            return Err(Error::LabelCollision(COMPLETION_TOP.to_string()));
        }
        let n = self.len();
        let mut labels = self.labels.clone();
        labels.push(COMPLETION_TOP.to_string());
        let mut edges = self.cover_edges();
        edges.extend(self.maximal_elements().into_iter().map(|m| (m, n)));
        FinitePoset::from_edges(labels, &edges)
    }

    /// All covering pairs `(x, y)` with `y` covering `x`, sorted.
    pub fn cover_edges(&self) -> Vec<(usize, usize)> {
        let mut e: Vec<(usize, usize)> = (0..self.len())
            .flat_map(|x| self.upper_covers[x].iter().map(move |&y| (x, y)))
            .collect();
        e.sort_unstable();
        e
    }

    /// Rooted, and every downset is a chain.
    pub fn is_tree(&self) -> bool {
        self.is_rooted() && (0..self.len()).all(|x| self.lower_covers[x].len() <= 1)
    }

    /// The induced subposet on `set`, with the map from new to old indices.
    pub fn induced(&self, set: &ElementSet) -> (FinitePoset, Vec<usize>) {
        let members: Vec<usize> = set.ones().collect();
        let mut pos = vec![usize::MAX; self.len()];
        for (i, &x) in members.iter().enumerate() {
            pos[x] = i;
        }
        let labels = members.iter().map(|&x| self.labels[x].clone()).collect();
        let mut edges = Vec::new();
        for (i, &x) in members.iter().enumerate() {
            for y in self.up[x].ones() {
                if y != x && pos[y] != usize::MAX {
                    edges.push((i, pos[y]));
                }
            }
        }
        let p = FinitePoset::from_edges(labels, &edges).expect("induced subposet of a poset");
        (p, members)
    }

    /// The element of height `k` below `x` (for `k < 0`, of height `height(x) + k`).
    /// Needs the downset of `x` to be a chain.
    pub fn chain_element_at(&self, x: usize, k: isize) -> Result<usize> {
        if !self.is_chain_set(&self.down[x]) {
            return Err(Error::NotATree(self.labels[x].clone()));
        }
        let hx = self.heights[x] as isize;
        let target = if k >= 0 { k } else { hx + k };
        if target < 0 || target > hx {
            return Err(Error::IndexOutOfRange { index: k, height: self.heights[x] });
        }
        Ok(self.down[x].ones().find(|&y| self.heights[y] as isize == target).unwrap())
    }

    /// All maximal chains, each listed bottom-up, in lexicographic index order.
    pub fn maximal_chains(&self) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut path = Vec::new();
        fn walk(p: &FinitePoset, x: usize, path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            path.push(x);
            if p.upper_covers[x].is_empty() {
                out.push(path.clone());
            }
            for &y in &p.upper_covers[x] {
                walk(p, y, path, out);
            }
            path.pop();
        }
        for m in self.minimal_elements() {
            walk(self, m, &mut path, &mut out);
        }
        out.sort();
        out
    }

    /// Tree unravelling: the saturated chains starting at the root, ordered by
    /// extension, together with `last`, which sends a chain to its maximum.
    ///
    /// A tree node is labelled by its last element when that element has a
    /// single path from the root, and by the path `r/a/b` otherwise.
    pub fn tree_unravelling(&self) -> Result<Unravelling> {
        let root = self.root().ok_or(Error::NotRooted)?;
        let mut paths: Vec<Vec<usize>> = Vec::new();
        let mut parent: Vec<Option<usize>> = Vec::new();
        let mut stack = vec![(vec![root], None)];
        while let Some((path, par)) = stack.pop() {
            let id = paths.len();
            let last = *path.last().unwrap();
            for &y in self.upper_covers[last].iter().rev() {
                let mut next = path.clone();
                next.push(y);
                stack.push((next, Some(id)));
            }
            paths.push(path);
            parent.push(par);
        }
        let mut fiber = vec![0usize; self.len()];
        for p in &paths {
            fiber[*p.last().unwrap()] += 1;
        }
        let labels: Vec<String> = paths
            .iter()
            .map(|p| {
                let last = *p.last().unwrap();
                if fiber[last] == 1 {
                    self.labels[last].clone()
                } else {
                    p.iter().map(|&x| self.labels[x].as_str()).collect::<Vec<_>>().join("/")
                }
            })
            .collect();
        let edges: Vec<(usize, usize)> =
            parent.iter().enumerate().filter_map(|(i, p)| p.map(|p| (p, i))).collect();
        let tree = FinitePoset::from_edges(labels, &edges)?;
        let last = paths.iter().map(|p| *p.last().unwrap()).collect();
        Ok(Unravelling { tree, last, paths })
    }
}

/// Result of [`FinitePoset::tree_unravelling`]. Tree nodes are numbered in
/// depth-first order, children visited by increasing index, so `paths` is
/// sorted lexicographically.
#[derive(Clone, Debug)]
pub struct Unravelling {
    pub tree: FinitePoset,
    pub last: Vec<usize>,
    pub paths: Vec<Vec<usize>>,
}

impl PartialEq for FinitePoset {
    fn eq(&self, other: &Self) -> bool {
        self.labels == other.labels && self.up == other.up
    }
}

impl Eq for FinitePoset {}

impl fmt::Debug for FinitePoset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<(&str, &str)> = self
            .cover_edges()
            .into_iter()
            .map(|(a, b)| (self.labels[a].as_str(), self.labels[b].as_str()))
            .collect();
        f.debug_struct("FinitePoset")
            .field("elements", &self.labels)
            .field("covers", &edges)
            .finish()
    }
}

#[cfg(test)]
mod tests {
    fn set_of(n: usize, items: impl IntoIterator<Item = usize>) -> ElementSet {
        let mut s = FixedBitSet::with_capacity(n);
        s.extend(items);
        s
    }

    use super::*;

    fn kite() -> FinitePoset {
        FinitePoset::build(
            &["r", "a1", "a2", "b", "t"],
            &[("r", "a1"), ("a1", "a2"), ("r", "b"), ("a2", "t"), ("b", "t")],
        )
        .unwrap()
    }

    fn names(p: &FinitePoset, s: &ElementSet) -> Vec<String> {
        let mut v: Vec<String> = s.ones().map(|x| p.label(x).to_string()).collect();
        v.sort();
        v
    }

    #[test]
    fn closure_and_errors() {
        let f = kite();
        assert_eq!(f.len(), 5);
        assert_eq!(f.height().unwrap(), 3);
        let r = f.index_of("r").unwrap();
        let t = f.index_of("t").unwrap();
        assert!(f.lt(r, t));
        let single = FinitePoset::build(&["x"], &[]).unwrap();
        assert_eq!(single.height().unwrap(), 0);
        assert!(matches!(
            FinitePoset::build(&["x", "y"], &[("x", "y"), ("y", "x")]),
            Err(Error::CycleDetected(..))
        ));
        assert!(matches!(FinitePoset::build(&["x", "x"], &[]), Err(Error::DuplicateLabel(_))));
        assert_eq!(FinitePoset::empty().height(), Err(Error::EmptyPoset));
    }

    #[test]
    fn up_down_sets() {
        let f = kite();
        let r = f.index_of("r").unwrap();
        assert_eq!(names(&f, &f.strict_up(r)), ["a1", "a2", "b", "t"]);
        let c = FinitePoset::chain(3);
        assert_eq!(names(&c, c.down_set(1)), ["x0", "x1"]);
        assert_eq!(FinitePoset::chain(1).strict_up(0).count_ones(..), 0);
    }

    #[test]
    fn heights_depths_width() {
        let f = kite();
        assert_eq!(f.depth_of(f.index_of("b").unwrap()), 1);
        assert_eq!(f.height_of(f.index_of("a2").unwrap()), 2);
        assert_eq!(f.width().unwrap(), 2);
        assert_eq!(FinitePoset::antichain(4).height().unwrap(), 0);
        assert_eq!(FinitePoset::antichain(4).width().unwrap(), 4);
        assert_eq!(FinitePoset::chain(5).width().unwrap(), 1);
        assert!(matches!(FinitePoset::antichain(21).width(), Err(Error::WidthLimit { .. })));
    }

    #[test]
    fn components_and_con_type() {
        let f = kite();
        let r = f.index_of("r").unwrap();
        assert_eq!(f.components_of(&f.strict_up(r)).len(), 1);
        let g = FinitePoset::build(&["a1", "a2", "b"], &[("a1", "a2")]).unwrap();
        assert_eq!(g.connected_components().len(), 2);
        assert_eq!(g.con_type().to_string(), "2.1");
        assert!(FinitePoset::empty().connected_components().is_empty());
        assert!(FinitePoset::empty().con_type().is_epsilon());
        assert_eq!(f.con_type().to_string(), "4");
        let t = f.index_of("t").unwrap();
        let d = f.strict_diamond(r, t).unwrap();
        assert_eq!(names(&f, &d), ["a1", "a2", "b"]);
        assert_eq!(f.con_type_of(&d).to_string(), "2.1");
    }

    #[test]
    fn non_convex_con_type_uses_induced_order() {
        let c = FinitePoset::chain(3);
        let s = set_of(3, [0, 2]);
        assert_eq!(c.con_type_of(&s).to_string(), "2");
    }

    #[test]
    fn gradedness() {
        assert!(kite().rank_function().unwrap().is_none());
        let p = FinitePoset::build(
            &["a", "b", "c", "d", "e", "f"],
            &[("a", "b"), ("b", "d"), ("a", "c"), ("c", "d"), ("a", "e"), ("e", "f"), ("f", "d")],
        )
        .unwrap();
        assert!(p.rank_function().unwrap().is_none());
        let q = FinitePoset::build(&["a", "b", "c", "d"], &[("a", "b"), ("a", "c"), ("b", "d"), ("c", "d")])
            .unwrap();
        assert_eq!(q.rank_function().unwrap(), Some(vec![0, 1, 1, 2]));
        assert_eq!(FinitePoset::empty().rank_function(), Err(Error::EmptyPoset));
    }

    #[test]
    fn diamonds() {
        let c = FinitePoset::chain(3);
        assert_eq!(names(&c, &c.strict_diamond(0, 2).unwrap()), ["x1"]);
        assert_eq!(c.strict_diamond(0, 1).unwrap().count_ones(..), 0);
        assert!(matches!(c.diamond(2, 0), Err(Error::NotComparable(..))));
    }

    #[test]
    fn completion() {
        let a = FinitePoset::antichain(2).completion().unwrap();
        assert_eq!(a.len(), 3);
        let top = a.index_of(COMPLETION_TOP).unwrap();
        assert!(a.lt(0, top) && a.lt(1, top));
        assert_eq!(FinitePoset::empty().completion().unwrap().len(), 1);
        let f = kite().completion().unwrap();
        assert_eq!(f.len(), 6);
        assert_eq!(f.maximal_elements(), vec![f.index_of(COMPLETION_TOP).unwrap()]);
        assert!(matches!(f.completion(), Err(Error::LabelCollision(_))));
    }

    #[test]
    fn unravelling_kite() {
        let f = kite();
        let u = f.tree_unravelling().unwrap();
        assert!(u.tree.is_tree());
        assert_eq!(u.tree.len(), 6);
        let mut branch_lengths: Vec<usize> = u.tree.maximal_chains().iter().map(|c| c.len()).collect();
        branch_lengths.sort();
        assert_eq!(branch_lengths, vec![3, 4]);
        assert!(u.tree.index_of("r/b/t").is_ok());
        assert!(u.tree.index_of("a2").is_ok());
        assert!(matches!(FinitePoset::antichain(2).tree_unravelling(), Err(Error::NotRooted)));
    }

    #[test]
    fn chain_elements() {
        let c = FinitePoset::chain(4);
        assert_eq!(c.chain_element_at(3, 0).unwrap(), 0);
        assert_eq!(c.chain_element_at(3, -1).unwrap(), 2);
        assert!(matches!(c.chain_element_at(1, 2), Err(Error::IndexOutOfRange { .. })));
        let f = kite();
        assert!(matches!(f.chain_element_at(f.index_of("t").unwrap(), 0), Err(Error::NotATree(_))));
    }
}
