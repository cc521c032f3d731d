use std::collections::BTreeSet;

use crate::poset::Unravelling;

use super::{check_witness, ensure, tree_meet, Builder, ConstructionResult, TraceStep};
use crate::error::{Error, Result};
use crate::logic::validates_sfl;
use crate::morphism::PMorphism;
use crate::poset::FinitePoset;
use crate::signature::Signature;
use crate::starlike::first_diamond_disconnection;

/// Signatures used to spot-check diamond-connectedness of a nervified frame of
/// height `n`: several multi-branch shapes, wide forks, and chains of height at
/// least `n`.
pub fn diamond_sample(n: usize) -> Vec<Signature> {
    let mut out: Vec<Signature> = ["2.1", "2^2", "3.1", "2.1^2", "3^2", "3.2.1"]
        .iter()
        .map(|s| s.parse().expect("literal signature"))
        .collect();
    let wide = n.max(3);
    out.extend([Signature::ones(wide), Signature::ones(wide + 1)]);
    out.extend((n.max(1)..=n + 1).map(Signature::chain));
    out
}

/// Nervification of a graded rooted frame: unravel it into its tree, drop the
/// tree tops, and for each top `t` of `f` line up the tree tops over `t` and
/// join each neighbouring pair by a chevron chain rising from their meet.
///
/// A top `t` with a single tree top over it keeps that top. The parent of a
/// tree top in the middle of a line ends up below two chevron tops, which only
/// adds a forbidden `1^2` pattern when `t` is its image's sole successor; see
/// [`fiber_order`] for how the line is chosen.
pub fn nervify(f: &FinitePoset) -> Result<ConstructionResult> {
    nervify_checked(f, None, &BTreeSet::new())
}

/// [`nervify`] for a frame of the starlike logic of `lambda`, checking that the
/// output still validates the logic (and is diamond-connected for `lambda`)
/// instead of comparing upset types point by point.
pub fn nervify_preserving(f: &FinitePoset, lambda: &[Signature]) -> Result<ConstructionResult> {
    if f.is_rooted() && f.is_graded() && !validates_sfl(f, lambda)? {
        return Err(Error::PreconditionViolated("input does not validate the starlike logic".into()));
    }
    let first = match nervify_checked(f, Some(lambda), &BTreeSet::new()) {
        Err(Error::ConstructionPostconditionFailed(reason)) => reason,
        other => return other,
    };
    // Cut some lines into shorter runs, fewest cuts first; runs over different
    // tops can still connect the upsets that a single line would.
    let unr = f.tree_unravelling()?;
    let links: Vec<(usize, usize)> = f
        .maximal_elements()
        .into_iter()
        .flat_map(|t| (0..fiber_order(f, &unr, t).len().saturating_sub(1)).map(move |i| (t, i)))
        .collect();
    let mut tried = 0;
    for size in 1..=links.len() {
        for cut in combinations(links.len(), size) {
            if tried == CUT_SEARCH_LIMIT {
                break;
            }
            tried += 1;
            let cuts: BTreeSet<(usize, usize)> = cut.iter().map(|&i| links[i]).collect();
            if let Ok(r) = nervify_checked(f, Some(lambda), &cuts) {
                return Ok(r);
            }
        }
    }
    Err(Error::ConstructionPostconditionFailed(format!("{first}; no cut of the chevron lines helps")))
}

/// Layouts with cut lines tried by [`nervify_preserving`] before giving up.
const CUT_SEARCH_LIMIT: usize = 4096;

/// `k`-subsets of `0..n` in lexicographic order.
fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..k).collect();
    if k > n {
        return out;
    }
    loop {
        out.push(cur.clone());
        let Some(i) = (0..k).rev().find(|&i| cur[i] < n - k + i) else {
            return out;
        };
        cur[i] += 1;
        for j in i + 1..k {
            cur[j] = cur[j - 1] + 1;
        }
    }
}

/// `cuts` lists `(t, i)` pairs: no chevron joins the `i`-th and next tree top over `t`.
fn nervify_checked(
    f: &FinitePoset,
    lambda: Option<&[Signature]>,
    cuts: &BTreeSet<(usize, usize)>,
) -> Result<ConstructionResult> {
    if !f.is_rooted() {
        return Err(Error::NotRooted);
    }
    if !f.is_graded() {
        return Err(Error::NotGraded);
    }
    let unr = f.tree_unravelling()?;
    let tree = &unr.tree;
    let is_top = |t: usize| tree.upper_covers(t).is_empty();

    let mut b = Builder::new();
    let mut pos = vec![usize::MAX; tree.len()];
    for t in (0..tree.len()).filter(|&t| !is_top(t)) {
        pos[t] = b.add(tree.label(t).to_string(), unr.last[t]);
    }
    for (lo, hi) in tree.cover_edges() {
        if !is_top(hi) {
            b.edge(pos[lo], pos[hi]);
        }
    }

    let mut trace = Vec::new();
    for t in f.maximal_elements() {
        let fiber = fiber_order(f, &unr, t);
        let joined = |i: usize| i + 1 < fiber.len() && !cuts.contains(&(t, i));
        // Tree tops with no chevron on either side keep their place.
        for (i, &p) in fiber.iter().enumerate() {
            if !joined(i) && (i == 0 || !joined(i - 1)) {
                pos[p] = b.add(tree.label(p).to_string(), t);
                if let Some(&parent) = tree.lower_covers(p).first() {
                    b.edge(pos[parent], pos[p]);
                }
            }
        }
        if fiber.len() == 1 {
            continue;
        }
        let first_node = b.labels.len();
        let first_edge = b.edges.len();
        let rho_t = f.height_of(t);
        for (i, pair) in fiber.windows(2).enumerate() {
            if !joined(i) {
                continue;
            }
            let (p, q) = (pair[0], pair[1]);
            let l = tree.height_of(tree_meet(tree, p, q));
            let k = rho_t - l - 1;
            let mut below = None;
            for j in 1..=k {
                let a = b.add(format!("a({},{j})@{}", i + 1, f.label(t)), t);
                for side in [p, q] {
                    let x = tree.chain_element_at(side, (l + j) as isize)?;
                    b.edge(pos[x], a);
                }
                if let Some(prev) = below {
                    b.edge(prev, a);
                }
                below = Some(a);
            }
        }
        let mut step = TraceStep::named("chevrons");
        step.added_elements = b.labels[first_node..].to_vec();
        step.added_edges = b.edge_names(first_edge);
        trace.push(step);
    }

    let kept: Vec<usize> = pos.iter().copied().filter(|&x| x != usize::MAX).collect();
    let (output, witness) = b.finish(f)?;
    check_witness(&witness)?;
    ensure(output.is_graded(), || "output is not graded".into())?;
    let mut sample = diamond_sample(f.height()?);
    match lambda {
        None => check_upset_types(&witness, kept)?,
        Some(lambda) => {
            ensure(validates_sfl(&output, lambda)?, || "output does not validate the starlike logic".into())?;
            sample.extend(lambda.iter().cloned());
        }
    }
    for alpha in sample {
        if let Some((x, y)) = first_diamond_disconnection(&output, &alpha) {
            return Err(Error::ConstructionPostconditionFailed(format!(
                "strict diamond {}..{} is not {alpha}-connected",
                output.label(x),
                output.label(y)
            )));
        }
    }
    if trace.is_empty() {
        trace.push(TraceStep::named("no chevrons needed"));
    }
    Ok(ConstructionResult { output, witness, trace })
}

/// The tree tops over `t`, lined up so that every subtree's members stay
/// contiguous (needed for the chevrons above any trunk node to stay connected).
///
/// Parents whose image has successors other than `t` are pushed to the two
/// ends of the line when the tree shape allows it; among the remaining choices
/// the order is lexicographic on branch labels.
pub(crate) fn fiber_order(f: &FinitePoset, unr: &Unravelling, t: usize) -> Vec<usize> {
    let tree = &unr.tree;
    let members: Vec<usize> =
        (0..tree.len()).filter(|&p| tree.upper_covers(p).is_empty() && unr.last[p] == t).collect();
    let crowded: Vec<usize> = members
        .iter()
        .copied()
        .filter(|&p| {
            let parent = tree.lower_covers(p).first().map(|&q| unr.last[q]);
            parent.is_some_and(|q| f.strict_up(q).count_ones(..) > 1)
        })
        .collect();
    let at_ends = |line: &[usize]| {
        line.iter().enumerate().all(|(i, p)| i == 0 || i + 1 == line.len() || !crowded.contains(p))
    };
    let mut candidates = vec![(None, None)];
    for &a in &crowded {
        candidates.push((Some(a), None));
        candidates.push((None, Some(a)));
        for &b in &crowded {
            if a != b {
                candidates.push((Some(a), Some(b)));
            }
        }
    }
    let mut fallback = None;
    for (first, last) in candidates {
        let line = arrange(f, unr, members.clone(), 1, first, last);
        if at_ends(&line) {
            return line;
        }
        fallback.get_or_insert(line);
    }
    fallback.unwrap_or_default()
}

/// Orders `members` (tree tops sharing their first `depth` path elements) by
/// grouping on the element at `depth`, keeping `first` and `last` at the ends.
fn arrange(
    f: &FinitePoset,
    unr: &Unravelling,
    members: Vec<usize>,
    depth: usize,
    first: Option<usize>,
    last: Option<usize>,
) -> Vec<usize> {
    if members.len() <= 1 {
        return members;
    }
    let mut groups: Vec<(usize, Vec<usize>)> = Vec::new();
    for p in members {
        let key = unr.paths[p][depth];
        match groups.iter_mut().find(|g| g.0 == key) {
            Some(g) => g.1.push(p),
            None => groups.push((key, vec![p])),
        }
    }
    let rank = |g: &Vec<usize>| {
        if first.is_some_and(|x| g.contains(&x)) {
            0
        } else if last.is_some_and(|x| g.contains(&x)) {
            2
        } else {
            1
        }
    };
    groups.sort_by(|a, b| rank(&a.1).cmp(&rank(&b.1)).then_with(|| f.label(a.0).cmp(f.label(b.0))));
    groups.into_iter().flat_map(|(_, g)| arrange(f, unr, g, depth + 1, first, last)).collect()
}

/// Upset types of kept tree nodes match their images, except that a parent
/// whose image has a single successor may sit below two chevron tops.
fn check_upset_types(witness: &PMorphism, kept: Vec<usize>) -> Result<()> {
    let (src, dst) = (witness.source(), witness.target());
    let single = Signature::ones(1);
    let pair = Signature::ones(2);
    for x in kept {
        let fx = witness.image(x).expect("total witness");
        let (here, there) = (src.con_type_above(x), dst.con_type_above(fx));
        let tolerated = there == single && here == pair;
        if here != there && !tolerated {
            return Err(Error::ConstructionPostconditionFailed(format!(
                "upset type {here} at {} differs from {there} at {}",
                src.label(x),
                dst.label(fx)
            )));
        }
    }
    Ok(())
}
