use std::collections::BTreeMap;

use super::{check_con_types, check_witness, ensure, require_frame, tree_meet, Builder, ConstructionResult, TraceStep};
use crate::error::{Error, Result};
use crate::logic::{scott_frame_conditions, validates_sfl};
use crate::poset::FinitePoset;
use crate::signature::Signature;

/// Gradification when `2.1` is in `lambda`: unravel `f` into its tree, pad
/// every branch to the height of `f`, then merge the new tops lying over the
/// same top of `f`.
///
/// Tops whose parent has only tops as children share a single padding chain
/// mapped to the parent's image; padding them separately would split the
/// parent's strict upset into several chains.
pub fn gradify_with_scott(f: &FinitePoset, lambda: &[Signature]) -> Result<ConstructionResult> {
    require_frame(f, lambda)?;
    if !lambda.contains(&Signature::scott()) {
        return Err(Error::PreconditionViolated("2.1 must belong to the signature set".into()));
    }
    let n = f.height()?;
    if n <= 1 {
        return Ok(ConstructionResult::unchanged(f, "already graded"));
    }
    let unr = f.tree_unravelling()?;
    let tree = &unr.tree;
    let mut b = Builder::new();
    let mut pos = vec![usize::MAX; tree.len()];
    for t in 0..tree.len() {
        if !tree.upper_covers(t).is_empty() {
            pos[t] = b.add(tree.label(t).to_string(), unr.last[t]);
        }
    }
    for (lo, hi) in tree.cover_edges() {
        if pos[hi] != usize::MAX {
            b.edge(pos[lo], pos[hi]);
        }
    }

    let mut pad = TraceStep::named("pad branches");
    let mut merge = TraceStep::named("merge tops");
    let first_edge = b.edges.len();
    let mut hats: BTreeMap<usize, usize> = BTreeMap::new();
    let mut classes: BTreeMap<usize, Vec<String>> = BTreeMap::new();
    let is_top = |t: usize| tree.upper_covers(t).is_empty();
    // A node whose children are all tops pads them with one shared chain, so its
    // strict upset stays connected; other tops get a chain of their own.
    let mut shared: Vec<Option<usize>> = vec![None; tree.len()];
    for t in (0..tree.len()).filter(|&t| is_top(t)) {
        let u = unr.last[t];
        let m = n - tree.height_of(t);
        let parent = tree.lower_covers(t)[0];
        let below = if tree.upper_covers(parent).iter().all(|&c| is_top(c)) {
            *shared[parent].get_or_insert_with(|| {
                let mut below = pos[parent];
                for i in 0..m {
                    let x = b.add(format!("s({i})@{}", tree.label(parent)), unr.last[parent]);
                    pad.added_elements.push(b.labels[x].clone());
                    b.edge(below, x);
                    below = x;
                }
                below
            })
        } else {
            let mut below = pos[parent];
            for i in 0..m {
                let x = b.add(format!("t*({i})@{}", tree.label(t)), u);
                pad.added_elements.push(b.labels[x].clone());
                b.edge(below, x);
                below = x;
            }
            below
        };
        let hat = *hats.entry(u).or_insert_with(|| b.add(format!("hat@{}", f.label(u)), u));
        b.edge(below, hat);
        classes.entry(u).or_default().push(format!("t*({m})@{}", tree.label(t)));
    }
    pad.added_edges = b.edge_names(first_edge);
    merge.added_elements = hats.values().map(|&h| b.labels[h].clone()).collect();
    merge.identified_classes = classes.into_values().collect();

    let (output, witness) = b.finish(f)?;
    check_witness(&witness)?;
    ensure(output.is_graded(), || "output is not graded".into())?;
    ensure(output.is_rooted(), || "output is not rooted".into())?;
    ensure(output.height()? == n, || "height changed".into())?;
    ensure(validates_sfl(&output, lambda)?, || "output does not validate the starlike logic".into())?;
    ensure(scott_frame_conditions(&output, lambda)?, || "depth conditions fail on the output".into())?;
    Ok(ConstructionResult { output, witness, trace: vec![pad, merge] })
}

/// Gradification when `2.1` is not in `lambda`: unravel `f` into its tree and
/// bridge tree tops over the same top of `f` with zigzag paths, hung from
/// their meet by scaffolding chains that keep ranks consistent.
///
/// The tree tops over each top are lined up in lexicographic branch order and
/// only neighbours are bridged. Any two tops above a tree node are then joined
/// through bridges that all hang above that node, which is the connectivity
/// the construction needs, while keeping fewer crowded points for nervification.
pub fn gradify_without_scott(f: &FinitePoset, lambda: &[Signature]) -> Result<ConstructionResult> {
    require_frame(f, lambda)?;
    if lambda.contains(&Signature::scott()) {
        return Err(Error::PreconditionViolated("2.1 must not belong to the signature set".into()));
    }
    if f.height()? <= 1 {
        return Ok(ConstructionResult::unchanged(f, "already graded"));
    }
    let unr = f.tree_unravelling()?;
    let tree = &unr.tree;
    let mut b = Builder::new();
    for t in 0..tree.len() {
        b.add(tree.label(t).to_string(), unr.last[t]);
    }
    for (lo, hi) in tree.cover_edges() {
        b.edge(lo, hi);
    }

    let rank = |x: usize| tree.height_of(x);
    let mut trace = Vec::new();
    for t in f.maximal_elements() {
        let mut line: Vec<usize> =
            (0..tree.len()).filter(|&p| tree.upper_covers(p).is_empty() && unr.last[p] == t).collect();
        line.sort_by_key(|&p| unr.paths[p].iter().map(|&x| f.label(x)).collect::<Vec<_>>());
        for pair in line.windows(2) {
            let (p0, q0) = (pair[0], pair[1]);
            let (p, q) = if rank(p0) <= rank(q0) { (p0, q0) } else { (q0, p0) };
            let image = unr.last[p];
            let l = rank(q) - rank(p);
            let meet = tree_meet(tree, p, q);
            let k = rank(p) - rank(meet) - 1;
            let tag = format!("@{}~{}", tree.label(p), tree.label(q));
            let first_node = b.labels.len();
            let first_edge = b.edges.len();

            let a: Vec<usize> = (0..=l).map(|i| b.add(format!("a({i}){tag}"), image)).collect();
            let bs: Vec<usize> = (0..l).map(|i| b.add(format!("b({i}){tag}"), image)).collect();
            let cs: Vec<usize> = (0..l).map(|i| b.add(format!("c({i}){tag}"), image)).collect();
            for i in 0..l {
                b.edge(a[i], cs[i]);
                b.edge(cs[i], bs[i]);
                b.edge(a[i + 1], bs[i]);
            }
            b.edge(a[0], p);
            b.edge(a[l], q);
            for (i, &ai) in a.iter().enumerate() {
                let mut below = meet;
                for j in 1..k + i {
                    let d = b.add(format!("d({i},{j}){tag}"), image);
                    b.edge(below, d);
                    below = d;
                }
                b.edge(below, ai);
            }

            let mut step = TraceStep::named("zigzag bridge");
            step.added_elements = b.labels[first_node..].to_vec();
            step.added_edges = b.edge_names(first_edge);
            trace.push(step);
        }
    }

    let trunk_len = tree.len();
    let (output, witness) = b.finish(f)?;
    check_witness(&witness)?;
    ensure(output.is_graded(), || "output is not graded".into())?;
    check_con_types(&witness, 0..trunk_len)?;
    ensure(validates_sfl(&output, lambda)?, || "output does not validate the starlike logic".into())?;
    if trace.is_empty() {
        trace.push(TraceStep::named("no bridges needed"));
    }
    Ok(ConstructionResult { output, witness, trace })
}
