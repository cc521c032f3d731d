//! Starlike trees and the connectedness conditions they induce.

use crate::error::{Error, Result};
use crate::morphism::PMorphism;
use crate::poset::{ElementSet, FinitePoset};
use crate::signature::Signature;

/// Label of element `i` (1-based, bottom-up) of branch `j` (1-based, tallest first).
fn branch_label(j: usize, i: usize) -> String {
    format!("b{j}_{i}")
}

/// The root `r` with one chain of `n` elements for each branch height `n`.
pub fn starlike_tree(alpha: &Signature) -> FinitePoset {
    let mut labels = vec!["r".to_string()];
    let mut edges = Vec::new();
    for (j, h) in alpha.heights().into_iter().enumerate() {
        let mut below = 0;
        for i in 1..=h {
            labels.push(branch_label(j + 1, i));
            let id = labels.len() - 1;
            edges.push((below, id));
            below = id;
        }
    }
    FinitePoset::from_edges(labels, &edges).expect("starlike tree")
}

/// The p-morphism from the tree of `beta` onto the tree of `alpha` for `alpha <= beta`:
/// branch `j <= |alpha|` maps onto branch `j` with its surplus collapsed onto the
/// branch top, and every remaining branch collapses onto the top of branch 1.
pub fn signature_reduction(beta: &Signature, alpha: &Signature) -> Result<PMorphism> {
    if !alpha.leq(beta) {
        return Err(Error::NotComparableSignatures(alpha.to_string(), beta.to_string()));
    }
    let source = starlike_tree(beta);
    let target = starlike_tree(alpha);
    let a = alpha.heights();
    let mut map = vec![0usize; source.len()];
    for (j, hb) in beta.heights().into_iter().enumerate() {
        for i in 1..=hb {
            let x = source.index_of(&branch_label(j + 1, i))?;
            map[x] = match a.get(j) {
                Some(&ha) => target.index_of(&branch_label(j + 1, i.min(ha)))?,
                None if a.is_empty() => 0,
                None => target.index_of(&branch_label(1, a[0]))?,
            };
        }
    }
    let f = PMorphism::total(source, target, map)?;
    debug_assert!(f.is_up_reduction());
    Ok(f)
}

/// Whether `set` admits an `alpha`-partition: an open partition into `|alpha|`
/// blocks with block `j` of height at least `alpha(j) - 1`.
pub fn has_alpha_partition_of(f: &FinitePoset, set: &ElementSet, alpha: &Signature) -> bool {
    alpha.leq(&f.con_type_of(set))
}

pub fn has_alpha_partition(f: &FinitePoset, alpha: &Signature) -> bool {
    has_alpha_partition_of(f, &f.full_set(), alpha)
}

/// An explicit `alpha`-partition of the whole poset: components sorted by
/// decreasing height fill the slots in order, and surplus components join slot 1.
pub fn alpha_partition(f: &FinitePoset, alpha: &Signature) -> Option<Vec<Vec<usize>>> {
    if alpha.is_epsilon() {
        return f.is_empty().then(Vec::new);
    }
    if !has_alpha_partition(f, alpha) {
        return None;
    }
    let mut comps: Vec<(usize, Vec<usize>)> = f
        .connected_components()
        .into_iter()
        .map(|c| {
            let mut s = f.empty_set();
            s.extend(c.iter().copied());
            (f.height_of_set(&s).unwrap(), c)
        })
        .collect();
    comps.sort_by(|a, b| b.0.cmp(&a.0).then_with(|| a.1.cmp(&b.1)));
    let k = alpha.len();
    let mut blocks: Vec<Vec<usize>> = comps.iter().take(k).map(|c| c.1.clone()).collect();
    for (_, c) in comps.into_iter().skip(k) {
        blocks[0].extend(c);
    }
    for b in blocks.iter_mut() {
        b.sort_unstable();
    }
    Some(blocks)
}

/// No strict upset admits an `alpha`-partition.
pub fn is_alpha_connected(f: &FinitePoset, alpha: &Signature) -> bool {
    first_alpha_disconnection(f, alpha).is_none()
}

/// The first element whose strict upset admits an `alpha`-partition.
pub fn first_alpha_disconnection(f: &FinitePoset, alpha: &Signature) -> Option<usize> {
    (0..f.len()).find(|&x| alpha.leq(&f.con_type_above(x)))
}

/// No strict diamond between `x < y` admits an `alpha`-partition.
pub fn is_alpha_diamond_connected(f: &FinitePoset, alpha: &Signature) -> bool {
    first_diamond_disconnection(f, alpha).is_none()
}

pub fn first_diamond_disconnection(f: &FinitePoset, alpha: &Signature) -> Option<(usize, usize)> {
    for x in 0..f.len() {
        for y in f.strict_up(x).ones() {
            let d = f.strict_diamond(x, y).expect("x < y");
            if alpha.leq(&f.convex_con_type(&d)) {
                return Some((x, y));
            }
        }
    }
    None
}

/// Diamond-connectedness over the completion: pairs `x < y` of the poset plus
/// every `x` below the added top, whose strict diamond is the strict upset of `x`.
pub fn is_alpha_nerve_connected(f: &FinitePoset, alpha: &Signature) -> bool {
    is_alpha_connected(f, alpha) && is_alpha_diamond_connected(f, alpha)
}

/// Nerve-validation of the Jankov-Fine formula of the starlike tree of `alpha`.
pub fn nerve_validates_starlike(f: &FinitePoset, alpha: &Signature) -> Result<bool> {
    if alpha.is_forbidden() {
        return Err(Error::ForbiddenSignature(alpha.to_string()));
    }
    Ok(is_alpha_nerve_connected(f, alpha))
}
