use std::collections::BTreeSet;

use num_rational::BigRational;
use num_traits::{One, Signed};

use super::complex::{is_subset, RationalComplex, Simplex};
use super::linalg::det;
use super::point::RationalPoint;
use crate::error::{Error, Result};
use crate::nerve::count_chains;

/// Default cap on the number of simplices a subdivision may produce.
pub const DEFAULT_SIMPLEX_BUDGET: u64 = 1_000_000;

/// Stellar subdivision at `c`, which must lie in the relative interior of the
/// simplex `sigma`: every simplex containing `sigma` is replaced by the cones
/// from `c` over its faces that do not contain `sigma`.
fn stellar_at(k: &RationalComplex, sigma: &[usize], c: RationalPoint) -> Result<RationalComplex> {
    if sigma.len() == 1 {
        return Ok(k.clone());
    }
    let (dim, mut vertices, simplices) = k.clone().parts();
    let apex = vertices.len();
    vertices.push(c);
    let mut out: BTreeSet<Vec<usize>> = BTreeSet::new();
    out.insert(vec![apex]);
    for s in simplices {
        if !is_subset(sigma, &s) {
            out.insert(s);
            continue;
        }
        for mask in 0u64..(1u64 << s.len()) {
            let face: Vec<usize> = (0..s.len()).filter(|&i| mask >> i & 1 == 1).map(|i| s[i]).collect();
            if !is_subset(sigma, &face) {
                let mut cone = face;
                cone.push(apex);
                out.insert(cone);
            }
        }
    }
    RationalComplex::assemble(dim, vertices, out.into_iter().collect(), false)
}

fn simplex_arg(k: &RationalComplex, sigma: &[usize]) -> Result<Vec<usize>> {
    let i = k
        .index_of(sigma)
        .ok_or_else(|| Error::InvalidInput(format!("{sigma:?} is not a simplex of the complex")))?;
    Ok(k.simplices()[i].clone())
}

/// Elementary stellar subdivision at the point `c` of the support.
/// Returns the complex unchanged exactly when `c` is a vertex.
pub fn elementary_stellar(k: &RationalComplex, c: &RationalPoint) -> Result<RationalComplex> {
    let (i, _) = k.carrier(c)?;
    let sigma = k.simplices()[i].clone();
    stellar_at(k, &sigma, c.clone())?.validated()
}

/// Stellar subdivision at the barycentre of the simplex `sigma` (vertex indices).
pub fn elementary_barycentric(k: &RationalComplex, sigma: &[usize]) -> Result<RationalComplex> {
    let sigma = simplex_arg(k, sigma)?;
    let c = k.simplex(&sigma).barycentre();
    stellar_at(k, &sigma, c)?.validated()
}

/// The barycentric subdivision: barycentric steps at every simplex in strictly
/// decreasing dimension (ties in vertex order). Vertex indices of `k` are kept.
pub fn barycentric_subdivision(k: &RationalComplex) -> Result<RationalComplex> {
    barycentric_subdivision_with_budget(k, DEFAULT_SIMPLEX_BUDGET)
}

pub fn barycentric_subdivision_with_budget(k: &RationalComplex, budget: u64) -> Result<RationalComplex> {
    let needed = count_chains(&k.face_poset());
    if needed > budget {
        return Err(Error::SizeBudgetExceeded { budget, needed });
    }
    let mut order: Vec<Vec<usize>> = k.simplices().iter().filter(|s| s.len() > 1).cloned().collect();
    order.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
    let mut cur = k.clone();
    for sigma in order {
        let c = cur.simplex(&sigma).barycentre();
        cur = stellar_at(&cur, &sigma, c)?;
    }
    cur.validated()
}

/// The `n`-th derived subdivision; `n = 0` returns a copy.
pub fn derived(k: &RationalComplex, n: usize) -> Result<RationalComplex> {
    derived_with_budget(k, n, DEFAULT_SIMPLEX_BUDGET)
}

pub fn derived_with_budget(k: &RationalComplex, n: usize, budget: u64) -> Result<RationalComplex> {
    let mut cur = k.clone();
    for _ in 0..n {
        cur = barycentric_subdivision_with_budget(&cur, budget)?;
    }
    Ok(cur)
}

/// The point whose homogeneous correspondent is the sum of those of the vertices.
pub fn farey_mediant(sigma: &Simplex) -> RationalPoint {
    let mut sum = vec![num_bigint::BigInt::from(0); sigma.ambient_dim() + 1];
    for v in &sigma.vertices {
        for (s, c) in sum.iter_mut().zip(v.homogeneous()) {
            *s += c;
        }
    }
    let m = RationalPoint::dehomogenize(&sum);
    debug_assert!(sigma.vertices.len() == 1 || sigma.relint_contains(&m));
    m
}

/// Stellar subdivision at the Farey mediant of `sigma` (vertex indices).
pub fn elementary_farey(k: &RationalComplex, sigma: &[usize]) -> Result<RationalComplex> {
    let sigma = simplex_arg(k, sigma)?;
    let m = farey_mediant(&k.simplex(&sigma));
    stellar_at(k, &sigma, m)?.validated()
}

/// Whether `delta` refines `sigma`: each simplex of `delta` lies in a simplex
/// of `sigma`, and each maximal simplex of `sigma` is covered by the
/// equidimensional simplices of `delta` inside it (their volumes, measured in
/// barycentric coordinates, add up to one).
pub fn is_refinement(delta: &RationalComplex, sigma: &RationalComplex) -> bool {
    if delta.ambient_dim() != sigma.ambient_dim() {
        return false;
    }
    let big: Vec<Simplex> = sigma.maximal_simplices().iter().map(|s| sigma.simplex(s)).collect();
    let small: Vec<Simplex> = delta.maximal_simplices().iter().map(|s| delta.simplex(s)).collect();
    let inside = |d: &Simplex, s: &Simplex| d.vertices.iter().all(|v| s.contains(v));
    if !small.iter().all(|d| big.iter().any(|s| inside(d, s))) {
        return false;
    }
    big.iter().all(|s| {
        let pieces = delta.simplices().iter().filter(|d| d.len() == s.vertices.len()).map(|d| delta.simplex(d));
        let mut total = BigRational::from_integer(0.into());
        for d in pieces.filter(|d| inside(d, s)) {
            let coords: Vec<Vec<BigRational>> =
                d.vertices.iter().map(|v| s.barycentric_coords(v).expect("vertex lies in the simplex")[1..].to_vec()).collect();
            let rows: Vec<Vec<BigRational>> =
                coords[1..].iter().map(|r| r.iter().zip(&coords[0]).map(|(a, b)| a - b).collect()).collect();
            total += det(&rows).abs();
        }
        total.is_one()
    })
}

impl RationalComplex {
    fn validated(self) -> Result<Self> {
        let (dim, vertices, simplices) = self.parts();
        RationalComplex::validate(dim, vertices, simplices)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::morphism::are_isomorphic;
    use crate::nerve::nerve;

    fn pt(c: &[i64]) -> RationalPoint {
        RationalPoint::from_ints(c)
    }

    fn segment() -> RationalComplex {
        RationalComplex::full_simplex(vec![pt(&[0]), pt(&[1])]).unwrap()
    }

    #[test]
    fn stellar_basics() {
        let s = elementary_stellar(&segment(), &RationalPoint::from_fractions(&[(1, 2)])).unwrap();
        assert_eq!(s.f_vector(), [3, 2]);
        assert_eq!(elementary_stellar(&segment(), &pt(&[1])).unwrap(), segment());
        assert_eq!(elementary_stellar(&segment(), &pt(&[3])).unwrap_err(), Error::PointOutsideSupport);

        // Midpoint of an edge of a triangle: the edge splits and the apex joins the midpoint.
        let t = RationalComplex::standard_simplex(2);
        let mid = RationalPoint::from_fractions(&[(1, 2), (0, 1)]);
        let s = elementary_stellar(&t, &mid).unwrap();
        assert_eq!(s.f_vector(), [4, 5, 2]);
        assert!(is_refinement(&s, &t));
        assert!(!is_refinement(&t, &s));
    }

    #[test]
    fn barycentric_counts() {
        let sd = barycentric_subdivision(&segment()).unwrap();
        assert_eq!(sd.f_vector(), [3, 2]);
        let t = RationalComplex::standard_simplex(2);
        let sd = barycentric_subdivision(&t).unwrap();
        assert_eq!(sd.len(), 25);
        assert_eq!(sd.f_vector(), [7, 12, 6]);
        assert!(are_isomorphic(&sd.face_poset(), &nerve(&t.face_poset()).unwrap().poset).unwrap().is_some());
        assert!(is_refinement(&sd, &t));
        assert!(!is_refinement(&t, &sd));
        assert_eq!(derived(&t, 0).unwrap(), t);
    }

    #[test]
    fn farey() {
        let seg = segment();
        assert_eq!(farey_mediant(&seg.simplex(&[0, 1])), RationalPoint::from_fractions(&[(1, 2)]));
        assert_eq!(farey_mediant(&seg.simplex(&[1])), pt(&[1]));
        let t = RationalComplex::standard_simplex(2);
        let m = farey_mediant(&t.simplex(&[0, 1, 2]));
        assert_eq!(m, RationalPoint::from_fractions(&[(1, 3), (1, 3)]));
        let f = elementary_farey(&t, &[0, 1, 2]).unwrap();
        assert!(is_refinement(&f, &t));
        assert_eq!(f.f_vector(), [4, 6, 3]);
        // Mediant of [1/2, 1] is 2/3, not the midpoint.
        let half = elementary_farey(&seg, &[0, 1]).unwrap();
        let split = elementary_farey(&half, &[1, 2]).unwrap();
        assert!(split.vertices().contains(&RationalPoint::from_fractions(&[(2, 3)])));
    }

    #[test]
    fn budget() {
        let t = RationalComplex::standard_simplex(2);
        let err = barycentric_subdivision_with_budget(&t, 24).unwrap_err();
        assert_eq!(err, Error::SizeBudgetExceeded { budget: 24, needed: 25 });
    }
}
