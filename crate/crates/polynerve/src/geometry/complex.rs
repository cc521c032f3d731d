use std::collections::{BTreeSet, HashMap};

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::linalg::{lp_maximize, rank, solve};
use super::point::RationalPoint;
use crate::error::{Error, Result};
use crate::poset::FinitePoset;

type Q = BigRational;

/// A simplex given by its vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Simplex {
    pub vertices: Vec<RationalPoint>,
}

impl Simplex {
    pub fn new(vertices: Vec<RationalPoint>) -> Self {
        Simplex { vertices }
    }

    pub fn dim(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn ambient_dim(&self) -> usize {
        self.vertices[0].dim()
    }

    pub fn is_affinely_independent(&self) -> bool {
        let base = &self.vertices[0];
        let rows: Vec<Vec<Q>> = self.vertices[1..]
            .iter()
            .map(|v| v.0.iter().zip(&base.0).map(|(a, b)| a - b).collect())
            .collect();
        rows.is_empty() || rank(&rows) == rows.len()
    }

    /// Barycentric coordinates of `x` in the affine hull, if it lies there.
    pub fn barycentric_coords(&self, x: &RationalPoint) -> Option<Vec<Q>> {
        let lift = |p: &RationalPoint| p.0.iter().cloned().chain(std::iter::once(Q::one())).collect::<Vec<_>>();
        let cols: Vec<Vec<Q>> = self.vertices.iter().map(lift).collect();
        solve(&cols, &lift(x))
    }

    pub fn contains(&self, x: &RationalPoint) -> bool {
        self.barycentric_coords(x).is_some_and(|l| l.iter().all(|c| !c.is_negative()))
    }

    /// Whether `x` lies in the relative interior (all barycentric coordinates positive).
    pub fn relint_contains(&self, x: &RationalPoint) -> bool {
        self.barycentric_coords(x).is_some_and(|l| l.iter().all(|c| c.is_positive()))
    }

    pub fn barycentre(&self) -> RationalPoint {
        let k = Q::from_integer((self.vertices.len() as i64).into());
        let mut sum = RationalPoint::origin(self.ambient_dim());
        for v in &self.vertices {
            for (s, c) in sum.0.iter_mut().zip(&v.0) {
                *s += c;
            }
        }
        RationalPoint(sum.0.into_iter().map(|s| s / &k).collect())
    }
}

/// A finite simplicial complex with rational vertices.
///
/// Simplices are sorted vertex-index sets, closed under taking faces, listed by
/// dimension and then lexicographically.
#[derive(Clone, Debug)]
pub struct RationalComplex {
    dim: usize,
    vertices: Vec<RationalPoint>,
    simplices: Vec<Vec<usize>>,
    index: HashMap<Vec<usize>, usize>,
}

impl PartialEq for RationalComplex {
    /// Equal as sets of geometric simplices.
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim && self.geometric_set() == other.geometric_set()
    }
}

impl Eq for RationalComplex {}

fn describe(vertices: &[RationalPoint], s: &[usize]) -> String {
    let pts: Vec<String> = s.iter().map(|&v| vertices[v].to_string()).collect();
    format!("[{}]", pts.join(" "))
}

impl RationalComplex {
    /// Checks closure under faces, affine independence and the intersection
    /// axiom exactly. Coinciding vertices are merged first.
    pub fn validate(dim: usize, vertices: Vec<RationalPoint>, simplices: Vec<Vec<usize>>) -> Result<Self> {
        let c = Self::assemble(dim, vertices, simplices, false)?;
        c.check_geometry()?;
        Ok(c)
    }

    /// Builds from maximal simplices, adding all their faces, and validates.
    pub fn from_maximal(dim: usize, vertices: Vec<RationalPoint>, maximal: Vec<Vec<usize>>) -> Result<Self> {
        let c = Self::assemble(dim, vertices, maximal, true)?;
        c.check_geometry()?;
        Ok(c)
    }

    /// The full simplex on `vertices` with all its faces.
    pub fn full_simplex(vertices: Vec<RationalPoint>) -> Result<Self> {
        let dim = vertices.first().map_or(0, RationalPoint::dim);
        let all = (0..vertices.len()).collect();
        Self::from_maximal(dim, vertices, vec![all])
    }

    /// The standard `d`-simplex `Conv{0, e_1, ..., e_d}` in `Q^d`.
    pub fn standard_simplex(d: usize) -> Self {
        let mut vertices = vec![RationalPoint::origin(d)];
        vertices.extend((0..d).map(|i| RationalPoint::basis(d, i)));
        Self::full_simplex(vertices).expect("standard simplex is valid")
    }

    pub(crate) fn assemble(dim: usize, vertices: Vec<RationalPoint>, simplices: Vec<Vec<usize>>, close: bool) -> Result<Self> {
        for v in &vertices {
            if v.dim() != dim {
                return Err(Error::DimensionMismatch { expected: dim, got: v.dim() });
            }
        }
        let mut merged: Vec<RationalPoint> = Vec::new();
        let mut seen: HashMap<RationalPoint, usize> = HashMap::new();
        let rename: Vec<usize> = vertices
            .into_iter()
            .map(|v| {
                *seen.entry(v.clone()).or_insert_with(|| {
                    merged.push(v);
                    merged.len() - 1
                })
            })
            .collect();
        let mut set: BTreeSet<Vec<usize>> = BTreeSet::new();
        for s in simplices {
            if s.is_empty() {
                return Err(Error::InvalidInput("empty simplex".into()));
            }
            let mut t = Vec::with_capacity(s.len());
            for v in s {
                t.push(*rename.get(v).ok_or_else(|| Error::InvalidInput(format!("vertex index {v} out of range")))?);
            }
            t.sort_unstable();
            let len = t.len();
            t.dedup();
            if t.len() != len {
                return Err(Error::AffineDependence(describe(&merged, &t)));
            }
            set.insert(t);
        }
        if close {
            let tops: Vec<Vec<usize>> = set.iter().cloned().collect();
            for s in tops {
                set.extend(subsets(&s));
            }
        }
        let mut simplices: Vec<Vec<usize>> = set.into_iter().collect();
        simplices.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        let index = simplices.iter().enumerate().map(|(i, s)| (s.clone(), i)).collect();
        let c = RationalComplex { dim, vertices: merged, simplices, index };
        for s in &c.simplices {
            for face in subsets(s) {
                if !c.index.contains_key(&face) {
                    return Err(Error::NotDownwardClosed(describe(&c.vertices, &face)));
                }
            }
        }
        Ok(c)
    }

    fn check_geometry(&self) -> Result<()> {
        for s in &self.simplices {
            if !self.simplex(s).is_affinely_independent() {
                return Err(Error::AffineDependence(describe(&self.vertices, s)));
            }
        }
        let tops = self.maximal_simplices();
        for (i, a) in tops.iter().enumerate() {
            for b in &tops[i + 1..] {
                if !self.meet_in_common_face(a, b) {
                    return Err(Error::BadIntersection(describe(&self.vertices, a), describe(&self.vertices, b)));
                }
            }
        }
        Ok(())
    }

    /// `a` and `b` meet exactly in the face spanned by their shared vertices:
    /// no point of the intersection puts positive weight on a vertex of `a`
    /// outside `b`, which is an exact LP over barycentric weights.
    fn meet_in_common_face(&self, a: &[usize], b: &[usize]) -> bool {
        let only_a: Vec<bool> = a.iter().map(|v| !b.contains(v)).collect();
        if !only_a.contains(&true) || !self.boxes_overlap(a, b) {
            return true;
        }
        // Variables: weights on a, then weights on b.
        let n = a.len() + b.len();
        let mut rows: Vec<Vec<Q>> = Vec::with_capacity(self.dim + 2);
        let mut rhs = Vec::with_capacity(self.dim + 2);
        for k in 0..self.dim {
            let mut row: Vec<Q> = a.iter().map(|&v| self.vertices[v].0[k].clone()).collect();
            row.extend(b.iter().map(|&v| -&self.vertices[v].0[k]));
            rows.push(row);
            rhs.push(Q::zero());
        }
        for side in [0, 1] {
            rows.push((0..n).map(|j| if (j < a.len()) == (side == 0) { Q::one() } else { Q::zero() }).collect());
            rhs.push(Q::one());
        }
        let mut objective: Vec<Q> = only_a.iter().map(|&o| if o { Q::one() } else { Q::zero() }).collect();
        objective.extend((0..b.len()).map(|_| Q::zero()));
        match lp_maximize(&rows, &rhs, &objective) {
            None => true,
            Some(best) => best.is_zero(),
        }
    }

    fn boxes_overlap(&self, a: &[usize], b: &[usize]) -> bool {
        (0..self.dim).all(|k| {
            let lo = |s: &[usize]| s.iter().map(|&v| &self.vertices[v].0[k]).min().unwrap().clone();
            let hi = |s: &[usize]| s.iter().map(|&v| &self.vertices[v].0[k]).max().unwrap().clone();
            lo(a) <= hi(b) && lo(b) <= hi(a)
        })
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    pub fn vertices(&self) -> &[RationalPoint] {
        &self.vertices
    }

    /// All simplices as vertex-index sets.
    pub fn simplices(&self) -> &[Vec<usize>] {
        &self.simplices
    }

    pub fn len(&self) -> usize {
        self.simplices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.simplices.is_empty()
    }

    pub fn index_of(&self, s: &[usize]) -> Option<usize> {
        let mut key = s.to_vec();
        key.sort_unstable();
        self.index.get(&key).copied()
    }

    pub fn simplex(&self, s: &[usize]) -> Simplex {
        Simplex::new(s.iter().map(|&v| self.vertices[v].clone()).collect())
    }

    pub fn dimension(&self) -> Option<usize> {
        self.simplices.last().map(|s| s.len() - 1)
    }

    /// Number of simplices of each dimension, from vertices up.
    pub fn f_vector(&self) -> Vec<usize> {
        let mut out = vec![0; self.dimension().map_or(0, |d| d + 1)];
        for s in &self.simplices {
            out[s.len() - 1] += 1;
        }
        out
    }

    pub fn maximal_simplices(&self) -> Vec<Vec<usize>> {
        self.simplices
            .iter()
            .filter(|s| !self.simplices.iter().any(|t| t.len() > s.len() && is_subset(s, t)))
            .cloned()
            .collect()
    }

    fn geometric_set(&self) -> BTreeSet<Vec<RationalPoint>> {
        self.simplices
            .iter()
            .map(|s| {
                let mut pts: Vec<RationalPoint> = s.iter().map(|&v| self.vertices[v].clone()).collect();
                pts.sort();
                pts
            })
            .collect()
    }

    /// Simplices ordered by the face relation, labelled by vertex indices.
    pub fn face_poset(&self) -> FinitePoset {
        let labels = self.simplices.iter().map(|s| face_label(s)).collect();
        let mut edges = Vec::new();
        for (i, s) in self.simplices.iter().enumerate() {
            if s.len() < 2 {
                continue;
            }
            for drop in 0..s.len() {
                let mut f = s.clone();
                f.remove(drop);
                edges.push((self.index[&f], i));
            }
        }
        FinitePoset::from_edges(labels, &edges).expect("face relation is acyclic")
    }

    /// The simplex whose relative interior contains `x`, with the barycentric
    /// coordinates of `x` in it.
    pub fn carrier(&self, x: &RationalPoint) -> Result<(usize, Vec<Q>)> {
        if x.dim() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, got: x.dim() });
        }
        for (i, s) in self.simplices.iter().enumerate() {
            if let Some(l) = self.simplex(s).barycentric_coords(x) {
                if l.iter().all(|c| c.is_positive()) {
                    return Ok((i, l));
                }
            }
        }
        Err(Error::PointOutsideSupport)
    }

    /// Indices of the simplices having `s` as a face.
    pub fn open_star(&self, s: &[usize]) -> Vec<usize> {
        let mut key = s.to_vec();
        key.sort_unstable();
        (0..self.simplices.len()).filter(|&i| is_subset(&key, &self.simplices[i])).collect()
    }

    pub(crate) fn parts(self) -> (usize, Vec<RationalPoint>, Vec<Vec<usize>>) {
        (self.dim, self.vertices, self.simplices)
    }
}

pub(crate) fn face_label(s: &[usize]) -> String {
    let parts: Vec<String> = s.iter().map(|v| v.to_string()).collect();
    format!("{{{}}}", parts.join(","))
}

/// `a` and `b` sorted; `a` contained in `b`.
pub(crate) fn is_subset(a: &[usize], b: &[usize]) -> bool {
    let mut it = b.iter();
    a.iter().all(|x| it.any(|y| y == x))
}

/// All nonempty proper subsets of a sorted set, each sorted.
pub(crate) fn subsets(s: &[usize]) -> Vec<Vec<usize>> {
    let n = s.len();
    (1u64..(1u64 << n) - 1)
        .map(|mask| (0..n).filter(|&i| mask >> i & 1 == 1).map(|i| s[i]).collect())
        .collect()
}
