use super::complex::RationalComplex;
use super::point::RationalPoint;
use super::subdivide::DEFAULT_SIMPLEX_BUDGET;
use crate::error::{Error, Result};
use crate::logic::UpsetAlgebra;
use crate::morphism::are_isomorphic;
use crate::nerve::{count_chains, nerve};
use crate::poset::{ElementSet, FinitePoset};

/// The complex in `Q^|F|` whose simplices are spanned by the basis vectors
/// `e_x` of the elements of each chain of `f`. Its face poset is checked to be
/// isomorphic to the nerve of `f`.
pub fn geometric_realization(f: &FinitePoset) -> Result<RationalComplex> {
    geometric_realization_with_budget(f, DEFAULT_SIMPLEX_BUDGET)
}

pub fn geometric_realization_with_budget(f: &FinitePoset, budget: u64) -> Result<RationalComplex> {
    let needed = count_chains(f);
    if needed > budget {
        return Err(Error::SizeBudgetExceeded { budget, needed });
    }
    let n = f.len();
    let vertices = (0..n).map(|i| RationalPoint::basis(n, i)).collect();
    // Faces of the standard simplex always meet properly, so the exact
    // intersection check is skipped.
    let k = RationalComplex::assemble(n, vertices, f.maximal_chains(), true)?;
    let nerve = nerve(f)?;
    if are_isomorphic(&k.face_poset(), &nerve.poset)?.is_none() {
        return Err(Error::ConstructionPostconditionFailed("face poset differs from the nerve".into()));
    }
    Ok(k)
}

/// An open subset of the support: the union of the relative interiors of the
/// simplices in an upset of the face poset.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OpenSet {
    pub upset: ElementSet,
}

/// The open set `U` stands for; fails unless `U` is upward closed in the face poset.
pub fn upset_to_open(k: &RationalComplex, upset: &ElementSet) -> Result<OpenSet> {
    let p = k.face_poset();
    let mut u = upset.clone();
    u.grow(p.len());
    if let Some(x) = u.ones().find(|&x| !p.up_set(x).is_subset(&u)) {
        return Err(Error::NotUpwardClosed(p.label(x).to_string()));
    }
    Ok(OpenSet { upset: u })
}

impl OpenSet {
    /// Simplices whose relative interiors make up the set.
    pub fn simplices<'a>(&self, k: &'a RationalComplex) -> Vec<&'a [usize]> {
        self.upset.ones().map(|i| k.simplices()[i].as_slice()).collect()
    }

    pub fn is_empty(&self) -> bool {
        self.upset.count_ones(..) == 0
    }

    pub fn is_everything(&self) -> bool {
        self.upset.count_ones(..) == self.upset.len()
    }

    /// Whether `x` (a point of the support) lies in the set.
    pub fn contains(&self, k: &RationalComplex, x: &RationalPoint) -> Result<bool> {
        Ok(self.upset.contains(k.carrier(x)?.0))
    }

    pub fn meet(&self, other: &OpenSet, k: &RationalComplex) -> OpenSet {
        let p = k.face_poset();
        OpenSet { upset: UpsetAlgebra::new(&p).meet(&self.upset, &other.upset) }
    }

    pub fn join(&self, other: &OpenSet, k: &RationalComplex) -> OpenSet {
        let p = k.face_poset();
        OpenSet { upset: UpsetAlgebra::new(&p).join(&self.upset, &other.upset) }
    }

    /// Interior of the union of the complement of `self` with `other`.
    pub fn implies(&self, other: &OpenSet, k: &RationalComplex) -> OpenSet {
        let p = k.face_poset();
        OpenSet { upset: UpsetAlgebra::new(&p).implies(&self.upset, &other.upset) }
    }
}
