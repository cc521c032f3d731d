//! Simplicial complexes with exact rational vertices: validation, subdivisions,
//! unimodularity and the geometric realization of a poset.

mod complex;
pub mod linalg;
mod point;
mod realize;
mod subdivide;
mod unimodular;

pub use complex::{RationalComplex, Simplex};
pub use point::RationalPoint;
pub use realize::{geometric_realization, geometric_realization_with_budget, upset_to_open, OpenSet};
pub use subdivide::{
    barycentric_subdivision, barycentric_subdivision_with_budget, derived, derived_with_budget, elementary_barycentric,
    elementary_farey, elementary_stellar, farey_mediant, is_refinement, DEFAULT_SIMPLEX_BUDGET,
};
pub use unimodular::{is_unimodular, is_unimodular_complex};
