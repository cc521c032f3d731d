use num_traits::One;

use super::complex::{RationalComplex, Simplex};
use super::linalg::elementary_divisors;

/// Whether the homogeneous correspondents of the vertices extend to a basis of
/// the integer lattice, i.e. all elementary divisors of their matrix are 1.
pub fn is_unimodular(sigma: &Simplex) -> bool {
    let rows: Vec<_> = sigma.vertices.iter().map(|v| v.homogeneous()).collect();
    let divisors = elementary_divisors(&rows);
    divisors.len() == rows.len() && divisors.iter().all(One::is_one)
}

/// Every simplex is unimodular (checking maximal simplices suffices).
pub fn is_unimodular_complex(k: &RationalComplex) -> bool {
    k.maximal_simplices().iter().all(|s| is_unimodular(&k.simplex(s)))
}
