use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// A point of rational affine space.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RationalPoint(pub Vec<BigRational>);

impl RationalPoint {
    pub fn new(coords: Vec<BigRational>) -> Self {
        RationalPoint(coords)
    }

    /// From `(numerator, denominator)` pairs; panics on a zero denominator.
    pub fn from_fractions(pairs: &[(i64, i64)]) -> Self {
        RationalPoint(pairs.iter().map(|&(p, q)| BigRational::new(p.into(), q.into())).collect())
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        RationalPoint(coords.iter().map(|&c| BigRational::from_integer(c.into())).collect())
    }

    pub fn origin(dim: usize) -> Self {
        RationalPoint(vec![BigRational::zero(); dim])
    }

    /// The `i`-th standard basis vector of `Q^dim`.
    pub fn basis(dim: usize, i: usize) -> Self {
        let mut p = Self::origin(dim);
        p.0[i] = BigRational::one();
        p
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[BigRational] {
        &self.0
    }

    /// Least common multiple of the coordinate denominators.
    pub fn denominator(&self) -> BigInt {
        self.0.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()))
    }

    /// The primitive integer vector `(q x_1, ..., q x_n, q)` with `q` the denominator.
    pub fn homogeneous(&self) -> Vec<BigInt> {
        let q = self.denominator();
        let mut out: Vec<BigInt> = self.0.iter().map(|c| (c * BigRational::from_integer(q.clone())).to_integer()).collect();
        out.push(q);
        out
    }

    /// Inverse of [`RationalPoint::homogeneous`] for any vector with a nonzero last entry.
    pub fn dehomogenize(v: &[BigInt]) -> Self {
        let (last, rest) = v.split_last().expect("nonempty homogeneous vector");
        RationalPoint(rest.iter().map(|c| BigRational::new(c.clone(), last.clone())).collect())
    }
}

impl fmt::Display for RationalPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn den_and_homogeneous() {
        let x = RationalPoint::from_fractions(&[(2, 3), (1, 2)]);
        assert_eq!(x.denominator(), BigInt::from(6));
        assert_eq!(x.homogeneous(), [4, 3, 6].map(BigInt::from));
        assert_eq!(RationalPoint::dehomogenize(&x.homogeneous()), x);

        let z = RationalPoint::from_ints(&[0]);
        assert_eq!(z.denominator(), BigInt::one());
        assert_eq!(z.homogeneous(), [0, 1].map(BigInt::from));
        assert_eq!(RationalPoint::from_ints(&[3, -7]).denominator(), BigInt::one());
    }

    #[test]
    fn reduced_fractions() {
        let x = RationalPoint::from_fractions(&[(4, 6), (-3, 9)]);
        assert_eq!(x.homogeneous(), [2, -1, 3].map(BigInt::from));
        assert_eq!(x.to_string(), "(2/3, -1/3)");
    }
}
