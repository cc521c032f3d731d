//! Exact linear algebra over `Q` and `Z`: elimination, a small simplex-method
//! LP solver, and elementary divisors.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

type Q = BigRational;

/// Reduces `m` in place to row echelon form and returns the pivot columns.
fn echelon(m: &mut [Vec<Q>]) -> Vec<usize> {
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        let Some(p) = (row..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        let lead = m[row][col].clone();
        for x in m[row].iter_mut() {
            *x /= &lead;
        }
        for r in 0..m.len() {
            if r != row && !m[r][col].is_zero() {
                let factor = m[r][col].clone();
                for c in col..cols {
                    let delta = &factor * &m[row][c];
                    m[r][c] -= delta;
                }
            }
        }
        pivots.push(col);
        row += 1;
        if row == m.len() {
            break;
        }
    }
    pivots
}

pub fn rank(rows: &[Vec<Q>]) -> usize {
    let mut m = rows.to_vec();
    echelon(&mut m).len()
}

/// The unique `z` with `sum_j z_j cols[j] = b`, if the columns are independent
/// and `b` lies in their span.
pub fn solve(cols: &[Vec<Q>], b: &[Q]) -> Option<Vec<Q>> {
    let k = cols.len();
    let mut m: Vec<Vec<Q>> = (0..b.len())
        .map(|i| cols.iter().map(|c| c[i].clone()).chain(std::iter::once(b[i].clone())).collect())
        .collect();
    let pivots = echelon(&mut m);
    if pivots.len() != k || pivots.iter().enumerate().any(|(i, &p)| p != i) {
        return None;
    }
    if m.iter().skip(k).any(|r| !r[k].is_zero()) {
        return None;
    }
    Some((0..k).map(|i| m[i][k].clone()).collect())
}

/// Determinant of a square matrix.
pub fn det(rows: &[Vec<Q>]) -> Q {
    let n = rows.len();
    let mut m = rows.to_vec();
    let mut d = Q::from_integer(1.into());
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return Q::zero();
        };
        if p != col {
            m.swap(p, col);
            d = -d;
        }
        d *= &m[col][col];
        for r in col + 1..n {
            if !m[r][col].is_zero() {
                let factor = &m[r][col] / &m[col][col];
                for c in col..n {
                    let delta = &factor * &m[col][c];
                    m[r][c] -= delta;
                }
            }
        }
    }
    d
}

/// Maximum of `c.z` subject to `a z = b`, `z >= 0`; `None` when infeasible.
///
/// Two-phase tableau simplex with Bland's rule, so it terminates without
/// tolerance parameters. The feasible region must be bounded in the direction of `c`.
pub fn lp_maximize(a: &[Vec<Q>], b: &[Q], c: &[Q]) -> Option<Q> {
    let m = a.len();
    let n = c.len();
    let width = n + m + 1;
    let mut t: Vec<Vec<Q>> = Vec::with_capacity(m);
    for i in 0..m {
        let flip = b[i].is_negative();
        let mut row: Vec<Q> = a[i].iter().map(|x| if flip { -x } else { x.clone() }).collect();
        row.extend((0..m).map(|j| Q::from_integer(BigInt::from((i == j) as u8))));
        row.push(if flip { -&b[i] } else { b[i].clone() });
        t.push(row);
    }
    let mut basis: Vec<usize> = (n..n + m).collect();

    let mut phase1 = vec![Q::zero(); width - 1];
    for x in &mut phase1[n..] {
        *x = Q::from_integer((-1).into());
    }
    pivot_to_optimum(&mut t, &mut basis, &phase1, width - 1);
    let infeasibility: Q = basis.iter().zip(&t).filter(|(&j, _)| j >= n).map(|(_, r)| r[width - 1].clone()).sum();
    if !infeasibility.is_zero() {
        return None;
    }
    // Drive zero-level artificials out of the basis, dropping redundant rows.
    let mut i = 0;
    while i < t.len() {
        if basis[i] >= n {
            match (0..n).find(|&j| !t[i][j].is_zero()) {
                Some(j) => pivot(&mut t, &mut basis, i, j),
                None => {
                    t.remove(i);
                    basis.remove(i);
                    continue;
                }
            }
        }
        i += 1;
    }
    let mut phase2 = c.to_vec();
    phase2.extend((0..m).map(|_| Q::zero()));
    pivot_to_optimum(&mut t, &mut basis, &phase2, n);
    Some(basis.iter().zip(&t).map(|(&j, r)| &phase2[j] * &r[width - 1]).sum())
}

fn pivot(t: &mut [Vec<Q>], basis: &mut [usize], row: usize, col: usize) {
    let lead = t[row][col].clone();
    for x in t[row].iter_mut() {
        *x /= &lead;
    }
    let pivot_row = t[row].clone();
    for (r, other) in t.iter_mut().enumerate() {
        if r != row && !other[col].is_zero() {
            let factor = other[col].clone();
            for (x, p) in other.iter_mut().zip(&pivot_row) {
                *x -= &factor * p;
            }
        }
    }
    basis[row] = col;
}

/// Pivots until no column below `allowed` has positive reduced cost.
fn pivot_to_optimum(t: &mut [Vec<Q>], basis: &mut [usize], obj: &[Q], allowed: usize) {
    let rhs = t.first().map_or(0, |r| r.len() - 1);
    loop {
        let entering = (0..allowed).find(|&j| {
            if basis.contains(&j) {
                return false;
            }
            let reduced: Q = obj[j].clone() - basis.iter().zip(t.iter()).map(|(&b, r)| &obj[b] * &r[j]).sum::<Q>();
            reduced.is_positive()
        });
        let Some(j) = entering else { return };
        let mut leave: Option<(usize, Q)> = None;
        for (i, r) in t.iter().enumerate() {
            if r[j].is_positive() {
                let ratio = &r[rhs] / &r[j];
                let better = match &leave {
                    None => true,
                    Some((k, best)) => ratio < *best || (ratio == *best && basis[i] < basis[*k]),
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
        }
        let (i, _) = leave.expect("linear program is unbounded");
        pivot(t, basis, i, j);
    }
}

/// Nonzero diagonal entries of the Smith normal form of an integer matrix.
pub fn elementary_divisors(rows: &[Vec<BigInt>]) -> Vec<BigInt> {
    let mut m = rows.to_vec();
    let (h, w) = (m.len(), m.first().map_or(0, Vec::len));
    let mut out = Vec::new();
    for k in 0..h.min(w) {
        // Smallest nonzero entry of the remaining block becomes the pivot.
        let Some((pr, pc)) = (k..h)
            .flat_map(|r| (k..w).map(move |c| (r, c)))
            .filter(|&(r, c)| !m[r][c].is_zero())
            .min_by_key(|&(r, c)| m[r][c].abs())
        else {
            break;
        };
        m.swap(k, pr);
        for row in m.iter_mut() {
            row.swap(k, pc);
        }
        loop {
            let mut dirty = false;
            for r in k + 1..h {
                let q = m[r][k].div_floor(&m[k][k]);
                if !q.is_zero() {
                    for c in k..w {
                        let delta = &q * &m[k][c];
                        m[r][c] -= delta;
                    }
                }
                dirty |= !m[r][k].is_zero();
            }
            for c in k + 1..w {
                let q = m[k][c].div_floor(&m[k][k]);
                if !q.is_zero() {
                    for row in m.iter_mut().skip(k) {
                        let delta = &q * &row[k];
                        row[c] -= delta;
                    }
                }
                dirty |= !m[k][c].is_zero();
            }
            // The pivot must also divide the rest of the block.
            if !dirty {
                if let Some(r) = (k + 1..h).find(|&r| (k + 1..w).any(|c| !m[r][c].is_multiple_of(&m[k][k]))) {
                    for c in k..w {
                        let v = m[r][c].clone();
                        m[k][c] += v;
                    }
                    dirty = true;
                }
            }
            if !dirty {
                break;
            }
            let (pr, pc) = (k..h)
                .flat_map(|r| (k..w).map(move |c| (r, c)))
                .filter(|&(r, c)| (r == k || c == k) && !m[r][c].is_zero())
                .min_by_key(|&(r, c)| m[r][c].abs())
                .expect("pivot row or column is nonzero");
            m.swap(k, pr);
            for row in m.iter_mut() {
                row.swap(k, pc);
            }
        }
        out.push(m[k][k].abs());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(v: i64) -> Q {
        Q::from_integer(v.into())
    }

    fn ints(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
    }

    #[test]
    fn solve_and_rank() {
        let cols = vec![vec![q(1), q(0), q(1)], vec![q(0), q(1), q(1)]];
        let z = solve(&cols, &[q(2), q(3), q(5)]).unwrap();
        assert_eq!(z, [q(2), q(3)]);
        assert!(solve(&cols, &[q(2), q(3), q(4)]).is_none());
        assert_eq!(rank(&[vec![q(1), q(2)], vec![q(2), q(4)]]), 1);
        assert_eq!(det(&[vec![q(0), q(1)], vec![q(1), q(1)]]), q(-1));
        assert_eq!(det(&[vec![q(2), q(1)], vec![q(4), q(2)]]), q(0));
    }

    #[test]
    fn lp_small() {
        // max x + y with x + 2y = 4, x, y >= 0: optimum 4 at (4, 0).
        assert_eq!(lp_maximize(&[vec![q(1), q(2)]], &[q(4)], &[q(1), q(1)]), Some(q(4)));
        // x + y = 1 and x + y = 2 is infeasible.
        assert_eq!(lp_maximize(&[vec![q(1), q(1)], vec![q(1), q(1)]], &[q(1), q(2)], &[q(0), q(0)]), None);
        // Redundant rows are tolerated.
        assert_eq!(lp_maximize(&[vec![q(1), q(1)], vec![q(2), q(2)]], &[q(1), q(2)], &[q(0), q(3)]), Some(q(3)));
        // Negative right-hand side.
        assert_eq!(lp_maximize(&[vec![q(-1), q(-1)]], &[q(-3)], &[q(2), q(1)]), Some(q(6)));
    }

    #[test]
    fn smith_examples() {
        assert_eq!(elementary_divisors(&ints(&[&[2, 4, 4], &[-6, 6, 12], &[10, -4, -16]])), [2, 6, 12].map(BigInt::from));
        assert_eq!(elementary_divisors(&ints(&[&[0, 2], &[1, 1]])), [1, 2].map(BigInt::from));
        assert_eq!(elementary_divisors(&ints(&[&[2, 0], &[0, 3]])), [1, 6].map(BigInt::from));
        assert_eq!(elementary_divisors(&ints(&[&[0, 0], &[0, 0]])), Vec::<BigInt>::new());
    }
}
