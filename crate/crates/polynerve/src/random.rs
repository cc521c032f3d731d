//! Seeded random posets for sampling and tests. No uniformity is claimed: a
//! random DAG is drawn by edge probability over a fixed topological order.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::poset::FinitePoset;

/// The generator used everywhere a seed is accepted.
pub fn seeded(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `n` elements `x0..`, with each `xi < xj` (`i < j`) drawn with probability `p`.
pub fn random_poset<R: Rng + ?Sized>(rng: &mut R, n: usize, p: f64) -> FinitePoset {
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(p) {
                edges.push((i, j));
            }
        }
    }
    let labels = (0..n).map(|i| format!("x{i}")).collect();
    FinitePoset::from_edges(labels, &edges).expect("edges follow index order")
}

/// A random poset on `n - 1` elements with a new bottom `x0` added (`n >= 1`).
pub fn random_rooted_poset<R: Rng + ?Sized>(rng: &mut R, n: usize, p: f64) -> FinitePoset {
    assert!(n >= 1, "a rooted poset needs an element");
    let mut edges: Vec<(usize, usize)> = (1..n).map(|j| (0, j)).collect();
    for i in 1..n {
        for j in i + 1..n {
            if rng.gen_bool(p) {
                edges.push((i, j));
            }
        }
    }
    let labels = (0..n).map(|i| format!("x{i}")).collect();
    FinitePoset::from_edges(labels, &edges).expect("edges follow index order")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_and_rooted() {
        let a = random_rooted_poset(&mut seeded(3), 6, 0.4);
        let b = random_rooted_poset(&mut seeded(3), 6, 0.4);
        assert_eq!(a, b);
        assert!(a.is_rooted());
        assert_eq!(random_poset(&mut seeded(1), 5, 0.0).height().unwrap(), 0);
        assert_eq!(random_poset(&mut seeded(1), 5, 1.0).height().unwrap(), 4);
    }
}
