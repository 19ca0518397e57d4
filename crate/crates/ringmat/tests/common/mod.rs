//! Shared generators for the integration suites. Everything is seeded so
//! failures replay exactly.
#![allow(dead_code)]

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use ringmat::birkhoff::{random_convex_combination, BistochasticMatrix};
use ringmat::matrix::{MatrixRing, SquareMatrix};
use ringmat::poly::{PolyRing, Polynomial};
use ringmat::ring::Integers;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random integer matrix with entries uniform in `lo..=hi`.
pub fn int_matrix<G: Rng>(rng: &mut G, n: usize, lo: i64, hi: i64) -> SquareMatrix<BigInt> {
    SquareMatrix::from_fn(n, |_, _| BigInt::from(rng.random_range(lo..=hi)))
}

/// Random polynomial over `M_k(Z)` with degree at most `max_deg` (possibly
/// lower after trimming) and matrix entries uniform in `lo..=hi`.
pub fn matrix_poly<G: Rng>(
    rng: &mut G,
    ring: &MatrixRing<Integers>,
    max_deg: usize,
    lo: i64,
    hi: i64,
) -> Polynomial<SquareMatrix<BigInt>> {
    let px = PolyRing::new(ring.clone());
    let len = rng.random_range(0..=max_deg + 1);
    px.from_coeffs(
        (0..len)
            .map(|_| int_matrix(rng, ring.order(), lo, hi))
            .collect(),
    )
}

/// Random bistochastic matrix that is not a permutation matrix and has no
/// entry equal to 1 (the precondition of cycle reduction).
pub fn reducible_bistochastic<G: Rng>(rng: &mut G, n: usize) -> BistochasticMatrix {
    loop {
        let terms = rng.random_range(2..=12);
        let m = random_convex_combination(n, terms, rng);
        let no_unit = m.as_matrix().iter().all(|v| !v.is_one());
        if no_unit && m.to_permutation().is_none() {
            return m;
        }
    }
}
