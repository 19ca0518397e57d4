//! Determinant, adjugate, characteristic-polynomial and reinterpretation
//! properties on randomized matrices.

mod common;

use num_bigint::BigInt;
use ringmat::birkhoff::Permutation;
use ringmat::matrix::{
    self, adjugate, adjugate_identity_check, cayley_hamilton_check, cayley_hamilton_residual,
    char_poly, determinant, reinterpret, reinterpret_inv, SquareMatrix,
};
use ringmat::poly::{Degree, PolyRing, Polynomial};
use ringmat::ring::{Integers, Ring};

use rand::Rng;

fn int_poly<G: Rng>(rng: &mut G, max_deg: usize) -> Polynomial<BigInt> {
    let zx = PolyRing::new(Integers);
    let len = rng.random_range(0..=max_deg + 1);
    zx.from_coeffs((0..len).map(|_| BigInt::from(rng.random_range(-4i64..=4))).collect())
}

#[test]
fn determinant_is_multiplicative() {
    let mut rng = common::rng(0xde7);
    for _ in 0..80 {
        let n = rng.random_range(1..=5);
        let a = common::int_matrix(&mut rng, n, -6, 6);
        let b = common::int_matrix(&mut rng, n, -6, 6);
        let ab = matrix::mul(&Integers, &a, &b).unwrap();
        assert_eq!(
            determinant(&Integers, &ab).unwrap(),
            determinant(&Integers, &a).unwrap() * determinant(&Integers, &b).unwrap()
        );
    }
}

#[test]
fn determinant_is_alternating() {
    let mut rng = common::rng(0xa17);
    for _ in 0..60 {
        let n = rng.random_range(2..=5);
        let a = common::int_matrix(&mut rng, n, -6, 6);
        let i = rng.random_range(0..n);
        let mut j = rng.random_range(0..n);
        while j == i {
            j = rng.random_range(0..n);
        }
        // swapping two rows negates the determinant
        let swapped = SquareMatrix::from_fn(n, |r, c| {
            let r = if r == i { j } else if r == j { i } else { r };
            a[(r, c)].clone()
        });
        assert_eq!(
            determinant(&Integers, &swapped).unwrap(),
            -determinant(&Integers, &a).unwrap()
        );
        // a repeated row kills it
        let repeated = SquareMatrix::from_fn(n, |r, c| {
            let r = if r == j { i } else { r };
            a[(r, c)].clone()
        });
        assert_eq!(determinant(&Integers, &repeated).unwrap(), BigInt::from(0));
    }
}

#[test]
fn adjugate_identity_over_integers_and_polynomials() {
    let mut rng = common::rng(0xad9);
    for _ in 0..40 {
        let n = rng.random_range(1..=4);
        let a = common::int_matrix(&mut rng, n, -6, 6);
        let adj = adjugate(&Integers, &a).unwrap();
        let de = SquareMatrix::scalar(&Integers, n, &determinant(&Integers, &a).unwrap());
        assert_eq!(matrix::mul(&Integers, &adj, &a).unwrap(), de);
        assert_eq!(matrix::mul(&Integers, &a, &adj).unwrap(), de);
    }
    // same identity with polynomial entries
    let zx = PolyRing::new(Integers);
    for _ in 0..15 {
        let n = rng.random_range(1..=3);
        let a = SquareMatrix::from_fn(n, |_, _| int_poly(&mut rng, 2));
        let adj = adjugate(&zx, &a).unwrap();
        let de = SquareMatrix::scalar(&zx, n, &determinant(&zx, &a).unwrap());
        assert_eq!(matrix::mul(&zx, &adj, &a).unwrap(), de);
        assert_eq!(matrix::mul(&zx, &a, &adj).unwrap(), de);
    }
}

#[test]
fn char_poly_structural_invariants() {
    let mut rng = common::rng(0xc4a);
    for _ in 0..60 {
        let n = rng.random_range(1..=5);
        let a = common::int_matrix(&mut rng, n, -9, 9);
        let cp = char_poly(&Integers, &a).unwrap();
        let f = cp.poly();
        assert_eq!(f.degree(), Degree::Finite(n));
        assert_eq!(f.leading().unwrap(), &BigInt::from(1), "monic");
        let trace: BigInt = (0..n).map(|i| a[(i, i)].clone()).sum();
        assert_eq!(f.coeff(n - 1).unwrap(), &(-trace), "x^(n-1) coefficient");
        let det = determinant(&Integers, &a).unwrap();
        let sign = if n % 2 == 0 { det.clone() } else { -det.clone() };
        assert_eq!(f.coeff(0).unwrap(), &sign, "constant term");
    }
}

#[test]
fn char_poly_of_fixed_3x3_matches_principal_minor_expansion() {
    // independent oracle: f(x) = x^3 - tr(A) x^2 + (sum of principal 2x2
    // minors) x - det(A)
    let a = SquareMatrix::from_int_rows(&[&[2, -1, 3], &[0, 4, 1], &[-2, 5, -3]]);
    let tr = BigInt::from(2 + 4 - 3);
    let minors = |i: usize, j: usize| -> BigInt {
        &a[(i, i)] * &a[(j, j)] - &a[(i, j)] * &a[(j, i)]
    };
    let m2_sum = minors(0, 1) + minors(0, 2) + minors(1, 2);
    let det = determinant(&Integers, &a).unwrap();
    let zx = PolyRing::new(Integers);
    let expected = zx.from_coeffs(vec![-det, m2_sum, -tr, BigInt::from(1)]);
    assert_eq!(char_poly(&Integers, &a).unwrap().poly(), &expected);
    // and the evaluated polynomial vanishes at A by direct arithmetic
    let res = cayley_hamilton_residual(&Integers, &a).unwrap();
    assert!(matrix::is_zero_matrix(&Integers, &res));
}

#[test]
fn char_poly_is_similarity_invariant_under_permutations() {
    let mut rng = common::rng(0x515);
    for _ in 0..40 {
        let n = rng.random_range(2..=5);
        let a = common::int_matrix(&mut rng, n, -9, 9);
        let p = Permutation::random(n, &mut rng);
        let pm = p.to_matrix_in(&Integers);
        // permutation inverses are exact: P^-1 = P^T
        let pinv = pm.transpose();
        let conj = matrix::mul(
            &Integers,
            &matrix::mul(&Integers, &pm, &a).unwrap(),
            &pinv,
        )
        .unwrap();
        assert_eq!(
            char_poly(&Integers, &conj).unwrap(),
            char_poly(&Integers, &a).unwrap()
        );
    }
}

#[test]
fn theorem_checks_hold_on_random_matrices() {
    let mut rng = common::rng(0x7e0);
    for _ in 0..60 {
        let n = rng.random_range(1..=5);
        let a = common::int_matrix(&mut rng, n, -9, 9);
        assert!(cayley_hamilton_check(&Integers, &a).unwrap());
        assert!(adjugate_identity_check(&Integers, &a).unwrap());
    }
}

#[test]
fn reinterpret_is_a_ring_isomorphism_on_samples() {
    let mut rng = common::rng(0x150);
    let zx = PolyRing::new(Integers);
    for _ in 0..40 {
        let n = rng.random_range(1..=4);
        let m = SquareMatrix::from_fn(n, |_, _| int_poly(&mut rng, 3));
        let k = SquareMatrix::from_fn(n, |_, _| int_poly(&mut rng, 3));

        // multiplicative: reinterpret(M·K) = reinterpret(M)·reinterpret(K)
        let prod = matrix::mul(&zx, &m, &k).unwrap();
        let mx = PolyRing::new(ringmat::matrix::MatrixRing::new(Integers, n));
        assert_eq!(
            reinterpret(&Integers, &prod),
            mx.mul(&reinterpret(&Integers, &m), &reinterpret(&Integers, &k))
        );
        // additive
        let sum = matrix::add(&zx, &m, &k).unwrap();
        assert_eq!(
            reinterpret(&Integers, &sum),
            mx.add(&reinterpret(&Integers, &m), &reinterpret(&Integers, &k))
        );
        // lossless round trip
        let back = reinterpret_inv(&Integers, n, &reinterpret(&Integers, &m)).unwrap();
        assert_eq!(back, m);
    }
}
