//! Polynomials whose coefficients do not commute.
//!
//! The indeterminate commutes with everything (`r·x = x·r`), but matrix
//! coefficients do not commute with each other, so products, evaluations and
//! divisions all become order-sensitive.
//!
//! ```bash
//! cargo run --example noncommutative_poly
//! ```

use ringmat::matrix::{MatrixRing, SquareMatrix};
use ringmat::poly::PolyRing;
use ringmat::ring::{Integers, Ring};

fn main() {
    let m2 = MatrixRing::new(Integers, 2);
    let px = PolyRing::new(m2.clone());

    let n = SquareMatrix::from_int_rows(&[&[0, 1], &[0, 0]]);
    let m = SquareMatrix::from_int_rows(&[&[0, 0], &[1, 0]]);

    // (Nx)(Mx) = (NM)x^2 but (Mx)(Nx) = (MN)x^2, and NM != MN
    let nx = px.monomial(n.clone(), 1);
    let mx = px.monomial(m.clone(), 1);
    println!("N = {n},  M = {m}");
    println!("(Nx)(Mx) = {}", px.elem_string(&px.mul(&nx, &mx)));
    println!("(Mx)(Nx) = {}", px.elem_string(&px.mul(&mx, &nx)));

    // two evaluations: coefficients on the left give f(r) = sum a_i r^i,
    // coefficients on the right give sum r^i a_i
    println!("\nf = Nx evaluated at M:");
    println!("  right: sum a_i r^i = NM = {}", px.evaluate_right(&nx, &m));
    println!("  left:  sum r^i a_i = MN = {}", px.evaluate_left(&nx, &m));

    // right evaluation respects a product f = g·h only when the point
    // commutes with h's coefficients; here is the failure without the guard
    let f = px.mul(&nx, &nx); // N^2 = 0, the zero polynomial
    println!("\ng = h = Nx, f = g·h = {}", px.elem_string(&f));
    println!("  f(M) = {}", px.evaluate_right(&f, &m));
    let gm = px.evaluate_right(&nx, &m);
    println!("  g(M)·h(M) = (NM)^2 = {}", m2.mul(&gm, &gm));
    println!("  M commutes with the coefficients of h? {}", px.commutes_with_coeffs(&m, &nx));

    // with a commuting point (scalar matrices are central) it always works
    let g = px.from_coeffs(vec![n.clone(), m.clone()]);
    let h = px.from_coeffs(vec![m.clone(), n.clone(), m2.one()]);
    let r = m2.from_i64(3);
    let lhs = px.evaluate_right(&px.mul(&g, &h), &r);
    let rhs = m2.mul(&px.evaluate_right(&g, &r), &px.evaluate_right(&h, &r));
    println!("\nscalar point r = 3E: (g·h)(r) == g(r)·h(r)? {}", lhs == rhs);
}
