//! Division by a monic linear polynomial over a noncommutative coefficient
//! ring, in both of its one-sided forms.
//!
//! ```bash
//! cargo run --example linear_division
//! ```

use ringmat::matrix::{MatrixRing, SquareMatrix};
use ringmat::poly::PolyRing;
use ringmat::ring::Ring;
use ringmat::Integers;

fn main() {
    let m2 = MatrixRing::new(Integers, 2);
    let px = PolyRing::new(m2.clone());

    // f has matrix coefficients; r is an arbitrary matrix
    let f = px.from_coeffs(vec![
        SquareMatrix::from_int_rows(&[&[1, -2], &[0, 3]]),
        SquareMatrix::from_int_rows(&[&[0, 1], &[1, 0]]),
        SquareMatrix::from_int_rows(&[&[2, 0], &[-1, 1]]),
    ]);
    let r = SquareMatrix::from_int_rows(&[&[1, 1], &[0, -1]]);

    println!("f(x) = {}", px.elem_string(&f));
    println!("r    = {r}");

    // right form: f = q·(x − r) + f(r)
    let (q, rem) = px.divide_right_linear(&f, &r);
    println!("\nright division, f = q·(x - r) + rem:");
    println!("  q   = {}", px.elem_string(&q));
    println!("  rem = {rem}");
    assert_eq!(rem, px.evaluate_right(&f, &r));
    let back = px.add(&px.mul(&q, &px.x_minus(&r)), &px.constant(rem));
    assert_eq!(back, f, "right reconstruction is exact");

    // left form: f = (x − r)·q̃ + r̃, with a generally different quotient
    // and a remainder given by the left evaluation
    let (lq, lrem) = px.divide_left_linear(&f, &r);
    println!("\nleft division, f = (x - r)·q + rem:");
    println!("  q   = {}", px.elem_string(&lq));
    println!("  rem = {lrem}");
    assert_eq!(lrem, px.evaluate_left(&f, &r));
    let back = px.add(&px.mul(&px.x_minus(&r), &lq), &px.constant(lrem.clone()));
    assert_eq!(back, f, "left reconstruction is exact");

    println!(
        "\nthe two remainders differ here ({}), because r does not commute with the coefficients",
        if px.evaluate_right(&f, &r) == lrem { "they happen to agree" } else { "as expected" }
    );
}
