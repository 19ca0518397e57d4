//! Characteristic polynomials over exact arithmetic.
//!
//! ```bash
//! cargo run --example charpoly
//! ```

use ringmat::matrix::{char_poly, determinant, SquareMatrix};
use ringmat::poly::PolyRing;
use ringmat::ring::{Integers, Ring};

fn main() {
    let zx = PolyRing::new(Integers);

    let a = SquareMatrix::from_int_rows(&[&[1, 2], &[3, 4]]);
    let f = char_poly(&Integers, &a).unwrap();
    println!("A = {a}");
    println!("det(xE - A) = {}", zx.elem_string(f.poly()));

    // the classic structure: monic, then -trace, ..., down to (-1)^n det
    let b = SquareMatrix::from_int_rows(&[&[2, -1, 3], &[0, 4, 1], &[-2, 5, -3]]);
    let g = char_poly(&Integers, &b).unwrap();
    println!("\nB = {b}");
    println!("det(xE - B) = {}", zx.elem_string(g.poly()));
    println!("  trace(B) = {}  (negated in the x^2 coefficient)", 2 + 4 - 3);
    println!(
        "  det(B)   = {}  (the constant term is (-1)^3 det)",
        determinant(&Integers, &b).unwrap()
    );

    // diagonal matrices factor into linear terms
    let d = SquareMatrix::from_int_rows(&[&[1, 0, 0], &[0, 2, 0], &[0, 0, 3]]);
    let h = char_poly(&Integers, &d).unwrap();
    println!("\ndiag(1, 2, 3) has (x-1)(x-2)(x-3) = {}", zx.elem_string(h.poly()));
}
