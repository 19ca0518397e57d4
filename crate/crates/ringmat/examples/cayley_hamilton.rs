//! Machine-checking that the characteristic polynomial annihilates its
//! matrix, and the adjugate identity behind that fact.
//!
//! ```bash
//! cargo run --example cayley_hamilton
//! ```

use ringmat::matrix::{
    adjugate, adjugate_identity_check, cayley_hamilton_residual, char_matrix, char_poly, mul,
    MatrixRing, SquareMatrix,
};
use ringmat::poly::PolyRing;
use ringmat::ring::{Integers, Ring};

fn main() {
    let a = SquareMatrix::from_int_rows(&[&[1, 2], &[3, 4]]);
    let zx = PolyRing::new(Integers);

    let f = char_poly(&Integers, &a).unwrap();
    println!("A = {a}");
    println!("f(x) = det(xE - A) = {}", zx.elem_string(f.poly()));

    // Substituting A for x: each scalar coefficient is lifted to a scalar
    // matrix c·E first. Scalar matrices commute with everything, which is
    // what makes the substitution respect polynomial products.
    let residual = cayley_hamilton_residual(&Integers, &a).unwrap();
    println!("f(A) = A^2 - 5A - 2E = {residual}");
    assert!(residual.iter().all(|e| e == &0.into()));

    // The identity that drives the proof: (xE - A)* (xE - A) = E f(x),
    // an equation between matrices of polynomials.
    let cm = char_matrix(&Integers, &a);
    let adj = adjugate(&zx, &cm).unwrap();
    let prod = mul(&zx, &adj, &cm).unwrap();
    let ring_of_poly_matrices = MatrixRing::new(zx.clone(), 2);
    println!("\nxE - A        = {}", ring_of_poly_matrices.elem_string(&cm));
    println!("(xE - A)*      = {}", ring_of_poly_matrices.elem_string(&adj));
    println!("their product  = {}", ring_of_poly_matrices.elem_string(&prod));
    assert!(adjugate_identity_check(&Integers, &a).unwrap());

    // the check is total: any square matrix over a commutative ring works
    let b = SquareMatrix::from_int_rows(&[
        &[0, -3, 1, 7],
        &[2, 2, -5, 0],
        &[9, 1, 1, -1],
        &[4, 0, 6, 3],
    ]);
    let res = cayley_hamilton_residual(&Integers, &b).unwrap();
    println!("\n4x4 example: f(B) is zero? {}", res.iter().all(|e| e == &0.into()));
}
