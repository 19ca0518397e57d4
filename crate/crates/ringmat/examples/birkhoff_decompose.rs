//! Exact Birkhoff decomposition: write a bistochastic matrix as a convex
//! combination of permutation matrices and rebuild it bit for bit.
//!
//! ```bash
//! cargo run --example birkhoff_decompose
//! ```

use rand::SeedableRng;
use ringmat::birkhoff::{decompose_traced, random_convex_combination, BistochasticMatrix};
use ringmat::matrix::SquareMatrix;
use ringmat::rational::Rational;

fn main() {
    let a = BistochasticMatrix::new(SquareMatrix::from_str_rows(&[
        &["1/2", "1/4", "1/4", "0"],
        &["1/4", "1/2", "0", "1/4"],
        &["1/4", "0", "1/2", "1/4"],
        &["0", "1/4", "1/4", "1/2"],
    ]))
    .unwrap();
    println!("A = {}", a.as_matrix());

    let (d, steps) = decompose_traced(&a);
    println!("\ndecomposition into {} permutation matrices:", d.len());
    for (weight, perm) in d.terms() {
        println!("  {weight} * P{:?}", perm.one_based());
    }
    let total: Rational = d.terms().iter().map(|(w, _)| w.clone()).sum();
    println!("weights sum to {total}");
    assert!(total.is_one());

    println!("\nextraction trace:");
    for (k, step) in steps.iter().enumerate() {
        println!(
            "  step {}: peel {} * P{:?} after {} cycle reduction(s)",
            k + 1,
            step.weight,
            step.permutation.one_based(),
            step.cycles.len()
        );
        if let Some(residual) = &step.residual {
            println!("          residual = {residual}");
        }
    }

    assert_eq!(d.reconstruct(), *a.as_matrix());
    println!("\nreconstruction matches the input exactly");

    // it scales: a random convex combination decomposes and round-trips too
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(42);
    let random = random_convex_combination(6, 9, &mut rng);
    let d = ringmat::birkhoff::decompose(&random);
    assert_eq!(d.reconstruct(), *random.as_matrix());
    println!(
        "random 6x6 combination: {} terms, exact round trip",
        d.len()
    );
}
