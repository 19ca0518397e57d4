//! One support-reduction step on a bistochastic matrix: find an alternating
//! cycle, build its ±1 perturbation pattern, and shift mass until an entry
//! dies.
//!
//! ```bash
//! cargo run --example cycle_reduction
//! ```

use ringmat::birkhoff::{
    find_alternating_cycle, reduce_support, BistochasticMatrix, PerturbationMatrix,
};
use ringmat::matrix::SquareMatrix;

fn main() {
    let a = BistochasticMatrix::new(SquareMatrix::from_str_rows(&[
        &["1/3", "1/3", "1/3"],
        &["1/3", "1/3", "1/3"],
        &["1/3", "1/3", "1/3"],
    ]))
    .unwrap();
    println!("A = {}", a.as_matrix());
    println!("support size: {}", a.support().len());

    // a closed walk through nonzero cells, alternating row and column moves
    let cycle = find_alternating_cycle(&a).unwrap();
    println!(
        "\nalternating cycle of length {}: rows {:?}, cols {:?}",
        cycle.len(),
        cycle.rows(),
        cycle.cols()
    );
    println!("  +1 cells: {:?}", cycle.positive_cells().collect::<Vec<_>>());
    println!("  -1 cells: {:?}", cycle.negative_cells().collect::<Vec<_>>());

    // the perturbation matrix B has zero row and column sums, so A ± cB
    // keeps all line sums at 1
    let b = PerturbationMatrix::from_cycle(&cycle, a.order()).unwrap();
    let c = cycle
        .positive_cells()
        .chain(cycle.negative_cells())
        .map(|(i, j)| a.as_matrix()[(i, j)].clone())
        .min()
        .unwrap();
    println!("\nc = min over the cycle = {c}");
    let plus = BistochasticMatrix::new(b.apply(a.as_matrix(), &c)).unwrap();
    let minus = BistochasticMatrix::new(b.apply(a.as_matrix(), &-&c)).unwrap();
    println!("A + cB = {}   (support {})", plus.as_matrix(), plus.support().len());
    println!("A - cB = {}   (support {})", minus.as_matrix(), minus.support().len());

    // reduce_support picks the variant with fewer nonzeros (ties go to A - cB)
    let reduced = reduce_support(&a).unwrap();
    println!(
        "\nchosen reduction = {}   (support {} < {})",
        reduced.as_matrix(),
        reduced.support().len(),
        a.support().len()
    );

    // iterating grinds the support down until a permutation matrix remains
    // or an entry reaches 1 and splits off as a forced assignment
    let mut current = reduced;
    loop {
        match reduce_support(&current) {
            Ok(next) => current = next,
            Err(stop) => {
                println!("\nafter repeated reduction: {}", current.as_matrix());
                println!("stopped because: {stop}");
                break;
            }
        }
    }
}
