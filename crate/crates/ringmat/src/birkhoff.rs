//! Bistochastic matrices and their exact decomposition into convex
//! combinations of permutation matrices.
//!
//! Everything here runs over [`Rational`], so the decomposition is a
//! certificate: weights sum to exactly 1 and the weighted sum of the
//! permutation matrices reproduces the input entry for entry, with no
//! tolerance anywhere.
//!
//! The decomposition works by repeatedly extracting a permutation lying
//! inside the support of the current matrix ([`support_permutation`]) and
//! peeling it off with the largest exact weight that keeps the remainder
//! bistochastic ([`extract_step`]). Locating a support permutation is itself
//! constructive: while the matrix has no entry equal to 1, its support
//! contains a closed walk alternating between row and column moves through
//! nonzero cells ([`find_alternating_cycle`]); shifting mass around that
//! cycle ([`reduce_support`]) strictly shrinks the support without breaking
//! bistochasticity, and entries that reach 1 split off as forced assignments
//! until only a permutation matrix remains.

use std::collections::BTreeMap;

use rand::Rng;
use thiserror::Error;

use crate::matrix::SquareMatrix;
use crate::rational::Rational;
use crate::ring::{Rationals, Ring};

/// A permutation of `{0, …, n−1}`, stored as its image sequence.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PermutationError {
    #[error("permutation must move at least one point")]
    Empty,
    #[error("images do not form a bijection")]
    NotBijection,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        assert!(n >= 1, "permutation degree must be at least 1");
        Permutation {
            images: (0..n).collect(),
        }
    }

    /// Builds a permutation from zero-based images, checking bijectivity.
    pub fn new(images: Vec<usize>) -> Result<Self, PermutationError> {
        if images.is_empty() {
            return Err(PermutationError::Empty);
        }
        let n = images.len();
        let mut seen = vec![false; n];
        for &j in &images {
            if j >= n || seen[j] {
                return Err(PermutationError::NotBijection);
            }
            seen[j] = true;
        }
        Ok(Permutation { images })
    }

    /// Builds a permutation from one-based images, as used in decomposition
    /// documents.
    pub fn from_one_based(images: &[usize]) -> Result<Self, PermutationError> {
        let zero_based = images
            .iter()
            .map(|&j| j.checked_sub(1).ok_or(PermutationError::NotBijection))
            .collect::<Result<Vec<_>, _>>()?;
        Permutation::new(zero_based)
    }

    pub fn one_based(&self) -> Vec<usize> {
        self.images.iter().map(|&j| j + 1).collect()
    }

    /// The number of points the permutation acts on.
    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            inv[j] = i;
        }
        Permutation { images: inv }
    }

    /// The permutation matrix `P` with `P[k][σ(k)] = 1`, over any ring.
    pub fn to_matrix_in<R: Ring>(&self, ring: &R) -> SquareMatrix<R::Elem> {
        SquareMatrix::from_fn(self.degree(), |i, j| {
            if self.images[i] == j {
                ring.one()
            } else {
                ring.zero()
            }
        })
    }

    /// A uniformly random permutation (Fisher–Yates).
    pub fn random<G: Rng + ?Sized>(n: usize, rng: &mut G) -> Self {
        let mut images: Vec<usize> = (0..n).collect();
        for i in (1..n).rev() {
            let j = rng.random_range(0..=i);
            images.swap(i, j);
        }
        Permutation { images }
    }
}

/// The first constraint a candidate matrix violates. Indices in these
/// reports are one-based, matching the command-line output.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BistochasticViolation {
    #[error("negative entry at ({row}, {col}): {value}")]
    NegativeEntry {
        row: usize,
        col: usize,
        value: Rational,
    },
    #[error("column {col} sums to {sum}")]
    ColumnSum { col: usize, sum: Rational },
    #[error("row {row} sums to {sum}")]
    RowSum { row: usize, sum: Rational },
}

/// A validated bistochastic matrix: every entry is nonnegative and every row
/// and column sums to exactly 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BistochasticMatrix {
    inner: SquareMatrix<Rational>,
}

impl BistochasticMatrix {
    /// Validates a rational matrix. Entries are scanned for negativity in
    /// row-major order first, then column sums are checked (the matrix must
    /// be column stochastic), then row sums (its transpose must be); the
    /// first violated constraint is reported.
    pub fn new(m: SquareMatrix<Rational>) -> Result<Self, BistochasticViolation> {
        let n = m.order();
        for i in 0..n {
            for j in 0..n {
                if m[(i, j)].is_negative() {
                    return Err(BistochasticViolation::NegativeEntry {
                        row: i + 1,
                        col: j + 1,
                        value: m[(i, j)].clone(),
                    });
                }
            }
        }
        for j in 0..n {
            let sum: Rational = (0..n).map(|i| m[(i, j)].clone()).sum();
            if !sum.is_one() {
                return Err(BistochasticViolation::ColumnSum { col: j + 1, sum });
            }
        }
        for i in 0..n {
            let sum: Rational = m.row(i).iter().cloned().sum();
            if !sum.is_one() {
                return Err(BistochasticViolation::RowSum { row: i + 1, sum });
            }
        }
        Ok(BistochasticMatrix { inner: m })
    }

    pub fn order(&self) -> usize {
        self.inner.order()
    }

    pub fn as_matrix(&self) -> &SquareMatrix<Rational> {
        &self.inner
    }

    pub fn into_matrix(self) -> SquareMatrix<Rational> {
        self.inner
    }

    /// Index pairs of the nonzero entries, in row-major order.
    pub fn support(&self) -> Vec<(usize, usize)> {
        let n = self.order();
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if !self.inner[(i, j)].is_zero() {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// If the matrix is exactly a permutation matrix, the permutation.
    pub fn to_permutation(&self) -> Option<Permutation> {
        let n = self.order();
        let mut images = Vec::with_capacity(n);
        for i in 0..n {
            let mut nonzero = (0..n).filter(|&j| !self.inner[(i, j)].is_zero());
            let j = nonzero.next()?;
            if nonzero.next().is_some() {
                return None;
            }
            // a lone nonzero in a unit-sum row is necessarily 1
            images.push(j);
        }
        Some(Permutation::new(images).expect("unit column sums force distinct images"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BirkhoffError {
    #[error("matrix is a permutation matrix; no alternating cycle exists")]
    IsPermutation,
    #[error("entry ({row}, {col}) equals 1; cycle reduction requires every entry below 1")]
    UnitEntry { row: usize, col: usize },
    #[error("cycle index {index} is out of range for order {order}")]
    IndexOutOfRange { index: usize, order: usize },
    #[error("cycle must have equally many rows and columns, at least two of each")]
    CycleShape,
    #[error("cycle rows and cycle columns must each be pairwise distinct")]
    CycleDuplicates,
}

/// A closed alternating walk through the support of a matrix: row indices
/// `i₁…iᵣ` and column indices `j₁…jᵣ` (zero-based, pairwise distinct within
/// each sequence) such that both `(iₜ, jₜ)` and `(iₜ, jₜ₊₁)` are nonzero
/// entries, the column index wrapping around at the end.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlternatingCycle {
    rows: Vec<usize>,
    cols: Vec<usize>,
}

impl AlternatingCycle {
    pub fn new(rows: Vec<usize>, cols: Vec<usize>) -> Result<Self, BirkhoffError> {
        if rows.len() != cols.len() || rows.len() < 2 {
            return Err(BirkhoffError::CycleShape);
        }
        for seq in [&rows, &cols] {
            let mut sorted = seq.clone();
            sorted.sort_unstable();
            if sorted.windows(2).any(|w| w[0] == w[1]) {
                return Err(BirkhoffError::CycleDuplicates);
            }
        }
        Ok(AlternatingCycle { rows, cols })
    }

    /// The cycle length `r` (number of row/column pairs).
    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        false // by construction r >= 2
    }

    pub fn rows(&self) -> &[usize] {
        &self.rows
    }

    pub fn cols(&self) -> &[usize] {
        &self.cols
    }

    /// The cells `(iₜ, jₜ)` that receive `+1` in the perturbation matrix.
    pub fn positive_cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.rows.iter().zip(&self.cols).map(|(&i, &j)| (i, j))
    }

    /// The cells `(iₜ, jₜ₊₁)` that receive `−1`, with the column wrapping.
    pub fn negative_cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let r = self.len();
        (0..r).map(move |t| (self.rows[t], self.cols[(t + 1) % r]))
    }

    /// Whether every cell of the cycle is nonzero in `m`.
    pub fn is_supported_by(&self, m: &SquareMatrix<Rational>) -> bool {
        self.positive_cells()
            .chain(self.negative_cells())
            .all(|(i, j)| !m[(i, j)].is_zero())
    }
}

/// The signed pattern built on an alternating cycle: `+1` on the cells
/// `(iₜ, jₜ)`, `−1` on `(iₜ, jₜ₊₁)`. Every row and column sums to zero, so
/// adding any multiple of it preserves all row and column sums.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PerturbationMatrix {
    order: usize,
    signs: BTreeMap<(usize, usize), i8>,
}

impl PerturbationMatrix {
    pub fn from_cycle(cycle: &AlternatingCycle, order: usize) -> Result<Self, BirkhoffError> {
        for &index in cycle.rows().iter().chain(cycle.cols()) {
            if index >= order {
                return Err(BirkhoffError::IndexOutOfRange { index, order });
            }
        }
        let mut signs = BTreeMap::new();
        for (i, j) in cycle.positive_cells() {
            signs.insert((i, j), 1i8);
        }
        for (i, j) in cycle.negative_cells() {
            // distinctness of the cycle's rows and columns keeps the two
            // cell families disjoint
            let prev = signs.insert((i, j), -1i8);
            debug_assert!(prev.is_none());
        }
        Ok(PerturbationMatrix { order, signs })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// `+1`, `−1`, or `0` at the given cell.
    pub fn sign(&self, i: usize, j: usize) -> i8 {
        self.signs.get(&(i, j)).copied().unwrap_or(0)
    }

    /// The nonzero cells with their signs; there are exactly `2r` of them.
    pub fn cells(&self) -> impl Iterator<Item = ((usize, usize), i8)> + '_ {
        self.signs.iter().map(|(&cell, &sign)| (cell, sign))
    }

    /// The matrix `m + c·B`. Pass a negative `c` to subtract.
    pub fn apply(&self, m: &SquareMatrix<Rational>, c: &Rational) -> SquareMatrix<Rational> {
        let mut out = m.clone();
        for (&(i, j), &sign) in &self.signs {
            let v = if sign > 0 {
                &out[(i, j)] + c
            } else {
                &out[(i, j)] - c
            };
            out[(i, j)] = v;
        }
        out
    }
}

/// Walks the support of the active submatrix until an index repeats, then
/// emits the enclosed cycle.
///
/// The walk starts at the first nonzero active cell in row-major order and
/// always picks the smallest admissible index: a row step moves to the
/// smallest other nonzero column in the current row, a column step to the
/// smallest other nonzero row in the current column. It closes at the first
/// repeated column; if a row repeats first, the closing half-step lands on
/// that row's earlier column visit, which yields the same cycle shifted by
/// one cell.
///
/// Requires the active submatrix to be bistochastic with every entry below 1
/// and not a permutation matrix; then every visited row and column has at
/// least two nonzero entries and the walk always closes.
fn walk_cycle(
    m: &SquareMatrix<Rational>,
    row_alive: &[bool],
    col_alive: &[bool],
) -> AlternatingCycle {
    let n = m.order();
    let start = (0..n)
        .filter(|&i| row_alive[i])
        .flat_map(|i| {
            (0..n)
                .filter(move |&j| col_alive[j] && !m[(i, j)].is_zero())
                .map(move |j| (i, j))
        })
        .next()
        .expect("a bistochastic matrix has a nonzero entry");

    let mut rows = vec![start.0];
    let mut cols = vec![start.1];
    let mut row_pos: Vec<Option<usize>> = vec![None; n];
    let mut col_pos: Vec<Option<usize>> = vec![None; n];
    row_pos[start.0] = Some(0);
    col_pos[start.1] = Some(0);

    loop {
        let row = *rows.last().expect("walk is nonempty");
        let col = *cols.last().expect("walk is nonempty");

        let next_col = (0..n)
            .find(|&j| j != col && col_alive[j] && !m[(row, j)].is_zero())
            .expect("every active row has a second nonzero entry");
        if let Some(s) = col_pos[next_col] {
            // first repeated column: the cycle is the segment between visits
            return AlternatingCycle::new(rows[s..].to_vec(), cols[s..].to_vec())
                .expect("walk segments have distinct indices");
        }

        let next_row = (0..n)
            .find(|&i| i != row && row_alive[i] && !m[(i, next_col)].is_zero())
            .expect("every active column has a second nonzero entry");
        if let Some(s) = row_pos[next_row] {
            // the row repeated first; close on its earlier column visit
            let mut cycle_rows = rows[s + 1..].to_vec();
            cycle_rows.push(next_row);
            let mut cycle_cols = cols[s + 1..].to_vec();
            cycle_cols.push(next_col);
            return AlternatingCycle::new(cycle_rows, cycle_cols)
                .expect("walk segments have distinct indices");
        }

        row_pos[next_row] = Some(rows.len());
        rows.push(next_row);
        col_pos[next_col] = Some(cols.len());
        cols.push(next_col);
    }
}

/// Reduction coefficient and direction for a cycle: `c` is the minimum over
/// all cycle cells, and the chosen variant is the one that zeroes more cells
/// (`A − cB` zeroes positive cells at the minimum, `A + cB` negative ones),
/// with ties going to `A − cB`.
fn plan_reduction(m: &SquareMatrix<Rational>, cycle: &AlternatingCycle) -> (Rational, bool) {
    let c = cycle
        .positive_cells()
        .chain(cycle.negative_cells())
        .map(|(i, j)| m[(i, j)].clone())
        .min()
        .expect("cycle has cells");
    let zeroed_by_minus = cycle.positive_cells().filter(|&(i, j)| m[(i, j)] == c).count();
    let zeroed_by_plus = cycle.negative_cells().filter(|&(i, j)| m[(i, j)] == c).count();
    (c, zeroed_by_minus >= zeroed_by_plus)
}

fn apply_reduction(
    m: &mut SquareMatrix<Rational>,
    cycle: &AlternatingCycle,
    c: &Rational,
    subtract_on_positive: bool,
) {
    for (i, j) in cycle.positive_cells() {
        let v = if subtract_on_positive {
            &m[(i, j)] - c
        } else {
            &m[(i, j)] + c
        };
        m[(i, j)] = v;
    }
    for (i, j) in cycle.negative_cells() {
        let v = if subtract_on_positive {
            &m[(i, j)] + c
        } else {
            &m[(i, j)] - c
        };
        m[(i, j)] = v;
    }
}

fn check_reducible(a: &BistochasticMatrix) -> Result<(), BirkhoffError> {
    if a.to_permutation().is_some() {
        return Err(BirkhoffError::IsPermutation);
    }
    let n = a.order();
    for i in 0..n {
        for j in 0..n {
            if a.as_matrix()[(i, j)].is_one() {
                return Err(BirkhoffError::UnitEntry {
                    row: i + 1,
                    col: j + 1,
                });
            }
        }
    }
    Ok(())
}

/// Finds an alternating cycle in the support of `a`.
///
/// Fails if `a` is a permutation matrix or has an entry equal to 1; in both
/// cases there is nothing to reduce (unit entries are split off directly by
/// [`support_permutation`] instead).
pub fn find_alternating_cycle(a: &BistochasticMatrix) -> Result<AlternatingCycle, BirkhoffError> {
    check_reducible(a)?;
    let n = a.order();
    Ok(walk_cycle(
        a.as_matrix(),
        &vec![true; n],
        &vec![true; n],
    ))
}

/// Shifts mass around an alternating cycle to zero at least one entry.
///
/// With `B` the cycle's perturbation pattern and `c` the minimum entry over
/// the cycle's cells, both `A + cB` and `A − cB` are bistochastic, and
/// neither has a nonzero anywhere `A` had a zero. The variant whose
/// subtracted cells attain `c` gains at least one zero; this returns
/// whichever variant has strictly fewer nonzeros, preferring `A − cB` on a
/// tie, so the support always shrinks and the output is deterministic.
pub fn reduce_support(a: &BistochasticMatrix) -> Result<BistochasticMatrix, BirkhoffError> {
    let cycle = find_alternating_cycle(a)?;
    let (c, subtract_on_positive) = plan_reduction(a.as_matrix(), &cycle);
    let mut m = a.as_matrix().clone();
    apply_reduction(&mut m, &cycle, &c, subtract_on_positive);
    Ok(BistochasticMatrix::new(m).expect("cycle reduction preserves bistochasticity"))
}

/// Locates rows and columns by masking instead of physically deleting them,
/// so emitted assignments and cycles keep the original indices.
struct SupportEngine {
    m: SquareMatrix<Rational>,
    row_alive: Vec<bool>,
    col_alive: Vec<bool>,
    live: usize,
    images: Vec<Option<usize>>,
    cycles: Vec<AlternatingCycle>,
}

impl SupportEngine {
    fn new(a: &BistochasticMatrix) -> Self {
        let n = a.order();
        SupportEngine {
            m: a.as_matrix().clone(),
            row_alive: vec![true; n],
            col_alive: vec![true; n],
            live: n,
            images: vec![None; n],
            cycles: Vec::new(),
        }
    }

    /// If the active submatrix is a permutation matrix, its assignments.
    fn active_permutation(&self) -> Option<Vec<(usize, usize)>> {
        let n = self.m.order();
        let mut out = Vec::new();
        for i in (0..n).filter(|&i| self.row_alive[i]) {
            let mut nonzero =
                (0..n).filter(|&j| self.col_alive[j] && !self.m[(i, j)].is_zero());
            let j = nonzero.next().expect("active rows sum to 1");
            if nonzero.next().is_some() {
                return None;
            }
            out.push((i, j));
        }
        Some(out)
    }

    fn find_unit_entry(&self) -> Option<(usize, usize)> {
        let n = self.m.order();
        for i in (0..n).filter(|&i| self.row_alive[i]) {
            for j in (0..n).filter(|&j| self.col_alive[j]) {
                if self.m[(i, j)].is_one() {
                    return Some((i, j));
                }
            }
        }
        None
    }

    fn run(mut self) -> (Permutation, Vec<AlternatingCycle>) {
        while self.live > 0 {
            if let Some(assignments) = self.active_permutation() {
                for (i, j) in assignments {
                    self.images[i] = Some(j);
                }
                break;
            }
            if let Some((i, j)) = self.find_unit_entry() {
                // the rest of row i and column j is zero, so the remaining
                // active submatrix is bistochastic of one order less
                self.images[i] = Some(j);
                self.row_alive[i] = false;
                self.col_alive[j] = false;
                self.live -= 1;
                continue;
            }
            let cycle = walk_cycle(&self.m, &self.row_alive, &self.col_alive);
            let (c, subtract_on_positive) = plan_reduction(&self.m, &cycle);
            apply_reduction(&mut self.m, &cycle, &c, subtract_on_positive);
            self.cycles.push(cycle);
        }
        let images = self
            .images
            .into_iter()
            .map(|o| o.expect("every row is assigned"))
            .collect();
        let perm = Permutation::new(images).expect("assignments form a bijection");
        (perm, self.cycles)
    }
}

/// A permutation `σ` lying inside the support of `a`: `a[k][σ(k)] ≠ 0` for
/// every `k`. Such a permutation exists for every bistochastic matrix.
///
/// The procedure is deterministic: entries equal to 1 are split off as
/// forced assignments, everything else is ground down by cycle reductions
/// with smallest-index tie-breaking until a permutation matrix remains.
pub fn support_permutation(a: &BistochasticMatrix) -> Permutation {
    SupportEngine::new(a).run().0
}

/// One extraction step of the decomposition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtractStep {
    /// Extraction coefficient `θ ∈ (0, 1]`: the weight of the extracted
    /// permutation relative to the matrix it was extracted from.
    pub weight: Rational,
    pub permutation: Permutation,
    /// The bistochastic remainder `(A − θP)/(1 − θ)`, with strictly smaller
    /// support than `A`; `None` when `A` was exactly a permutation matrix.
    pub residual: Option<BistochasticMatrix>,
}

fn extract_traced(a: &BistochasticMatrix) -> (ExtractStep, Vec<AlternatingCycle>) {
    let n = a.order();
    let (perm, cycles) = SupportEngine::new(a).run();
    let theta = (0..n)
        .map(|k| a.as_matrix()[(k, perm.apply(k))].clone())
        .min()
        .expect("matrix order is at least 1");
    debug_assert!(!theta.is_zero(), "support permutation hits only nonzeros");
    if theta.is_one() {
        // every diagonal value under the permutation is 1, so A = P
        let step = ExtractStep {
            weight: theta,
            permutation: perm,
            residual: None,
        };
        return (step, cycles);
    }
    let denom = Rational::one() - &theta;
    let residual = SquareMatrix::from_fn(n, |i, j| {
        let v = &a.as_matrix()[(i, j)];
        if perm.apply(i) == j {
            &(v - &theta) / &denom
        } else {
            v / &denom
        }
    });
    let residual =
        BistochasticMatrix::new(residual).expect("extraction remainder is bistochastic");
    let step = ExtractStep {
        weight: theta,
        permutation: perm,
        residual: Some(residual),
    };
    (step, cycles)
}

/// Extracts one permutation from `a` with the largest weight that keeps the
/// remainder bistochastic: `σ = support_permutation(a)` and
/// `θ = min_k a[k][σ(k)]`.
pub fn extract_step(a: &BistochasticMatrix) -> ExtractStep {
    extract_traced(a).0
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DecompositionError {
    #[error("term {term}: permutation degree {degree} does not match order {order}")]
    OrderMismatch {
        term: usize,
        degree: usize,
        order: usize,
    },
    #[error("term {term}: weight {weight} is outside (0, 1]")]
    WeightOutOfRange { term: usize, weight: Rational },
    #[error("weights sum to {sum}, not 1")]
    WeightSum { sum: Rational },
    #[error("terms {first} and {second} repeat the same permutation")]
    DuplicatePermutation { first: usize, second: usize },
    #[error("{count} terms exceed the maximum {max} for order {order}")]
    TooManyTerms {
        count: usize,
        max: usize,
        order: usize,
    },
}

/// An exact convex combination of permutation matrices: an ordered list of
/// `(weight, permutation)` pairs with positive weights summing to exactly 1
/// and pairwise distinct permutations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BirkhoffDecomposition {
    order: usize,
    terms: Vec<(Rational, Permutation)>,
}

impl BirkhoffDecomposition {
    /// The largest number of terms any decomposition of an `n×n` matrix may
    /// need: `n² − 2n + 2`. Each extraction confines the remainder to a
    /// strictly smaller face of the polytope of bistochastic matrices, whose
    /// dimension is `(n−1)²`, so at most `(n−1)² + 1` terms appear.
    pub fn max_terms(order: usize) -> usize {
        order * order + 2 - 2 * order
    }

    /// Validates and builds a decomposition. Term indices in error reports
    /// are one-based.
    pub fn new(
        order: usize,
        terms: Vec<(Rational, Permutation)>,
    ) -> Result<Self, DecompositionError> {
        for (idx, (weight, perm)) in terms.iter().enumerate() {
            if perm.degree() != order {
                return Err(DecompositionError::OrderMismatch {
                    term: idx + 1,
                    degree: perm.degree(),
                    order,
                });
            }
            if weight.is_zero() || weight.is_negative() || &Rational::one() < weight {
                return Err(DecompositionError::WeightOutOfRange {
                    term: idx + 1,
                    weight: weight.clone(),
                });
            }
        }
        for (idx, (_, perm)) in terms.iter().enumerate() {
            if let Some(prev) = terms[..idx].iter().position(|(_, p)| p == perm) {
                return Err(DecompositionError::DuplicatePermutation {
                    first: prev + 1,
                    second: idx + 1,
                });
            }
        }
        let sum: Rational = terms.iter().map(|(w, _)| w.clone()).sum();
        if !sum.is_one() {
            return Err(DecompositionError::WeightSum { sum });
        }
        let max = Self::max_terms(order);
        if terms.len() > max {
            return Err(DecompositionError::TooManyTerms {
                count: terms.len(),
                max,
                order,
            });
        }
        Ok(BirkhoffDecomposition { order, terms })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn terms(&self) -> &[(Rational, Permutation)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// The weighted sum `Σ wₖ·Pₖ`, exactly.
    pub fn reconstruct(&self) -> SquareMatrix<Rational> {
        let mut out = SquareMatrix::zero(&Rationals, self.order);
        for (weight, perm) in &self.terms {
            for k in 0..self.order {
                let cell = (k, perm.apply(k));
                let v = &out[cell] + weight;
                out[cell] = v;
            }
        }
        out
    }
}

/// One step of [`decompose_traced`], with everything the step consumed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecomposeStep {
    /// Absolute weight of this term in the final decomposition.
    pub weight: Rational,
    pub permutation: Permutation,
    /// The alternating cycles consumed while locating the permutation.
    pub cycles: Vec<AlternatingCycle>,
    /// The matrix remaining after this term is removed; `None` on the last
    /// step.
    pub residual: Option<SquareMatrix<Rational>>,
}

/// Decomposes a bistochastic matrix into an exact convex combination of
/// permutation matrices by iterating [`extract_step`].
///
/// Weights are accumulated in absolute terms (`θ₁`, `(1−θ₁)θ₂`, …), so any
/// prefix of the term list is the exact beginning of a partial
/// decomposition. Reconstruction returns the input bit for bit.
pub fn decompose(a: &BistochasticMatrix) -> BirkhoffDecomposition {
    decompose_traced(a).0
}

/// Like [`decompose`], but also reports each step's permutation, absolute
/// weight, intermediate residual, and the alternating cycles used.
pub fn decompose_traced(a: &BistochasticMatrix) -> (BirkhoffDecomposition, Vec<DecomposeStep>) {
    let mut current = a.clone();
    let mut remaining = Rational::one();
    let mut terms = Vec::new();
    let mut steps = Vec::new();
    loop {
        let (step, cycles) = extract_traced(&current);
        let weight = &remaining * &step.weight;
        terms.push((weight.clone(), step.permutation.clone()));
        match step.residual {
            None => {
                steps.push(DecomposeStep {
                    weight,
                    permutation: step.permutation,
                    cycles,
                    residual: None,
                });
                break;
            }
            Some(residual) => {
                steps.push(DecomposeStep {
                    weight,
                    permutation: step.permutation,
                    cycles,
                    residual: Some(residual.as_matrix().clone()),
                });
                remaining = &remaining * &(Rational::one() - &step.weight);
                current = residual;
            }
        }
    }
    let decomposition = BirkhoffDecomposition::new(a.order(), terms)
        .expect("extraction produces a valid decomposition");
    (decomposition, steps)
}

/// A random bistochastic matrix built as an exact rational convex
/// combination of `terms` random permutation matrices. Bistochastic by
/// construction; the constructor revalidates it.
pub fn random_convex_combination<G: Rng + ?Sized>(
    n: usize,
    terms: usize,
    rng: &mut G,
) -> BistochasticMatrix {
    assert!(n >= 1 && terms >= 1);
    let raw: Vec<i64> = (0..terms).map(|_| rng.random_range(1..=99)).collect();
    let total: i64 = raw.iter().sum();
    let mut m = SquareMatrix::zero(&Rationals, n);
    for &u in &raw {
        let perm = Permutation::random(n, rng);
        let w = Rational::new(u, total);
        for k in 0..n {
            let cell = (k, perm.apply(k));
            let v = &m[cell] + &w;
            m[cell] = v;
        }
    }
    BistochasticMatrix::new(m)
        .expect("a convex combination of permutation matrices is bistochastic")
}
