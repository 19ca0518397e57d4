//! Square matrices over a ring, and the division-free machinery needed when
//! the entry ring has no division: determinants by memoized cofactor
//! expansion, adjugates, characteristic polynomials computed over the
//! polynomial ring, and the identities that machine-check the
//! Cayley–Hamilton theorem on concrete inputs.
//!
//! Entries are generic over [`Ring`], so the same [`SquareMatrix`] type
//! serves scalar matrices, matrices of polynomials, and matrices appearing
//! as polynomial coefficients. Addition and multiplication work over any
//! entry ring (multiplication keeps the `aᵢₖ·bₖⱼ` order, which matters if
//! the entries themselves do not commute); determinant-based operations
//! require a commutative entry ring and reject others with a typed error.

use std::fmt;
use std::ops::{Index, IndexMut};

use num_bigint::BigInt;
use thiserror::Error;

use crate::poly::{PolyRing, Polynomial};
use crate::rational::Rational;
use crate::ring::Ring;

/// Determinant-based operations use cofactor expansion memoized over column
/// subsets, which costs `O(n·2ⁿ)` ring operations; orders above this limit
/// are rejected rather than silently taking hours.
pub const MAX_DETERMINANT_ORDER: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatrixError {
    #[error("matrix must have at least one row")]
    Empty,
    #[error("expected a square matrix: {rows} rows but row {row} has {len} entries")]
    NotSquare { rows: usize, row: usize, len: usize },
    #[error("matrix orders differ: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },
    #[error("operation requires a commutative entry ring")]
    NoncommutativeRing,
    #[error("matrix order {order} exceeds the supported maximum {max} for determinant-based operations")]
    OrderTooLarge { order: usize, max: usize },
}

/// An `n×n` matrix with row-major storage. Equality is entrywise.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SquareMatrix<T> {
    order: usize,
    entries: Vec<T>,
}

impl<T> SquareMatrix<T> {
    /// Builds a matrix from rows, checking squareness.
    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self, MatrixError> {
        let n = rows.len();
        if n == 0 {
            return Err(MatrixError::Empty);
        }
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(MatrixError::NotSquare {
                    rows: n,
                    row: i + 1,
                    len: row.len(),
                });
            }
        }
        Ok(SquareMatrix {
            order: n,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    /// Builds an `n×n` matrix by evaluating `f(row, col)` in row-major order.
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        assert!(n >= 1, "matrix order must be at least 1");
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                entries.push(f(i, j));
            }
        }
        SquareMatrix { order: n, entries }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.entries[i * self.order..(i + 1) * self.order]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[T]> {
        self.entries.chunks(self.order)
    }

    /// All entries in row-major order.
    pub fn iter(&self) -> impl Iterator<Item = &T> {
        self.entries.iter()
    }

    pub fn map<U>(&self, f: impl FnMut(&T) -> U) -> SquareMatrix<U> {
        SquareMatrix {
            order: self.order,
            entries: self.entries.iter().map(f).collect(),
        }
    }
}

impl<T: Clone> SquareMatrix<T> {
    pub fn transpose(&self) -> Self {
        SquareMatrix::from_fn(self.order, |i, j| self[(j, i)].clone())
    }
}

impl<T: Clone + PartialEq + fmt::Debug> SquareMatrix<T> {
    /// The identity matrix of order `n`.
    pub fn identity<R: Ring<Elem = T>>(ring: &R, n: usize) -> Self {
        Self::scalar(ring, n, &ring.one())
    }

    /// The zero matrix of order `n`.
    pub fn zero<R: Ring<Elem = T>>(ring: &R, n: usize) -> Self {
        SquareMatrix::from_fn(n, |_, _| ring.zero())
    }

    /// The scalar matrix `c·E`: `c` on the diagonal, zeros elsewhere.
    pub fn scalar<R: Ring<Elem = T>>(ring: &R, n: usize, c: &T) -> Self {
        SquareMatrix::from_fn(n, |i, j| if i == j { c.clone() } else { ring.zero() })
    }
}

impl SquareMatrix<BigInt> {
    /// Convenience constructor for literal integer matrices.
    ///
    /// Panics on non-square input; intended for tests and examples.
    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        SquareMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
                .collect(),
        )
        .expect("rows must form a square matrix")
    }
}

impl SquareMatrix<Rational> {
    /// Convenience constructor for literal rational matrices, e.g.
    /// `from_str_rows(&[&["1/2", "1/2"], &["1/2", "1/2"]])`.
    ///
    /// Panics on non-square input or malformed entries; intended for tests
    /// and examples.
    pub fn from_str_rows(rows: &[&[&str]]) -> Self {
        SquareMatrix::from_rows(
            rows.iter()
                .map(|r| {
                    r.iter()
                        .map(|s| s.parse().expect("entry must be a rational literal"))
                        .collect()
                })
                .collect(),
        )
        .expect("rows must form a square matrix")
    }
}

impl<T> Index<(usize, usize)> for SquareMatrix<T> {
    type Output = T;
    fn index(&self, (i, j): (usize, usize)) -> &T {
        &self.entries[i * self.order + j]
    }
}

impl<T> IndexMut<(usize, usize)> for SquareMatrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        &mut self.entries[i * self.order + j]
    }
}

impl<T: fmt::Display> fmt::Display for SquareMatrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, row) in self.rows().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for (j, e) in row.iter().enumerate() {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{e}")?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

fn check_same_order<T, U>(a: &SquareMatrix<T>, b: &SquareMatrix<U>) -> Result<(), MatrixError> {
    if a.order != b.order {
        return Err(MatrixError::OrderMismatch {
            left: a.order,
            right: b.order,
        });
    }
    Ok(())
}

/// Entrywise sum.
pub fn add<R: Ring>(
    ring: &R,
    a: &SquareMatrix<R::Elem>,
    b: &SquareMatrix<R::Elem>,
) -> Result<SquareMatrix<R::Elem>, MatrixError> {
    check_same_order(a, b)?;
    Ok(SquareMatrix::from_fn(a.order, |i, j| {
        ring.add(&a[(i, j)], &b[(i, j)])
    }))
}

pub fn sub<R: Ring>(
    ring: &R,
    a: &SquareMatrix<R::Elem>,
    b: &SquareMatrix<R::Elem>,
) -> Result<SquareMatrix<R::Elem>, MatrixError> {
    check_same_order(a, b)?;
    Ok(SquareMatrix::from_fn(a.order, |i, j| {
        ring.sub(&a[(i, j)], &b[(i, j)])
    }))
}

pub fn neg<R: Ring>(ring: &R, a: &SquareMatrix<R::Elem>) -> SquareMatrix<R::Elem> {
    a.map(|e| ring.neg(e))
}

/// Matrix product. Each entry is `Σₖ aᵢₖ·bₖⱼ` with the factors in that
/// order, so the result is correct even over a noncommutative entry ring.
pub fn mul<R: Ring>(
    ring: &R,
    a: &SquareMatrix<R::Elem>,
    b: &SquareMatrix<R::Elem>,
) -> Result<SquareMatrix<R::Elem>, MatrixError> {
    check_same_order(a, b)?;
    let n = a.order;
    Ok(SquareMatrix::from_fn(n, |i, j| {
        let mut acc = ring.zero();
        for k in 0..n {
            acc = ring.add(&acc, &ring.mul(&a[(i, k)], &b[(k, j)]));
        }
        acc
    }))
}

/// Left scalar multiple `c·A`.
pub fn scale<R: Ring>(ring: &R, c: &R::Elem, a: &SquareMatrix<R::Elem>) -> SquareMatrix<R::Elem> {
    a.map(|e| ring.mul(c, e))
}

pub fn is_zero_matrix<R: Ring>(ring: &R, a: &SquareMatrix<R::Elem>) -> bool {
    a.iter().all(|e| ring.is_zero(e))
}

fn check_determinant_input<R: Ring>(
    ring: &R,
    m: &SquareMatrix<R::Elem>,
) -> Result<(), MatrixError> {
    if !ring.is_commutative() {
        return Err(MatrixError::NoncommutativeRing);
    }
    if m.order > MAX_DETERMINANT_ORDER {
        return Err(MatrixError::OrderTooLarge {
            order: m.order,
            max: MAX_DETERMINANT_ORDER,
        });
    }
    Ok(())
}

/// Determinant by cofactor expansion, memoized over subsets of unused
/// columns. Division-free, so it works over any commutative ring — in
/// particular over polynomial rings, where fraction-free elimination would
/// need exact division.
pub fn determinant<R: Ring>(
    ring: &R,
    m: &SquareMatrix<R::Elem>,
) -> Result<R::Elem, MatrixError> {
    check_determinant_input(ring, m)?;
    Ok(det_memoized(ring, m))
}

fn det_memoized<R: Ring>(ring: &R, m: &SquareMatrix<R::Elem>) -> R::Elem {
    let n = m.order;
    let mut memo: Vec<Option<R::Elem>> = vec![None; 1 << n];
    det_rec(ring, m, (1u32 << n) - 1, &mut memo)
}

// `mask` holds the columns not yet consumed; the row to expand along is
// determined by how many columns have been consumed so far.
fn det_rec<R: Ring>(
    ring: &R,
    m: &SquareMatrix<R::Elem>,
    mask: u32,
    memo: &mut [Option<R::Elem>],
) -> R::Elem {
    if mask == 0 {
        return ring.one();
    }
    if let Some(v) = &memo[mask as usize] {
        return v.clone();
    }
    let n = m.order;
    let row = n - mask.count_ones() as usize;
    let mut acc = ring.zero();
    let mut pos = 0u32;
    for j in 0..n {
        if mask & (1 << j) == 0 {
            continue;
        }
        let entry = &m[(row, j)];
        if !ring.is_zero(entry) {
            let minor = det_rec(ring, m, mask & !(1 << j), memo);
            let term = ring.mul(entry, &minor);
            acc = if pos.is_multiple_of(2) {
                ring.add(&acc, &term)
            } else {
                ring.sub(&acc, &term)
            };
        }
        pos += 1;
    }
    memo[mask as usize] = Some(acc.clone());
    acc
}

/// The adjugate (transposed cofactor matrix). Satisfies
/// `adj(A)·A = A·adj(A) = det(A)·E` over any commutative ring.
pub fn adjugate<R: Ring>(
    ring: &R,
    m: &SquareMatrix<R::Elem>,
) -> Result<SquareMatrix<R::Elem>, MatrixError> {
    check_determinant_input(ring, m)?;
    let n = m.order;
    if n == 1 {
        return Ok(SquareMatrix::identity(ring, 1));
    }
    let mut cof = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            let minor = SquareMatrix::from_fn(n - 1, |r, c| {
                let rr = if r < i { r } else { r + 1 };
                let cc = if c < j { c } else { c + 1 };
                m[(rr, cc)].clone()
            });
            let d = det_memoized(ring, &minor);
            cof.push(if (i + j) % 2 == 0 { d } else { ring.neg(&d) });
        }
    }
    // transpose while placing
    Ok(SquareMatrix::from_fn(n, |i, j| cof[j * n + i].clone()))
}

/// The characteristic matrix `xE − A`, with entries in the polynomial ring
/// over the entry ring of `A`.
pub fn char_matrix<R: Ring>(
    ring: &R,
    a: &SquareMatrix<R::Elem>,
) -> SquareMatrix<Polynomial<R::Elem>> {
    let sx = PolyRing::new(ring.clone());
    SquareMatrix::from_fn(a.order, |i, j| {
        if i == j {
            sx.x_minus(&a[(i, j)])
        } else {
            sx.constant(ring.neg(&a[(i, j)]))
        }
    })
}

/// The characteristic polynomial `det(xE − A)`: monic of degree `n`, with
/// `−trace(A)` as the coefficient of `x^{n−1}` and `(−1)ⁿ·det(A)` as the
/// constant term.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharPoly<T> {
    poly: Polynomial<T>,
}

impl<T> CharPoly<T> {
    pub fn poly(&self) -> &Polynomial<T> {
        &self.poly
    }

    pub fn into_poly(self) -> Polynomial<T> {
        self.poly
    }
}

pub fn char_poly<R: Ring>(
    ring: &R,
    a: &SquareMatrix<R::Elem>,
) -> Result<CharPoly<R::Elem>, MatrixError> {
    check_determinant_input(ring, a)?;
    let sx = PolyRing::new(ring.clone());
    let poly = det_memoized(&sx, &char_matrix(ring, a));
    assert_eq!(
        poly.coeffs().len(),
        a.order + 1,
        "characteristic polynomial must have degree n"
    );
    assert!(
        ring.is_one(poly.leading().expect("nonzero")),
        "characteristic polynomial must be monic"
    );
    Ok(CharPoly { poly })
}

/// Reinterprets a matrix of polynomials as a polynomial with matrix
/// coefficients: the degree-`k` coefficient is the matrix of degree-`k`
/// entry coefficients. This is the bridge between `Mₙ(S[x])` and
/// `(Mₙ(S))[x]`; it is a ring isomorphism and round-trips losslessly with
/// [`reinterpret_inv`].
pub fn reinterpret<R: Ring>(
    ring: &R,
    m: &SquareMatrix<Polynomial<R::Elem>>,
) -> Polynomial<SquareMatrix<R::Elem>> {
    let n = m.order;
    let mx = PolyRing::new(MatrixRing::new(ring.clone(), n));
    let len = m.iter().map(|p| p.coeffs().len()).max().unwrap_or(0);
    let coeffs = (0..len)
        .map(|k| {
            SquareMatrix::from_fn(n, |i, j| {
                m[(i, j)]
                    .coeff(k)
                    .cloned()
                    .unwrap_or_else(|| ring.zero())
            })
        })
        .collect();
    mx.from_coeffs(coeffs)
}

/// Inverse of [`reinterpret`]: spreads matrix coefficients back into a
/// matrix of polynomials of order `n`.
pub fn reinterpret_inv<R: Ring>(
    ring: &R,
    n: usize,
    f: &Polynomial<SquareMatrix<R::Elem>>,
) -> Result<SquareMatrix<Polynomial<R::Elem>>, MatrixError> {
    for c in f.coeffs() {
        check_same_order_n(n, c)?;
    }
    let sx = PolyRing::new(ring.clone());
    Ok(SquareMatrix::from_fn(n, |i, j| {
        sx.from_coeffs(f.coeffs().iter().map(|c| c[(i, j)].clone()).collect())
    }))
}

fn check_same_order_n<T>(n: usize, m: &SquareMatrix<T>) -> Result<(), MatrixError> {
    if m.order != n {
        return Err(MatrixError::OrderMismatch {
            left: n,
            right: m.order,
        });
    }
    Ok(())
}

/// Evaluates the characteristic polynomial of `A` at `A` itself and returns
/// the resulting matrix, which the Cayley–Hamilton theorem asserts is zero.
///
/// Each scalar coefficient `c` is lifted to the scalar matrix `c·E` before
/// substituting. Scalar matrices commute with every matrix, and commuting
/// with the coefficients of the factors is precisely the hypothesis under
/// which right evaluation distributes over a polynomial product — so the
/// lifted evaluation faithfully reproduces the identity it is checking, and
/// the check is not circular.
pub fn cayley_hamilton_residual<R: Ring>(
    ring: &R,
    a: &SquareMatrix<R::Elem>,
) -> Result<SquareMatrix<R::Elem>, MatrixError> {
    let cp = char_poly(ring, a)?;
    let n = a.order;
    let mring = MatrixRing::new(ring.clone(), n);
    let mx = PolyRing::new(mring);
    let lifted = mx.from_coeffs(
        cp.poly()
            .coeffs()
            .iter()
            .map(|c| SquareMatrix::scalar(ring, n, c))
            .collect(),
    );
    Ok(mx.evaluate_right(&lifted, a))
}

/// Whether the characteristic polynomial of `A` annihilates `A`. True for
/// every square matrix over a commutative ring.
pub fn cayley_hamilton_check<R: Ring>(
    ring: &R,
    a: &SquareMatrix<R::Elem>,
) -> Result<bool, MatrixError> {
    Ok(is_zero_matrix(ring, &cayley_hamilton_residual(ring, a)?))
}

/// The matrix `(xE−A)*·(xE−A) − E·f(x)` over the polynomial ring, where
/// `f` is the characteristic polynomial and `*` is the adjugate. Zero for
/// every input.
pub fn adjugate_identity_residual<R: Ring>(
    ring: &R,
    a: &SquareMatrix<R::Elem>,
) -> Result<SquareMatrix<Polynomial<R::Elem>>, MatrixError> {
    let sx = PolyRing::new(ring.clone());
    let cm = char_matrix(ring, a);
    let adj = adjugate(&sx, &cm)?;
    let prod = mul(&sx, &adj, &cm)?;
    let f = det_memoized(&sx, &cm);
    let ef = SquareMatrix::scalar(&sx, a.order, &f);
    sub(&sx, &prod, &ef)
}

/// Whether `(xE−A)*·(xE−A) = E·f(x)` holds coefficient-by-coefficient.
/// True for every square matrix over a commutative ring.
pub fn adjugate_identity_check<R: Ring>(
    ring: &R,
    a: &SquareMatrix<R::Elem>,
) -> Result<bool, MatrixError> {
    let sx = PolyRing::new(ring.clone());
    Ok(is_zero_matrix(&sx, &adjugate_identity_residual(ring, a)?))
}

/// The ring `Mₙ(R)` of `n×n` matrices over `R`. Noncommutative for `n ≥ 2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixRing<R: Ring> {
    base: R,
    order: usize,
}

impl<R: Ring> MatrixRing<R> {
    pub fn new(base: R, order: usize) -> Self {
        assert!(order >= 1, "matrix ring order must be at least 1");
        MatrixRing { base, order }
    }

    pub fn base(&self) -> &R {
        &self.base
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// The identity matrix of this ring's order.
    pub fn identity(&self) -> SquareMatrix<R::Elem> {
        self.one()
    }

    /// The scalar matrix `c·E`.
    pub fn scalar(&self, c: &R::Elem) -> SquareMatrix<R::Elem> {
        SquareMatrix::scalar(&self.base, self.order, c)
    }

    fn check_elem(&self, a: &SquareMatrix<R::Elem>) {
        assert_eq!(
            a.order, self.order,
            "matrix order does not match this ring's order"
        );
    }
}

impl<R: Ring> Ring for MatrixRing<R> {
    type Elem = SquareMatrix<R::Elem>;

    fn zero(&self) -> Self::Elem {
        SquareMatrix::zero(&self.base, self.order)
    }

    fn one(&self) -> Self::Elem {
        SquareMatrix::identity(&self.base, self.order)
    }

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.check_elem(a);
        add(&self.base, a, b).expect("orders checked")
    }

    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        self.check_elem(a);
        neg(&self.base, a)
    }

    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.check_elem(a);
        mul(&self.base, a, b).expect("orders checked")
    }

    fn is_commutative(&self) -> bool {
        self.order == 1 && self.base.is_commutative()
    }

    fn from_i64(&self, n: i64) -> Self::Elem {
        self.scalar(&self.base.from_i64(n))
    }

    fn is_zero(&self, a: &Self::Elem) -> bool {
        a.order == self.order && a.iter().all(|e| self.base.is_zero(e))
    }

    fn fmt_elem(&self, a: &Self::Elem, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, row) in a.rows().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for (j, e) in row.iter().enumerate() {
                if j > 0 {
                    write!(f, ", ")?;
                }
                self.base.fmt_elem(e, f)?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}
