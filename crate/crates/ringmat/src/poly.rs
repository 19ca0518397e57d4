//! Polynomials over an arbitrary ring with identity.
//!
//! Coefficients are written on the left: a polynomial is `Σ aᵢxⁱ`, stored as
//! the dense coefficient sequence `[a₀, a₁, …]`. The indeterminate commutes
//! with every coefficient (`r·x = x·r`), so the product of two terms is
//! `(aᵢxⁱ)(bⱼxʲ) = (aᵢbⱼ)x^{i+j}` — the coefficient product keeps its order,
//! which matters when the coefficient ring is noncommutative (matrix rings,
//! say).
//!
//! Because coefficients need not commute with a substituted value, there are
//! two evaluations and two linear divisions:
//!
//! - [`PolyRing::evaluate_right`] computes `Σ aᵢrⁱ`. It is multiplicative on
//!   a product `f = g·h` only when `r` commutes with every coefficient of
//!   `h`; see [`PolyRing::commutes_with_coeffs`].
//! - [`PolyRing::evaluate_left`] computes `Σ rⁱaᵢ`, the form one gets by
//!   writing terms as `xⁱaᵢ` instead. It is multiplicative when `r` commutes
//!   with every coefficient of the *left* factor.
//! - [`PolyRing::divide_right_linear`] writes `f = q·(x − r) + f(r)` and
//!   [`PolyRing::divide_left_linear`] writes `f = (x − r)·q + f̃(r)`, the two
//!   noncommutative forms of division by a monic linear polynomial. Division
//!   by general divisors is deliberately absent: without an invertible
//!   leading coefficient it is not well defined over a noncommutative ring.

use std::fmt;
use std::ops::Add;

use crate::ring::Ring;

/// Degree of a polynomial. The zero polynomial has no degree; it compares
/// below every finite degree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Degree {
    MinusInfinity,
    Finite(usize),
}

impl Degree {
    pub fn is_finite(self) -> bool {
        matches!(self, Degree::Finite(_))
    }
}

/// Degree arithmetic: `−∞` absorbs addition.
impl Add for Degree {
    type Output = Degree;
    fn add(self, rhs: Degree) -> Degree {
        match (self, rhs) {
            (Degree::Finite(a), Degree::Finite(b)) => Degree::Finite(a + b),
            _ => Degree::MinusInfinity,
        }
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::MinusInfinity => write!(f, "-inf"),
            Degree::Finite(d) => write!(f, "{d}"),
        }
    }
}

/// A dense polynomial: `coeffs[i]` is the coefficient of `xⁱ`.
///
/// Invariant: either the coefficient vector is empty (the zero polynomial)
/// or its last entry is nonzero. Construct values through a [`PolyRing`],
/// which trims trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial<T> {
    coeffs: Vec<T>,
}

impl<T> Polynomial<T> {
    /// The zero polynomial (empty coefficient sequence).
    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Degree {
        match self.coeffs.len() {
            0 => Degree::MinusInfinity,
            n => Degree::Finite(n - 1),
        }
    }

    /// Coefficients by ascending degree; the last one is nonzero.
    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Option<&T> {
        self.coeffs.get(k)
    }

    pub fn leading(&self) -> Option<&T> {
        self.coeffs.last()
    }
}

/// The polynomial ring `R[x]` over a coefficient ring `R`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PolyRing<R: Ring> {
    base: R,
}

impl<R: Ring> PolyRing<R> {
    pub fn new(base: R) -> Self {
        PolyRing { base }
    }

    pub fn base(&self) -> &R {
        &self.base
    }

    fn trim(&self, coeffs: &mut Vec<R::Elem>) {
        while coeffs.last().is_some_and(|c| self.base.is_zero(c)) {
            coeffs.pop();
        }
    }

    /// Builds a polynomial from coefficients in ascending degree, trimming
    /// trailing zeros.
    pub fn from_coeffs(&self, mut coeffs: Vec<R::Elem>) -> Polynomial<R::Elem> {
        self.trim(&mut coeffs);
        Polynomial { coeffs }
    }

    pub fn constant(&self, c: R::Elem) -> Polynomial<R::Elem> {
        self.from_coeffs(vec![c])
    }

    /// The monomial `c·xᵏ`.
    pub fn monomial(&self, c: R::Elem, k: usize) -> Polynomial<R::Elem> {
        if self.base.is_zero(&c) {
            return Polynomial::zero();
        }
        let mut coeffs = vec![self.base.zero(); k + 1];
        coeffs[k] = c;
        Polynomial { coeffs }
    }

    /// The indeterminate `x`.
    pub fn x(&self) -> Polynomial<R::Elem> {
        self.monomial(self.base.one(), 1)
    }

    /// The monic linear polynomial `x − r`.
    pub fn x_minus(&self, r: &R::Elem) -> Polynomial<R::Elem> {
        Polynomial {
            coeffs: vec![self.base.neg(r), self.base.one()],
        }
    }

    /// The coefficient of `xᵏ`, as an owned element (zero beyond the degree).
    pub fn coefficient(&self, f: &Polynomial<R::Elem>, k: usize) -> R::Elem {
        f.coeff(k).cloned().unwrap_or_else(|| self.base.zero())
    }

    /// Right evaluation `f(r) = Σ aᵢrⁱ`, substituting `r` for `x` with every
    /// coefficient kept on the left. Computed by Horner's scheme with the
    /// multiplications by `r` on the right.
    pub fn evaluate_right(&self, f: &Polynomial<R::Elem>, r: &R::Elem) -> R::Elem {
        let mut iter = f.coeffs.iter().rev();
        let Some(top) = iter.next() else {
            return self.base.zero();
        };
        let mut acc = top.clone();
        for c in iter {
            acc = self.base.add(&self.base.mul(&acc, r), c);
        }
        acc
    }

    /// Left evaluation `Σ rⁱaᵢ`, the dual of [`evaluate_right`] obtained by
    /// taking `xⁱaᵢ` as the standard form of a term. Over a commutative
    /// coefficient ring the two evaluations agree.
    ///
    /// [`evaluate_right`]: PolyRing::evaluate_right
    pub fn evaluate_left(&self, f: &Polynomial<R::Elem>, r: &R::Elem) -> R::Elem {
        let mut iter = f.coeffs.iter().rev();
        let Some(top) = iter.next() else {
            return self.base.zero();
        };
        let mut acc = top.clone();
        for c in iter {
            acc = self.base.add(&self.base.mul(r, &acc), c);
        }
        acc
    }

    /// Whether `r` commutes with every coefficient of `f`. This is exactly
    /// the hypothesis under which right evaluation at `r` is multiplicative
    /// across a product whose right factor is `f`.
    pub fn commutes_with_coeffs(&self, r: &R::Elem, f: &Polynomial<R::Elem>) -> bool {
        f.coeffs.iter().all(|c| self.base.commutes(r, c))
    }

    /// Divides by the monic linear polynomial `x − r` with the divisor on
    /// the right: returns `(q, rem)` with `f = q·(x − r) + rem`. The
    /// remainder is a constant and always equals `evaluate_right(f, r)`.
    pub fn divide_right_linear(
        &self,
        f: &Polynomial<R::Elem>,
        r: &R::Elem,
    ) -> (Polynomial<R::Elem>, R::Elem) {
        let Some(d) = f.coeffs.len().checked_sub(1) else {
            return (Polynomial::zero(), self.base.zero());
        };
        if d == 0 {
            return (Polynomial::zero(), f.coeffs[0].clone());
        }
        // Synthetic division from the top: q_{d-1} = a_d, q_{k-1} = a_k + q_k·r.
        let mut q = vec![self.base.zero(); d];
        q[d - 1] = f.coeffs[d].clone();
        for k in (1..d).rev() {
            q[k - 1] = self.base.add(&f.coeffs[k], &self.base.mul(&q[k], r));
        }
        let rem = self.base.add(&f.coeffs[0], &self.base.mul(&q[0], r));
        (self.from_coeffs(q), rem)
    }

    /// Divides by `x − r` with the divisor on the left: returns `(q, rem)`
    /// with `f = (x − r)·q + rem`. The remainder always equals
    /// `evaluate_left(f, r)`.
    pub fn divide_left_linear(
        &self,
        f: &Polynomial<R::Elem>,
        r: &R::Elem,
    ) -> (Polynomial<R::Elem>, R::Elem) {
        let Some(d) = f.coeffs.len().checked_sub(1) else {
            return (Polynomial::zero(), self.base.zero());
        };
        if d == 0 {
            return (Polynomial::zero(), f.coeffs[0].clone());
        }
        let mut q = vec![self.base.zero(); d];
        q[d - 1] = f.coeffs[d].clone();
        for k in (1..d).rev() {
            q[k - 1] = self.base.add(&f.coeffs[k], &self.base.mul(r, &q[k]));
        }
        let rem = self.base.add(&f.coeffs[0], &self.base.mul(r, &q[0]));
        (self.from_coeffs(q), rem)
    }

    fn needs_parens(s: &str) -> bool {
        s.contains([' ', '/', '[']) || s.starts_with('-')
    }
}

impl<R: Ring> Ring for PolyRing<R> {
    type Elem = Polynomial<R::Elem>;

    fn zero(&self) -> Self::Elem {
        Polynomial::zero()
    }

    fn one(&self) -> Self::Elem {
        self.constant(self.base.one())
    }

    fn add(&self, f: &Self::Elem, g: &Self::Elem) -> Self::Elem {
        let (long, short) = if f.coeffs.len() >= g.coeffs.len() {
            (f, g)
        } else {
            (g, f)
        };
        let mut coeffs = long.coeffs.clone();
        for (c, s) in coeffs.iter_mut().zip(&short.coeffs) {
            *c = self.base.add(c, s);
        }
        self.from_coeffs(coeffs)
    }

    fn neg(&self, f: &Self::Elem) -> Self::Elem {
        Polynomial {
            coeffs: f.coeffs.iter().map(|c| self.base.neg(c)).collect(),
        }
    }

    /// Convolution product: the coefficient of `xᵏ` in `f·g` is
    /// `Σ_{i+j=k} aᵢbⱼ` with `aᵢ` from `f` and `bⱼ` from `g`, in that order.
    fn mul(&self, f: &Self::Elem, g: &Self::Elem) -> Self::Elem {
        if f.is_zero() || g.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![self.base.zero(); f.coeffs.len() + g.coeffs.len() - 1];
        for (i, a) in f.coeffs.iter().enumerate() {
            if self.base.is_zero(a) {
                continue;
            }
            for (j, b) in g.coeffs.iter().enumerate() {
                let term = self.base.mul(a, b);
                coeffs[i + j] = self.base.add(&coeffs[i + j], &term);
            }
        }
        // The leading product can vanish (zero divisors, noncommutative
        // nilpotents), so trimming is still required here.
        self.from_coeffs(coeffs)
    }

    fn is_commutative(&self) -> bool {
        self.base.is_commutative()
    }

    fn from_i64(&self, n: i64) -> Self::Elem {
        self.constant(self.base.from_i64(n))
    }

    fn is_zero(&self, f: &Self::Elem) -> bool {
        f.is_zero()
    }

    /// Renders terms in descending degree: `x^2 - 5x - 2`, `(1/2)x + 1`,
    /// `([[0, 1], [0, 0]])x`. Coefficient formatting is delegated to the
    /// coefficient ring; signs are pulled out when that ring reports them.
    fn fmt_elem(&self, f: &Self::Elem, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        if f.is_zero() {
            return write!(out, "0");
        }
        let mut first = true;
        for (k, c) in f.coeffs.iter().enumerate().rev() {
            if self.base.is_zero(c) {
                continue;
            }
            let (negative, magnitude) = match self.base.sign_split(c) {
                Some((neg, mag)) => (neg, mag),
                None => (false, c.clone()),
            };
            if first {
                if negative {
                    write!(out, "-")?;
                }
                first = false;
            } else if negative {
                write!(out, " - ")?;
            } else {
                write!(out, " + ")?;
            }
            let coeff_str = self.base.elem_string(&magnitude);
            if k == 0 {
                write!(out, "{coeff_str}")?;
            } else {
                if !self.base.is_one(&magnitude) {
                    if Self::needs_parens(&coeff_str) {
                        write!(out, "({coeff_str})")?;
                    } else {
                        write!(out, "{coeff_str}")?;
                    }
                }
                if k == 1 {
                    write!(out, "x")?;
                } else {
                    write!(out, "x^{k}")?;
                }
            }
        }
        Ok(())
    }
}
