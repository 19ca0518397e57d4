//! The ring vocabulary shared by every algebraic structure in this crate.
//!
//! A [`Ring`] value is a descriptor: a small object that knows how to add,
//! negate and multiply elements, which elements are the additive and
//! multiplicative identities, and whether multiplication commutes. Rings
//! whose shape depends on runtime data carry that data in the descriptor —
//! a matrix ring knows its order, a polynomial ring knows its coefficient
//! ring. Elements themselves are plain immutable values with no back-pointer
//! to their ring, so they can be shared and sent across threads freely.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::rational::Rational;

/// A ring with identity, described by a value.
///
/// Implementations must satisfy the usual laws: addition is associative and
/// commutative with identity [`zero`](Ring::zero) and inverses given by
/// [`neg`](Ring::neg); multiplication is associative with identity
/// [`one`](Ring::one) and distributes over addition. Multiplication need not
/// commute; [`is_commutative`](Ring::is_commutative) reports whether it does.
pub trait Ring: Clone {
    type Elem: Clone + PartialEq + fmt::Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    /// The product `a·b`, in that order.
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;

    /// Whether `a·b = b·a` holds for every pair of elements.
    fn is_commutative(&self) -> bool;

    /// Embeds a machine integer as `n·1`.
    #[allow(clippy::wrong_self_convention)]
    fn from_i64(&self, n: i64) -> Self::Elem;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    fn is_zero(&self, a: &Self::Elem) -> bool {
        *a == self.zero()
    }

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    /// Whether the two given elements commute with each other.
    fn commutes(&self, a: &Self::Elem, b: &Self::Elem) -> bool {
        self.mul(a, b) == self.mul(b, a)
    }

    /// Formats an element. Composite rings override this to render their
    /// structure (matrices as nested row lists, polynomials as terms).
    fn fmt_elem(&self, a: &Self::Elem, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{a:?}")
    }

    /// `format!`-friendly wrapper around [`fmt_elem`](Ring::fmt_elem).
    fn elem_string(&self, a: &Self::Elem) -> String {
        DisplayElem { ring: self, elem: a }.to_string()
    }

    /// Splits an element into `(is_negative, magnitude)` when the ring has a
    /// usable notion of sign. Ordered scalar rings override this so that
    /// polynomial formatting can render `x - 5` rather than `x + -5`;
    /// structured rings leave it as `None`.
    fn sign_split(&self, a: &Self::Elem) -> Option<(bool, Self::Elem)> {
        let _ = a;
        None
    }
}

struct DisplayElem<'a, R: Ring> {
    ring: &'a R,
    elem: &'a R::Elem,
}

impl<R: Ring> fmt::Display for DisplayElem<'_, R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.ring.fmt_elem(self.elem, f)
    }
}

/// The ring of arbitrary-precision integers.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Integers;

impl Ring for Integers {
    type Elem = BigInt;

    fn zero(&self) -> BigInt {
        BigInt::zero()
    }

    fn one(&self) -> BigInt {
        BigInt::one()
    }

    fn add(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a + b
    }

    fn neg(&self, a: &BigInt) -> BigInt {
        -a
    }

    fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a * b
    }

    fn is_commutative(&self) -> bool {
        true
    }

    fn from_i64(&self, n: i64) -> BigInt {
        BigInt::from(n)
    }

    fn is_zero(&self, a: &BigInt) -> bool {
        Zero::is_zero(a)
    }

    fn is_one(&self, a: &BigInt) -> bool {
        One::is_one(a)
    }

    fn fmt_elem(&self, a: &BigInt, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{a}")
    }

    fn sign_split(&self, a: &BigInt) -> Option<(bool, BigInt)> {
        Some((a.is_negative(), a.abs()))
    }
}

/// The field of arbitrary-precision rationals in canonical form.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Rationals;

impl Ring for Rationals {
    type Elem = Rational;

    fn zero(&self) -> Rational {
        Rational::zero()
    }

    fn one(&self) -> Rational {
        Rational::one()
    }

    fn add(&self, a: &Rational, b: &Rational) -> Rational {
        a + b
    }

    fn neg(&self, a: &Rational) -> Rational {
        -a
    }

    fn mul(&self, a: &Rational, b: &Rational) -> Rational {
        a * b
    }

    fn is_commutative(&self) -> bool {
        true
    }

    fn from_i64(&self, n: i64) -> Rational {
        Rational::from_integer(n)
    }

    fn is_zero(&self, a: &Rational) -> bool {
        a.is_zero()
    }

    fn is_one(&self, a: &Rational) -> bool {
        a.is_one()
    }

    fn fmt_elem(&self, a: &Rational, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{a}")
    }

    fn sign_split(&self, a: &Rational) -> Option<(bool, Rational)> {
        Some((a.is_negative(), a.abs()))
    }
}
