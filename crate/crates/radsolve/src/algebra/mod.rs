//! Exact arithmetic over the rationals: polynomials, rational functions and
//! real algebraic numbers.
//!
//! Everything in this module is exact. There is no floating point anywhere:
//! signs, orderings and set memberships are discrete verdicts obtained from
//! integer arithmetic (Sturm sequences, resultant-free gcd root tests,
//! bisection with rational endpoints). Floating-point approximations exist
//! only as read-only views for display and for the numeric oracle.

mod intpoly;
mod poly;
mod ratfunc;
mod real;

pub use poly::Polynomial;
pub use ratfunc::RationalFunction;
pub use real::{compare, isolate_real_roots, refine, sign_at, AlgebraicReal};

pub(crate) use real::{rational_between, separate_intervals};

use num_bigint::BigInt;
use num_rational::BigRational;

/// Arbitrary-precision rational number, always stored in lowest terms with a
/// positive denominator.
pub type Rational = BigRational;

/// Shorthand for small rational constants.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Shorthand for small integer constants as rationals.
pub fn rat_int(n: i64) -> Rational {
    Rational::from(BigInt::from(n))
}

/// Sign of an exact quantity.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    pub fn of_rational(r: &Rational) -> Sign {
        use num_traits::Zero;
        if r.is_zero() {
            Sign::Zero
        } else if r.numer().sign() == num_bigint::Sign::Minus {
            Sign::Negative
        } else {
            Sign::Positive
        }
    }

    pub(crate) fn of_bigint(n: &BigInt) -> Sign {
        match n.sign() {
            num_bigint::Sign::Minus => Sign::Negative,
            num_bigint::Sign::NoSign => Sign::Zero,
            num_bigint::Sign::Plus => Sign::Positive,
        }
    }

    pub fn product(self, other: Sign) -> Sign {
        match (self, other) {
            (Sign::Zero, _) | (_, Sign::Zero) => Sign::Zero,
            (Sign::Positive, Sign::Positive) | (Sign::Negative, Sign::Negative) => Sign::Positive,
            _ => Sign::Negative,
        }
    }

    pub fn negate(self) -> Sign {
        match self {
            Sign::Negative => Sign::Positive,
            Sign::Zero => Sign::Zero,
            Sign::Positive => Sign::Negative,
        }
    }

    pub fn is_zero(self) -> bool {
        self == Sign::Zero
    }

    /// `>= 0`
    pub fn is_nonnegative(self) -> bool {
        self != Sign::Negative
    }

    /// `<= 0`
    pub fn is_nonpositive(self) -> bool {
        self != Sign::Positive
    }
}

/// Errors raised by exact-arithmetic operations.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AlgebraError {
    #[error("the zero polynomial has no isolated roots; every real is a root")]
    ZeroPolynomial,
    #[error("denominator vanishes at the evaluation point")]
    PoleAt,
    #[error("denominator of a rational function is the zero polynomial")]
    ZeroDenominator,
    #[error("invalid isolating interval: {0}")]
    BadInterval(String),
}
