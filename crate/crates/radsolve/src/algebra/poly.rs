//! Univariate polynomials over the rationals.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::intpoly::IntPoly;
use super::{Rational, Sign};

/// Polynomial with rational coefficients, lowest degree first.
///
/// Canonical form: the coefficient list carries no trailing zeros; the zero
/// polynomial is the empty list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: vec![] }
    }

    pub fn one() -> Self {
        Polynomial::constant(Rational::one())
    }

    pub fn x() -> Self {
        Polynomial::new(vec![Rational::zero(), Rational::one()])
    }

    pub fn constant(c: Rational) -> Self {
        Polynomial::new(vec![c])
    }

    /// Convenience constructor from small integers, lowest degree first.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        Polynomial::new(coeffs.iter().map(|&c| super::rat_int(c)).collect())
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Returns the constant value if the polynomial has degree <= 0.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.coeffs.len() {
            0 => Some(Rational::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn derivative(&self) -> Polynomial {
        if self.coeffs.len() <= 1 {
            return Polynomial::zero();
        }
        Polynomial::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * Rational::from(num_bigint::BigInt::from(i)))
                .collect(),
        )
    }

    pub fn scale(&self, k: &Rational) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    pub fn pow(&self, n: u32) -> Polynomial {
        let mut acc = Polynomial::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Quotient and remainder of division by `d`. Panics on a zero divisor.
    pub fn div_rem(&self, d: &Polynomial) -> (Polynomial, Polynomial) {
        let dd = d.degree().expect("polynomial division by zero");
        let dl = d.leading().unwrap().clone();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Polynomial::zero(), self.clone());
        }
        let mut quot = vec![Rational::zero(); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let lead = rem[i + dd].clone();
            if lead.is_zero() {
                continue;
            }
            let q = lead / &dl;
            for (j, dc) in d.coeffs.iter().enumerate() {
                let t = &q * dc;
                rem[i + j] -= t;
            }
            quot[i] = q;
        }
        (Polynomial::new(quot), Polynomial::new(rem))
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Polynomial) -> Polynomial {
        let g = IntPoly::gcd(&self.to_int(), &other.to_int());
        if g.is_zero() {
            return Polynomial::zero();
        }
        Polynomial::from_int(&g).into_monic()
    }

    /// Square-free part (each real root once), monic.
    pub fn square_free_part(&self) -> Polynomial {
        Polynomial::from_int(&self.to_int().square_free_part()).into_monic()
    }

    fn into_monic(self) -> Polynomial {
        match self.leading() {
            None => self,
            Some(l) if l.is_one() => self,
            Some(l) => {
                let inv = Rational::one() / l.clone();
                self.scale(&inv)
            }
        }
    }

    pub fn sign_at_rational(&self, x: &Rational) -> Sign {
        Sign::of_rational(&self.eval(x))
    }

    pub(crate) fn to_int(&self) -> IntPoly {
        IntPoly::from_rational_coeffs(&self.coeffs)
    }

    pub(crate) fn from_int(p: &IntPoly) -> Polynomial {
        Polynomial::new(p.to_rational_coeffs())
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) + rhs.coeff(i));
        }
        Polynomial::new(out)
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) - rhs.coeff(i));
        }
        Polynomial::new(out)
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial::new(out)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

fn fmt_coeff_times_power(
    f: &mut fmt::Formatter<'_>,
    c: &Rational,
    exp: usize,
    first: bool,
) -> fmt::Result {
    use num_traits::Signed;
    let mag = c.abs();
    if first {
        if c.is_negative() {
            write!(f, "-")?;
        }
    } else if c.is_negative() {
        write!(f, " - ")?;
    } else {
        write!(f, " + ")?;
    }
    if exp == 0 {
        return write!(f, "{mag}");
    }
    if !mag.is_one() {
        write!(f, "{mag}*")?;
    }
    if exp == 1 {
        write!(f, "x")
    } else {
        write!(f, "x^{exp}")
    }
}

impl fmt::Display for Polynomial {
    /// Renders in the solver's input grammar, e.g. `3*x^2 + 4*x - 8`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (exp, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            fmt_coeff_times_power(f, c, exp, first)?;
            first = false;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{rat, rat_int};

    #[test]
    fn product_difference_of_squares() {
        // (x+1)(x-1) = x^2 - 1
        let a = Polynomial::from_ints(&[1, 1]);
        let b = Polynomial::from_ints(&[-1, 1]);
        assert_eq!(&a * &b, Polynomial::from_ints(&[-1, 0, 1]));
    }

    #[test]
    fn add_zero_is_identity() {
        let p = Polynomial::from_ints(&[2, 0, 5]);
        assert_eq!(&p + &Polynomial::zero(), p);
    }

    #[test]
    fn cancellation_gives_canonical_zero() {
        let p = Polynomial::from_ints(&[0, 0, 1]);
        let d = &p - &p;
        assert!(d.is_zero());
        assert_eq!(d.coeffs().len(), 0);
        assert_eq!(d.degree(), None);
    }

    #[test]
    fn div_rem_reconstructs() {
        let a = Polynomial::from_ints(&[2, -3, 0, 1]);
        let d = Polynomial::from_ints(&[-1, 1]);
        let (q, r) = a.div_rem(&d);
        assert_eq!(&(&q * &d) + &r, a);
    }

    #[test]
    fn eval_rational_point() {
        let p = Polynomial::from_ints(&[-8, 4, 3]); // 3x^2 + 4x - 8
        assert_eq!(p.eval(&rat_int(1)), rat_int(-1));
        assert_eq!(p.eval(&rat_int(2)), rat_int(12));
        assert_eq!(p.eval(&rat(1, 2)), rat(-21, 4));
    }

    #[test]
    fn display_round_trip_shape() {
        let p = Polynomial::new(vec![rat_int(-8), rat(2, 3), rat_int(1)]);
        assert_eq!(p.to_string(), "x^2 + 2/3*x - 8");
        assert_eq!(Polynomial::zero().to_string(), "0");
        assert_eq!(Polynomial::from_ints(&[0, -1]).to_string(), "-x");
    }
}
