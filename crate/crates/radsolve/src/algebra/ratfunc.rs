//! Rational functions: quotients of polynomials in lowest terms.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{AlgebraError, Polynomial, Rational};

/// Quotient `num/den` of polynomials over the rationals.
///
/// Canonical form: `gcd(num, den) = 1`, `den` monic and nonzero; the zero
/// function is `0/1`. The domain is the real line minus the real roots of
/// `den`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalFunction {
    num: Polynomial,
    den: Polynomial,
}

impl RationalFunction {
    pub fn new(num: Polynomial, den: Polynomial) -> Result<Self, AlgebraError> {
        if den.is_zero() {
            return Err(AlgebraError::ZeroDenominator);
        }
        Ok(Self::reduced(num, den))
    }

    fn reduced(num: Polynomial, den: Polynomial) -> Self {
        if num.is_zero() {
            return RationalFunction {
                num: Polynomial::zero(),
                den: Polynomial::one(),
            };
        }
        let g = num.gcd(&den);
        let (num, den) = if g.degree() > Some(0) {
            (num.div_rem(&g).0, den.div_rem(&g).0)
        } else {
            (num, den)
        };
        // make den monic, folding the leading coefficient into num
        let lead = den.leading().expect("nonzero denominator").clone();
        if lead.is_one() {
            RationalFunction { num, den }
        } else {
            let inv = Rational::one() / lead;
            RationalFunction {
                num: num.scale(&inv),
                den: den.scale(&inv),
            }
        }
    }

    pub fn from_polynomial(p: Polynomial) -> Self {
        RationalFunction {
            num: p,
            den: Polynomial::one(),
        }
    }

    pub fn from_rational(r: Rational) -> Self {
        Self::from_polynomial(Polynomial::constant(r))
    }

    pub fn zero() -> Self {
        Self::from_polynomial(Polynomial::zero())
    }

    pub fn one() -> Self {
        Self::from_polynomial(Polynomial::one())
    }

    pub fn num(&self) -> &Polynomial {
        &self.num
    }

    pub fn den(&self) -> &Polynomial {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.degree() == Some(0)
    }

    /// Returns the constant value if this function is a constant.
    pub fn as_constant(&self) -> Option<Rational> {
        if self.den.is_constant() {
            self.num.as_constant()
        } else {
            None
        }
    }

    pub fn is_one(&self) -> bool {
        self.as_constant().is_some_and(|c| c.is_one())
    }

    pub fn is_minus_one(&self) -> bool {
        self.as_constant().is_some_and(|c| (-c).is_one())
    }

    pub fn pow(&self, n: u32) -> Self {
        RationalFunction::reduced(self.num.pow(n), self.den.pow(n))
    }

    pub fn recip(&self) -> Result<Self, AlgebraError> {
        if self.is_zero() {
            return Err(AlgebraError::ZeroDenominator);
        }
        Ok(RationalFunction::reduced(
            self.den.clone(),
            self.num.clone(),
        ))
    }

    pub fn div(&self, other: &Self) -> Result<Self, AlgebraError> {
        Ok(self * &other.recip()?)
    }

    /// Exact evaluation at a rational point; `None` at a pole.
    pub fn eval(&self, x: &Rational) -> Option<Rational> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return None;
        }
        Some(self.num.eval(x) / d)
    }
}

impl Add for &RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        RationalFunction::reduced(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Sub for &RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        RationalFunction::reduced(
            &(&self.num * &rhs.den) - &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Mul for &RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        RationalFunction::reduced(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_polynomial() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{rat, rat_int};

    #[test]
    fn reduction_to_lowest_terms() {
        // (x^2 - 1) / (x - 1) = x + 1
        let f = RationalFunction::new(
            Polynomial::from_ints(&[-1, 0, 1]),
            Polynomial::from_ints(&[-1, 1]),
        )
        .unwrap();
        assert!(f.is_polynomial());
        assert_eq!(f.num(), &Polynomial::from_ints(&[1, 1]));
    }

    #[test]
    fn monic_denominator() {
        // x / (2x - 4) -> (1/2 x) / (x - 2)
        let f = RationalFunction::new(
            Polynomial::from_ints(&[0, 1]),
            Polynomial::from_ints(&[-4, 2]),
        )
        .unwrap();
        assert_eq!(f.den(), &Polynomial::from_ints(&[-2, 1]));
        assert_eq!(f.num(), &Polynomial::new(vec![rat_int(0), rat(1, 2)]));
    }

    #[test]
    fn zero_denominator_rejected() {
        assert_eq!(
            RationalFunction::new(Polynomial::one(), Polynomial::zero()),
            Err(AlgebraError::ZeroDenominator)
        );
    }

    #[test]
    fn arithmetic_matches_pointwise_evaluation() {
        let f = RationalFunction::new(
            Polynomial::from_ints(&[1, 1]),
            Polynomial::from_ints(&[0, 1]),
        )
        .unwrap(); // (x+1)/x
        let g = RationalFunction::from_polynomial(Polynomial::from_ints(&[-2, 3])); // 3x - 2
        let sum = &f + &g;
        let prod = &f * &g;
        let x = rat(5, 3);
        let fx = f.eval(&x).unwrap();
        let gx = g.eval(&x).unwrap();
        assert_eq!(sum.eval(&x).unwrap(), &fx + &gx);
        assert_eq!(prod.eval(&x).unwrap(), &fx * &gx);
        assert_eq!(f.eval(&rat_int(0)), None);
    }
}
