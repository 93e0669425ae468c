//! Real algebraic numbers: square-free defining polynomial plus isolating
//! interval, with exact sign determination and total ordering.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive};

use super::intpoly::{
    classify_single_root, count_roots_closed, isolate_squarefree, IntPoly, RootLoc, RootRefinement,
    SturmChain,
};
use super::{AlgebraError, Polynomial, Rational, RationalFunction, Sign};

/// An exact real algebraic number.
///
/// Invariants: `defining` is square-free, primitive over the integers with a
/// positive leading coefficient, and has exactly one real root in
/// `[lo, hi]`. `lo == hi` exactly when the number is rational; otherwise the
/// defining polynomial is nonzero with opposite signs at the two endpoints,
/// so the root lies strictly inside the interval.
#[derive(Debug, Clone)]
pub struct AlgebraicReal {
    poly: IntPoly,
    lo: Rational,
    hi: Rational,
    lo_sign: Sign,
}

impl AlgebraicReal {
    pub fn from_rational(r: Rational) -> Self {
        AlgebraicReal {
            poly: IntPoly::linear_from_root(&r),
            lo: r.clone(),
            hi: r,
            lo_sign: Sign::Zero,
        }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(super::rat_int(n))
    }

    /// Builds an algebraic number from a defining polynomial and an isolating
    /// interval, validating the invariants.
    pub fn new(defining: &Polynomial, lo: Rational, hi: Rational) -> Result<Self, AlgebraError> {
        if defining.is_zero() {
            return Err(AlgebraError::ZeroPolynomial);
        }
        if lo > hi {
            return Err(AlgebraError::BadInterval("lo > hi".into()));
        }
        let p = defining.to_int().square_free_part();
        if count_roots_closed(&p, &lo, &hi) != 1 {
            return Err(AlgebraError::BadInterval(
                "interval must contain exactly one real root".into(),
            ));
        }
        if p.is_root(&lo) {
            return Ok(Self::rational_with_poly(p, lo));
        }
        if p.is_root(&hi) {
            return Ok(Self::rational_with_poly(p, hi));
        }
        let lo_sign = p.sign_at(&lo);
        // an interior rational root collapses to a point interval so that
        // `as_rational` stays reliable for caller-supplied intervals
        match classify_single_root(&p, &lo, &hi) {
            RootRefinement::Rational(r) => Ok(Self::rational_with_poly(p, r)),
            RootRefinement::Irrational { lo, hi } => Ok(AlgebraicReal {
                poly: p,
                lo,
                hi,
                lo_sign,
            }),
        }
    }

    fn rational_with_poly(poly: IntPoly, r: Rational) -> Self {
        AlgebraicReal {
            poly,
            lo: r.clone(),
            hi: r,
            lo_sign: Sign::Zero,
        }
    }

    pub fn iso_lo(&self) -> &Rational {
        &self.lo
    }

    pub fn iso_hi(&self) -> &Rational {
        &self.hi
    }

    /// The square-free defining polynomial, with rational coefficients.
    pub fn defining(&self) -> Polynomial {
        Polynomial::from_int(&self.poly)
    }

    pub fn is_rational(&self) -> bool {
        self.lo == self.hi
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        if self.is_rational() {
            Some(&self.lo)
        } else {
            None
        }
    }

    pub fn interval_width(&self) -> Rational {
        &self.hi - &self.lo
    }

    /// One bisection step. On a rational hit the interval collapses to a
    /// point; the defining polynomial is unchanged either way.
    fn refine_step(&mut self) {
        if self.is_rational() {
            return;
        }
        let m = (&self.lo + &self.hi) / Rational::from(BigInt::from(2));
        match self.poly.sign_at(&m) {
            Sign::Zero => {
                self.lo = m.clone();
                self.hi = m;
                self.lo_sign = Sign::Zero;
            }
            s if s == self.lo_sign => self.lo = m,
            _ => self.hi = m,
        }
    }

    /// Returns the same number with an isolating interval of width at most
    /// `width`.
    pub fn refined(&self, width: &Rational) -> Self {
        let mut a = self.clone();
        while !a.is_rational() && a.interval_width() > *width {
            a.refine_step();
        }
        a
    }

    /// Sign of a polynomial evaluated at this number, decided exactly.
    pub fn poly_sign(&self, q: &Polynomial) -> Sign {
        if q.is_zero() {
            return Sign::Zero;
        }
        if let Some(r) = self.as_rational() {
            return q.sign_at_rational(r);
        }
        let qi = q.to_int();
        // zero test: q(alpha) = 0 iff gcd(q, defining) has a root in the
        // isolating interval
        let g = IntPoly::gcd(&qi, &self.poly);
        if g.degree() >= Some(1) && count_roots_closed(&g, &self.lo, &self.hi) >= 1 {
            return Sign::Zero;
        }
        // nonzero: refine until q has constant sign over the interval
        let qsf = qi.square_free_part();
        let chain = SturmChain::new(&qsf);
        let mut a = self.clone();
        loop {
            let sl = qi.sign_at(&a.lo);
            let sh = qi.sign_at(&a.hi);
            if sl == sh && sl != Sign::Zero && chain.count_half_open(&a.lo, &a.hi) == 0 {
                return sl;
            }
            a.refine_step();
            if let Some(r) = a.as_rational() {
                return qi.sign_at(r);
            }
        }
    }

    /// Floating-point approximation, accurate to roughly f64 precision.
    pub fn approx_f64(&self) -> f64 {
        if let Some(r) = self.as_rational() {
            return rational_to_f64(r);
        }
        let narrow = self.refined(&pow10_inv(18));
        if let Some(r) = narrow.as_rational() {
            return rational_to_f64(r);
        }
        let mid = (narrow.iso_lo() + narrow.iso_hi()) / Rational::from(BigInt::from(2));
        let v = rational_to_f64(&mid);
        if v != 0.0 && v.abs() < 1e-4 {
            // small magnitudes need extra absolute precision for 12
            // significant digits
            let tighter = narrow.refined(&pow10_inv(30));
            let mid = (tighter.iso_lo() + tighter.iso_hi()) / Rational::from(BigInt::from(2));
            return rational_to_f64(&mid);
        }
        v
    }

    pub fn cmp_exact(&self, other: &AlgebraicReal) -> Ordering {
        compare(self, other)
    }

    pub fn cmp_rational(&self, r: &Rational) -> Ordering {
        if let Some(s) = self.as_rational() {
            return s.cmp(r);
        }
        if *r <= self.lo {
            return Ordering::Greater; // root is strictly inside (lo, hi)
        }
        if *r >= self.hi {
            return Ordering::Less;
        }
        match self.poly.sign_at(r) {
            Sign::Zero => Ordering::Equal,
            s if s == self.lo_sign => Ordering::Greater, // r still on the lo side
            _ => Ordering::Less,
        }
    }
}

/// Exact total-order comparison of two algebraic reals.
pub fn compare(a: &AlgebraicReal, b: &AlgebraicReal) -> Ordering {
    if let (Some(x), Some(y)) = (a.as_rational(), b.as_rational()) {
        return x.cmp(y);
    }
    if let Some(y) = b.as_rational() {
        return a.cmp_rational(y);
    }
    if let Some(x) = a.as_rational() {
        return b.cmp_rational(x).reverse();
    }
    // disjoint-interval fast path; both roots are strictly interior
    if a.hi <= b.lo {
        return Ordering::Less;
    }
    if b.hi <= a.lo {
        return Ordering::Greater;
    }
    // overlapping intervals: equal iff the defining polynomials share a root
    // in the overlap
    let g = IntPoly::gcd(&a.poly, &b.poly);
    if g.degree() >= Some(1) {
        let lo = if a.lo >= b.lo {
            a.lo.clone()
        } else {
            b.lo.clone()
        };
        let hi = if a.hi <= b.hi {
            a.hi.clone()
        } else {
            b.hi.clone()
        };
        if lo <= hi && count_roots_closed(&g, &lo, &hi) >= 1 {
            return Ordering::Equal;
        }
    }
    // distinct numbers: refine until the intervals separate
    let mut x = a.clone();
    let mut y = b.clone();
    loop {
        x.refine_step();
        y.refine_step();
        if let (Some(p), Some(q)) = (x.as_rational(), y.as_rational()) {
            return p.cmp(q);
        }
        if let Some(q) = y.as_rational() {
            return x.cmp_rational(q);
        }
        if let Some(p) = x.as_rational() {
            return y.cmp_rational(p).reverse();
        }
        if x.hi <= y.lo {
            return Ordering::Less;
        }
        if y.hi <= x.lo {
            return Ordering::Greater;
        }
    }
}

impl PartialEq for AlgebraicReal {
    fn eq(&self, other: &Self) -> bool {
        compare(self, other) == Ordering::Equal
    }
}

impl Eq for AlgebraicReal {}

impl PartialOrd for AlgebraicReal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for AlgebraicReal {
    fn cmp(&self, other: &Self) -> Ordering {
        compare(self, other)
    }
}

impl fmt::Display for AlgebraicReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(r) = self.as_rational() {
            write!(f, "{r}")
        } else {
            write!(
                f,
                "~{}",
                crate::report::format_significant(self.approx_f64(), 12)
            )
        }
    }
}

/// Isolates every distinct real root of `p`, sorted ascending with pairwise
/// disjoint isolating intervals. Rational roots come back as point intervals.
pub fn isolate_real_roots(p: &Polynomial) -> Result<Vec<AlgebraicReal>, AlgebraError> {
    if p.is_zero() {
        return Err(AlgebraError::ZeroPolynomial);
    }
    if p.is_constant() {
        return Ok(vec![]);
    }
    let sf = p.to_int().square_free_part();
    let mut roots: Vec<AlgebraicReal> = isolate_squarefree(&sf)
        .into_iter()
        .map(|loc| match loc {
            RootLoc::Rational(r) => AlgebraicReal::from_rational(r),
            RootLoc::Irrational { poly, lo, hi } => {
                let lo_sign = poly.sign_at(&lo);
                AlgebraicReal {
                    poly,
                    lo,
                    hi,
                    lo_sign,
                }
            }
        })
        .collect();
    roots.sort_by(compare);
    separate_intervals(&mut roots);
    Ok(roots)
}

/// Refines neighbours until all isolating intervals are pairwise disjoint
/// with a gap between them. Input must be sorted ascending and
/// duplicate-free.
pub(crate) fn separate_intervals(roots: &mut [AlgebraicReal]) {
    for i in 1..roots.len() {
        while roots[i - 1].hi >= roots[i].lo {
            roots[i - 1].refine_step();
            roots[i].refine_step();
        }
    }
}

/// Exact sign of a rational function at an algebraic number.
pub fn sign_at(p: &RationalFunction, x: &AlgebraicReal) -> Result<Sign, AlgebraError> {
    let den_sign = x.poly_sign(p.den());
    if den_sign == Sign::Zero {
        return Err(AlgebraError::PoleAt);
    }
    let num_sign = x.poly_sign(p.num());
    Ok(num_sign.product(den_sign))
}

/// Returns the same number with an isolating interval of width at most
/// `width`.
pub fn refine(x: &AlgebraicReal, width: &Rational) -> AlgebraicReal {
    x.refined(width)
}

/// A rational strictly between `a` and `b` (requires `a < b`).
pub(crate) fn rational_between(a: &AlgebraicReal, b: &AlgebraicReal) -> Rational {
    let mut x = a.clone();
    let mut y = b.clone();
    while x.hi >= y.lo {
        x.refine_step();
        y.refine_step();
        if x.is_rational() && y.is_rational() {
            break;
        }
    }
    if x.is_rational() && y.is_rational() {
        return (x.lo + y.lo) / Rational::from(BigInt::from(2));
    }
    (&x.hi + &y.lo) / Rational::from(BigInt::from(2))
}

fn pow10_inv(exp: u32) -> Rational {
    Rational::new(BigInt::one(), BigInt::from(10u32).pow(exp))
}

pub(crate) fn rational_to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or_else(|| {
        // fall back on a scaled division for magnitudes outside f64 range
        let n = r
            .numer()
            .to_f64()
            .unwrap_or(f64::INFINITY * sign_f(r.numer()));
        let d = r.denom().to_f64().unwrap_or(f64::INFINITY);
        n / d
    })
}

fn sign_f(n: &BigInt) -> f64 {
    if n.is_negative() {
        -1.0
    } else {
        1.0
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{rat, rat_int};

    fn sqrt2() -> AlgebraicReal {
        AlgebraicReal::new(&Polynomial::from_ints(&[-2, 0, 1]), rat_int(1), rat_int(2)).unwrap()
    }

    #[test]
    fn isolate_sqrt2_roots() {
        let roots = isolate_real_roots(&Polynomial::from_ints(&[-2, 0, 1])).unwrap();
        assert_eq!(roots.len(), 2);
        assert!((roots[0].approx_f64() + std::f64::consts::SQRT_2).abs() < 1e-9);
        assert!((roots[1].approx_f64() - std::f64::consts::SQRT_2).abs() < 1e-9);
        // intervals disjoint and sorted
        assert!(roots[0].iso_hi() < roots[1].iso_lo());
    }

    #[test]
    fn isolate_no_real_roots() {
        let roots = isolate_real_roots(&Polynomial::from_ints(&[1, 0, 1])).unwrap();
        assert!(roots.is_empty());
    }

    #[test]
    fn isolate_example_quadratic() {
        // 3x^2 + 4x - 8: roots (-2 +- 2*sqrt(7))/3, derived from the
        // quadratic formula
        let roots = isolate_real_roots(&Polynomial::from_ints(&[-8, 4, 3])).unwrap();
        assert_eq!(roots.len(), 2);
        let s7 = 7f64.sqrt();
        let x1 = (-2.0 - 2.0 * s7) / 3.0;
        let x2 = (-2.0 + 2.0 * s7) / 3.0;
        assert!((roots[0].approx_f64() - x1).abs() < 1e-10);
        assert!((roots[1].approx_f64() - x2).abs() < 1e-10);
    }

    #[test]
    fn isolate_zero_polynomial_fails() {
        assert_eq!(
            isolate_real_roots(&Polynomial::zero()),
            Err(AlgebraError::ZeroPolynomial)
        );
    }

    #[test]
    fn rational_roots_become_points() {
        // (2x - 3)(x^2 - 2)
        let p = &Polynomial::from_ints(&[-3, 2]) * &Polynomial::from_ints(&[-2, 0, 1]);
        let roots = isolate_real_roots(&p).unwrap();
        assert_eq!(roots.len(), 3);
        // sorted: -sqrt2 < sqrt2 < 3/2
        assert_eq!(roots[2].as_rational(), Some(&rat(3, 2)));
        assert!(roots[0].as_rational().is_none());
        assert!(roots[1].as_rational().is_none());
    }

    #[test]
    fn refine_keeps_value() {
        let a = sqrt2();
        let fine = refine(&a, &rat(1, 1_000_000));
        assert!(fine.interval_width() <= rat(1, 1_000_000));
        assert_eq!(&fine, &a);
        // rational point interval is unchanged by refinement
        let r = AlgebraicReal::from_rational(rat(3, 2));
        let p = refine(&r, &rat(1, 100));
        assert_eq!(p.as_rational(), Some(&rat(3, 2)));
        // sqrt(7) from [2, 3] down to width 1e-6 still contains 2.6457513...
        let s7 = AlgebraicReal::new(&Polynomial::from_ints(&[-7, 0, 1]), rat_int(2), rat_int(3))
            .unwrap();
        let fine7 = refine(&s7, &rat(1, 1_000_000));
        assert!(fine7.interval_width() <= rat(1, 1_000_000));
        assert!((fine7.approx_f64() - 2.6457513110645906).abs() < 1e-9);
    }

    #[test]
    fn sign_at_defining_relation_is_zero() {
        let a = sqrt2();
        let p = RationalFunction::from_polynomial(Polynomial::from_ints(&[-2, 0, 1]));
        assert_eq!(sign_at(&p, &a).unwrap(), Sign::Zero);
        let q = RationalFunction::from_polynomial(Polynomial::from_ints(&[-1, 1]));
        assert_eq!(sign_at(&q, &a).unwrap(), Sign::Positive);
    }

    #[test]
    fn sign_at_root_of_own_quadratic() {
        // alpha = (-2 + 2*sqrt(7))/3, a root of 3x^2 + 4x - 8
        let roots = isolate_real_roots(&Polynomial::from_ints(&[-8, 4, 3])).unwrap();
        let alpha = &roots[1];
        let p = RationalFunction::from_polynomial(Polynomial::from_ints(&[-8, 4, 3]));
        assert_eq!(sign_at(&p, alpha).unwrap(), Sign::Zero);
    }

    #[test]
    fn sign_at_pole_errors() {
        let inv_x =
            RationalFunction::new(Polynomial::one(), Polynomial::from_ints(&[0, 1])).unwrap();
        let zero = AlgebraicReal::from_int(0);
        assert_eq!(sign_at(&inv_x, &zero), Err(AlgebraError::PoleAt));
    }

    #[test]
    fn compare_examples() {
        let a = sqrt2();
        assert_eq!(a.cmp_rational(&rat(3, 2)), Ordering::Less);
        // same number via different isolating intervals
        let b =
            AlgebraicReal::new(&Polynomial::from_ints(&[-2, 0, 1]), rat(5, 4), rat(3, 2)).unwrap();
        assert_eq!(compare(&a, &b), Ordering::Equal);
        // (-2 + 2*sqrt(7))/3 > 1 since 2*sqrt(7) > 5
        let roots = isolate_real_roots(&Polynomial::from_ints(&[-8, 4, 3])).unwrap();
        assert_eq!(roots[1].cmp_rational(&rat_int(1)), Ordering::Greater);
    }

    #[test]
    fn refine_does_not_change_compare_or_sign() {
        let a = sqrt2();
        let fine = refine(&a, &rat(1, 1 << 30));
        let q = RationalFunction::from_polynomial(Polynomial::from_ints(&[0, 3, -1]));
        assert_eq!(sign_at(&q, &a), sign_at(&q, &fine));
        assert_eq!(compare(&a, &fine), Ordering::Equal);
    }
}
