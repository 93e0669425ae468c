//! Primitive integer polynomials: the fast kernel behind root isolation.
//!
//! All sign decisions funnel through this module. Working over `BigInt`
//! instead of `BigRational` avoids per-operation gcd reductions; Sturm chains
//! are computed with sign-preserving pseudo-remainders (even powers of the
//! leading coefficient) followed by division by the positive content, so the
//! usual sign-variation counting applies unchanged.

use num_bigint::BigInt;
use num_integer::Integer;

use num_traits::{One, Signed, Zero};

use super::{Rational, Sign};

/// Integer polynomial, coefficients lowest degree first, no trailing zeros.
/// The empty vector is the zero polynomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct IntPoly {
    pub coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: vec![] }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn leading(&self) -> &BigInt {
        self.coeffs
            .last()
            .expect("leading coefficient of zero polynomial")
    }

    pub fn constant_term(&self) -> BigInt {
        self.coeffs.first().cloned().unwrap_or_else(BigInt::zero)
    }

    /// Builds the primitive linear polynomial `den*x - num` with root `r = num/den`.
    pub fn linear_from_root(r: &Rational) -> Self {
        IntPoly::new(vec![-r.numer().clone(), r.denom().clone()])
    }

    /// Converts a rational-coefficient polynomial into its primitive integer
    /// form. Multiplication is by a positive rational only, so every root and
    /// every sign is preserved.
    pub fn from_rational_coeffs(coeffs: &[Rational]) -> Self {
        let mut lcm = BigInt::one();
        for c in coeffs {
            lcm = lcm.lcm(c.denom());
        }
        let ints: Vec<BigInt> = coeffs
            .iter()
            .map(|c| c.numer() * (&lcm / c.denom()))
            .collect();
        IntPoly::new(ints).primitive()
    }

    pub fn to_rational_coeffs(&self) -> Vec<Rational> {
        self.coeffs
            .iter()
            .map(|c| Rational::from(c.clone()))
            .collect()
    }

    /// Positive gcd of all coefficients; 1 for the zero polynomial.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        if g.is_zero() {
            BigInt::one()
        } else {
            g
        }
    }

    /// Divides by the positive content. Leading-coefficient sign is kept.
    pub fn primitive(&self) -> Self {
        let c = self.content();
        if c.is_one() {
            return self.clone();
        }
        IntPoly {
            coeffs: self.coeffs.iter().map(|a| a / &c).collect(),
        }
    }

    pub fn negate(&self) -> Self {
        IntPoly {
            coeffs: self.coeffs.iter().map(|a| -a).collect(),
        }
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return IntPoly::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * BigInt::from(i))
            .collect();
        IntPoly::new(coeffs)
    }

    /// Evaluates `den^deg * p(num/den)` for `x = num/den`. The scale factor is
    /// positive, so the sign agrees with the sign of `p(x)`.
    pub fn eval_scaled(&self, num: &BigInt, den: &BigInt) -> BigInt {
        debug_assert!(den.is_positive());
        let k = match self.degree() {
            None => return BigInt::zero(),
            Some(k) => k,
        };
        let mut acc = self.coeffs[k].clone();
        let mut dpow = BigInt::one();
        for i in (0..k).rev() {
            dpow *= den;
            acc = acc * num + &self.coeffs[i] * &dpow;
        }
        acc
    }

    pub fn sign_at(&self, x: &Rational) -> Sign {
        Sign::of_bigint(&self.eval_scaled(x.numer(), x.denom()))
    }

    pub fn is_root(&self, x: &Rational) -> bool {
        self.sign_at(x) == Sign::Zero
    }

    /// Pseudo-remainder of `a` by `b`, premultiplying by an even power of the
    /// leading coefficient of `b` so the result is a positive multiple of the
    /// true remainder.
    fn pseudo_rem_positive(a: &IntPoly, b: &IntPoly) -> IntPoly {
        let db = b.degree().expect("pseudo-division by zero polynomial");
        let lcb = b.leading().clone();
        let mut r = a.coeffs.clone();
        let mut mults = 0usize;
        while r.len() > db {
            let dr = r.len() - 1;
            let lead = r.last().unwrap().clone();
            if lead.is_zero() {
                r.pop();
                continue;
            }
            for c in r.iter_mut() {
                *c *= &lcb;
            }
            mults += 1;
            let shift = dr - db;
            for (i, bc) in b.coeffs.iter().enumerate() {
                let t = &lead * bc;
                r[i + shift] -= t;
            }
            while r.last().is_some_and(|c| c.is_zero()) {
                r.pop();
            }
        }
        let mut rem = IntPoly::new(r);
        if mults % 2 == 1 {
            // make the total scale factor an even power of lcb, hence positive
            for c in rem.coeffs.iter_mut() {
                *c *= &lcb;
            }
        }
        rem
    }

    /// Primitive polynomial gcd (positive leading coefficient).
    pub fn gcd(a: &IntPoly, b: &IntPoly) -> IntPoly {
        let mut p = a.primitive();
        let mut q = b.primitive();
        if p.is_zero() {
            return normalize_lc_positive(q);
        }
        if q.is_zero() {
            return normalize_lc_positive(p);
        }
        if p.degree() < q.degree() {
            std::mem::swap(&mut p, &mut q);
        }
        loop {
            let r = Self::pseudo_rem_positive(&p, &q).primitive();
            if r.is_zero() {
                return normalize_lc_positive(q);
            }
            if r.degree() == Some(0) {
                return IntPoly::new(vec![BigInt::one()]);
            }
            p = q;
            q = r;
        }
    }

    /// Square-free part `p / gcd(p, p')`, primitive with positive leading
    /// coefficient.
    pub fn square_free_part(&self) -> IntPoly {
        let d = self.derivative();
        if d.is_zero() {
            // degree 0 (or zero polynomial)
            return normalize_lc_positive(self.primitive());
        }
        let g = IntPoly::gcd(self, &d);
        if g.degree() == Some(0) {
            return normalize_lc_positive(self.primitive());
        }
        let q = exact_div(self, &g);
        normalize_lc_positive(q.primitive())
    }

    /// Exact division by the primitive linear factor with root `r`.
    /// Panics if `r` is not a root.
    pub fn deflate_root(&self, r: &Rational) -> IntPoly {
        debug_assert!(self.is_root(r));
        let lin = IntPoly::linear_from_root(r);
        exact_div(self, &lin).primitive()
    }

    /// An integer `B` with every real root of `self` strictly inside `(-B, B)`.
    pub fn root_bound(&self) -> BigInt {
        let k = self.degree().expect("root bound of zero polynomial");
        let lead = self.coeffs[k].abs();
        let mut max = BigInt::zero();
        for c in &self.coeffs[..k] {
            let a = c.abs();
            if a > max {
                max = a;
            }
        }
        // Cauchy bound: |root| < 1 + max|a_i| / |a_n|  <=  2 + max/lead (integer ceiling)
        BigInt::from(2) + max.div_ceil(&lead)
    }
}

/// Flips the sign so the leading coefficient is positive.
fn normalize_lc_positive(p: IntPoly) -> IntPoly {
    if !p.is_zero() && p.leading().is_negative() {
        p.negate()
    } else {
        p
    }
}

/// Exact polynomial division over Q, converted back to a primitive integer
/// polynomial. Panics if the division is not exact.
fn exact_div(a: &IntPoly, b: &IntPoly) -> IntPoly {
    let db = b.degree().expect("division by zero polynomial");
    let da = a.degree().expect("division of zero polynomial");
    assert!(da >= db);
    let mut rem: Vec<Rational> = a.coeffs.iter().map(|c| Rational::from(c.clone())).collect();
    let bl = Rational::from(b.leading().clone());
    let mut quot = vec![Rational::zero(); da - db + 1];
    for i in (0..quot.len()).rev() {
        let lead = rem[i + db].clone();
        if lead.is_zero() {
            continue;
        }
        let q = lead / &bl;
        for (j, bc) in b.coeffs.iter().enumerate() {
            let t = &q * Rational::from(bc.clone());
            rem[i + j] -= t;
        }
        quot[i] = q;
    }
    debug_assert!(
        rem.iter().all(|c| c.is_zero()),
        "inexact polynomial division"
    );
    IntPoly::from_rational_coeffs(&quot)
}

/// Sturm chain of a square-free integer polynomial.
pub(crate) struct SturmChain {
    seq: Vec<IntPoly>,
}

impl SturmChain {
    pub fn new(p: &IntPoly) -> Self {
        let mut seq = vec![p.primitive()];
        let d = p.derivative().primitive();
        if !d.is_zero() {
            seq.push(d);
        }
        while seq.len() >= 2 {
            let n = seq.len();
            let r = IntPoly::pseudo_rem_positive(&seq[n - 2], &seq[n - 1]);
            if r.is_zero() {
                break;
            }
            seq.push(r.negate().primitive());
        }
        SturmChain { seq }
    }

    /// Number of sign variations of the chain at `x`, zeros skipped.
    pub fn variations_at(&self, x: &Rational) -> usize {
        let mut count = 0usize;
        let mut prev = Sign::Zero;
        for p in &self.seq {
            let s = p.sign_at(x);
            if s == Sign::Zero {
                continue;
            }
            if prev != Sign::Zero && s != prev {
                count += 1;
            }
            prev = s;
        }
        count
    }

    /// Number of distinct real roots in the half-open interval `(a, b]`.
    /// Requires `a <= b`.
    pub fn count_half_open(&self, a: &Rational, b: &Rational) -> usize {
        debug_assert!(a <= b);
        if a == b {
            return 0;
        }
        let va = self.variations_at(a);
        let vb = self.variations_at(b);
        va.saturating_sub(vb)
    }
}

/// Number of distinct real roots of a square-free `p` in the closed interval
/// `[a, b]`. Handles roots at the endpoints exactly by deflation.
pub(crate) fn count_roots_closed(p: &IntPoly, a: &Rational, b: &Rational) -> usize {
    if a > b {
        return 0;
    }
    if a == b {
        return usize::from(p.is_root(a));
    }
    let mut q = p.clone();
    let mut extra = 0usize;
    if q.degree() >= Some(1) && q.is_root(a) {
        extra += 1;
        q = q.deflate_root(a);
    }
    if q.degree() >= Some(1) && q.is_root(b) {
        extra += 1;
        q = q.deflate_root(b);
    }
    if q.degree() >= Some(1) {
        // q has no root at a or b now, so (a, b] == (a, b)
        extra += SturmChain::new(&q).count_half_open(a, b);
    }
    extra
}

/// Location of one real root of a square-free polynomial.
#[derive(Debug, Clone)]
pub(crate) enum RootLoc {
    /// Exact rational root.
    Rational(Rational),
    /// Open isolating interval `(lo, hi)` for a single irrational root of the
    /// carried polynomial; the polynomial is nonzero at both endpoints.
    Irrational {
        poly: IntPoly,
        lo: Rational,
        hi: Rational,
    },
}

/// Isolates all distinct real roots of a square-free integer polynomial.
///
/// Rational roots are detected exactly (continued-fraction search within the
/// isolating interval, bounded by the leading coefficient) and reported as
/// `RootLoc::Rational`; irrational roots come with an isolating interval on
/// which the carried defining polynomial changes sign.
pub(crate) fn isolate_squarefree(p: &IntPoly) -> Vec<RootLoc> {
    let mut out: Vec<RootLoc> = Vec::new();
    let mut work = p.primitive();

    // strip roots at zero up front
    if !work.is_zero() && work.constant_term().is_zero() && work.degree() >= Some(1) {
        out.push(RootLoc::Rational(Rational::zero()));
        while work.constant_term().is_zero() && work.degree() >= Some(1) {
            work = IntPoly::new(work.coeffs[1..].to_vec());
        }
    }

    'restart: loop {
        match work.degree() {
            None | Some(0) => break,
            Some(1) => {
                let r = Rational::new(-work.coeffs[0].clone(), work.coeffs[1].clone());
                out.push(RootLoc::Rational(r));
                break;
            }
            _ => {}
        }

        let chain = SturmChain::new(&work);
        let bound = work.root_bound();
        let lo = Rational::from(-bound.clone());
        let hi = Rational::from(bound);
        let mut stack = vec![(lo, hi)];
        let mut intervals: Vec<(Rational, Rational)> = Vec::new();

        while let Some((a, b)) = stack.pop() {
            let n = chain.count_half_open(&a, &b);
            if n == 0 {
                continue;
            }
            if n == 1 {
                intervals.push((a, b));
                continue;
            }
            let m = (&a + &b) / Rational::from(BigInt::from(2));
            if work.is_root(&m) {
                out.push(RootLoc::Rational(m.clone()));
                work = work.deflate_root(&m);
                continue 'restart;
            }
            stack.push((a, m.clone()));
            stack.push((m, b));
        }

        // Each interval (a, b] holds exactly one root and the endpoints are
        // not roots; decide rational vs irrational. Rational roots are
        // deflated and the isolation restarted so that irrational roots are
        // only ever emitted against the fully deflated polynomial.
        let mut pending: Vec<(Rational, Rational)> = Vec::new();
        let mut deflated = false;
        for (a, b) in intervals {
            match classify_single_root(&work, &a, &b) {
                RootRefinement::Rational(r) => {
                    work = work.deflate_root(&r);
                    out.push(RootLoc::Rational(r));
                    deflated = true;
                }
                RootRefinement::Irrational { lo, hi } => pending.push((lo, hi)),
            }
        }
        if deflated {
            continue 'restart;
        }
        for (lo, hi) in pending {
            out.push(RootLoc::Irrational {
                poly: work.clone(),
                lo,
                hi,
            });
        }
        break;
    }
    out
}

/// Outcome of deciding whether the unique root in an interval is rational.
pub(crate) enum RootRefinement {
    Rational(Rational),
    /// Narrowed open interval still holding the (irrational) root.
    Irrational {
        lo: Rational,
        hi: Rational,
    },
}

/// Decides exactly whether the single root of square-free `p` inside
/// `(a, b)` is rational. Requires `p` nonzero at both endpoints.
///
/// A rational root `u/v` of `p` has `v` dividing the leading coefficient, so
/// two distinct candidates differ by at least `1/lead^2`; once the interval
/// is narrower than that, the rational of smallest denominator inside it is
/// the only possible candidate.
pub(crate) fn classify_single_root(p: &IntPoly, a: &Rational, b: &Rational) -> RootRefinement {
    let denom_bound = p.leading().abs();
    let width_limit = Rational::new(BigInt::one(), &denom_bound * &denom_bound + BigInt::one());
    let two = Rational::from(BigInt::from(2));
    let mut a = a.clone();
    let mut b = b.clone();
    // sign at `a` is invariant: `a` only ever moves to same-sign points
    let sa = p.sign_at(&a);
    debug_assert!(sa != Sign::Zero && p.sign_at(&b) != Sign::Zero);
    while &b - &a >= width_limit {
        let m = (&a + &b) / &two;
        match p.sign_at(&m) {
            Sign::Zero => return RootRefinement::Rational(m),
            s if s == sa => a = m,
            _ => b = m,
        }
    }
    let simplest = simplest_rational_in(&a, &b);
    if simplest.denom() <= &denom_bound && p.is_root(&simplest) {
        return RootRefinement::Rational(simplest);
    }
    RootRefinement::Irrational { lo: a, hi: b }
}

/// The rational with the smallest denominator in the closed interval
/// `[lo, hi]` (continued-fraction / Stern-Brocot descent).
pub(crate) fn simplest_rational_in(lo: &Rational, hi: &Rational) -> Rational {
    use num_traits::Signed as _;
    assert!(lo <= hi);
    if lo == hi {
        return lo.clone();
    }
    let zero = Rational::zero();
    if *lo <= zero && zero <= *hi {
        return zero;
    }
    if lo.is_negative() {
        return -simplest_rational_in(&-hi.clone(), &-lo.clone());
    }
    // 0 < lo < hi
    let lo_ceil = lo.ceil();
    if lo_ceil <= hi.floor() {
        return lo_ceil;
    }
    let a = lo.floor();
    let one = Rational::one();
    let inner = simplest_rational_in(&(&one / (hi - &a)), &(&one / (lo - &a)));
    a + one / inner
}
