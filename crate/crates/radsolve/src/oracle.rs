//! Independent floating-point referee for the exact solver.
//!
//! Nothing here feeds back into solver verdicts: the oracle exists so tests
//! can confirm that every classified solution actually verifies numerically
//! and that residual scans find no solution the solver missed. Radicals of
//! negative reals evaluate to imaginary numbers through the principal square
//! root (`sqrt(-r) = i*sqrt(r)` for `r > 0`).

use num_traits::ToPrimitive;

use crate::algebra::{rat, AlgebraicReal, Rational, RationalFunction};
use crate::equation::{Expr, FormKind, RadicalEquation};

/// Complex double-precision value.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComplexVal {
    pub re: f64,
    pub im: f64,
}

impl ComplexVal {
    pub fn real(re: f64) -> Self {
        ComplexVal { re, im: 0.0 }
    }

    pub fn abs(self) -> f64 {
        self.re.hypot(self.im)
    }

    pub fn is_finite(self) -> bool {
        self.re.is_finite() && self.im.is_finite()
    }

    fn add(self, o: ComplexVal) -> ComplexVal {
        ComplexVal {
            re: self.re + o.re,
            im: self.im + o.im,
        }
    }

    fn sub(self, o: ComplexVal) -> ComplexVal {
        ComplexVal {
            re: self.re - o.re,
            im: self.im - o.im,
        }
    }

    fn mul(self, o: ComplexVal) -> ComplexVal {
        ComplexVal {
            re: self.re * o.re - self.im * o.im,
            im: self.re * o.im + self.im * o.re,
        }
    }

    fn div(self, o: ComplexVal) -> ComplexVal {
        let d = o.re * o.re + o.im * o.im;
        ComplexVal {
            re: (self.re * o.re + self.im * o.im) / d,
            im: (self.im * o.re - self.re * o.im) / d,
        }
    }

    /// Principal square root. For real inputs the branch is pinned exactly:
    /// nonnegative reals map to nonnegative reals, negative reals map to
    /// positive multiples of `i`.
    fn sqrt_principal(self) -> ComplexVal {
        if self.im == 0.0 {
            if self.re >= 0.0 {
                ComplexVal::real(self.re.sqrt())
            } else {
                ComplexVal {
                    re: 0.0,
                    im: (-self.re).sqrt(),
                }
            }
        } else {
            let r = self.abs();
            let re = ((r + self.re) / 2.0).sqrt();
            let im = ((r - self.re) / 2.0).sqrt() * self.im.signum();
            ComplexVal { re, im }
        }
    }

    fn powi(self, mut n: u32) -> ComplexVal {
        let mut acc = ComplexVal::real(1.0);
        let mut base = self;
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(base);
            }
            base = base.mul(base);
            n >>= 1;
        }
        acc
    }
}

/// Evaluation failures.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EvalError {
    #[error("division by a value of magnitude below 1e-15")]
    PoleEncountered,
    #[error("evaluation produced a non-finite value")]
    NonFinite,
}

/// Evaluates one side of an equation at a real point using complex
/// arithmetic with principal square roots.
pub fn eval_side(e: &Expr, x: f64) -> Result<ComplexVal, EvalError> {
    let v = eval_rec(e, x)?;
    if v.is_finite() {
        Ok(v)
    } else {
        Err(EvalError::NonFinite)
    }
}

fn eval_rec(e: &Expr, x: f64) -> Result<ComplexVal, EvalError> {
    Ok(match e {
        Expr::Number(n) => ComplexVal::real(rational_f64(n)),
        Expr::Var => ComplexVal::real(x),
        Expr::Param(_) => return Err(EvalError::NonFinite),
        Expr::Add(a, b) => eval_rec(a, x)?.add(eval_rec(b, x)?),
        Expr::Sub(a, b) => eval_rec(a, x)?.sub(eval_rec(b, x)?),
        Expr::Neg(a) => ComplexVal::real(0.0).sub(eval_rec(a, x)?),
        Expr::Mul(a, b) => eval_rec(a, x)?.mul(eval_rec(b, x)?),
        Expr::Div(a, b) => {
            let den = eval_rec(b, x)?;
            if den.abs() < 1e-15 {
                return Err(EvalError::PoleEncountered);
            }
            eval_rec(a, x)?.div(den)
        }
        Expr::Pow(a, n) => eval_rec(a, x)?.powi(*n),
        Expr::Sqrt(a) => eval_rec(a, x)?.sqrt_principal(),
    })
}

fn rational_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// Oracle classification of a candidate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OracleVerdict {
    Strong,
    FormalOnly,
    Neither,
}

/// Polynomial compiled to f64 coefficients (lowest degree first).
#[derive(Debug, Clone)]
struct F64Poly(Vec<f64>);

impl F64Poly {
    fn compile(p: &crate::algebra::Polynomial) -> Self {
        F64Poly(p.coeffs().iter().map(rational_f64).collect())
    }

    fn eval(&self, x: f64) -> f64 {
        let mut acc = 0.0;
        for c in self.0.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }
}

#[derive(Debug, Clone)]
struct F64Rf {
    num: F64Poly,
    den: F64Poly,
}

impl F64Rf {
    fn compile(rf: &RationalFunction) -> Self {
        F64Rf {
            num: F64Poly::compile(rf.num()),
            den: F64Poly::compile(rf.den()),
        }
    }

    fn eval(&self, x: f64) -> Option<f64> {
        let d = self.den.eval(x);
        if d.abs() < 1e-15 {
            return None;
        }
        let v = self.num.eval(x) / d;
        v.is_finite().then_some(v)
    }
}

/// An equation compiled for fast repeated numeric evaluation.
#[derive(Debug, Clone)]
pub struct CompiledEquation {
    kind: FormKind,
    payloads: Vec<F64Rf>,
}

/// Payload indices holding radicands, per form. Payload order matches
/// [`RadicalEquation::payloads`].
fn radicand_indices(kind: FormKind, n_payloads: usize) -> Vec<usize> {
    match kind {
        FormKind::EqualRoots => vec![0, 1],
        FormKind::RootEqualsFunction => vec![0],
        FormKind::RootSumEqualsFunction => vec![0, 1],
        FormKind::RootSumEqualsRoot => vec![0, 1, 2],
        FormKind::RootDifferenceEqualsFunction => vec![0, 1],
        FormKind::ScaledRootEqualsFunction => vec![1],
        FormKind::RootSumZero => (0..n_payloads).collect(),
    }
}

/// Combines already-evaluated payload values into `lhs - rhs` using complex
/// arithmetic with principal roots.
fn combine_residual(kind: FormKind, vals: &[f64]) -> ComplexVal {
    let sqrt = |v: f64| ComplexVal::real(v).sqrt_principal();
    match kind {
        FormKind::EqualRoots => sqrt(vals[0]).sub(sqrt(vals[1])),
        FormKind::RootEqualsFunction => sqrt(vals[0]).sub(ComplexVal::real(vals[1])),
        FormKind::RootSumEqualsFunction => sqrt(vals[0])
            .add(sqrt(vals[1]))
            .sub(ComplexVal::real(vals[2])),
        FormKind::RootSumEqualsRoot => sqrt(vals[0]).add(sqrt(vals[1])).sub(sqrt(vals[2])),
        FormKind::RootDifferenceEqualsFunction => sqrt(vals[0])
            .sub(sqrt(vals[1]))
            .sub(ComplexVal::real(vals[2])),
        FormKind::ScaledRootEqualsFunction => ComplexVal::real(vals[0])
            .mul(sqrt(vals[1]))
            .sub(ComplexVal::real(vals[2])),
        FormKind::RootSumZero => {
            let mut acc = ComplexVal::real(0.0);
            for &v in vals {
                acc = acc.add(sqrt(v));
            }
            acc
        }
    }
}

impl CompiledEquation {
    pub fn new(eq: &RadicalEquation) -> Self {
        CompiledEquation {
            kind: eq.kind(),
            payloads: eq.payloads().iter().map(|rf| F64Rf::compile(rf)).collect(),
        }
    }

    /// Values of all radicands at `x`; `None` at a pole.
    pub fn radicand_values(&self, x: f64) -> Option<Vec<f64>> {
        radicand_indices(self.kind, self.payloads.len())
            .into_iter()
            .map(|i| self.payloads[i].eval(x))
            .collect()
    }

    /// `lhs - rhs` at `x` in complex arithmetic (principal roots).
    pub fn residual_complex(&self, x: f64) -> Option<ComplexVal> {
        let vals: Option<Vec<f64>> = self.payloads.iter().map(|p| p.eval(x)).collect();
        let r = combine_residual(self.kind, &vals?);
        r.is_finite().then_some(r)
    }

    /// Real-restricted residual: `lhs - rhs` where every radicand is
    /// nonnegative; `None` outside the feasible region or at a pole.
    ///
    /// Allocation-free: this is the inner loop of [`scan`].
    pub fn residual_real(&self, x: f64) -> Option<f64> {
        let p = &self.payloads;
        let v = |i: usize| p[i].eval(x);
        let root = |w: f64| if w < 0.0 { None } else { Some(w.sqrt()) };
        let r = match self.kind {
            FormKind::EqualRoots => root(v(0)?)? - root(v(1)?)?,
            FormKind::RootEqualsFunction => root(v(0)?)? - v(1)?,
            FormKind::RootSumEqualsFunction => root(v(0)?)? + root(v(1)?)? - v(2)?,
            FormKind::RootSumEqualsRoot => root(v(0)?)? + root(v(1)?)? - root(v(2)?)?,
            FormKind::RootDifferenceEqualsFunction => root(v(0)?)? - root(v(1)?)? - v(2)?,
            FormKind::ScaledRootEqualsFunction => v(0)? * root(v(1)?)? - v(2)?,
            FormKind::RootSumZero => {
                let mut acc = 0.0;
                for q in p {
                    acc += root(q.eval(x)?)?;
                }
                acc
            }
        };
        r.is_finite().then_some(r)
    }
}

/// Verifies a candidate by substitution.
///
/// The candidate is refined to an interval of width 1e-24 and every payload
/// is evaluated exactly (rational arithmetic) at the midpoint before the
/// radical combination is carried out in complex f64 arithmetic. Plain f64
/// substitution cannot work here: at a solution where a radicand vanishes,
/// an argument error of eps under a square root surfaces as sqrt(eps), so
/// meeting a 1e-9 residual demands argument accuracy near 1e-20 — beyond
/// what a f64 abscissa can carry.
pub fn verify(eq: &RadicalEquation, alpha: &AlgebraicReal, tol: f64) -> OracleVerdict {
    use num_bigint::BigInt;
    let width = Rational::new(BigInt::from(1), BigInt::from(10u32).pow(24));
    let refined = alpha.refined(&width);
    let mid =
        (refined.iso_lo() + refined.iso_hi()) / Rational::new(BigInt::from(2), BigInt::from(1));
    let payload_vals: Option<Vec<f64>> = eq
        .payloads()
        .iter()
        .map(|rf| rf.eval(&mid).map(|v| rational_f64(&v)))
        .collect();
    let Some(vals) = payload_vals else {
        return OracleVerdict::Neither; // pole at the candidate
    };
    if vals.iter().any(|v| !v.is_finite()) {
        return OracleVerdict::Neither;
    }
    let residual = combine_residual(eq.kind(), &vals);
    if !residual.is_finite() || residual.abs() >= tol {
        return OracleVerdict::Neither;
    }
    let radicands = radicand_indices(eq.kind(), vals.len());
    if radicands.into_iter().all(|i| vals[i] >= -tol) {
        OracleVerdict::Strong
    } else {
        OracleVerdict::FormalOnly
    }
}

/// Result of a residual scan over a grid.
#[derive(Debug, Clone, Default)]
pub struct ScanResult {
    /// Isolated approximate solutions (bisected sign changes and residual
    /// near-zeros), deduplicated and sorted.
    pub points: Vec<f64>,
    /// Runs of consecutive grid points where the residual vanishes —
    /// intervals of solutions.
    pub intervals: Vec<(f64, f64)>,
}

/// Scans `[lo, hi]` with the given step for real solutions of the equation:
/// sign changes of the real-restricted residual are bisected to width 1e-10;
/// grid points with residual below 1e-8 count as hits, and runs of two or
/// more consecutive hits are reported as solution intervals.
pub fn scan(eq: &RadicalEquation, lo: f64, hi: f64, step: f64) -> ScanResult {
    assert!(lo < hi && step > 0.0);
    let compiled = CompiledEquation::new(eq);
    let mut points: Vec<f64> = Vec::new();
    let mut run_start: Option<f64> = None;
    let mut run_len = 0usize;
    let mut last: Option<(f64, f64)> = None; // (x, residual)
    let mut intervals: Vec<(f64, f64)> = Vec::new();
    let mut singles: Vec<f64> = Vec::new();

    let n = ((hi - lo) / step).round() as u64;
    for i in 0..=n {
        let x = lo + (i as f64) * step;
        let r = compiled.residual_real(x);
        match r {
            Some(v) if v.abs() < 1e-8 => match run_start {
                None => {
                    run_start = Some(x);
                    run_len = 1;
                }
                Some(_) => run_len += 1,
            },
            _ => {
                flush_run(
                    &mut run_start,
                    &mut run_len,
                    &mut intervals,
                    &mut singles,
                    x - step,
                );
            }
        }
        if let (Some((px, pv)), Some(v)) = (last, r) {
            if pv.signum() != v.signum() && pv != 0.0 && v != 0.0 {
                if let Some(root) = bisect_residual(&compiled, px, x) {
                    points.push(root);
                }
            }
        }
        last = r.map(|v| (x, v));
        if r.is_none() {
            last = None;
        }
    }
    flush_run(
        &mut run_start,
        &mut run_len,
        &mut intervals,
        &mut singles,
        hi,
    );

    points.extend(singles);
    points.sort_by(|a, b| a.partial_cmp(b).expect("finite"));
    points.dedup_by(|a, b| (*a - *b).abs() < 1e-8);
    // drop isolated points already covered by an interval run
    points.retain(|p| {
        !intervals
            .iter()
            .any(|(a, b)| *p >= a - 1e-8 && *p <= b + 1e-8)
    });
    ScanResult { points, intervals }
}

fn flush_run(
    run_start: &mut Option<f64>,
    run_len: &mut usize,
    intervals: &mut Vec<(f64, f64)>,
    singles: &mut Vec<f64>,
    run_end: f64,
) {
    if let Some(start) = run_start.take() {
        if *run_len >= 2 {
            intervals.push((start, run_end));
        } else {
            singles.push(start);
        }
    }
    *run_len = 0;
}

/// Bisects a bracketed sign change of the real residual down to width 1e-10.
/// Returns `None` when the bracket straddles a pole or feasibility boundary
/// rather than a root.
fn bisect_residual(compiled: &CompiledEquation, mut a: f64, mut b: f64) -> Option<f64> {
    let mut fa = compiled.residual_real(a)?;
    for _ in 0..200 {
        if (b - a).abs() <= 1e-10 {
            break;
        }
        let m = 0.5 * (a + b);
        {
            let fm = compiled.residual_real(m)?;
            if fm == 0.0 {
                return Some(m);
            }
            if fm.signum() == fa.signum() {
                a = m;
                fa = fm;
            } else {
                b = m;
            }
        }
    }
    let m = 0.5 * (a + b);
    let r = compiled.residual_real(m)?;
    (r.abs() < 1e-6).then_some(m)
}

/// Deterministic 64-bit generator (splitmix64).
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform value in `[0, n)`.
    pub fn below(&mut self, n: u64) -> u64 {
        self.next_u64() % n
    }

    /// Uniform integer in `[lo, hi]`.
    pub fn int_in(&mut self, lo: i64, hi: i64) -> i64 {
        lo + self.below((hi - lo + 1) as u64) as i64
    }
}

/// Deterministically generates a random equation of the requested form with
/// polynomial payloads of degree at most `max_degree` and rational
/// coefficients with numerator and denominator in `[-9, 9]`.
pub fn random_equation(seed: u64, form: FormKind, max_degree: u32) -> RadicalEquation {
    assert!(max_degree <= 3, "max_degree must be in [0, 3]");
    let mut rng = SplitMix64::new(seed);
    let poly = |rng: &mut SplitMix64| -> RationalFunction {
        let degree = rng.below(max_degree as u64 + 1) as usize;
        let mut coeffs: Vec<Rational> = Vec::with_capacity(degree + 1);
        for i in 0..=degree {
            let mut num = rng.int_in(-9, 9);
            let den = rng.int_in(1, 9);
            if i == degree && degree > 0 {
                while num == 0 {
                    num = rng.int_in(-9, 9);
                }
            }
            coeffs.push(rat(num, den));
        }
        RationalFunction::from_polynomial(crate::algebra::Polynomial::new(coeffs))
    };
    match form {
        FormKind::EqualRoots => RadicalEquation::EqualRoots {
            f: poly(&mut rng),
            g: poly(&mut rng),
        },
        FormKind::RootEqualsFunction => RadicalEquation::RootEqualsFunction {
            f: poly(&mut rng),
            g: poly(&mut rng),
        },
        FormKind::RootSumEqualsFunction => {
            let f = poly(&mut rng);
            let g = poly(&mut rng);
            // h == 0 is not canonical for this form (it renders as a
            // sum-of-radicals-equals-zero equation)
            let mut h = poly(&mut rng);
            while h.is_zero() {
                h = poly(&mut rng);
            }
            RadicalEquation::RootSumEqualsFunction { f, g, h }
        }
        FormKind::RootSumEqualsRoot => RadicalEquation::RootSumEqualsRoot {
            f: poly(&mut rng),
            g: poly(&mut rng),
            h: poly(&mut rng),
        },
        FormKind::RootDifferenceEqualsFunction => {
            let f = poly(&mut rng);
            let g = poly(&mut rng);
            // h == 0 is not canonical (it renders as sqrt(f) = sqrt(g))
            let mut h = poly(&mut rng);
            while h.is_zero() {
                h = poly(&mut rng);
            }
            RadicalEquation::RootDifferenceEqualsFunction { f, g, h }
        }
        FormKind::ScaledRootEqualsFunction => {
            // canonical form requires h != +-1 (those normalize to the
            // unscaled form)
            let mut h = poly(&mut rng);
            while h.is_one() || h.is_minus_one() {
                h = poly(&mut rng);
            }
            RadicalEquation::ScaledRootEqualsFunction {
                h,
                f: poly(&mut rng),
                g: poly(&mut rng),
            }
        }
        FormKind::RootSumZero => {
            let n = 2 + rng.below(2) as usize;
            let radicands = (0..n).map(|_| poly(&mut rng)).collect();
            RadicalEquation::RootSumZero { radicands }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{isolate_real_roots, Polynomial};
    use crate::equation::parse;

    fn rf(coeffs: &[i64]) -> RationalFunction {
        RationalFunction::from_polynomial(Polynomial::from_ints(coeffs))
    }

    #[test]
    fn principal_root_convention() {
        // sqrt(1-3x) at x = 2 is i*sqrt(5)
        let e = parse("sqrt(1-3*x) = 0").unwrap().0;
        let v = eval_side(&e, 2.0).unwrap();
        assert!(v.re.abs() < 1e-12);
        assert!((v.im - 5f64.sqrt()).abs() < 1e-12);
        assert!(v.im > 0.0);
    }

    #[test]
    fn polynomial_side_evaluation() {
        let e = parse("x - 5 = 0").unwrap().0;
        let v = eval_side(&e, 12.0).unwrap();
        assert_eq!(v, ComplexVal::real(7.0));
    }

    #[test]
    fn imaginary_sides_agree_at_formal_solution() {
        // sqrt(x+1)+sqrt(x-1) and sqrt(x-2) at x = (2-2*sqrt7)/3
        let x = (2.0 - 2.0 * 7f64.sqrt()) / 3.0;
        let lhs = parse_side("sqrt(x+1)+sqrt(x-1)");
        let rhs = parse_side("sqrt(x-2)");
        let lv = eval_side(&lhs, x).unwrap();
        let rv = eval_side(&rhs, x).unwrap();
        assert!(lv.sub(rv).abs() < 1e-9);
        assert!(lv.re.abs() < 1e-9 && lv.im > 1.0);
    }

    fn parse_side(src: &str) -> Expr {
        crate::equation::parse_expr(src).unwrap()
    }

    #[test]
    fn pole_guard() {
        let e = parse_side("1/(x-1)");
        assert_eq!(eval_side(&e, 1.0), Err(EvalError::PoleEncountered));
    }

    #[test]
    fn verify_classifies_example_candidates() {
        // sqrt(x+1)+sqrt(x-1) = sqrt(x+2)
        let eq = RadicalEquation::RootSumEqualsRoot {
            f: rf(&[1, 1]),
            g: rf(&[-1, 1]),
            h: rf(&[2, 1]),
        };
        let roots = isolate_real_roots(&Polynomial::from_ints(&[-8, 4, 3])).unwrap();
        assert_eq!(verify(&eq, &roots[1], 1e-9), OracleVerdict::Strong);
        assert_eq!(verify(&eq, &roots[0], 1e-9), OracleVerdict::Neither);
        // b = -2 variant: x1 is formal-only
        let eq2 = RadicalEquation::RootSumEqualsRoot {
            f: rf(&[1, 1]),
            g: rf(&[-1, 1]),
            h: rf(&[-2, 1]),
        };
        let roots2 = isolate_real_roots(&Polynomial::from_ints(&[-8, -4, 3])).unwrap();
        // S0 for b = -2: 4(x^2-1) = (-2-x)^2 -> 3x^2-4x-8
        assert_eq!(verify(&eq2, &roots2[0], 1e-9), OracleVerdict::FormalOnly);
    }

    #[test]
    fn scan_finds_the_strong_solution() {
        let eq = RadicalEquation::RootSumEqualsRoot {
            f: rf(&[1, 1]),
            g: rf(&[-1, 1]),
            h: rf(&[2, 1]),
        };
        let result = scan(&eq, 1.0, 10.0, 1e-3);
        assert_eq!(result.points.len(), 1);
        let expected = (-2.0 + 2.0 * 7f64.sqrt()) / 3.0;
        assert!((result.points[0] - expected).abs() < 1e-8);
        assert!(result.intervals.is_empty());
    }

    #[test]
    fn scan_flags_identity_as_interval() {
        // sqrt(x^2) + sqrt(x^2) = 2x on [0, 5]
        let eq = RadicalEquation::RootSumEqualsFunction {
            f: rf(&[0, 0, 1]),
            g: rf(&[0, 0, 1]),
            h: rf(&[0, 2]),
        };
        let result = scan(&eq, 0.0, 5.0, 1e-2);
        assert_eq!(result.intervals.len(), 1);
        assert!(result.points.is_empty());
    }

    #[test]
    fn scan_empty_when_no_strong_solutions() {
        // sqrt(-x) - sqrt(x-2) = x-1: feasible region of both radicands is
        // empty, no strong solutions
        let eq = RadicalEquation::RootDifferenceEqualsFunction {
            f: rf(&[0, -1]),
            g: rf(&[-2, 1]),
            h: rf(&[-1, 1]),
        };
        let result = scan(&eq, -10.0, 10.0, 1e-3);
        assert!(result.points.is_empty() && result.intervals.is_empty());
    }

    #[test]
    fn random_equation_is_deterministic_and_in_bounds() {
        for form in FormKind::ALL {
            let a = random_equation(42, form, 2);
            let b = random_equation(42, form, 2);
            assert_eq!(a, b);
            assert_eq!(a.kind(), form);
        }
        for seed in 0..1000u64 {
            let eq = random_equation(seed, FormKind::RootSumEqualsFunction, 2);
            for p in eq.payloads() {
                assert!(p.is_polynomial());
                assert!(p.num().degree().map_or(0, |d| d) <= 2);
                for c in p.num().coeffs() {
                    let n = c.numer().to_f64().unwrap().abs();
                    let d = c.denom().to_f64().unwrap();
                    assert!(n <= 9.0 && d <= 9.0, "coefficient out of range: {c}");
                }
            }
        }
    }
}
