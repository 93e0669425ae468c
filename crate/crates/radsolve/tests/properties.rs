//! Property tests: module invariants checked against brute-force oracles.

use std::cmp::Ordering;

use proptest::prelude::*;

use radsolve::algebra::{
    compare, isolate_real_roots, rat, rat_int, refine, sign_at, AlgebraicReal, Polynomial,
    Rational, RationalFunction, Sign,
};
use radsolve::equation::{normalize, parse, Expr, FormKind, RadicalEquation};
use radsolve::oracle::{self, eval_side, SplitMix64};
use radsolve::realset::{RealSet, SignRel};
use radsolve::solver::solve;

fn poly_strategy(max_degree: usize) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((-9i64..=9, 1i64..=9), 1..=max_degree + 1)
        .prop_map(|coeffs| Polynomial::new(coeffs.into_iter().map(|(n, d)| rat(n, d)).collect()))
}

fn nonzero_poly(max_degree: usize) -> impl Strategy<Value = Polynomial> {
    poly_strategy(max_degree).prop_filter("nonzero", |p| !p.is_zero())
}

fn rf_strategy(max_degree: usize) -> impl Strategy<Value = RationalFunction> {
    (poly_strategy(max_degree), nonzero_poly(2))
        .prop_map(|(num, den)| RationalFunction::new(num, den).expect("nonzero denominator"))
}

/// Upper bound on the number of distinct real roots: Descartes' rule applied
/// to the square-free part on both half-lines, plus a possible root at zero.
fn descartes_bound(p: &Polynomial) -> usize {
    let sf = p.square_free_part();
    let vars = |coeffs: &[Rational]| -> usize {
        let mut count = 0;
        let mut prev = Sign::Zero;
        for c in coeffs {
            let s = Sign::of_rational(c);
            if s == Sign::Zero {
                continue;
            }
            if prev != Sign::Zero && s != prev {
                count += 1;
            }
            prev = s;
        }
        count
    };
    let pos = vars(sf.coeffs());
    let neg_coeffs: Vec<Rational> = sf
        .coeffs()
        .iter()
        .enumerate()
        .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
        .collect();
    let neg = vars(&neg_coeffs);
    let zero_root = usize::from(sf.coeff(0) == rat_int(0));
    pos + neg + zero_root
}

/// Lower bound: exact zeros hit plus sign changes of the square-free part on
/// a fine rational grid.
fn grid_root_count(p: &Polynomial, half_width: i64, steps: i64) -> usize {
    let sf = p.square_free_part();
    let mut count = 0;
    let mut prev = Sign::Zero;
    for k in 0..=steps {
        let x = rat(-half_width * steps + 2 * half_width * k, steps);
        let s = sf.sign_at_rational(&x);
        if s == Sign::Zero {
            // root hit exactly; reset so the following sign is not counted
            // as a crossing of the same root
            count += 1;
            prev = Sign::Zero;
            continue;
        }
        if prev != Sign::Zero && s != prev {
            count += 1;
        }
        prev = s;
    }
    count
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(120))]

    /// Root isolation agrees with the grid + Descartes oracle: the isolated
    /// count is sandwiched between the bounds, and equals the count exactly
    /// whenever the oracle is conclusive.
    #[test]
    fn isolation_count_matches_oracle(p in nonzero_poly(6)) {
        prop_assume!(!p.is_constant());
        let roots = isolate_real_roots(&p).unwrap();
        let upper = descartes_bound(&p);
        let lower = grid_root_count(&p, 32, 512);
        prop_assert!(roots.len() <= upper, "{p}: {} roots > Descartes bound {upper}", roots.len());
        prop_assert!(roots.len() >= lower, "{p}: {} roots < grid bound {lower}", roots.len());
        if lower == upper {
            prop_assert_eq!(roots.len(), upper, "inconclusive count for {}", p);
        }
        // intervals pairwise disjoint and sorted
        for w in roots.windows(2) {
            prop_assert!(compare(&w[0], &w[1]) == Ordering::Less);
            prop_assert!(w[0].iso_hi() < w[1].iso_lo() || w[0].as_rational().is_some());
        }
    }

    /// compare is antisymmetric, transitive, and consistent with f64
    /// approximations of well-separated numbers.
    #[test]
    fn compare_is_total_order(a in nonzero_poly(4), b in nonzero_poly(4), c in nonzero_poly(4)) {
        prop_assume!(!a.is_constant() && !b.is_constant() && !c.is_constant());
        let mut values = Vec::new();
        for p in [&a, &b, &c] {
            values.extend(isolate_real_roots(p).unwrap());
        }
        prop_assume!(!values.is_empty());
        for x in &values {
            for y in &values {
                let xy = compare(x, y);
                prop_assert_eq!(xy, compare(y, x).reverse());
                if xy != Ordering::Equal {
                    let dx = x.approx_f64();
                    let dy = y.approx_f64();
                    if (dx - dy).abs() > 1e-9 {
                        let approx_ord = dx.partial_cmp(&dy).unwrap();
                        prop_assert_eq!(xy, approx_ord, "order disagrees with approximation");
                    }
                }
                for z in &values {
                    if xy == Ordering::Less && compare(y, z) == Ordering::Less {
                        prop_assert_eq!(compare(x, z), Ordering::Less);
                    }
                }
            }
        }
    }

    /// Refinement never changes sign_at or compare.
    #[test]
    fn refine_is_transparent(p in nonzero_poly(4), q in rf_strategy(3)) {
        prop_assume!(!p.is_constant());
        let roots = isolate_real_roots(&p).unwrap();
        prop_assume!(!roots.is_empty());
        let width = rat(1, 1 << 24);
        for x in &roots {
            let fine = refine(x, &width);
            prop_assert!(fine.interval_width() <= width || fine.as_rational().is_some());
            prop_assert_eq!(compare(x, &fine), Ordering::Equal);
            prop_assert_eq!(sign_at(&q, x).ok(), sign_at(&q, &fine).ok());
        }
    }

    /// contains distributes over intersection and union.
    #[test]
    fn contains_distributes(
        p in rf_strategy(3),
        q in rf_strategy(3),
        probe_num in -40i64..=40,
        probe_den in 1i64..=8,
    ) {
        let a = RealSet::from_sign_condition(&p, SignRel::Ge);
        let b = RealSet::from_sign_condition(&q, SignRel::Lt);
        let x = AlgebraicReal::from_rational(rat(probe_num, probe_den));
        let inter = a.intersect(&b);
        let union = a.union(&b);
        prop_assert_eq!(inter.contains(&x), a.contains(&x) && b.contains(&x));
        prop_assert_eq!(union.contains(&x), a.contains(&x) || b.contains(&x));
    }

    /// Set algebra is commutative, associative, and idempotent up to
    /// canonical form.
    #[test]
    fn set_algebra_laws(p in rf_strategy(2), q in rf_strategy(2), r in rf_strategy(2)) {
        let a = RealSet::from_sign_condition(&p, SignRel::Ge);
        let b = RealSet::from_sign_condition(&q, SignRel::Le);
        let c = RealSet::from_sign_condition(&r, SignRel::Gt);
        prop_assert_eq!(a.intersect(&b), b.intersect(&a));
        prop_assert_eq!(a.union(&b), b.union(&a));
        prop_assert_eq!(a.intersect(&a), a.clone());
        prop_assert_eq!(a.union(&a), a.clone());
        prop_assert_eq!(a.intersect(&b).intersect(&c), a.intersect(&b.intersect(&c)));
        prop_assert_eq!(a.union(&b).union(&c), a.union(&b.union(&c)));
    }

    /// {p >= 0} and {p < 0} partition the domain of p.
    #[test]
    fn sign_condition_partition(p in rf_strategy(3)) {
        let ge = RealSet::from_sign_condition(&p, SignRel::Ge);
        let lt = RealSet::from_sign_condition(&p, SignRel::Lt);
        prop_assert_eq!(ge.union(&lt), RealSet::domain_of(&p));
        prop_assert!(ge.intersect(&lt).is_empty());
    }

    /// Rendering a normalized equation and reparsing it reproduces the same
    /// equation, and normalization is idempotent.
    #[test]
    fn normalize_round_trip(seed in 0u64..5000, form_idx in 0usize..7) {
        let form = FormKind::ALL[form_idx];
        let eq = oracle::random_equation(seed, form, 2);
        let rendered = eq.to_string();
        let (lhs, rhs) = parse(&rendered).unwrap();
        let eq2 = normalize(&lhs, &rhs).unwrap();
        prop_assert_eq!(&eq2, &eq, "round trip changed {}", rendered);
    }

    /// Report invariants: strong is a subset of formal, every isolated
    /// formal point appears among the candidates, and no candidate is
    /// rejected silently (a rejected candidate either names a violated
    /// restriction or has a large complex residual).
    #[test]
    fn report_invariants(seed in 0u64..2000, form_idx in 0usize..7) {
        let form = FormKind::ALL[form_idx];
        let eq = oracle::random_equation(seed, form, 1);
        let report = solve(&eq);
        prop_assert!(report.strong.is_subset_of(&report.formal));
        for pt in report.formal.isolated_points() {
            prop_assert!(
                report
                    .candidates
                    .iter()
                    .any(|c| compare(&c.value, &pt) == Ordering::Equal),
                "isolated formal point missing from candidates for {}", eq
            );
        }
        for c in &report.candidates {
            let in_strong = report.strong.contains(&c.value);
            let in_formal = report.formal.contains(&c.value);
            match c.verdict {
                radsolve::solver::Verdict::Strong => prop_assert!(in_strong),
                radsolve::solver::Verdict::FormalOnly => prop_assert!(in_formal && !in_strong),
                radsolve::solver::Verdict::Rejected => {
                    prop_assert!(!in_formal && !in_strong);
                    let loud = !c.failed.is_empty()
                        || matches!(
                            oracle::verify(&eq, &c.value, 1e-3),
                            oracle::OracleVerdict::Neither
                        );
                    prop_assert!(loud, "silent rejection in {}", eq);
                }
            }
        }
    }
}

/// Exact membership in a sign-condition set agrees with the sign of the
/// exact evaluation, over a large grid of rational sample points.
#[test]
fn sign_condition_agreement_bulk() {
    let mut rng = SplitMix64::new(0x5160_C0DE);
    let mut total = 0u64;
    for _ in 0..100 {
        let degree = rng.below(5) as usize;
        let mut coeffs = Vec::with_capacity(degree + 1);
        for _ in 0..=degree {
            coeffs.push(rat(rng.int_in(-9, 9), rng.int_in(1, 9)));
        }
        let p = Polynomial::new(coeffs);
        let rf = RationalFunction::from_polynomial(p.clone());
        let ge = RealSet::from_sign_condition(&rf, SignRel::Ge);
        for _ in 0..10_000 {
            let x = rat(rng.int_in(-4000, 4000), rng.int_in(1, 40));
            let expected = p.sign_at_rational(&x) != Sign::Negative;
            assert_eq!(ge.contains_rational(&x), expected, "p = {p}, x = {x}");
            total += 1;
        }
    }
    assert_eq!(total, 1_000_000);
}

/// Normalization never changes the solution set: randomized equivalent
/// surface forms of an equation classify sample points identically under
/// complex evaluation.
#[test]
fn normalize_preserves_satisfaction() {
    let mut rng = SplitMix64::new(0x4E30_12AB);
    let mut checked_equations = 0;
    let mut seed = 0u64;
    while checked_equations < 200 {
        let form = FormKind::ALL[(seed % 7) as usize];
        let eq = oracle::random_equation(90_000 + seed, form, 2);
        seed += 1;
        let (lhs, rhs) = eq.to_sides();
        // equivalent surface variants: everything moved left; sides swapped
        let variants: Vec<(Expr, Expr)> = vec![
            (
                Expr::Sub(Box::new(lhs.clone()), Box::new(rhs.clone())),
                Expr::Number(rat_int(0)),
            ),
            (rhs.clone(), lhs.clone()),
        ];
        let mut normalized: Vec<RadicalEquation> = Vec::new();
        for (l, r) in &variants {
            match normalize(l, r) {
                Ok(n) => normalized.push(n),
                Err(_) => continue,
            }
        }
        if normalized.is_empty() {
            continue;
        }
        checked_equations += 1;
        for _ in 0..50 {
            let x = (rng.int_in(-1000, 1000) as f64) / 100.0;
            let sat_original = satisfied(&lhs, &rhs, x);
            for n in &normalized {
                let (nl, nr) = n.to_sides();
                let sat_norm = satisfied(&nl, &nr, x);
                match (sat_original, sat_norm) {
                    (Some(a), Some(b)) => assert_eq!(
                        a, b,
                        "variant of {eq} disagrees at x = {x} (normalized {n})"
                    ),
                    _ => continue, // evaluation failed on one side (pole)
                }
            }
        }
    }
}

/// Complex-numeric satisfaction with a dead zone around the tolerance to
/// avoid flapping near the boundary.
fn satisfied(lhs: &Expr, rhs: &Expr, x: f64) -> Option<bool> {
    let l = eval_side(lhs, x).ok()?;
    let r = eval_side(rhs, x).ok()?;
    let d = (l.re - r.re).hypot(l.im - r.im);
    if d < 1e-9 {
        Some(true)
    } else if d > 1e-6 {
        Some(false)
    } else {
        None // ambiguous zone: skip
    }
}
