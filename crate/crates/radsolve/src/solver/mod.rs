//! The restriction-set solver.
//!
//! For each canonical form the equation is squared into a radical-free
//! candidate equation whose solution set is `S0`, while every squaring step
//! contributes an inequality restriction (`A1..A4`) that an acceptable
//! solution must satisfy. Strong and formal solution sets are then plain
//! set algebra over `S0` and the restrictions — no candidate is ever
//! substituted back into the original equation.

use std::cmp::Ordering;
use std::fmt;

use crate::algebra::{
    compare, sign_at, AlgebraicReal, Polynomial, Rational, RationalFunction, Sign,
};
use crate::equation::RadicalEquation;
use crate::realset::{RealSet, SignRel};
use crate::report::approx_string;

/// Label of one named restriction set.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RestrictionName {
    A1,
    A2,
    A3,
    A4,
    B1,
}

impl fmt::Display for RestrictionName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            RestrictionName::A1 => "A1",
            RestrictionName::A2 => "A2",
            RestrictionName::A3 => "A3",
            RestrictionName::A4 => "A4",
            RestrictionName::B1 => "B1",
        };
        write!(f, "{s}")
    }
}

/// One named restriction: the label, the exact set, and a human-readable
/// definition such as `x - 5 >= 0`.
#[derive(Debug, Clone)]
pub struct NamedRestriction {
    pub name: RestrictionName,
    pub set: RealSet,
    pub description: String,
}

/// Set expression over `S0` and the named restrictions.
#[derive(Debug, Clone)]
pub enum SetFormula {
    S0,
    Named(RestrictionName),
    Inter(Vec<SetFormula>),
    Union(Vec<SetFormula>),
}

impl fmt::Display for SetFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SetFormula::S0 => write!(f, "S0"),
            SetFormula::Named(n) => write!(f, "{n}"),
            SetFormula::Inter(parts) => {
                let strs: Vec<String> = parts.iter().map(|p| p.to_string()).collect();
                write!(f, "{}", strs.join(" n "))
            }
            SetFormula::Union(parts) => {
                let strs: Vec<String> = parts
                    .iter()
                    .map(|p| match p {
                        SetFormula::Inter(_) => format!("({p})"),
                        _ => p.to_string(),
                    })
                    .collect();
                write!(f, "{}", strs.join(" u "))
            }
        }
    }
}

/// Candidate set, restriction sets, and the combination formulas for one
/// equation.
#[derive(Debug, Clone)]
pub struct RestrictionSystem {
    /// Solutions of the fully rationalized equation, within the common
    /// domain of the payload functions.
    pub s0: RealSet,
    pub named: Vec<NamedRestriction>,
    pub strong_formula: SetFormula,
    pub formal_formula: SetFormula,
    /// Human-readable derivation (squaring chain), one line per step.
    pub derivation: Vec<String>,
    /// Extra notes (e.g. partial formal support).
    pub notes: Vec<String>,
}

impl RestrictionSystem {
    pub fn restriction(&self, name: RestrictionName) -> Option<&RealSet> {
        self.named.iter().find(|r| r.name == name).map(|r| &r.set)
    }

    pub fn eval(&self, formula: &SetFormula) -> RealSet {
        match formula {
            SetFormula::S0 => self.s0.clone(),
            SetFormula::Named(n) => self
                .restriction(*n)
                .expect("formula references a defined restriction")
                .clone(),
            SetFormula::Inter(parts) => {
                let mut parts = parts.iter();
                let first = self.eval(parts.next().expect("nonempty intersection"));
                parts.fold(first, |acc, p| acc.intersect(&self.eval(p)))
            }
            SetFormula::Union(parts) => {
                let mut parts = parts.iter();
                let first = self.eval(parts.next().expect("nonempty union"));
                parts.fold(first, |acc, p| acc.union(&self.eval(p)))
            }
        }
    }

    pub fn strong_set(&self) -> RealSet {
        self.eval(&self.strong_formula)
    }

    pub fn formal_set(&self) -> RealSet {
        self.eval(&self.formal_formula)
    }
}

/// Classification of one isolated candidate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Verdict {
    Strong,
    FormalOnly,
    Rejected,
}

impl Verdict {
    pub fn id(&self) -> &'static str {
        match self {
            Verdict::Strong => "strong",
            Verdict::FormalOnly => "formal_only",
            Verdict::Rejected => "rejected",
        }
    }
}

/// One isolated candidate with its verdict and the restrictions it violates.
#[derive(Debug, Clone)]
pub struct Candidate {
    pub value: AlgebraicReal,
    pub approx: String,
    pub verdict: Verdict,
    pub failed: Vec<RestrictionName>,
}

/// Complete classification of an equation's solutions.
#[derive(Debug, Clone)]
pub struct SolutionReport {
    pub equation: RadicalEquation,
    pub strong: RealSet,
    pub formal: RealSet,
    pub candidates: Vec<Candidate>,
    pub notes: Vec<String>,
}

/// A report together with the restriction system that produced it.
#[derive(Debug, Clone)]
pub struct Analysis {
    pub system: RestrictionSystem,
    pub report: SolutionReport,
}

fn cond(p: &RationalFunction, rel: SignRel) -> RealSet {
    RealSet::from_sign_condition(p, rel)
}

/// Common domain of all payloads: the real line minus every pole.
fn common_domain(parts: &[&RationalFunction]) -> RealSet {
    let mut dom = RealSet::full();
    for p in parts {
        if !p.den().is_constant() {
            dom = dom.intersect(&RealSet::domain_of(p));
        }
    }
    dom
}

fn inter(parts: Vec<SetFormula>) -> SetFormula {
    SetFormula::Inter(parts)
}

fn named(n: RestrictionName) -> SetFormula {
    SetFormula::Named(n)
}

/// `sqrt(f) = g`:  S0 = {f = g^2},  A1 = {g >= 0},  strong = formal = S0 n A1.
pub fn solve_root_equals_function(f: &RationalFunction, g: &RationalFunction) -> RestrictionSystem {
    let dom = common_domain(&[f, g]);
    let defining = f - &(g * g);
    let s0 = cond(&defining, SignRel::Eq).intersect(&dom);
    let a1 = cond(g, SignRel::Ge).intersect(&dom);
    let derivation = vec![
        format!("require {g} >= 0  <=>  x in A1 = {a1}"),
        format!("square both sides: {f} = ({g})^2  <=>  x in S0 = {s0}"),
        "strong = formal = S0 n A1".to_string(),
    ];
    RestrictionSystem {
        s0,
        named: vec![NamedRestriction {
            name: RestrictionName::A1,
            set: a1,
            description: format!("{g} >= 0"),
        }],
        strong_formula: inter(vec![SetFormula::S0, named(RestrictionName::A1)]),
        formal_formula: inter(vec![SetFormula::S0, named(RestrictionName::A1)]),
        derivation,
        notes: vec![],
    }
}

/// `sqrt(f) + sqrt(g) = h`:
/// S0 = {4fg = (h^2-f-g)^2},  A1 = {h >= 0},  A2 = {h^2-f-g >= 0},
/// A3 = {f >= 0};  strong = formal = S0 n A1 n A2 n A3.
///
/// A3 closes a gap in the plain two-restriction combination: a point with
/// `f = g < 0` and `h = 0` satisfies S0, A1 and A2 but makes the left side
/// purely imaginary and nonzero, so it solves nothing. On S0 n A2, `f >= 0`
/// already forces `g >= 0` (4fg is a square, and f = 0 forces g = h^2), so
/// one extra restriction suffices.
pub fn solve_root_sum_equals_function(
    f: &RationalFunction,
    g: &RationalFunction,
    h: &RationalFunction,
) -> RestrictionSystem {
    let dom = common_domain(&[f, g, h]);
    let e = &(h * h) - &(f + g);
    let defining =
        &(&RationalFunction::from_rational(crate::algebra::rat_int(4)) * &(f * g)) - &(&e * &e);
    let s0 = cond(&defining, SignRel::Eq).intersect(&dom);
    let a1 = cond(h, SignRel::Ge).intersect(&dom);
    let a2 = cond(&e, SignRel::Ge).intersect(&dom);
    let a3 = cond(f, SignRel::Ge).intersect(&dom);
    let derivation = vec![
        format!("require {h} >= 0  <=>  x in A1 = {a1}"),
        format!("square both sides: 2*sqrt(({f})*({g})) = ({h})^2 - ({f}) - ({g}) = {e}"),
        format!("require {e} >= 0  <=>  x in A2 = {a2}"),
        format!("require radicand {f} >= 0  <=>  x in A3 = {a3}"),
        format!("square again: 4*({f})*({g}) = ({e})^2  <=>  x in S0 = {s0}"),
        "strong = formal = S0 n A1 n A2 n A3".to_string(),
    ];
    let formula = inter(vec![
        SetFormula::S0,
        named(RestrictionName::A1),
        named(RestrictionName::A2),
        named(RestrictionName::A3),
    ]);
    RestrictionSystem {
        s0,
        named: vec![
            NamedRestriction {
                name: RestrictionName::A1,
                set: a1,
                description: format!("{h} >= 0"),
            },
            NamedRestriction {
                name: RestrictionName::A2,
                set: a2,
                description: format!("{e} >= 0"),
            },
            NamedRestriction {
                name: RestrictionName::A3,
                set: a3,
                description: format!("{f} >= 0 (radicand)"),
            },
        ],
        strong_formula: formula.clone(),
        formal_formula: formula,
        derivation,
        notes: vec![],
    }
}

/// `sqrt(f) + sqrt(g) = sqrt(h)`:
/// S0 = {4fg = (h-f-g)^2},
/// A1 = {f >= 0 and g >= 0 and h >= 0},  A2 = {h-f-g >= 0},
/// A3 = {f <= 0 and g <= 0 and h <= 0},  A4 = {h-f-g <= 0};
/// strong = S0 n A1 n A2,  formal = strong u (S0 n A3 n A4).
pub fn solve_root_sum_equals_root(
    f: &RationalFunction,
    g: &RationalFunction,
    h: &RationalFunction,
) -> RestrictionSystem {
    let dom = common_domain(&[f, g, h]);
    let e = h - &(f + g);
    let defining =
        &(&RationalFunction::from_rational(crate::algebra::rat_int(4)) * &(f * g)) - &(&e * &e);
    let s0 = cond(&defining, SignRel::Eq).intersect(&dom);
    let a1 = cond(f, SignRel::Ge)
        .intersect(&cond(g, SignRel::Ge))
        .intersect(&cond(h, SignRel::Ge))
        .intersect(&dom);
    let a2 = cond(&e, SignRel::Ge).intersect(&dom);
    let a3 = cond(f, SignRel::Le)
        .intersect(&cond(g, SignRel::Le))
        .intersect(&cond(h, SignRel::Le))
        .intersect(&dom);
    let a4 = cond(&e, SignRel::Le).intersect(&dom);
    let derivation = vec![
        format!("require {f} >= 0 and {g} >= 0 and {h} >= 0  <=>  x in A1 = {a1}"),
        format!("square both sides: 2*sqrt(({f})*({g})) = ({h}) - ({f}) - ({g}) = {e}"),
        format!("require {e} >= 0  <=>  x in A2 = {a2}"),
        format!("square again: 4*({f})*({g}) = ({e})^2  <=>  x in S0 = {s0}"),
        "strong = S0 n A1 n A2".to_string(),
        format!(
            "formal solutions may also satisfy {f} <= 0 and {g} <= 0 and {h} <= 0 (A3 = {a3}) \
             with {e} <= 0 (A4 = {a4})"
        ),
        "formal = (S0 n A1 n A2) u (S0 n A3 n A4)".to_string(),
    ];
    let strong = inter(vec![
        SetFormula::S0,
        named(RestrictionName::A1),
        named(RestrictionName::A2),
    ]);
    let formal = SetFormula::Union(vec![
        strong.clone(),
        inter(vec![
            SetFormula::S0,
            named(RestrictionName::A3),
            named(RestrictionName::A4),
        ]),
    ]);
    RestrictionSystem {
        s0,
        named: vec![
            NamedRestriction {
                name: RestrictionName::A1,
                set: a1,
                description: format!("{f} >= 0 and {g} >= 0 and {h} >= 0"),
            },
            NamedRestriction {
                name: RestrictionName::A2,
                set: a2,
                description: format!("{e} >= 0"),
            },
            NamedRestriction {
                name: RestrictionName::A3,
                set: a3,
                description: format!("{f} <= 0 and {g} <= 0 and {h} <= 0"),
            },
            NamedRestriction {
                name: RestrictionName::A4,
                set: a4,
                description: format!("{e} <= 0"),
            },
        ],
        strong_formula: strong,
        formal_formula: formal,
        derivation,
        notes: vec![],
    }
}

/// `h*sqrt(f) = g`:
/// S0 = {h^2 f = g^2},
/// A1 = {g h >= 0 and h != 0},  A2 = {h = 0 and f >= 0},  A3 = {g h >= 0};
/// strong = S0 n (A1 u A2),  formal = S0 n A3.
pub fn solve_scaled_root_equals_function(
    h: &RationalFunction,
    f: &RationalFunction,
    g: &RationalFunction,
) -> RestrictionSystem {
    let dom = common_domain(&[h, f, g]);
    let defining = &(&(h * h) * f) - &(g * g);
    let s0 = cond(&defining, SignRel::Eq).intersect(&dom);
    let gh = g * h;
    let h_nonzero = cond(h, SignRel::Gt).union(&cond(h, SignRel::Lt));
    let a1 = cond(&gh, SignRel::Ge).intersect(&h_nonzero).intersect(&dom);
    let a2 = cond(h, SignRel::Eq)
        .intersect(&cond(f, SignRel::Ge))
        .intersect(&dom);
    let a3 = cond(&gh, SignRel::Ge).intersect(&dom);
    let derivation = vec![
        format!("square both sides: ({h})^2*({f}) = ({g})^2  <=>  x in S0 = {s0}"),
        format!("require ({g})*({h}) >= 0 with {h} != 0  <=>  x in A1 = {a1}"),
        format!("or {h} = 0 with radicand {f} >= 0  <=>  x in A2 = {a2}"),
        "strong = S0 n (A1 u A2)".to_string(),
        format!("formal solutions only need ({g})*({h}) >= 0  <=>  x in A3 = {a3}"),
        "formal = S0 n A3".to_string(),
    ];
    RestrictionSystem {
        s0,
        named: vec![
            NamedRestriction {
                name: RestrictionName::A1,
                set: a1,
                description: format!("({g})*({h}) >= 0 and {h} != 0"),
            },
            NamedRestriction {
                name: RestrictionName::A2,
                set: a2,
                description: format!("{h} = 0 and {f} >= 0"),
            },
            NamedRestriction {
                name: RestrictionName::A3,
                set: a3,
                description: format!("({g})*({h}) >= 0"),
            },
        ],
        strong_formula: inter(vec![
            SetFormula::S0,
            SetFormula::Union(vec![named(RestrictionName::A1), named(RestrictionName::A2)]),
        ]),
        formal_formula: inter(vec![SetFormula::S0, named(RestrictionName::A3)]),
        derivation,
        notes: vec![],
    }
}

/// `sqrt(f) - sqrt(g) = h`:
/// S0 = {4h^2 f = (f+h^2-g)^2},
/// A1 = {f >= 0},
/// A2 = {sqrt(f)-h >= 0}, realized as {h <= 0} u ({h >= 0} n {f-h^2 >= 0})
///      (equivalent on A1),
/// A3 = {h(f+h^2-g) >= 0},
/// B1 = {f = g < 0 and h = 0};
/// strong = S0 n A1 n A2 n A3,  formal = strong u B1.
pub fn solve_root_difference_equals_function(
    f: &RationalFunction,
    g: &RationalFunction,
    h: &RationalFunction,
) -> RestrictionSystem {
    let dom = common_domain(&[f, g, h]);
    let h2 = h * h;
    let e = &(f + &h2) - g;
    let defining =
        &(&(&RationalFunction::from_rational(crate::algebra::rat_int(4)) * &h2) * f) - &(&e * &e);
    let s0 = cond(&defining, SignRel::Eq).intersect(&dom);
    let a1 = cond(f, SignRel::Ge).intersect(&dom);
    let f_minus_h2 = f - &h2;
    let a2 = cond(h, SignRel::Le)
        .union(&cond(h, SignRel::Ge).intersect(&cond(&f_minus_h2, SignRel::Ge)))
        .intersect(&dom);
    let he = h * &e;
    let a3 = cond(&he, SignRel::Ge).intersect(&dom);
    let b1 = cond(&(f - g), SignRel::Eq)
        .intersect(&cond(f, SignRel::Lt))
        .intersect(&cond(h, SignRel::Eq))
        .intersect(&dom);
    let derivation = vec![
        format!("require radicand {f} >= 0  <=>  x in A1 = {a1}"),
        format!("isolate: sqrt({g}) = sqrt({f}) - ({h})"),
        format!(
            "require sqrt({f}) - ({h}) >= 0, i.e. {h} <= 0 or ({h} >= 0 and {f_minus_h2} >= 0)  \
             <=>  x in A2 = {a2}"
        ),
        format!("square: 2*({h})*sqrt({f}) = ({f}) + ({h})^2 - ({g}) = {e}"),
        format!("require ({h})*({e}) >= 0  <=>  x in A3 = {a3}"),
        format!("square again: 4*({h})^2*({f}) = ({e})^2  <=>  x in S0 = {s0}"),
        "strong = S0 n A1 n A2 n A3".to_string(),
        format!(
            "formal solutions may also satisfy {f} = {g} < 0 with {h} = 0  <=>  x in B1 = {b1}"
        ),
        "formal = (S0 n A1 n A2 n A3) u B1".to_string(),
    ];
    let strong = inter(vec![
        SetFormula::S0,
        named(RestrictionName::A1),
        named(RestrictionName::A2),
        named(RestrictionName::A3),
    ]);
    let formal = SetFormula::Union(vec![strong.clone(), named(RestrictionName::B1)]);
    RestrictionSystem {
        s0,
        named: vec![
            NamedRestriction {
                name: RestrictionName::A1,
                set: a1,
                description: format!("{f} >= 0 (radicand)"),
            },
            NamedRestriction {
                name: RestrictionName::A2,
                set: a2,
                description: format!("sqrt({f}) - ({h}) >= 0"),
            },
            NamedRestriction {
                name: RestrictionName::A3,
                set: a3,
                description: format!("({h})*({e}) >= 0"),
            },
            NamedRestriction {
                name: RestrictionName::B1,
                set: b1,
                description: format!("{f} = {g} < 0 and {h} = 0"),
            },
        ],
        strong_formula: strong,
        formal_formula: formal,
        derivation,
        notes: vec![],
    }
}

/// `sqrt(f) = sqrt(g)`:  S0 = {f = g};  strong = S0 n {f >= 0},  formal = S0.
pub fn solve_equal_roots(f: &RationalFunction, g: &RationalFunction) -> RestrictionSystem {
    let dom = common_domain(&[f, g]);
    let s0 = cond(&(f - g), SignRel::Eq).intersect(&dom);
    let a1 = cond(f, SignRel::Ge).intersect(&dom);
    let derivation = vec![
        format!("square both sides: {f} = {g}  <=>  x in S0 = {s0}"),
        format!("strong solutions require {f} >= 0  <=>  x in A1 = {a1}"),
        "strong = S0 n A1, formal = S0".to_string(),
    ];
    RestrictionSystem {
        s0,
        named: vec![NamedRestriction {
            name: RestrictionName::A1,
            set: a1,
            description: format!("{f} >= 0"),
        }],
        strong_formula: inter(vec![SetFormula::S0, named(RestrictionName::A1)]),
        formal_formula: SetFormula::S0,
        derivation,
        notes: vec![],
    }
}

/// `sqrt(f1) + ... + sqrt(fn) = 0`: strong solutions need every radicand to
/// vanish simultaneously. Formal solutions beyond the strong ones are not
/// computed for this form.
pub fn solve_root_sum_zero(radicands: &[RationalFunction]) -> RestrictionSystem {
    assert!(
        radicands.len() >= 2,
        "sum-zero form needs at least two radicands"
    );
    let refs: Vec<&RationalFunction> = radicands.iter().collect();
    let dom = common_domain(&refs);
    let mut s0 = dom.clone();
    for f in radicands {
        s0 = s0.intersect(&cond(f, SignRel::Eq));
    }
    let derivation = vec![
        "a sum of principal square roots vanishes only when every radicand is zero".to_string(),
        format!("S0 = intersection of {{f_i = 0}} = {s0}"),
        "strong = S0".to_string(),
    ];
    RestrictionSystem {
        s0,
        named: vec![],
        strong_formula: SetFormula::S0,
        formal_formula: SetFormula::S0,
        derivation,
        notes: vec![
            "formal solutions beyond the strong set are not computed for sums of radicals equal to zero"
                .to_string(),
        ],
    }
}

/// Position of a number relative to the two zeroes of a quadratic.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RootPosition {
    LeftOfBoth,
    Between,
    RightOfBoth,
    AtRoot,
}

/// Errors from [`locate_vs_quadratic`].
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum QuadraticError {
    #[error("polynomial must have degree exactly 2")]
    NotQuadratic,
    #[error("quadratic must have two distinct real roots (positive discriminant)")]
    NonPositiveDiscriminant,
}

/// Locates `xi` relative to the two real zeroes `x1 < x2` of `q` without
/// computing the roots: the sign of `q(xi)` decides "between"; a positive
/// sign is resolved by comparing `xi` with the vertex abscissa.
pub fn locate_vs_quadratic(q: &Polynomial, xi: &Rational) -> Result<RootPosition, QuadraticError> {
    if q.degree() != Some(2) {
        return Err(QuadraticError::NotQuadratic);
    }
    let a = q.coeff(2);
    let b = q.coeff(1);
    let c = q.coeff(0);
    let disc = &b * &b - crate::algebra::rat_int(4) * &a * &c;
    if Sign::of_rational(&disc) != Sign::Positive {
        return Err(QuadraticError::NonPositiveDiscriminant);
    }
    // normalize the leading coefficient to be positive
    let (value, vertex_side) = {
        let v = q.eval(xi);
        let value = if Sign::of_rational(&a) == Sign::Negative {
            -v
        } else {
            v
        };
        // vertex abscissa is -b/(2a); compare xi against it exactly
        let two_a = crate::algebra::rat_int(2) * &a;
        let vertex = -&b / two_a;
        (value, xi.cmp(&vertex))
    };
    Ok(match Sign::of_rational(&value) {
        Sign::Zero => RootPosition::AtRoot,
        Sign::Negative => RootPosition::Between,
        Sign::Positive => match vertex_side {
            Ordering::Less => RootPosition::LeftOfBoth,
            Ordering::Greater => RootPosition::RightOfBoth,
            Ordering::Equal => {
                unreachable!("positive value at the vertex of a positive-discriminant quadratic")
            }
        },
    })
}

/// Builds the restriction system for any canonical form.
pub fn build_system(eq: &RadicalEquation) -> RestrictionSystem {
    match eq {
        RadicalEquation::EqualRoots { f, g } => solve_equal_roots(f, g),
        RadicalEquation::RootEqualsFunction { f, g } => solve_root_equals_function(f, g),
        RadicalEquation::RootSumEqualsFunction { f, g, h } => {
            solve_root_sum_equals_function(f, g, h)
        }
        RadicalEquation::RootSumEqualsRoot { f, g, h } => solve_root_sum_equals_root(f, g, h),
        RadicalEquation::RootDifferenceEqualsFunction { f, g, h } => {
            solve_root_difference_equals_function(f, g, h)
        }
        RadicalEquation::ScaledRootEqualsFunction { h, f, g } => {
            solve_scaled_root_equals_function(h, f, g)
        }
        RadicalEquation::RootSumZero { radicands } => solve_root_sum_zero(radicands),
    }
}

/// Solves an equation and keeps the restriction system for step-by-step
/// rendering.
pub fn analyze(eq: &RadicalEquation) -> Analysis {
    let system = build_system(eq);
    let strong = system.strong_set();
    let formal = system.formal_set();

    // candidates: isolated points of S0 plus any isolated formal points
    // (e.g. B1 points inside an S0 interval component)
    let mut candidates_pts: Vec<AlgebraicReal> = system.s0.isolated_points();
    for extra in formal.isolated_points() {
        if !candidates_pts
            .iter()
            .any(|c| compare(c, &extra) == Ordering::Equal)
        {
            candidates_pts.push(extra);
        }
    }
    candidates_pts.sort_by(compare);

    let candidates = candidates_pts
        .into_iter()
        .map(|value| {
            let verdict = if strong.contains(&value) {
                Verdict::Strong
            } else if formal.contains(&value) {
                Verdict::FormalOnly
            } else {
                Verdict::Rejected
            };
            let failed: Vec<RestrictionName> = system
                .named
                .iter()
                .filter(|r| !r.set.contains(&value))
                .map(|r| r.name)
                .collect();
            let approx = approx_string(&value);
            Candidate {
                value,
                approx,
                verdict,
                failed,
            }
        })
        .collect();

    let report = SolutionReport {
        equation: eq.clone(),
        strong,
        formal,
        candidates,
        notes: system.notes.clone(),
    };
    Analysis { system, report }
}

/// Solves an equation, classifying every candidate.
pub fn solve(eq: &RadicalEquation) -> SolutionReport {
    analyze(eq).report
}

/// Exact check that `alpha` satisfies the rationalized equation `S0` of the
/// system (used by tests for squaring soundness).
pub fn satisfies_s0(eq: &RadicalEquation, alpha: &AlgebraicReal) -> bool {
    let defining = s0_defining(eq);
    sign_at(&defining, alpha)
        .map(Sign::is_zero)
        .unwrap_or(false)
}

/// The rational function whose zero set (within the domain) is S0.
pub fn s0_defining(eq: &RadicalEquation) -> RationalFunction {
    let four = RationalFunction::from_rational(crate::algebra::rat_int(4));
    match eq {
        RadicalEquation::EqualRoots { f, g } => f - g,
        RadicalEquation::RootEqualsFunction { f, g } => f - &(g * g),
        RadicalEquation::RootSumEqualsFunction { f, g, h } => {
            let e = &(h * h) - &(f + g);
            &(&four * &(f * g)) - &(&e * &e)
        }
        RadicalEquation::RootSumEqualsRoot { f, g, h } => {
            let e = h - &(f + g);
            &(&four * &(f * g)) - &(&e * &e)
        }
        RadicalEquation::RootDifferenceEqualsFunction { f, g, h } => {
            let h2 = h * h;
            let e = &(f + &h2) - g;
            &(&(&four * &h2) * f) - &(&e * &e)
        }
        RadicalEquation::ScaledRootEqualsFunction { h, f, g } => &(&(h * h) * f) - &(g * g),
        RadicalEquation::RootSumZero { radicands } => {
            // any member vanishes exactly on the common zero set only in
            // conjunction; use the sum of squares of numerators
            let mut acc = RationalFunction::zero();
            for f in radicands {
                acc = &acc + &(f * f);
            }
            acc
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{rat, rat_int};

    fn rf(coeffs: &[i64]) -> RationalFunction {
        RationalFunction::from_polynomial(Polynomial::from_ints(coeffs))
    }

    fn rf_q(coeffs: &[(i64, i64)]) -> RationalFunction {
        RationalFunction::from_polynomial(Polynomial::new(
            coeffs.iter().map(|&(n, d)| rat(n, d)).collect(),
        ))
    }

    fn half_line_from(lo: i64, closed: bool) -> RealSet {
        RealSet::from_components(vec![crate::realset::Component::interval(
            Some(AlgebraicReal::from_int(lo)),
            closed,
            None,
            false,
        )])
    }

    fn points(vals: &[(i64, i64)]) -> RealSet {
        let comps = vals
            .iter()
            .map(|&(n, d)| {
                crate::realset::Component::point(AlgebraicReal::from_rational(rat(n, d)))
            })
            .collect();
        RealSet::from_components(comps)
    }

    #[test]
    fn root_equals_function_textbook() {
        // sqrt(4x+1) = x-5: candidates 2 and 12 (roots of x^2-14x+24),
        // A1 = [5, inf), strong = {12}
        let sys = solve_root_equals_function(&rf(&[1, 4]), &rf(&[-5, 1]));
        assert_eq!(sys.s0, points(&[(2, 1), (12, 1)]));
        assert_eq!(
            sys.restriction(RestrictionName::A1).unwrap(),
            &half_line_from(5, true)
        );
        assert_eq!(sys.strong_set(), points(&[(12, 1)]));
        assert_eq!(sys.formal_set(), points(&[(12, 1)]));
    }

    #[test]
    fn root_equals_function_identity_and_contradiction() {
        // sqrt(x^2) = x: S0 = R, strong = [0, inf)
        let sys = solve_root_equals_function(&rf(&[0, 0, 1]), &rf(&[0, 1]));
        assert!(sys.s0.is_full());
        assert_eq!(sys.strong_set(), half_line_from(0, true));
        // sqrt(-1) = 1 is a contradiction: -1 = 1 has no solutions
        let sys2 = solve_root_equals_function(&rf(&[-1]), &rf(&[1]));
        assert!(sys2.s0.is_empty());
        assert!(sys2.strong_set().is_empty() && sys2.formal_set().is_empty());
    }

    #[test]
    fn root_sum_equals_function_unique_strong() {
        // sqrt(x^2-1) + sqrt(x^2+1) = 3/2 x: the positive candidate
        // (64/63)^(1/4) is strong (derived: x^4 = 4/((2-b)(2+b)b^2), b=3/2)
        let sys = solve_root_sum_equals_function(
            &rf(&[-1, 0, 1]),
            &rf(&[1, 0, 1]),
            &rf_q(&[(0, 1), (3, 2)]),
        );
        let strong = sys.strong_set();
        let pts = strong.isolated_points();
        assert_eq!(pts.len(), 1);
        assert!(!strong.has_interval_component());
        let expected = (64f64 / 63f64).sqrt().sqrt();
        assert!((pts[0].approx_f64() - expected).abs() < 1e-10);
        // strong == formal for this form
        assert_eq!(strong, sys.formal_set());
        // exact: candidate satisfies 63/64 * x^4 = 1
        let quartic = RationalFunction::from_polynomial(Polynomial::new(vec![
            rat_int(-1),
            rat_int(0),
            rat_int(0),
            rat_int(0),
            rat(63, 64),
        ]));
        assert_eq!(sign_at(&quartic, &pts[0]).unwrap(), Sign::Zero);
    }

    #[test]
    fn root_sum_equals_function_identity() {
        // sqrt(x^2) + sqrt(x^2) = 2x holds iff x >= 0
        let sys = solve_root_sum_equals_function(&rf(&[0, 0, 1]), &rf(&[0, 0, 1]), &rf(&[0, 2]));
        assert!(sys.s0.is_full());
        assert_eq!(sys.strong_set(), half_line_from(0, true));
        assert_eq!(sys.formal_set(), half_line_from(0, true));
    }

    #[test]
    fn root_sum_equals_function_with_zero_h() {
        // constructed directly (never produced by normalize): sqrt(x-1) +
        // sqrt(1-x) = 0 has the single strong solution x = 1
        let sys = solve_root_sum_equals_function(&rf(&[-1, 1]), &rf(&[1, -1]), &rf(&[0]));
        assert_eq!(sys.strong_set(), points(&[(1, 1)]));
        assert_eq!(sys.formal_set(), points(&[(1, 1)]));
        // the radicand restriction rejects points with f = g < 0
        let sys2 =
            solve_root_sum_equals_function(&rf(&[-1, 0, -1]), &rf(&[-1, 0, -1]), &rf(&[0, 1]));
        // S0 of sqrt(-1-x^2) + sqrt(-1-x^2) = x contains x = 0, but the left
        // side is 2i there; nothing is a solution
        assert!(sys2.s0.contains(&AlgebraicReal::from_int(0)));
        assert!(sys2.strong_set().is_empty());
        assert!(sys2.formal_set().is_empty());
    }

    #[test]
    fn root_sum_equals_function_all_rejected() {
        // sqrt(x^2-1) + sqrt(x^2+1) = 2x: both candidates rejected (b = 2)
        let sys = solve_root_sum_equals_function(&rf(&[-1, 0, 1]), &rf(&[1, 0, 1]), &rf(&[0, 2]));
        assert!(sys.strong_set().is_empty());
        assert!(sys.formal_set().is_empty());
    }

    #[test]
    fn root_sum_equals_root_cases() {
        // sqrt(x+1) + sqrt(x-1) = sqrt(x+2): strong = {(-2+2*sqrt7)/3}
        let sys = solve_root_sum_equals_root(&rf(&[1, 1]), &rf(&[-1, 1]), &rf(&[2, 1]));
        let strong = sys.strong_set();
        let pts = strong.isolated_points();
        assert_eq!(pts.len(), 1);
        let expected = (-2.0 + 2.0 * 7f64.sqrt()) / 3.0;
        assert!((pts[0].approx_f64() - expected).abs() < 1e-10);
        assert_eq!(strong, sys.formal_set());

        // sqrt(x+1) + sqrt(x-1) = sqrt(x-2): formal-only solution (2-2*sqrt7)/3
        let sys2 = solve_root_sum_equals_root(&rf(&[1, 1]), &rf(&[-1, 1]), &rf(&[-2, 1]));
        assert!(sys2.strong_set().is_empty());
        let formal = sys2.formal_set();
        let pts2 = formal.isolated_points();
        assert_eq!(pts2.len(), 1);
        let expected2 = (2.0 - 2.0 * 7f64.sqrt()) / 3.0;
        assert!((pts2[0].approx_f64() - expected2).abs() < 1e-10);

        // sqrt(x) + sqrt(x) = sqrt(4x): strong = [0, inf), formal = R
        let sys3 = solve_root_sum_equals_root(&rf(&[0, 1]), &rf(&[0, 1]), &rf(&[0, 4]));
        assert_eq!(sys3.strong_set(), half_line_from(0, true));
        assert!(sys3.formal_set().is_full());
    }

    #[test]
    fn scaled_root_cases() {
        // x*sqrt(x) = x^2: strong = formal = {0, 1}
        let sys = solve_scaled_root_equals_function(&rf(&[0, 1]), &rf(&[0, 1]), &rf(&[0, 0, 1]));
        assert_eq!(sys.strong_set(), points(&[(0, 1), (1, 1)]));
        assert_eq!(sys.formal_set(), points(&[(0, 1), (1, 1)]));

        // 0*sqrt(-1) = 0: strong empty (radicand negative), formal = R
        let sys2 = solve_scaled_root_equals_function(&rf(&[0]), &rf(&[-1]), &rf(&[0]));
        assert!(sys2.strong_set().is_empty());
        assert!(sys2.formal_set().is_full());

        // 1*sqrt(x) = x-2: S0 = {1, 4}, strong = formal = {4}
        let sys3 = solve_scaled_root_equals_function(&rf(&[1]), &rf(&[0, 1]), &rf(&[-2, 1]));
        assert_eq!(sys3.s0, points(&[(1, 1), (4, 1)]));
        assert_eq!(sys3.strong_set(), points(&[(4, 1)]));
        assert_eq!(sys3.formal_set(), points(&[(4, 1)]));
    }

    #[test]
    fn root_difference_cases() {
        // sqrt(-x) - sqrt(x-2) = x-1: no strong solutions, formal = {1}
        let sys =
            solve_root_difference_equals_function(&rf(&[0, -1]), &rf(&[-2, 1]), &rf(&[-1, 1]));
        assert!(sys.strong_set().is_empty());
        assert_eq!(sys.formal_set(), points(&[(1, 1)]));

        // sqrt(x^2) - sqrt(x^2) = 0: identically true
        let sys2 =
            solve_root_difference_equals_function(&rf(&[0, 0, 1]), &rf(&[0, 0, 1]), &rf(&[0]));
        assert!(sys2.strong_set().is_full());
        assert!(sys2.formal_set().is_full());

        // sqrt(x+3) - sqrt(x) = 1: strong = {1} (4(x+3) = 16)
        let sys3 = solve_root_difference_equals_function(&rf(&[3, 1]), &rf(&[0, 1]), &rf(&[1]));
        assert_eq!(sys3.strong_set(), points(&[(1, 1)]));
        assert_eq!(sys3.formal_set(), points(&[(1, 1)]));
    }

    #[test]
    fn equal_roots_cases() {
        // sqrt(1-3x) = sqrt(x-7): formal = {2}, strong empty
        let sys = solve_equal_roots(&rf(&[1, -3]), &rf(&[-7, 1]));
        assert!(sys.strong_set().is_empty());
        assert_eq!(sys.formal_set(), points(&[(2, 1)]));

        // sqrt(x) = sqrt(x): strong = [0, inf), formal = R
        let sys2 = solve_equal_roots(&rf(&[0, 1]), &rf(&[0, 1]));
        assert_eq!(sys2.strong_set(), half_line_from(0, true));
        assert!(sys2.formal_set().is_full());

        // sqrt(x) = sqrt(x+1): contradiction
        let sys3 = solve_equal_roots(&rf(&[0, 1]), &rf(&[1, 1]));
        assert!(sys3.strong_set().is_empty() && sys3.formal_set().is_empty());
    }

    #[test]
    fn sum_zero_cases() {
        // sqrt(x-1) + sqrt(1-x) = 0: strong = {1}
        let sys = solve_root_sum_zero(&[rf(&[-1, 1]), rf(&[1, -1])]);
        assert_eq!(sys.strong_set(), points(&[(1, 1)]));
        // sqrt(x)+sqrt(x)+sqrt(4x) = 0: strong = {0}
        let sys2 = solve_root_sum_zero(&[rf(&[0, 1]), rf(&[0, 1]), rf(&[0, 4])]);
        assert_eq!(sys2.strong_set(), points(&[(0, 1)]));
        // sqrt(x)+sqrt(x+1) = 0: no common zero
        let sys3 = solve_root_sum_zero(&[rf(&[0, 1]), rf(&[1, 1])]);
        assert!(sys3.strong_set().is_empty());
        assert!(!sys3.notes.is_empty());
    }

    #[test]
    fn locate_vs_quadratic_examples() {
        let q = Polynomial::from_ints(&[-8, 4, 3]); // 3x^2 + 4x - 8
        assert_eq!(
            locate_vs_quadratic(&q, &rat_int(1)).unwrap(),
            RootPosition::Between
        );
        assert_eq!(
            locate_vs_quadratic(&q, &rat_int(2)).unwrap(),
            RootPosition::RightOfBoth
        );
        assert_eq!(
            locate_vs_quadratic(&q, &rat_int(-3)).unwrap(),
            RootPosition::LeftOfBoth
        );
        let unit = Polynomial::from_ints(&[-1, 0, 1]);
        assert_eq!(
            locate_vs_quadratic(&unit, &rat_int(1)).unwrap(),
            RootPosition::AtRoot
        );
        // degenerate cases
        assert_eq!(
            locate_vs_quadratic(&Polynomial::from_ints(&[1, 0, 1]), &rat_int(0)),
            Err(QuadraticError::NonPositiveDiscriminant)
        );
        assert_eq!(
            locate_vs_quadratic(&Polynomial::from_ints(&[1, 1]), &rat_int(0)),
            Err(QuadraticError::NotQuadratic)
        );
    }

    #[test]
    fn solve_reports_verdicts_and_failures() {
        // Two candidates: one strong, one rejected with its failed
        // restrictions listed
        let eq = RadicalEquation::RootSumEqualsRoot {
            f: rf(&[1, 1]),
            g: rf(&[-1, 1]),
            h: rf(&[2, 1]),
        };
        let report = solve(&eq);
        assert_eq!(report.candidates.len(), 2);
        let rejected = &report.candidates[0];
        let strong = &report.candidates[1];
        assert_eq!(rejected.verdict, Verdict::Rejected);
        assert!(rejected.failed.contains(&RestrictionName::A1));
        assert!(rejected.failed.contains(&RestrictionName::A4));
        assert_eq!(strong.verdict, Verdict::Strong);
        assert!(strong
            .failed
            .iter()
            .all(|n| *n == RestrictionName::A3 || *n == RestrictionName::A4));

        // identity case: interval solution, no isolated candidates
        let eq2 = RadicalEquation::RootSumEqualsFunction {
            f: rf(&[0, 0, 1]),
            g: rf(&[0, 0, 1]),
            h: rf(&[0, 2]),
        };
        let report2 = solve(&eq2);
        assert!(report2.candidates.is_empty());
        assert!(report2.strong.has_interval_component());

        // difference form: x = 1 is formal-only via B1
        let eq3 = RadicalEquation::RootDifferenceEqualsFunction {
            f: rf(&[0, -1]),
            g: rf(&[-2, 1]),
            h: rf(&[-1, 1]),
        };
        let report3 = solve(&eq3);
        let one = AlgebraicReal::from_int(1);
        let c = report3
            .candidates
            .iter()
            .find(|c| compare(&c.value, &one) == Ordering::Equal)
            .expect("x = 1 is a candidate");
        assert_eq!(c.verdict, Verdict::FormalOnly);
    }

    #[test]
    fn strong_subset_of_formal_and_s0_identity() {
        let eqs = vec![
            RadicalEquation::RootEqualsFunction {
                f: rf(&[1, 4]),
                g: rf(&[-5, 1]),
            },
            RadicalEquation::RootSumEqualsRoot {
                f: rf(&[1, 1]),
                g: rf(&[-1, 1]),
                h: rf(&[2, 1]),
            },
            RadicalEquation::RootDifferenceEqualsFunction {
                f: rf(&[3, 1]),
                g: rf(&[0, 1]),
                h: rf(&[1]),
            },
        ];
        for eq in eqs {
            let report = solve(&eq);
            assert!(
                report.strong.is_subset_of(&report.formal),
                "strong not within formal: {eq}"
            );
            for c in &report.candidates {
                if c.verdict == Verdict::Strong {
                    assert!(satisfies_s0(&eq, &c.value), "strong candidate off S0: {eq}");
                    for radicand in eq.radicands() {
                        assert!(sign_at(radicand, &c.value).unwrap().is_nonnegative());
                    }
                }
            }
        }
    }

    #[test]
    fn domain_poles_are_excluded() {
        // sqrt(1/x) = 1/x: S0 is 1/x = 1/x^2 i.e. x = 1 within the domain;
        // x = 0 must never appear
        let inv_x =
            RationalFunction::new(Polynomial::one(), Polynomial::from_ints(&[0, 1])).unwrap();
        let sys = solve_root_equals_function(&inv_x, &inv_x);
        // f = g^2 means 1/x = 1/x^2, i.e. x = 1
        assert_eq!(sys.s0, points(&[(1, 1)]));
        assert_eq!(sys.strong_set(), points(&[(1, 1)]));
        // identity over a punctured domain keeps the puncture
        let sys2 = solve_equal_roots(&inv_x, &inv_x);
        assert!(!sys2.formal_set().is_full());
        assert!(!sys2.formal_set().contains(&AlgebraicReal::from_int(0)));
        assert!(sys2.formal_set().contains(&AlgebraicReal::from_int(5)));
    }
}
