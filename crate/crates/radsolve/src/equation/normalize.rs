//! Normalization of parsed equations into the canonical radical forms.
//!
//! Both sides are flattened into a sum of terms; every term is either a
//! rational-function term or `c * sqrt(radicand)` with a rational-function
//! coefficient. Moving everything to one side and merging the rational terms
//! leaves a signature — the number of radical terms, their signs, and the
//! merged rational part — that picks exactly one canonical form:
//!
//! * one radical: `sqrt(f) = g`, or `h*sqrt(f) = g` for a non-unit
//!   coefficient;
//! * two radicals, same sign, rational part present: `sqrt(f)+sqrt(g) = h`;
//! * two radicals, mixed sign, rational part present: `sqrt(f)-sqrt(g) = h`;
//! * two radicals, no rational part: `sqrt(f) = sqrt(g)` (mixed sign) or
//!   `sqrt(f)+sqrt(g) = 0` (same sign);
//! * three radicals, no rational part: `sqrt(f)+sqrt(g) = sqrt(h)` when the
//!   signs are mixed, otherwise the all-positive sum-equals-zero form.

use crate::algebra::{RationalFunction, Sign};

use super::{Bindings, Expr, RadicalEquation};

/// Rejection reasons for equations outside the supported forms.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum NormalizeError {
    #[error("unsupported form: nested radicals are not supported")]
    NestedRadical,
    #[error("unsupported form: radicals in a denominator are not supported")]
    RadicalInDenominator,
    #[error("unsupported form: a radical raised to a power is not supported")]
    RadicalPower,
    #[error("unsupported form: a product of two radicals is not supported")]
    RadicalProduct,
    #[error("unsupported form: radicals may only appear as standalone sqrt(...) factors")]
    CompoundRadicalFactor,
    #[error(
        "unsupported form: a radical with coefficient {0} cannot be combined with other radicals; \
         fold the constant into the radicand (c*sqrt(f) = sqrt(c^2*f) for c >= 0)"
    )]
    ScaledRadicalInSum(String),
    #[error("unsupported form: the equation contains no radicals")]
    NoRadicals,
    #[error(
        "unsupported form: {0} radical terms with a rational part do not match a supported form"
    )]
    TooManyRadicals(usize),
    #[error("unsupported form: radical terms with mixed signs do not sum to zero or match a supported form")]
    MixedSignSum,
    #[error("division by an expression that is identically zero")]
    DivisionByZero,
    #[error("unbound parameter `{0}`; supply a binding")]
    UnboundParameter(String),
}

/// Replaces every parameter with its bound rational value.
pub fn bind_parameters(expr: &Expr, bindings: &Bindings) -> Result<Expr, NormalizeError> {
    Ok(match expr {
        Expr::Number(_) | Expr::Var => expr.clone(),
        Expr::Param(name) => match bindings.get(name) {
            Some(v) => Expr::Number(v.clone()),
            None => return Err(NormalizeError::UnboundParameter(name.clone())),
        },
        Expr::Add(a, b) => Expr::Add(
            Box::new(bind_parameters(a, bindings)?),
            Box::new(bind_parameters(b, bindings)?),
        ),
        Expr::Sub(a, b) => Expr::Sub(
            Box::new(bind_parameters(a, bindings)?),
            Box::new(bind_parameters(b, bindings)?),
        ),
        Expr::Neg(a) => Expr::Neg(Box::new(bind_parameters(a, bindings)?)),
        Expr::Mul(a, b) => Expr::Mul(
            Box::new(bind_parameters(a, bindings)?),
            Box::new(bind_parameters(b, bindings)?),
        ),
        Expr::Div(a, b) => Expr::Div(
            Box::new(bind_parameters(a, bindings)?),
            Box::new(bind_parameters(b, bindings)?),
        ),
        Expr::Pow(a, n) => Expr::Pow(Box::new(bind_parameters(a, bindings)?), *n),
        Expr::Sqrt(a) => Expr::Sqrt(Box::new(bind_parameters(a, bindings)?)),
    })
}

/// One flattened summand.
enum Term {
    Rational(RationalFunction),
    Radical {
        coeff: RationalFunction,
        radicand: RationalFunction,
    },
}

/// Converts a sqrt-free expression to a rational function.
fn to_rational_function(e: &Expr) -> Result<RationalFunction, NormalizeError> {
    Ok(match e {
        Expr::Number(n) => RationalFunction::from_rational(n.clone()),
        Expr::Var => RationalFunction::from_polynomial(crate::algebra::Polynomial::x()),
        Expr::Param(name) => return Err(NormalizeError::UnboundParameter(name.clone())),
        Expr::Sqrt(_) => unreachable!("caller guarantees sqrt-free"),
        Expr::Add(a, b) => &to_rational_function(a)? + &to_rational_function(b)?,
        Expr::Sub(a, b) => &to_rational_function(a)? - &to_rational_function(b)?,
        Expr::Neg(a) => -&to_rational_function(a)?,
        Expr::Mul(a, b) => &to_rational_function(a)? * &to_rational_function(b)?,
        Expr::Div(a, b) => {
            let den = to_rational_function(b)?;
            if den.is_zero() {
                return Err(NormalizeError::DivisionByZero);
            }
            to_rational_function(a)?.div(&den).expect("nonzero divisor")
        }
        Expr::Pow(a, n) => to_rational_function(a)?.pow(*n),
    })
}

/// Splits an expression into summands with signs; products are not
/// distributed over sums.
fn flatten_sum(e: &Expr, negate: bool, out: &mut Vec<(bool, Expr)>) {
    match e {
        Expr::Add(a, b) => {
            flatten_sum(a, negate, out);
            flatten_sum(b, negate, out);
        }
        Expr::Sub(a, b) => {
            flatten_sum(a, negate, out);
            flatten_sum(b, !negate, out);
        }
        Expr::Neg(a) => flatten_sum(a, !negate, out),
        other => out.push((negate, other.clone())),
    }
}

/// Classifies one summand as a rational term or `coeff * sqrt(radicand)`.
fn classify_summand(negate: bool, e: &Expr) -> Result<Term, NormalizeError> {
    if !e.contains_sqrt() {
        let rf = to_rational_function(e)?;
        return Ok(Term::Rational(if negate { -&rf } else { rf }));
    }
    // multiplicative structure: numerator factors and denominator factors
    let mut numer: Vec<Expr> = Vec::new();
    let mut denom: Vec<Expr> = Vec::new();
    let mut sign_flips = negate;
    collect_factors(e, false, &mut numer, &mut denom, &mut sign_flips)?;
    if denom.iter().any(Expr::contains_sqrt) {
        return Err(NormalizeError::RadicalInDenominator);
    }
    let mut radicand: Option<RationalFunction> = None;
    let mut coeff = RationalFunction::one();
    for factor in &numer {
        match factor {
            Expr::Sqrt(inner) => {
                if radicand.is_some() {
                    return Err(NormalizeError::RadicalProduct);
                }
                if inner.contains_sqrt() {
                    return Err(NormalizeError::NestedRadical);
                }
                radicand = Some(to_rational_function(inner)?);
            }
            Expr::Pow(base, n) if base.contains_sqrt() => {
                debug_assert!(*n >= 2, "^0 and ^1 are unwrapped during factor collection");
                return Err(NormalizeError::RadicalPower);
            }
            f if f.contains_sqrt() => {
                // a radical buried inside a sum we cannot factor
                return Err(NormalizeError::CompoundRadicalFactor);
            }
            f => coeff = &coeff * &to_rational_function(f)?,
        }
    }
    for factor in &denom {
        let den = to_rational_function(factor)?;
        if den.is_zero() {
            return Err(NormalizeError::DivisionByZero);
        }
        coeff = coeff.div(&den).expect("nonzero divisor");
    }
    if sign_flips {
        coeff = -&coeff;
    }
    let radicand = radicand.expect("summand contains a radical");
    Ok(Term::Radical { coeff, radicand })
}

/// Unfolds nested products and quotients into factor lists.
fn collect_factors(
    e: &Expr,
    invert: bool,
    numer: &mut Vec<Expr>,
    denom: &mut Vec<Expr>,
    sign: &mut bool,
) -> Result<(), NormalizeError> {
    match e {
        Expr::Mul(a, b) => {
            collect_factors(a, invert, numer, denom, sign)?;
            collect_factors(b, invert, numer, denom, sign)?;
        }
        Expr::Div(a, b) => {
            collect_factors(a, invert, numer, denom, sign)?;
            collect_factors(b, !invert, numer, denom, sign)?;
        }
        Expr::Neg(a) => {
            *sign = !*sign;
            collect_factors(a, invert, numer, denom, sign)?;
        }
        Expr::Pow(a, 1) => collect_factors(a, invert, numer, denom, sign)?,
        Expr::Pow(_, 0) => {} // factor of 1
        other => {
            if invert {
                denom.push(other.clone());
            } else {
                numer.push(other.clone());
            }
        }
    }
    Ok(())
}

/// Rewrites a parsed equation into its canonical [`RadicalEquation`] form.
pub fn normalize(lhs: &Expr, rhs: &Expr) -> Result<RadicalEquation, NormalizeError> {
    if let Some(p) = lhs.parameters().into_iter().chain(rhs.parameters()).next() {
        return Err(NormalizeError::UnboundParameter(p));
    }
    let mut summands: Vec<(bool, Expr)> = Vec::new();
    flatten_sum(lhs, false, &mut summands);
    flatten_sum(rhs, true, &mut summands);

    let mut radicals: Vec<(Sign, RationalFunction)> = Vec::new(); // sign of coefficient, radicand
    let mut scaled: Vec<(RationalFunction, RationalFunction)> = Vec::new(); // non-unit coeff, radicand
    let mut rational_part = RationalFunction::zero();
    for (negate, e) in &summands {
        match classify_summand(*negate, e)? {
            Term::Rational(rf) => rational_part = &rational_part + &rf,
            Term::Radical { coeff, radicand } => {
                if coeff.is_one() {
                    radicals.push((Sign::Positive, radicand));
                } else if coeff.is_minus_one() {
                    radicals.push((Sign::Negative, radicand));
                } else {
                    scaled.push((coeff, radicand));
                }
            }
        }
    }

    // single radical with arbitrary coefficient: h*sqrt(f) = g
    if radicals.len() + scaled.len() == 1 && !scaled.is_empty() {
        let (h, f) = scaled.pop().expect("single scaled radical");
        let g = -&rational_part;
        return Ok(RadicalEquation::ScaledRootEqualsFunction { h, f, g });
    }
    if !scaled.is_empty() {
        let (c, _) = &scaled[0];
        return Err(NormalizeError::ScaledRadicalInSum(c.to_string()));
    }

    let r_zero = rational_part.is_zero();
    let pos: Vec<&RationalFunction> = radicals
        .iter()
        .filter(|(s, _)| *s == Sign::Positive)
        .map(|(_, f)| f)
        .collect();
    let neg: Vec<&RationalFunction> = radicals
        .iter()
        .filter(|(s, _)| *s == Sign::Negative)
        .map(|(_, f)| f)
        .collect();

    match radicals.len() {
        0 => Err(NormalizeError::NoRadicals),
        1 => {
            // s*sqrt(f) + r = 0  ->  sqrt(f) = -r/s
            let g = if pos.len() == 1 {
                -&rational_part
            } else {
                rational_part.clone()
            };
            let f = radicals[0].1.clone();
            Ok(RadicalEquation::RootEqualsFunction { f, g })
        }
        2 => {
            match (pos.len(), neg.len()) {
                (2, 0) | (0, 2) => {
                    if r_zero {
                        // sqrt(f) + sqrt(g) = 0
                        Ok(RadicalEquation::RootSumZero {
                            radicands: radicals.into_iter().map(|(_, f)| f).collect(),
                        })
                    } else {
                        // sqrt(f) + sqrt(g) = -+r
                        let h = if pos.len() == 2 {
                            -&rational_part
                        } else {
                            rational_part.clone()
                        };
                        let f = radicals[0].1.clone();
                        let g = radicals[1].1.clone();
                        Ok(RadicalEquation::RootSumEqualsFunction { f, g, h })
                    }
                }
                (1, 1) => {
                    if r_zero {
                        // sqrt(f) = sqrt(g)
                        Ok(RadicalEquation::EqualRoots {
                            f: pos[0].clone(),
                            g: neg[0].clone(),
                        })
                    } else {
                        // sqrt(f) - sqrt(g) = -r
                        Ok(RadicalEquation::RootDifferenceEqualsFunction {
                            f: pos[0].clone(),
                            g: neg[0].clone(),
                            h: -&rational_part,
                        })
                    }
                }
                _ => unreachable!("two radicals split into pos/neg"),
            }
        }
        n => {
            if !r_zero {
                return Err(NormalizeError::TooManyRadicals(n));
            }
            match (pos.len(), neg.len()) {
                // all on one side: sum of radicals equals zero
                (_, 0) | (0, _) => Ok(RadicalEquation::RootSumZero {
                    radicands: radicals.into_iter().map(|(_, f)| f).collect(),
                }),
                // sqrt(a) + sqrt(b) = sqrt(c) after sign moves
                (2, 1) if n == 3 => Ok(RadicalEquation::RootSumEqualsRoot {
                    f: pos[0].clone(),
                    g: pos[1].clone(),
                    h: neg[0].clone(),
                }),
                (1, 2) if n == 3 => Ok(RadicalEquation::RootSumEqualsRoot {
                    f: neg[0].clone(),
                    g: neg[1].clone(),
                    h: pos[0].clone(),
                }),
                _ => Err(NormalizeError::MixedSignSum),
            }
        }
    }
}
