//! Equation surface syntax and normalization.
//!
//! The grammar (whitespace-insensitive):
//!
//! ```text
//! equation := expr "=" expr ;
//! expr     := term (("+"|"-") term)* ;
//! term     := factor (("*"|"/") factor)* ;
//! factor   := ["-"] atom ["^" integer] ;
//! atom     := number | "x" | ident | "sqrt" "(" expr ")" | "(" expr ")" ;
//! number   := integer ["/" positive-integer] | decimal ;
//! ```
//!
//! Identifiers other than `x` are parameters and must be bound to rationals
//! before normalization. [`normalize`] rewrites a parsed equation into one of
//! the supported canonical forms (see [`RadicalEquation`]): sides are
//! swapped, signs moved, and rational terms merged so that the radical-
//! bearing side matches the canonical shape.

mod normalize;
mod parse;

pub use normalize::{bind_parameters, normalize, NormalizeError};
pub use parse::{parse, parse_expr, ParseError};

use std::collections::BTreeMap;
use std::fmt;

use crate::algebra::{Rational, RationalFunction};

/// Expression tree for one side of an equation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Number(Rational),
    /// The unknown `x`.
    Var,
    /// A named parameter; must be bound before normalization.
    Param(String),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Neg(Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    /// Nonnegative integer power.
    Pow(Box<Expr>, u32),
    Sqrt(Box<Expr>),
}

impl Expr {
    pub fn contains_sqrt(&self) -> bool {
        match self {
            Expr::Number(_) | Expr::Var | Expr::Param(_) => false,
            Expr::Sqrt(_) => true,
            Expr::Neg(a) => a.contains_sqrt(),
            Expr::Pow(a, _) => a.contains_sqrt(),
            Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) | Expr::Div(a, b) => {
                a.contains_sqrt() || b.contains_sqrt()
            }
        }
    }

    pub fn parameters(&self) -> Vec<String> {
        let mut out = Vec::new();
        self.collect_parameters(&mut out);
        out.sort();
        out.dedup();
        out
    }

    fn collect_parameters(&self, out: &mut Vec<String>) {
        match self {
            Expr::Param(name) => out.push(name.clone()),
            Expr::Number(_) | Expr::Var => {}
            Expr::Neg(a) | Expr::Pow(a, _) | Expr::Sqrt(a) => a.collect_parameters(out),
            Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) | Expr::Div(a, b) => {
                a.collect_parameters(out);
                b.collect_parameters(out);
            }
        }
    }
}

// Precedence levels for printing with minimal parentheses.
fn prec(e: &Expr) -> u8 {
    match e {
        Expr::Add(..) | Expr::Sub(..) => 1,
        Expr::Mul(..) | Expr::Div(..) => 2,
        Expr::Neg(..) => 3,
        Expr::Pow(..) => 4,
        Expr::Number(_) | Expr::Var | Expr::Param(_) | Expr::Sqrt(_) => 5,
    }
}

fn fmt_child(f: &mut fmt::Formatter<'_>, child: &Expr, min_prec: u8) -> fmt::Result {
    let needs_paren = prec(child) < min_prec
        || matches!(child, Expr::Number(n) if n.numer().sign() == num_bigint::Sign::Minus);
    if needs_paren {
        write!(f, "({child})")
    } else {
        write!(f, "{child}")
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Number(n) => write!(f, "{n}"),
            Expr::Var => write!(f, "x"),
            Expr::Param(name) => write!(f, "{name}"),
            Expr::Add(a, b) => {
                fmt_child(f, a, 1)?;
                write!(f, " + ")?;
                fmt_child(f, b, 2)
            }
            Expr::Sub(a, b) => {
                fmt_child(f, a, 1)?;
                write!(f, " - ")?;
                fmt_child(f, b, 2)
            }
            Expr::Neg(a) => {
                write!(f, "-")?;
                fmt_child(f, a, 3)
            }
            Expr::Mul(a, b) => {
                fmt_child(f, a, 2)?;
                write!(f, "*")?;
                fmt_child(f, b, 3)
            }
            Expr::Div(a, b) => {
                fmt_child(f, a, 2)?;
                write!(f, "/")?;
                // a bare numeral here could fuse with a preceding integer
                // into a rational literal when re-lexed
                if matches!(**b, Expr::Number(_)) {
                    write!(f, "({b})")
                } else {
                    fmt_child(f, b, 3)
                }
            }
            Expr::Pow(a, n) => {
                fmt_child(f, a, 5)?;
                write!(f, "^{n}")
            }
            Expr::Sqrt(a) => write!(f, "sqrt({a})"),
        }
    }
}

/// Parameter bindings for sweep templates.
pub type Bindings = BTreeMap<String, Rational>;

/// A radical equation in one of the canonical forms the solver handles.
///
/// All payloads are rational functions in lowest terms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RadicalEquation {
    /// `sqrt(f) = sqrt(g)`
    EqualRoots {
        f: RationalFunction,
        g: RationalFunction,
    },
    /// `sqrt(f) = g`
    RootEqualsFunction {
        f: RationalFunction,
        g: RationalFunction,
    },
    /// `sqrt(f) + sqrt(g) = h`
    RootSumEqualsFunction {
        f: RationalFunction,
        g: RationalFunction,
        h: RationalFunction,
    },
    /// `sqrt(f) + sqrt(g) = sqrt(h)`
    RootSumEqualsRoot {
        f: RationalFunction,
        g: RationalFunction,
        h: RationalFunction,
    },
    /// `sqrt(f) - sqrt(g) = h`
    RootDifferenceEqualsFunction {
        f: RationalFunction,
        g: RationalFunction,
        h: RationalFunction,
    },
    /// `h * sqrt(f) = g` with non-constant or non-unit `h`
    ScaledRootEqualsFunction {
        h: RationalFunction,
        f: RationalFunction,
        g: RationalFunction,
    },
    /// `sqrt(f1) + sqrt(f2) + ... + sqrt(fn) = 0`
    RootSumZero { radicands: Vec<RationalFunction> },
}

/// Discriminant-only tag for [`RadicalEquation`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FormKind {
    EqualRoots,
    RootEqualsFunction,
    RootSumEqualsFunction,
    RootSumEqualsRoot,
    RootDifferenceEqualsFunction,
    ScaledRootEqualsFunction,
    RootSumZero,
}

impl FormKind {
    pub const ALL: [FormKind; 7] = [
        FormKind::EqualRoots,
        FormKind::RootEqualsFunction,
        FormKind::RootSumEqualsFunction,
        FormKind::RootSumEqualsRoot,
        FormKind::RootDifferenceEqualsFunction,
        FormKind::ScaledRootEqualsFunction,
        FormKind::RootSumZero,
    ];

    pub fn id(&self) -> &'static str {
        match self {
            FormKind::EqualRoots => "equal_roots",
            FormKind::RootEqualsFunction => "root_eq_function",
            FormKind::RootSumEqualsFunction => "root_sum_eq_function",
            FormKind::RootSumEqualsRoot => "root_sum_eq_root",
            FormKind::RootDifferenceEqualsFunction => "root_difference_eq_function",
            FormKind::ScaledRootEqualsFunction => "scaled_root_eq_function",
            FormKind::RootSumZero => "root_sum_zero",
        }
    }
}

impl RadicalEquation {
    pub fn kind(&self) -> FormKind {
        match self {
            RadicalEquation::EqualRoots { .. } => FormKind::EqualRoots,
            RadicalEquation::RootEqualsFunction { .. } => FormKind::RootEqualsFunction,
            RadicalEquation::RootSumEqualsFunction { .. } => FormKind::RootSumEqualsFunction,
            RadicalEquation::RootSumEqualsRoot { .. } => FormKind::RootSumEqualsRoot,
            RadicalEquation::RootDifferenceEqualsFunction { .. } => {
                FormKind::RootDifferenceEqualsFunction
            }
            RadicalEquation::ScaledRootEqualsFunction { .. } => FormKind::ScaledRootEqualsFunction,
            RadicalEquation::RootSumZero { .. } => FormKind::RootSumZero,
        }
    }

    /// The radicands whose signs decide strong vs formal verification.
    pub fn radicands(&self) -> Vec<&RationalFunction> {
        match self {
            RadicalEquation::EqualRoots { f, g } => vec![f, g],
            RadicalEquation::RootEqualsFunction { f, .. } => vec![f],
            RadicalEquation::RootSumEqualsFunction { f, g, .. } => vec![f, g],
            RadicalEquation::RootSumEqualsRoot { f, g, h } => vec![f, g, h],
            RadicalEquation::RootDifferenceEqualsFunction { f, g, .. } => vec![f, g],
            RadicalEquation::ScaledRootEqualsFunction { f, .. } => vec![f],
            RadicalEquation::RootSumZero { radicands } => radicands.iter().collect(),
        }
    }

    /// Every rational-function payload (for domain computations).
    pub fn payloads(&self) -> Vec<&RationalFunction> {
        match self {
            RadicalEquation::EqualRoots { f, g } => vec![f, g],
            RadicalEquation::RootEqualsFunction { f, g } => vec![f, g],
            RadicalEquation::RootSumEqualsFunction { f, g, h } => vec![f, g, h],
            RadicalEquation::RootSumEqualsRoot { f, g, h } => vec![f, g, h],
            RadicalEquation::RootDifferenceEqualsFunction { f, g, h } => vec![f, g, h],
            RadicalEquation::ScaledRootEqualsFunction { h, f, g } => vec![h, f, g],
            RadicalEquation::RootSumZero { radicands } => radicands.iter().collect(),
        }
    }

    /// Reconstructs surface expressions for the two sides, in canonical
    /// rendering order.
    pub fn to_sides(&self) -> (Expr, Expr) {
        fn rf_expr(rf: &RationalFunction) -> Expr {
            rational_function_to_expr(rf)
        }
        fn sqrt(rf: &RationalFunction) -> Expr {
            Expr::Sqrt(Box::new(rf_expr(rf)))
        }
        match self {
            RadicalEquation::EqualRoots { f, g } => (sqrt(f), sqrt(g)),
            RadicalEquation::RootEqualsFunction { f, g } => (sqrt(f), rf_expr(g)),
            RadicalEquation::RootSumEqualsFunction { f, g, h } => {
                (Expr::Add(Box::new(sqrt(f)), Box::new(sqrt(g))), rf_expr(h))
            }
            RadicalEquation::RootSumEqualsRoot { f, g, h } => {
                (Expr::Add(Box::new(sqrt(f)), Box::new(sqrt(g))), sqrt(h))
            }
            RadicalEquation::RootDifferenceEqualsFunction { f, g, h } => {
                (Expr::Sub(Box::new(sqrt(f)), Box::new(sqrt(g))), rf_expr(h))
            }
            RadicalEquation::ScaledRootEqualsFunction { h, f, g } => (
                Expr::Mul(Box::new(rf_expr(h)), Box::new(sqrt(f))),
                rf_expr(g),
            ),
            RadicalEquation::RootSumZero { radicands } => {
                let mut it = radicands.iter();
                let first = sqrt(it.next().expect("at least two radicands"));
                let lhs = it.fold(first, |acc, r| Expr::Add(Box::new(acc), Box::new(sqrt(r))));
                (
                    lhs,
                    Expr::Number(Rational::from(num_bigint::BigInt::from(0))),
                )
            }
        }
    }
}

/// Converts a rational function into a surface expression (polynomial sums
/// of monomials, quotient where needed).
pub fn rational_function_to_expr(rf: &RationalFunction) -> Expr {
    fn poly_expr(p: &crate::algebra::Polynomial) -> Expr {
        use num_traits::Zero;
        if p.is_zero() {
            return Expr::Number(Rational::zero());
        }
        let mut acc: Option<Expr> = None;
        for (i, c) in p.coeffs().iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            use num_traits::Signed;
            let mag = c.abs();
            let neg = c.is_negative();
            let term = monomial(&mag, i);
            acc = Some(match acc {
                None => {
                    if neg {
                        Expr::Neg(Box::new(term))
                    } else {
                        term
                    }
                }
                Some(prev) => {
                    if neg {
                        Expr::Sub(Box::new(prev), Box::new(term))
                    } else {
                        Expr::Add(Box::new(prev), Box::new(term))
                    }
                }
            });
        }
        acc.expect("nonzero polynomial")
    }

    fn monomial(mag: &Rational, exp: usize) -> Expr {
        use num_traits::One;
        let var_part = |exp: usize| -> Expr {
            if exp == 1 {
                Expr::Var
            } else {
                Expr::Pow(Box::new(Expr::Var), exp as u32)
            }
        };
        if exp == 0 {
            Expr::Number(mag.clone())
        } else if mag.is_one() {
            var_part(exp)
        } else {
            Expr::Mul(Box::new(Expr::Number(mag.clone())), Box::new(var_part(exp)))
        }
    }

    if rf.is_polynomial() {
        poly_expr(rf.num())
    } else {
        Expr::Div(Box::new(poly_expr(rf.num())), Box::new(poly_expr(rf.den())))
    }
}

impl fmt::Display for RadicalEquation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (lhs, rhs) = self.to_sides();
        write!(f, "{lhs} = {rhs}")
    }
}
