//! Exact solver for radical equations of depth at most 2 over the rationals.
//!
//! The library solves equations such as `sqrt(x+1) + sqrt(x-1) = sqrt(x+2)`
//! without ever substituting candidates back into the original equation.
//! Every derived candidate is accepted or rejected by explicit inequality
//! restrictions (the restriction sets `A1..A4`, `B1`), computed exactly over
//! real algebraic numbers. Two solution notions are distinguished:
//!
//! * a **strong** solution verifies the equation with every radicand
//!   evaluating to a nonnegative real;
//! * a **formal** solution verifies the equation when radicals of negative
//!   reals are allowed to evaluate to imaginary numbers via the principal
//!   square root.
//!
//! Module layout:
//!
//! * [`algebra`] — exact rationals, polynomials, rational functions, and real
//!   algebraic numbers with sign determination (Sturm sequences).
//! * [`realset`] — finite unions of intervals/points with algebraic
//!   endpoints; the restriction and solution sets.
//! * [`equation`] — grammar, parser, and normalization into the supported
//!   canonical equation forms.
//! * [`solver`] — builds the candidate set and restriction sets for each
//!   form and classifies every candidate.
//! * [`oracle`] — independent floating-point referee: complex evaluation,
//!   residual scans, and deterministic random equation generation.
//! * [`report`] — JSON / text / step-by-step rendering of solution reports.
//! * [`cli`] — the `radsolve` command-line front end.

pub mod algebra;
pub mod cli;
pub mod equation;
pub mod oracle;
pub mod realset;
pub mod report;
pub mod solver;

pub use algebra::{AlgebraicReal, Polynomial, Rational, RationalFunction, Sign};
pub use equation::{normalize, parse, Expr, FormKind, RadicalEquation};
pub use realset::{RealSet, SignRel};
pub use solver::{solve, Analysis, SolutionReport, Verdict};
