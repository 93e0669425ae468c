//! Finite unions of points and intervals with real algebraic endpoints.
//!
//! These sets carry every restriction set and solution set produced by the
//! solver. All endpoint comparisons are exact; there are no tolerance
//! parameters anywhere in this module.

use std::cmp::Ordering;
use std::fmt;

use crate::algebra::{
    compare, isolate_real_roots, AlgebraicReal, Rational, RationalFunction, Sign,
};

/// One maximal connected piece of a [`RealSet`]: a single point or an
/// interval. `None` endpoints stand for the infinities and are always open.
#[derive(Debug, Clone)]
pub struct Component {
    lo: Option<AlgebraicReal>,
    hi: Option<AlgebraicReal>,
    lo_closed: bool,
    hi_closed: bool,
}

impl Component {
    pub fn point(x: AlgebraicReal) -> Self {
        Component {
            lo: Some(x.clone()),
            hi: Some(x),
            lo_closed: true,
            hi_closed: true,
        }
    }

    /// Builds an interval component; panics if the bounds are out of order
    /// or describe an empty or degenerate set improperly.
    pub fn interval(
        lo: Option<AlgebraicReal>,
        lo_closed: bool,
        hi: Option<AlgebraicReal>,
        hi_closed: bool,
    ) -> Self {
        if let (Some(a), Some(b)) = (&lo, &hi) {
            match compare(a, b) {
                Ordering::Greater => panic!("interval bounds out of order"),
                Ordering::Equal => {
                    assert!(lo_closed && hi_closed, "degenerate open interval");
                }
                Ordering::Less => {}
            }
        }
        Component {
            lo_closed: lo_closed && lo.is_some(),
            hi_closed: hi_closed && hi.is_some(),
            lo,
            hi,
        }
    }

    pub fn lo(&self) -> Option<&AlgebraicReal> {
        self.lo.as_ref()
    }

    pub fn hi(&self) -> Option<&AlgebraicReal> {
        self.hi.as_ref()
    }

    pub fn lo_closed(&self) -> bool {
        self.lo_closed
    }

    pub fn hi_closed(&self) -> bool {
        self.hi_closed
    }

    pub fn is_point(&self) -> bool {
        match (&self.lo, &self.hi) {
            (Some(a), Some(b)) => compare(a, b) == Ordering::Equal,
            _ => false,
        }
    }

    pub fn contains(&self, x: &AlgebraicReal) -> bool {
        if let Some(lo) = &self.lo {
            match compare(x, lo) {
                Ordering::Less => return false,
                Ordering::Equal => {
                    if !self.lo_closed {
                        return false;
                    }
                }
                Ordering::Greater => {}
            }
        }
        if let Some(hi) = &self.hi {
            match compare(x, hi) {
                Ordering::Greater => return false,
                Ordering::Equal => {
                    if !self.hi_closed {
                        return false;
                    }
                }
                Ordering::Less => {}
            }
        }
        true
    }

    fn intersect(&self, other: &Component) -> Option<Component> {
        // lower bound: the larger of the two
        let (lo, lo_closed) = match (&self.lo, &other.lo) {
            (None, None) => (None, false),
            (Some(a), None) => (Some(a.clone()), self.lo_closed),
            (None, Some(b)) => (Some(b.clone()), other.lo_closed),
            (Some(a), Some(b)) => match compare(a, b) {
                Ordering::Less => (Some(b.clone()), other.lo_closed),
                Ordering::Greater => (Some(a.clone()), self.lo_closed),
                Ordering::Equal => (Some(a.clone()), self.lo_closed && other.lo_closed),
            },
        };
        // upper bound: the smaller of the two
        let (hi, hi_closed) = match (&self.hi, &other.hi) {
            (None, None) => (None, false),
            (Some(a), None) => (Some(a.clone()), self.hi_closed),
            (None, Some(b)) => (Some(b.clone()), other.hi_closed),
            (Some(a), Some(b)) => match compare(a, b) {
                Ordering::Less => (Some(a.clone()), self.hi_closed),
                Ordering::Greater => (Some(b.clone()), other.hi_closed),
                Ordering::Equal => (Some(a.clone()), self.hi_closed && other.hi_closed),
            },
        };
        if let (Some(a), Some(b)) = (&lo, &hi) {
            match compare(a, b) {
                Ordering::Greater => return None,
                Ordering::Equal => {
                    if !(lo_closed && hi_closed) {
                        return None;
                    }
                }
                Ordering::Less => {}
            }
        }
        Some(Component {
            lo,
            hi,
            lo_closed,
            hi_closed,
        })
    }
}

/// Inequality relation against zero for [`RealSet::from_sign_condition`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SignRel {
    /// `>= 0`
    Ge,
    /// `> 0`
    Gt,
    /// `<= 0`
    Le,
    /// `< 0`
    Lt,
    /// `= 0`
    Eq,
}

/// A finite union of points and intervals with algebraic endpoints, kept in
/// canonical form: components pairwise disjoint, sorted ascending, and
/// non-adjacent (anything mergeable is merged).
#[derive(Debug, Clone)]
pub struct RealSet {
    comps: Vec<Component>,
}

impl RealSet {
    pub fn empty() -> Self {
        RealSet { comps: vec![] }
    }

    /// The whole real line.
    pub fn full() -> Self {
        RealSet {
            comps: vec![Component::interval(None, false, None, false)],
        }
    }

    pub fn point(x: AlgebraicReal) -> Self {
        RealSet {
            comps: vec![Component::point(x)],
        }
    }

    pub fn point_rational(r: Rational) -> Self {
        Self::point(AlgebraicReal::from_rational(r))
    }

    pub fn from_components(comps: Vec<Component>) -> Self {
        let mut s = RealSet { comps };
        s.canonicalize();
        s
    }

    pub fn components(&self) -> &[Component] {
        &self.comps
    }

    pub fn is_empty(&self) -> bool {
        self.comps.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.comps.len() == 1 && self.comps[0].lo.is_none() && self.comps[0].hi.is_none()
    }

    /// All point components, in ascending order.
    pub fn isolated_points(&self) -> Vec<AlgebraicReal> {
        self.comps
            .iter()
            .filter(|c| c.is_point())
            .map(|c| c.lo.clone().expect("point endpoint"))
            .collect()
    }

    pub fn has_interval_component(&self) -> bool {
        self.comps.iter().any(|c| !c.is_point())
    }

    pub fn contains(&self, x: &AlgebraicReal) -> bool {
        self.comps.iter().any(|c| c.contains(x))
    }

    pub fn contains_rational(&self, r: &Rational) -> bool {
        self.contains(&AlgebraicReal::from_rational(r.clone()))
    }

    pub fn union(&self, other: &RealSet) -> RealSet {
        let mut comps = self.comps.clone();
        comps.extend(other.comps.iter().cloned());
        RealSet::from_components(comps)
    }

    pub fn intersect(&self, other: &RealSet) -> RealSet {
        let mut comps = Vec::new();
        for a in &self.comps {
            for b in &other.comps {
                if let Some(c) = a.intersect(b) {
                    comps.push(c);
                }
            }
        }
        RealSet::from_components(comps)
    }

    pub fn is_subset_of(&self, other: &RealSet) -> bool {
        self.intersect(other) == *self
    }

    /// Sorts, drops empties, merges overlapping or adjacent components.
    fn canonicalize(&mut self) {
        self.comps.sort_by(|a, b| {
            let lo_ord = cmp_lower_bound(&a.lo, a.lo_closed, &b.lo, b.lo_closed);
            if lo_ord != Ordering::Equal {
                return lo_ord;
            }
            cmp_upper_bound(&a.hi, a.hi_closed, &b.hi, b.hi_closed)
        });
        let mut merged: Vec<Component> = Vec::with_capacity(self.comps.len());
        for c in self.comps.drain(..) {
            match merged.last_mut() {
                None => merged.push(c),
                Some(last) => {
                    if components_touch(last, &c) {
                        merge_into(last, c);
                    } else {
                        merged.push(c);
                    }
                }
            }
        }
        self.comps = merged;
    }

    /// Solution set of `p(x) rel 0` within the domain of `p` (poles of the
    /// denominator are removed as open punctures).
    ///
    /// Between consecutive critical points (roots of numerator and
    /// denominator) the sign of `p` is constant and is sampled at an exact
    /// rational witness.
    pub fn from_sign_condition(p: &RationalFunction, rel: SignRel) -> RealSet {
        let poles = if p.den().is_constant() {
            vec![]
        } else {
            isolate_real_roots(p.den()).expect("nonzero denominator")
        };
        if p.num().is_zero() {
            return match rel {
                SignRel::Ge | SignRel::Le | SignRel::Eq => full_minus_points(&poles),
                SignRel::Gt | SignRel::Lt => RealSet::empty(),
            };
        }
        let zeros = if p.num().is_constant() {
            vec![]
        } else {
            isolate_real_roots(p.num()).expect("nonzero numerator")
        };

        // merge critical points ascending; zeros and poles are disjoint
        // because num and den are coprime
        #[derive(Clone)]
        enum Critical {
            Zero(AlgebraicReal),
            Pole(AlgebraicReal),
        }
        let mut criticals: Vec<Critical> = zeros
            .into_iter()
            .map(Critical::Zero)
            .chain(poles.into_iter().map(Critical::Pole))
            .collect();
        criticals.sort_by(|a, b| {
            let (Critical::Zero(x) | Critical::Pole(x)) = a;
            let (Critical::Zero(y) | Critical::Pole(y)) = b;
            compare(x, y)
        });
        {
            // separate isolating intervals so that sampling between
            // neighbours is straightforward
            let mut values: Vec<AlgebraicReal> = criticals
                .iter()
                .map(|c| {
                    let (Critical::Zero(x) | Critical::Pole(x)) = c;
                    x.clone()
                })
                .collect();
            crate::algebra::separate_intervals(&mut values);
            for (c, v) in criticals.iter_mut().zip(values) {
                match c {
                    Critical::Zero(x) | Critical::Pole(x) => *x = v,
                }
            }
        }

        let n = criticals.len();
        let mut comps: Vec<Component> = Vec::new();
        fn value_of(c: &Critical) -> &AlgebraicReal {
            let (Critical::Zero(x) | Critical::Pole(x)) = c;
            x
        }

        // region signs at rational witnesses
        for i in 0..=n {
            let witness: Rational =
                match (i.checked_sub(1).map(|j| &criticals[j]), criticals.get(i)) {
                    (None, None) => Rational::from(num_bigint::BigInt::from(0)),
                    (None, Some(b)) => {
                        value_of(b).iso_lo() - Rational::from(num_bigint::BigInt::from(1))
                    }
                    (Some(a), None) => {
                        value_of(a).iso_hi() + Rational::from(num_bigint::BigInt::from(1))
                    }
                    (Some(a), Some(b)) => {
                        crate::algebra::rational_between(value_of(a), value_of(b))
                    }
                };
            let sign = {
                let nv = p.num().eval(&witness);
                let dv = p.den().eval(&witness);
                Sign::of_rational(&nv).product(Sign::of_rational(&dv))
            };
            let keep = match rel {
                SignRel::Ge | SignRel::Gt => sign == Sign::Positive,
                SignRel::Le | SignRel::Lt => sign == Sign::Negative,
                SignRel::Eq => false,
            };
            if keep {
                let lo = i.checked_sub(1).map(|j| value_of(&criticals[j]).clone());
                let hi = criticals.get(i).map(|c| value_of(c).clone());
                comps.push(Component::interval(lo, false, hi, false));
            }
        }
        // critical points themselves: zeros may be kept, poles never
        let keep_zero = matches!(rel, SignRel::Ge | SignRel::Le | SignRel::Eq);
        if keep_zero {
            for c in &criticals {
                if let Critical::Zero(x) = c {
                    comps.push(Component::point(x.clone()));
                }
            }
        }
        RealSet::from_components(comps)
    }

    /// The domain of `p`: the real line minus the real roots of the
    /// denominator.
    pub fn domain_of(p: &RationalFunction) -> RealSet {
        if p.den().is_constant() {
            return RealSet::full();
        }
        let poles = isolate_real_roots(p.den()).expect("nonzero denominator");
        full_minus_points(&poles)
    }
}

/// `(-inf, +inf)` minus the given points (sorted or not).
fn full_minus_points(points: &[AlgebraicReal]) -> RealSet {
    if points.is_empty() {
        return RealSet::full();
    }
    let mut pts = points.to_vec();
    pts.sort_by(compare);
    let mut comps = Vec::with_capacity(pts.len() + 1);
    comps.push(Component::interval(
        None,
        false,
        Some(pts[0].clone()),
        false,
    ));
    for w in pts.windows(2) {
        comps.push(Component::interval(
            Some(w[0].clone()),
            false,
            Some(w[1].clone()),
            false,
        ));
    }
    comps.push(Component::interval(
        Some(pts[pts.len() - 1].clone()),
        false,
        None,
        false,
    ));
    RealSet::from_components(comps)
}

/// Compares lower bounds; `None` is -infinity. A closed bound starts before
/// an open bound at the same value.
fn cmp_lower_bound(
    a: &Option<AlgebraicReal>,
    a_closed: bool,
    b: &Option<AlgebraicReal>,
    b_closed: bool,
) -> Ordering {
    match (a, b) {
        (None, None) => Ordering::Equal,
        (None, Some(_)) => Ordering::Less,
        (Some(_), None) => Ordering::Greater,
        (Some(x), Some(y)) => compare(x, y).then_with(|| match (a_closed, b_closed) {
            (true, false) => Ordering::Less,
            (false, true) => Ordering::Greater,
            _ => Ordering::Equal,
        }),
    }
}

/// Compares upper bounds; `None` is +infinity. A closed bound extends past an
/// open bound at the same value.
fn cmp_upper_bound(
    a: &Option<AlgebraicReal>,
    a_closed: bool,
    b: &Option<AlgebraicReal>,
    b_closed: bool,
) -> Ordering {
    match (a, b) {
        (None, None) => Ordering::Equal,
        (None, Some(_)) => Ordering::Greater,
        (Some(_), None) => Ordering::Less,
        (Some(x), Some(y)) => compare(x, y).then_with(|| match (a_closed, b_closed) {
            (true, false) => Ordering::Greater,
            (false, true) => Ordering::Less,
            _ => Ordering::Equal,
        }),
    }
}

/// True when `a` (which starts no later than `b`) overlaps or touches `b` in
/// a mergeable way.
fn components_touch(a: &Component, b: &Component) -> bool {
    let hi = match &a.hi {
        None => return true,
        Some(h) => h,
    };
    let lo = match &b.lo {
        None => return true, // b starts at -inf, a does too (sorted) — overlap
        Some(l) => l,
    };
    match compare(hi, lo) {
        Ordering::Greater => true,
        Ordering::Equal => a.hi_closed || b.lo_closed,
        Ordering::Less => false,
    }
}

/// Merges `b` into `a`; assumes `components_touch(a, &b)` and that `a`
/// starts no later than `b`.
fn merge_into(a: &mut Component, b: Component) {
    let extend = match (&a.hi, &b.hi) {
        (None, _) => false,
        (_, None) => true,
        (Some(x), Some(y)) => match compare(x, y) {
            Ordering::Less => true,
            Ordering::Greater => false,
            Ordering::Equal => {
                a.hi_closed = a.hi_closed || b.hi_closed;
                false
            }
        },
    };
    if extend {
        a.hi = b.hi;
        a.hi_closed = b.hi_closed;
    }
}

impl PartialEq for RealSet {
    fn eq(&self, other: &Self) -> bool {
        if self.comps.len() != other.comps.len() {
            return false;
        }
        self.comps.iter().zip(&other.comps).all(|(a, b)| {
            let lo_eq = match (&a.lo, &b.lo) {
                (None, None) => true,
                (Some(x), Some(y)) => {
                    compare(x, y) == Ordering::Equal && a.lo_closed == b.lo_closed
                }
                _ => false,
            };
            let hi_eq = match (&a.hi, &b.hi) {
                (None, None) => true,
                (Some(x), Some(y)) => {
                    compare(x, y) == Ordering::Equal && a.hi_closed == b.hi_closed
                }
                _ => false,
            };
            lo_eq && hi_eq
        })
    }
}

impl Eq for RealSet {}

impl fmt::Display for RealSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", crate::report::format_set(self))
    }
}
