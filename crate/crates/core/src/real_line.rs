//! The vector space of the strict order on the real line, with exact
//! rational endpoints.
//!
//! Arrows are intervals `lo < hi`, composition joins intervals that meet
//! exactly, and the norm is the interval length `hi - lo`. There are no atomic
//! arrows: every interval splits at its midpoint.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::geometry::{self, NormedSpace, SpaceMultivector};
use crate::vector::Vector;

/// Exact rational number in lowest terms with a positive denominator.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(BigRational);

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RealLineError {
    #[error("cannot parse {0:?} as a decimal or fraction")]
    BadNumber(String),
    #[error("interval endpoints must satisfy lo < hi, got {lo} and {hi}")]
    EmptyInterval { lo: Box<Rational>, hi: Box<Rational> },
    #[error("{f} ⊕ {g} is undefined: the intervals do not meet")]
    Undefined { f: Box<IntervalArrow>, g: Box<IntervalArrow> },
}

impl Rational {
    pub fn new(numerator: i64, denominator: i64) -> Self {
        Rational(BigRational::new(numerator.into(), denominator.into()))
    }

    pub fn from_integer(n: i64) -> Self {
        Rational(BigRational::from_integer(n.into()))
    }

    pub fn numerator(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denominator(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }
}

impl FromStr for Rational {
    type Err = RealLineError;

    /// Accepts integers, decimals (`-3.141`) and fractions (`22/7`).
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || RealLineError::BadNumber(s.to_owned());
        let t = s.trim();
        if let Some((n, d)) = t.split_once('/') {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            return Ok(Rational(BigRational::new(n, d)));
        }
        let (negative, body) = match t.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, t.strip_prefix('+').unwrap_or(t)),
        };
        let (int_part, frac_part) = body.split_once('.').unwrap_or((body, ""));
        let digits_ok = |x: &str| x.bytes().all(|b| b.is_ascii_digit());
        if int_part.is_empty() && frac_part.is_empty()
            || !digits_ok(int_part)
            || !digits_ok(frac_part)
        {
            return Err(bad());
        }
        let digits = format!("{int_part}{frac_part}");
        let mut numer: BigInt = digits.parse().map_err(|_| bad())?;
        if negative {
            numer = -numer;
        }
        let denom = num_traits::pow(BigInt::from(10), frac_part.len());
        Ok(Rational(BigRational::new(numer, denom)))
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl Add for Rational {
    type Output = Rational;
    fn add(self, rhs: Rational) -> Rational {
        Rational(self.0 + rhs.0)
    }
}

impl Sub for Rational {
    type Output = Rational;
    fn sub(self, rhs: Rational) -> Rational {
        Rational(self.0 - rhs.0)
    }
}

impl Mul for Rational {
    type Output = Rational;
    fn mul(self, rhs: Rational) -> Rational {
        Rational(self.0 * rhs.0)
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Zero for Rational {
    fn zero() -> Self {
        Rational(BigRational::zero())
    }
    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
}

impl One for Rational {
    fn one() -> Self {
        Rational(BigRational::one())
    }
}

/// An arrow `lo → hi` of the real line, `lo < hi`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct IntervalArrow {
    lo: Rational,
    hi: Rational,
}

impl IntervalArrow {
    pub fn new(lo: Rational, hi: Rational) -> Result<Self, RealLineError> {
        if lo < hi {
            Ok(IntervalArrow { lo, hi })
        } else {
            Err(RealLineError::EmptyInterval {
                lo: Box::new(lo),
                hi: Box::new(hi),
            })
        }
    }

    /// Parses both endpoints.
    pub fn parse(lo: &str, hi: &str) -> Result<Self, RealLineError> {
        Self::new(lo.parse()?, hi.parse()?)
    }

    pub fn lo(&self) -> &Rational {
        &self.lo
    }

    pub fn hi(&self) -> &Rational {
        &self.hi
    }

    /// Splits at the midpoint into `(g, h)` with `self = g ⊕ h`.
    pub fn split(&self) -> (IntervalArrow, IntervalArrow) {
        let mid = Rational((self.lo.0.clone() + self.hi.0.clone()) / BigInt::from(2));
        self.split_at(mid)
            .expect("midpoint lies strictly inside the interval")
    }

    /// Splits at `point`, which must lie strictly inside.
    pub fn split_at(&self, point: Rational) -> Option<(IntervalArrow, IntervalArrow)> {
        let g = IntervalArrow::new(self.lo.clone(), point.clone()).ok()?;
        let h = IntervalArrow::new(point, self.hi.clone()).ok()?;
        Some((g, h))
    }
}

impl fmt::Display for IntervalArrow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.lo, self.hi)
    }
}

pub type IntervalVector = Vector<IntervalArrow>;

/// `||f|| = hi - lo`.
pub fn interval_norm(f: &IntervalArrow) -> Rational {
    f.hi.clone() - f.lo.clone()
}

/// `f ⊕ g`, defined when `hi(f) = lo(g)`; `O` is a two-sided unit.
pub fn interval_add(f: &IntervalVector, g: &IntervalVector) -> Result<IntervalVector, RealLineError> {
    match (f, g) {
        (Vector::Zero, g) => Ok(g.clone()),
        (f, Vector::Zero) => Ok(f.clone()),
        (Vector::Arrow(f), Vector::Arrow(g)) => {
            if f.hi == g.lo {
                Ok(Vector::Arrow(IntervalArrow {
                    lo: f.lo.clone(),
                    hi: g.hi.clone(),
                }))
            } else {
                Err(RealLineError::Undefined {
                    f: Box::new(f.clone()),
                    g: Box::new(g.clone()),
                })
            }
        }
    }
}

/// The real line as a normed space.
#[derive(Debug, Clone, Copy, Default)]
pub struct RealLine;

impl NormedSpace for RealLine {
    type Arrow = IntervalArrow;
    type Scalar = Rational;

    fn composable(&self, f: &IntervalArrow, g: &IntervalArrow) -> bool {
        f.hi == g.lo
    }

    fn norm(&self, f: &IntervalArrow) -> Rational {
        interval_norm(f)
    }
}

pub type IntervalMultivector = SpaceMultivector<RealLine>;

/// The products of an ordered pair of interval vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntervalProducts {
    pub inner: Rational,
    pub outer: IntervalMultivector,
    pub geometric: IntervalMultivector,
}

pub fn interval_products(f: &IntervalVector, g: &IntervalVector) -> IntervalProducts {
    IntervalProducts {
        inner: geometry::inner(&RealLine, f, g),
        outer: geometry::outer(&RealLine, f, g),
        geometric: geometry::geometric(&RealLine, f, g),
    }
}

pub fn interval_anticommutator(f: &IntervalVector, g: &IntervalVector) -> IntervalMultivector {
    geometry::anticommutator(&RealLine, f, g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multivector::Multivector;
    use proptest::prelude::*;

    fn r(s: &str) -> Rational {
        s.parse().unwrap()
    }

    fn iv(lo: &str, hi: &str) -> IntervalVector {
        Vector::Arrow(IntervalArrow::parse(lo, hi).unwrap())
    }

    #[test]
    fn parse_literals() {
        assert_eq!(r("3.141"), Rational::new(3141, 1000));
        assert_eq!(r("22/7"), Rational::new(22, 7));
        assert_eq!(r("-0.5"), Rational::new(-1, 2));
        assert_eq!(r("4/-8"), Rational::new(-1, 2));
        assert_eq!(r("7"), Rational::from_integer(7));
        assert_eq!(r(".25"), Rational::new(1, 4));
        for bad in ["", "abc", "1/0", "1.2.3", "-", "1e3", "."] {
            assert!(bad.parse::<Rational>().is_err(), "{bad}");
        }
        assert_eq!(r("3.1400").to_string(), "157/50");
    }

    #[test]
    fn empty_interval_rejected() {
        assert!(IntervalArrow::parse("1", "1").is_err());
        assert!(IntervalArrow::parse("2", "1").is_err());
    }

    #[test]
    fn norms() {
        let n = |lo, hi| interval_norm(&IntervalArrow::parse(lo, hi).unwrap());
        assert_eq!(n("3.14", "3.141"), Rational::new(1, 1000));
        assert_eq!(n("0", "1"), Rational::from_integer(1));
        assert_eq!(n("3.14", "3.1405"), Rational::new(5, 10000));
    }

    #[test]
    fn addition() {
        assert_eq!(
            interval_add(&iv("3.14", "3.1405"), &iv("3.1405", "3.141")),
            Ok(iv("3.14", "3.141"))
        );
        assert_eq!(interval_add(&Vector::Zero, &iv("0", "1")), Ok(iv("0", "1")));
        assert!(matches!(
            interval_add(&iv("0", "1"), &iv("2", "3")),
            Err(RealLineError::Undefined { .. })
        ));
    }

    #[test]
    fn products() {
        let p = interval_products(&iv("0", "1"), &iv("1", "3"));
        assert_eq!(p.inner, Rational::from_integer(2));
        assert!(p.outer.is_zero());
        assert_eq!(p.geometric, Multivector::scalar(Rational::from_integer(2)));

        let (f, g) = (iv("0", "1"), iv("2", "3"));
        assert!(interval_products(&f, &g).inner.is_zero());
        assert!(interval_products(&g, &f).inner.is_zero());
        assert!(interval_anticommutator(&f, &g).is_zero());

        let f = iv("0", "2");
        assert_eq!(
            interval_products(&f, &f).geometric,
            Multivector::scalar(Rational::from_integer(4))
        );
    }

    fn arb_rational() -> impl Strategy<Value = Rational> {
        (-1000i64..1000, 1i64..200).prop_map(|(n, d)| Rational::new(n, d))
    }

    fn arb_interval() -> impl Strategy<Value = IntervalArrow> {
        (arb_rational(), arb_rational())
            .prop_filter("distinct", |(a, b)| a != b)
            .prop_map(|(a, b)| {
                if a < b {
                    IntervalArrow::new(a, b).unwrap()
                } else {
                    IntervalArrow::new(b, a).unwrap()
                }
            })
    }

    proptest! {
        #[test]
        fn midpoint_split_is_additive(f in arb_interval()) {
            let (g, h) = f.split();
            let joined = interval_add(&Vector::Arrow(g.clone()), &Vector::Arrow(h.clone())).unwrap();
            prop_assert_eq!(joined, Vector::Arrow(f.clone()));
            prop_assert_eq!(interval_norm(&f), interval_norm(&g) + interval_norm(&h));
            prop_assert!(interval_norm(&g).is_positive() && interval_norm(&h).is_positive());
        }

        #[test]
        fn case_table_agrees(f in arb_interval(), g in arb_interval()) {
            let (f, g) = (Vector::Arrow(f), Vector::Arrow(g));
            prop_assert_eq!(
                interval_anticommutator(&f, &g),
                geometry::anticommutator_by_cases(&RealLine, &f, &g)
            );
        }

        #[test]
        fn decimal_roundtrip(n in -100000i64..100000, places in 0usize..6) {
            let scale = 10i64.pow(places as u32);
            let text = if places == 0 {
                n.to_string()
            } else {
                let sign = if n < 0 { "-" } else { "" };
                let a = n.unsigned_abs();
                format!("{sign}{}.{:0width$}", a / scale as u64, a % scale as u64, width = places)
            };
            prop_assert_eq!(text.parse::<Rational>().unwrap(), Rational::new(n, scale));
        }
    }
}
