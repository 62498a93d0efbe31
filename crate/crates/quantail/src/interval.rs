//! Intervals over the extended reals with per-endpoint openness.
//!
//! Every quantity value in the engine is an `Interval`; single values are
//! degenerate closed intervals. Arithmetic operators apply to degenerate
//! intervals only, while the set operators handle arbitrary ones with exact
//! open/closed endpoint propagation.

use std::cmp::Ordering;
use std::fmt;

use thiserror::Error;

use crate::value::{format_num, Num};

/// One endpoint of an interval on the extended real line.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Endpoint {
    NegInf,
    Finite(Num),
    PosInf,
}

impl Endpoint {
    pub fn as_num(&self) -> Option<&Num> {
        match self {
            Endpoint::Finite(n) => Some(n),
            _ => None,
        }
    }

    fn is_finite(&self) -> bool {
        matches!(self, Endpoint::Finite(_))
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum IntervalError {
    #[error("lower endpoint exceeds upper endpoint")]
    Inverted,
    #[error("degenerate interval must be closed on both ends")]
    OpenPoint,
    #[error("infinite endpoint must be open")]
    ClosedInfinity,
}

/// Errors from the arithmetic operators (degenerate operands only).
#[derive(Debug, Error, PartialEq, Eq)]
pub enum ArithmeticError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("arithmetic operator applied to a non-degenerate interval")]
    NonPointOperand,
}

/// Outcome of a set operator: a contiguous interval, the empty set, or a
/// non-interval result (disconnected union, punctured difference).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SetOutcome {
    Interval(Interval),
    Empty,
    Invalid,
}

impl SetOutcome {
    pub fn interval(self) -> Option<Interval> {
        match self {
            SetOutcome::Interval(iv) => Some(iv),
            _ => None,
        }
    }
}

/// A numeric range with per-endpoint open/closed flags.
///
/// Invariants: `lo <= hi`; `lo == hi` forces both endpoints closed; an
/// infinite endpoint is always open.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Interval {
    lo: Endpoint,
    hi: Endpoint,
    lo_open: bool,
    hi_open: bool,
}

impl Interval {
    pub fn new(lo: Endpoint, hi: Endpoint, lo_open: bool, hi_open: bool) -> Result<Self, IntervalError> {
        match (&lo, &hi) {
            (Endpoint::PosInf, _) | (_, Endpoint::NegInf) => return Err(IntervalError::Inverted),
            (Endpoint::Finite(a), Endpoint::Finite(b)) => match a.cmp(b) {
                Ordering::Greater => return Err(IntervalError::Inverted),
                Ordering::Equal if lo_open || hi_open => return Err(IntervalError::OpenPoint),
                _ => {}
            },
            _ => {}
        }
        if (matches!(lo, Endpoint::NegInf) && !lo_open) || (matches!(hi, Endpoint::PosInf) && !hi_open) {
            return Err(IntervalError::ClosedInfinity);
        }
        Ok(Interval { lo, hi, lo_open, hi_open })
    }

    /// Degenerate interval holding a single value.
    pub fn point(v: Num) -> Self {
        Interval {
            lo: Endpoint::Finite(v.clone()),
            hi: Endpoint::Finite(v),
            lo_open: false,
            hi_open: false,
        }
    }

    pub fn closed(lo: Num, hi: Num) -> Result<Self, IntervalError> {
        Interval::new(Endpoint::Finite(lo), Endpoint::Finite(hi), false, false)
    }

    /// `(-inf, v)` — strict "fewer/less than v".
    pub fn less_than(v: Num) -> Self {
        Interval { lo: Endpoint::NegInf, hi: Endpoint::Finite(v), lo_open: true, hi_open: true }
    }

    /// `(-inf, v]` — "at most / up to v".
    pub fn at_most(v: Num) -> Self {
        Interval { lo: Endpoint::NegInf, hi: Endpoint::Finite(v), lo_open: true, hi_open: false }
    }

    /// `(v, inf)` — strict "more/greater than v".
    pub fn more_than(v: Num) -> Self {
        Interval { lo: Endpoint::Finite(v), hi: Endpoint::PosInf, lo_open: true, hi_open: true }
    }

    /// `[v, inf)` — "at least v".
    pub fn at_least(v: Num) -> Self {
        Interval { lo: Endpoint::Finite(v), hi: Endpoint::PosInf, lo_open: false, hi_open: true }
    }

    pub fn lo(&self) -> &Endpoint {
        &self.lo
    }

    pub fn hi(&self) -> &Endpoint {
        &self.hi
    }

    pub fn lo_open(&self) -> bool {
        self.lo_open
    }

    pub fn hi_open(&self) -> bool {
        self.hi_open
    }

    pub fn is_degenerate(&self) -> bool {
        self.lo == self.hi && self.lo.is_finite()
    }

    /// The single value of a degenerate interval.
    pub fn point_value(&self) -> Option<&Num> {
        if self.is_degenerate() {
            self.lo.as_num()
        } else {
            None
        }
    }

    pub fn contains(&self, x: &Num) -> bool {
        let lo_ok = match &self.lo {
            Endpoint::NegInf => true,
            Endpoint::PosInf => false,
            Endpoint::Finite(l) => {
                if self.lo_open {
                    x > l
                } else {
                    x >= l
                }
            }
        };
        let hi_ok = match &self.hi {
            Endpoint::PosInf => true,
            Endpoint::NegInf => false,
            Endpoint::Finite(h) => {
                if self.hi_open {
                    x < h
                } else {
                    x <= h
                }
            }
        };
        lo_ok && hi_ok
    }

    fn require_points<'a>(&'a self, other: &'a Interval) -> Result<(&'a Num, &'a Num), ArithmeticError> {
        match (self.point_value(), other.point_value()) {
            (Some(a), Some(b)) => Ok((a, b)),
            _ => Err(ArithmeticError::NonPointOperand),
        }
    }

    pub fn add(&self, other: &Interval) -> Result<Interval, ArithmeticError> {
        let (a, b) = self.require_points(other)?;
        Ok(Interval::point(a + b))
    }

    pub fn sub(&self, other: &Interval) -> Result<Interval, ArithmeticError> {
        let (a, b) = self.require_points(other)?;
        Ok(Interval::point(a - b))
    }

    pub fn mul(&self, other: &Interval) -> Result<Interval, ArithmeticError> {
        let (a, b) = self.require_points(other)?;
        Ok(Interval::point(a * b))
    }

    pub fn div(&self, other: &Interval) -> Result<Interval, ArithmeticError> {
        use num::Zero;
        let (a, b) = self.require_points(other)?;
        if b.is_zero() {
            return Err(ArithmeticError::DivisionByZero);
        }
        Ok(Interval::point(a / b))
    }

    /// Set intersection with endpoint-openness propagation.
    pub fn intersect(&self, other: &Interval) -> SetOutcome {
        // Stricter lower bound wins: larger value, or open at equal value.
        let (lo, lo_open) = match self.lo.cmp(&other.lo) {
            Ordering::Greater => (self.lo.clone(), self.lo_open),
            Ordering::Less => (other.lo.clone(), other.lo_open),
            Ordering::Equal => (self.lo.clone(), self.lo_open || other.lo_open),
        };
        let (hi, hi_open) = match self.hi.cmp(&other.hi) {
            Ordering::Less => (self.hi.clone(), self.hi_open),
            Ordering::Greater => (other.hi.clone(), other.hi_open),
            Ordering::Equal => (self.hi.clone(), self.hi_open || other.hi_open),
        };
        match Interval::new(lo, hi, lo_open, hi_open) {
            Ok(iv) => SetOutcome::Interval(iv),
            Err(_) => SetOutcome::Empty,
        }
    }

    /// True when the two intervals overlap or meet at a shared closed endpoint,
    /// i.e. their union is one contiguous interval.
    fn touches(&self, other: &Interval) -> bool {
        if !matches!(self.intersect(other), SetOutcome::Empty) {
            return true;
        }
        let meets = |hi: &Endpoint, hi_open: bool, lo: &Endpoint, lo_open: bool| {
            hi == lo && hi.is_finite() && !(hi_open && lo_open)
        };
        meets(&self.hi, self.hi_open, &other.lo, other.lo_open)
            || meets(&other.hi, other.hi_open, &self.lo, self.lo_open)
    }

    /// Set union; `Invalid` when the result is not a single contiguous interval.
    pub fn union(&self, other: &Interval) -> SetOutcome {
        if !self.touches(other) {
            return SetOutcome::Invalid;
        }
        let (lo, lo_open) = match self.lo.cmp(&other.lo) {
            Ordering::Less => (self.lo.clone(), self.lo_open),
            Ordering::Greater => (other.lo.clone(), other.lo_open),
            Ordering::Equal => (self.lo.clone(), self.lo_open && other.lo_open),
        };
        let (hi, hi_open) = match self.hi.cmp(&other.hi) {
            Ordering::Greater => (self.hi.clone(), self.hi_open),
            Ordering::Less => (other.hi.clone(), other.hi_open),
            Ordering::Equal => (self.hi.clone(), self.hi_open && other.hi_open),
        };
        match Interval::new(lo, hi, lo_open, hi_open) {
            Ok(iv) => SetOutcome::Interval(iv),
            Err(_) => SetOutcome::Invalid,
        }
    }

    /// Set difference; `Invalid` when removing `other` punctures this interval
    /// into two pieces, `Empty` when nothing remains.
    pub fn setminus(&self, other: &Interval) -> SetOutcome {
        if matches!(self.intersect(other), SetOutcome::Empty) {
            return SetOutcome::Interval(self.clone());
        }
        // Piece of self below other's lower bound.
        let left = match &other.lo {
            Endpoint::NegInf => None,
            lo => Interval::new(self.lo.clone(), lo.clone(), self.lo_open, !other.lo_open).ok(),
        };
        // Piece of self above other's upper bound.
        let right = match &other.hi {
            Endpoint::PosInf => None,
            hi => Interval::new(hi.clone(), self.hi.clone(), !other.hi_open, self.hi_open).ok(),
        };
        match (left, right) {
            (Some(_), Some(_)) => SetOutcome::Invalid,
            (Some(iv), None) | (None, Some(iv)) => SetOutcome::Interval(iv),
            (None, None) => SetOutcome::Empty,
        }
    }

    /// True iff every point of `self` lies in `other`, respecting openness.
    pub fn is_subset_of(&self, other: &Interval) -> bool {
        let lo_ok = match self.lo.cmp(&other.lo) {
            Ordering::Greater => true,
            Ordering::Less => false,
            Ordering::Equal => !self.lo.is_finite() || self.lo_open || !other.lo_open,
        };
        let hi_ok = match self.hi.cmp(&other.hi) {
            Ordering::Less => true,
            Ordering::Greater => false,
            Ordering::Equal => !self.hi.is_finite() || self.hi_open || !other.hi_open,
        };
        lo_ok && hi_ok
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let open = if self.lo_open { "(" } else { "[" };
        let close = if self.hi_open { ")" } else { "]" };
        let lo = match &self.lo {
            Endpoint::NegInf => "-inf".to_string(),
            Endpoint::PosInf => "inf".to_string(),
            Endpoint::Finite(n) => format_num(n),
        };
        let hi = match &self.hi {
            Endpoint::NegInf => "-inf".to_string(),
            Endpoint::PosInf => "inf".to_string(),
            Endpoint::Finite(n) => format_num(n),
        };
        write!(f, "{}{}, {}{}", open, lo, hi, close)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::value::num_from_i64 as n;

    fn pt(v: i64) -> Interval {
        Interval::point(n(v))
    }

    fn closed(a: i64, b: i64) -> Interval {
        Interval::closed(n(a), n(b)).unwrap()
    }

    #[test]
    fn arithmetic_on_points() {
        assert_eq!(pt(3).sub(&pt(1)).unwrap(), pt(2));
        assert_eq!(pt(5).add(&pt(0)).unwrap(), pt(5));
        assert_eq!(pt(73).sub(&pt(55)).unwrap(), pt(18));
        assert_eq!(pt(6).mul(&pt(7)).unwrap(), pt(42));
        assert_eq!(pt(84).div(&pt(2)).unwrap(), pt(42));
    }

    #[test]
    fn division_by_zero_point() {
        assert_eq!(pt(1).div(&pt(0)), Err(ArithmeticError::DivisionByZero));
    }

    #[test]
    fn arithmetic_rejects_ranges() {
        assert_eq!(closed(1, 2).add(&pt(1)), Err(ArithmeticError::NonPointOperand));
    }

    #[test]
    fn intersect_cases() {
        assert_eq!(
            closed(1, 5).intersect(&closed(3, 7)),
            SetOutcome::Interval(closed(3, 5))
        );
        assert_eq!(closed(1, 2).intersect(&closed(3, 4)), SetOutcome::Empty);
        assert_eq!(
            Interval::less_than(n(700)).intersect(&pt(100)),
            SetOutcome::Interval(pt(100))
        );
        // Open endpoints meeting at a point yield nothing.
        let a = Interval::new(Endpoint::Finite(n(1)), Endpoint::Finite(n(2)), false, true).unwrap();
        let b = Interval::new(Endpoint::Finite(n(2)), Endpoint::Finite(n(3)), false, false).unwrap();
        assert_eq!(a.intersect(&b), SetOutcome::Empty);
    }

    #[test]
    fn union_cases() {
        assert_eq!(closed(1, 3).union(&closed(2, 5)), SetOutcome::Interval(closed(1, 5)));
        assert_eq!(closed(1, 2).union(&closed(4, 5)), SetOutcome::Invalid);
        // Touching at a closed endpoint is contiguous.
        assert_eq!(closed(1, 2).union(&closed(2, 3)), SetOutcome::Interval(closed(1, 3)));
        // Touching open-open leaves a puncture.
        let a = Interval::new(Endpoint::Finite(n(1)), Endpoint::Finite(n(2)), false, true).unwrap();
        let b = Interval::new(Endpoint::Finite(n(2)), Endpoint::Finite(n(3)), true, false).unwrap();
        assert_eq!(a.union(&b), SetOutcome::Invalid);
    }

    #[test]
    fn setminus_cases() {
        let expect = Interval::new(Endpoint::Finite(n(1)), Endpoint::Finite(n(4)), false, true).unwrap();
        assert_eq!(closed(1, 5).setminus(&closed(4, 5)), SetOutcome::Interval(expect));
        assert_eq!(closed(2, 3).setminus(&closed(1, 5)), SetOutcome::Empty);
        assert_eq!(closed(1, 5).setminus(&closed(2, 3)), SetOutcome::Invalid);
        assert_eq!(closed(1, 2).setminus(&closed(4, 5)), SetOutcome::Interval(closed(1, 2)));
    }

    #[test]
    fn subset_cases() {
        assert!(pt(100).is_subset_of(&Interval::less_than(n(700))));
        assert!(closed(1, 5).is_subset_of(&closed(1, 5)));
        assert!(pt(1917).is_subset_of(&closed(1862, 1938)));
        assert!(!closed(1862, 1938).is_subset_of(&pt(1917)));
        // Openness matters at shared endpoints.
        let open_hi = Interval::new(Endpoint::Finite(n(1)), Endpoint::Finite(n(5)), false, true).unwrap();
        assert!(open_hi.is_subset_of(&closed(1, 5)));
        assert!(!closed(1, 5).is_subset_of(&open_hi));
    }

    #[test]
    fn invariant_enforcement() {
        assert_eq!(Interval::closed(n(5), n(1)).unwrap_err(), IntervalError::Inverted);
        assert_eq!(
            Interval::new(Endpoint::Finite(n(2)), Endpoint::Finite(n(2)), true, false).unwrap_err(),
            IntervalError::OpenPoint
        );
        assert_eq!(
            Interval::new(Endpoint::NegInf, Endpoint::Finite(n(2)), false, false).unwrap_err(),
            IntervalError::ClosedInfinity
        );
    }

    #[test]
    fn display_forms() {
        assert_eq!(pt(100).to_string(), "[100, 100]");
        assert_eq!(Interval::less_than(n(10)).to_string(), "(-inf, 10)");
        assert_eq!(Interval::at_least(n(3)).to_string(), "[3, inf)");
    }
}
