//! Closed rational intervals with exact endpoints. Truncated series report
//! their value as an enclosure; arithmetic on enclosures keeps containment,
//! so "agrees within tol" becomes a machine-checkable statement about
//! exact rationals rather than a floating-point comparison.

use std::fmt;

use num_traits::Zero;

use super::rational::Rational;

/// Interval `[lo, hi]` with `lo <= hi`, both exact rationals.
#[derive(Clone, PartialEq, Eq)]
pub struct RatInterval {
    pub lo: Rational,
    pub hi: Rational,
}

impl RatInterval {
    pub fn new(lo: Rational, hi: Rational) -> Self {
        assert!(lo <= hi, "interval endpoints out of order");
        RatInterval { lo, hi }
    }

    /// Degenerate interval holding a single exact value.
    pub fn point(v: Rational) -> Self {
        RatInterval { lo: v.clone(), hi: v }
    }

    /// `[center - radius, center + radius]`.
    pub fn centered(center: Rational, radius: Rational) -> Self {
        assert!(!num_traits::Signed::is_negative(&radius));
        RatInterval {
            lo: &center - &radius,
            hi: &center + &radius,
        }
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> Rational {
        (&self.lo + &self.hi) / Rational::from_integer(2.into())
    }

    pub fn contains(&self, v: &Rational) -> bool {
        self.lo <= *v && *v <= self.hi
    }

    pub fn contains_interval(&self, other: &RatInterval) -> bool {
        self.lo <= other.lo && other.hi <= self.hi
    }

    pub fn intersects(&self, other: &RatInterval) -> bool {
        self.lo <= other.hi && other.lo <= self.hi
    }

    pub fn add(&self, other: &RatInterval) -> RatInterval {
        RatInterval::new(&self.lo + &other.lo, &self.hi + &other.hi)
    }

    pub fn sub(&self, other: &RatInterval) -> RatInterval {
        RatInterval::new(&self.lo - &other.hi, &self.hi - &other.lo)
    }

    pub fn neg(&self) -> RatInterval {
        RatInterval::new(-self.hi.clone(), -self.lo.clone())
    }

    /// Multiply by an exact scalar.
    pub fn scale(&self, s: &Rational) -> RatInterval {
        if s >= &Rational::zero() {
            RatInterval::new(&self.lo * s, &self.hi * s)
        } else {
            RatInterval::new(&self.hi * s, &self.lo * s)
        }
    }

    /// General interval product.
    pub fn mul(&self, other: &RatInterval) -> RatInterval {
        let candidates = [
            &self.lo * &other.lo,
            &self.lo * &other.hi,
            &self.hi * &other.lo,
            &self.hi * &other.hi,
        ];
        let lo = candidates.iter().min().unwrap().clone();
        let hi = candidates.iter().max().unwrap().clone();
        RatInterval::new(lo, hi)
    }

    /// Largest possible distance from `v` to a point of the interval.
    pub fn max_distance(&self, v: &Rational) -> Rational {
        let a = num_traits::Signed::abs(&(&self.lo - v));
        let b = num_traits::Signed::abs(&(&self.hi - v));
        a.max(b)
    }

    /// Smallest possible distance from `v` to a point of the interval
    /// (zero when contained).
    pub fn min_distance(&self, v: &Rational) -> Rational {
        if self.contains(v) {
            return Rational::zero();
        }
        let a = num_traits::Signed::abs(&(&self.lo - v));
        let b = num_traits::Signed::abs(&(&self.hi - v));
        a.min(b)
    }
}

impl fmt::Debug for RatInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    #[test]
    fn arithmetic_keeps_containment() {
        let a = RatInterval::new(rat(1, 3), rat(1, 2));
        let b = RatInterval::new(rat(-1, 5), rat(1, 7));
        let s = a.add(&b);
        assert!(s.contains(&(rat(2, 5) + rat(0, 1))));
        let p = a.mul(&b);
        assert!(p.contains(&(rat(1, 3) * rat(1, 7))));
        assert!(p.contains(&(rat(1, 2) * rat(-1, 5))));
    }

    #[test]
    fn distances() {
        let a = RatInterval::new(rat(1, 1), rat(2, 1));
        assert_eq!(a.min_distance(&rat(3, 1)), rat(1, 1));
        assert_eq!(a.max_distance(&rat(3, 1)), rat(2, 1));
        assert_eq!(a.min_distance(&rat(3, 2)), rat(0, 1));
    }
}
