//! Exact rational arithmetic for degree computations.
//!
//! Every degree in this crate is a ratio of small integer counts, and the
//! theorems being checked are exact inequalities with attainable boundary
//! cases, so no floating point is ever involved. Values are kept in lowest
//! terms with a positive denominator. The magnitudes that arise are bounded
//! by products of group orders (far below `i64::MAX`); overflow checks stay
//! enabled in release builds as a backstop.

use std::fmt;
use std::ops::{Add, Div, Mul, Sub};

use num_rational::Rational64;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

/// An exact rational number in lowest terms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(Rational64);

impl Rational {
    /// Creates `num/den`, reduced. Panics if `den` is zero.
    pub fn new(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Rational(Rational64::new(num, den))
    }

    pub fn from_integer(n: i64) -> Self {
        Rational(Rational64::from_integer(n))
    }

    /// Ratio of two unsigned counts, the common case for degrees.
    pub fn ratio(num: usize, den: usize) -> Self {
        Self::new(num as i64, den as i64)
    }

    pub fn zero() -> Self {
        Self::from_integer(0)
    }

    pub fn one() -> Self {
        Self::from_integer(1)
    }

    pub fn numer(&self) -> i64 {
        *self.0.numer()
    }

    pub fn denom(&self) -> i64 {
        *self.0.denom()
    }

    pub fn is_one(&self) -> bool {
        self.numer() == 1 && self.denom() == 1
    }
}

impl fmt::Display for Rational {
    /// Always prints `num/den`, even for integers, so report cells have a
    /// uniform shape.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numer(), self.denom())
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("Rational", 2)?;
        s.serialize_field("num", &self.numer())?;
        s.serialize_field("den", &self.denom())?;
        s.end()
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

impl Div for Rational {
    type Output = Rational;
    fn div(self, rhs: Rational) -> Rational {
        assert!(rhs.numer() != 0, "division by zero rational");
        Rational(self.0 / rhs.0)
    }
}

impl std::iter::Sum for Rational {
    fn sum<I: Iterator<Item = Rational>>(iter: I) -> Rational {
        iter.fold(Rational::zero(), Add::add)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn reduces_to_lowest_terms() {
        let r = Rational::new(6, 8);
        assert_eq!((r.numer(), r.denom()), (3, 4));
        let r = Rational::new(-6, -8);
        assert_eq!((r.numer(), r.denom()), (3, 4));
        let r = Rational::new(6, -8);
        assert_eq!((r.numer(), r.denom()), (-3, 4));
    }

    #[test]
    fn display_always_slash_form() {
        assert_eq!(Rational::one().to_string(), "1/1");
        assert_eq!(Rational::ratio(5, 12).to_string(), "5/12");
        assert_eq!(Rational::new(-1, 2).to_string(), "-1/2");
    }

    #[test]
    fn json_num_den_pair() {
        let s = serde_json::to_string(&Rational::ratio(7, 16)).unwrap();
        assert_eq!(s, r#"{"num":7,"den":16}"#);
    }

    proptest! {
        #[test]
        fn arithmetic_matches_cross_multiplication(
            a in -200i64..200, b in 1i64..50, c in -200i64..200, d in 1i64..50,
        ) {
            let x = Rational::new(a, b);
            let y = Rational::new(c, d);
            // x <= y iff a*d <= c*b for positive denominators
            prop_assert_eq!(x <= y, a * d <= c * b);
            let s = x + y;
            prop_assert_eq!(s.numer() * (b * d), (a * d + c * b) * s.denom());
        }

        #[test]
        fn denominator_always_positive(a in -500i64..500, b in -50i64..50) {
            prop_assume!(b != 0);
            let r = Rational::new(a, b);
            prop_assert!(r.denom() > 0);
            let g = gcd(r.numer().unsigned_abs(), r.denom().unsigned_abs());
            prop_assert!(g == 1 || r.numer() == 0);
        }
    }

    fn gcd(a: u64, b: u64) -> u64 {
        if b == 0 {
            a
        } else {
            gcd(b, a % b)
        }
    }
}
