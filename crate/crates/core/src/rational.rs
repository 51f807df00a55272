//! Reduced fractions for elasticities and threshold arithmetic.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::monoid::gcd;

/// An exact fraction, always stored in lowest terms with a positive denominator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Rational {
    num: i64,
    den: i64,
}

impl Rational {
    /// Panics if `den` is zero.
    pub fn new(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        let sign = if den < 0 { -1 } else { 1 };
        let g = gcd(num.unsigned_abs(), den.unsigned_abs()).max(1) as i64;
        Rational {
            num: sign * num / g,
            den: sign * den / g,
        }
    }

    pub fn from_integer(n: i64) -> Self {
        Rational { num: n, den: 1 }
    }

    pub fn numer(&self) -> i64 {
        self.num
    }

    pub fn denom(&self) -> i64 {
        self.den
    }

    pub fn is_integer(&self) -> bool {
        self.den == 1
    }

    pub fn floor(&self) -> i64 {
        self.num.div_euclid(self.den)
    }

    pub fn ceil(&self) -> i64 {
        -(-self.num).div_euclid(self.den)
    }

    pub fn recip(&self) -> Self {
        Rational::new(self.den, self.num)
    }
}

impl Default for Rational {
    fn default() -> Self {
        Rational::from_integer(0)
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_integer(n)
    }
}

impl std::ops::Add for Rational {
    type Output = Rational;
    fn add(self, rhs: Rational) -> Rational {
        Rational::new(self.num * rhs.den + rhs.num * self.den, self.den * rhs.den)
    }
}

impl std::ops::Sub for Rational {
    type Output = Rational;
    fn sub(self, rhs: Rational) -> Rational {
        Rational::new(self.num * rhs.den - rhs.num * self.den, self.den * rhs.den)
    }
}

impl std::ops::Mul for Rational {
    type Output = Rational;
    fn mul(self, rhs: Rational) -> Rational {
        Rational::new(self.num * rhs.num, self.den * rhs.den)
    }
}

impl std::ops::Div for Rational {
    type Output = Rational;
    fn div(self, rhs: Rational) -> Rational {
        Rational::new(self.num * rhs.den, self.den * rhs.num)
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        let lhs = self.num as i128 * other.den as i128;
        let rhs = other.num as i128 * self.den as i128;
        lhs.cmp(&rhs)
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn reduces_and_normalizes_sign() {
        let r = Rational::new(20, -6);
        assert_eq!((r.numer(), r.denom()), (-10, 3));
        assert_eq!(Rational::new(0, 7), Rational::from_integer(0));
        assert_eq!(Rational::new(10, 3).to_string(), "10/3");
        assert_eq!(Rational::new(6, 6).to_string(), "1");
    }

    #[test]
    fn rounding() {
        assert_eq!(Rational::new(80, 3).ceil(), 27);
        assert_eq!(Rational::new(80, 3).floor(), 26);
        assert_eq!(Rational::new(-7, 2).ceil(), -3);
        assert_eq!(Rational::new(-7, 2).floor(), -4);
        assert_eq!(Rational::from_integer(104).ceil(), 104);
    }

    #[test]
    fn arithmetic() {
        let half = Rational::new(1, 2);
        assert_eq!(half + half, Rational::from_integer(1));
        assert_eq!(Rational::new(3, 2) - Rational::from_integer(1), half);
        assert_eq!(
            Rational::from_integer(52) / half,
            Rational::from_integer(104)
        );
        assert_eq!(Rational::new(2, 3) * Rational::new(3, 4), half);
        assert_eq!(Rational::new(10, 3).recip(), Rational::new(3, 10));
    }

    proptest! {
        #[test]
        fn always_reduced(n in -1000i64..1000, d in 1i64..1000) {
            let r = Rational::new(n, d);
            prop_assert!(r.denom() > 0);
            prop_assert_eq!(gcd(r.numer().unsigned_abs(), r.denom() as u64).max(1), 1);
            // same value
            prop_assert_eq!(r.numer() as i128 * d as i128, n as i128 * r.denom() as i128);
        }

        #[test]
        fn order_matches_cross_multiplication(a in -500i64..500, b in 1i64..60, c in -500i64..500, d in 1i64..60) {
            let (x, y) = (Rational::new(a, b), Rational::new(c, d));
            prop_assert_eq!(x.cmp(&y), (a * d).cmp(&(c * b)));
        }
    }
}
