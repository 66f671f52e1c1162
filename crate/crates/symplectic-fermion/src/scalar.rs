//! Exact scalars and half-integer bookkeeping.
//!
//! All core computation is over the rationals: [`Scalar`] is an
//! arbitrary-precision fraction kept in canonical reduced form (positive
//! denominator, gcd(num, den) = 1) by construction.
//!
//! Mode levels and weights live on the half-integer lattice (1/2)Z, stored
//! as [`Half`], twice the value in an `i64`.

use std::fmt;
use std::ops::{Add, AddAssign, Neg, Sub, SubAssign};

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Zero};

/// Exact rational scalar. `BigRational` keeps itself reduced with a
/// positive denominator, which is exactly the canonical form we need.
pub type Scalar = BigRational;

/// Scalar from an integer.
pub fn int(n: i64) -> Scalar {
    BigRational::from_integer(BigInt::from(n))
}

/// Scalar `n / d`.
pub fn rat(n: i64, d: i64) -> Scalar {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Generalized binomial coefficient `binom(m, k) = m(m-1)...(m-k+1) / k!`
/// for integer `m` (of either sign) and `k >= 0`. Returns 0 for `k < 0`.
pub fn binom_int(m: i64, k: i64) -> Scalar {
    if k < 0 {
        return Scalar::zero();
    }
    let mut num = BigInt::one();
    for j in 0..k {
        num *= BigInt::from(m - j);
    }
    let mut den = BigInt::one();
    for j in 1..=k {
        den *= BigInt::from(j);
    }
    BigRational::new(num, den)
}

/// Generalized binomial coefficient with a rational (e.g. half-integer)
/// upper argument: `binom(x, k) = x(x-1)...(x-k+1) / k!`.
pub fn binom_scalar(x: &Scalar, k: i64) -> Scalar {
    if k < 0 {
        return Scalar::zero();
    }
    let mut acc = Scalar::one();
    for j in 0..k {
        acc *= x - int(j);
    }
    let mut den = BigInt::one();
    for j in 1..=k {
        den *= BigInt::from(j);
    }
    acc / BigRational::from_integer(den)
}

/// `n!` as a scalar.
pub fn factorial(n: i64) -> Scalar {
    let mut acc = BigInt::one();
    for j in 2..=n {
        acc *= BigInt::from(j);
    }
    BigRational::from_integer(acc)
}

/// Half-integer, stored as twice its value. `Half(3)` is 3/2, `Half(-2)` is -1.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Half(pub i64);

impl Half {
    pub const ZERO: Half = Half(0);

    /// The integer `n` as a half-integer.
    pub fn from_int(n: i64) -> Half {
        Half(2 * n)
    }

    /// `n + 1/2`.
    pub fn half_odd(n: i64) -> Half {
        Half(2 * n + 1)
    }

    pub fn is_integer(self) -> bool {
        self.0 % 2 == 0
    }

    /// The integer value; panics if not an integer.
    pub fn to_int(self) -> i64 {
        assert!(self.is_integer(), "half-integer {} is not an integer", self);
        self.0 / 2
    }

    pub fn to_scalar(self) -> Scalar {
        rat(self.0, 2)
    }

    pub fn is_positive(self) -> bool {
        self.0 > 0
    }

    pub fn is_negative(self) -> bool {
        self.0 < 0
    }
}

impl Add for Half {
    type Output = Half;
    fn add(self, rhs: Half) -> Half {
        Half(self.0 + rhs.0)
    }
}

impl AddAssign for Half {
    fn add_assign(&mut self, rhs: Half) {
        self.0 += rhs.0;
    }
}

impl Sub for Half {
    type Output = Half;
    fn sub(self, rhs: Half) -> Half {
        Half(self.0 - rhs.0)
    }
}

impl SubAssign for Half {
    fn sub_assign(&mut self, rhs: Half) {
        self.0 -= rhs.0;
    }
}

impl Neg for Half {
    type Output = Half;
    fn neg(self) -> Half {
        Half(-self.0)
    }
}

impl fmt::Display for Half {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 % 2 == 0 {
            write!(f, "{}", self.0 / 2)
        } else {
            write!(f, "{}/2", self.0)
        }
    }
}

/// Render a scalar compactly ("3", "-1/8").
pub fn fmt_scalar(s: &Scalar) -> String {
    if s.denom().is_one() {
        format!("{}", s.numer())
    } else {
        format!("{}/{}", s.numer(), s.denom())
    }
}

/// True if `s` is the integer `n`.
pub fn is_int(s: &Scalar, n: i64) -> bool {
    *s == int(n)
}

/// Sign as +1/-1 scalar from a swap-count parity.
pub fn sign_of_parity(swaps: u64) -> Scalar {
    if swaps % 2 == 0 {
        Scalar::one()
    } else {
        -Scalar::one()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_negative_upper() {
        // binom(-1, k) = (-1)^k, the workhorse of the mode formula
        assert_eq!(binom_int(-1, 0), int(1));
        assert_eq!(binom_int(-1, 1), int(-1));
        assert_eq!(binom_int(-1, 2), int(1));
        assert_eq!(binom_int(-3, 2), int(6));
        assert_eq!(binom_int(5, 2), int(10));
        // vanishing range: 0 <= m < k
        assert_eq!(binom_int(1, 2), int(0));
        assert_eq!(binom_int(0, 1), int(0));
    }

    #[test]
    fn binomial_half_integer() {
        // binom(1/2, 2) = (1/2)(-1/2)/2 = -1/8
        assert_eq!(binom_scalar(&rat(1, 2), 2), rat(-1, 8));
        assert_eq!(binom_scalar(&rat(-1, 2), 1), rat(-1, 2));
        assert_eq!(binom_scalar(&rat(3, 2), 0), int(1));
    }

    #[test]
    fn half_arithmetic() {
        let a = Half::half_odd(0); // 1/2
        let b = Half::from_int(2);
        assert_eq!(a + a, Half::from_int(1));
        assert_eq!((b - a).to_scalar(), rat(3, 2));
        assert!(!a.is_integer());
        assert_eq!(format!("{}", a), "1/2");
        assert_eq!(format!("{}", -b), "-2");
    }
}
