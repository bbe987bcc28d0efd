//! Exact coefficient rings.
//!
//! Any type that forms a commutative ring under the usual operator traits can be
//! used as an octonion coefficient. [`Dyadic`] covers everything in `1/2 Z`, `1/4 Z`
//! and so on; general rationals come from `num_rational`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::str::FromStr;

use num_rational::Rational64;
use num_traits::{One, Zero};

use crate::error::Error;

/// A commutative ring with exact arithmetic.
pub trait Scalar:
    Clone
    + PartialEq
    + fmt::Debug
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
}

impl<T> Scalar for T where
    T: Clone
        + PartialEq
        + fmt::Debug
        + Zero
        + One
        + Add<Output = T>
        + Sub<Output = T>
        + Mul<Output = T>
        + Neg<Output = T>
{
}

/// A rational number `num / 2^exp`, kept in lowest terms.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Dyadic {
    num: i64,
    exp: u32,
}

impl Dyadic {
    pub const HALF: Dyadic = Dyadic { num: 1, exp: 1 };

    /// `num / 2^exp`.
    pub fn new(num: i64, exp: u32) -> Self {
        Dyadic { num, exp }.normalized()
    }

    pub const fn from_int(n: i64) -> Self {
        Dyadic { num: n, exp: 0 }
    }

    /// `n / 2`.
    pub fn halves(n: i64) -> Self {
        Dyadic::new(n, 1)
    }

    fn normalized(mut self) -> Self {
        if self.num == 0 {
            self.exp = 0;
        }
        while self.exp > 0 && self.num % 2 == 0 {
            self.num /= 2;
            self.exp -= 1;
        }
        self
    }

    pub fn numerator(self) -> i64 {
        self.num
    }

    /// The denominator `2^exp`.
    pub fn denominator(self) -> i64 {
        1i64 << self.exp
    }

    pub fn exponent(self) -> u32 {
        self.exp
    }

    pub fn is_integer(self) -> bool {
        self.exp == 0
    }

    /// The value times `2^k`, if that is an integer.
    pub fn scaled_integer(self, k: u32) -> Option<i64> {
        if self.exp > k {
            None
        } else {
            self.num.checked_mul(1i64 << (k - self.exp))
        }
    }

    pub fn to_rational(self) -> Rational64 {
        Rational64::new(self.num, self.denominator())
    }

    /// Always `"p/q"`, including `"n/1"` for integers.
    pub fn fraction_string(self) -> String {
        format!("{}/{}", self.num, self.denominator())
    }

    fn aligned(self, rhs: Dyadic) -> (i64, i64, u32) {
        let exp = self.exp.max(rhs.exp);
        let a = self
            .num
            .checked_shl(exp - self.exp)
            .expect("dyadic overflow");
        let b = rhs.num.checked_shl(exp - rhs.exp).expect("dyadic overflow");
        (a, b, exp)
    }
}

impl fmt::Debug for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exp == 0 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.denominator())
        }
    }
}

impl FromStr for Dyadic {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        let bad = || Error::Parse(format!("not a dyadic fraction: {s:?}"));
        let (p, q) = match s.split_once('/') {
            Some((p, q)) => (p.trim(), q.trim()),
            None => (s.trim(), "1"),
        };
        let num: i64 = p.parse().map_err(|_| bad())?;
        let den: i64 = q.parse().map_err(|_| bad())?;
        if den <= 0 || den.count_ones() != 1 {
            return Err(bad());
        }
        Ok(Dyadic::new(num, den.trailing_zeros()))
    }
}

impl Add for Dyadic {
    type Output = Dyadic;
    fn add(self, rhs: Dyadic) -> Dyadic {
        let (a, b, exp) = self.aligned(rhs);
        Dyadic::new(a.checked_add(b).expect("dyadic overflow"), exp)
    }
}

impl AddAssign for Dyadic {
    fn add_assign(&mut self, rhs: Dyadic) {
        *self = *self + rhs;
    }
}

impl Sub for Dyadic {
    type Output = Dyadic;
    fn sub(self, rhs: Dyadic) -> Dyadic {
        self + (-rhs)
    }
}

impl Neg for Dyadic {
    type Output = Dyadic;
    fn neg(self) -> Dyadic {
        Dyadic {
            num: -self.num,
            exp: self.exp,
        }
    }
}

impl Mul for Dyadic {
    type Output = Dyadic;
    #[allow(clippy::suspicious_arithmetic_impl)] // denominators are powers of two
    fn mul(self, rhs: Dyadic) -> Dyadic {
        Dyadic::new(
            self.num.checked_mul(rhs.num).expect("dyadic overflow"),
            self.exp + rhs.exp,
        )
    }
}

impl Zero for Dyadic {
    fn zero() -> Self {
        Dyadic::from_int(0)
    }
    fn is_zero(&self) -> bool {
        self.num == 0
    }
}

impl One for Dyadic {
    fn one() -> Self {
        Dyadic::from_int(1)
    }
}

impl From<i64> for Dyadic {
    fn from(n: i64) -> Self {
        Dyadic::from_int(n)
    }
}

impl PartialOrd for Dyadic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Dyadic {
    fn cmp(&self, other: &Self) -> Ordering {
        let (a, b, _) = self.aligned(*other);
        a.cmp(&b)
    }
}
