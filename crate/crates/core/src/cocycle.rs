//! The sign function that twists the group algebra of F8.
//!
//! `phi(x, y) = tr(y * bar(x))` takes values in F2 and `sigma = (-1)^phi` is the
//! sign attached to `e^x e^y`. Its coboundary is the linear-independence indicator
//! of the triple, which is what makes the resulting algebra nonassociative.
//!
//! All F2 sums here are parities; a [`Sign`] only appears once a value leaves for
//! the algebra.

use std::ops::{Mul, Neg};
use std::sync::LazyLock;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::gf8::{F2, F8};

/// `phi(x, y) = tr(y * x^6)`.
pub fn phi(x: F8, y: F8) -> F2 {
    (y * x.bar()).trace()
}

/// `(-1)^phi(x, y)`.
pub fn sigma(x: F8, y: F8) -> Sign {
    Sign::from_parity(phi(x, y))
}

/// `phi(y,z) + phi(x+y,z) + phi(x,y+z) + phi(x,y)` over F2.
pub fn delta_phi(x: F8, y: F8, z: F8) -> F2 {
    STANDARD.delta_phi(x, y, z)
}

/// A sign `+1` or `-1`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(into = "i8", try_from = "i8")]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    /// `(-1)^bit`.
    pub fn from_parity(bit: F2) -> Sign {
        if bit.is_one() {
            Sign::Minus
        } else {
            Sign::Plus
        }
    }

    pub fn to_i8(self) -> i8 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn is_minus(self) -> bool {
        self == Sign::Minus
    }
}

impl Mul for Sign {
    type Output = Sign;
    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

impl Neg for Sign {
    type Output = Sign;
    fn neg(self) -> Sign {
        self * Sign::Minus
    }
}

impl From<Sign> for i8 {
    fn from(s: Sign) -> i8 {
        s.to_i8()
    }
}

impl TryFrom<i8> for Sign {
    type Error = String;
    fn try_from(v: i8) -> Result<Self, Self::Error> {
        match v {
            1 => Ok(Sign::Plus),
            -1 => Ok(Sign::Minus),
            _ => Err(format!("{v} is not a sign")),
        }
    }
}

static STANDARD: LazyLock<CocycleTable> = LazyLock::new(CocycleTable::from_formula);

/// The 8x8 table of `phi` values that drives octonion multiplication.
///
/// The table is a value so that verification code can run against a deliberately
/// corrupted copy and confirm that the checks notice.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CocycleTable {
    bits: [[F2; 8]; 8],
}

impl CocycleTable {
    fn from_formula() -> Self {
        let mut bits = [[F2::ZERO; 8]; 8];
        for x in F8::all() {
            for y in F8::all() {
                bits[x.index()][y.index()] = phi(x, y);
            }
        }
        CocycleTable { bits }
    }

    /// The table of `phi(x, y) = tr(y * x^6)`.
    pub fn standard() -> &'static CocycleTable {
        &STANDARD
    }

    /// A copy with the single entry at `(x, y)` flipped.
    pub fn with_flipped(&self, x: F8, y: F8) -> CocycleTable {
        let mut t = self.clone();
        t.bits[x.index()][y.index()] += F2::ONE;
        t
    }

    pub fn is_standard(&self) -> bool {
        *self == *STANDARD
    }

    #[inline]
    pub fn phi(&self, x: F8, y: F8) -> F2 {
        self.bits[x.index()][y.index()]
    }

    #[inline]
    pub fn sigma(&self, x: F8, y: F8) -> Sign {
        Sign::from_parity(self.phi(x, y))
    }

    pub fn delta_phi(&self, x: F8, y: F8, z: F8) -> F2 {
        self.phi(y, z) + self.phi(x + y, z) + self.phi(x, y + z) + self.phi(x, y)
    }

    /// Rows indexed by `x`, columns by `y`, both in field bit order.
    pub fn rows(&self) -> [[u8; 8]; 8] {
        self.bits.map(|row| row.map(F2::bit))
    }
}

fn check_arity(xs: &[F8]) -> Result<(), Error> {
    if (1..=3).contains(&xs.len()) {
        Ok(())
    } else {
        Err(Error::IndArity(xs.len()))
    }
}

/// 1 iff the vectors are linearly independent over F2, by Gaussian elimination on
/// their 3-bit patterns.
pub fn ind_rank(xs: &[F8]) -> Result<F2, Error> {
    check_arity(xs)?;
    let mut pivots: Vec<u8> = Vec::with_capacity(3);
    for x in xs {
        let mut v = x.bits();
        for &p in &pivots {
            // p's leading bit is cleared from v if present
            let lead = 7 - p.leading_zeros() as u8;
            if (v >> lead) & 1 == 1 {
                v ^= p;
            }
        }
        if v != 0 {
            pivots.push(v);
            pivots.sort_unstable_by(|a, b| b.cmp(a));
        }
    }
    Ok(F2::new(pivots.len() == xs.len()))
}

/// The parity of the number of sign vectors `e` in `F2^n` with `sum e_i x_i = 0`.
pub fn ind_sum(xs: &[F8]) -> Result<F2, Error> {
    check_arity(xs)?;
    let n = xs.len();
    let zeros = (0u32..1 << n)
        .filter(|eps| {
            xs.iter()
                .enumerate()
                .filter(|(i, _)| (eps >> i) & 1 == 1)
                .fold(F8::ZERO, |acc, (_, &x)| acc + x)
                .is_zero()
        })
        .count();
    Ok(F2::parity(zeros as u32))
}
