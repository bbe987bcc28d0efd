//! Arithmetic in the field with eight elements.
//!
//! Elements are stored as 3-bit polynomials `b0 + b1*a + b2*a^2` over F2, reduced
//! modulo `t^3 + t + 1`, so the generator `a` satisfies `a^3 = a + 1`. Addition is
//! XOR. Multiplication goes through a table built at compile time from carry-less
//! multiplication and reduction.
//!
//! The small field F4 (reduction `w^2 = w + 1`) lives here too; it is only used to
//! check that the analogous twisted construction over F4 degenerates.

use std::fmt;
use std::ops::{Add, AddAssign, Mul};

use serde::{Deserialize, Serialize};

const REDUCTION: u8 = 0b1011;

const fn clmul_reduce(a: u8, b: u8) -> u8 {
    let mut p: u8 = 0;
    let mut i = 0;
    while i < 3 {
        if (b >> i) & 1 == 1 {
            p ^= a << i;
        }
        i += 1;
    }
    // degrees 4 and 3 are the only ones that can overflow a 3-bit value
    if (p >> 4) & 1 == 1 {
        p ^= REDUCTION << 1;
    }
    if (p >> 3) & 1 == 1 {
        p ^= REDUCTION;
    }
    p
}

const fn build_mul_table() -> [[u8; 8]; 8] {
    let mut t = [[0u8; 8]; 8];
    let mut a = 0;
    while a < 8 {
        let mut b = 0;
        while b < 8 {
            t[a][b] = clmul_reduce(a as u8, b as u8);
            b += 1;
        }
        a += 1;
    }
    t
}

static MUL_TABLE: [[u8; 8]; 8] = build_mul_table();

// a^3 must reduce to a + 1.
const _: () = assert!(clmul_reduce(clmul_reduce(2, 2), 2) == 0b011);

/// Powers `a^0 .. a^6` of the generator.
const POWERS: [u8; 7] = {
    let mut p = [0u8; 7];
    let mut acc = 1u8;
    let mut i = 0;
    while i < 7 {
        p[i] = acc;
        acc = clmul_reduce(acc, 2);
        i += 1;
    }
    p
};

/// An element of F2.
#[derive(
    Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default, Serialize, Deserialize,
)]
#[serde(into = "u8", try_from = "u8")]
pub struct F2(bool);

impl F2 {
    pub const ZERO: F2 = F2(false);
    pub const ONE: F2 = F2(true);

    pub const fn new(bit: bool) -> Self {
        F2(bit)
    }

    /// Parity of an integer count.
    pub const fn parity(count: u32) -> Self {
        F2(count & 1 == 1)
    }

    pub const fn is_one(self) -> bool {
        self.0
    }

    pub const fn bit(self) -> u8 {
        self.0 as u8
    }
}

impl Add for F2 {
    type Output = F2;
    #[allow(clippy::suspicious_arithmetic_impl)] // characteristic 2
    fn add(self, rhs: F2) -> F2 {
        F2(self.0 ^ rhs.0)
    }
}

impl AddAssign for F2 {
    #[allow(clippy::suspicious_op_assign_impl)] // characteristic 2
    fn add_assign(&mut self, rhs: F2) {
        self.0 ^= rhs.0;
    }
}

impl Mul for F2 {
    type Output = F2;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, rhs: F2) -> F2 {
        F2(self.0 & rhs.0)
    }
}

impl From<F2> for u8 {
    fn from(b: F2) -> u8 {
        b.bit()
    }
}

impl TryFrom<u8> for F2 {
    type Error = String;
    fn try_from(v: u8) -> Result<Self, Self::Error> {
        match v {
            0 => Ok(F2::ZERO),
            1 => Ok(F2::ONE),
            _ => Err(format!("{v} is not an element of F2")),
        }
    }
}

impl fmt::Display for F2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.bit())
    }
}

/// An element of F8 in the polynomial basis `{1, a, a^2}`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(into = "u8", try_from = "u8")]
pub struct F8(u8);

impl F8 {
    pub const ZERO: F8 = F8(0);
    pub const ONE: F8 = F8(1);
    /// The generator, with `ALPHA^3 = ALPHA + 1`.
    pub const ALPHA: F8 = F8(2);

    /// Builds an element from its low three bits. Returns `None` for values above 7.
    pub const fn new(bits: u8) -> Option<Self> {
        if bits < 8 {
            Some(F8(bits))
        } else {
            None
        }
    }

    pub const fn bits(self) -> u8 {
        self.0
    }

    pub const fn index(self) -> usize {
        self.0 as usize
    }

    pub const fn is_zero(self) -> bool {
        self.0 == 0
    }

    /// All eight elements in bit order.
    pub fn all() -> impl Iterator<Item = F8> + Clone {
        (0..8u8).map(F8)
    }

    /// The seven nonzero elements in bit order.
    pub fn nonzero() -> impl Iterator<Item = F8> + Clone {
        (1..8u8).map(F8)
    }

    /// `ALPHA^j` for any integer exponent, read modulo 7.
    pub fn alpha_pow(j: i64) -> F8 {
        F8(POWERS[j.rem_euclid(7) as usize])
    }

    /// The exponent `j` in `1..=7` with `ALPHA^j = self`, or `None` for zero.
    pub fn log(self) -> Option<u8> {
        if self.is_zero() {
            return None;
        }
        let j = POWERS.iter().position(|&p| p == self.0)? as u8;
        Some(if j == 0 { 7 } else { j })
    }

    pub fn pow(self, n: u32) -> F8 {
        // pow(0, 0) = 1
        (0..n).fold(F8::ONE, |acc, _| acc * self)
    }

    /// The Frobenius map `x -> x^2`.
    pub fn frobenius(self) -> F8 {
        self * self
    }

    /// `x + x^2 + x^4`, which always lands in the prime field.
    pub fn trace(self) -> F2 {
        let x2 = self.frobenius();
        let t = self + x2 + x2.frobenius();
        debug_assert!(t.0 <= 1, "trace left the prime field");
        F2(t.0 == 1)
    }

    /// `x^6`: the inverse for nonzero `x`, and zero at zero.
    pub fn bar(self) -> F8 {
        self.pow(6)
    }

    /// Label used in reports: `"0"` for zero, otherwise `"a^j"` with `j` in `1..=7`
    /// (so the unit element reads `"a^7"`).
    pub fn label(self) -> String {
        match self.log() {
            None => "0".to_string(),
            Some(j) => format!("a^{j}"),
        }
    }
}

impl Add for F8 {
    type Output = F8;
    #[allow(clippy::suspicious_arithmetic_impl)] // characteristic 2
    fn add(self, rhs: F8) -> F8 {
        F8(self.0 ^ rhs.0)
    }
}

impl AddAssign for F8 {
    #[allow(clippy::suspicious_op_assign_impl)] // characteristic 2
    fn add_assign(&mut self, rhs: F8) {
        self.0 ^= rhs.0;
    }
}

impl Mul for F8 {
    type Output = F8;
    fn mul(self, rhs: F8) -> F8 {
        F8(MUL_TABLE[self.index()][rhs.index()])
    }
}

impl fmt::Debug for F8 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F8({})", self.label())
    }
}

impl fmt::Display for F8 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

impl From<F8> for u8 {
    fn from(x: F8) -> u8 {
        x.0
    }
}

impl TryFrom<u8> for F8 {
    type Error = String;
    fn try_from(v: u8) -> Result<Self, Self::Error> {
        F8::new(v).ok_or_else(|| format!("{v} is not a 3-bit field element"))
    }
}

/// An element of F4 as a 2-bit polynomial `b0 + b1*w` with `w^2 = w + 1`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct F4(u8);

impl F4 {
    pub const ZERO: F4 = F4(0);
    pub const ONE: F4 = F4(1);
    pub const OMEGA: F4 = F4(2);

    pub fn new(bits: u8) -> Option<Self> {
        (bits < 4).then_some(F4(bits))
    }

    pub fn all() -> impl Iterator<Item = F4> + Clone {
        (0..4u8).map(F4)
    }

    pub const fn bits(self) -> u8 {
        self.0
    }

    pub const fn index(self) -> usize {
        self.0 as usize
    }

    pub fn square(self) -> F4 {
        self * self
    }

    /// `x + x^2`.
    pub fn trace(self) -> F2 {
        let t = self.0 ^ self.square().0;
        debug_assert!(t <= 1);
        F2(t == 1)
    }
}

impl Add for F4 {
    type Output = F4;
    #[allow(clippy::suspicious_arithmetic_impl)] // characteristic 2
    fn add(self, rhs: F4) -> F4 {
        F4(self.0 ^ rhs.0)
    }
}

impl Mul for F4 {
    type Output = F4;
    #[allow(clippy::suspicious_arithmetic_impl)] // carry-less product mod t^2 + t + 1
    fn mul(self, rhs: F4) -> F4 {
        let (a, b) = (self.0, rhs.0);
        let mut p = 0u8;
        for i in 0..2 {
            if (b >> i) & 1 == 1 {
                p ^= a << i;
            }
        }
        if (p >> 2) & 1 == 1 {
            p ^= 0b111;
        }
        F4(p)
    }
}
