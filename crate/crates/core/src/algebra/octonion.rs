use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::Rational64;
use num_traits::{One, Zero};
use serde::de::{self, MapAccess, Visitor};
use serde::ser::SerializeMap;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::scalar::{Dyadic, Scalar};
use crate::cocycle::{CocycleTable, Sign};
use crate::error::Error;
use crate::gf8::F8;

/// An element `sum_x a_x e^x` of the twisted group algebra over F8.
///
/// Coefficients are stored densely, indexed by the bit pattern of `x`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Octonion<T> {
    coeffs: [T; 8],
}

pub type DyadicOctonion = Octonion<Dyadic>;
pub type RationalOctonion = Octonion<Rational64>;
pub type IntOctonion = Octonion<i64>;

impl<T: Scalar> Octonion<T> {
    pub fn new(coeffs: [T; 8]) -> Self {
        Octonion { coeffs }
    }

    pub fn zero() -> Self {
        Octonion::new(std::array::from_fn(|_| T::zero()))
    }

    /// The identity `e^0`.
    pub fn one() -> Self {
        Octonion::basis(F8::ZERO)
    }

    /// `e^x`.
    pub fn basis(x: F8) -> Self {
        let mut o: Octonion<T> = Octonion::zero();
        o.coeffs[x.index()] = T::one();
        o
    }

    /// `c * e^x`.
    pub fn monomial(x: F8, c: T) -> Self {
        let mut o: Octonion<T> = Octonion::zero();
        o.coeffs[x.index()] = c;
        o
    }

    /// A real scalar `c * e^0`.
    pub fn scalar(c: T) -> Self {
        Octonion::monomial(F8::ZERO, c)
    }

    pub fn coeff(&self, x: F8) -> &T {
        &self.coeffs[x.index()]
    }

    pub fn coeffs(&self) -> &[T; 8] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> [T; 8] {
        self.coeffs
    }

    pub fn map<U, F: FnMut(T) -> U>(self, f: F) -> Octonion<U> {
        Octonion {
            coeffs: self.coeffs.map(f),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(T::is_zero)
    }

    pub fn scale(&self, c: &T) -> Self {
        Octonion::new(self.coeffs.clone().map(|a| a * c.clone()))
    }

    /// Product under an explicit sign table. `(ab)_{x+y} += sigma(x,y) a_x b_y`.
    pub fn mul_with(&self, rhs: &Self, table: &CocycleTable) -> Self {
        let mut out: Octonion<T> = Octonion::zero();
        for x in F8::all() {
            let a = &self.coeffs[x.index()];
            if a.is_zero() {
                continue;
            }
            for y in F8::all() {
                let b = &rhs.coeffs[y.index()];
                if b.is_zero() {
                    continue;
                }
                let term = a.clone() * b.clone();
                let slot = &mut out.coeffs[(x + y).index()];
                *slot = match table.sigma(x, y) {
                    Sign::Plus => slot.clone() + term,
                    Sign::Minus => slot.clone() - term,
                };
            }
        }
        out
    }

    /// Octonion product.
    pub fn multiply(&self, rhs: &Self) -> Self {
        self.mul_with(rhs, CocycleTable::standard())
    }

    /// `Re(a) - Im(a)`.
    pub fn conjugate(&self) -> Self {
        let mut c = self.coeffs.clone().map(|a| -a);
        c[0] = self.coeffs[0].clone();
        Octonion::new(c)
    }

    pub fn real_part(&self) -> Self {
        Octonion::scalar(self.coeffs[0].clone())
    }

    pub fn imag_part(&self) -> Self {
        let mut c = self.coeffs.clone();
        c[0] = T::zero();
        Octonion::new(c)
    }

    /// `a + a^*`, which is the real scalar `2 a_0`.
    pub fn trace(&self) -> T {
        self.coeffs[0].clone() + self.coeffs[0].clone()
    }

    /// `sum_x a_x^2`.
    pub fn norm(&self) -> T {
        self.coeffs
            .iter()
            .fold(T::zero(), |acc, a| acc + a.clone() * a.clone())
    }

    /// The norm, after confirming that `a a^*` really is that real scalar.
    pub fn norm_checked(&self) -> Result<T, Error> {
        self.norm_checked_with(CocycleTable::standard())
    }

    pub fn norm_checked_with(&self, table: &CocycleTable) -> Result<T, Error> {
        let n = self.norm();
        let product = self.mul_with(&self.conjugate(), table);
        if product == Octonion::scalar(n.clone()) {
            Ok(n)
        } else {
            Err(Error::NormNotScalar(format!("{product:?}")))
        }
    }

    /// `(ab)c - a(bc)`.
    pub fn associator(a: &Self, b: &Self, c: &Self) -> Self {
        Octonion::associator_with(a, b, c, CocycleTable::standard())
    }

    pub fn associator_with(a: &Self, b: &Self, c: &Self, table: &CocycleTable) -> Self {
        let left = a.mul_with(b, table).mul_with(c, table);
        let right = a.mul_with(&b.mul_with(c, table), table);
        left - right
    }

    /// Relabels every basis index through `f`. Only meaningful when `f` permutes F8.
    pub fn relabel<F: Fn(F8) -> F8>(&self, f: F) -> Self {
        let mut out: Octonion<T> = Octonion::zero();
        for x in F8::all() {
            out.coeffs[f(x).index()] = self.coeffs[x.index()].clone();
        }
        out
    }
}

impl Octonion<Rational64> {
    /// `a^* / N(a)`, or `None` for zero.
    pub fn inverse(&self) -> Option<Self> {
        let n = self.norm();
        if n.is_zero() {
            return None;
        }
        Some(self.conjugate().map(|c| c / n))
    }
}

impl<T: Scalar> Add for Octonion<T> {
    type Output = Octonion<T>;
    fn add(self, rhs: Self) -> Self {
        let mut c = self.coeffs;
        for (a, b) in c.iter_mut().zip(rhs.coeffs) {
            *a = a.clone() + b;
        }
        Octonion::new(c)
    }
}

impl<T: Scalar> Sub for Octonion<T> {
    type Output = Octonion<T>;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl<T: Scalar> Neg for Octonion<T> {
    type Output = Octonion<T>;
    fn neg(self) -> Self {
        Octonion::new(self.coeffs.map(|a| -a))
    }
}

impl<T: Scalar> Mul for Octonion<T> {
    type Output = Octonion<T>;
    fn mul(self, rhs: Self) -> Self {
        self.multiply(&rhs)
    }
}

impl<T: Scalar> Mul for &Octonion<T> {
    type Output = Octonion<T>;
    fn mul(self, rhs: Self) -> Octonion<T> {
        self.multiply(rhs)
    }
}

impl<T: Scalar> Zero for Octonion<T> {
    fn zero() -> Self {
        Octonion::zero()
    }
    fn is_zero(&self) -> bool {
        Octonion::is_zero(self)
    }
}

impl<T: Scalar> One for Octonion<T> {
    fn one() -> Self {
        Octonion::one()
    }
}

impl<T: fmt::Debug> fmt::Debug for Octonion<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.coeffs.iter()).finish()
    }
}

impl<T: Scalar + fmt::Display> fmt::Display for Octonion<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for x in F8::all() {
            let c = &self.coeffs[x.index()];
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            write!(f, "({c})e^{}", x.bits())?;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// JSON key for the coefficient at `x`: `"e0"` for zero, `"e_aj"` for `a^j`.
pub fn json_key(x: F8) -> String {
    match x.log() {
        None => "e0".to_string(),
        Some(j) => format!("e_a{j}"),
    }
}

fn key_order() -> impl Iterator<Item = F8> {
    std::iter::once(F8::ZERO).chain((1..=7).map(F8::alpha_pow))
}

fn parse_key(k: &str) -> Option<F8> {
    if k == "e0" {
        return Some(F8::ZERO);
    }
    let j: i64 = k.strip_prefix("e_a")?.parse().ok()?;
    (1..=7).contains(&j).then(|| F8::alpha_pow(j))
}

impl Serialize for Octonion<Dyadic> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(8))?;
        for x in key_order() {
            map.serialize_entry(&json_key(x), &self.coeffs[x.index()].fraction_string())?;
        }
        map.end()
    }
}

impl<'de> Deserialize<'de> for Octonion<Dyadic> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct V;
        impl<'de> Visitor<'de> for V {
            type Value = Octonion<Dyadic>;
            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("an object with keys e0, e_a1 .. e_a7")
            }
            fn visit_map<A: MapAccess<'de>>(self, mut m: A) -> Result<Self::Value, A::Error> {
                let mut coeffs: [Option<Dyadic>; 8] = [None; 8];
                while let Some((k, v)) = m.next_entry::<String, String>()? {
                    let x = parse_key(&k).ok_or_else(|| de::Error::unknown_field(&k, &[]))?;
                    let c: Dyadic = v.parse().map_err(de::Error::custom)?;
                    if coeffs[x.index()].replace(c).is_some() {
                        return Err(de::Error::custom(format!("duplicate key {k}")));
                    }
                }
                let mut out = [Dyadic::zero(); 8];
                for x in F8::all() {
                    out[x.index()] = coeffs[x.index()]
                        .ok_or_else(|| de::Error::missing_field("octonion coefficient"))?;
                }
                Ok(Octonion::new(out))
            }
        }
        d.deserialize_map(V)
    }
}

/// `[e^x, e^y, e^z]` evaluated from the closed form
/// `(-1)^(phi(x,y)+phi(y,z)+phi(z,x)) (1 - (-1)^ind(x,y,z)) e^(x+y+z)`.
pub fn associator_formula(x: F8, y: F8, z: F8) -> IntOctonion {
    associator_formula_with(x, y, z, CocycleTable::standard())
}

pub fn associator_formula_with(x: F8, y: F8, z: F8, table: &CocycleTable) -> IntOctonion {
    let ind = crate::cocycle::ind_rank(&[x, y, z]).expect("three vectors");
    let parity = table.phi(x, y) + table.phi(y, z) + table.phi(z, x);
    let sign = Sign::from_parity(parity).to_i8() as i64;
    let factor = 1 - Sign::from_parity(ind).to_i8() as i64;
    Octonion::monomial(x + y + z, sign * factor)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(x: F8) -> IntOctonion {
        Octonion::basis(x)
    }

    fn a(j: i64) -> F8 {
        F8::alpha_pow(j)
    }

    #[test]
    fn basis_products() {
        assert_eq!(e(a(1)) * e(a(2)), e(a(4)));
        let b = Octonion::new([1, -2, 3, 0, 5, 0, -7, 8]);
        assert_eq!(e(F8::ZERO) * b.clone(), b);
        assert_eq!(b.clone() * e(F8::ZERO), b);
        for x in F8::nonzero() {
            assert_eq!(e(x) * e(x), -Octonion::one());
            for y in F8::nonzero().filter(|&y| y != x) {
                assert_eq!(e(x) * e(y), -(e(y) * e(x)));
            }
        }
    }

    #[test]
    fn conjugation_and_parts() {
        assert_eq!(e(F8::ZERO).conjugate(), e(F8::ZERO));
        for x in F8::nonzero() {
            assert_eq!(e(x).conjugate(), -e(x));
            assert_eq!(e(x).trace(), 0);
            assert_eq!(e(x).norm(), 1);
        }
        let b = e(a(1)) + Octonion::scalar(3);
        assert_eq!(b.real_part(), Octonion::scalar(3));
        assert_eq!(b.imag_part(), e(a(1)));
        assert_eq!(b.conjugate().conjugate(), b);
        assert_eq!(e(F8::ZERO).imag_part(), Octonion::zero());
        assert_eq!(e(F8::ZERO).trace(), 2);
    }

    #[test]
    fn half_sets_have_unit_norm() {
        // {0, 1, a, a^3} is a line since 1 + a = a^3
        let line = [F8::ZERO, F8::ONE, a(1), a(3)];
        let mut h = Octonion::<Dyadic>::zero();
        for &x in &line {
            h = h + Octonion::monomial(x, Dyadic::HALF);
        }
        assert_eq!(h.trace(), Dyadic::one());
        assert_eq!(h.norm_checked().unwrap(), Dyadic::one());
        assert_eq!(Octonion::<Dyadic>::zero().norm(), Dyadic::zero());
    }

    #[test]
    fn associator_examples() {
        let (x, y, z) = (F8::ONE, a(1), a(2));
        let direct = Octonion::associator(&e(x), &e(y), &e(z));
        let parity =
            crate::cocycle::phi(x, y) + crate::cocycle::phi(y, z) + crate::cocycle::phi(z, x);
        let sign = Sign::from_parity(parity).to_i8() as i64;
        assert_eq!(direct, Octonion::monomial(x + y + z, 2 * sign));
        assert_eq!(associator_formula(x, y, z), direct);
        for y in F8::all() {
            for z in F8::all() {
                assert_eq!(associator_formula(F8::ZERO, y, z), Octonion::zero());
                assert_eq!(associator_formula(y, z, y + z), Octonion::zero());
            }
        }
    }

    #[test]
    fn inverse() {
        let r = |n: i64, d: i64| Rational64::new(n, d);
        let q = Octonion::new([
            r(1, 2),
            r(-3, 1),
            r(0, 1),
            r(2, 3),
            r(1, 1),
            r(0, 1),
            r(5, 7),
            r(-1, 4),
        ]);
        assert_eq!(q.multiply(&q.inverse().unwrap()), Octonion::one());
        assert!(Octonion::<Rational64>::zero().inverse().is_none());
    }

    #[test]
    fn json_shape() {
        let o = Octonion::new([
            Dyadic::HALF,
            Dyadic::from_int(-1),
            Dyadic::zero(),
            Dyadic::zero(),
            Dyadic::zero(),
            Dyadic::zero(),
            Dyadic::zero(),
            Dyadic::zero(),
        ]);
        let s = serde_json::to_string(&o).unwrap();
        // index 1 is a^7, index 2 is a^1
        assert_eq!(
            s,
            r#"{"e0":"1/2","e_a1":"0/1","e_a2":"0/1","e_a3":"0/1","e_a4":"0/1","e_a5":"0/1","e_a6":"0/1","e_a7":"-1/1"}"#
        );
        let back: DyadicOctonion = serde_json::from_str(&s).unwrap();
        assert_eq!(back, o);
        assert!(serde_json::from_str::<DyadicOctonion>(r#"{"e0":"1/2"}"#).is_err());
    }
}
