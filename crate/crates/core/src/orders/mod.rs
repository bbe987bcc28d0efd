//! The sixteen orders of integral octonions containing `O(Z)`.
//!
//! Each translation orbit `O` of subsets in `H` gives an order `E_O`, which can be
//! described three ways: as the Z-span of the `e^z` and the `e^X/2` for `X` in `O`;
//! as the elements of `1/2 O(Z)` whose halving sets lie in `span(O)`; or as the
//! subring generated by `O(Z)` and a single `e^X/2`. All three are constructed
//! here and compared.
//!
//! Elements of `1/2 O(Z)` are handled internally as integer 8-vectors holding twice
//! the coefficients.

pub mod lattice;

use std::collections::BTreeSet;

use num_traits::Zero;
use serde::Serialize;

use crate::algebra::{Dyadic, DyadicOctonion, IntOctonion, Octonion};
use crate::codes::{self, beta, Code, Orbit, OrbitKind, SubsetF8};
use crate::error::Error;
use crate::gf8::{F2, F8};
pub use lattice::{determinant, IntVec, Lattice};

/// `e^X / 2` for `X` in `H`.
pub fn e_half(x: SubsetF8) -> Result<DyadicOctonion, Error> {
    if !x.in_h() {
        return Err(Error::NotInH(x.mask(), x.len()));
    }
    Ok(Octonion::new(std::array::from_fn(|i| {
        if x.contains(F8::new(i as u8).expect("index below 8")) {
            Dyadic::HALF
        } else {
            Dyadic::zero()
        }
    })))
}

/// `2a` as an integer vector, if every coefficient of `a` lies in `1/2 Z`.
pub fn to_scaled(a: &DyadicOctonion) -> Result<IntVec, Error> {
    let mut out = [0i64; 8];
    for (o, c) in out.iter_mut().zip(a.coeffs()) {
        *o = c
            .scaled_integer(1)
            .ok_or_else(|| Error::NotHalfIntegral(c.to_string()))?;
    }
    Ok(out)
}

pub fn from_scaled(v: &IntVec) -> DyadicOctonion {
    Octonion::new(v.map(Dyadic::halves))
}

fn scaled_halving_set(v: &IntVec) -> SubsetF8 {
    SubsetF8::from_mask(
        v.iter()
            .enumerate()
            .filter(|(_, c)| *c % 2 != 0)
            .fold(0, |m, (i, _)| m | (1 << i)),
    )
}

/// The positions whose coefficient is not an integer.
pub fn halving_set(a: &DyadicOctonion) -> Result<SubsetF8, Error> {
    to_scaled(a).map(|v| scaled_halving_set(&v))
}

/// Product of two scaled vectors, rescaled. `None` if the product leaves `1/2 O(Z)`.
fn scaled_product(u: &IntVec, v: &IntVec) -> Option<IntVec> {
    let p = IntOctonion::new(*u).multiply(&IntOctonion::new(*v));
    // (u/2)(v/2) = p/4, so twice the product is p/2
    let c = p.into_coeffs();
    c.iter().all(|x| x % 2 == 0).then(|| c.map(|x| x / 2))
}

fn unit_vector(x: F8, scale: i64) -> IntVec {
    let mut v = [0; 8];
    v[x.index()] = scale;
    v
}

fn indicator(x: SubsetF8) -> IntVec {
    std::array::from_fn(|i| ((x.mask() >> i) & 1) as i64)
}

/// Conway–Smith family of an orbit's order.
pub fn family(orbit: &Orbit) -> &'static str {
    match orbit.kind() {
        OrbitKind::Empty => "Gravesian",
        OrbitKind::Full => "Kleinian",
        OrbitKind::LinePair { .. } => "double Hurwitzian",
        OrbitKind::Outer { .. } => "octavian",
    }
}

/// Conway–Smith name: `Gravesian`, `Kleinian`, `double Hurwitzian {∞,i,j,k}`, or
/// `j-integers` for the octavian order of the outer family `O_(a^j)`, `j` in `0..=6`.
pub fn conway_smith_name(orbit: &Orbit) -> String {
    match orbit.kind() {
        OrbitKind::Empty => "Gravesian".to_string(),
        OrbitKind::Full => "Kleinian".to_string(),
        OrbitKind::LinePair { line } => format!("double Hurwitzian {}", line.label_string()),
        OrbitKind::Outer { sum } => {
            let j = sum.log().expect("outer families have nonzero labels") % 7;
            format!("{j}-integers")
        }
    }
}

/// A normalized selector for [`conway_smith_name`]: lowercase, spaces to `-`,
/// `∞` to `inf`, braces and commas dropped.
pub fn selector(name: &str) -> String {
    name.trim()
        .to_lowercase()
        .replace('∞', "inf")
        .replace([' ', '_'], "-")
        .replace(['{', '}', ','], "")
}

/// One of the sixteen orders.
#[derive(Clone, Debug)]
pub struct IntegralOrder {
    orbit: Orbit,
    code: Code,
    lattice: Lattice,
    name: String,
}

impl IntegralOrder {
    pub fn orbit(&self) -> &Orbit {
        &self.orbit
    }

    pub fn code(&self) -> &Code {
        &self.code
    }

    /// Lattice of doubled coordinates.
    pub fn lattice(&self) -> &Lattice {
        &self.lattice
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn family(&self) -> &'static str {
        family(&self.orbit)
    }

    pub fn basis(&self) -> [DyadicOctonion; 8] {
        self.lattice.basis().map(|v| from_scaled(&v))
    }

    fn contains_scaled(&self, v: &IntVec) -> bool {
        self.code.contains(scaled_halving_set(v))
    }

    /// Membership by halving set: coefficients in `1/2 Z` and halving set in the code.
    pub fn contains(&self, a: &DyadicOctonion) -> bool {
        let Ok(v) = to_scaled(a) else {
            return false;
        };
        let by_code = self.contains_scaled(&v);
        debug_assert_eq!(by_code, self.lattice.contains(&v));
        by_code
    }

    /// Membership by solving against the lattice basis.
    pub fn contains_by_lattice(&self, a: &DyadicOctonion) -> bool {
        to_scaled(a).is_ok_and(|v| self.lattice.contains(&v))
    }

    pub fn is_suborder_of(&self, other: &IntegralOrder) -> bool {
        self.lattice.is_sublattice_of(&other.lattice)
    }
}

/// The Z-span of all `e^z` and all `e^X/2` for `X` in the orbit.
pub fn build_order(orbit: &Orbit) -> IntegralOrder {
    let gens = F8::all()
        .map(|x| unit_vector(x, 2))
        .chain(orbit.members().iter().map(|&x| indicator(x)));
    let lattice = Lattice::from_generators(gens).expect("the e^z alone have full rank");
    IntegralOrder {
        orbit: orbit.clone(),
        code: codes::span(orbit),
        lattice,
        name: conway_smith_name(orbit),
    }
}

/// All sixteen orders, in [`codes::orbit_decomposition`] order.
pub fn all_orders() -> Result<Vec<IntegralOrder>, Error> {
    Ok(codes::orbit_decomposition()?
        .iter()
        .map(build_order)
        .collect())
}

/// Looks an order up by name (see [`selector`]) or by orbit label, the line mask
/// in hex for a line pair or `a^j` for an outer family.
pub fn find_order(orders: &[IntegralOrder], name: &str) -> Result<usize, Error> {
    let key = selector(name);
    orders
        .iter()
        .position(|o| {
            selector(o.name()) == key || o.orbit.kind().label().is_some_and(|l| selector(&l) == key)
        })
        .ok_or_else(|| {
            let names: Vec<String> = orders.iter().map(|o| selector(o.name())).collect();
            Error::UnknownOrder(name.to_string(), names.join(", "))
        })
}

#[derive(Clone, Debug, Serialize)]
pub struct ClosureCertificate {
    /// `products[i][j]`: whether `b_i b_j` lies in the order.
    pub products: [[bool; 8]; 8],
}

impl ClosureCertificate {
    pub fn passed(&self) -> bool {
        self.products.iter().flatten().all(|&b| b)
    }
}

/// Checks all 64 products of lattice basis vectors for membership.
pub fn verify_closed(order: &IntegralOrder) -> ClosureCertificate {
    let basis = order.lattice.basis();
    let mut products = [[false; 8]; 8];
    for (i, u) in basis.iter().enumerate() {
        for (j, v) in basis.iter().enumerate() {
            products[i][j] = scaled_product(u, v).is_some_and(|p| order.contains_scaled(&p));
        }
    }
    ClosureCertificate { products }
}

#[derive(Clone, Debug, Serialize)]
pub struct GenerationCertificate {
    pub generator: SubsetF8,
    /// Rounds of adjoining products until the lattice stopped growing.
    pub rounds: usize,
    pub lattice: Lattice,
    pub matches_order: bool,
}

const GENERATION_ROUNDS: usize = 32;

/// Grows `O(Z) + Z e^X/2` by adjoining all products of basis vectors until it is
/// closed, then compares the result with [`build_order`].
pub fn verify_generated(orbit: &Orbit, x: SubsetF8) -> Result<GenerationCertificate, Error> {
    if !orbit.contains(x) {
        return Err(Error::Generation(format!("{x:?} is not in the orbit")));
    }
    let mut lattice =
        Lattice::from_generators(F8::all().map(|z| unit_vector(z, 2)).chain([indicator(x)]))?;
    for round in 1..=GENERATION_ROUNDS {
        let basis = *lattice.basis();
        let mut gens: Vec<IntVec> = basis.to_vec();
        for u in &basis {
            for v in &basis {
                let p = scaled_product(u, v).ok_or_else(|| {
                    Error::Generation(format!("product of {u:?} and {v:?} has denominator 4"))
                })?;
                gens.push(p);
            }
        }
        let next = Lattice::from_generators(gens)?;
        if next == lattice {
            let target = build_order(orbit);
            return Ok(GenerationCertificate {
                generator: x,
                rounds: round,
                matches_order: target.lattice == lattice,
                lattice,
            });
        }
        lattice = next;
    }
    Err(Error::Generation(format!(
        "no fixed point after {GENERATION_ROUNDS} rounds"
    )))
}

#[derive(Clone, Debug, Serialize)]
pub struct GramCertificate {
    pub gram: [[i64; 8]; 8],
    pub determinant: i128,
    pub even: bool,
    pub unit_count: usize,
}

/// `<x, y> = tr(x y*)`.
pub fn pairing(x: &DyadicOctonion, y: &DyadicOctonion) -> Dyadic {
    x.multiply(&y.conjugate()).trace()
}

/// Gram matrix, determinant, evenness and number of norm-one elements.
///
/// A norm-one element has `sum a_x^2 = 1`, so every `|a_x| <= 1`; with coefficients
/// in `1/2 Z` the box `{-1, -1/2, 0, 1/2, 1}^8` therefore contains all units, and the
/// enumeration below is exhaustive.
pub fn gram_certificate(order: &IntegralOrder) -> GramCertificate {
    let basis = order.basis();
    let mut gram = [[0i64; 8]; 8];
    for i in 0..8 {
        for j in 0..8 {
            let g = pairing(&basis[i], &basis[j]);
            gram[i][j] = g
                .scaled_integer(0)
                .expect("trace pairing on an order is integral");
        }
    }
    let even = (0..8).all(|i| gram[i][i] % 2 == 0);
    GramCertificate {
        determinant: determinant(&gram),
        even,
        unit_count: count_units(order),
        gram,
    }
}

fn count_units(order: &IntegralOrder) -> usize {
    // doubled coordinates range over -2..=2 and a unit has sum of squares 4
    let mut count = 0;
    let mut v = [-2i64; 8];
    loop {
        if v.iter().map(|c| c * c).sum::<i64>() == 4 && order.contains_scaled(&v) {
            count += 1;
        }
        let mut i = 0;
        loop {
            if i == 8 {
                return count;
            }
            if v[i] < 2 {
                v[i] += 1;
                break;
            }
            v[i] = -2;
            i += 1;
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Poset {
    pub names: Vec<String>,
    /// `leq[i][j]`: order `i` is contained in order `j`.
    pub leq: Vec<Vec<bool>>,
    pub maximal: Vec<usize>,
    pub minimum: Option<usize>,
    /// Lattice containment and code containment agree on every pair.
    pub consistent: bool,
}

/// Containment between the given orders.
pub fn containment_poset(orders: &[IntegralOrder]) -> Poset {
    let n = orders.len();
    let mut leq = vec![vec![false; n]; n];
    let mut consistent = true;
    for i in 0..n {
        for j in 0..n {
            let by_lattice = orders[i].is_suborder_of(&orders[j]);
            let by_code = orders[i].code.is_subcode_of(&orders[j].code);
            consistent &= by_lattice == by_code;
            leq[i][j] = by_lattice;
        }
    }
    let maximal = (0..n)
        .filter(|&i| (0..n).all(|j| j == i || !leq[i][j] || leq[j][i]))
        .collect();
    let minimum = (0..n).find(|&i| (0..n).all(|j| leq[i][j]));
    Poset {
        names: orders.iter().map(|o| o.name.clone()).collect(),
        leq,
        maximal,
        minimum,
        consistent,
    }
}

/// `beta` of the two halving sets, checked against the parity of `2 tr(ab)`.
pub fn trace_pairing_obstruction(a: &DyadicOctonion, b: &DyadicOctonion) -> Result<F2, Error> {
    let by_sets = beta(halving_set(a)?, halving_set(b)?);
    let twice = a.multiply(b).trace() + a.multiply(b).trace();
    let twice = twice
        .scaled_integer(0)
        .ok_or_else(|| Error::NotHalfIntegral(twice.to_string()))?;
    let by_trace = F2::parity(twice.rem_euclid(2) as u32);
    if by_sets != by_trace {
        return Err(Error::PairingMismatch {
            by_sets: by_sets.bit(),
            by_trace: by_trace.bit(),
        });
    }
    Ok(by_sets)
}

/// `(e^Y/2) e^z - (1/2) e^(z+Y)` has integer coefficients for every member `Y` and
/// every `z`.
pub fn check_translation_identity(orbit: &Orbit) -> bool {
    orbit.members().iter().all(|&y| {
        let half = e_half(y).expect("orbit members are in H");
        F8::all().all(|z| {
            let shifted = e_half(y.translate(z)).expect("translates stay in H");
            let diff = half.multiply(&Octonion::basis(z)) - shifted;
            diff.coeffs().iter().all(|c| c.is_integer())
        })
    })
}

/// `E O(Z) ⊆ E` and `O(Z) E ⊆ E` on basis vectors. The reverse inclusions hold
/// because `e^0` lies in `O(Z)`.
pub fn check_stability(order: &IntegralOrder) -> bool {
    order.lattice.basis().iter().all(|b| {
        F8::all().all(|z| {
            let e = unit_vector(z, 2);
            [scaled_product(b, &e), scaled_product(&e, b)]
                .iter()
                .all(|p| p.is_some_and(|p| order.lattice.contains(&p)))
        })
    })
}

/// Representatives of every code word with all sign choices on the half positions.
pub fn code_representatives(order: &IntegralOrder) -> Vec<DyadicOctonion> {
    let mut out = Vec::new();
    for w in order.code.words() {
        let positions: Vec<usize> = (0..8).filter(|&i| (w.mask() >> i) & 1 == 1).collect();
        for signs in 0u32..1 << positions.len() {
            let mut v = [0i64; 8];
            for (k, &p) in positions.iter().enumerate() {
                v[p] = if (signs >> k) & 1 == 1 { -1 } else { 1 };
            }
            out.push(from_scaled(&v));
        }
    }
    out
}

/// Names of all orders containing `order`, for reports.
pub fn supersets(orders: &[IntegralOrder], order: &IntegralOrder) -> BTreeSet<String> {
    orders
        .iter()
        .filter(|o| order.is_suborder_of(o))
        .map(|o| o.name.clone())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codes::{lines, outer_family};
    use num_traits::One;

    fn a(j: i64) -> F8 {
        F8::alpha_pow(j)
    }

    fn minus_one() -> DyadicOctonion {
        Octonion::scalar(-Dyadic::one())
    }

    #[test]
    fn e_half_squares() {
        for x in SubsetF8::all().filter(|s| s.len() == 4) {
            let h = e_half(x).unwrap();
            assert_eq!(h.norm(), Dyadic::one());
            let sq = h.multiply(&h);
            if x.contains(F8::ZERO) {
                assert_eq!(sq, h.clone() + minus_one());
            } else {
                assert_eq!(sq, minus_one());
            }
        }
        assert!(e_half(SubsetF8::from_mask(0b111)).is_err());
    }

    #[test]
    fn halving_sets() {
        for x in F8::all() {
            assert_eq!(halving_set(&Octonion::basis(x)).unwrap(), SubsetF8::EMPTY);
        }
        for x in codes::enumerate_h() {
            assert_eq!(halving_set(&e_half(x).unwrap()).unwrap(), x);
        }
        let quarter = Octonion::monomial(F8::ONE, Dyadic::new(1, 2));
        assert!(halving_set(&quarter).is_err());
    }

    #[test]
    fn named_orders() {
        let orders = all_orders().unwrap();
        assert_eq!(orders[0].name(), "Gravesian");
        assert_eq!(orders[1].name(), "Kleinian");
        assert_eq!(orders[1].code().hex_words(), ["00", "ff"]);
        let names: Vec<&str> = orders.iter().map(|o| o.name()).collect();
        for j in 0..7 {
            assert!(names.contains(&format!("{j}-integers").as_str()));
        }
        assert_eq!(
            orders
                .iter()
                .filter(|o| o.family() == "double Hurwitzian")
                .count(),
            7
        );
        assert!(find_order(&orders, "GRAVESIAN").is_ok());
        assert!(find_order(&orders, "0-integers").is_ok());
        let err = find_order(&orders, "nope").unwrap_err();
        assert!(err.to_string().contains("kleinian"));
        for o in &orders {
            assert_eq!(
                find_order(&orders, o.name()).unwrap(),
                find_order(&orders, &selector(o.name())).unwrap()
            );
        }
    }

    #[test]
    fn membership() {
        let orders = all_orders().unwrap();
        for o in &orders {
            for x in F8::all() {
                assert!(o.contains(&Octonion::basis(x)));
            }
        }
        let grav = &orders[0];
        assert!(!grav.contains(&e_half(lines()[0]).unwrap()));
        let o = build_order(&outer_family(a(2)).unwrap());
        for &x in o.orbit().members() {
            assert!(o.contains(&e_half(x).unwrap()));
        }
        for r in code_representatives(&o) {
            assert!(o.contains_by_lattice(&r));
        }
    }

    #[test]
    fn gravesian_certificate() {
        let g = build_order(&Orbit::through(SubsetF8::EMPTY).unwrap());
        let c = gram_certificate(&g);
        let mut two_i = [[0; 8]; 8];
        for (i, row) in two_i.iter_mut().enumerate() {
            row[i] = 2;
        }
        assert_eq!(c.gram, two_i);
        assert_eq!(c.determinant, 256);
        assert_eq!(c.unit_count, 16);
        assert!(verify_closed(&g).passed());
    }

    #[test]
    fn generation_reaches_octavian_order() {
        let orbit = outer_family(a(4)).unwrap();
        for &x in orbit.members() {
            let cert = verify_generated(&orbit, x).unwrap();
            assert!(cert.matches_order);
        }
        let empty = Orbit::through(SubsetF8::EMPTY).unwrap();
        let c = verify_generated(&empty, SubsetF8::EMPTY).unwrap();
        assert_eq!(c.rounds, 1);
        assert!(verify_generated(&empty, SubsetF8::FULL).is_err());
    }

    #[test]
    fn pairing_obstruction() {
        let i = Octonion::basis(a(3));
        assert_eq!(trace_pairing_obstruction(&i, &i).unwrap(), F2::ZERO);
        let l = lines()[0];
        // a size-4 set meeting the line in exactly one point
        let other = SubsetF8::all()
            .find(|s| s.len() == 4 && (*s & l).len() == 1)
            .unwrap();
        let (x, y) = (e_half(l).unwrap(), e_half(other).unwrap());
        assert_eq!(trace_pairing_obstruction(&x, &y).unwrap(), F2::ONE);
        assert!(!x.multiply(&y).trace().is_integer());
        let fam = outer_family(F8::ONE).unwrap();
        let (p, q) = (fam.members()[0], fam.members()[1]);
        assert_eq!(
            trace_pairing_obstruction(&e_half(p).unwrap(), &e_half(q).unwrap()).unwrap(),
            F2::ZERO
        );
    }
}
