//! Subsets of F8 as binary words of length 8.
//!
//! A subset is an 8-bit mask: bit `b` is set when the field element with bit
//! pattern `b` belongs to it. Symmetric difference is XOR and intersection is AND.
//! This module covers the set `H` of subsets of size 0, 4 or 8, its sixteen orbits
//! under translation by F8, the intersection-parity form `beta`, and the codes
//! spanned by the orbits.

use std::collections::BTreeSet;
use std::fmt;
use std::ops::{BitAnd, BitXor};

use serde::{Deserialize, Serialize};

use crate::algebra::BasisLabel;
use crate::error::Error;
use crate::gf8::{F2, F8};

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct SubsetF8(u8);

impl SubsetF8 {
    pub const EMPTY: SubsetF8 = SubsetF8(0);
    pub const FULL: SubsetF8 = SubsetF8(0xff);

    pub const fn from_mask(mask: u8) -> Self {
        SubsetF8(mask)
    }

    pub fn from_elements<I: IntoIterator<Item = F8>>(xs: I) -> Self {
        SubsetF8(xs.into_iter().fold(0, |m, x| m | (1 << x.bits())))
    }

    /// Every subset of F8, in mask order.
    pub fn all() -> impl Iterator<Item = SubsetF8> + Clone {
        (0..=255u8).map(SubsetF8)
    }

    pub const fn mask(self) -> u8 {
        self.0
    }

    pub fn contains(self, x: F8) -> bool {
        (self.0 >> x.bits()) & 1 == 1
    }

    pub fn len(self) -> u32 {
        self.0.count_ones()
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn elements(self) -> impl Iterator<Item = F8> {
        F8::all().filter(move |&x| self.contains(x))
    }

    pub fn complement(self) -> Self {
        SubsetF8(!self.0)
    }

    pub fn in_h(self) -> bool {
        matches!(self.len(), 0 | 4 | 8)
    }

    /// `{z + x : x in X}`.
    pub fn translate(self, z: F8) -> Self {
        SubsetF8::from_elements(self.elements().map(|x| x + z))
    }

    /// The field sum of the members; zero for the empty set.
    pub fn sigma_sum(self) -> F8 {
        self.elements().fold(F8::ZERO, |acc, x| acc + x)
    }

    /// Translations fixing the set.
    pub fn stabilizer(self) -> Vec<F8> {
        F8::all().filter(|&z| self.translate(z) == self).collect()
    }

    /// Two-digit lowercase hex of the mask.
    pub fn hex(self) -> String {
        format!("{:02x}", self.0)
    }

    pub fn is_line(self) -> bool {
        lines().contains(&self)
    }

    /// Basis labels of the members, e.g. `{∞,1,2,4}`.
    pub fn label_string(self) -> String {
        let mut labels: Vec<BasisLabel> = self.elements().map(BasisLabel::from_f8).collect();
        labels.sort();
        let parts: Vec<String> = labels
            .iter()
            .map(|l| match l {
                BasisLabel::Infinity => "∞".to_string(),
                BasisLabel::Index(j) => (j % 7).to_string(),
            })
            .collect();
        format!("{{{}}}", parts.join(","))
    }
}

impl BitXor for SubsetF8 {
    type Output = SubsetF8;
    fn bitxor(self, rhs: SubsetF8) -> SubsetF8 {
        SubsetF8(self.0 ^ rhs.0)
    }
}

impl BitAnd for SubsetF8 {
    type Output = SubsetF8;
    fn bitand(self, rhs: SubsetF8) -> SubsetF8 {
        SubsetF8(self.0 & rhs.0)
    }
}

impl fmt::Debug for SubsetF8 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SubsetF8({:#04x})", self.0)
    }
}

impl fmt::Display for SubsetF8 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.hex())
    }
}

impl Serialize for SubsetF8 {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.hex())
    }
}

impl<'de> Deserialize<'de> for SubsetF8 {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        u8::from_str_radix(&s, 16)
            .map(SubsetF8)
            .map_err(serde::de::Error::custom)
    }
}

/// `|X ∩ Y| mod 2`.
pub fn beta(x: SubsetF8, y: SubsetF8) -> F2 {
    F2::parity((x & y).len())
}

/// The 72 subsets of size 0, 4 or 8, in mask order.
pub fn enumerate_h() -> Vec<SubsetF8> {
    SubsetF8::all().filter(|s| s.in_h()).collect()
}

/// The seven sets `{0, x, y, x + y}`, in mask order.
pub fn lines() -> Vec<SubsetF8> {
    let mut out: BTreeSet<SubsetF8> = BTreeSet::new();
    for x in F8::nonzero() {
        for y in F8::nonzero().filter(|&y| y != x) {
            out.insert(SubsetF8::from_elements([F8::ZERO, x, y, x + y]));
        }
    }
    out.into_iter().collect()
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum OrbitKind {
    Empty,
    Full,
    /// `{L, F8 - L}`, labelled by the line `L` (the member containing 0).
    LinePair {
        line: SubsetF8,
    },
    /// All size-4 subsets with sigma-sum `sum`.
    Outer {
        sum: F8,
    },
}

impl OrbitKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            OrbitKind::Empty => "empty",
            OrbitKind::Full => "full",
            OrbitKind::LinePair { .. } => "line-pair",
            OrbitKind::Outer { .. } => "outer",
        }
    }

    pub fn expected_size(&self) -> usize {
        match self {
            OrbitKind::Empty | OrbitKind::Full => 1,
            OrbitKind::LinePair { .. } => 2,
            OrbitKind::Outer { .. } => 8,
        }
    }

    /// `None` for the empty and full orbits, the line's mask for a line pair, the
    /// sigma-sum label for an outer family.
    pub fn label(&self) -> Option<String> {
        match self {
            OrbitKind::Empty | OrbitKind::Full => None,
            OrbitKind::LinePair { line } => Some(line.hex()),
            OrbitKind::Outer { sum } => Some(sum.label()),
        }
    }
}

/// An orbit of the translation action of F8 on `H`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Orbit {
    members: Vec<SubsetF8>,
    kind: OrbitKind,
}

impl Orbit {
    /// The orbit through `x`. Fails if `x` is not in `H`.
    pub fn through(x: SubsetF8) -> Result<Orbit, Error> {
        if !x.in_h() {
            return Err(Error::NotInH(x.mask(), x.len()));
        }
        let members: BTreeSet<SubsetF8> = F8::all().map(|z| x.translate(z)).collect();
        let members: Vec<SubsetF8> = members.into_iter().collect();
        let kind = match x.len() {
            0 => OrbitKind::Empty,
            8 => OrbitKind::Full,
            _ if x.sigma_sum().is_zero() => OrbitKind::LinePair {
                line: *members
                    .iter()
                    .find(|m| m.contains(F8::ZERO))
                    .expect("a line pair has a member through 0"),
            },
            _ => OrbitKind::Outer { sum: x.sigma_sum() },
        };
        Ok(Orbit { members, kind })
    }

    pub fn members(&self) -> &[SubsetF8] {
        &self.members
    }

    pub fn kind(&self) -> OrbitKind {
        self.kind
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, x: SubsetF8) -> bool {
        self.members.binary_search(&x).is_ok()
    }

    /// A canonical member: the smallest mask.
    pub fn representative(&self) -> SubsetF8 {
        self.members[0]
    }
}

/// `O_x`: the eight size-4 subsets with sigma-sum `x`.
pub fn outer_family(x: F8) -> Result<Orbit, Error> {
    if x.is_zero() {
        return Err(Error::ZeroOuterLabel);
    }
    let members: Vec<SubsetF8> = SubsetF8::all()
        .filter(|s| s.len() == 4 && s.sigma_sum() == x)
        .collect();
    Ok(Orbit {
        members,
        kind: OrbitKind::Outer { sum: x },
    })
}

/// Splits `H` into its sixteen translation orbits.
///
/// Order: `{∅}`, `{F8}`, the seven line pairs by line mask, then the seven outer
/// families `O_(a^j)` for `j = 0..6`.
pub fn orbit_decomposition() -> Result<Vec<Orbit>, Error> {
    let mut seen: BTreeSet<SubsetF8> = BTreeSet::new();
    let mut orbits = Vec::new();
    for x in enumerate_h() {
        if seen.contains(&x) {
            continue;
        }
        let o = Orbit::through(x)?;
        seen.extend(o.members.iter().copied());
        orbits.push(o);
    }
    orbits.sort_by_key(|o| match o.kind {
        OrbitKind::Empty => (0, 0),
        OrbitKind::Full => (1, 0),
        OrbitKind::LinePair { line } => (2, line.mask() as u32),
        OrbitKind::Outer { sum } => (3, sum.log().unwrap_or(0) as u32 % 7),
    });

    let count = |k: &str| orbits.iter().filter(|o| o.kind.as_str() == k).count();
    let total: usize = orbits.iter().map(Orbit::len).sum();
    let sizes_ok = orbits.iter().all(|o| o.len() == o.kind.expected_size());
    if orbits.len() != 16
        || count("empty") != 1
        || count("full") != 1
        || count("line-pair") != 7
        || count("outer") != 7
        || total != 72
        || !sizes_ok
    {
        return Err(Error::OrbitCensus(format!(
            "{} orbits covering {} sets",
            orbits.len(),
            total
        )));
    }
    Ok(orbits)
}

/// A subset of `2^F8` closed under symmetric difference.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Code {
    words: BTreeSet<SubsetF8>,
}

impl Code {
    /// The linear span of `gens`.
    pub fn span_of<I: IntoIterator<Item = SubsetF8>>(gens: I) -> Code {
        let mut words: BTreeSet<SubsetF8> = BTreeSet::from([SubsetF8::EMPTY]);
        for g in gens {
            if words.contains(&g) {
                continue;
            }
            let shifted: Vec<SubsetF8> = words.iter().map(|&w| w ^ g).collect();
            words.extend(shifted);
        }
        Code { words }
    }

    pub fn words(&self) -> impl Iterator<Item = SubsetF8> + '_ {
        self.words.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn dimension(&self) -> u32 {
        self.words.len().trailing_zeros()
    }

    pub fn contains(&self, w: SubsetF8) -> bool {
        self.words.contains(&w)
    }

    pub fn is_subcode_of(&self, other: &Code) -> bool {
        self.words.is_subset(&other.words)
    }

    pub fn is_closed(&self) -> bool {
        self.words.contains(&SubsetF8::EMPTY)
            && self
                .words
                .iter()
                .all(|&a| self.words.iter().all(|&b| self.words.contains(&(a ^ b))))
    }

    /// A basis chosen greedily in mask order.
    pub fn basis(&self) -> Vec<SubsetF8> {
        let mut basis = Vec::new();
        let mut spanned = Code::span_of([]);
        for w in self.words() {
            if !spanned.contains(w) {
                basis.push(w);
                spanned = Code::span_of(basis.iter().copied());
            }
        }
        basis
    }

    pub fn is_self_orthogonal(&self) -> bool {
        self.words()
            .all(|a| self.words().all(|b| !beta(a, b).is_one()))
    }

    pub fn hex_words(&self) -> Vec<String> {
        self.words().map(SubsetF8::hex).collect()
    }
}

impl Serialize for Code {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.words())
    }
}

/// The smallest set containing the orbit and closed under symmetric difference.
pub fn span(orbit: &Orbit) -> Code {
    Code::span_of(orbit.members().iter().copied())
}

/// Orthogonal complement under `beta`, found by testing all 256 subsets.
pub fn dual(code: &Code) -> Code {
    Code {
        words: SubsetF8::all()
            .filter(|&y| code.words().all(|w| !beta(y, w).is_one()))
            .collect(),
    }
}

/// The three lines through a nonzero `z`.
pub fn lines_through(z: F8) -> Vec<SubsetF8> {
    lines().into_iter().filter(|l| l.contains(z)).collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct IntersectionReport {
    pub z: F8,
    /// Ordered pairs `(X, Y)` with `Y ∉ {X, F8 - X}`.
    pub pairs_checked: usize,
    pub failures: Vec<(SubsetF8, SubsetF8)>,
    /// Lines through `z` that appear as `F8 - (X Δ Y)` or `X Δ Y`.
    pub lines_seen: Vec<SubsetF8>,
}

impl IntersectionReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty() && self.lines_seen.len() == 3
    }
}

/// For distinct, non-complementary `X, Y` in `O_z`: `|X ∩ Y| = 2` and `X Δ Y` is a
/// line through `z` or the complement of one.
pub fn check_intersection_lemma(z: F8) -> Result<IntersectionReport, Error> {
    let family = outer_family(z)?;
    let through = lines_through(z);
    let mut failures = Vec::new();
    let mut seen: BTreeSet<SubsetF8> = BTreeSet::new();
    let mut pairs_checked = 0;
    for &x in family.members() {
        for &y in family.members() {
            if y == x || y == x.complement() {
                continue;
            }
            pairs_checked += 1;
            let d = x ^ y;
            let line = if d.contains(F8::ZERO) {
                d
            } else {
                d.complement()
            };
            if (x & y).len() == 2 && through.contains(&line) {
                seen.insert(line);
            } else {
                failures.push((x, y));
            }
        }
    }
    Ok(IntersectionReport {
        z,
        pairs_checked,
        failures,
        lines_seen: seen.into_iter().collect(),
    })
}

/// An invertible F2-linear map of F8, stored as the images of the bit vectors
/// `1, a, a^2`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Gl3 {
    columns: [F8; 3],
}

impl Gl3 {
    pub fn apply(&self, x: F8) -> F8 {
        (0..3)
            .filter(|i| (x.bits() >> i) & 1 == 1)
            .fold(F8::ZERO, |acc, i| acc + self.columns[i])
    }

    pub fn apply_set(&self, s: SubsetF8) -> SubsetF8 {
        SubsetF8::from_elements(s.elements().map(|x| self.apply(x)))
    }
}

/// All 168 invertible 3x3 matrices over F2.
pub fn gl3() -> Vec<Gl3> {
    let mut out = Vec::new();
    for a in F8::nonzero() {
        for b in F8::nonzero().filter(|&b| b != a) {
            for c in F8::nonzero().filter(|&c| c != a && c != b && c != a + b) {
                out.push(Gl3 { columns: [a, b, c] });
            }
        }
    }
    out
}
