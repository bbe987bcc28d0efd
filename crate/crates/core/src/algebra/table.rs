//! The multiplication table in the named basis `e_inf, e_1, ..., e_7`.
//!
//! `e_inf = e^0` and `e_j = e^(a^j)`, with finite subscripts read modulo 7, so
//! `e_7` and `e_0` name the same element `e^1`.
//!
//! The table is produced twice: once by multiplying basis elements in the algebra,
//! and once from a handful of seed relations closed under the index-shift and
//! index-doubling rules, with no field arithmetic at all. [`standard_table`]
//! refuses to return unless both agree.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::octonion::IntOctonion;
use crate::cocycle::{CocycleTable, Sign};
use crate::error::Error;
use crate::gf8::F8;

/// `e_inf` or `e_j` for `j` in `1..=7`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub enum BasisLabel {
    Infinity,
    Index(u8),
}

impl BasisLabel {
    /// Table order: `e_inf, e_1, ..., e_7`.
    pub fn all() -> impl Iterator<Item = BasisLabel> + Clone {
        std::iter::once(BasisLabel::Infinity).chain((1..=7).map(BasisLabel::Index))
    }

    /// Accepts any integer subscript, reduced into `1..=7`.
    pub fn finite(j: i64) -> BasisLabel {
        let r = j.rem_euclid(7) as u8;
        BasisLabel::Index(if r == 0 { 7 } else { r })
    }

    pub fn to_f8(self) -> F8 {
        match self {
            BasisLabel::Infinity => F8::ZERO,
            BasisLabel::Index(j) => F8::alpha_pow(j as i64),
        }
    }

    pub fn from_f8(x: F8) -> BasisLabel {
        match x.log() {
            None => BasisLabel::Infinity,
            Some(j) => BasisLabel::Index(j),
        }
    }

    /// Position in table order.
    pub fn position(self) -> usize {
        match self {
            BasisLabel::Infinity => 0,
            BasisLabel::Index(j) => j as usize,
        }
    }

    fn subscript(self) -> Option<i64> {
        match self {
            BasisLabel::Infinity => None,
            BasisLabel::Index(j) => Some(j as i64),
        }
    }
}

impl fmt::Display for BasisLabel {
    /// `e_∞, e_1, ..., e_6, e_0`; the seventh finite label prints as `e_0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BasisLabel::Infinity => f.write_str("e_∞"),
            BasisLabel::Index(7) => f.write_str("e_0"),
            BasisLabel::Index(j) => write!(f, "e_{j}"),
        }
    }
}

/// A signed basis element `±e_k`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct SignedLabel {
    pub label: BasisLabel,
    pub sign: Sign,
}

impl SignedLabel {
    fn negated(self) -> Self {
        SignedLabel {
            label: self.label,
            sign: -self.sign,
        }
    }
}

impl fmt::Display for SignedLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.sign.is_minus() {
            f.write_str("-")?;
        }
        write!(f, "{}", self.label)
    }
}

/// `entries[i][j] = e_i * e_j` with rows and columns in [`BasisLabel::all`] order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MultiplicationTable {
    entries: [[SignedLabel; 8]; 8],
}

impl MultiplicationTable {
    pub fn get(&self, row: BasisLabel, col: BasisLabel) -> SignedLabel {
        self.entries[row.position()][col.position()]
    }

    pub fn rows(&self) -> &[[SignedLabel; 8]; 8] {
        &self.entries
    }

    /// The table obtained by multiplying basis elements under `table`.
    pub fn from_algebra(table: &CocycleTable) -> Result<Self, Error> {
        let mut entries = [[SignedLabel {
            label: BasisLabel::Infinity,
            sign: Sign::Plus,
        }; 8]; 8];
        for r in BasisLabel::all() {
            for c in BasisLabel::all() {
                let p =
                    IntOctonion::basis(r.to_f8()).mul_with(&IntOctonion::basis(c.to_f8()), table);
                entries[r.position()][c.position()] = signed_basis(&p)?;
            }
        }
        Ok(MultiplicationTable { entries })
    }

    /// The table forced by the seed relations:
    ///
    /// * `e_inf` is a two-sided identity and `e_j^2 = -1` for finite `j`;
    /// * `e_1 e_2 = e_4`;
    /// * if `e_i e_j = e_k` then `e_{i+1} e_{j+1} = e_{k+1}` and `e_{2i} e_{2j} = e_{2k}`;
    /// * distinct imaginary units anticommute;
    /// * if `e_i e_j = s e_k` for distinct finite `i, j, k` then `e_j e_k = s e_i`
    ///   and `e_k e_i = s e_j`.
    pub fn from_seed_relations() -> Result<Self, Error> {
        let mut known: [[Option<SignedLabel>; 8]; 8] = [[None; 8]; 8];
        let plus = |label| SignedLabel {
            label,
            sign: Sign::Plus,
        };
        for j in BasisLabel::all() {
            known[0][j.position()] = Some(plus(j));
            known[j.position()][0] = Some(plus(j));
            if j != BasisLabel::Infinity {
                known[j.position()][j.position()] = Some(SignedLabel {
                    label: BasisLabel::Infinity,
                    sign: Sign::Minus,
                });
            }
        }
        known[1][2] = Some(plus(BasisLabel::Index(4)));

        let mut conflict = None;
        let mut set = |known: &mut [[Option<SignedLabel>; 8]; 8],
                       i: BasisLabel,
                       j: BasisLabel,
                       v: SignedLabel|
         -> bool {
            let slot = &mut known[i.position()][j.position()];
            match slot {
                Some(old) if *old != v => {
                    conflict.get_or_insert((i, j));
                    false
                }
                Some(_) => false,
                None => {
                    *slot = Some(v);
                    true
                }
            }
        };

        loop {
            let mut changed = false;
            for i in 1..=7i64 {
                for j in 1..=7i64 {
                    let (li, lj) = (BasisLabel::finite(i), BasisLabel::finite(j));
                    let Some(v) = known[li.position()][lj.position()] else {
                        continue;
                    };
                    let Some(k) = v.label.subscript() else {
                        continue;
                    };
                    if v.sign == Sign::Plus {
                        changed |= set(
                            &mut known,
                            BasisLabel::finite(i + 1),
                            BasisLabel::finite(j + 1),
                            plus(BasisLabel::finite(k + 1)),
                        );
                        changed |= set(
                            &mut known,
                            BasisLabel::finite(2 * i),
                            BasisLabel::finite(2 * j),
                            plus(BasisLabel::finite(2 * k)),
                        );
                    }
                    if i != j {
                        changed |= set(&mut known, lj, li, v.negated());
                        let lk = BasisLabel::finite(k);
                        if lk != li && lk != lj {
                            let s = v.sign;
                            changed |= set(&mut known, lj, lk, SignedLabel { label: li, sign: s });
                            changed |= set(&mut known, lk, li, SignedLabel { label: lj, sign: s });
                        }
                    }
                }
            }
            if !changed {
                break;
            }
        }
        if let Some((i, j)) = conflict {
            return Err(Error::TableMismatch(format!(
                "seed relations are inconsistent at {i} * {j}"
            )));
        }

        let mut entries = [[plus(BasisLabel::Infinity); 8]; 8];
        for r in BasisLabel::all() {
            for c in BasisLabel::all() {
                entries[r.position()][c.position()] = known[r.position()][c.position()]
                    .ok_or_else(|| {
                        Error::TableMismatch(format!("seed relations leave {r} * {c} undetermined"))
                    })?;
            }
        }
        Ok(MultiplicationTable { entries })
    }
}

fn signed_basis(p: &IntOctonion) -> Result<SignedLabel, Error> {
    let mut found = None;
    for x in F8::all() {
        match *p.coeff(x) {
            0 => {}
            c @ (1 | -1) if found.is_none() => {
                found = Some(SignedLabel {
                    label: BasisLabel::from_f8(x),
                    sign: if c == 1 { Sign::Plus } else { Sign::Minus },
                });
            }
            _ => {
                return Err(Error::TableMismatch(format!(
                    "{p:?} is not a signed basis element"
                )))
            }
        }
    }
    found.ok_or_else(|| Error::TableMismatch("zero product of basis elements".into()))
}

/// The multiplication table of `e_inf, e_1, ..., e_7`, checked against the table
/// forced by the seed relations.
pub fn standard_table() -> Result<MultiplicationTable, Error> {
    table_checked(CocycleTable::standard())
}

pub fn table_checked(table: &CocycleTable) -> Result<MultiplicationTable, Error> {
    let generated = MultiplicationTable::from_algebra(table)?;
    let seeded = MultiplicationTable::from_seed_relations()?;
    for r in BasisLabel::all() {
        for c in BasisLabel::all() {
            let (g, s) = (generated.get(r, c), seeded.get(r, c));
            if g != s {
                return Err(Error::TableMismatch(format!(
                    "{r} * {c}: algebra gives {g}, seed relations give {s}"
                )));
            }
        }
    }
    Ok(generated)
}
