//! The analogous twisted construction over F4 with `sigma(x,y) = (-1)^tr(y x^2)`.
//!
//! Unlike F8, this sign function gives something commutative and associative:
//! `Z[x, y] / (x^2 - 1, y^2 - 1)` on the generators `e^w`, `e^(w^2)`.

use serde::Serialize;

use crate::cocycle::Sign;
use crate::gf8::F4;

/// `(-1)^tr(y x^2)`.
pub fn f4_sigma(x: F4, y: F4) -> Sign {
    Sign::from_parity((y * x.square()).trace())
}

/// `e^x e^y` as a signed basis index.
pub fn f4_product(x: F4, y: F4) -> (Sign, F4) {
    (f4_sigma(x, y), x + y)
}

type Elem = [i64; 4];

fn basis(x: F4) -> Elem {
    let mut e = [0; 4];
    e[x.index()] = 1;
    e
}

fn mul(a: &Elem, b: &Elem) -> Elem {
    let mut out = [0; 4];
    for x in F4::all() {
        for y in F4::all() {
            let (s, z) = f4_product(x, y);
            out[z.index()] += s.to_i8() as i64 * a[x.index()] * b[y.index()];
        }
    }
    out
}

/// Outcome of the F4 checks, one flag per law.
#[derive(Clone, Debug, Serialize)]
pub struct F4Report {
    /// `table[x][y] = (sign, x + y)` in field bit order.
    pub table: [[(i8, u8); 4]; 4],
    pub commutative: bool,
    pub associative: bool,
    pub identity: bool,
    pub squares_are_identity: bool,
    /// `1, e^w, e^(w^2), e^w e^(w^2)` are four distinct signed basis vectors.
    pub presentation: bool,
}

impl F4Report {
    pub fn all_pass(&self) -> bool {
        self.commutative
            && self.associative
            && self.identity
            && self.squares_are_identity
            && self.presentation
    }
}

pub fn check_f4_remark() -> F4Report {
    let mut table = [[(1i8, 0u8); 4]; 4];
    for x in F4::all() {
        for y in F4::all() {
            let (s, z) = f4_product(x, y);
            table[x.index()][y.index()] = (s.to_i8(), z.bits());
        }
    }
    let e = |x| basis(x);
    let commutative = F4::all().all(|x| F4::all().all(|y| mul(&e(x), &e(y)) == mul(&e(y), &e(x))));
    let associative = F4::all().all(|x| {
        F4::all().all(|y| {
            F4::all().all(|z| mul(&mul(&e(x), &e(y)), &e(z)) == mul(&e(x), &mul(&e(y), &e(z))))
        })
    });
    let one = e(F4::ZERO);
    let identity = F4::all().all(|x| mul(&one, &e(x)) == e(x) && mul(&e(x), &one) == e(x));
    let squares_are_identity = F4::all().all(|x| mul(&e(x), &e(x)) == one);

    let gx = e(F4::OMEGA);
    let gy = e(F4::OMEGA.square());
    let monomials = [one, gx, gy, mul(&gx, &gy)];
    let mut supports: Vec<usize> = Vec::new();
    let mut presentation = true;
    for m in &monomials {
        let nz: Vec<usize> = (0..4).filter(|&i| m[i] != 0).collect();
        if nz.len() != 1 || m[nz[0]].abs() != 1 {
            presentation = false;
        } else {
            supports.push(nz[0]);
        }
    }
    supports.sort_unstable();
    supports.dedup();
    presentation &= supports.len() == 4;

    F4Report {
        table,
        commutative,
        associative,
        identity,
        squares_are_identity,
        presentation,
    }
}
