//! Full-rank integer lattices in `Z^8`, kept in Hermite normal form.

use serde::Serialize;

use crate::error::Error;

pub type IntVec = [i64; 8];

/// A rank-8 sublattice of `Z^8` given by an upper-triangular basis with positive
/// pivots and off-pivot entries in each pivot column reduced into `0..pivot`.
/// Two lattices are equal exactly when their bases are.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize)]
pub struct Lattice {
    basis: [IntVec; 8],
}

impl Lattice {
    /// The lattice generated by `gens`. Fails unless they span a rank-8 lattice.
    pub fn from_generators<I: IntoIterator<Item = IntVec>>(gens: I) -> Result<Lattice, Error> {
        let mut rows: Vec<[i128; 8]> = gens.into_iter().map(|g| g.map(i128::from)).collect();
        // every column gets a pivot, so the pivot row index equals the column
        for col in 0..8 {
            let pivot = col;
            loop {
                let best = (pivot..rows.len())
                    .filter(|&r| rows[r][col] != 0)
                    .min_by_key(|&r| rows[r][col].abs());
                let Some(best) = best else {
                    return Err(Error::RankDeficient);
                };
                rows.swap(pivot, best);
                let p = rows[pivot];
                let mut done = true;
                for row in rows.iter_mut().skip(pivot + 1) {
                    if row[col] != 0 {
                        let q = row[col].div_euclid(p[col]);
                        for k in col..8 {
                            row[k] -= q * p[k];
                        }
                        done &= row[col] == 0;
                    }
                }
                if done {
                    break;
                }
            }
            if rows[pivot][col] < 0 {
                for v in rows[pivot].iter_mut() {
                    *v = -*v;
                }
            }
            let p = rows[pivot];
            for row in rows.iter_mut().take(pivot) {
                let q = row[col].div_euclid(p[col]);
                for k in col..8 {
                    row[k] -= q * p[k];
                }
            }
        }
        let mut basis = [[0i64; 8]; 8];
        for (b, r) in basis.iter_mut().zip(&rows) {
            *b = r.map(|v| i64::try_from(v).expect("lattice entry overflow"));
        }
        Ok(Lattice { basis })
    }

    pub fn basis(&self) -> &[IntVec; 8] {
        &self.basis
    }

    /// Integer coordinates of `v` in the basis, if `v` lies in the lattice.
    pub fn solve(&self, v: &IntVec) -> Option<IntVec> {
        let mut rest = *v;
        let mut coords = [0i64; 8];
        for i in 0..8 {
            let p = self.basis[i][i];
            if rest[i] % p != 0 {
                return None;
            }
            let c = rest[i] / p;
            coords[i] = c;
            for (r, b) in rest.iter_mut().zip(&self.basis[i]).skip(i) {
                *r -= c * b;
            }
        }
        debug_assert!(rest.iter().all(|&r| r == 0));
        Some(coords)
    }

    pub fn contains(&self, v: &IntVec) -> bool {
        self.solve(v).is_some()
    }

    pub fn is_sublattice_of(&self, other: &Lattice) -> bool {
        self.basis.iter().all(|b| other.contains(b))
    }

    /// Index in `Z^8`: the product of the pivots.
    pub fn index(&self) -> i64 {
        (0..8).map(|i| self.basis[i][i]).product()
    }
}

/// Exact determinant by fraction-free (Bareiss) elimination.
pub fn determinant(m: &[[i64; 8]; 8]) -> i128 {
    let mut a: [[i128; 8]; 8] = m.map(|r| r.map(i128::from));
    let n = 8;
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if a[k][k] == 0 {
            let Some(swap) = (k + 1..n).find(|&r| a[r][k] != 0) else {
                return 0;
            };
            a.swap(k, swap);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    sign * a[n - 1][n - 1]
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn unit(i: usize, s: i64) -> IntVec {
        let mut v = [0; 8];
        v[i] = s;
        v
    }

    #[test]
    fn hnf_of_scaled_identity() {
        let l = Lattice::from_generators((0..8).map(|i| unit(i, 2))).unwrap();
        assert_eq!(l.index(), 256);
        assert!(l.contains(&unit(3, -4)));
        assert!(!l.contains(&unit(3, 1)));
    }

    #[test]
    fn rank_deficient() {
        assert!(matches!(
            Lattice::from_generators((0..7).map(|i| unit(i, 1))),
            Err(Error::RankDeficient)
        ));
    }

    #[test]
    fn adding_all_ones_halves_index() {
        let gens = (0..8).map(|i| unit(i, 2)).chain([[1; 8]]);
        let l = Lattice::from_generators(gens).unwrap();
        assert_eq!(l.index(), 128);
        assert_eq!(
            l.solve(&[1; 8]).map(|c| c.iter().any(|&x| x != 0)),
            Some(true)
        );
    }

    #[test]
    fn determinant_examples() {
        let mut m = [[0i64; 8]; 8];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = 2;
        }
        assert_eq!(determinant(&m), 256);
        m.swap(0, 1);
        assert_eq!(determinant(&m), -256);
        m[0] = m[1];
        assert_eq!(determinant(&m), 0);
    }

    proptest! {
        #[test]
        fn hnf_is_canonical(gens in proptest::collection::vec(proptest::array::uniform8(-5i64..=5), 0..6), perm_seed in any::<u64>()) {
            let mut all: Vec<IntVec> = (0..8).map(|i| unit(i, 3)).collect();
            all.extend(gens);
            let l = Lattice::from_generators(all.clone()).unwrap();
            let mut shuffled = all.clone();
            let k = shuffled.len();
            shuffled.rotate_left((perm_seed as usize) % k);
            shuffled.reverse();
            prop_assert_eq!(Lattice::from_generators(shuffled).unwrap(), l.clone());
            for g in &all {
                prop_assert!(l.contains(g));
            }
            prop_assert_eq!(determinant(l.basis()).abs(), l.index() as i128);
        }
    }
}
