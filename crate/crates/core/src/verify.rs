//! The full battery of exhaustive and seeded randomized checks.
//!
//! Every check is exact. Algebra-level checks run against a [`CocycleTable`] passed
//! in through [`SuiteOptions`], so the suite can be pointed at a corrupted table to
//! confirm that it fails.

use std::collections::BTreeSet;

use num_rational::Rational64;
use num_traits::Zero;
use rand::Rng;
use serde::Serialize;

use crate::algebra::{
    associator_formula_with, check_f4_remark, random, table_checked, Dyadic, DyadicOctonion,
    IntOctonion, Octonion,
};
use crate::cocycle::{ind_rank, ind_sum, phi, CocycleTable};
use crate::codes::{
    self, beta, check_intersection_lemma, dual, enumerate_h, gl3, lines, lines_through,
    orbit_decomposition, outer_family, span, OrbitKind, SubsetF8,
};
use crate::gf8::{F2, F8};
use crate::orders::{
    self, all_orders, check_stability, check_translation_identity, code_representatives,
    containment_poset, gram_certificate, halving_set, verify_closed, verify_generated,
};

pub const DEFAULT_SEED: u64 = 0x0C7A_F8E8;

#[derive(Clone, Debug)]
pub struct SuiteOptions {
    pub seed: u64,
    pub cocycle: CocycleTable,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions {
            seed: DEFAULT_SEED,
            cocycle: CocycleTable::standard().clone(),
        }
    }
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    /// The identity or claim being checked.
    pub claim: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub seed: u64,
    pub checks: Vec<Check>,
}

impl SuiteReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

type Outcome = Result<String, String>;
type Relabel = Box<dyn Fn(F8) -> F8>;

fn check(name: &str, claim: &str, f: impl FnOnce() -> Outcome) -> Check {
    let (passed, detail) = match f() {
        Ok(d) => (true, d),
        Err(d) => (false, d),
    };
    Check {
        name: name.to_string(),
        claim: claim.to_string(),
        passed,
        detail,
    }
}

/// Counts cases and records the first failure.
struct Tally {
    cases: usize,
    first_failure: Option<String>,
}

impl Tally {
    fn new() -> Self {
        Tally {
            cases: 0,
            first_failure: None,
        }
    }

    fn case(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok && self.first_failure.is_none() {
            self.first_failure = Some(describe());
        }
    }

    fn finish(self) -> Outcome {
        match self.first_failure {
            None => Ok(format!("{} cases", self.cases)),
            Some(f) => Err(format!("{} cases, first failure: {f}", self.cases)),
        }
    }
}

fn pairs() -> impl Iterator<Item = (F8, F8)> {
    F8::all().flat_map(|x| F8::all().map(move |y| (x, y)))
}

fn triples() -> impl Iterator<Item = (F8, F8, F8)> {
    pairs().flat_map(|(x, y)| F8::all().map(move |z| (x, y, z)))
}

fn e(x: F8) -> IntOctonion {
    Octonion::basis(x)
}

/// Runs every check in a fixed order.
pub fn run_suite(opts: &SuiteOptions) -> SuiteReport {
    let mut checks = Vec::new();
    checks.extend(cocycle_checks(opts));
    checks.extend(algebra_checks(opts));
    checks.extend(code_checks(opts));
    checks.extend(order_checks(opts));
    SuiteReport {
        seed: opts.seed,
        checks,
    }
}

pub fn cocycle_checks(opts: &SuiteOptions) -> Vec<Check> {
    let t = &opts.cocycle;
    let mut out = Vec::new();
    out.push(check("phi-diagonal", "phi(x,x) = x^7 = ind1(x)", || {
        let mut tally = Tally::new();
        for x in F8::all() {
            let ok = t.phi(x, x) == ind_rank(&[x]).unwrap() && t.phi(x, x).bit() == x.pow(7).bits();
            tally.case(ok, || format!("x = {x}"));
        }
        tally.finish()
    }));
    out.push(check(
        "phi-antisymmetry",
        "phi(x,y) + phi(y,x) = ind2(x,y)",
        || {
            let mut tally = Tally::new();
            for (x, y) in pairs() {
                tally.case(
                    t.phi(x, y) + t.phi(y, x) == ind_rank(&[x, y]).unwrap(),
                    || format!("({x}, {y})"),
                );
            }
            tally.finish()
        },
    ));
    out.push(check(
        "phi-cyclic",
        "phi(x,y) = phi(y,z) = phi(z,x) when x+y+z = 0, all nonzero",
        || {
            let mut tally = Tally::new();
            for (x, y) in pairs() {
                let z = x + y;
                if x.is_zero() || y.is_zero() || z.is_zero() {
                    continue;
                }
                let ok = t.phi(x, y) == t.phi(y, z) && t.phi(y, z) == t.phi(z, x);
                tally.case(ok, || format!("({x}, {y}, {z})"));
            }
            tally.finish()
        },
    ));
    out.push(check(
        "phi-invariance",
        "phi(ax, ay) = phi(x,y) for a != 0, phi(x^2, y^2) = phi(x,y)",
        || {
            let mut tally = Tally::new();
            for s in F8::nonzero() {
                for (x, y) in pairs() {
                    tally.case(t.phi(s * x, s * y) == t.phi(x, y), || {
                        format!("scale {s} at ({x}, {y})")
                    });
                }
            }
            for (x, y) in pairs() {
                tally.case(t.phi(x.frobenius(), y.frobenius()) == t.phi(x, y), || {
                    format!("frobenius at ({x}, {y})")
                });
            }
            tally.finish()
        },
    ));
    out.push(check(
        "phi-formula",
        "table entries equal tr(y x^6)",
        || {
            let mut tally = Tally::new();
            for (x, y) in pairs() {
                tally.case(t.phi(x, y) == phi(x, y), || format!("({x}, {y})"));
            }
            tally.finish()
        },
    ));
    out.push(check(
        "ind-sum-rank",
        "parity sum of delta over F2-combinations = linear independence",
        || {
            let mut tally = Tally::new();
            for x in F8::all() {
                tally.case(ind_sum(&[x]).unwrap() == ind_rank(&[x]).unwrap(), || {
                    format!("[{x}]")
                });
            }
            for (x, y) in pairs() {
                tally.case(
                    ind_sum(&[x, y]).unwrap() == ind_rank(&[x, y]).unwrap(),
                    || format!("[{x}, {y}]"),
                );
            }
            for (x, y, z) in triples() {
                let xs = [x, y, z];
                tally.case(ind_sum(&xs).unwrap() == ind_rank(&xs).unwrap(), || {
                    format!("{xs:?}")
                });
            }
            tally.finish()
        },
    ));
    out.push(check("delta-phi-ind3", "coboundary of phi = ind3", || {
        let mut tally = Tally::new();
        for (x, y, z) in triples() {
            tally.case(
                t.delta_phi(x, y, z) == ind_rank(&[x, y, z]).unwrap(),
                || format!("({x}, {y}, {z})"),
            );
        }
        tally.finish()
    }));
    out
}

pub fn algebra_checks(opts: &SuiteOptions) -> Vec<Check> {
    let t = &opts.cocycle;
    let mut rng = random::rng(opts.seed);
    let mut out = Vec::new();

    out.push(check(
        "table-seed-relations",
        "generated table = table forced by the seed relations",
        || {
            table_checked(t)
                .map(|_| "64 entries".to_string())
                .map_err(|e| e.to_string())
        },
    ));

    out.push(check(
        "basis-relations",
        "(e^x)^2 = -1, e^x e^y = -e^y e^x, e^x e^y = e^y e^z = e^z e^x",
        || {
            let mut tally = Tally::new();
            let one: IntOctonion = Octonion::one();
            for x in F8::nonzero() {
                tally.case(e(x).mul_with(&e(x), t) == -one.clone(), || {
                    format!("square of e^{}", x.bits())
                });
                for y in F8::nonzero().filter(|&y| y != x) {
                    let z = x + y;
                    let xy = e(x).mul_with(&e(y), t);
                    tally.case(xy == -e(y).mul_with(&e(x), t), || {
                        format!("anticommute {x}, {y}")
                    });
                    let yz = e(y).mul_with(&e(z), t);
                    let zx = e(z).mul_with(&e(x), t);
                    tally.case(
                        xy.coeff(z) == yz.coeff(x) && yz.coeff(x) == zx.coeff(y),
                        || format!("cyclic {x}, {y}, {z}"),
                    );
                }
            }
            for x in F8::all() {
                tally.case(
                    e(F8::ZERO).mul_with(&e(x), t) == e(x)
                        && e(x).mul_with(&e(F8::ZERO), t) == e(x),
                    || format!("identity at {x}"),
                );
            }
            tally.finish()
        },
    ));

    out.push(check(
        "associator-formula",
        "[e^x,e^y,e^z] = (-1)^(phi(x,y)+phi(y,z)+phi(z,x)) (1 - (-1)^ind(x,y,z)) e^(x+y+z)",
        || {
            let mut tally = Tally::new();
            for (x, y, z) in triples() {
                let direct = Octonion::associator_with(&e(x), &e(y), &e(z), t);
                tally.case(direct == associator_formula_with(x, y, z, t), || {
                    format!("({x}, {y}, {z})")
                });
            }
            tally.finish()
        },
    ));

    out.push(check(
        "associator-antisymmetry",
        "[a_s(1), a_s(2), a_s(3)] = sign(s) [a_1, a_2, a_3]",
        || {
            let mut tally = Tally::new();
            for (x, y, z) in triples() {
                let (a, b, c) = (e(x), e(y), e(z));
                let base = Octonion::associator_with(&a, &b, &c, t);
                let swapped = Octonion::associator_with(&a, &c, &b, t);
                let rotated = Octonion::associator_with(&b, &c, &a, t);
                tally.case(swapped == -base.clone() && rotated == base, || {
                    format!("({x}, {y}, {z})")
                });
            }
            tally.finish()
        },
    ));

    out.push(check(
        "alternativity",
        "[a,a,b] = [a,b,a] = [b,a,a] = 0",
        || {
            let mut tally = Tally::new();
            for _ in 0..500 {
                let a = random::dyadic_octonion(&mut rng);
                let b = random::dyadic_octonion(&mut rng);
                let ok = Octonion::associator_with(&a, &a, &b, t).is_zero()
                    && Octonion::associator_with(&a, &b, &a, t).is_zero()
                    && Octonion::associator_with(&b, &a, &a, t).is_zero();
                tally.case(ok, || format!("a = {a}, b = {b}"));
            }
            tally.finish()
        },
    ));

    out.push(check(
        "conjugation-anti-automorphism",
        "(ab)* = b* a*",
        || {
            let mut tally = Tally::new();
            for (x, y) in pairs() {
                let (a, b) = (e(x), e(y));
                tally.case(
                    a.mul_with(&b, t).conjugate() == b.conjugate().mul_with(&a.conjugate(), t),
                    || format!("e^{} e^{}", x.bits(), y.bits()),
                );
            }
            for _ in 0..200 {
                let a = random::dyadic_octonion(&mut rng);
                let b = random::dyadic_octonion(&mut rng);
                tally.case(
                    a.mul_with(&b, t).conjugate() == b.conjugate().mul_with(&a.conjugate(), t),
                    || format!("a = {a}, b = {b}"),
                );
            }
            tally.finish()
        },
    ));

    out.push(check(
        "norm-multiplicativity",
        "N(ab) = N(a) N(b), N(a) = a a* = sum a_x^2, N(a) = 0 iff a = 0",
        || {
            let mut tally = Tally::new();
            for _ in 0..1000 {
                let a = random::rational_octonion(&mut rng);
                let b = random::rational_octonion(&mut rng);
                let ab = a.mul_with(&b, t);
                let na = a.norm_checked_with(t);
                let nb = b.norm_checked_with(t);
                let nab = ab.norm_checked_with(t);
                let ok = match (na, nb, nab) {
                    (Ok(na), Ok(nb), Ok(nab)) => {
                        nab == na * nb && (na.is_zero() == a.is_zero()) && na >= Rational64::zero()
                    }
                    _ => false,
                };
                tally.case(ok, || format!("a = {a}, b = {b}"));
            }
            tally.case(Octonion::<Rational64>::zero().norm().is_zero(), || {
                "norm of zero".into()
            });
            tally.finish()
        },
    ));

    out.push(check("moufang", "((ab)a)c = a(b(ac))", || {
        let mut tally = Tally::new();
        let moufang = |a: &DyadicOctonion, b: &DyadicOctonion, c: &DyadicOctonion| {
            let left = a.mul_with(b, t).mul_with(a, t).mul_with(c, t);
            let right = a.mul_with(&b.mul_with(&a.mul_with(c, t), t), t);
            left == right
        };
        let basis = |x: F8| Octonion::<Dyadic>::basis(x);
        for (x, y, z) in triples() {
            tally.case(moufang(&basis(x), &basis(y), &basis(z)), || {
                format!("({x}, {y}, {z})")
            });
        }
        for _ in 0..200 {
            let a = random::dyadic_octonion(&mut rng);
            let b = random::dyadic_octonion(&mut rng);
            let c = random::dyadic_octonion(&mut rng);
            tally.case(moufang(&a, &b, &c), || format!("a = {a}, b = {b}, c = {c}"));
        }
        tally.finish()
    }));

    out.push(check("inverse-law", "a (a*/N(a)) = 1", || {
        let mut tally = Tally::new();
        for _ in 0..100 {
            let a = random::nonzero_rational_octonion(&mut rng);
            let inv = a.inverse().expect("nonzero");
            tally.case(a.mul_with(&inv, t) == Octonion::one(), || {
                format!("a = {a}")
            });
        }
        tally.finish()
    }));

    out.push(check(
        "relabel-automorphisms",
        "x -> x^2 and x -> ax permute basis products",
        || {
            let mut tally = Tally::new();
            let maps: Vec<(String, Relabel)> = std::iter::once((
                "frobenius".to_string(),
                Box::new(|x: F8| x.frobenius()) as Box<dyn Fn(F8) -> F8>,
            ))
            .chain(F8::nonzero().map(|s| {
                (
                    format!("scale {s}"),
                    Box::new(move |x: F8| s * x) as Box<dyn Fn(F8) -> F8>,
                )
            }))
            .collect();
            for (name, f) in &maps {
                for (x, y) in pairs() {
                    let lhs = e(x).mul_with(&e(y), t).relabel(f);
                    let rhs = e(f(x)).mul_with(&e(f(y)), t);
                    tally.case(lhs == rhs, || format!("{name} at ({x}, {y})"));
                }
            }
            tally.finish()
        },
    ));

    out.push(check(
        "f4-remark",
        "twisted F4 algebra is commutative, associative, squares are 1",
        || {
            let r = check_f4_remark();
            if r.all_pass() {
                Ok("16 pairs, 64 triples".into())
            } else {
                Err(format!("{r:?}"))
            }
        },
    ));
    out
}

pub fn code_checks(opts: &SuiteOptions) -> Vec<Check> {
    let mut rng = random::rng(opts.seed ^ 0xC0DE);
    let mut out = Vec::new();

    out.push(check(
        "orbit-census",
        "|H| = 72, 16 orbits of sizes 1,1,2^7,8^7",
        || {
            let h = enumerate_h();
            if h.len() != 72 {
                return Err(format!("|H| = {}", h.len()));
            }
            let orbits = orbit_decomposition().map_err(|e| e.to_string())?;
            let mut sizes: Vec<usize> = orbits.iter().map(|o| o.len()).collect();
            sizes.sort_unstable();
            let expect = [1, 1, 2, 2, 2, 2, 2, 2, 2, 8, 8, 8, 8, 8, 8, 8];
            let union: BTreeSet<SubsetF8> = orbits
                .iter()
                .flat_map(|o| o.members().iter().copied())
                .collect();
            if sizes != expect || union.len() != 72 {
                return Err(format!("sizes {sizes:?}, union {}", union.len()));
            }
            for l in lines() {
                let o = codes::Orbit::through(l).map_err(|e| e.to_string())?;
                if o.members() != [l.min(l.complement()), l.max(l.complement())] {
                    return Err(format!("orbit of line {l} is {:?}", o.members()));
                }
            }
            Ok("72 sets in 16 orbits".into())
        },
    ));

    out.push(check(
        "stabilizers",
        "a 4-set has nontrivial stabilizer iff it is a line or line complement",
        || {
            let mut tally = Tally::new();
            let ls = lines();
            for s in SubsetF8::all().filter(|s| s.len() == 4) {
                let nontrivial = s.stabilizer().len() > 1;
                let line_like = ls.contains(&s) || ls.contains(&s.complement());
                tally.case(nontrivial == line_like, || format!("{s}"));
            }
            tally.finish()
        },
    ));

    out.push(check(
        "span-sizes",
        "span sizes 1, 2, 4, 16 by orbit kind, all words in H",
        || {
            let mut tally = Tally::new();
            for o in orbit_decomposition().map_err(|e| e.to_string())? {
                let c = span(&o);
                let expect = match o.kind() {
                    OrbitKind::Empty => 1,
                    OrbitKind::Full => 2,
                    OrbitKind::LinePair { .. } => 4,
                    OrbitKind::Outer { .. } => 16,
                };
                tally.case(
                    c.len() == expect && c.words().all(SubsetF8::in_h) && c.is_closed(),
                    || format!("{:?}: {}", o.kind(), c.len()),
                );
            }
            tally.finish()
        },
    ));

    out.push(check(
        "span-self-dual",
        "span(O_z) equals its brute-force dual under beta",
        || {
            let mut tally = Tally::new();
            for z in F8::nonzero() {
                let c = span(&outer_family(z).map_err(|e| e.to_string())?);
                tally.case(dual(&c) == c, || format!("z = {z}"));
            }
            tally.finish()
        },
    ));

    out.push(check(
        "span-contents",
        "span(O_z) = O_z + {∅, F8} + lines through z + complements",
        || {
            let mut tally = Tally::new();
            for z in F8::nonzero() {
                let o = outer_family(z).map_err(|e| e.to_string())?;
                let mut expect: BTreeSet<SubsetF8> = o.members().iter().copied().collect();
                expect.extend([SubsetF8::EMPTY, SubsetF8::FULL]);
                for l in lines_through(z) {
                    expect.extend([l, l.complement()]);
                }
                let got: BTreeSet<SubsetF8> = span(&o).words().collect();
                tally.case(expect.len() == 16 && got == expect, || format!("z = {z}"));
            }
            tally.finish()
        },
    ));

    out.push(check(
        "intersection-lemma",
        "|X ∩ Y| = 2 and X Δ Y is a line through z or its complement",
        || {
            let mut tally = Tally::new();
            for z in F8::nonzero() {
                let r = check_intersection_lemma(z).map_err(|e| e.to_string())?;
                tally.case(r.passed() && r.pairs_checked == 48, || {
                    format!("z = {z}: {:?}", r.failures)
                });
            }
            tally.finish()
        },
    ));

    out.push(check(
        "gl3-symmetry",
        "maps in GL3(F2) fixing z permute O_z",
        || {
            let z = F8::ALPHA;
            let family = outer_family(z).map_err(|e| e.to_string())?;
            let group = gl3();
            if group.len() != 168 {
                return Err(format!("{} group elements", group.len()));
            }
            let mut tally = Tally::new();
            for g in group.iter().filter(|g| g.apply(z) == z) {
                let image: BTreeSet<SubsetF8> =
                    family.members().iter().map(|&x| g.apply_set(x)).collect();
                let orig: BTreeSet<SubsetF8> = family.members().iter().copied().collect();
                tally.case(image == orig, || format!("{g:?}"));
            }
            tally.finish()
        },
    ));

    out.push(check(
        "beta-biadditive",
        "beta(X Δ Y, W) = beta(X, W) + beta(Y, W)",
        || {
            let mut tally = Tally::new();
            for _ in 0..1000 {
                let (x, y, w) = (
                    SubsetF8::from_mask(rng.gen()),
                    SubsetF8::from_mask(rng.gen()),
                    SubsetF8::from_mask(rng.gen()),
                );
                tally.case(beta(x ^ y, w) == beta(x, w) + beta(y, w), || {
                    format!("{x}, {y}, {w}")
                });
            }
            tally.finish()
        },
    ));
    out
}

pub fn order_checks(opts: &SuiteOptions) -> Vec<Check> {
    let mut rng = random::rng(opts.seed ^ 0x0DE5);
    let mut out = Vec::new();
    let orders = match all_orders() {
        Ok(o) => o,
        Err(e) => {
            out.push(check(
                "orders-built",
                "all sixteen orders construct",
                || Err(e.to_string()),
            ));
            return out;
        }
    };

    out.push(check(
        "order-closure",
        "E E ⊆ E on all 64 basis products",
        || {
            let mut tally = Tally::new();
            for o in &orders {
                tally.case(verify_closed(o).passed(), || o.name().to_string());
            }
            tally.finish()
        },
    ));

    out.push(check(
        "order-descriptions",
        "span of generators = halving-set description = generated subring",
        || {
            let mut tally = Tally::new();
            for o in &orders {
                // (a) vs (b): every code representative is in the lattice, and the
                // lattice basis passes the halving-set test
                let reps = code_representatives(o);
                let ab = reps
                    .iter()
                    .all(|r| o.contains_by_lattice(r) && o.contains(r))
                    && o.basis().iter().all(|b| o.contains(b))
                    && o.lattice().index() * (o.code().len() as i64) == 256;
                tally.case(ab, || format!("{}: (a) vs (b)", o.name()));
                for &x in o.orbit().members() {
                    let ok = verify_generated(o.orbit(), x).is_ok_and(|c| c.matches_order);
                    tally.case(ok, || format!("{}: (c) from {x}", o.name()));
                }
            }
            tally.finish()
        },
    ));

    out.push(check(
        "translation-identity",
        "(e^Y/2) e^z ≡ (1/2) e^(z+Y) mod O(Z)",
        || {
            let mut tally = Tally::new();
            for o in &orders {
                tally.case(check_translation_identity(o.orbit()), || {
                    o.name().to_string()
                });
            }
            tally.finish()
        },
    ));

    out.push(check("order-stability", "E O(Z) = E = O(Z) E", || {
        let mut tally = Tally::new();
        for o in &orders {
            tally.case(check_stability(o), || o.name().to_string());
        }
        tally.finish()
    }));

    out.push(check(
        "integrality",
        "trace and norm are integers on every order",
        || {
            let mut tally = Tally::new();
            for o in &orders {
                let basis = o.basis();
                for b in &basis {
                    tally.case(b.trace().is_integer() && b.norm().is_integer(), || {
                        format!("{}: {b}", o.name())
                    });
                }
                for _ in 0..200 {
                    let mut v = DyadicOctonion::zero();
                    for b in &basis {
                        v = v + b.scale(&Dyadic::from_int(rng.gen_range(-3..=3)));
                    }
                    tally.case(
                        v.trace().is_integer() && v.norm().is_integer() && o.contains(&v),
                        || format!("{}: {v}", o.name()),
                    );
                }
            }
            tally.finish()
        },
    ));

    out.push(check(
        "halving-set-sums",
        "halving set of u + v is the symmetric difference",
        || {
            let mut tally = Tally::new();
            for _ in 0..500 {
                let u: DyadicOctonion = Octonion::new(std::array::from_fn(|_| {
                    Dyadic::halves(rng.gen_range(-5..=5))
                }));
                let v: DyadicOctonion = Octonion::new(std::array::from_fn(|_| {
                    Dyadic::halves(rng.gen_range(-5..=5))
                }));
                let ok = match (
                    halving_set(&u),
                    halving_set(&v),
                    halving_set(&(u.clone() + v.clone())),
                ) {
                    (Ok(a), Ok(b), Ok(s)) => s == a ^ b,
                    _ => false,
                };
                tally.case(ok, || format!("u = {u}, v = {v}"));
            }
            tally.finish()
        },
    ));

    out.push(check("lattice-certificates", "octavian: even, det 1, 240 units; double Hurwitzian: det 16, 48 units; Kleinian: det 64, 16 units; Gravesian: det 256, 16 units", || {
        let mut tally = Tally::new();
        for o in &orders {
            let c = gram_certificate(o);
            let (det, units) = match o.family() {
                "octavian" => (1, 240),
                "double Hurwitzian" => (16, 48),
                "Kleinian" => (64, 16),
                _ => (256, 16),
            };
            let symmetric = (0..8).all(|i| (0..8).all(|j| c.gram[i][j] == c.gram[j][i]));
            tally.case(c.even && symmetric && c.determinant == det && c.unit_count == units, || {
                format!("{}: det {}, units {}, even {}", o.name(), c.determinant, c.unit_count, c.even)
            });
        }
        tally.finish()
    }));

    out.push(check(
        "containment-poset",
        "7 maximal orders (the octavian ones), unique minimum Gravesian",
        || {
            let p = containment_poset(&orders);
            let maximal: Vec<&str> = p.maximal.iter().map(|&i| orders[i].family()).collect();
            let ok = p.consistent
                && maximal.len() == 7
                && maximal.iter().all(|&f| f == "octavian")
                && p.minimum.is_some_and(|m| orders[m].name() == "Gravesian");
            if ok {
                Ok(format!("{} orders", orders.len()))
            } else {
                Err(format!(
                    "maximal {maximal:?}, minimum {:?}, consistent {}",
                    p.minimum, p.consistent
                ))
            }
        },
    ));

    out.push(check(
        "trace-pairing",
        "tr(ab) mod Z = |X ∩ X'|/2 mod Z",
        || {
            let mut tally = Tally::new();
            let h = enumerate_h();
            for &x in &h {
                for &y in &h {
                    let a = orders::e_half(x).expect("in H");
                    let b = orders::e_half(y).expect("in H");
                    let got = orders::trace_pairing_obstruction(&a, &b);
                    tally.case(got == Ok(F2::parity((x & y).len())), || format!("{x}, {y}"));
                }
            }
            tally.finish()
        },
    ));

    out
}
