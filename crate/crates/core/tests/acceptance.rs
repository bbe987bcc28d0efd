//! Acceptance criteria 1 to 14, one PASS/FAIL line each.
//!
//! Runs without the libtest harness so the report reads top to bottom; the
//! process exits nonzero if any criterion fails.

use std::collections::BTreeMap;
use std::process::ExitCode;

use octf8::algebra::{
    associator_formula, check_f4_remark, random, IntOctonion, MultiplicationTable, RationalOctonion,
};
use octf8::cocycle::{delta_phi, ind_rank, ind_sum, phi};
use octf8::codes::{dual, enumerate_h, lines_through, orbit_decomposition, span};
use octf8::orders::{
    all_orders, check_stability, code_representatives, containment_poset, from_scaled,
    gram_certificate, verify_closed, verify_generated,
};
use octf8::verify::{algebra_checks, cocycle_checks, SuiteOptions, DEFAULT_SEED};
use octf8::{CocycleTable, Octonion, OrbitKind, SubsetF8, F2, F8};
use serde_json::Value;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn ind(xs: &[F8]) -> F2 {
    ind_rank(xs).expect("arity 1..=3")
}

fn cocycle_laws() -> Outcome {
    let mut a = 0;
    for x in F8::all() {
        ensure!(phi(x, x) == ind(&[x]), "phi({x},{x})");
        a += 1;
    }
    let mut b = 0;
    for x in F8::all() {
        for y in F8::all() {
            ensure!(
                phi(x, y) + phi(y, x) == ind(&[x, y]),
                "antisymmetry at ({x},{y})"
            );
            b += 1;
        }
    }
    let mut c = 0;
    for x in F8::nonzero() {
        for y in F8::nonzero() {
            let z = x + y;
            if z.is_zero() {
                continue;
            }
            ensure!(
                phi(x, y) == phi(y, z) && phi(y, z) == phi(z, x),
                "cyclic at ({x},{y},{z})"
            );
            c += 1;
        }
    }
    let mut d = 0;
    for x in F8::all() {
        for y in F8::all() {
            for s in F8::nonzero() {
                ensure!(
                    phi(s * x, s * y) == phi(x, y),
                    "scaling by {s} at ({x},{y})"
                );
                d += 1;
            }
            ensure!(
                phi(x.frobenius(), y.frobenius()) == phi(x, y),
                "frobenius at ({x},{y})"
            );
            d += 1;
        }
    }
    ensure!(
        (a, b, c, d) == (8, 64, 42, 7 * 64 + 64),
        "unexpected case counts {:?}",
        (a, b, c, d)
    );
    Ok(format!("(a) {a}, (b) {b}, (c) {c}, (d) {d} cases"))
}

fn ind_equivalence() -> Outcome {
    let mut n = 0;
    for x in F8::all() {
        ensure!(ind_sum(&[x]) == ind_rank(&[x]), "length 1 at {x}");
        n += 1;
        for y in F8::all() {
            ensure!(
                ind_sum(&[x, y]) == ind_rank(&[x, y]),
                "length 2 at ({x},{y})"
            );
            n += 1;
            for z in F8::all() {
                ensure!(
                    ind_sum(&[x, y, z]) == ind_rank(&[x, y, z]),
                    "length 3 at ({x},{y},{z})"
                );
                n += 1;
            }
        }
    }
    ensure!(n == 584, "{n} cases");
    Ok(format!("{n} cases"))
}

fn coboundary() -> Outcome {
    let mut n = 0;
    for x in F8::all() {
        for y in F8::all() {
            for z in F8::all() {
                ensure!(delta_phi(x, y, z) == ind(&[x, y, z]), "at ({x},{y},{z})");
                n += 1;
            }
        }
    }
    ensure!(n == 512, "{n} cases");
    Ok(format!("{n} triples"))
}

fn table_identification() -> Outcome {
    let generated =
        MultiplicationTable::from_algebra(CocycleTable::standard()).map_err(|e| e.to_string())?;
    let seeded = MultiplicationTable::from_seed_relations().map_err(|e| e.to_string())?;
    let mut n = 0;
    for (g, s) in generated.rows().iter().zip(seeded.rows()) {
        for (a, b) in g.iter().zip(s) {
            ensure!(a == b, "{a} != {b}");
            n += 1;
        }
    }
    ensure!(n == 64, "{n} entries");
    let e1e2 = generated.rows()[1][2].to_string();
    ensure!(e1e2 == "e_4", "e_1 e_2 = {e1e2}");
    Ok(format!("{n} entries, e_1 e_2 = {e1e2}"))
}

fn associator_law() -> Outcome {
    let e = |x: F8| IntOctonion::basis(x);
    let assoc = |a: &IntOctonion, b: &IntOctonion, c: &IntOctonion| Octonion::associator(a, b, c);
    let mut formula = 0;
    let mut antisym = 0;
    for x in F8::all() {
        for y in F8::all() {
            for z in F8::all() {
                let direct = assoc(&e(x), &e(y), &e(z));
                ensure!(
                    direct == associator_formula(x, y, z),
                    "formula at ({x},{y},{z})"
                );
                formula += 1;
                let neg = -direct.clone();
                let perms = [
                    (assoc(&e(y), &e(z), &e(x)), &direct),
                    (assoc(&e(z), &e(x), &e(y)), &direct),
                    (assoc(&e(y), &e(x), &e(z)), &neg),
                    (assoc(&e(x), &e(z), &e(y)), &neg),
                    (assoc(&e(z), &e(y), &e(x)), &neg),
                ];
                for (p, want) in &perms {
                    ensure!(p == *want, "antisymmetry at ({x},{y},{z})");
                }
                antisym += 1;
            }
        }
    }
    let mut rng = random::rng(DEFAULT_SEED);
    let mut alt = 0;
    for _ in 0..500 {
        let a = random::dyadic_octonion(&mut rng);
        let b = random::dyadic_octonion(&mut rng);
        ensure!(
            Octonion::associator(&a, &a, &b).is_zero()
                && Octonion::associator(&a, &b, &a).is_zero()
                && Octonion::associator(&b, &a, &a).is_zero(),
            "alternativity fails for {a} and {b}"
        );
        alt += 1;
    }
    ensure!((formula, antisym, alt) == (512, 512, 500), "case counts");
    Ok(format!(
        "formula {formula}, antisymmetry {antisym} triples, alternativity {alt} random pairs"
    ))
}

fn norm_multiplicativity() -> Outcome {
    let mut rng = random::rng(DEFAULT_SEED);
    let zero = RationalOctonion::zero();
    let zero_norm = zero.norm_checked().map_err(|e| e.to_string())?;
    let mut n = 0;
    for _ in 0..1000 {
        let a = random::rational_octonion(&mut rng);
        let b = random::rational_octonion(&mut rng);
        let na = a.norm_checked().map_err(|e| e.to_string())?;
        let nb = b.norm_checked().map_err(|e| e.to_string())?;
        let nab = a.multiply(&b).norm_checked().map_err(|e| e.to_string())?;
        ensure!(nab == na * nb, "N(ab) != N(a)N(b) for {a} and {b}");
        ensure!((na == zero_norm) == a.is_zero(), "N(a) = 0 but a != 0: {a}");
        n += 1;
    }
    ensure!(zero.is_zero() && zero.norm() == zero_norm, "N(0) != 0");
    ensure!(n == 1000, "{n} cases");
    Ok(format!(
        "{n} random pairs of rational octonions, N(a) = a a* = sum a_x^2"
    ))
}

fn moufang() -> Outcome {
    let law = |a: &IntOctonion, b: &IntOctonion, c: &IntOctonion| {
        a.multiply(b).multiply(a).multiply(c) == a.multiply(&b.multiply(&a.multiply(c)))
    };
    let mut basis = 0;
    for x in F8::all() {
        for y in F8::all() {
            for z in F8::all() {
                let e = IntOctonion::basis;
                ensure!(law(&e(x), &e(y), &e(z)), "basis triple ({x},{y},{z})");
                basis += 1;
            }
        }
    }
    let mut rng = random::rng(DEFAULT_SEED ^ 0x4D0F);
    let mut randomized = 0;
    for _ in 0..200 {
        let [a, b, c] = [(); 3].map(|_| random::dyadic_octonion(&mut rng));
        ensure!(
            a.multiply(&b).multiply(&a).multiply(&c) == a.multiply(&b.multiply(&a.multiply(&c))),
            "random triple {a}, {b}, {c}"
        );
        randomized += 1;
    }
    Ok(format!(
        "{basis} basis triples, {randomized} random triples"
    ))
}

fn orbit_census() -> Outcome {
    let h = enumerate_h();
    ensure!(h.len() == 72, "|H| = {}", h.len());
    let orbits = orbit_decomposition().map_err(|e| e.to_string())?;
    let mut sizes: Vec<usize> = orbits.iter().map(|o| o.len()).collect();
    sizes.sort_unstable();
    let expected: Vec<usize> = [1, 1].into_iter().chain([2; 7]).chain([8; 7]).collect();
    ensure!(sizes == expected, "sizes {sizes:?}");
    let covered: usize = orbits.iter().map(|o| o.len()).sum();
    ensure!(covered == 72, "orbits cover {covered} sets");
    let mut fours = 0;
    for s in SubsetF8::all().filter(|s| s.len() == 4) {
        let affine = s.is_line() || s.complement().is_line();
        ensure!(
            (s.stabilizer().len() > 1) == affine,
            "stabilizer of {}",
            s.hex()
        );
        fours += 1;
    }
    ensure!(fours == 70, "{fours} four-sets");
    Ok(format!(
        "|H| = 72, {} orbits, {fours} stabilizers",
        orbits.len()
    ))
}

fn code_structure() -> Outcome {
    let orbits = orbit_decomposition().map_err(|e| e.to_string())?;
    let mut self_dual = 0;
    for o in &orbits {
        let code = span(o);
        let want = match o.kind() {
            OrbitKind::Empty => 1,
            OrbitKind::Full => 2,
            OrbitKind::LinePair { .. } => 4,
            OrbitKind::Outer { .. } => 16,
        };
        ensure!(
            code.len() == want,
            "span of {:?} has {} words",
            o.kind(),
            code.len()
        );
        if let OrbitKind::Outer { sum } = o.kind() {
            ensure!(dual(&code) == code, "span(O_{sum}) is not self-dual");
            let mut expected: Vec<SubsetF8> = o.members().to_vec();
            expected.extend([SubsetF8::EMPTY, SubsetF8::FULL]);
            for l in lines_through(sum) {
                expected.extend([l, l.complement()]);
            }
            expected.sort();
            expected.dedup();
            ensure!(
                expected.len() == 16,
                "expected contents have {} words",
                expected.len()
            );
            let words: Vec<SubsetF8> = code.words().collect();
            ensure!(words == expected, "contents of span(O_{sum})");
            self_dual += 1;
        }
    }
    ensure!(self_dual == 7, "{self_dual} outer families");
    Ok(format!(
        "sizes by kind, {self_dual} self-dual spans with expected contents"
    ))
}

fn orders() -> Outcome {
    let orders = all_orders().map_err(|e| e.to_string())?;
    ensure!(orders.len() == 16, "{} orders", orders.len());
    let mut generated = 0;
    for o in &orders {
        ensure!(verify_closed(o).passed(), "{} is not closed", o.name());
        for &x in o.orbit().members() {
            let cert = verify_generated(o.orbit(), x).map_err(|e| e.to_string())?;
            ensure!(
                cert.matches_order,
                "{} generated from {}",
                o.name(),
                x.hex()
            );
            generated += 1;
        }
        for r in code_representatives(o) {
            ensure!(
                o.contains_by_lattice(&r),
                "{}: representative {r} outside lattice",
                o.name()
            );
        }
        for x in SubsetF8::all() {
            let half = from_scaled(&std::array::from_fn(|i| i64::from((x.mask() >> i) & 1)));
            ensure!(
                o.contains_by_lattice(&half) == o.code().contains(x),
                "{}: lattice and halving-set descriptions differ at {}",
                o.name(),
                x.hex()
            );
        }
        ensure!(check_stability(o), "{}: E O(Z) != E", o.name());
    }
    Ok(format!(
        "16 orders closed under 64 basis products, {generated} generated subrings match, descriptions agree on all 256 halving sets"
    ))
}

fn oracle() -> BTreeMap<Vec<String>, Value> {
    let raw: Value =
        serde_json::from_str(include_str!("data/oracle_orders.json")).expect("oracle json");
    raw["orders"]
        .as_array()
        .expect("orders array")
        .iter()
        .map(|o| {
            let members = o["members"]
                .as_array()
                .expect("members")
                .iter()
                .map(|m| m.as_str().expect("hex").to_string())
                .collect();
            (members, o.clone())
        })
        .collect()
}

fn lattice_certificates() -> Outcome {
    let oracle = oracle();
    ensure!(oracle.len() == 16, "oracle has {} orders", oracle.len());
    let orders = all_orders().map_err(|e| e.to_string())?;
    let mut tally: BTreeMap<&str, usize> = BTreeMap::new();
    for o in &orders {
        let cert = gram_certificate(o);
        let key: Vec<String> = o.orbit().members().iter().map(|m| m.hex()).collect();
        let want = oracle
            .get(&key)
            .ok_or_else(|| format!("oracle lacks {key:?}"))?;
        ensure!(
            want["determinant"].as_i64() == Some(cert.determinant as i64)
                && want["unit_count"].as_u64() == Some(cert.unit_count as u64)
                && want["even"].as_bool() == Some(cert.even)
                && want["span_size"].as_u64() == Some(o.code().len() as u64),
            "{}: det {} units {} even {} disagree with oracle {want}",
            o.name(),
            cert.determinant,
            cert.unit_count,
            cert.even
        );
        let family_values = match o.orbit().kind() {
            OrbitKind::Empty => (256, 16),
            OrbitKind::Full => (64, 16),
            OrbitKind::LinePair { .. } => (16, 48),
            OrbitKind::Outer { .. } => (1, 240),
        };
        ensure!(
            (cert.determinant, cert.unit_count) == family_values,
            "{}: det {} units {}",
            o.name(),
            cert.determinant,
            cert.unit_count
        );
        if let OrbitKind::Outer { .. } = o.orbit().kind() {
            ensure!(cert.even, "{} is not even", o.name());
        }
        *tally.entry(o.family()).or_default() += 1;
    }
    Ok(format!("16 orders match the independent oracle {tally:?}"))
}

fn poset() -> Outcome {
    let orders = all_orders().map_err(|e| e.to_string())?;
    let p = containment_poset(&orders);
    ensure!(p.consistent, "lattice and code containment disagree");
    ensure!(p.maximal.len() == 7, "{} maximal elements", p.maximal.len());
    ensure!(
        p.maximal.iter().all(|&i| orders[i].family() == "octavian"),
        "a non-octavian order is maximal"
    );
    let min = p.minimum.ok_or("no unique minimum")?;
    ensure!(
        orders[min].name() == "Gravesian",
        "minimum is {}",
        orders[min].name()
    );
    Ok(format!("7 maximal, minimum {}", orders[min].name()))
}

fn f4_remark() -> Outcome {
    let r = check_f4_remark();
    ensure!(r.commutative, "not commutative");
    ensure!(r.associative, "not associative");
    ensure!(r.squares_are_identity, "a basis square is not 1");
    ensure!(r.all_pass(), "{r:?}");
    Ok("commutative, associative, basis squares = 1".into())
}

fn negative_control() -> Outcome {
    const GUARDS: [&str; 3] = [
        "delta-phi-ind3",
        "associator-formula",
        "norm-multiplicativity",
    ];
    let run = |cocycle: CocycleTable| {
        let opts = SuiteOptions {
            cocycle,
            ..SuiteOptions::default()
        };
        let mut checks = cocycle_checks(&opts);
        checks.extend(algebra_checks(&opts));
        checks
            .into_iter()
            .filter(|c| GUARDS.contains(&c.name.as_str()))
            .collect::<Vec<_>>()
    };
    let clean = run(CocycleTable::standard().clone());
    ensure!(clean.len() == 3, "guard checks missing: {clean:?}");
    ensure!(
        clean.iter().all(|c| c.passed),
        "guards fail on the standard cocycle"
    );
    let mut caught = 0;
    for x in F8::all() {
        for y in F8::all() {
            let failed: Vec<String> = run(CocycleTable::standard().with_flipped(x, y))
                .into_iter()
                .filter(|c| !c.passed)
                .map(|c| c.name)
                .collect();
            ensure!(!failed.is_empty(), "flipping phi({x},{y}) goes unnoticed");
            caught += 1;
        }
    }
    Ok(format!(
        "all {caught} single-bit flips caught by criteria 3, 5 or 6"
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 14] = [
        ("cocycle laws", cocycle_laws),
        ("ind equivalence", ind_equivalence),
        ("coboundary identity", coboundary),
        ("table identification", table_identification),
        ("associator formula", associator_law),
        ("norm multiplicativity", norm_multiplicativity),
        ("Moufang law", moufang),
        ("orbit census", orbit_census),
        ("code structure", code_structure),
        ("orders", orders),
        ("lattice certificates", lattice_certificates),
        ("containment poset", poset),
        ("F4 remark", f4_remark),
        ("negative control", negative_control),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let (tag, detail) = match std::panic::catch_unwind(check) {
            Ok(Ok(d)) => ("PASS", d),
            Ok(Err(d)) => ("FAIL", d),
            Err(_) => ("FAIL", "panicked".to_string()),
        };
        if tag == "FAIL" {
            failed += 1;
        }
        println!("{tag} {:>2} {name}: {detail}", i + 1);
    }
    println!(
        "{}/{} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
