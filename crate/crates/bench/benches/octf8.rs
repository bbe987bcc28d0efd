use criterion::{black_box, criterion_group, criterion_main, Criterion};

use octf8::algebra::random;
use octf8::orders::{all_orders, gram_certificate, verify_closed};
use octf8::verify::{run_suite, SuiteOptions};

fn multiply(c: &mut Criterion) {
    let mut rng = random::rng(7);
    let a = random::dyadic_octonion(&mut rng);
    let b = random::dyadic_octonion(&mut rng);
    c.bench_function("dyadic octonion multiply", |bch| {
        bch.iter(|| black_box(&a).multiply(black_box(&b)))
    });
    let a = random::rational_octonion(&mut rng);
    let b = random::rational_octonion(&mut rng);
    c.bench_function("rational octonion multiply", |bch| {
        bch.iter(|| black_box(&a).multiply(black_box(&b)))
    });
}

fn orders(c: &mut Criterion) {
    c.bench_function("build all 16 orders", |b| b.iter(|| all_orders().unwrap()));
    let orders = all_orders().unwrap();
    let octavian = orders.iter().find(|o| o.name() == "0-integers").unwrap();
    c.bench_function("closure certificate (octavian)", |b| {
        b.iter(|| verify_closed(black_box(octavian)))
    });
    c.bench_function("gram certificate with unit count (octavian)", |b| {
        b.iter(|| gram_certificate(black_box(octavian)))
    });
}

fn suite(c: &mut Criterion) {
    let mut g = c.benchmark_group("suite");
    g.sample_size(10);
    g.bench_function("full verification suite", |b| {
        b.iter(|| run_suite(&SuiteOptions::default()))
    });
    g.finish();
}

criterion_group!(benches, multiply, orders, suite);
criterion_main!(benches);
