use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use qbforge::filters::mu_law_suite;
use qbforge::forge::canon::canonical_key;
use qbforge::forge::{enumerate_algebras, run_sweep, SearchSpec, TargetClass};
use qbforge::hoops::hoop_suite;
use qbforge::quantale::DEFAULT_CAP;
use qbforge::{catalog, Quantale};
use qbforge_bench::algebras;

fn enumeration(c: &mut Criterion) {
    let mut g = c.benchmark_group("enumerate");
    for t in [TargetClass::IntegralQb, TargetClass::PseudoHoop] {
        let spec = SearchSpec { min_size: 4, ..SearchSpec::new(t, 4) };
        g.bench_function(BenchmarkId::new(t.name(), 4), |b| b.iter(|| enumerate_algebras(black_box(&spec)).unwrap()));
    }
    g.finish();
}

fn quantale_laws(c: &mut Criterion) {
    let mut g = c.benchmark_group("quantale_laws");
    for name in ["godel:6", "heyting-d5", "prod(godel:3,godel:3)"] {
        let a = catalog(name).unwrap();
        g.bench_function(name, |b| b.iter(|| Quantale::new(black_box(&a), DEFAULT_CAP).check_laws().unwrap()));
    }
    g.finish();
}

fn suites(c: &mut Criterion) {
    let sweep = algebras(TargetClass::IntegralQb, 4);
    let hoops = algebras(TargetClass::PseudoHoop, 4);
    c.bench_function("mu_suite/sweep4", |b| {
        b.iter(|| sweep.iter().map(|a| mu_law_suite(a, DEFAULT_CAP).unwrap().holds()).filter(|&h| h).count())
    });
    c.bench_function("hoop_suite/hoops4", |b| {
        b.iter(|| hoops.iter().map(|a| hoop_suite(a).unwrap().holds()).filter(|&h| h).count())
    });
    c.bench_function("run_sweep/sweep4", |b| b.iter(|| run_sweep(black_box(&sweep), DEFAULT_CAP).unwrap()));
}

fn canonical(c: &mut Criterion) {
    let d5 = catalog("heyting-d5").unwrap();
    let g6 = catalog("godel:6").unwrap();
    c.bench_function("canonical_key/heyting-d5", |b| b.iter(|| canonical_key(black_box(&d5))));
    c.bench_function("canonical_key/godel:6", |b| b.iter(|| canonical_key(black_box(&g6))));
}

criterion_group!(benches, enumeration, quantale_laws, suites, canonical);
criterion_main!(benches);
