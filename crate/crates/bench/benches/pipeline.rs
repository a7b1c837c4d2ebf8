use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use peskine_core::associations::{cubic_oracle, k3_oracle, parse_table_fixture, table1};
use peskine_core::fixtures::{appendix_cubic, APPENDIX_SIGMA, TABLE1};
use peskine_core::markings::{admissible, cross_validate};
use peskine_core::poly::gcd::normalize_primitive;
use peskine_core::poly::PrimeField;
use peskine_core::trivector::{extract_cubic, parse_tvec, peskine_equations, smoothness_check, Flag};

fn lattices(c: &mut Criterion) {
    let ds: Vec<i64> = (1..=2000).filter(|&d| admissible(d)).collect();
    c.bench_function("cross_validate d <= 2000", |b| {
        b.iter(|| ds.iter().all(|&d| cross_validate(d).unwrap().passed()))
    });
    c.bench_function("oracles d = 4990", |b| {
        b.iter(|| (k3_oracle(black_box(4990)).unwrap(), cubic_oracle(black_box(4990)).unwrap()))
    });
    let fixture = parse_table_fixture(TABLE1).unwrap();
    let rows: Vec<i64> = fixture.iter().map(|r| r.d).collect();
    c.bench_function("table fixture rows", |b| b.iter(|| table1(&rows, &fixture).unwrap()));
}

fn geometry(c: &mut Criterion) {
    let sigma = parse_tvec(APPENDIX_SIGMA).unwrap();
    let fp = PrimeField::new(10007).unwrap();
    let sigma_p = sigma.reduce(fp).unwrap();
    c.bench_function("peskine equations mod 10007", |b| b.iter(|| peskine_equations(&sigma_p)));
    let flag = Flag::standard();
    c.bench_function("extract cubic", |b| b.iter(|| extract_cubic(&sigma, &flag).unwrap()));
    let f = normalize_primitive(&appendix_cubic());
    c.bench_function("smoothness mod 10007", |b| b.iter(|| smoothness_check(&f, 10007).unwrap()));
}

criterion_group! {
    name = benches;
    config = Criterion::default().sample_size(10);
    targets = lattices, geometry
}
criterion_main!(benches);
