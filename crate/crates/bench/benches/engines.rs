use criterion::{black_box, criterion_group, criterion_main, Criterion};

use sphquad::angles::{net_feasible, pyramid_membership_f64, AngleVector, Direction};
use sphquad::builders::{build, classify, enumerate_primitive, NetLabel};
use sphquad::chains::{build_chains, count_bounds, Scope};
use sphquad::geometry::{continue_to_triple, parameter_interval, realize_config};

fn catalogue(c: &mut Criterion) {
    c.bench_function("enumerate_primitive(2)", |b| b.iter(|| enumerate_primitive(black_box(2))));
    let label: NetLabel = "Z'[1,1] mu=1 + D15@side0".parse().unwrap();
    c.bench_function("build Z'[1,1] mu=1 + digon", |b| b.iter(|| build(black_box(&label)).unwrap()));
    let net = build(&"V'[3,2]".parse().unwrap()).unwrap();
    c.bench_function("classify V'[3,2]", |b| b.iter(|| classify(black_box(&net)).unwrap()));
}

fn angles(c: &mut Criterion) {
    let a = AngleVector::parse("0.3,0.8,0.5,2.45", true).unwrap();
    let label: NetLabel = "X'[1,0]".parse().unwrap();
    c.bench_function("net_feasible exact", |b| b.iter(|| net_feasible(black_box(&label), black_box(&a)).unwrap()));
    c.bench_function("pyramid_membership_f64", |b| b.iter(|| pyramid_membership_f64(black_box([0.6, 0.7, 0.8, 0.9]))));
}

fn chains(c: &mut Criterion) {
    let a = AngleVector::parse("0.3,0.8,0.5,4.45", true).unwrap();
    let all = Scope::all();
    c.bench_function("build_chains X n=4", |b| b.iter(|| build_chains(black_box(&a), &all)));
    c.bench_function("count_bounds X n=4", |b| b.iter(|| count_bounds(black_box(&a), &all)));
}

fn geometry(c: &mut Criterion) {
    let (lo, hi) = parameter_interval(0.7, 0.8, 0.6, 0.9).unwrap();
    let t = 0.5 * (lo + hi);
    c.bench_function("realize_config", |b| b.iter(|| realize_config(0.7, 0.8, 0.6, 0.9, black_box(t)).unwrap()));
    let mut group = c.benchmark_group("slow");
    group.sample_size(10);
    group.bench_function("parameter_interval", |b| {
        b.iter(|| parameter_interval(black_box(0.7), 0.8, 0.6, 0.9).unwrap())
    });
    group.bench_function("continue_to_triple", |b| {
        b.iter(|| continue_to_triple(0.75, 0.8, 0.6, 0.9, black_box(Direction::Bottom)).unwrap())
    });
    group.finish();
}

criterion_group!(benches, catalogue, angles, chains, geometry);
criterion_main!(benches);
