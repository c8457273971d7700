use criterion::{black_box, criterion_group, criterion_main, Criterion};

use stabletoric::graph::{Family, SimpleGraph};
use stabletoric::polytope::{cone_membership, idp_check, is_unimodular, semigroup_membership, stable_set_polytope};

fn unimodularity(c: &mut Criterion) {
    let bip = stable_set_polytope(&SimpleGraph::cycle(6).unwrap().complement());
    let odd = stable_set_polytope(&SimpleGraph::cycle(7).unwrap().complement());
    c.bench_function("is_unimodular/complement_c6", |b| b.iter(|| is_unimodular(black_box(&bip)).unwrap()));
    c.bench_function("is_unimodular/complement_c7", |b| b.iter(|| is_unimodular(black_box(&odd)).unwrap()));
}

fn idp(c: &mut Criterion) {
    let mut group = c.benchmark_group("idp_check");
    group.sample_size(10);
    let c5 = stable_set_polytope(&SimpleGraph::cycle(5).unwrap().complement());
    group.bench_function("complement_c5_d6", |b| b.iter(|| idp_check(black_box(&c5), 6).unwrap()));
    let holes = stable_set_polytope(&Family::TwoOddHoles(2, 2).build().unwrap());
    group.bench_function("two_odd_holes_d5", |b| b.iter(|| idp_check(black_box(&holes), 5).unwrap()));
    group.finish();
}

fn membership(c: &mut Criterion) {
    let q = stable_set_polytope(&Family::TwoOddHoles(2, 2).build().unwrap());
    let w = vec![1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 5];
    c.bench_function("cone_membership/two_odd_holes", |b| b.iter(|| cone_membership(black_box(&w), &q).unwrap()));
    c.bench_function("semigroup_membership/two_odd_holes", |b| {
        b.iter(|| semigroup_membership(black_box(&w), &q).unwrap())
    });
}

criterion_group!(benches, unimodularity, idp, membership);
criterion_main!(benches);
