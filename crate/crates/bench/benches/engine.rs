use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use rootloop_bench::{roots, sweep};
use rootloop_core::{
    compute_rooted_group, coset_set, enumerate_cluster_pattern, enumerate_quiver_class, fixtures,
    isomorphic, EqualityMode, GroupCaps, Seed, DEFAULT_PATTERN_CAP,
};

fn mutation(c: &mut Criterion) {
    let mut g = c.benchmark_group("apply_word");
    for (name, root) in roots() {
        let w = sweep(root.n(), 8);
        g.bench_with_input(BenchmarkId::from_parameter(name), &root, |b, r| {
            b.iter(|| r.apply(&w).unwrap())
        });
    }
    g.finish();
}

fn patterns(c: &mut Criterion) {
    let mut g = c.benchmark_group("cluster_pattern");
    for (name, root) in roots() {
        for mode in [EqualityMode::default(), EqualityMode::Strict] {
            let id = BenchmarkId::new(name, mode);
            g.bench_with_input(id, &root, |b, r| {
                b.iter(|| enumerate_cluster_pattern(r, mode, DEFAULT_PATTERN_CAP))
            });
        }
    }
    g.finish();
}

fn quiver_classes(c: &mut Criterion) {
    let mut g = c.benchmark_group("quiver_class");
    for (name, root) in roots() {
        g.bench_with_input(BenchmarkId::from_parameter(name), &root.quiver, |b, q| {
            b.iter(|| enumerate_quiver_class(q, DEFAULT_PATTERN_CAP))
        });
    }
    g.finish();
}

fn groups(c: &mut Criterion) {
    let mut g = c.benchmark_group("rooted_group");
    g.sample_size(10);
    for (name, root) in roots() {
        g.bench_with_input(BenchmarkId::from_parameter(name), &root, |b, r| {
            b.iter(|| {
                compute_rooted_group(r, EqualityMode::default(), GroupCaps::default()).unwrap()
            })
        });
    }
    g.finish();
    let mut g = c.benchmark_group("cosets");
    for (name, root) in roots() {
        g.bench_with_input(BenchmarkId::from_parameter(name), &root, |b, r| {
            b.iter(|| coset_set(r, EqualityMode::default(), DEFAULT_PATTERN_CAP).unwrap())
        });
    }
    g.finish();
}

fn iso(c: &mut Criterion) {
    let a3 = Seed::initial(&fixtures::a3());
    let cycle = Seed::initial(&fixtures::cycle3());
    let b3 = Seed::initial(&fixtures::b3());
    let mut g = c.benchmark_group("isomorphic");
    g.sample_size(10);
    g.bench_function("a3/cycle3", |b| {
        b.iter(|| isomorphic(&a3, &cycle, DEFAULT_PATTERN_CAP).unwrap())
    });
    g.bench_function("a3/b3", |b| {
        b.iter(|| isomorphic(&a3, &b3, DEFAULT_PATTERN_CAP).unwrap())
    });
    g.finish();
}

criterion_group!(benches, mutation, patterns, quiver_classes, groups, iso);
criterion_main!(benches);
