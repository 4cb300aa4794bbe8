use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

use wtl_bench::{seeded_constant_machines, seeded_machines};
use wtl_core::graph::transitive_closure;
use wtl_core::{amortize, classify, regular, sim};

fn bench_classify(c: &mut Criterion) {
    let mut group = c.benchmark_group("classify");
    for &states in &[50usize, 150, 300] {
        let machines = seeded_machines(0xbe9c_0001, 4, states, 3);
        group.bench_with_input(BenchmarkId::from_parameter(states), &machines, |b, ms| {
            b.iter(|| {
                for m in ms {
                    black_box(classify(m));
                }
            })
        });
    }
    group.finish();
}

fn bench_transitive_closure(c: &mut Criterion) {
    let mut group = c.benchmark_group("transitive_closure");
    for &states in &[100usize, 300] {
        let g = seeded_machines(0xbe9c_0002, 1, states, 3)[0].digraph();
        group.bench_with_input(BenchmarkId::from_parameter(states), &g, |b, g| {
            b.iter(|| black_box(transitive_closure(g)))
        });
    }
    group.finish();
}

fn bench_regularity(c: &mut Criterion) {
    let machines = seeded_machines(0xbe9c_0003, 4, 40, 2);
    c.bench_function("decide_regular/40", |b| {
        b.iter(|| {
            for m in &machines {
                black_box(regular::decide_regular(m).unwrap());
            }
        })
    });
}

fn bench_equivalence_pipeline(c: &mut Criterion) {
    let machines = seeded_constant_machines(0xbe9c_0004, 2, 5);
    c.bench_function("decide_equivalence/5", |b| {
        b.iter(|| black_box(amortize::decide_equivalence(&machines[0], &machines[1]).unwrap()))
    });
}

fn bench_enumeration(c: &mut Criterion) {
    let m = seeded_machines(0xbe9c_0005, 1, 6, 2)[0].trim();
    c.bench_function("enumerate_language/len10", |b| {
        b.iter(|| black_box(sim::enumerate_language(&m, 10).unwrap()))
    });
}

criterion_group!(
    benches,
    bench_classify,
    bench_transitive_closure,
    bench_regularity,
    bench_equivalence_pipeline,
    bench_enumeration
);
criterion_main!(benches);
