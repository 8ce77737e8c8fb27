use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use hnt_core::analysis::{analyze_with, classify_with, Strategy};
use hnt_core::constructions::{diag_full_group, k2_group, prod_code, rep};
use hnt_core::hamming::{distance_partition_with, Vertex};
use hnt_core::{Budgets, Execution};

const MODES: [(&str, Execution); 2] = [
    ("sequential", Execution::Sequential),
    ("parallel", Execution::Parallel),
];

fn distance_partitions(c: &mut Criterion) {
    let mut group = c.benchmark_group("distance_partition");
    for (k, l) in [(2usize, 3usize), (3, 2)] {
        let code = prod_code(&rep(k, 5).unwrap(), l).unwrap();
        for (name, exec) in MODES {
            group.bench_with_input(
                BenchmarkId::new(name, format!("Prod(Rep({k},5),{l})")),
                &code,
                |b, code| {
                    b.iter(|| distance_partition_with(black_box(code), u64::MAX, exec).unwrap())
                },
            );
        }
    }
    group.finish();
}

fn orbits_and_enumeration(c: &mut Criterion) {
    let x = k2_group(3, 5).unwrap();
    let v = Vertex::new(x.params(), vec![0, 1, 2, 2, 3, 4]).unwrap();
    let mut group = c.benchmark_group("k2(3,5)");
    group.sample_size(10);
    for (name, exec) in MODES {
        group.bench_function(BenchmarkId::new("vertex_orbit", name), |b| {
            b.iter(|| x.vertex_orbit_with(black_box(&v), exec).unwrap())
        });
    }
    let y = k2_group(2, 5).unwrap();
    for (name, exec) in MODES {
        group.bench_function(BenchmarkId::new("enumerate k2(2,5)", name), |b| {
            b.iter(|| {
                hnt_core::groups::EnumeratedGroup::enumerate_with(black_box(&y), u64::MAX, exec)
                    .unwrap()
            })
        });
    }
    group.finish();
}

fn neighbour_transitivity(c: &mut Criterion) {
    let x = diag_full_group(3, 7).unwrap();
    let code = rep(3, 7).unwrap();
    let budgets = Budgets::default();
    let mut group = c.benchmark_group("analyze Rep(3,7)");
    for (name, exec) in MODES {
        group.bench_function(name, |b| {
            b.iter(|| analyze_with(&x, black_box(&code), None, &budgets, exec).unwrap())
        });
    }
    group.finish();
}

fn classification(c: &mut Criterion) {
    let budgets = Budgets::default();
    let mut group = c.benchmark_group("classify (3,2) all-subsets");
    group.sample_size(10);
    for (name, exec) in MODES {
        group.bench_function(name, |b| {
            b.iter(|| classify_with(3, 2, Strategy::AllSubsets, &budgets, exec).unwrap())
        });
    }
    group.finish();
}

criterion_group!(
    benches,
    distance_partitions,
    orbits_and_enumeration,
    neighbour_transitivity,
    classification
);
criterion_main!(benches);
