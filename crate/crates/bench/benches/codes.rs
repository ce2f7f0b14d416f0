use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use dihedral_mds::codes::{min_distance, DistanceMethod};
use dihedral_mds::example::{corrected_example, Variant};
use dihedral_mds::{construct_code, CodeFamily, FamilyKind, Field};
use dihedral_mds_bench::{code, CASES};

fn bench_construct(c: &mut Criterion) {
    let mut group = c.benchmark_group("construct");
    for (p, n) in CASES {
        let field = Field::prime(p).unwrap();
        group.bench_with_input(BenchmarkId::from_parameter(format!("q{p}_n{n}")), &n, |b, &n| {
            b.iter(|| construct_code(&field, n, CodeFamily::new(FamilyKind::TwoNMinus3Plus)).unwrap())
        });
    }
    group.finish();
}

fn bench_dual_distance(c: &mut Criterion) {
    let mut group = c.benchmark_group("dual_distance");
    for (p, n) in CASES {
        let code = code(p, n, FamilyKind::TwoNMinus3Minus);
        group.bench_function(format!("q{p}_n{n}"), |b| {
            b.iter(|| min_distance(black_box(&code), DistanceMethod::Dual, 0).unwrap())
        });
    }
    group.finish();
}

fn bench_exhaustive(c: &mut Criterion) {
    let small = code(13, 3, FamilyKind::TwoNMinus2);
    c.bench_function("exhaustive_q13_n3", |b| {
        b.iter(|| min_distance(black_box(&small), DistanceMethod::Exhaustive, u128::MAX).unwrap())
    });
    c.bench_function("example_gf25_i1", |b| {
        b.iter(|| corrected_example(Variant::I1).unwrap())
    });
}

criterion_group!(benches, bench_construct, bench_dual_distance, bench_exhaustive);
criterion_main!(benches);
