use std::hint::black_box;

use bicov_core::bicov::verify_qybe;
use bicov_core::cohom::{classify_calculi, coboundary, invariant_cocycles};
use bicov_core::linalg::rank;
use bicov_core::{catalog, BicovBimodule, CMatrix, Cochain, FirstOrderCalculus, C64};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

const TOL: f64 = 1e-9;

fn module(name: &str, class: usize, irrep: usize) -> BicovBimodule {
    let g = catalog(name).unwrap();
    let classes = g.table.conjugacy_classes();
    BicovBimodule::build(&g.table, &classes[class], &g.irreps[irrep], TOL).unwrap()
}

/// Deterministic dense matrix with entries on the unit circle.
fn dense(n: usize) -> CMatrix {
    CMatrix::from_fn(n, n, |i, j| {
        C64::from_polar(1.0, ((i * 7 + j * 13) % 17) as f64)
    })
}

fn linalg(c: &mut Criterion) {
    let mut group = c.benchmark_group("rank");
    for n in [16, 64, 144] {
        let m = dense(n);
        group.bench_with_input(BenchmarkId::from_parameter(n), &m, |b, m| {
            b.iter(|| rank(black_box(m), TOL))
        });
    }
    group.finish();
}

fn bimodules(c: &mut Criterion) {
    let g = catalog("A4").unwrap();
    let classes = g.table.conjugacy_classes();
    c.bench_function("build A4 C1/std", |b| {
        b.iter(|| BicovBimodule::build(&g.table, &classes[1], &g.irreps[3], TOL).unwrap())
    });
    let m = module("A4", 1, 3);
    c.bench_function("qybe A4 C1/std (d = 12)", |b| {
        b.iter(|| verify_qybe(black_box(m.lambda())).unwrap())
    });
    let s3 = module("S3", 1, 2);
    c.bench_function("bimodule checks S3 C1/std", |b| {
        b.iter(|| s3.checks().unwrap())
    });
}

fn cohomology(c: &mut Criterion) {
    let m = module("S3", 1, 0);
    let psi = Cochain::from_values(
        1,
        m.n(),
        m.dim(),
        (0..m.n() * m.dim())
            .map(|k| C64::new(k as f64, 1.0))
            .collect(),
    )
    .unwrap();
    c.bench_function("coboundary S3 degree 1", |b| {
        b.iter(|| coboundary(&m, black_box(&psi)))
    });
    c.bench_function("invariant cocycles S3 C1/trivial", |b| {
        b.iter(|| invariant_cocycles(&m, TOL))
    });
    let a4 = catalog("A4").unwrap().table;
    c.bench_function("classify A4", |b| {
        b.iter(|| classify_calculi(black_box(&a4)).unwrap())
    });
    let class = a4.conjugacy_classes()[2].clone();
    c.bench_function("d_C A4 + axioms", |b| {
        b.iter(|| FirstOrderCalculus::d_c(&a4, &class, TOL).unwrap().checks())
    });
}

criterion_group!(benches, linalg, bimodules, cohomology);
criterion_main!(benches);
