use criterion::{black_box, criterion_group, criterion_main, Criterion};
use resilat::export::hasse_dot;
use resilat::harness::{run_suite, RunConfig, SuiteId};
use resilat::term::{check_equation, parse_equation};
use resilat::{Algebra, Params, Window};

fn operations(c: &mut Criterion) {
    let alg = Algebra::new(Params::new(2, 3).unwrap());
    let elems = Window::new(alg.params(), 2).unwrap().enumerate();
    c.bench_function("mul window pairs (2,3) R=2", |b| {
        b.iter(|| {
            for x in &elems {
                for y in &elems {
                    black_box(alg.mul(x, y).unwrap());
                }
            }
        })
    });
    c.bench_function("div window pairs (2,3) R=2", |b| {
        b.iter(|| {
            for x in &elems {
                for y in &elems {
                    black_box(alg.div(x, y).unwrap());
                }
            }
        })
    });
    c.bench_function("boolean term over window (3,3) R=2", |b| {
        let alg = Algebra::new(Params::new(3, 3).unwrap());
        let elems = Window::new(alg.params(), 2).unwrap().enumerate();
        b.iter(|| {
            for x in &elems {
                black_box(alg.boolean_term(x).unwrap());
            }
        })
    });
}

fn suites(c: &mut Criterion) {
    let alg = Algebra::new(Params::new(2, 3).unwrap());
    let cfg = RunConfig::default();
    let mut group = c.benchmark_group("suites (2,3) R=2");
    group.sample_size(10);
    for suite in [SuiteId::S1, SuiteId::S2, SuiteId::S10, SuiteId::S11] {
        group.bench_function(suite.code(), |b| b.iter(|| black_box(run_suite(&alg, suite, 2, &cfg).unwrap())));
    }
    group.finish();
}

fn terms_and_export(c: &mut Criterion) {
    let alg = Algebra::new(Params::new(2, 3).unwrap());
    let eq = parse_equation("x * (y \\/ z) = (x * y) \\/ (x * z)").unwrap();
    let mut group = c.benchmark_group("terms");
    group.sample_size(10);
    group.bench_function("distributivity check (2,3) R=1", |b| b.iter(|| black_box(check_equation(&eq, &alg, 1, 3).unwrap())));
    let elems = Window::new(alg.params(), 2).unwrap().enumerate();
    group.bench_function("hasse dot (2,3) R=2", |b| b.iter(|| black_box(hasse_dot(&alg, &elems, "w").unwrap())));
    group.finish();
}

criterion_group!(benches, operations, suites, terms_and_export);
criterion_main!(benches);
