//! Sequential vs. parallel execution of the verification sweep and of
//! picture enumeration.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use lrpic::diagram::{Partition, SkewShape};
use lrpic::exec::Execution;
use lrpic::picture::enumerate_pictures_with;
use lrpic::reading::{middle_eastern, OrderSpec};
use lrpic::verify::{hook_triples, sweep};

const MODES: [(&str, Execution); 2] = [("sequential", Execution::Sequential), ("parallel", Execution::Parallel)];

fn bench_sweep(c: &mut Criterion) {
    let triples: Vec<_> = hook_triples(2, 2, 7).into_iter().filter(|t| t.is_skew()).collect();
    let orders = [OrderSpec::MiddleEastern, OrderSpec::FarEastern, OrderSpec::Seed(1)];
    let mut g = c.benchmark_group("sweep_hook22_size7");
    g.sample_size(10);
    for (name, exec) in MODES {
        g.bench_with_input(BenchmarkId::from_parameter(name), &exec, |b, &exec| {
            b.iter(|| sweep(&triples, 2, 2, &orders, exec).unwrap())
        });
    }
    g.finish();
}

fn bench_pictures(c: &mut Criterion) {
    let p = |r: &[usize]| Partition::new(r.to_vec()).unwrap();
    let w = SkewShape::straight(p(&[3, 2, 2, 1]));
    let skew = SkewShape::new(p(&[6, 4, 3, 3, 2]), p(&[4, 3, 2, 1])).unwrap();
    let (a, a_prime) = (middle_eastern(&skew), middle_eastern(&w));
    let mut g = c.benchmark_group("pictures_8_cells");
    for (name, exec) in MODES {
        g.bench_with_input(BenchmarkId::from_parameter(name), &exec, |b, &exec| {
            b.iter(|| enumerate_pictures_with(&w, &skew, &a, &a_prime, exec))
        });
    }
    g.finish();
}

criterion_group!(benches, bench_sweep, bench_pictures);
criterion_main!(benches);
