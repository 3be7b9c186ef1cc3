//! Sequential against parallel execution on the data-parallel sweeps.
//!
//! Build with `--no-default-features` to see both arms run the sequential
//! loop.

use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use fintopo::approx::{FunctionOracle, GridFunction, WeierstrassPolynomial, DEFAULT_PANELS};
use fintopo::filters::{all_filters, limits};
use fintopo::fintop::{all_topologies, separation_profile, ClosureTable, FiniteSpace};
use fintopo::Exec;

const ARMS: [(&str, Exec); 2] = [("sequential", Exec::Sequential), ("parallel", Exec::Parallel)];

fn enumerate(c: &mut Criterion) {
    let mut g = c.benchmark_group("all_topologies_4");
    g.sample_size(10);
    for (name, exec) in ARMS {
        g.bench_function(name, |b| b.iter(|| all_topologies(black_box(4), exec).unwrap()));
    }
    g.finish();
}

/// Separation profile plus every filter's limits, per space.
fn sweep_one(space: &FiniteSpace) -> usize {
    let sep = separation_profile(space);
    let unique = all_filters(space.carrier())
        .filter(|f| limits(space, f).unwrap().count_ones() <= 1)
        .count();
    unique + sep.t2 as usize
}

fn structural(c: &mut Criterion) {
    let spaces = all_topologies(4, Exec::default()).unwrap();
    let mut g = c.benchmark_group("structural_sweep_4");
    g.sample_size(10);
    for (name, exec) in ARMS {
        g.bench_function(name, |b| {
            b.iter(|| exec.map(&spaces, sweep_one).into_iter().sum::<usize>())
        });
    }
    g.finish();
}

fn closure_tables(c: &mut Criterion) {
    let spaces = all_topologies(4, Exec::default()).unwrap();
    let mut g = c.benchmark_group("closure_tables_4");
    for (name, exec) in ARMS {
        g.bench_function(name, |b| {
            b.iter(|| {
                spaces
                    .iter()
                    .map(|s| ClosureTable::of_space(s, exec).as_slice().len())
                    .sum::<usize>()
            })
        });
    }
    g.finish();
}

fn weierstrass(c: &mut Criterion) {
    let f = FunctionOracle::AbsHalf;
    let grid = GridFunction::uniform_grid(0.1, 0.9, 801).unwrap();
    let mut g = c.benchmark_group("weierstrass_grid");
    for n in [4u32, 64] {
        let p = WeierstrassPolynomial::new(&f, n, DEFAULT_PANELS).unwrap();
        for (name, exec) in ARMS {
            g.bench_with_input(BenchmarkId::new(name, n), &p, |b, p| {
                b.iter(|| p.eval_grid(&grid, exec).unwrap())
            });
        }
    }
    g.finish();
}

criterion_group!(benches, enumerate, structural, closure_tables, weierstrass);
criterion_main!(benches);
