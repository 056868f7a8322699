//! Sequential against parallel evaluation of the fan-out operations.
//! On a single core both lines should match; the gap grows with cores.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use pseudoknot::exec::Strategy;
use pseudoknot::families::{family_table, verify_rows, DEFAULT_GRID};
use pseudoknot::invariants::{coloring_numbers_with, kh_property, pseudodeterminant_with, Settings};
use pseudoknot::PseudoDiagram;

const STRATEGIES: [(&str, Strategy); 2] = [("sequential", Strategy::Sequential), ("parallel", Strategy::Parallel)];

fn resolutions(c: &mut Criterion) {
    let mut group = c.benchmark_group("resolutions");
    group.sample_size(10);
    // 64 and 512 resolutions respectively.
    for symbol in ["(i,i,i),(i,i,i),3", "(i,i,i) (i,i,i) (i,i,i),3,-3"] {
        let d = PseudoDiagram::from_symbol(symbol).unwrap();
        for (name, strategy) in STRATEGIES {
            let s = Settings::default().with_strategy(strategy);
            group.bench_with_input(BenchmarkId::new(name, symbol), &d, |b, d| {
                b.iter(|| pseudodeterminant_with(d, &s).unwrap())
            });
        }
    }
    let d = PseudoDiagram::from_symbol("(i,i,i),(i,i,i),3").unwrap();
    for (name, strategy) in STRATEGIES {
        let s = Settings::default().with_strategy(strategy);
        group.bench_function(BenchmarkId::new(name, "coloring numbers"), |b| {
            b.iter(|| coloring_numbers_with(&d, 60, &s).unwrap())
        });
    }
    let d = PseudoDiagram::from_symbol("(5)(i)(-5)").unwrap();
    for (name, strategy) in STRATEGIES {
        let s = Settings::default().with_strategy(strategy);
        group.bench_function(BenchmarkId::new(name, "kh (5)(i)(-5)"), |b| b.iter(|| kh_property(&d, &s).unwrap()));
    }
    group.finish();
}

fn families(c: &mut Criterion) {
    let mut group = c.benchmark_group("families");
    group.sample_size(10);
    let rows: Vec<_> = family_table().iter().collect();
    for (name, strategy) in STRATEGIES {
        let s = Settings::default().with_strategy(strategy);
        group.bench_function(BenchmarkId::new(name, "verify all rows"), |b| {
            b.iter(|| verify_rows(&rows, &DEFAULT_GRID, &s))
        });
    }
    group.finish();
}

criterion_group!(benches, resolutions, families);
criterion_main!(benches);
