use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use matint_bench::matrices;
use matint_core::workload::{oracle_integrals, LookupPath};
use matint_core::{fib_signed, scheme_coefficient, CoefficientScheme};
use std::hint::black_box;

fn lookup_vs_oracle(c: &mut Criterion) {
    let mut group = c.benchmark_group("integrate");
    for n in [2, 3] {
        let batch = matrices(n, 64, 1);
        let lookup = LookupPath::new(n).unwrap();
        group.bench_with_input(BenchmarkId::new("lookup", n), &batch, |b, batch| {
            b.iter(|| {
                for a in batch {
                    black_box(lookup.integrate(a).unwrap());
                }
            })
        });
        group.bench_with_input(BenchmarkId::new("oracle", n), &batch, |b, batch| {
            b.iter(|| {
                for a in batch {
                    black_box(oracle_integrals(a));
                }
            })
        });
    }
    group.finish();
}

fn coefficients(c: &mut Criterion) {
    c.bench_function("scheme_coefficient/all_cells", |b| {
        b.iter(|| {
            for s in CoefficientScheme::all() {
                let n = s.n();
                for i in 1..=n {
                    for j in 1..=n {
                        if s.id.is_quadratic() {
                            for k in 1..=n {
                                black_box(scheme_coefficient(s, i, Some(k), j).unwrap());
                            }
                        } else {
                            black_box(scheme_coefficient(s, i, None, j).unwrap());
                        }
                    }
                }
            }
        })
    });
    c.bench_function("fib/40", |b| b.iter(|| fib_signed(black_box(40)).unwrap()));
}

criterion_group!(benches, lookup_vs_oracle, coefficients);
criterion_main!(benches);
