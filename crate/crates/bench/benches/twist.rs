use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion, Throughput};
use std::hint::black_box;

use cdtwist_bench::{element_pairs, index_pairs, DEFAULT_SEED};
use cdtwist_core::{basis_mul, mul_doubling, mul_twist, oracle_basis_mul, ProductVariant};

fn basis_products(c: &mut Criterion) {
    let mut group = c.benchmark_group("basis_mul");
    for max_exp in [8u32, 16, 20] {
        let pairs = index_pairs(DEFAULT_SEED, max_exp, 1024);
        // Both strategies must agree before anything is timed.
        for &(p, q) in &pairs {
            assert_eq!(
                basis_mul(ProductVariant::P2, p, q),
                oracle_basis_mul(ProductVariant::P2, p, q)
            );
        }
        group.throughput(Throughput::Elements(pairs.len() as u64));
        group.bench_with_input(
            BenchmarkId::new("closed_form", max_exp),
            &pairs,
            |b, pairs| {
                b.iter(|| {
                    for &(p, q) in pairs {
                        black_box(basis_mul(ProductVariant::P2, black_box(p), black_box(q)));
                    }
                })
            },
        );
        group.bench_with_input(
            BenchmarkId::new("recursive_oracle", max_exp),
            &pairs,
            |b, pairs| {
                b.iter(|| {
                    for &(p, q) in pairs {
                        black_box(oracle_basis_mul(
                            ProductVariant::P2,
                            black_box(p),
                            black_box(q),
                        ));
                    }
                })
            },
        );
    }
    group.finish();
}

fn element_products(c: &mut Criterion) {
    let mut group = c.benchmark_group("element_mul");
    for (exp, terms) in [(10u32, 4u64), (14, 8)] {
        let pairs = element_pairs(DEFAULT_SEED, exp, terms, 64);
        for (x, y) in &pairs {
            assert_eq!(mul_twist(x, y), mul_doubling(ProductVariant::P2, x, y));
        }
        group.bench_with_input(
            BenchmarkId::new("twist_bilinear", format!("{exp}x{terms}")),
            &pairs,
            |b, pairs| {
                b.iter(|| {
                    for (x, y) in pairs {
                        black_box(mul_twist(black_box(x), black_box(y)));
                    }
                })
            },
        );
        group.bench_with_input(
            BenchmarkId::new("pair_doubling", format!("{exp}x{terms}")),
            &pairs,
            |b, pairs| {
                b.iter(|| {
                    for (x, y) in pairs {
                        black_box(mul_doubling(
                            ProductVariant::P2,
                            black_box(x),
                            black_box(y),
                        ));
                    }
                })
            },
        );
    }
    group.finish();
}

criterion_group!(benches, basis_products, element_products);
criterion_main!(benches);
