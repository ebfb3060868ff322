//! Seeded micro-benchmarks of the closed-form fast path against the
//! recursive-doubling route.
//!
//! Every timed section is preceded by a correctness pass over the same
//! sampled inputs; a strategy that disagrees is never timed. Inputs come
//! from a recorded seed, so reports are reproducible in everything but the
//! clock readings.

use std::hint::black_box;
use std::time::{Duration, Instant};

use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::element::{mul_doubling, mul_twist, Element, Scalar};
use crate::index::BasisIndex;
use crate::oracle::oracle_basis_mul;
use crate::twist::basis_mul;
use crate::variant::ProductVariant;

/// Seed used when the caller does not override it.
pub const DEFAULT_SEED: u64 = 0x5eed;

/// Every case runs until it has either this many operations or one second
/// of wall clock, whichever comes first.
pub const OPS_FLOOR: u64 = 10_000;
const ELAPSED_FLOOR: Duration = Duration::from_secs(1);

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BenchError {
    #[error("max_exp {0} out of range [1, 20]")]
    MaxExpOutOfRange(u32),
    #[error("exp {0} out of range [1, 14]")]
    ExpOutOfRange(u32),
    #[error("terms {terms} out of range [1, 2^{exp}]")]
    TermsOutOfRange { terms: u64, exp: u32 },
    #[error("samples must be nonzero")]
    NoSamples,
    #[error("workers must be nonzero")]
    NoWorkers,
    #[error("strategies disagree on e_{p} e_{q} before timing")]
    StrategyMismatch { p: u64, q: u64 },
    #[error("strategies disagree on sampled element product #{case}")]
    ElementMismatch { case: usize },
}

/// One timed strategy: label, input shape, and the measured loop.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BenchCase {
    pub strategy: String,
    pub dim_exp: u32,
    /// Nonzero terms per operand (1 for plain basis products).
    pub terms: u64,
    pub ops: u64,
    pub elapsed_ns: u128,
}

impl BenchCase {
    pub fn ops_per_sec(&self) -> f64 {
        if self.elapsed_ns == 0 {
            return f64::INFINITY;
        }
        self.ops as f64 * 1e9 / self.elapsed_ns as f64
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BenchReport {
    pub environment: String,
    pub seed: u64,
    pub cases: Vec<BenchCase>,
}

impl BenchReport {
    fn new(seed: u64, workers: usize) -> Self {
        BenchReport {
            environment: host_descriptor(workers),
            seed,
            cases: Vec::new(),
        }
    }

    /// One record per line, `strategy,dim_exp,terms,ops,elapsed_ns`,
    /// preceded by comment lines recording the environment and seed.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("# environment: {}\n", self.environment));
        out.push_str(&format!("# seed: {}\n", self.seed));
        for c in &self.cases {
            out.push_str(&format!(
                "{},{},{},{},{}\n",
                c.strategy, c.dim_exp, c.terms, c.ops, c.elapsed_ns
            ));
        }
        out
    }

    pub fn to_json(&self) -> String {
        let cases: Vec<serde_json::Value> = self
            .cases
            .iter()
            .map(|c| {
                serde_json::json!({
                    "strategy": c.strategy,
                    "dim_exp": c.dim_exp,
                    "terms": c.terms,
                    "ops": c.ops,
                    "elapsed_ns": c.elapsed_ns,
                    "ops_per_sec": c.ops_per_sec(),
                })
            })
            .collect();
        serde_json::json!({
            "environment": self.environment,
            "seed": self.seed,
            "cases": cases,
        })
        .to_string()
    }
}

fn host_descriptor(workers: usize) -> String {
    let cpus = std::thread::available_parallelism()
        .map(|n| n.get())
        .unwrap_or(1);
    format!(
        "{}-{} / {} cpus / {} worker(s)",
        std::env::consts::OS,
        std::env::consts::ARCH,
        cpus,
        workers
    )
}

/// Times a work item over a sample list until the operation floor or the
/// wall-clock floor is hit, whichever comes first. With more than one
/// worker the samples are sharded and the longest worker sets the elapsed
/// time.
fn timed<T, F>(samples: &[T], workers: usize, work: F) -> (u64, u128)
where
    T: Sync,
    F: Fn(&T) + Sync,
{
    if workers <= 1 {
        return timed_shard(samples, OPS_FLOOR, &work);
    }
    let shards: Vec<&[T]> = chunk_evenly(samples, workers);
    let per_worker_floor = OPS_FLOOR.div_ceil(shards.len() as u64);
    std::thread::scope(|scope| {
        let handles: Vec<_> = shards
            .iter()
            .map(|shard| scope.spawn(|| timed_shard(shard, per_worker_floor, &work)))
            .collect();
        let mut total_ops = 0;
        let mut max_elapsed = 0u128;
        for h in handles {
            let (ops, elapsed) = h.join().expect("bench worker panicked");
            total_ops += ops;
            max_elapsed = max_elapsed.max(elapsed);
        }
        (total_ops, max_elapsed)
    })
}

fn timed_shard<T, F: Fn(&T)>(samples: &[T], ops_floor: u64, work: &F) -> (u64, u128) {
    let batch = samples.len().min(1024).max(1);
    let start = Instant::now();
    let mut ops = 0u64;
    'outer: loop {
        for chunk in samples.chunks(batch) {
            for item in chunk {
                work(item);
            }
            ops += chunk.len() as u64;
            if ops >= ops_floor || start.elapsed() >= ELAPSED_FLOOR {
                break 'outer;
            }
        }
    }
    (ops, start.elapsed().as_nanos())
}

fn chunk_evenly<T>(items: &[T], parts: usize) -> Vec<&[T]> {
    let parts = parts.min(items.len()).max(1);
    let base = items.len() / parts;
    let extra = items.len() % parts;
    let mut out = Vec::with_capacity(parts);
    let mut offset = 0;
    for i in 0..parts {
        let len = base + usize::from(i < extra);
        out.push(&items[offset..offset + len]);
        offset += len;
    }
    out
}

/// Benchmarks single basis products below `2^max_exp`: the constant-time
/// closed form against the recursive-doubling oracle, on identical seeded
/// index pairs, after verifying they agree on every pair.
pub fn bench_basis_products(
    max_exp: u32,
    samples: usize,
    seed: u64,
    workers: usize,
) -> Result<BenchReport, BenchError> {
    if !(1..=20).contains(&max_exp) {
        return Err(BenchError::MaxExpOutOfRange(max_exp));
    }
    if samples == 0 {
        return Err(BenchError::NoSamples);
    }
    if workers == 0 {
        return Err(BenchError::NoWorkers);
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let bound = 1u64 << max_exp;
    let pairs: Vec<(BasisIndex, BasisIndex)> = (0..samples)
        .map(|_| {
            let p = BasisIndex::new(rng.random_range(0..bound)).expect("below 2^20");
            let q = BasisIndex::new(rng.random_range(0..bound)).expect("below 2^20");
            (p, q)
        })
        .collect();

    // Correctness gate for both strategies.
    for &(p, q) in &pairs {
        if basis_mul(ProductVariant::P2, p, q) != oracle_basis_mul(ProductVariant::P2, p, q) {
            return Err(BenchError::StrategyMismatch {
                p: p.value(),
                q: q.value(),
            });
        }
    }

    let mut report = BenchReport::new(seed, workers);
    let (ops, elapsed_ns) = timed(&pairs, workers, |&(p, q)| {
        black_box(basis_mul(ProductVariant::P2, black_box(p), black_box(q)));
    });
    report.cases.push(BenchCase {
        strategy: "closed_form".to_string(),
        dim_exp: max_exp,
        terms: 1,
        ops,
        elapsed_ns,
    });
    let (ops, elapsed_ns) = timed(&pairs, workers, |&(p, q)| {
        black_box(oracle_basis_mul(
            ProductVariant::P2,
            black_box(p),
            black_box(q),
        ));
    });
    report.cases.push(BenchCase {
        strategy: "recursive_oracle".to_string(),
        dim_exp: max_exp,
        terms: 1,
        ops,
        elapsed_ns,
    });
    Ok(report)
}

/// Benchmarks sparse element products at dimension `2^exp` with `terms`
/// nonzero `+-1` coefficients per operand: the bilinear twist expansion
/// against pair doubling, cross-checked exactly before timing.
pub fn bench_element_mul(
    exp: u32,
    terms: u64,
    samples: usize,
    seed: u64,
    workers: usize,
) -> Result<BenchReport, BenchError> {
    if !(1..=14).contains(&exp) {
        return Err(BenchError::ExpOutOfRange(exp));
    }
    if terms == 0 || terms > (1u64 << exp) {
        return Err(BenchError::TermsOutOfRange { terms, exp });
    }
    if samples == 0 {
        return Err(BenchError::NoSamples);
    }
    if workers == 0 {
        return Err(BenchError::NoWorkers);
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pairs: Vec<(Element, Element)> = (0..samples)
        .map(|_| {
            (
                random_unit_element(&mut rng, exp, terms),
                random_unit_element(&mut rng, exp, terms),
            )
        })
        .collect();

    for (case, (x, y)) in pairs.iter().enumerate() {
        if mul_twist(x, y) != mul_doubling(ProductVariant::P2, x, y) {
            return Err(BenchError::ElementMismatch { case });
        }
    }

    let mut report = BenchReport::new(seed, workers);
    let (ops, elapsed_ns) = timed(&pairs, workers, |(x, y)| {
        black_box(mul_twist(black_box(x), black_box(y)));
    });
    report.cases.push(BenchCase {
        strategy: "twist_bilinear".to_string(),
        dim_exp: exp,
        terms,
        ops,
        elapsed_ns,
    });
    let (ops, elapsed_ns) = timed(&pairs, workers, |(x, y)| {
        black_box(mul_doubling(
            ProductVariant::P2,
            black_box(x),
            black_box(y),
        ));
    });
    report.cases.push(BenchCase {
        strategy: "pair_doubling".to_string(),
        dim_exp: exp,
        terms,
        ops,
        elapsed_ns,
    });
    Ok(report)
}

/// Sparse element with exactly `terms` distinct indices below `2^exp`, all
/// coefficients `+1` or `-1`.
fn random_unit_element(rng: &mut ChaCha8Rng, exp: u32, terms: u64) -> Element {
    let bound = 1u64 << exp;
    let mut indices = std::collections::BTreeSet::new();
    while (indices.len() as u64) < terms {
        indices.insert(rng.random_range(0..bound));
    }
    Element::from_terms(indices.into_iter().map(|i| {
        let coeff = if rng.random_bool(0.5) {
            Scalar::one()
        } else {
            -Scalar::one()
        };
        (BasisIndex::new(i).expect("below 2^14"), coeff)
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bounds_are_enforced() {
        assert!(matches!(
            bench_basis_products(0, 10, 1, 1),
            Err(BenchError::MaxExpOutOfRange(0))
        ));
        assert!(matches!(
            bench_basis_products(21, 10, 1, 1),
            Err(BenchError::MaxExpOutOfRange(21))
        ));
        assert!(matches!(
            bench_element_mul(15, 1, 1, 1, 1),
            Err(BenchError::ExpOutOfRange(15))
        ));
        assert!(matches!(
            bench_element_mul(2, 5, 1, 1, 1),
            Err(BenchError::TermsOutOfRange { terms: 5, exp: 2 })
        ));
    }

    #[test]
    fn basis_report_shape_and_floor() {
        let report = bench_basis_products(1, 10, DEFAULT_SEED, 1).unwrap();
        assert_eq!(report.cases.len(), 2);
        assert_eq!(report.cases[0].strategy, "closed_form");
        assert_eq!(report.cases[1].strategy, "recursive_oracle");
        for c in &report.cases {
            assert!(c.ops >= OPS_FLOOR || c.elapsed_ns >= 1_000_000_000);
            assert_eq!(c.terms, 1);
            assert_eq!(c.dim_exp, 1);
        }
    }

    #[test]
    fn sampling_is_seed_deterministic() {
        let a = bench_basis_products(10, 100, 7, 1).unwrap();
        let b = bench_basis_products(10, 100, 7, 1).unwrap();
        // Timing differs; sampling and shape must not.
        assert_eq!(a.seed, b.seed);
        assert_eq!(a.cases.len(), b.cases.len());
        for (x, y) in a.cases.iter().zip(&b.cases) {
            assert_eq!(x.strategy, y.strategy);
            assert_eq!(x.dim_exp, y.dim_exp);
            assert_eq!(x.terms, y.terms);
        }
    }

    #[test]
    fn element_bench_cross_checks() {
        let report = bench_element_mul(2, 1, 10, DEFAULT_SEED, 1).unwrap();
        assert_eq!(report.cases.len(), 2);
        let report = bench_element_mul(10, 4, 20, DEFAULT_SEED, 2).unwrap();
        assert_eq!(report.cases.len(), 2);
    }

    #[test]
    fn text_and_json_round_trip_fields() {
        let report = bench_basis_products(4, 16, 3, 1).unwrap();
        let text = report.to_text();
        assert!(text.starts_with("# environment: "));
        assert!(text.contains("# seed: 3\n"));
        assert!(text.contains("closed_form,4,1,"));
        let json: serde_json::Value = report.to_json().parse::<serde_json::Value>().unwrap();
        assert_eq!(json["seed"], 3);
        assert_eq!(json["cases"][0]["strategy"], "closed_form");
        assert!(json["cases"][0]["ops_per_sec"].as_f64().unwrap() > 0.0);
    }
}
