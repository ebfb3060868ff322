//! Seeded input generation shared by the criterion benches.

use cdtwist_core::{BasisIndex, Element, Scalar};
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub use cdtwist_core::bench::DEFAULT_SEED;

/// `count` index pairs drawn uniformly below `2^max_exp`.
pub fn index_pairs(seed: u64, max_exp: u32, count: usize) -> Vec<(BasisIndex, BasisIndex)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let bound = 1u64 << max_exp;
    (0..count)
        .map(|_| {
            (
                BasisIndex::new(rng.random_range(0..bound)).expect("in range"),
                BasisIndex::new(rng.random_range(0..bound)).expect("in range"),
            )
        })
        .collect()
}

/// `count` element pairs with `terms` distinct unit-coefficient terms each,
/// indices below `2^exp`.
pub fn element_pairs(seed: u64, exp: u32, terms: u64, count: usize) -> Vec<(Element, Element)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| (unit_element(&mut rng, exp, terms), unit_element(&mut rng, exp, terms)))
        .collect()
}

fn unit_element(rng: &mut ChaCha8Rng, exp: u32, terms: u64) -> Element {
    let bound = 1u64 << exp;
    let mut indices = std::collections::BTreeSet::new();
    while (indices.len() as u64) < terms.min(bound) {
        indices.insert(rng.random_range(0..bound));
    }
    Element::from_terms(indices.into_iter().map(|i| {
        let coeff = if rng.random_bool(0.5) {
            Scalar::one()
        } else {
            -Scalar::one()
        };
        (BasisIndex::new(i).expect("in range"), coeff)
    }))
}
