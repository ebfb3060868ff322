//! Cross-validation of the constant-time twist against the
//! recursive-doubling route, and the shared product laws for all eight
//! variants.

use cdtwist_core::{
    basis_mul, omega, omega2, oracle_basis_mul, BasisIndex, ProductVariant, Sign,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn idx(v: u64) -> BasisIndex {
    BasisIndex::new(v).unwrap()
}

#[test]
fn closed_form_equals_oracle_exhaustively_to_ten_bits() {
    for p in 0..1u64 << 10 {
        for q in 0..1u64 << 10 {
            let want = oracle_basis_mul(ProductVariant::P2, idx(p), idx(q));
            assert_eq!(omega2(idx(p), idx(q)), want.sign, "sign at ({p}, {q})");
            assert_eq!(want.index, idx(p ^ q), "index at ({p}, {q})");
        }
    }
}

#[test]
fn closed_form_equals_oracle_on_random_twenty_bit_pairs() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for _ in 0..100_000 {
        let p = rng.random_range(0..1u64 << 20);
        let q = rng.random_range(0..1u64 << 20);
        assert_eq!(
            omega2(idx(p), idx(q)),
            oracle_basis_mul(ProductVariant::P2, idx(p), idx(q)).sign,
            "({p}, {q})"
        );
    }
}

#[test]
fn basis_mul_equals_oracle_for_every_variant() {
    for v in ProductVariant::ALL {
        for p in 0..1u64 << 8 {
            for q in 0..1u64 << 8 {
                assert_eq!(
                    basis_mul(v, idx(p), idx(q)),
                    oracle_basis_mul(v, idx(p), idx(q)),
                    "{v} at ({p}, {q})"
                );
            }
        }
    }
}

#[test]
fn shared_axioms_for_every_variant() {
    for v in ProductVariant::ALL {
        for p in 0..1u64 << 8 {
            assert_eq!(omega(v, idx(p), idx(0)), Sign::Plus);
            assert_eq!(omega(v, idx(0), idx(p)), Sign::Plus);
            if p > 0 {
                assert_eq!(omega(v, idx(p), idx(p)), Sign::Minus);
            }
            for q in 0..1u64 << 8 {
                if p != q && p > 0 && q > 0 {
                    assert_eq!(omega(v, idx(p), idx(q)), -omega(v, idx(q), idx(p)));
                }
            }
        }
    }
}

#[test]
fn transpose_duality_to_eight_bits() {
    for k in [
        ProductVariant::P0,
        ProductVariant::P1,
        ProductVariant::P2,
        ProductVariant::P3,
    ] {
        for p in 0..1u64 << 8 {
            for q in 0..1u64 << 8 {
                assert_eq!(
                    omega(k, idx(p), idx(q)),
                    omega(k.transpose(), idx(q), idx(p)),
                    "{k} at ({p}, {q})"
                );
            }
        }
    }
}

#[test]
fn same_block_rule_up_to_nine_bits() {
    for n in 0..9u32 {
        for p in (1u64 << n)..(1u64 << (n + 1)) {
            for q in (p + 1)..(1u64 << (n + 1)) {
                assert_eq!(omega2(idx(p), idx(q)), Sign::Plus, "({p}, {q})");
            }
        }
    }
}

#[test]
fn cross_block_rule_is_the_bit_parity() {
    for n in 0..9u32 {
        for p in (1u64 << n)..(1u64 << (n + 1)) {
            for q in (1u64 << (n + 1))..(1u64 << 10) {
                let want = Sign::from_parity((q >> n) & 1 == 1);
                assert_eq!(omega2(idx(p), idx(q)), want, "({p}, {q})");
            }
        }
    }
}

#[test]
fn large_indices_work_at_the_word_bound() {
    let top = BasisIndex::MAX;
    assert_eq!(omega2(top, top), Sign::Minus);
    assert_eq!(omega2(idx(0), top), Sign::Plus);
    assert_eq!(
        basis_mul(ProductVariant::P2, top, top),
        oracle_basis_mul(ProductVariant::P2, top, top)
    );
    // A cross-block pair at the top of the range.
    let p = idx((1 << 62) + 5);
    let q = idx((1 << 62) + (1 << 61) + 9);
    assert_eq!(
        omega2(p, q),
        oracle_basis_mul(ProductVariant::P2, p, q).sign
    );
}
