//! Element arithmetic properties: equivalence of the two multiplication
//! routes, algebraic laws, and a cross-check against a deliberately naive
//! dense evaluator written straight from the pair formulas.

use cdtwist_core::{
    find_zero_divisor, mul_doubling, mul_twist, oracle_basis_mul, BasisIndex, Element,
    ProductVariant, Scalar,
};
use num_traits::Zero;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn idx(v: u64) -> BasisIndex {
    BasisIndex::new(v).unwrap()
}

fn sparse(rng: &mut ChaCha8Rng, bound: u64, max_terms: u32) -> Element {
    let terms = rng.random_range(1..=max_terms);
    Element::from_terms((0..terms).map(|_| {
        let mut c: i64 = rng.random_range(-9..=9);
        if c == 0 {
            c = 1;
        }
        (
            idx(rng.random_range(0..bound)),
            Scalar::from_integer(c.into()),
        )
    }))
}

// ---------------------------------------------------------------------------
// Dense reference multiplier. Elements are plain coefficient vectors of
// power-of-two length with interleaved pair components: (x, y) stores x_k at
// position 2k and y_k at 2k + 1. No index arithmetic, no sign tables; just
// the eight formulas applied recursively.
// ---------------------------------------------------------------------------

type Dense = Vec<Scalar>;

fn dense_split(x: &[Scalar]) -> (Dense, Dense) {
    let even = x.iter().step_by(2).cloned().collect();
    let odd = x.iter().skip(1).step_by(2).cloned().collect();
    (even, odd)
}

fn dense_join(a: Dense, b: Dense) -> Dense {
    let mut out = Vec::with_capacity(a.len() * 2);
    for (x, y) in a.into_iter().zip(b) {
        out.push(x);
        out.push(y);
    }
    out
}

fn dense_conj(x: &[Scalar]) -> Dense {
    x.iter()
        .enumerate()
        .map(|(i, c)| if i == 0 { c.clone() } else { -c.clone() })
        .collect()
}

fn dense_add(x: &[Scalar], y: &[Scalar]) -> Dense {
    x.iter().zip(y).map(|(a, b)| a + b).collect()
}

fn dense_sub(x: &[Scalar], y: &[Scalar]) -> Dense {
    x.iter().zip(y).map(|(a, b)| a - b).collect()
}

fn dense_mul(v: ProductVariant, x: &[Scalar], y: &[Scalar]) -> Dense {
    assert_eq!(x.len(), y.len());
    if x.len() == 1 {
        return vec![&x[0] * &y[0]];
    }
    let (a, b) = dense_split(x);
    let (c, d) = dense_split(y);
    let m = |l: &[Scalar], r: &[Scalar]| dense_mul(v, l, r);

    use ProductVariant as V;
    let (first, second) = match v {
        V::P0 => (
            dense_sub(&m(&c, &a), &m(&dense_conj(&b), &d)),
            dense_add(&m(&d, &dense_conj(&a)), &m(&b, &c)),
        ),
        V::P1 => (
            dense_sub(&m(&c, &a), &m(&d, &dense_conj(&b))),
            dense_add(&m(&dense_conj(&a), &d), &m(&c, &b)),
        ),
        V::P2 => (
            dense_sub(&m(&a, &c), &m(&dense_conj(&b), &d)),
            dense_add(&m(&d, &dense_conj(&a)), &m(&b, &c)),
        ),
        V::P3 => (
            dense_sub(&m(&a, &c), &m(&d, &dense_conj(&b))),
            dense_add(&m(&dense_conj(&a), &d), &m(&c, &b)),
        ),
        V::T0 => (
            dense_sub(&m(&c, &a), &m(&b, &dense_conj(&d))),
            dense_add(&m(&a, &d), &m(&dense_conj(&c), &b)),
        ),
        V::T1 => (
            dense_sub(&m(&c, &a), &m(&dense_conj(&d), &b)),
            dense_add(&m(&d, &a), &m(&b, &dense_conj(&c))),
        ),
        V::T2 => (
            dense_sub(&m(&a, &c), &m(&b, &dense_conj(&d))),
            dense_add(&m(&a, &d), &m(&dense_conj(&c), &b)),
        ),
        V::T3 => (
            dense_sub(&m(&a, &c), &m(&dense_conj(&d), &b)),
            dense_add(&m(&d, &a), &m(&b, &dense_conj(&c))),
        ),
    };
    dense_join(first, second)
}

fn to_dense(x: &Element, len: usize) -> Dense {
    let mut out = vec![Scalar::zero(); len];
    for (index, coeff) in x.terms() {
        out[index.value() as usize] = coeff.clone();
    }
    out
}

fn from_dense(x: &[Scalar]) -> Element {
    Element::from_terms(
        x.iter()
            .enumerate()
            .map(|(i, c)| (idx(i as u64), c.clone())),
    )
}

#[test]
fn dense_reference_agrees_on_all_basis_pairs_to_dim_16() {
    for v in ProductVariant::ALL {
        for p in 0..16u64 {
            for q in 0..16u64 {
                let dense = dense_mul(
                    v,
                    &to_dense(&Element::basis(idx(p)), 16),
                    &to_dense(&Element::basis(idx(q)), 16),
                );
                let want: Element = oracle_basis_mul(v, idx(p), idx(q)).into();
                assert_eq!(from_dense(&dense), want, "{v} at ({p}, {q})");
            }
        }
    }
}

#[test]
fn dense_reference_agrees_on_random_elements() {
    let mut rng = ChaCha8Rng::seed_from_u64(41);
    for v in ProductVariant::ALL {
        for _ in 0..25 {
            let x = sparse(&mut rng, 16, 6);
            let y = sparse(&mut rng, 16, 6);
            let dense = dense_mul(v, &to_dense(&x, 16), &to_dense(&y, 16));
            assert_eq!(from_dense(&dense), mul_doubling(v, &x, &y), "{v}");
        }
    }
}

// ---------------------------------------------------------------------------
// Twist route vs doubling route.
// ---------------------------------------------------------------------------

#[test]
fn twist_equals_doubling_on_all_basis_pairs_to_eight_bits() {
    for p in 0..1u64 << 8 {
        for q in 0..1u64 << 8 {
            let x = Element::basis(idx(p));
            let y = Element::basis(idx(q));
            assert_eq!(
                mul_twist(&x, &y),
                mul_doubling(ProductVariant::P2, &x, &y),
                "({p}, {q})"
            );
        }
    }
}

#[test]
fn twist_equals_doubling_on_random_sparse_elements() {
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    for _ in 0..1000 {
        let x = sparse(&mut rng, 1 << 10, 6);
        let y = sparse(&mut rng, 1 << 10, 6);
        assert_eq!(mul_twist(&x, &y), mul_doubling(ProductVariant::P2, &x, &y));
    }
}

#[test]
fn anticommutativity_on_distinct_nonzero_basis_vectors() {
    for p in 1..64u64 {
        for q in 1..64u64 {
            if p == q {
                continue;
            }
            let pq = mul_twist(&Element::basis(idx(p)), &Element::basis(idx(q)));
            let qp = mul_twist(&Element::basis(idx(q)), &Element::basis(idx(p)));
            assert_eq!(pq, -&qp, "({p}, {q})");
        }
    }
}

// ---------------------------------------------------------------------------
// Norm structure.
// ---------------------------------------------------------------------------

#[test]
fn norm_composes_through_dim_4() {
    let mut rng = ChaCha8Rng::seed_from_u64(43);
    for bound in [1u64, 2, 4] {
        for _ in 0..1000 {
            let x = sparse(&mut rng, bound, bound as u32);
            let y = sparse(&mut rng, bound, bound as u32);
            let product = mul_twist(&x, &y);
            assert_eq!(
                product.norm_sq(),
                x.norm_sq() * y.norm_sq(),
                "dim {bound}: ({x}) ({y})"
            );
        }
    }
}

#[test]
fn norm_composition_breaks_at_dim_8() {
    // This doubling product leaves the composition-algebra ladder one
    // level early: dimension 8 already has annihilating pairs.
    let x: Element = "e1 + e2".parse().unwrap();
    let y: Element = "e4 + e7".parse().unwrap();
    let product = mul_twist(&x, &y);
    assert!(product.is_zero());
    assert_eq!(product.norm_sq(), Scalar::zero());
    assert_eq!(
        x.norm_sq() * y.norm_sq(),
        Scalar::from_integer(4.into())
    );
}

#[test]
fn zero_divisor_search_matches_the_structure() {
    assert_eq!(find_zero_divisor(4).unwrap(), None);
    for dim in [8u64, 16] {
        let (x, y) = find_zero_divisor(dim).unwrap().expect("witness exists");
        assert!(mul_twist(&x, &y).is_zero());
        assert!(mul_doubling(ProductVariant::P2, &x, &y).is_zero());
        assert!(!x.is_zero() && !y.is_zero());
        assert!(x.max_index().unwrap().value() < dim);
        assert!(y.max_index().unwrap().value() < dim);
    }
}

// ---------------------------------------------------------------------------
// Property tests.
// ---------------------------------------------------------------------------

fn arb_scalar() -> impl Strategy<Value = Scalar> {
    (-50i64..=50, 1i64..=9).prop_map(|(n, d)| Scalar::new(n.into(), d.into()))
}

fn arb_element() -> impl Strategy<Value = Element> {
    prop::collection::vec(((0u64..1 << 16), arb_scalar()), 0..6)
        .prop_map(|terms| Element::from_terms(terms.into_iter().map(|(i, c)| (idx(i), c))))
}

proptest! {
    #[test]
    fn display_parse_round_trip(x in arb_element()) {
        let text = x.to_string();
        let back: Element = text.parse().unwrap();
        prop_assert_eq!(back, x);
    }

    #[test]
    fn split_then_shuffle_is_identity(x in arb_element()) {
        let (a, b) = x.split();
        prop_assert_eq!(Element::shuffle_pair(&a, &b).unwrap(), x);
    }

    #[test]
    fn conjugation_is_an_involution(x in arb_element()) {
        prop_assert_eq!(x.conjugate().conjugate(), x);
    }

    #[test]
    fn conjugation_pair_law(a in arb_element(), b in arb_element()) {
        let pair = Element::shuffle_pair(&a, &b).unwrap();
        let want = Element::shuffle_pair(&a.conjugate(), &(-&b)).unwrap();
        prop_assert_eq!(pair.conjugate(), want);
    }

    #[test]
    fn twist_product_is_bilinear(
        x in arb_element(),
        y in arb_element(),
        z in arb_element(),
    ) {
        let left = mul_twist(&(&x + &y), &z);
        let right = &mul_twist(&x, &z) + &mul_twist(&y, &z);
        prop_assert_eq!(&left, &right);
        let left = mul_twist(&z, &(&x + &y));
        let right = &mul_twist(&z, &x) + &mul_twist(&z, &y);
        prop_assert_eq!(left, right);
    }

    #[test]
    fn norm_is_zero_only_on_zero(x in arb_element()) {
        prop_assert_eq!(x.norm_sq().is_zero(), x.is_zero());
    }

    #[test]
    fn unit_element_is_neutral(x in arb_element()) {
        prop_assert_eq!(mul_twist(&Element::one(), &x), x.clone());
        prop_assert_eq!(mul_twist(&x, &Element::one()), x);
    }
}
