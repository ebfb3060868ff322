//! Recursive-doubling computation of basis-vector products.
//!
//! A basis vector `e_p` at pair level `L` splits as `(e_{p/2}, 0)` when `p`
//! is even and `(0, e_{(p-1)/2})` when `p` is odd. Feeding two such pairs
//! through a doubling product leaves exactly one of the four component
//! products nonzero, so the whole recursion reduces to: one sub-product of
//! halved indices (possibly exchanged), an optional conjugation sign, and an
//! optional negation. Iterating down to `e_0 e_0 = 1` yields the sign; the
//! index is always the xor of the inputs.
//!
//! Nothing here consults the closed-form twist, so this path serves as an
//! independent oracle for it.

use crate::index::BasisIndex;
use crate::sign::Sign;
use crate::twist::SignedBasis;
use crate::variant::ProductVariant;

/// Which halved operand multiplies on the left in the surviving sub-product.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Order {
    /// Recurse on `(p/2, q/2)`.
    LeftRight,
    /// Recurse on `(q/2, p/2)`.
    RightLeft,
}

/// Which halved operand carries a conjugation in the surviving sub-product.
/// Conjugating a basis vector only flips its sign, and only when its index
/// is nonzero.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Conjugated {
    Neither,
    Left,
    Right,
}

#[derive(Clone, Copy, Debug)]
pub(crate) struct DoublingStep {
    pub(crate) order: Order,
    pub(crate) conj: Conjugated,
    pub(crate) negate: bool,
}

/// The surviving component product for one doubling level, keyed by the
/// variant and the low bits of the current left and right indices. Read
/// straight off the eight pair formulas in [`ProductVariant`]'s table.
pub(crate) fn doubling_step(v: ProductVariant, left_odd: bool, right_odd: bool) -> DoublingStep {
    use Conjugated::{Left, Neither, Right};
    use Order::{LeftRight, RightLeft};
    use ProductVariant as V;

    let (order, conj, negate) = match (v, left_odd, right_odd) {
        // P0: (ca - b*d, da* + bc)
        (V::P0, false, false) => (RightLeft, Neither, false), // ca
        (V::P0, false, true) => (RightLeft, Left, false),     // da*
        (V::P0, true, false) => (LeftRight, Neither, false),  // bc
        (V::P0, true, true) => (LeftRight, Left, true),       // -b*d

        // P1: (ca - db*, a*d + cb)
        (V::P1, false, false) => (RightLeft, Neither, false), // ca
        (V::P1, false, true) => (LeftRight, Left, false),     // a*d
        (V::P1, true, false) => (RightLeft, Neither, false),  // cb
        (V::P1, true, true) => (RightLeft, Left, true),       // -db*

        // P2: (ac - b*d, da* + bc)
        (V::P2, false, false) => (LeftRight, Neither, false), // ac
        (V::P2, false, true) => (RightLeft, Left, false),     // da*
        (V::P2, true, false) => (LeftRight, Neither, false),  // bc
        (V::P2, true, true) => (LeftRight, Left, true),       // -b*d

        // P3: (ac - db*, a*d + cb)
        (V::P3, false, false) => (LeftRight, Neither, false), // ac
        (V::P3, false, true) => (LeftRight, Left, false),     // a*d
        (V::P3, true, false) => (RightLeft, Neither, false),  // cb
        (V::P3, true, true) => (RightLeft, Left, true),       // -db*

        // T0: (ca - bd*, ad + c*b)
        (V::T0, false, false) => (RightLeft, Neither, false), // ca
        (V::T0, false, true) => (LeftRight, Neither, false),  // ad
        (V::T0, true, false) => (RightLeft, Right, false),    // c*b
        (V::T0, true, true) => (LeftRight, Right, true),      // -bd*

        // T1: (ca - d*b, da + bc*)
        (V::T1, false, false) => (RightLeft, Neither, false), // ca
        (V::T1, false, true) => (RightLeft, Neither, false),  // da
        (V::T1, true, false) => (LeftRight, Right, false),    // bc*
        (V::T1, true, true) => (RightLeft, Right, true),      // -d*b

        // T2: (ac - bd*, ad + c*b)
        (V::T2, false, false) => (LeftRight, Neither, false), // ac
        (V::T2, false, true) => (LeftRight, Neither, false),  // ad
        (V::T2, true, false) => (RightLeft, Right, false),    // c*b
        (V::T2, true, true) => (LeftRight, Right, true),      // -bd*

        // T3: (ac - d*b, da + bc*)
        (V::T3, false, false) => (LeftRight, Neither, false), // ac
        (V::T3, false, true) => (RightLeft, Neither, false),  // da
        (V::T3, true, false) => (LeftRight, Right, false),    // bc*
        (V::T3, true, true) => (RightLeft, Right, true),      // -d*b
    };
    DoublingStep { order, conj, negate }
}

/// Computes `e_p e_q` under variant `v` by recursive pair doubling. The
/// operands are implicitly lifted to the smallest common power-of-two
/// dimension; the base level multiplies reals.
pub fn oracle_basis_mul(v: ProductVariant, p: BasisIndex, q: BasisIndex) -> SignedBasis {
    let index = p.xor(q);
    let mut left = p.value();
    let mut right = q.value();
    let mut sign = Sign::Plus;

    while left != 0 || right != 0 {
        let step = doubling_step(v, left & 1 == 1, right & 1 == 1);
        let half_left = left >> 1;
        let half_right = right >> 1;

        let conj_flips = match step.conj {
            Conjugated::Neither => false,
            Conjugated::Left => half_left != 0,
            Conjugated::Right => half_right != 0,
        };
        sign = sign.flip_if(conj_flips ^ step.negate);

        (left, right) = match step.order {
            Order::LeftRight => (half_left, half_right),
            Order::RightLeft => (half_right, half_left),
        };
    }

    SignedBasis { sign, index }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn idx(v: u64) -> BasisIndex {
        BasisIndex::new(v).unwrap()
    }

    fn sb(sign: Sign, index: u64) -> SignedBasis {
        SignedBasis {
            sign,
            index: idx(index),
        }
    }

    #[test]
    fn p2_small_products_by_hand() {
        // (0,1)(i,0) at dimension 4: the odd/even case keeps bc = e_0 e_1
        // shifted to the odd half, giving +e_3.
        assert_eq!(
            oracle_basis_mul(ProductVariant::P2, idx(1), idx(2)),
            sb(Sign::Plus, 3)
        );
        assert_eq!(
            oracle_basis_mul(ProductVariant::P2, idx(3), idx(14)),
            sb(Sign::Minus, 13)
        );
    }

    #[test]
    fn p3_small_product_by_hand() {
        // (0,e0)(e1,0): only cb = e_1 e_0 survives and lands in the odd
        // half, so the result is +e_3.
        assert_eq!(
            oracle_basis_mul(ProductVariant::P3, idx(1), idx(2)),
            sb(Sign::Plus, 3)
        );
    }

    #[test]
    fn unit_and_square_for_every_variant() {
        for v in ProductVariant::ALL {
            for p in 0..64u64 {
                assert_eq!(oracle_basis_mul(v, idx(p), idx(0)), sb(Sign::Plus, p));
                assert_eq!(oracle_basis_mul(v, idx(0), idx(p)), sb(Sign::Plus, p));
                if p > 0 {
                    assert_eq!(oracle_basis_mul(v, idx(p), idx(p)), sb(Sign::Minus, 0));
                }
            }
        }
    }

    #[test]
    fn index_is_always_the_xor() {
        for v in ProductVariant::ALL {
            for p in 0..32u64 {
                for q in 0..32u64 {
                    let got = oracle_basis_mul(v, idx(p), idx(q));
                    assert_eq!(got.index, idx(p ^ q));
                }
            }
        }
    }

    #[test]
    fn quaternion_table_for_p2() {
        // In the interleaved numbering, P2 at dimension 4 is the quaternions
        // with e1 e2 = e3, e2 e3 = e1, e3 e1 = e2.
        let cases = [
            (1, 2, Sign::Plus, 3),
            (2, 3, Sign::Plus, 1),
            (3, 1, Sign::Plus, 2),
            (2, 1, Sign::Minus, 3),
            (3, 2, Sign::Minus, 1),
            (1, 3, Sign::Minus, 2),
        ];
        for (p, q, sign, r) in cases {
            assert_eq!(
                oracle_basis_mul(ProductVariant::P2, idx(p), idx(q)),
                sb(sign, r),
                "e_{p} e_{q}"
            );
        }
    }
}
