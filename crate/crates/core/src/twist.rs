//! The sign twist: `e_p e_q = omega(p, q) e_{p xor q}`.
//!
//! For the `P2` product the twist has a closed form over dyadic blocks.
//! Writing `N` for the block exponent of the smaller nonzero index:
//!
//! * same block (`2^N <= p < q < 2^{N+1}`): `omega2(p, q) = +1`;
//! * lower block (`2^N <= p < 2^{N+1} <= q`): `omega2(p, q) = (-1)^{floor(q / 2^N)}`,
//!   i.e. the parity of bit `N` of `q`;
//! * plus the laws shared by all eight products: `omega(p, 0) = omega(0, q) = 1`,
//!   `omega(p, p) = -1` for `p > 0`, and antisymmetry for distinct nonzero
//!   indices.
//!
//! Every other variant falls back to the recursive-doubling oracle; `T2`
//! reuses the closed form through transposition.

use std::fmt;

use crate::index::BasisIndex;
use crate::oracle::oracle_basis_mul;
use crate::sign::Sign;
use crate::variant::ProductVariant;

/// `sign * e_index`, the value of a basis-vector product. There is no zero:
/// the product of two basis vectors is always another signed basis vector.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SignedBasis {
    pub sign: Sign,
    pub index: BasisIndex,
}

impl fmt::Display for SignedBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.sign.is_negative() { '-' } else { '+' };
        write!(f, "{sign}e{}", self.index)
    }
}

/// Closed-form twist of the `P2` product. Total on all index pairs and
/// constant-time: it reads one block exponent and one bit.
pub fn omega2(p: BasisIndex, q: BasisIndex) -> Sign {
    let (a, b) = (p.value(), q.value());
    if a == 0 || b == 0 {
        return Sign::Plus;
    }
    if a == b {
        return Sign::Minus;
    }
    // Antisymmetry reduces to the ordered case.
    let (lo, hi, flipped) = if a < b { (a, b, false) } else { (b, a, true) };
    let block = 63 - lo.leading_zeros();
    let ordered = if hi < (2u64 << block) {
        // Same dyadic block.
        Sign::Plus
    } else {
        // floor(hi / 2^block) mod 2 is bit `block` of hi.
        Sign::from_parity((hi >> block) & 1 == 1)
    };
    ordered.flip_if(flipped)
}

/// Twist of any of the eight products: the sign of `e_p e_q` under `v`.
///
/// `P2` and its transpose take the constant-time closed form; the remaining
/// six variants are evaluated by the recursive-doubling oracle.
pub fn omega(v: ProductVariant, p: BasisIndex, q: BasisIndex) -> Sign {
    match v {
        ProductVariant::P2 => omega2(p, q),
        ProductVariant::T2 => omega2(q, p),
        _ => oracle_basis_mul(v, p, q).sign,
    }
}

/// The basis-vector product `e_p e_q` under `v`: sign from [`omega`], index
/// from the xor group law.
pub fn basis_mul(v: ProductVariant, p: BasisIndex, q: BasisIndex) -> SignedBasis {
    SignedBasis {
        sign: omega(v, p, q),
        index: p.xor(q),
    }
}
