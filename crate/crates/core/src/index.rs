use std::fmt;
use std::ops::BitXor;

use thiserror::Error;

/// Number of usable bits in a [`BasisIndex`].
pub const INDEX_BITS: u32 = 63;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum IndexError {
    #[error("basis index {0} exceeds the maximum of 2^63 - 1")]
    TooLarge(u64),
    #[error("index 0 has no block exponent")]
    ZeroBlock,
}

/// Index of a basis vector `e_p` in the interleaved numbering, where
/// `e_0 = 1`, `e_{2k} = (e_k, 0)` and `e_{2k+1} = (0, e_k)`.
///
/// Values are restricted to `0 <= p < 2^63` so every bit operation stays a
/// single machine-word instruction; out-of-range inputs are rejected, never
/// truncated.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BasisIndex(u64);

impl BasisIndex {
    pub const ZERO: BasisIndex = BasisIndex(0);
    pub const MAX: BasisIndex = BasisIndex((1 << INDEX_BITS) - 1);

    pub fn new(value: u64) -> Result<Self, IndexError> {
        if value > Self::MAX.0 {
            Err(IndexError::TooLarge(value))
        } else {
            Ok(BasisIndex(value))
        }
    }

    #[inline]
    pub const fn value(self) -> u64 {
        self.0
    }

    #[inline]
    pub const fn is_zero(self) -> bool {
        self.0 == 0
    }

    /// Bitwise exclusive-or, the group operation on basis indices: the
    /// product of `e_p` and `e_q` is supported on `e_{p^q}` for every
    /// doubling product.
    #[inline]
    pub const fn xor(self, other: Self) -> Self {
        BasisIndex(self.0 ^ other.0)
    }

    /// The exponent `N` with `2^N <= p < 2^{N+1}`, i.e. the position of the
    /// highest set bit. Index 0 has none.
    #[inline]
    pub fn block_exponent(self) -> Result<u32, IndexError> {
        if self.0 == 0 {
            Err(IndexError::ZeroBlock)
        } else {
            Ok(63 - self.0.leading_zeros())
        }
    }

    /// Number of binary digits (1 for index 0).
    #[inline]
    pub const fn bit_width(self) -> u32 {
        if self.0 == 0 {
            1
        } else {
            64 - self.0.leading_zeros()
        }
    }
}

impl BitXor for BasisIndex {
    type Output = BasisIndex;

    #[inline]
    fn bitxor(self, rhs: BasisIndex) -> BasisIndex {
        self.xor(rhs)
    }
}

/// Infallible for anything below 2^32.
impl From<u32> for BasisIndex {
    fn from(value: u32) -> Self {
        BasisIndex(u64::from(value))
    }
}

impl TryFrom<u64> for BasisIndex {
    type Error = IndexError;

    fn try_from(value: u64) -> Result<Self, IndexError> {
        BasisIndex::new(value)
    }
}

impl fmt::Display for BasisIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}
