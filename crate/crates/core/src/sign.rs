use std::fmt;
use std::ops::{Mul, Neg};

/// A sign in `{+1, -1}`, the codomain of every twist function.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    /// `Minus` when `odd` is true, `Plus` otherwise. Encodes `(-1)^k` from
    /// the parity of `k`.
    #[inline]
    pub const fn from_parity(odd: bool) -> Self {
        if odd {
            Sign::Minus
        } else {
            Sign::Plus
        }
    }

    #[inline]
    pub const fn as_i32(self) -> i32 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    #[inline]
    pub const fn is_negative(self) -> bool {
        matches!(self, Sign::Minus)
    }

    #[inline]
    pub const fn flip(self) -> Self {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    #[inline]
    pub const fn flip_if(self, cond: bool) -> Self {
        if cond {
            self.flip()
        } else {
            self
        }
    }
}

impl Mul for Sign {
    type Output = Sign;

    #[inline]
    fn mul(self, rhs: Sign) -> Sign {
        self.flip_if(rhs.is_negative())
    }
}

impl Neg for Sign {
    type Output = Sign;

    #[inline]
    fn neg(self) -> Sign {
        self.flip()
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+1",
            Sign::Minus => "-1",
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sign_is_its_own_inverse() {
        for s in [Sign::Plus, Sign::Minus] {
            assert_eq!(s * s, Sign::Plus);
            assert_eq!(-(-s), s);
        }
    }

    #[test]
    fn parity_encoding() {
        assert_eq!(Sign::from_parity(false), Sign::Plus);
        assert_eq!(Sign::from_parity(true), Sign::Minus);
        assert_eq!(Sign::Plus.as_i32(), 1);
        assert_eq!(Sign::Minus.as_i32(), -1);
    }

    #[test]
    fn display() {
        assert_eq!(Sign::Plus.to_string(), "+1");
        assert_eq!(Sign::Minus.to_string(), "-1");
    }
}
