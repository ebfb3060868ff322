use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// One of the eight Cayley-Dickson doubling products.
///
/// With conjugation defined by `(a,b)* = (a*, -b)`, the eight pair products
/// that extend real multiplication are:
///
/// ```text
/// P0: (a,b)(c,d) = (ca - b*d, da* + bc)
/// P1: (a,b)(c,d) = (ca - db*, a*d + cb)
/// P2: (a,b)(c,d) = (ac - b*d, da* + bc)
/// P3: (a,b)(c,d) = (ac - db*, a*d + cb)
/// T0: (a,b)(c,d) = (ca - bd*, ad + c*b)
/// T1: (a,b)(c,d) = (ca - d*b, da + bc*)
/// T2: (a,b)(c,d) = (ac - bd*, ad + c*b)
/// T3: (a,b)(c,d) = (ac - d*b, da + bc*)
/// ```
///
/// `Tk` is the transpose of `Pk`: `Pk(x, y) = Tk(y, x)`, so their basis
/// multiplication tables are matrix transposes of each other.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ProductVariant {
    P0,
    P1,
    P2,
    P3,
    T0,
    T1,
    T2,
    T3,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown product variant `{0}` (expected one of P0-P3, T0-T3)")]
pub struct ParseVariantError(pub String);

impl ProductVariant {
    pub const ALL: [ProductVariant; 8] = [
        ProductVariant::P0,
        ProductVariant::P1,
        ProductVariant::P2,
        ProductVariant::P3,
        ProductVariant::T0,
        ProductVariant::T1,
        ProductVariant::T2,
        ProductVariant::T3,
    ];

    /// The paired product with left and right operands exchanged.
    pub const fn transpose(self) -> ProductVariant {
        match self {
            ProductVariant::P0 => ProductVariant::T0,
            ProductVariant::P1 => ProductVariant::T1,
            ProductVariant::P2 => ProductVariant::T2,
            ProductVariant::P3 => ProductVariant::T3,
            ProductVariant::T0 => ProductVariant::P0,
            ProductVariant::T1 => ProductVariant::P1,
            ProductVariant::T2 => ProductVariant::P2,
            ProductVariant::T3 => ProductVariant::P3,
        }
    }

    pub const fn label(self) -> &'static str {
        match self {
            ProductVariant::P0 => "P0",
            ProductVariant::P1 => "P1",
            ProductVariant::P2 => "P2",
            ProductVariant::P3 => "P3",
            ProductVariant::T0 => "T0",
            ProductVariant::T1 => "T1",
            ProductVariant::T2 => "T2",
            ProductVariant::T3 => "T3",
        }
    }
}

impl fmt::Display for ProductVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for ProductVariant {
    type Err = ParseVariantError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_uppercase().as_str() {
            "P0" => Ok(ProductVariant::P0),
            "P1" => Ok(ProductVariant::P1),
            "P2" => Ok(ProductVariant::P2),
            "P3" => Ok(ProductVariant::P3),
            "T0" => Ok(ProductVariant::T0),
            "T1" => Ok(ProductVariant::T1),
            "T2" => Ok(ProductVariant::T2),
            "T3" => Ok(ProductVariant::T3),
            _ => Err(ParseVariantError(s.to_string())),
        }
    }
}
