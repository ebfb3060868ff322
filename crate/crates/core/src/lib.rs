//! Cayley-Dickson algebra over the interleaved (shuffle) basis numbering,
//! where `e_0 = 1`, `e_{2k} = (e_k, 0)` and `e_{2k+1} = (0, e_k)`.
//!
//! Under this numbering the product of two basis vectors is always
//! `e_p e_q = omega(p, q) e_{p xor q}` for a sign-valued twist `omega`, one
//! per doubling product. For the `P2` product the twist collapses to a
//! constant-time rule over dyadic blocks; this crate implements that rule,
//! the recursive-doubling evaluation of all eight products it is validated
//! against, exact sparse element arithmetic on top of them, an equivalent
//! tree-traversal automaton, dense sign-table renderings, and seeded
//! micro-benchmarks of the fast path.
//!
//! ```
//! use cdtwist_core::{basis_mul, BasisIndex, ProductVariant};
//!
//! let p = BasisIndex::new(35).unwrap();
//! let q = BasisIndex::new(55).unwrap();
//! assert_eq!(basis_mul(ProductVariant::P2, p, q).to_string(), "+e20");
//! ```

pub mod atlas;
pub mod bench;
pub mod element;
pub mod index;
pub mod oracle;
pub mod sign;
pub mod treewalk;
pub mod twist;
pub mod variant;
pub mod verify;

pub use element::{find_zero_divisor, mul_doubling, mul_twist, Element, Scalar};
pub use index::{BasisIndex, IndexError};
pub use oracle::oracle_basis_mul;
pub use sign::Sign;
pub use treewalk::{interleave_bits, traverse, TwistAutomaton};
pub use twist::{basis_mul, omega, omega2, SignedBasis};
pub use variant::ProductVariant;
