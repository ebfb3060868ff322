//! Dense twist-sign tables and their bitmap renderings.
//!
//! A table holds `omega(v, p, q)` for all `p, q < 2^n`, rows indexed by the
//! left factor `p` (increasing downward) and columns by the right factor
//! `q` (increasing rightward). Renderings are byte-for-byte deterministic:
//! `+1` cells paint gray (192), `-1` cells white (255).

use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::index::BasisIndex;
use crate::oracle::{doubling_step, Conjugated, Order};
use crate::sign::Sign;
use crate::twist::omega;
use crate::variant::ProductVariant;

pub const MIN_TABLE_EXPONENT: u32 = 1;
/// Upper bound keeps the dense table at 2^24 cells.
pub const MAX_TABLE_EXPONENT: u32 = 12;

/// Pixel value for `+1` cells in graymap output.
pub const PLUS_GRAY: u8 = 192;
/// Pixel value for `-1` cells in graymap output.
pub const MINUS_WHITE: u8 = 255;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum AtlasError {
    #[error("table exponent {0} out of range [{MIN_TABLE_EXPONENT}, {MAX_TABLE_EXPONENT}]")]
    ExponentOutOfRange(u32),
}

/// Dense `2^n x 2^n` matrix of twist signs, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OmegaTable {
    variant: ProductVariant,
    exponent: u32,
    signs: Vec<Sign>,
}

impl OmegaTable {
    pub fn variant(&self) -> ProductVariant {
        self.variant
    }

    pub fn exponent(&self) -> u32 {
        self.exponent
    }

    /// Side length `2^n`.
    pub fn size(&self) -> usize {
        1 << self.exponent
    }

    /// Sign at row `p`, column `q`. Panics outside the table.
    pub fn get(&self, p: usize, q: usize) -> Sign {
        assert!(p < self.size() && q < self.size(), "cell out of range");
        self.signs[p * self.size() + q]
    }
}

/// Fills the table for `v` at exponent `n`.
///
/// `P2` and `T2` read the constant-time closed form cell by cell. The other
/// six variants are built level by level: the size-`2^k` table is derived
/// from the size-`2^{k-1}` table through the surviving-component rule of
/// the pair recursion, which memoizes every subproblem exactly once.
pub fn build_table(v: ProductVariant, n: u32) -> Result<OmegaTable, AtlasError> {
    if !(MIN_TABLE_EXPONENT..=MAX_TABLE_EXPONENT).contains(&n) {
        return Err(AtlasError::ExponentOutOfRange(n));
    }
    let signs = match v {
        ProductVariant::P2 | ProductVariant::T2 => {
            let size = 1usize << n;
            let mut signs = Vec::with_capacity(size * size);
            for p in 0..size {
                for q in 0..size {
                    let p = BasisIndex::new(p as u64).expect("table index in range");
                    let q = BasisIndex::new(q as u64).expect("table index in range");
                    signs.push(omega(v, p, q));
                }
            }
            signs
        }
        _ => build_by_doubling(v, n),
    };
    Ok(OmegaTable {
        variant: v,
        exponent: n,
        signs,
    })
}

fn build_by_doubling(v: ProductVariant, n: u32) -> Vec<Sign> {
    let mut prev = vec![Sign::Plus]; // the 1x1 level: e_0 e_0 = 1
    for level in 1..=n {
        let size = 1usize << level;
        let half = size >> 1;
        let mut next = Vec::with_capacity(size * size);
        for p in 0..size {
            for q in 0..size {
                let step = doubling_step(v, p & 1 == 1, q & 1 == 1);
                let (hp, hq) = (p >> 1, q >> 1);
                let conj_flips = match step.conj {
                    Conjugated::Neither => false,
                    Conjugated::Left => hp != 0,
                    Conjugated::Right => hq != 0,
                };
                let sub = match step.order {
                    Order::LeftRight => prev[hp * half + hq],
                    Order::RightLeft => prev[hq * half + hp],
                };
                next.push(sub.flip_if(conj_flips ^ step.negate));
            }
        }
        prev = next;
    }
    prev
}

/// Renders a binary portable graymap: `P5` header with width, height and
/// maxval 255, then one byte per cell in row-major order.
pub fn render_pgm(table: &OmegaTable) -> Vec<u8> {
    let size = table.size();
    let mut out = format!("P5\n{size} {size}\n255\n").into_bytes();
    out.extend(table.signs.iter().map(|s| match s {
        Sign::Plus => PLUS_GRAY,
        Sign::Minus => MINUS_WHITE,
    }));
    out
}

/// Renders rows of `+`/`-` characters, one row per line.
pub fn render_txt(table: &OmegaTable) -> String {
    let size = table.size();
    let mut out = String::with_capacity(size * (size + 1));
    for p in 0..size {
        for q in 0..size {
            out.push(if table.get(p, q).is_negative() { '-' } else { '+' });
        }
        out.push('\n');
    }
    out
}

/// SHA-256 of the canonical graymap rendering, lowercase hex. Used for the
/// `variant n digest` lines of a checksum manifest.
pub fn table_checksum(table: &OmegaTable) -> String {
    hex::encode(Sha256::digest(render_pgm(table)))
}
