//! Sparse algebra elements with exact rational coefficients.
//!
//! An [`Element`] is a finite linear combination of basis vectors kept in
//! canonical form: zero coefficients are dropped eagerly and terms iterate
//! in ascending index order, so structural equality is algebraic equality
//! and serialization is deterministic.
//!
//! Multiplication comes in two flavors that must agree exactly for `P2`:
//! [`mul_doubling`] recurses through the pair construction (any variant),
//! while [`mul_twist`] expands bilinearly through the closed-form twist.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::index::{BasisIndex, IndexError};
use crate::sign::Sign;
use crate::twist::{omega2, SignedBasis};
use crate::variant::ProductVariant;

/// Exact rational coefficient with arbitrary-precision integer parts.
pub type Scalar = num_rational::BigRational;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Element {
    terms: BTreeMap<BasisIndex, Scalar>,
}

impl Element {
    pub fn zero() -> Self {
        Element::default()
    }

    /// The multiplicative unit `e_0`.
    pub fn one() -> Self {
        Element::basis(BasisIndex::ZERO)
    }

    pub fn basis(index: BasisIndex) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(index, Scalar::one());
        Element { terms }
    }

    /// A real multiple of `e_0`.
    pub fn scalar(value: Scalar) -> Self {
        let mut e = Element::zero();
        e.accumulate(BasisIndex::ZERO, value);
        e
    }

    /// Builds an element from arbitrary `(index, coefficient)` pairs,
    /// merging duplicates and dropping zeros.
    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (BasisIndex, Scalar)>,
    {
        let mut e = Element::zero();
        for (index, coeff) in terms {
            e.accumulate(index, coeff);
        }
        e
    }

    fn accumulate(&mut self, index: BasisIndex, coeff: Scalar) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(index) {
            std::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut slot) => {
                *slot.get_mut() += coeff;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// True when the support is contained in `{e_0}`, i.e. the element is a
    /// real number (possibly zero).
    pub fn is_real(&self) -> bool {
        self.terms.keys().all(|k| k.is_zero())
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Coefficient at `index`, zero when absent.
    pub fn coefficient(&self, index: BasisIndex) -> Scalar {
        self.terms.get(&index).cloned().unwrap_or_else(Scalar::zero)
    }

    /// Terms in ascending index order.
    pub fn terms(&self) -> impl Iterator<Item = (BasisIndex, &Scalar)> {
        self.terms.iter().map(|(k, v)| (*k, v))
    }

    pub fn max_index(&self) -> Option<BasisIndex> {
        self.terms.keys().next_back().copied()
    }

    /// Negates every coordinate except the one at index 0. An involution,
    /// and through [`shuffle_pair`] it satisfies `(a, b)* = (a*, -b)`.
    pub fn conjugate(&self) -> Element {
        let terms = self
            .terms
            .iter()
            .map(|(&index, coeff)| {
                let coeff = if index.is_zero() {
                    coeff.clone()
                } else {
                    -coeff.clone()
                };
                (index, coeff)
            })
            .collect();
        Element { terms }
    }

    /// Interleaves a pair into one element: coordinate `k` of `a` lands at
    /// index `2k`, coordinate `k` of `b` at `2k + 1`. Fails if a doubled
    /// index would leave the representable range.
    pub fn shuffle_pair(a: &Element, b: &Element) -> Result<Element, IndexError> {
        let mut terms = BTreeMap::new();
        for (index, coeff) in &a.terms {
            let doubled = index
                .value()
                .checked_mul(2)
                .ok_or(IndexError::TooLarge(u64::MAX))?;
            terms.insert(BasisIndex::new(doubled)?, coeff.clone());
        }
        for (index, coeff) in &b.terms {
            let doubled = index
                .value()
                .checked_mul(2)
                .and_then(|d| d.checked_add(1))
                .ok_or(IndexError::TooLarge(u64::MAX))?;
            terms.insert(BasisIndex::new(doubled)?, coeff.clone());
        }
        Ok(Element { terms })
    }

    /// De-interleaves into (even-coordinate, odd-coordinate) halves; the
    /// exact inverse of [`Element::shuffle_pair`].
    pub fn split(&self) -> (Element, Element) {
        let mut even = BTreeMap::new();
        let mut odd = BTreeMap::new();
        for (index, coeff) in &self.terms {
            let half = BasisIndex::new(index.value() >> 1).expect("halving shrinks the index");
            if index.value() & 1 == 0 {
                even.insert(half, coeff.clone());
            } else {
                odd.insert(half, coeff.clone());
            }
        }
        (Element { terms: even }, Element { terms: odd })
    }

    /// Sum of squared coordinates; zero exactly on the zero element.
    pub fn norm_sq(&self) -> Scalar {
        self.terms
            .values()
            .map(|c| c * c)
            .fold(Scalar::zero(), |acc, c| acc + c)
    }
}

impl From<SignedBasis> for Element {
    fn from(sb: SignedBasis) -> Element {
        let coeff = match sb.sign {
            Sign::Plus => Scalar::one(),
            Sign::Minus => -Scalar::one(),
        };
        Element::from_terms([(sb.index, coeff)])
    }
}

impl Add for &Element {
    type Output = Element;

    fn add(self, rhs: &Element) -> Element {
        let mut out = self.clone();
        for (index, coeff) in &rhs.terms {
            out.accumulate(*index, coeff.clone());
        }
        out
    }
}

impl Sub for &Element {
    type Output = Element;

    fn sub(self, rhs: &Element) -> Element {
        let mut out = self.clone();
        for (index, coeff) in &rhs.terms {
            out.accumulate(*index, -coeff.clone());
        }
        out
    }
}

impl Neg for &Element {
    type Output = Element;

    fn neg(self) -> Element {
        let terms = self
            .terms
            .iter()
            .map(|(&index, coeff)| (index, -coeff.clone()))
            .collect();
        Element { terms }
    }
}

/// Full product by recursive pair doubling under any of the eight variants.
///
/// Both operands split into (even, odd) halves, the variant's two-component
/// formula combines them with recursive products and conjugations, and the
/// halves interleave back. Elements supported on `e_0` alone multiply as
/// reals.
pub fn mul_doubling(v: ProductVariant, x: &Element, y: &Element) -> Element {
    if x.is_real() && y.is_real() {
        return Element::scalar(
            x.coefficient(BasisIndex::ZERO) * y.coefficient(BasisIndex::ZERO),
        );
    }
    let (a, b) = x.split();
    let (c, d) = y.split();
    let m = |l: &Element, r: &Element| mul_doubling(v, l, r);

    use ProductVariant as V;
    let (first, second) = match v {
        // P0: (ca - b*d, da* + bc)
        V::P0 => (
            &m(&c, &a) - &m(&b.conjugate(), &d),
            &m(&d, &a.conjugate()) + &m(&b, &c),
        ),
        // P1: (ca - db*, a*d + cb)
        V::P1 => (
            &m(&c, &a) - &m(&d, &b.conjugate()),
            &m(&a.conjugate(), &d) + &m(&c, &b),
        ),
        // P2: (ac - b*d, da* + bc)
        V::P2 => (
            &m(&a, &c) - &m(&b.conjugate(), &d),
            &m(&d, &a.conjugate()) + &m(&b, &c),
        ),
        // P3: (ac - db*, a*d + cb)
        V::P3 => (
            &m(&a, &c) - &m(&d, &b.conjugate()),
            &m(&a.conjugate(), &d) + &m(&c, &b),
        ),
        // T0: (ca - bd*, ad + c*b)
        V::T0 => (
            &m(&c, &a) - &m(&b, &d.conjugate()),
            &m(&a, &d) + &m(&c.conjugate(), &b),
        ),
        // T1: (ca - d*b, da + bc*)
        V::T1 => (
            &m(&c, &a) - &m(&d.conjugate(), &b),
            &m(&d, &a) + &m(&b, &c.conjugate()),
        ),
        // T2: (ac - bd*, ad + c*b)
        V::T2 => (
            &m(&a, &c) - &m(&b, &d.conjugate()),
            &m(&a, &d) + &m(&c.conjugate(), &b),
        ),
        // T3: (ac - d*b, da + bc*)
        V::T3 => (
            &m(&a, &c) - &m(&d.conjugate(), &b),
            &m(&d, &a) + &m(&b, &c.conjugate()),
        ),
    };
    // Halved indices interleave back below the operands' own bound.
    Element::shuffle_pair(&first, &second).expect("split halves re-interleave in range")
}

/// Product under `P2` by bilinear expansion through the closed-form twist:
/// every term pair contributes `x_p y_q omega2(p, q) e_{p xor q}`.
pub fn mul_twist(x: &Element, y: &Element) -> Element {
    let mut out = Element::zero();
    for (p, xc) in x.terms() {
        for (q, yc) in y.terms() {
            let mut coeff = xc * yc;
            if omega2(p, q).is_negative() {
                coeff = -coeff;
            }
            out.accumulate(p.xor(q), coeff);
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ZeroDivisorError {
    #[error("dimension {0} not supported: expected one of 1, 2, 4, 8, 16")]
    UnsupportedDimension(u64),
}

/// Searches for a pair of nonzero elements whose `P2` product is exactly
/// zero, over the restricted space `x = e_a +- e_b`, `y = e_c +- e_d` with
/// distinct indices below `dim`.
///
/// Dimensions 1, 2, 4 and 8 admit none (the norm is multiplicative there);
/// dimension 16 is the first with zero divisors. Larger dimensions are
/// rejected to bound the search. The scan order is fixed, so the returned
/// witness is deterministic.
pub fn find_zero_divisor(dim: u64) -> Result<Option<(Element, Element)>, ZeroDivisorError> {
    if !matches!(dim, 1 | 2 | 4 | 8 | 16) {
        return Err(ZeroDivisorError::UnsupportedDimension(dim));
    }
    let combos: Vec<Element> = two_term_combinations(dim);
    for x in &combos {
        for y in &combos {
            if mul_twist(x, y).is_zero() {
                return Ok(Some((x.clone(), y.clone())));
            }
        }
    }
    Ok(None)
}

fn two_term_combinations(dim: u64) -> Vec<Element> {
    let mut out = Vec::new();
    for a in 0..dim {
        for b in (a + 1)..dim {
            for sign in [Scalar::one(), -Scalar::one()] {
                let x = Element::from_terms([
                    (BasisIndex::new(a).expect("a < 16"), Scalar::one()),
                    (BasisIndex::new(b).expect("b < 16"), sign),
                ]);
                out.push(x);
            }
        }
    }
    out
}

// ---------------------------------------------------------------------------
// Text format: terms joined by `+`/`-`, each term `[coeff*]e<index>` with an
// integer or `n/d` coefficient, e.g. `3*e0 - 1/2*e5`. Whitespace between
// tokens is ignored. Serialization emits ascending indices with an explicit
// leading `-` on a negative head term.
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseElementError {
    #[error("empty element text")]
    Empty,
    #[error("unexpected `{token}` at byte {pos}")]
    Unexpected { pos: usize, token: String },
    #[error("zero denominator in `{token}` at byte {pos}")]
    ZeroDenominator { pos: usize, token: String },
    #[error("basis index `{token}` at byte {pos} out of range")]
    IndexOutOfRange { pos: usize, token: String },
}

struct Cursor<'a> {
    text: &'a str,
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(text: &'a str) -> Self {
        Cursor {
            text,
            bytes: text.as_bytes(),
            pos: 0,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn eat(&mut self, byte: u8) -> bool {
        if self.peek() == Some(byte) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn digits(&mut self) -> Option<&'a str> {
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        (self.pos > start).then(|| &self.text[start..self.pos])
    }

    /// The next non-space run, for error messages.
    fn offending_token(&self) -> String {
        let rest = self.text[self.pos..].trim_start();
        if rest.is_empty() {
            return "end of input".to_string();
        }
        let end = rest
            .find(|c: char| c.is_whitespace())
            .unwrap_or(rest.len())
            .min(16);
        rest[..end].to_string()
    }

    fn unexpected(&self) -> ParseElementError {
        ParseElementError::Unexpected {
            pos: self.pos,
            token: self.offending_token(),
        }
    }
}

impl FromStr for Element {
    type Err = ParseElementError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut cur = Cursor::new(s);
        cur.skip_ws();
        if cur.peek().is_none() {
            return Err(ParseElementError::Empty);
        }

        let mut element = Element::zero();
        let mut negative = false;
        if cur.eat(b'-') {
            negative = true;
        } else {
            cur.eat(b'+');
        }
        loop {
            cur.skip_ws();
            let (index, coeff) = parse_term(&mut cur)?;
            element.accumulate(index, if negative { -coeff } else { coeff });

            cur.skip_ws();
            match cur.peek() {
                None => break,
                Some(b'+') => {
                    cur.pos += 1;
                    negative = false;
                }
                Some(b'-') => {
                    cur.pos += 1;
                    negative = true;
                }
                Some(_) => return Err(cur.unexpected()),
            }
        }
        Ok(element)
    }
}

fn parse_term(cur: &mut Cursor<'_>) -> Result<(BasisIndex, Scalar), ParseElementError> {
    match cur.peek() {
        Some(b'e') => {
            let index = parse_basis(cur)?;
            Ok((index, Scalar::one()))
        }
        Some(d) if d.is_ascii_digit() => {
            let coeff = parse_rational(cur)?;
            cur.skip_ws();
            if cur.eat(b'*') {
                cur.skip_ws();
                let index = parse_basis(cur)?;
                Ok((index, coeff))
            } else {
                // A bare rational is a multiple of e0.
                Ok((BasisIndex::ZERO, coeff))
            }
        }
        _ => Err(cur.unexpected()),
    }
}

fn parse_rational(cur: &mut Cursor<'_>) -> Result<Scalar, ParseElementError> {
    let start = cur.pos;
    let numer_digits = cur.digits().ok_or_else(|| cur.unexpected())?;
    let numer: BigInt = numer_digits.parse().expect("digit run parses as BigInt");
    let probe = cur.pos;
    cur.skip_ws();
    if cur.eat(b'/') {
        cur.skip_ws();
        let denom_digits = cur.digits().ok_or_else(|| cur.unexpected())?;
        let denom: BigInt = denom_digits.parse().expect("digit run parses as BigInt");
        if denom.is_zero() {
            return Err(ParseElementError::ZeroDenominator {
                pos: start,
                token: format!("{numer_digits}/{denom_digits}"),
            });
        }
        Ok(Scalar::new(numer, denom))
    } else {
        cur.pos = probe;
        Ok(Scalar::from_integer(numer))
    }
}

fn parse_basis(cur: &mut Cursor<'_>) -> Result<BasisIndex, ParseElementError> {
    let start = cur.pos;
    if !cur.eat(b'e') {
        return Err(cur.unexpected());
    }
    let digits = cur.digits().ok_or_else(|| cur.unexpected())?;
    let value: u64 = digits.parse().map_err(|_| ParseElementError::IndexOutOfRange {
        pos: start,
        token: format!("e{digits}"),
    })?;
    BasisIndex::new(value).map_err(|_| ParseElementError::IndexOutOfRange {
        pos: start,
        token: format!("e{digits}"),
    })
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (index, coeff)) in self.terms().enumerate() {
            let negative = coeff.is_negative();
            if i == 0 {
                if negative {
                    f.write_str("-")?;
                }
            } else if negative {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            let magnitude = coeff.abs();
            if magnitude.is_one() {
                write!(f, "e{index}")?;
            } else {
                write!(f, "{magnitude}*e{index}")?;
            }
        }
        Ok(())
    }
}
