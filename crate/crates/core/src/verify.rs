//! Self-contained verification suites covering every cross-checkable law in
//! the crate: closed form against oracle, the eight-product axioms, block
//! laws, tree traversal, element arithmetic, norm composition, zero
//! divisors, and table renderings.
//!
//! The closed-form comparisons accept an injected twist function so the
//! harness itself can be tested against a deliberately corrupted twist.

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::atlas::{build_table, AtlasError};
use crate::bench::DEFAULT_SEED;
use crate::element::{find_zero_divisor, mul_doubling, mul_twist, Element, Scalar};
use crate::index::BasisIndex;
use crate::oracle::oracle_basis_mul;
use crate::sign::Sign;
use crate::treewalk::TwistAutomaton;
use crate::twist::{omega, omega2};
use crate::variant::ProductVariant;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyOptions {
    /// Exhaustive index ranges run up to `2^max_exp` (clamped to [1, 10]).
    pub max_exp: u32,
    /// Seed for the randomized suites.
    pub seed: u64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            max_exp: 8,
            seed: DEFAULT_SEED,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteOutcome {
    pub name: &'static str,
    pub cases: u64,
    pub failure: Option<String>,
}

impl SuiteOutcome {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub suites: Vec<SuiteOutcome>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.suites.iter().all(SuiteOutcome::passed)
    }

    pub fn first_failure(&self) -> Option<&SuiteOutcome> {
        self.suites.iter().find(|s| !s.passed())
    }

    /// Fixed-width summary, one line per suite.
    pub fn summary(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("{:<44} {:>10}  result\n", "suite", "cases"));
        for s in &self.suites {
            let result = match &s.failure {
                None => "pass".to_string(),
                Some(msg) => format!("FAIL: {msg}"),
            };
            out.push_str(&format!("{:<44} {:>10}  {}\n", s.name, s.cases, result));
        }
        out
    }
}

/// Runs every suite with the production closed-form twist.
pub fn run(options: &VerifyOptions) -> VerifyReport {
    run_with_twist(options, omega2)
}

/// Runs every suite, comparing the recursive oracle and the tree traversal
/// against `closed_form` instead of the built-in twist. Exists so the
/// harness can demonstrate that it catches a wrong twist.
pub fn run_with_twist<F>(options: &VerifyOptions, closed_form: F) -> VerifyReport
where
    F: Fn(BasisIndex, BasisIndex) -> Sign,
{
    let max_exp = options.max_exp.clamp(1, 10);
    let mut suites = Vec::new();

    suites.push(closed_vs_oracle_exhaustive(max_exp, &closed_form));
    suites.push(closed_vs_oracle_random(options.seed, &closed_form));
    suites.push(product_axioms(max_exp.min(8)));
    suites.push(transpose_duality(max_exp.min(8)));
    suites.push(block_laws(max_exp, &closed_form));
    suites.push(tree_vs_closed_form(max_exp.min(12), &closed_form));
    suites.push(element_products_agree(max_exp.min(8), options.seed));
    suites.push(bilinearity(options.seed));
    suites.push(conjugation_laws(options.seed));
    suites.push(shuffle_split_round_trip(options.seed));
    suites.push(norm_composition(options.seed));
    suites.push(zero_divisor_structure());
    suites.push(table_laws(max_exp.min(8)));

    VerifyReport { suites }
}

fn idx(v: u64) -> BasisIndex {
    BasisIndex::new(v).expect("verify indices stay in range")
}

fn closed_vs_oracle_exhaustive<F>(max_exp: u32, closed_form: &F) -> SuiteOutcome
where
    F: Fn(BasisIndex, BasisIndex) -> Sign,
{
    let bound = 1u64 << max_exp;
    let mut cases = 0;
    for p in 0..bound {
        for q in 0..bound {
            cases += 1;
            let got = closed_form(idx(p), idx(q));
            let want = oracle_basis_mul(ProductVariant::P2, idx(p), idx(q)).sign;
            if got != want {
                return SuiteOutcome {
                    name: "closed form vs oracle (exhaustive)",
                    cases,
                    failure: Some(format!("twist({p}, {q}) = {got} but oracle gives {want}")),
                };
            }
        }
    }
    SuiteOutcome {
        name: "closed form vs oracle (exhaustive)",
        cases,
        failure: None,
    }
}

fn closed_vs_oracle_random<F>(seed: u64, closed_form: &F) -> SuiteOutcome
where
    F: Fn(BasisIndex, BasisIndex) -> Sign,
{
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let bound = 1u64 << 20;
    let cases = 100_000;
    for _ in 0..cases {
        let p = rng.random_range(0..bound);
        let q = rng.random_range(0..bound);
        let got = closed_form(idx(p), idx(q));
        let want = oracle_basis_mul(ProductVariant::P2, idx(p), idx(q)).sign;
        if got != want {
            return SuiteOutcome {
                name: "closed form vs oracle (random, 20-bit)",
                cases,
                failure: Some(format!("twist({p}, {q}) = {got} but oracle gives {want}")),
            };
        }
    }
    SuiteOutcome {
        name: "closed form vs oracle (random, 20-bit)",
        cases,
        failure: None,
    }
}

/// Index law, unit row/column, squares, and antisymmetry for all eight
/// variants.
fn product_axioms(max_exp: u32) -> SuiteOutcome {
    let name = "eight-product axioms";
    let bound = 1u64 << max_exp;
    let mut cases = 0;
    for v in ProductVariant::ALL {
        for p in 0..bound {
            for q in 0..bound {
                cases += 1;
                let got = oracle_basis_mul(v, idx(p), idx(q));
                if got.index != idx(p ^ q) {
                    return fail(name, cases, format!("{v}: e_{p} e_{q} landed on e_{}", got.index));
                }
                if (p == 0 || q == 0) && got.sign != Sign::Plus {
                    return fail(name, cases, format!("{v}: unit law broken at ({p}, {q})"));
                }
                if p == q && p > 0 && got.sign != Sign::Minus {
                    return fail(name, cases, format!("{v}: e_{p} squared is not -1"));
                }
                if p != q && p > 0 && q > 0 {
                    let flipped = oracle_basis_mul(v, idx(q), idx(p));
                    if got.sign != -flipped.sign {
                        return fail(name, cases, format!("{v}: ({p}, {q}) not antisymmetric"));
                    }
                }
            }
        }
    }
    SuiteOutcome {
        name,
        cases,
        failure: None,
    }
}

fn transpose_duality(max_exp: u32) -> SuiteOutcome {
    let name = "transpose duality";
    let bound = 1u64 << max_exp;
    let mut cases = 0;
    for v in [
        ProductVariant::P0,
        ProductVariant::P1,
        ProductVariant::P2,
        ProductVariant::P3,
    ] {
        for p in 0..bound {
            for q in 0..bound {
                cases += 1;
                if omega(v, idx(p), idx(q)) != omega(v.transpose(), idx(q), idx(p)) {
                    return fail(
                        name,
                        cases,
                        format!("{v} vs {} differ at ({p}, {q})", v.transpose()),
                    );
                }
            }
        }
    }
    SuiteOutcome {
        name,
        cases,
        failure: None,
    }
}

/// Same-block pairs give +1; lower-block against higher index gives the
/// parity of the bit at the lower block's exponent.
fn block_laws<F>(max_exp: u32, closed_form: &F) -> SuiteOutcome
where
    F: Fn(BasisIndex, BasisIndex) -> Sign,
{
    let name = "dyadic block laws";
    let bound = 1u64 << max_exp;
    let mut cases = 0;
    for n in 0..max_exp {
        for p in (1u64 << n)..(1u64 << (n + 1)) {
            for q in (p + 1)..(1u64 << (n + 1)) {
                cases += 1;
                if closed_form(idx(p), idx(q)) != Sign::Plus {
                    return fail(name, cases, format!("same-block ({p}, {q}) is not +1"));
                }
            }
            for q in (1u64 << (n + 1))..bound {
                cases += 1;
                let want = Sign::from_parity((q >> n) & 1 == 1);
                if closed_form(idx(p), idx(q)) != want {
                    return fail(name, cases, format!("cross-block ({p}, {q}) is not {want}"));
                }
            }
        }
    }
    SuiteOutcome {
        name,
        cases,
        failure: None,
    }
}

fn tree_vs_closed_form<F>(max_exp: u32, closed_form: &F) -> SuiteOutcome
where
    F: Fn(BasisIndex, BasisIndex) -> Sign,
{
    let name = "tree traversal vs closed form";
    let automaton = TwistAutomaton::standard();
    let bound = 1u64 << max_exp;
    let mut cases = 0;
    for p in 0..bound {
        for q in 0..bound {
            cases += 1;
            let got = automaton.traverse(idx(p), idx(q));
            let want = closed_form(idx(p), idx(q));
            if got != want {
                return fail(name, cases, format!("traverse({p}, {q}) = {got}, want {want}"));
            }
        }
    }
    SuiteOutcome {
        name,
        cases,
        failure: None,
    }
}

fn element_products_agree(max_exp: u32, seed: u64) -> SuiteOutcome {
    let name = "element products: twist vs doubling";
    let bound = 1u64 << max_exp;
    let mut cases = 0;
    for p in 0..bound {
        for q in 0..bound {
            cases += 1;
            let x = Element::basis(idx(p));
            let y = Element::basis(idx(q));
            if mul_twist(&x, &y) != mul_doubling(ProductVariant::P2, &x, &y) {
                return fail(name, cases, format!("disagree on e_{p} e_{q}"));
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x1);
    for case in 0..1000 {
        cases += 1;
        let x = random_sparse(&mut rng, 10, 6);
        let y = random_sparse(&mut rng, 10, 6);
        if mul_twist(&x, &y) != mul_doubling(ProductVariant::P2, &x, &y) {
            return fail(name, cases, format!("disagree on random sparse pair #{case}"));
        }
    }
    SuiteOutcome {
        name,
        cases,
        failure: None,
    }
}

fn bilinearity(seed: u64) -> SuiteOutcome {
    let name = "bilinearity of the twist product";
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x2);
    let mut cases = 0;
    for case in 0..200 {
        cases += 1;
        let x = random_sparse(&mut rng, 8, 5);
        let x2 = random_sparse(&mut rng, 8, 5);
        let y = random_sparse(&mut rng, 8, 5);
        let left = mul_twist(&(&x + &x2), &y);
        let right = &mul_twist(&x, &y) + &mul_twist(&x2, &y);
        if left != right {
            return fail(name, cases, format!("additive in left slot fails on #{case}"));
        }
        let left = mul_twist(&y, &(&x + &x2));
        let right = &mul_twist(&y, &x) + &mul_twist(&y, &x2);
        if left != right {
            return fail(name, cases, format!("additive in right slot fails on #{case}"));
        }
    }
    SuiteOutcome {
        name,
        cases,
        failure: None,
    }
}

fn conjugation_laws(seed: u64) -> SuiteOutcome {
    let name = "conjugation involution and pair law";
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x3);
    let mut cases = 0;
    for case in 0..200 {
        cases += 1;
        let a = random_sparse(&mut rng, 9, 6);
        let b = random_sparse(&mut rng, 9, 6);
        if a.conjugate().conjugate() != a {
            return fail(name, cases, format!("involution fails on #{case}"));
        }
        let pair = Element::shuffle_pair(&a, &b).expect("indices in range");
        let want = Element::shuffle_pair(&a.conjugate(), &(-&b)).expect("indices in range");
        if pair.conjugate() != want {
            return fail(name, cases, format!("pair law fails on #{case}"));
        }
    }
    SuiteOutcome {
        name,
        cases,
        failure: None,
    }
}

fn shuffle_split_round_trip(seed: u64) -> SuiteOutcome {
    let name = "shuffle and split invert each other";
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x4);
    let mut cases = 0;
    for case in 0..200 {
        cases += 1;
        let x = random_sparse(&mut rng, 10, 8);
        let (a, b) = x.split();
        if Element::shuffle_pair(&a, &b).expect("indices in range") != x {
            return fail(name, cases, format!("split then shuffle fails on #{case}"));
        }
        let c = random_sparse(&mut rng, 9, 4);
        let d = random_sparse(&mut rng, 9, 4);
        let (back_c, back_d) = Element::shuffle_pair(&c, &d)
            .expect("indices in range")
            .split();
        if back_c != c || back_d != d {
            return fail(name, cases, format!("shuffle then split fails on #{case}"));
        }
    }
    SuiteOutcome {
        name,
        cases,
        failure: None,
    }
}

/// The Euclidean norm is multiplicative at dimensions 1, 2 and 4. It is
/// not at dimension 8: unlike the classical doubling product, this one
/// already admits zero divisors there (see the zero-divisor suite).
fn norm_composition(seed: u64) -> SuiteOutcome {
    let name = "norm composition at dims 1, 2, 4";
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5);
    let mut cases = 0;
    for exp in 0..=2u32 {
        for case in 0..1000 {
            cases += 1;
            let x = random_dense(&mut rng, exp);
            let y = random_dense(&mut rng, exp);
            let product = mul_twist(&x, &y);
            if product.norm_sq() != x.norm_sq() * y.norm_sq() {
                return fail(
                    name,
                    cases,
                    format!("norm not multiplicative at dim {} on #{case}", 1u64 << exp),
                );
            }
        }
    }
    SuiteOutcome {
        name,
        cases,
        failure: None,
    }
}

/// Dimensions 1 through 4 are division algebras; dimension 8 is where this
/// product first breaks (the classical doubling holds out until 16).
fn zero_divisor_structure() -> SuiteOutcome {
    let name = "zero divisors: none at 4, present at 8, 16";
    let mut cases = 0;
    for dim in [1u64, 2, 4] {
        cases += 1;
        match find_zero_divisor(dim) {
            Ok(None) => {}
            Ok(Some((x, y))) => {
                return fail(name, cases, format!("unexpected zero divisor at dim {dim}: ({x}) ({y})"))
            }
            Err(e) => return fail(name, cases, e.to_string()),
        }
    }
    for dim in [8u64, 16] {
        cases += 1;
        match find_zero_divisor(dim) {
            Ok(Some((x, y))) => {
                let twist = mul_twist(&x, &y);
                let doubled = mul_doubling(ProductVariant::P2, &x, &y);
                if !twist.is_zero() || !doubled.is_zero() {
                    return fail(name, cases, format!("witness ({x}) ({y}) does not annihilate"));
                }
                if x.norm_sq().is_zero() || y.norm_sq().is_zero() {
                    return fail(name, cases, "witness factors must be nonzero".to_string());
                }
            }
            Ok(None) => return fail(name, cases, format!("no zero divisor found at dim {dim}")),
            Err(e) => return fail(name, cases, e.to_string()),
        }
    }
    SuiteOutcome {
        name,
        cases,
        failure: None,
    }
}

/// Border, diagonal, antisymmetry, block and stripe laws on the dense
/// table, plus cell-level agreement with the closed form.
fn table_laws(max_exp: u32) -> SuiteOutcome {
    let name = "sign-table laws";
    let table = match build_table(ProductVariant::P2, max_exp.max(1)) {
        Ok(t) => t,
        Err(AtlasError::ExponentOutOfRange(n)) => {
            return fail(name, 0, format!("cannot build table at exponent {n}"))
        }
    };
    let size = table.size();
    let mut cases = 0;
    for p in 0..size {
        for q in 0..size {
            cases += 1;
            let cell = table.get(p, q);
            if cell != omega2(idx(p as u64), idx(q as u64)) {
                return fail(name, cases, format!("cell ({p}, {q}) disagrees with the twist"));
            }
            if (p == 0 || q == 0) && cell != Sign::Plus {
                return fail(name, cases, format!("border cell ({p}, {q}) is not +1"));
            }
            if p == q && p > 0 && cell != Sign::Minus {
                return fail(name, cases, format!("diagonal cell ({p}, {p}) is not -1"));
            }
            if p != q && p > 0 && q > 0 && cell != -table.get(q, p) {
                return fail(name, cases, format!("cells ({p}, {q}) and ({q}, {p}) agree"));
            }
        }
    }
    // Same-block triangles are +1; cross-block stripes alternate with the
    // bit at the lower block's exponent.
    for n in 0..table.exponent() {
        let lo = 1usize << n;
        let hi = 1usize << (n + 1);
        for p in lo..hi {
            for q in (p + 1)..hi {
                cases += 1;
                if table.get(p, q) != Sign::Plus {
                    return fail(name, cases, format!("block cell ({p}, {q}) is not +1"));
                }
            }
            for q in hi..size {
                cases += 1;
                let want = Sign::from_parity((q >> n) & 1 == 1);
                if table.get(p, q) != want {
                    return fail(name, cases, format!("stripe cell ({p}, {q}) is not {want}"));
                }
            }
        }
    }
    SuiteOutcome {
        name,
        cases,
        failure: None,
    }
}

fn fail(name: &'static str, cases: u64, message: String) -> SuiteOutcome {
    SuiteOutcome {
        name,
        cases,
        failure: Some(message),
    }
}

/// Sparse element with up to `max_terms` terms, indices below `2^exp`,
/// nonzero integer coefficients in [-5, 5].
fn random_sparse(rng: &mut ChaCha8Rng, exp: u32, max_terms: u32) -> Element {
    let bound = 1u64 << exp;
    let terms = rng.random_range(1..=max_terms);
    Element::from_terms((0..terms).map(|_| {
        let index = idx(rng.random_range(0..bound));
        let mut c: i64 = rng.random_range(-5..=5);
        if c == 0 {
            c = 1;
        }
        (index, Scalar::from_integer(c.into()))
    }))
}

/// Element over all indices below `2^exp` with small integer coefficients
/// (zeros allowed, so the support varies).
fn random_dense(rng: &mut ChaCha8Rng, exp: u32) -> Element {
    let bound = 1u64 << exp;
    Element::from_terms((0..bound).map(|index| {
        let c: i64 = rng.random_range(-3..=3);
        (idx(index), Scalar::from_integer(c.into()))
    }))
}
