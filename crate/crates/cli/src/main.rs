//! `cdtwist`: basis products, element arithmetic, twist queries, tree
//! traversals, sign-table rendering, benchmarks, and the verification
//! suite.
//!
//! Exit codes: 0 on success, 1 on a verification or computation failure,
//! 2 on a usage error.

use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};

use cdtwist_core::atlas::{build_table, render_pgm, render_txt, table_checksum};
use cdtwist_core::bench::{bench_basis_products, bench_element_mul, BenchReport, DEFAULT_SEED};
use cdtwist_core::verify::{self, VerifyOptions};
use cdtwist_core::{
    basis_mul, mul_doubling, mul_twist, omega, BasisIndex, Element, ProductVariant,
    TwistAutomaton,
};

#[derive(Parser)]
#[command(name = "cdtwist", version, about = "Cayley-Dickson twist toolbox")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Multiply two basis vectors: prints `+e20`-style output.
    BasisMul {
        #[arg(value_parser = parse_index)]
        p: BasisIndex,
        #[arg(value_parser = parse_index)]
        q: BasisIndex,
        #[arg(long, default_value = "P2", value_parser = parse_variant)]
        variant: ProductVariant,
    },
    /// Multiply two elements written in the term format, e.g. `3*e0 - 1/2*e5`.
    Mul {
        x: String,
        y: String,
        #[arg(long, default_value = "P2", value_parser = parse_variant)]
        variant: ProductVariant,
        /// `twist` (closed form, P2 only) or `doubling` (any variant).
        #[arg(long)]
        strategy: Option<Strategy>,
    },
    /// Print the twist sign of a pair of basis indices.
    Omega {
        #[arg(value_parser = parse_index)]
        p: BasisIndex,
        #[arg(value_parser = parse_index)]
        q: BasisIndex,
        #[arg(long, default_value = "P2", value_parser = parse_variant)]
        variant: ProductVariant,
    },
    /// Traverse the sign tree for `<p> <q>`, or `tree dump` to print the
    /// transition table.
    Tree {
        first: String,
        second: Option<String>,
        /// Also print the visited node labels.
        #[arg(long)]
        trace: bool,
    },
    /// Build the 2^n x 2^n sign table, write it as a bitmap, and print
    /// `variant n digest`.
    Atlas {
        #[arg(value_parser = clap::value_parser!(u32).range(1..=12))]
        n: u32,
        #[arg(long, default_value = "P2", value_parser = parse_variant)]
        variant: ProductVariant,
        /// Output path (defaults to omega_<variant>_<n>.<format>).
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = AtlasFormat::Pgm)]
        format: AtlasFormat,
    },
    /// Time the closed-form fast path against the recursive route.
    Bench {
        #[command(subcommand)]
        target: BenchTarget,
    },
    /// Run the full invariant suite; exit 0 only if every suite passes.
    Verify {
        #[arg(long, default_value_t = 8, value_parser = clap::value_parser!(u32).range(1..=10))]
        max_exp: u32,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Strategy {
    Twist,
    Doubling,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum AtlasFormat {
    Pgm,
    Txt,
}

#[derive(Subcommand)]
enum BenchTarget {
    /// Basis products below 2^max_exp.
    Basis {
        #[arg(long, default_value_t = 10, value_parser = clap::value_parser!(u32).range(1..=20))]
        max_exp: u32,
        #[arg(long, default_value_t = 10_000)]
        samples: usize,
        #[arg(long, default_value_t = 1)]
        workers: usize,
        #[arg(long)]
        json: bool,
    },
    /// Sparse element products at dimension 2^exp.
    Element {
        #[arg(long, default_value_t = 10, value_parser = clap::value_parser!(u32).range(1..=14))]
        exp: u32,
        #[arg(long, default_value_t = 4)]
        terms: u64,
        #[arg(long, default_value_t = 1_000)]
        samples: usize,
        #[arg(long, default_value_t = 1)]
        workers: usize,
        #[arg(long)]
        json: bool,
    },
}

fn parse_index(s: &str) -> Result<BasisIndex, String> {
    let value: u64 = s
        .parse()
        .map_err(|_| format!("`{s}` is not a non-negative integer"))?;
    BasisIndex::new(value).map_err(|e| e.to_string())
}

fn parse_variant(s: &str) -> Result<ProductVariant, String> {
    ProductVariant::from_str(s).map_err(|e| e.to_string())
}

/// Failure carrying the process exit code.
struct Failure {
    code: u8,
    message: Option<String>,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: 2,
            message: Some(message.into()),
        }
    }

    fn computation(message: impl Into<String>) -> Self {
        Failure {
            code: 1,
            message: Some(message.into()),
        }
    }

    fn silent(code: u8) -> Self {
        Failure {
            code,
            message: None,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            if let Some(message) = failure.message {
                eprintln!("error: {message}");
            }
            ExitCode::from(failure.code)
        }
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::BasisMul { p, q, variant } => {
            println!("{}", basis_mul(variant, p, q));
            Ok(())
        }
        Command::Mul {
            x,
            y,
            variant,
            strategy,
        } => cmd_mul(&x, &y, variant, strategy),
        Command::Omega { p, q, variant } => {
            println!("{}", omega(variant, p, q));
            Ok(())
        }
        Command::Tree {
            first,
            second,
            trace,
        } => cmd_tree(&first, second.as_deref(), trace),
        Command::Atlas {
            n,
            variant,
            out,
            format,
        } => cmd_atlas(n, variant, out, format),
        Command::Bench { target } => cmd_bench(target),
        Command::Verify { max_exp } => cmd_verify(max_exp),
    }
}

fn parse_element(which: &str, text: &str) -> Result<Element, Failure> {
    text.parse()
        .map_err(|e| Failure::usage(format!("cannot parse {which} operand: {e}")))
}

fn cmd_mul(
    x: &str,
    y: &str,
    variant: ProductVariant,
    strategy: Option<Strategy>,
) -> Result<(), Failure> {
    let strategy = strategy.unwrap_or(if variant == ProductVariant::P2 {
        Strategy::Twist
    } else {
        Strategy::Doubling
    });
    if strategy == Strategy::Twist && variant != ProductVariant::P2 {
        return Err(Failure::usage(format!(
            "strategy `twist` only evaluates the P2 product, not {variant}"
        )));
    }
    let x = parse_element("left", x)?;
    let y = parse_element("right", y)?;
    let product = match strategy {
        Strategy::Twist => mul_twist(&x, &y),
        Strategy::Doubling => mul_doubling(variant, &x, &y),
    };
    println!("{product}");
    Ok(())
}

fn cmd_tree(first: &str, second: Option<&str>, trace: bool) -> Result<(), Failure> {
    if first == "dump" {
        if second.is_some() {
            return Err(Failure::usage("`tree dump` takes no further arguments"));
        }
        print!("{}", TwistAutomaton::standard().dump());
        return Ok(());
    }
    let q = second.ok_or_else(|| Failure::usage("`tree` needs two indices (or `dump`)"))?;
    let p = parse_index(first).map_err(Failure::usage)?;
    let q = parse_index(q).map_err(Failure::usage)?;
    if trace {
        let (sign, nodes) = TwistAutomaton::standard().traverse_trace(p, q);
        println!("{sign}");
        let labels: Vec<&str> = nodes.iter().map(|n| n.label()).collect();
        println!("{}", labels.join(","));
    } else {
        println!("{}", TwistAutomaton::standard().traverse(p, q));
    }
    Ok(())
}

fn cmd_atlas(
    n: u32,
    variant: ProductVariant,
    out: Option<PathBuf>,
    format: AtlasFormat,
) -> Result<(), Failure> {
    let table = build_table(variant, n).map_err(|e| Failure::usage(e.to_string()))?;
    let extension = match format {
        AtlasFormat::Pgm => "pgm",
        AtlasFormat::Txt => "txt",
    };
    let path = out.unwrap_or_else(|| {
        PathBuf::from(format!(
            "omega_{}_{n}.{extension}",
            variant.label().to_lowercase()
        ))
    });
    let bytes = match format {
        AtlasFormat::Pgm => render_pgm(&table),
        AtlasFormat::Txt => render_txt(&table).into_bytes(),
    };
    std::fs::write(&path, bytes)
        .map_err(|e| Failure::computation(format!("cannot write {}: {e}", path.display())))?;
    eprintln!("wrote {}", path.display());
    // The digest is over the canonical graymap rendering, independent of
    // the format written, so redirected output accumulates a manifest.
    println!("{} {} {}", variant, n, table_checksum(&table));
    Ok(())
}

fn bench_seed() -> Result<u64, Failure> {
    match std::env::var("CDTWIST_SEED") {
        Ok(text) => text
            .parse()
            .map_err(|_| Failure::usage(format!("CDTWIST_SEED `{text}` is not a u64"))),
        Err(std::env::VarError::NotPresent) => Ok(DEFAULT_SEED),
        Err(e) => Err(Failure::usage(format!("cannot read CDTWIST_SEED: {e}"))),
    }
}

fn cmd_bench(target: BenchTarget) -> Result<(), Failure> {
    let seed = bench_seed()?;
    let (report, json): (BenchReport, bool) = match target {
        BenchTarget::Basis {
            max_exp,
            samples,
            workers,
            json,
        } => (
            bench_basis_products(max_exp, samples, seed, workers)
                .map_err(|e| Failure::computation(e.to_string()))?,
            json,
        ),
        BenchTarget::Element {
            exp,
            terms,
            samples,
            workers,
            json,
        } => (
            bench_element_mul(exp, terms, samples, seed, workers)
                .map_err(|e| Failure::computation(e.to_string()))?,
            json,
        ),
    };
    if json {
        println!("{}", report.to_json());
    } else {
        print!("{}", report.to_text());
    }
    Ok(())
}

fn cmd_verify(max_exp: u32) -> Result<(), Failure> {
    let report = verify::run(&VerifyOptions {
        max_exp,
        seed: DEFAULT_SEED,
    });
    print!("{}", report.summary());
    if report.passed() {
        Ok(())
    } else {
        Err(Failure::silent(1))
    }
}
