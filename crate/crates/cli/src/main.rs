//! `bicomlab`: canonical forms, Lie/Jordan queries and verification suites
//! for free bicommutative algebras.
//!
//! Exit status: 0 for true/PASS, 1 for false/FAIL, 2 for usage or input
//! errors.

use std::collections::BTreeMap;
use std::process::ExitCode;

use bicomlab_core::bicom::{enumerate_basis, multilinear};
use bicomlab_core::consequences::{self, element_rank, metabelian_images, var_names, Report, MAX_DEGREE};
use bicomlab_core::operators::{is_jordan, is_lie, jordan_express, lie_express};
use bicomlab_core::parse::{parse_element, parse_identity};
use bicomlab_core::rational::format_rational;
use bicomlab_core::{Error, FiniteAlgebra, Generator, Product};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

const BOUND_VAR: &str = "BICOMLAB_DEGREE_BOUND";
const DEFAULT_BOUND: usize = 6;
/// Largest degree accepted by `dim`.
const DIM_LIMIT: usize = 16;

#[derive(Parser)]
#[command(name = "bicomlab", version, about = "Free bicommutative algebra toolkit")]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the canonical form of an element.
    Normalize { expr: String },
    /// Apply the involution (swap column and row of every word).
    Involute { expr: String },
    /// Is the element Jordan (symmetric)?
    IsJordan { expr: String },
    /// Is the multilinear element Lie?
    IsLie { expr: String },
    /// Write a Jordan element with anti-commutators.
    JordanExpress { expr: String },
    /// Write a multilinear Lie element in the metabelian basis.
    LieExpress { expr: String },
    /// Does `lhs = rhs` hold in every bicommutative algebra under a product?
    CheckIdentity {
        #[arg(long, value_enum)]
        product: ProductArg,
        identity: String,
    },
    /// Check a multilinear identity on every basis assignment of a finite
    /// algebra (a JSON file or the built-in `martin-A`).
    CheckFinite {
        #[arg(long)]
        algebra: String,
        identity: String,
    },
    /// List the basis words of a multidegree such as `x:1,y:2`.
    Basis {
        #[arg(long)]
        multidegree: String,
    },
    /// Dimension of a multilinear slice.
    Dim {
        #[arg(long)]
        degree: usize,
        #[arg(long, value_enum)]
        kind: Kind,
    },
    /// Run a verification suite.
    Verify {
        #[arg(long, value_enum, required_unless_present = "oracle")]
        suite: Option<Suite>,
        /// Shorthand for `--suite oracle`.
        #[arg(long, conflicts_with = "suite")]
        oracle: bool,
        #[arg(long)]
        degree: Option<usize>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ProductArg {
    Plain,
    Com,
    Anti,
}

impl From<ProductArg> for Product {
    fn from(p: ProductArg) -> Self {
        match p {
            ProductArg::Plain => Product::Plain,
            ProductArg::Com => Product::Com,
            ProductArg::Anti => Product::Anti,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Bicom,
    Jordan,
    Lie,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    Theorem1,
    Theorem2,
    Degree4,
    Section7,
    Filtration,
    Oracle,
    Corollary,
}

/// A failure that maps to exit status 2.
struct Usage(String);

impl From<Error> for Usage {
    fn from(e: Error) -> Self {
        Usage(e.to_string())
    }
}

type Outcome = Result<bool, Usage>;

struct Out {
    json: bool,
}

impl Out {
    fn emit(&self, text: impl std::fmt::Display, value: Value) {
        if self.json {
            println!("{value}");
        } else {
            println!("{text}");
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let out = Out { json: cli.json };
    match run(cli.command, &out) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command, out: &Out) -> Outcome {
    match command {
        Command::Normalize { expr } => {
            let e = parse_element(&expr)?;
            out.emit(&e, e.to_json());
            Ok(true)
        }
        Command::Involute { expr } => {
            let e = parse_element(&expr)?.involute();
            out.emit(&e, e.to_json());
            Ok(true)
        }
        Command::IsJordan { expr } => {
            let v = is_jordan(&parse_element(&expr)?);
            out.emit(v, json!({ "jordan": v }));
            Ok(v)
        }
        Command::IsLie { expr } => {
            let v = is_lie(&parse_element(&expr)?)?;
            out.emit(v, json!({ "lie": v }));
            Ok(v)
        }
        Command::JordanExpress { expr } => express(out, jordan_express(&parse_element(&expr)?), Error::NotJordan),
        Command::LieExpress { expr } => express(out, lie_express(&parse_element(&expr)?), Error::NotLie),
        Command::CheckIdentity { product, identity } => {
            let p = parse_identity(&identity)?;
            let residual = p.eval_symbolic(product.into());
            let holds = residual.is_zero();
            let text = if holds { "holds".to_string() } else { format!("fails: residual {residual}") };
            out.emit(text, json!({ "holds": holds, "residual": residual.to_json() }));
            Ok(holds)
        }
        Command::CheckFinite { algebra, identity } => check_finite(out, &algebra, &identity),
        Command::Basis { multidegree } => basis(out, &multidegree),
        Command::Dim { degree, kind } => dim(out, degree, kind),
        Command::Verify { suite, oracle, degree } => {
            let suite = if oracle { Suite::Oracle } else { suite.expect("clap requires a suite") };
            verify(out, suite, degree)
        }
    }
}

fn express(out: &Out, result: bicomlab_core::Result<bicomlab_core::BracketExpr>, negative: Error) -> Outcome {
    match result {
        Ok(e) => {
            out.emit(&e, json!({ "expression": e.to_string() }));
            Ok(true)
        }
        Err(err) if err == negative => {
            out.emit(&err, json!({ "error": err.to_string() }));
            Ok(false)
        }
        Err(err) => Err(err.into()),
    }
}

fn load_algebra(source: &str) -> Result<FiniteAlgebra, Usage> {
    if let Some(a) = FiniteAlgebra::builtin(source) {
        return Ok(a);
    }
    let text = std::fs::read_to_string(source).map_err(|e| Usage(format!("cannot read algebra {source}: {e}")))?;
    Ok(FiniteAlgebra::from_json_str(&text)?)
}

fn check_finite(out: &Out, algebra: &str, identity: &str) -> Outcome {
    let alg = load_algebra(algebra)?;
    let p = parse_identity(identity)?;
    let check = p.holds_in_finite(&alg)?;
    match &check.witness {
        None => out.emit(
            format!("holds ({} assignments)", check.assignments),
            json!({ "holds": true, "assignments": check.assignments }),
        ),
        Some(w) => {
            let names = alg.basis_names();
            let assignment: Vec<String> = w.assignment.iter().map(|(g, i)| format!("{g}={}", names[*i])).collect();
            let value: serde_json::Map<String, Value> = w
                .value
                .iter()
                .enumerate()
                .filter(|(_, x)| !num_is_zero(x))
                .map(|(k, x)| (names[k].clone(), Value::String(format_rational(x))))
                .collect();
            let assignment_json: serde_json::Map<String, Value> = w
                .assignment
                .iter()
                .map(|(g, i)| (g.to_string(), Value::String(names[*i].clone())))
                .collect();
            out.emit(
                format!("fails at {}: {}", assignment.join(", "), alg.format_vector(&w.value)),
                json!({
                    "holds": false,
                    "assignments": check.assignments,
                    "witness": { "assignment": assignment_json, "value": value },
                }),
            );
        }
    }
    Ok(check.holds)
}

fn num_is_zero(x: &bicomlab_core::Rational) -> bool {
    *x == bicomlab_core::rational::int(0)
}

fn parse_multidegree(text: &str) -> Result<BTreeMap<Generator, usize>, Usage> {
    let mut md = BTreeMap::new();
    for part in text.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let (name, count) = part
            .split_once(':')
            .ok_or_else(|| Usage(format!("expected name:count, got {part:?}")))?;
        let g = Generator::new(name.trim())?;
        let c: usize = count
            .trim()
            .parse()
            .map_err(|_| Usage(format!("invalid count in {part:?}")))?;
        if c > 0 {
            *md.entry(g).or_insert(0) += c;
        }
    }
    Ok(md)
}

fn basis(out: &Out, text: &str) -> Outcome {
    let md = parse_multidegree(text)?;
    let words = enumerate_basis(&md)?;
    let lines: Vec<String> = words.iter().map(|w| format!("{w}\t{}", w.monomial())).collect();
    let md_json: serde_json::Map<String, Value> = md.iter().map(|(g, c)| (g.to_string(), json!(c))).collect();
    let list: Vec<Value> = words
        .iter()
        .map(|w| json!({ "word": w.to_string(), "monomial": w.monomial() }))
        .collect();
    out.emit(
        lines.join("\n"),
        json!({ "multidegree": md_json, "count": words.len(), "basis": list }),
    );
    Ok(true)
}

fn dim(out: &Out, degree: usize, kind: Kind) -> Outcome {
    if degree == 0 || degree > DIM_LIMIT {
        return Err(Usage(format!("degree must be in 1..={DIM_LIMIT}")));
    }
    let words = enumerate_basis(&multilinear(&var_names(degree)))?;
    let (name, d) = match kind {
        Kind::Bicom => ("bicom", words.len()),
        // Jordan elements are the symmetric ones: one per involution orbit.
        Kind::Jordan => (
            "jordan",
            words.iter().filter(|w| **w <= w.involute()).count(),
        ),
        Kind::Lie if degree == 1 => ("lie", 1),
        Kind::Lie => ("lie", element_rank(&metabelian_images(degree))),
    };
    out.emit(d, json!({ "degree": degree, "kind": name, "dim": d }));
    Ok(true)
}

fn degree_bound() -> Result<usize, Usage> {
    match std::env::var(BOUND_VAR) {
        Err(_) => Ok(DEFAULT_BOUND),
        Ok(v) => match v.trim().parse::<usize>() {
            Ok(b) if (1..=MAX_DEGREE).contains(&b) => Ok(b),
            _ => Err(Usage(format!("{BOUND_VAR} must be an integer in 1..={MAX_DEGREE}, got {v:?}"))),
        },
    }
}

fn verify(out: &Out, suite: Suite, degree: Option<usize>) -> Outcome {
    let bound = degree_bound()?;
    let check = |lo: usize, hi: usize| -> Result<Vec<usize>, Usage> {
        match degree {
            Some(d) if d < lo || d > hi => Err(Usage(format!(
                "degree {d} outside {lo}..={hi} (bound {bound}, set {BOUND_VAR} to raise it)"
            ))),
            Some(d) => Ok(vec![d]),
            None => Ok((lo..=hi).collect()),
        }
    };
    let reports: Vec<Report> = match suite {
        Suite::Theorem1 => run_each(check(2, bound)?, consequences::verify_theorem1)?,
        Suite::Theorem2 => run_each(check(2, bound)?, consequences::verify_theorem2)?,
        Suite::Corollary => run_each(check(2, bound)?, consequences::verify_corollary)?,
        Suite::Filtration => run_each(check(1, bound.saturating_sub(2))?, consequences::verify_filtration)?,
        Suite::Oracle => {
            let d = degree.unwrap_or(bound);
            run_each(check(1, bound)?.into_iter().filter(|x| *x == d).collect(), consequences::verify_oracle)?
        }
        Suite::Degree4 => vec![consequences::verify_degree4_independence()?],
        Suite::Section7 => vec![consequences::verify_section7()?],
    };
    if reports.is_empty() {
        return Err(Usage(format!("no degrees to verify under bound {bound}")));
    }
    for r in &reports {
        out.emit(r, r.to_json());
    }
    Ok(reports.iter().all(|r| r.pass))
}

fn run_each(degrees: Vec<usize>, f: fn(usize) -> bicomlab_core::Result<Report>) -> Result<Vec<Report>, Usage> {
    degrees.into_iter().map(|d| f(d).map_err(Usage::from)).collect()
}
