//! `gcg`: exact generalized complex geometry on flat tori from the command
//! line. Thin dispatch onto the library; all output is exact rationals,
//! either as text or as canonical JSON (sorted keys, lowest-terms "p/q"
//! strings), with exit codes 0 (success), 1 (verification or validation
//! failure), 2 (usage or parse error).

mod parse;

use std::fs;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use gcg_core::algebra::{courant_bracket, GVector, SplitFrame, ThreeForm};
use gcg_core::gcs::{
    b_symplectic_from_modulus, classify, complex_from_modulus, from_complex,
    ClassifiedStructure, GCStructure, Modulus, ModulusRole,
};
use gcg_core::matrix::Matrix;
use gcg_core::mirror::{rho_to_tau, tau_to_rho};
use gcg_core::scalar::Rational;
use gcg_core::tduality::{transport, DualityData};
use gcg_core::verify::{run_all, run_suite, SuiteReport, DEFAULT_SEED, SUITE_NAMES};

#[derive(Parser)]
#[command(
    name = "gcg",
    version,
    about = "Generalized complex geometry on flat tori: duality transport and elliptic-curve mirror maps, in exact arithmetic"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum StructureKind {
    Complex,
    Symplectic,
}

#[derive(Subcommand)]
enum Command {
    /// Apply the mirror map to a modulus (τ to ρ or ρ to τ).
    Mirror {
        /// Complex parameter, e.g. "1+1i" or "1/2+3i".
        #[arg(
            long,
            conflicts_with = "rho",
            required_unless_present = "rho",
            allow_hyphen_values = true
        )]
        tau: Option<String>,
        /// Complexified symplectic parameter.
        #[arg(long, allow_hyphen_values = true)]
        rho: Option<String>,
    },
    /// Build the structure of a modulus, transport it to the dual torus,
    /// and classify the result.
    Transport {
        /// Which family the modulus parameterizes.
        #[arg(long, value_enum)]
        structure: StructureKind,
        /// The modulus b + ai.
        #[arg(long, allow_hyphen_values = true)]
        modulus: String,
        /// Fiberwise coefficient of the correspondence form (nonzero).
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        f: String,
    },
    /// Validate a structure matrix and extract its geometric data.
    Classify {
        /// Path to a JSON file, or inline JSON: {"n": 2, "matrix": [["p/q", ...], ...]}.
        #[arg(long)]
        matrix: String,
    },
    /// Courant bracket of two constant sections.
    Bracket {
        /// Comma-separated coefficients of the first section.
        #[arg(long, allow_hyphen_values = true)]
        u: String,
        /// Comma-separated coefficients of the second section.
        #[arg(long, allow_hyphen_values = true)]
        v: String,
        /// Twisting 3-form as JSON (path or inline); zero if omitted.
        #[arg(long = "H")]
        h: Option<String>,
    },
    /// Run the verification suites.
    Verify {
        /// Run every suite (the default when --suite is absent).
        #[arg(long, conflicts_with = "suite")]
        all: bool,
        /// Run a single named suite.
        #[arg(long)]
        suite: Option<String>,
        /// Seed for the randomized sweeps; falls back to GCG_SEED, then 0.
        #[arg(long)]
        seed: Option<u64>,
    },
}

struct Outcome {
    json: Value,
    text: String,
    exit: u8,
}

impl Outcome {
    fn ok(json: Value, text: String) -> Self {
        Self {
            json,
            text,
            exit: 0,
        }
    }
}

struct Failure {
    reason: String,
    exit: u8,
}

impl Failure {
    fn usage(reason: impl Into<String>) -> Self {
        Self {
            reason: reason.into(),
            exit: 2,
        }
    }

    fn validation(reason: impl Into<String>) -> Self {
        Self {
            reason: reason.into(),
            exit: 1,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = cli.format;
    match run(cli.command) {
        Ok(outcome) => {
            match format {
                Format::Json => println!("{}", canonical(&outcome.json)),
                Format::Text => println!("{}", outcome.text),
            }
            ExitCode::from(outcome.exit)
        }
        Err(failure) => {
            match format {
                Format::Json => println!("{}", canonical(&json!({ "error": failure.reason }))),
                Format::Text => eprintln!("error: {}", failure.reason),
            }
            ExitCode::from(failure.exit)
        }
    }
}

/// Compact serialization; object keys are already sorted because
/// serde_json's map is ordered.
fn canonical(value: &Value) -> String {
    serde_json::to_string(value).expect("reports contain no non-string keys")
}

fn run(command: Command) -> Result<Outcome, Failure> {
    match command {
        Command::Mirror { tau, rho } => run_mirror(tau, rho),
        Command::Transport {
            structure,
            modulus,
            f,
        } => run_transport(structure, &modulus, &f),
        Command::Classify { matrix } => run_classify(&matrix),
        Command::Bracket { u, v, h } => run_bracket(&u, &v, h.as_deref()),
        Command::Verify { all, suite, seed } => run_verify(all, suite.as_deref(), seed),
    }
}

fn modulus_value(m: &Modulus) -> Value {
    json!({ "re": m.b().to_string(), "im": m.a().to_string() })
}

fn modulus_value_with_role(m: &Modulus) -> Value {
    json!({
        "re": m.b().to_string(),
        "im": m.a().to_string(),
        "role": m.role().as_str(),
    })
}

fn matrix_value(m: &Matrix<Rational>) -> Value {
    let rows: Vec<Vec<String>> = (0..m.rows())
        .map(|r| m.row(r).iter().map(Rational::to_string).collect())
        .collect();
    json!(rows)
}

fn structure_value(s: &GCStructure) -> Value {
    json!({ "n": s.n(), "matrix": matrix_value(s.matrix()) })
}

fn classification_value(c: &ClassifiedStructure) -> Value {
    json!({
        "kind": c.kind(),
        "J": c.j().map(matrix_value),
        "omega": c.omega().map(|w| matrix_value(w.matrix())),
        "B": c.b_field().map(|b| matrix_value(b.matrix())),
        "modulus": c.extract_modulus().map(|m| modulus_value_with_role(&m)),
    })
}

fn classification_text(c: &ClassifiedStructure) -> String {
    let mut lines = vec![format!("kind: {}", c.kind())];
    if let Some(j) = c.j() {
        lines.push(format!("J = {j}"));
    }
    if let Some(w) = c.omega() {
        lines.push(format!("ω = {}", w.matrix()));
    }
    if let Some(b) = c.b_field() {
        lines.push(format!("B = {}", b.matrix()));
    }
    match c.extract_modulus() {
        Some(m) => lines.push(format!("modulus: {m}")),
        None => lines.push("modulus: not in the parameterized families".to_string()),
    }
    lines.join("\n")
}

fn run_mirror(tau: Option<String>, rho: Option<String>) -> Result<Outcome, Failure> {
    if let Some(s) = tau {
        let m = parse::parse_modulus(&s, ModulusRole::Complex)
            .map_err(|e| Failure::usage(format!("--tau {e}")))?;
        let out = tau_to_rho(&m).map_err(|e| Failure::validation(e.to_string()))?;
        let json = json!({ "rho": modulus_value(&out), "role": out.role().as_str() });
        Ok(Outcome::ok(json, format!("ρ = {out}")))
    } else {
        let s = rho.expect("clap requires one of --tau/--rho");
        let m = parse::parse_modulus(&s, ModulusRole::Symplectic)
            .map_err(|e| Failure::usage(format!("--rho {e}")))?;
        let out = rho_to_tau(&m).map_err(|e| Failure::validation(e.to_string()))?;
        let json = json!({ "tau": modulus_value(&out), "role": out.role().as_str() });
        Ok(Outcome::ok(json, format!("τ = {out}")))
    }
}

fn run_transport(kind: StructureKind, modulus: &str, f: &str) -> Result<Outcome, Failure> {
    let role = match kind {
        StructureKind::Complex => ModulusRole::Complex,
        StructureKind::Symplectic => ModulusRole::Symplectic,
    };
    let m = parse::parse_modulus(modulus, role)
        .map_err(|e| Failure::usage(format!("--modulus {e}")))?;
    let coefficient = f
        .parse::<Rational>()
        .map_err(|e| Failure::usage(format!("--f: {e}")))?;
    let dd = DualityData::with_coefficient(coefficient)
        .map_err(|e| Failure::usage(format!("--f: {e}")))?;

    let source = match role {
        ModulusRole::Complex => {
            let j = complex_from_modulus(&m).map_err(|e| Failure::validation(e.to_string()))?;
            from_complex(&SplitFrame::torus2(), &j)
                .map_err(|e| Failure::validation(e.to_string()))?
        }
        ModulusRole::Symplectic => {
            b_symplectic_from_modulus(&m).map_err(|e| Failure::validation(e.to_string()))?
        }
    };
    let moved = transport(&source, &dd).map_err(|e| Failure::validation(e.to_string()))?;
    let classified = classify(&moved).map_err(|e| Failure::validation(e.to_string()))?;

    let json = json!({
        "source": modulus_value_with_role(&m),
        "f": dd.f_coefficient().to_string(),
        "transported": structure_value(&moved),
        "classification": classification_value(&classified),
    });
    let text = format!(
        "source: {m}\nf = {}\ntransported matrix: {}\n{}",
        dd.f_coefficient(),
        moved.matrix(),
        classification_text(&classified),
    );
    Ok(Outcome::ok(json, text))
}

#[derive(serde::Deserialize)]
struct MatrixFile {
    n: usize,
    matrix: Vec<Vec<String>>,
}

/// Reads an argument that is either inline JSON or a path to a JSON file.
fn read_json_argument(arg: &str) -> Result<String, Failure> {
    if arg.trim_start().starts_with('{') {
        Ok(arg.to_string())
    } else {
        fs::read_to_string(arg)
            .map_err(|e| Failure::usage(format!("cannot read {arg}: {e}")))
    }
}

fn parse_matrix_file(arg: &str) -> Result<(usize, Matrix<Rational>), Failure> {
    let raw = read_json_argument(arg)?;
    let file: MatrixFile = serde_json::from_str(&raw)
        .map_err(|e| Failure::usage(format!("bad matrix JSON: {e}")))?;
    let dim = 2 * file.n;
    if file.matrix.len() != dim || file.matrix.iter().any(|row| row.len() != dim) {
        return Err(Failure::usage(format!(
            "matrix must be {dim}x{dim} for n = {}",
            file.n
        )));
    }
    let mut entries = Vec::with_capacity(dim * dim);
    for row in &file.matrix {
        for cell in row {
            entries.push(
                cell.parse::<Rational>()
                    .map_err(|e| Failure::usage(format!("bad matrix entry: {e}")))?,
            );
        }
    }
    let mut it = entries.into_iter();
    let matrix = Matrix::from_fn(dim, dim, |_, _| it.next().expect("counted above"));
    Ok((file.n, matrix))
}

fn run_classify(arg: &str) -> Result<Outcome, Failure> {
    let (n, matrix) = parse_matrix_file(arg)?;
    let frame = if n == 2 {
        SplitFrame::torus2()
    } else {
        SplitFrame::new(n.saturating_sub(1), 1.min(n))
    };
    let structure =
        GCStructure::new(frame, matrix).map_err(|e| Failure::validation(e.to_string()))?;
    let classified = classify(&structure).map_err(|e| Failure::validation(e.to_string()))?;
    Ok(Outcome::ok(
        classification_value(&classified),
        classification_text(&classified),
    ))
}

#[derive(serde::Deserialize)]
struct ThreeFormFile {
    n: usize,
    entries: Vec<(usize, usize, usize, String)>,
}

fn parse_three_form_file(arg: &str, n: usize) -> Result<ThreeForm, Failure> {
    let raw = read_json_argument(arg)?;
    let file: ThreeFormFile = serde_json::from_str(&raw)
        .map_err(|e| Failure::usage(format!("bad 3-form JSON: {e}")))?;
    if file.n != n {
        return Err(Failure::usage(format!(
            "3-form dimension {} does not match the sections (n = {n})",
            file.n
        )));
    }
    let mut components = Vec::with_capacity(file.entries.len());
    for (i, j, k, value) in &file.entries {
        let v = value
            .parse::<Rational>()
            .map_err(|e| Failure::usage(format!("bad 3-form entry: {e}")))?;
        components.push((*i, *j, *k, v));
    }
    ThreeForm::from_components(n, &components)
        .map_err(|e| Failure::usage(format!("bad 3-form: {e}")))
}

fn run_bracket(u: &str, v: &str, h: Option<&str>) -> Result<Outcome, Failure> {
    let u_coeffs = parse::parse_coeffs(u).map_err(|e| Failure::usage(format!("--u: {e}")))?;
    let v_coeffs = parse::parse_coeffs(v).map_err(|e| Failure::usage(format!("--v: {e}")))?;
    if u_coeffs.len() != v_coeffs.len() {
        return Err(Failure::usage("--u and --v must have the same length"));
    }
    if u_coeffs.len() % 2 != 0 || u_coeffs.is_empty() {
        return Err(Failure::usage(
            "coefficient count must be an even number 2n",
        ));
    }
    let n = u_coeffs.len() / 2;
    let frame = if n == 2 {
        SplitFrame::torus2()
    } else {
        SplitFrame::new(n - 1, 1)
    };
    let uu = GVector::new(frame.clone(), u_coeffs)
        .map_err(|e| Failure::usage(e.to_string()))?;
    let vv = GVector::new(frame, v_coeffs).map_err(|e| Failure::usage(e.to_string()))?;
    let form = match h {
        Some(arg) => parse_three_form_file(arg, n)?,
        None => ThreeForm::zero(n),
    };
    let out =
        courant_bracket(&uu, &vv, &form).map_err(|e| Failure::validation(e.to_string()))?;
    let coeffs: Vec<String> = out.coeffs().iter().map(Rational::to_string).collect();
    Ok(Outcome::ok(
        json!({ "coeffs": coeffs }),
        format!("[u, v]_H = {out}"),
    ))
}

fn resolve_seed(flag: Option<u64>) -> Result<u64, Failure> {
    if let Some(seed) = flag {
        return Ok(seed);
    }
    match std::env::var("GCG_SEED") {
        Ok(raw) => raw
            .trim()
            .parse::<u64>()
            .map_err(|_| Failure::usage(format!("GCG_SEED must be a decimal integer, got {raw:?}"))),
        Err(_) => Ok(DEFAULT_SEED),
    }
}

fn suite_text(report: &SuiteReport) -> String {
    let status = if report.passed { "PASS" } else { "FAIL" };
    let mut line = format!("{status} {} ({} cases)", report.suite, report.cases.len());
    if let Some(ce) = &report.counterexample {
        line.push_str(&format!("\n  counterexample in {}: {}", ce.case, ce.detail));
    }
    line
}

fn run_verify(_all: bool, suite: Option<&str>, seed: Option<u64>) -> Result<Outcome, Failure> {
    let seed = resolve_seed(seed)?;
    let reports = match suite {
        Some(name) => {
            let report = run_suite(name, seed).ok_or_else(|| {
                Failure::usage(format!(
                    "unknown suite {name:?}; available: {}",
                    SUITE_NAMES.join(", ")
                ))
            })?;
            vec![report]
        }
        None => run_all(seed),
    };

    let passed = reports.iter().filter(|r| r.passed).count();
    let all_passed = passed == reports.len();
    let mut text_lines: Vec<String> = reports.iter().map(suite_text).collect();
    text_lines.push(format!(
        "{passed}/{} suites passed (seed {seed})",
        reports.len()
    ));

    let json = if reports.len() == 1 {
        serde_json::to_value(&reports[0]).expect("reports serialize")
    } else {
        serde_json::to_value(&reports).expect("reports serialize")
    };
    Ok(Outcome {
        json,
        text: text_lines.join("\n"),
        exit: if all_passed { 0 } else { 1 },
    })
}
