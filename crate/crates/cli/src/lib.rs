//! Command-line front end for `avleib-core`: load JSON fixtures, run the
//! validators, build induced structures and differential matrices, compute
//! cohomology dimensions, check deformations, and run the claims audit.
//!
//! Every command prints a deterministic plain-text report, or a
//! deterministic JSON document under `--json`, and exits with one of four
//! codes: 0 the check passed (or the computation succeeded), 1 the check
//! ran and failed (witnesses are printed), 2 the input was invalid, and 3
//! a cohomology request was refused because the complex does not square
//! to zero where the answer would need it to.

pub mod audit;
pub mod fixtures;

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use avleib_core::{
    betti, check_cocycle, check_deformation_order, check_equivalence, cohomology_report,
    find_trivializer, format_rat, induced_algebra, matrix_of, parse_rat, rigidity_report,
    self_representation, validate_averaging, validate_averaging_representation,
    validate_leibniz, validate_representation, AveragingOperator, ComplexKind, ComplexSpec,
    Convention, DifferentialOp, Error as CoreError, InducedMode, LeibnizAlgebra, Matrix, Rat,
    Representation, RigidityVerdict, ValidationReport,
};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use fixtures::{load_algebra, load_deformation, load_isomorphism, load_operator,
    load_representation, ParseError};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_COMPLEX_INVALID: i32 = 3;

/// Enumeration ceiling for `search-averaging-diagonal`.
pub const SEARCH_BOUND: u128 = 1_000_000;

#[derive(Parser, Debug)]
#[command(
    name = "avleib",
    version,
    about = "Averaging Leibniz algebra workbench: validators, induced structures, cohomology, deformations"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Which induced structure the operator-side constructions use.
    #[arg(long, global = true, value_enum, default_value_t = ModeArg::Strict)]
    pub mode: ModeArg,
    /// Leibniz identity to validate against; overrides the fixture's own
    /// declaration.
    #[arg(long, global = true, value_enum)]
    pub convention: Option<ConventionArg>,
    /// Emit a machine-readable JSON report instead of plain text.
    #[arg(long, global = true)]
    pub json: bool,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Strict,
    Sum,
}

impl From<ModeArg> for InducedMode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Strict => InducedMode::Strict,
            ModeArg::Sum => InducedMode::Sum,
        }
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum ConventionArg {
    Left,
    Right,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum ComplexArg {
    La,
    Alo,
    Al,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum OpArg {
    Delta,
    Partial,
    Phi,
    Cone,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check the Leibniz identity on an algebra fixture.
    Validate { algebra: PathBuf },
    /// Check the averaging identities of an operator over an algebra.
    ValidateOperator { algebra: PathBuf, operator: PathBuf },
    /// Check the representation axioms (and, with --operator, the
    /// averaging-representation axioms) of a representation fixture.
    ValidateRep {
        algebra: PathBuf,
        representation: PathBuf,
        #[arg(long)]
        operator: Option<PathBuf>,
    },
    /// Print the induced algebra of a validated averaging operator.
    Induce { algebra: PathBuf, operator: PathBuf },
    /// Print the matrix of a differential at a given degree.
    Matrix {
        #[arg(value_enum)]
        op: OpArg,
        algebra: PathBuf,
        operator: Option<PathBuf>,
        #[arg(long)]
        deg: usize,
    },
    /// Cohomology dimensions of one of the three complexes.
    Cohomology {
        algebra: PathBuf,
        operator: PathBuf,
        #[arg(long, value_enum)]
        complex: ComplexArg,
        #[arg(long)]
        deg: Option<usize>,
    },
    /// Check that a deformation's order-1 part is a degree-2 cocycle.
    CheckCocycle {
        algebra: PathBuf,
        operator: PathBuf,
        deformation: PathBuf,
    },
    /// Check the deformation equations order by order.
    CheckDeformation {
        algebra: PathBuf,
        operator: PathBuf,
        deformation: PathBuf,
    },
    /// Check that an isomorphism intertwines two deformations.
    CheckEquivalence {
        algebra: PathBuf,
        operator: PathBuf,
        deformation: PathBuf,
        other: PathBuf,
        isomorphism: PathBuf,
    },
    /// Solve for a pair trivializing a deformation's order-1 part.
    FindTrivializer {
        algebra: PathBuf,
        operator: PathBuf,
        deformation: PathBuf,
    },
    /// Apply the cohomological rigidity criterion to a base pair.
    Rigidity { algebra: PathBuf, operator: PathBuf },
    /// Enumerate diagonal averaging operators with entries from a list.
    SearchAveragingDiagonal {
        algebra: PathBuf,
        /// Comma-separated candidate entries, e.g. "0,1/2,1".
        #[arg(long)]
        values: String,
    },
    /// Run the full claims audit over an algebra and operator.
    Audit {
        algebra: PathBuf,
        operator: PathBuf,
        #[arg(long)]
        representation: Option<PathBuf>,
    },
}

/// What a command hands back to `main`: the two report renderings and the
/// process exit code.
pub struct CmdOut {
    pub text: String,
    pub json: Value,
    pub code: i32,
}

struct CliError {
    message: String,
    code: i32,
}

impl From<ParseError> for CliError {
    fn from(e: ParseError) -> Self {
        CliError {
            message: e.0,
            code: EXIT_INVALID,
        }
    }
}

impl From<CoreError> for CliError {
    fn from(e: CoreError) -> Self {
        let code = match &e {
            CoreError::ComplexInvalid { .. } => EXIT_COMPLEX_INVALID,
            _ => EXIT_INVALID,
        };
        CliError {
            message: e.to_string(),
            code,
        }
    }
}

fn invalid(msg: impl Into<String>) -> CliError {
    CliError {
        message: msg.into(),
        code: EXIT_INVALID,
    }
}

// ---- rendering helpers ---------------------------------------------------

fn fmt_vec(v: &[Rat]) -> String {
    let parts: Vec<String> = v.iter().map(format_rat).collect();
    format!("({})", parts.join(", "))
}

fn fmt_index(index: &[usize]) -> String {
    let parts: Vec<String> = index.iter().map(|i| (i + 1).to_string()).collect();
    format!("({})", parts.join(","))
}

fn witness_json(w: &avleib_core::Witness<Rat>) -> Value {
    json!({
        "tag": w.tag,
        "index": w.index.iter().map(|i| i + 1).collect::<Vec<_>>(),
        "residual": w.residual.iter().map(format_rat).collect::<Vec<_>>(),
    })
}

fn report_json(report: &ValidationReport<Rat>) -> Value {
    json!({
        "verdict": if report.pass() { "pass" } else { "fail" },
        "failures": report.failures,
        "witnesses": report.witnesses.iter().map(witness_json).collect::<Vec<_>>(),
    })
}

fn report_text(report: &ValidationReport<Rat>) -> String {
    if report.pass() {
        return "PASS\n".to_string();
    }
    let mut out = String::from("FAIL\n");
    for w in &report.witnesses {
        let _ = writeln!(
            out,
            "witness {} at {}: residual {}",
            w.tag,
            fmt_index(&w.index),
            fmt_vec(&w.residual)
        );
    }
    let _ = writeln!(out, "{} failure(s)", report.failures);
    out
}

fn report_out(command: &str, report: &ValidationReport<Rat>) -> CmdOut {
    CmdOut {
        text: report_text(report),
        json: json!({ "command": command, "report": report_json(report) }),
        code: if report.pass() { EXIT_PASS } else { EXIT_FAIL },
    }
}

fn matrix_rows_json(m: &Matrix<Rat>) -> Value {
    let entries: Vec<Vec<String>> = (0..m.rows())
        .map(|i| m.row(i).iter().map(format_rat).collect())
        .collect();
    json!({ "rows": m.rows(), "cols": m.cols(), "entries": entries })
}

fn matrix_text(m: &Matrix<Rat>) -> String {
    let mut out = String::new();
    for i in 0..m.rows() {
        let parts: Vec<String> = m.row(i).iter().map(format_rat).collect();
        let _ = writeln!(out, "{}", parts.join(" "));
    }
    out
}

// ---- shared loading steps --------------------------------------------------

fn load_base(
    algebra: &Path,
    operator: &Path,
) -> Result<(LeibnizAlgebra<Rat>, AveragingOperator<Rat>), CliError> {
    let fixture = load_algebra(algebra)?;
    let op = load_operator(operator, fixture.algebra.dim())?;
    Ok((fixture.algebra, op))
}

// ---- the commands -----------------------------------------------------------

fn cmd_validate(
    algebra: &Path,
    flag: Option<ConventionArg>,
) -> Result<CmdOut, CliError> {
    let fixture = load_algebra(algebra)?;
    // Precedence: command-line flag, then the fixture's declaration, then
    // the left identity.
    let convention = match flag {
        Some(ConventionArg::Left) => Convention::Left,
        Some(ConventionArg::Right) => Convention::Right,
        None => fixture.convention.unwrap_or(Convention::Left),
    };
    let report = validate_leibniz(&fixture.algebra, convention);
    let mut out = report_out("validate", &report);
    out.json["convention"] = json!(match convention {
        Convention::Left => "left",
        Convention::Right => "right",
    });
    Ok(out)
}

fn cmd_validate_operator(algebra: &Path, operator: &Path) -> Result<CmdOut, CliError> {
    let (a, t) = load_base(algebra, operator)?;
    let report = validate_averaging(&a, &t)?;
    Ok(report_out("validate-operator", &report))
}

fn cmd_validate_rep(
    algebra: &Path,
    representation: &Path,
    operator: Option<&PathBuf>,
) -> Result<CmdOut, CliError> {
    let fixture = load_algebra(algebra)?;
    let rep = load_representation(representation, fixture.algebra.dim())?;
    let axioms = validate_representation(&fixture.algebra, &rep)?;
    let averaging = match operator {
        None => None,
        Some(path) => {
            let t = load_operator(path, fixture.algebra.dim())?;
            Some(validate_averaging_representation(&fixture.algebra, &rep, &t)?)
        }
    };
    let pass = axioms.pass() && averaging.as_ref().map(|r| r.pass()).unwrap_or(true);
    let mut text = format!("representation axioms: {}", report_text(&axioms));
    let mut body = json!({
        "command": "validate-rep",
        "axioms": report_json(&axioms),
    });
    if let Some(avg) = &averaging {
        let _ = write!(text, "averaging representation axioms: {}", report_text(avg));
        body["averaging"] = report_json(avg);
    }
    Ok(CmdOut {
        text,
        json: body,
        code: if pass { EXIT_PASS } else { EXIT_FAIL },
    })
}

fn cmd_induce(algebra: &Path, operator: &Path, mode: InducedMode) -> Result<CmdOut, CliError> {
    let (a, t) = load_base(algebra, operator)?;
    let report = validate_averaging(&a, &t)?;
    if !report.pass() {
        let mut out = report_out("induce", &report);
        out.text = format!("operator is not averaging\n{}", out.text);
        return Ok(out);
    }
    let induced = induced_algebra(&a, &t, mode)?;
    let file = fixtures::algebra_to_file(&induced, None);
    let rendered = serde_json::to_value(&file).expect("fixture serialization is infallible");
    Ok(CmdOut {
        text: format!(
            "{}\n",
            serde_json::to_string_pretty(&rendered).expect("fixture serialization is infallible")
        ),
        json: json!({ "command": "induce", "algebra": rendered }),
        code: EXIT_PASS,
    })
}

fn cmd_matrix(
    op: OpArg,
    algebra: &Path,
    operator: Option<&PathBuf>,
    deg: usize,
    mode: InducedMode,
) -> Result<CmdOut, CliError> {
    let fixture = load_algebra(algebra)?;
    let a = fixture.algebra;
    let t = match operator {
        Some(path) => Some(load_operator(path, a.dim())?),
        None => None,
    };
    let core_op = match op {
        OpArg::Delta => DifferentialOp::Delta,
        OpArg::Partial => DifferentialOp::PartialAvg,
        OpArg::Phi => DifferentialOp::Phi,
        OpArg::Cone => DifferentialOp::ConeDifferential,
    };
    if core_op != DifferentialOp::Delta && t.is_none() {
        return Err(invalid("this differential needs an operator fixture"));
    }
    let rep = self_representation(&a, t.as_ref());
    let m = matrix_of(core_op, deg, &a, &rep, t.as_ref(), mode)?;
    Ok(CmdOut {
        text: matrix_text(&m),
        json: json!({ "command": "matrix", "degree": deg, "matrix": matrix_rows_json(&m) }),
        code: EXIT_PASS,
    })
}

fn cmd_cohomology(
    algebra: &Path,
    operator: &Path,
    complex: ComplexArg,
    deg: Option<usize>,
    mode: InducedMode,
) -> Result<CmdOut, CliError> {
    let (a, t) = load_base(algebra, operator)?;
    let rep = self_representation(&a, Some(&t));
    let kind = match complex {
        ComplexArg::La => ComplexKind::La,
        ComplexArg::Alo => ComplexKind::Alo,
        ComplexArg::Al => ComplexKind::Al,
    };
    let complex_name = match complex {
        ComplexArg::La => "la",
        ComplexArg::Alo => "alo",
        ComplexArg::Al => "al",
    };
    match deg {
        Some(n) => {
            let spec = ComplexSpec {
                kind,
                mode,
                max_degree: n + 1,
                algebra: &a,
                representation: &rep,
                operator: Some(&t),
            };
            let dim = betti(&spec, n)?;
            Ok(CmdOut {
                text: format!("dim H^{n} = {dim}\n"),
                json: json!({
                    "command": "cohomology",
                    "complex": complex_name,
                    "degree": n,
                    "dim": dim,
                }),
                code: EXIT_PASS,
            })
        }
        None => {
            let spec = ComplexSpec {
                kind,
                mode,
                max_degree: 3,
                algebra: &a,
                representation: &rep,
                operator: Some(&t),
            };
            let report = cohomology_report(&spec)?;
            let mut text = String::new();
            let mut degrees = Vec::new();
            for d in &report.degrees {
                let h = match d.dim_h {
                    Some(dim) => dim.to_string(),
                    None => "unverified".to_string(),
                };
                let _ = writeln!(
                    text,
                    "degree {}: dim C = {}, rank d = {}, dim ker = {}, dim H = {}",
                    d.degree, d.dim_cochain, d.rank_d, d.dim_kernel, h
                );
                degrees.push(json!({
                    "degree": d.degree,
                    "dimCochain": d.dim_cochain,
                    "rankD": d.rank_d,
                    "dimKernel": d.dim_kernel,
                    "dimH": d.dim_h,
                }));
            }
            let mut validity = Vec::new();
            for v in &report.validity {
                let _ = writeln!(
                    text,
                    "d∘d at degree {}: {}",
                    v.degree,
                    if v.is_zero {
                        "zero".to_string()
                    } else {
                        format!("nonzero (rank {})", v.defect_rank)
                    }
                );
                validity.push(json!({
                    "degree": v.degree,
                    "isZero": v.is_zero,
                    "defectRank": v.defect_rank,
                }));
            }
            Ok(CmdOut {
                text,
                json: json!({
                    "command": "cohomology",
                    "complex": complex_name,
                    "degrees": degrees,
                    "validity": validity,
                }),
                code: EXIT_PASS,
            })
        }
    }
}

fn cmd_check_cocycle(
    algebra: &Path,
    operator: &Path,
    deformation: &Path,
    mode: InducedMode,
) -> Result<CmdOut, CliError> {
    let (a, t) = load_base(algebra, operator)?;
    let d = load_deformation(deformation, &a, &t)?;
    if d.order() < 1 {
        return Err(invalid("the deformation has no order-1 coefficients"));
    }
    let report = check_cocycle(&a, &t, d.mu(1), d.theta(1), mode)?;
    Ok(report_out("check-cocycle", &report))
}

fn cmd_check_deformation(
    algebra: &Path,
    operator: &Path,
    deformation: &Path,
    mode: InducedMode,
) -> Result<CmdOut, CliError> {
    let (a, t) = load_base(algebra, operator)?;
    let d = load_deformation(deformation, &a, &t)?;
    let report = check_deformation_order(&d, mode)?;
    Ok(report_out("check-deformation", &report))
}

fn cmd_check_equivalence(
    algebra: &Path,
    operator: &Path,
    deformation: &Path,
    other: &Path,
    isomorphism: &Path,
    mode: InducedMode,
) -> Result<CmdOut, CliError> {
    let (a, t) = load_base(algebra, operator)?;
    let d = load_deformation(deformation, &a, &t)?;
    let d2 = load_deformation(other, &a, &t)?;
    let p = load_isomorphism(isomorphism, a.dim())?;
    let report = check_equivalence(&d, &d2, &p, mode)?;
    Ok(report_out("check-equivalence", &report))
}

fn cmd_find_trivializer(
    algebra: &Path,
    operator: &Path,
    deformation: &Path,
    mode: InducedMode,
) -> Result<CmdOut, CliError> {
    let (a, t) = load_base(algebra, operator)?;
    let d = load_deformation(deformation, &a, &t)?;
    if d.order() < 1 {
        return Err(invalid("the deformation has no order-1 coefficients"));
    }
    match find_trivializer(&a, &t, d.mu(1), d.theta(1), mode)? {
        Some(solution) => {
            let mut text = String::from("psi1:\n");
            text.push_str(&matrix_text(&solution.psi1));
            let _ = writeln!(text, "u: {}", fmt_vec(&solution.u));
            Ok(CmdOut {
                text,
                json: json!({
                    "command": "find-trivializer",
                    "psi1": matrix_rows_json(&solution.psi1),
                    "u": solution.u.iter().map(format_rat).collect::<Vec<_>>(),
                }),
                code: EXIT_PASS,
            })
        }
        None => Ok(CmdOut {
            text: "not a coboundary\n".to_string(),
            json: json!({ "command": "find-trivializer", "result": "not a coboundary" }),
            code: EXIT_FAIL,
        }),
    }
}

fn cmd_rigidity(algebra: &Path, operator: &Path, mode: InducedMode) -> Result<CmdOut, CliError> {
    let (a, t) = load_base(algebra, operator)?;
    match rigidity_report(&a, &t, mode)? {
        RigidityVerdict::Rigid => Ok(CmdOut {
            text: "rigid\n".to_string(),
            json: json!({ "command": "rigidity", "verdict": "rigid" }),
            code: EXIT_PASS,
        }),
        RigidityVerdict::Inconclusive(dim) => Ok(CmdOut {
            text: format!("inconclusive: dim H^2 = {dim}\n"),
            json: json!({ "command": "rigidity", "verdict": "inconclusive", "dimH2": dim }),
            code: EXIT_PASS,
        }),
        RigidityVerdict::ComplexInvalid { degree, defect_rank } => Err(CliError {
            message: format!(
                "complex invalid: d∘d ≠ 0 at degree {degree} (defect rank {defect_rank})"
            ),
            code: EXIT_COMPLEX_INVALID,
        }),
    }
}

fn cmd_search(algebra: &Path, values: &str) -> Result<CmdOut, CliError> {
    let fixture = load_algebra(algebra)?;
    let a = fixture.algebra;
    let mut candidates: Vec<Rat> = Vec::new();
    for piece in values.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let v = parse_rat(piece).map_err(|e| invalid(e.to_string()))?;
        if !candidates.contains(&v) {
            candidates.push(v);
        }
    }
    candidates.sort();
    let g = a.dim();
    let total = (candidates.len() as u128).pow(g as u32);
    if total > SEARCH_BOUND {
        return Err(invalid(format!(
            "{}^{g} = {total} diagonals exceeds the enumeration bound {SEARCH_BOUND}",
            candidates.len()
        )));
    }
    let mut found: Vec<Vec<Rat>> = Vec::new();
    if !candidates.is_empty() {
        let mut odometer = vec![0usize; g];
        loop {
            let entries: Vec<Rat> = odometer.iter().map(|&i| candidates[i].clone()).collect();
            let t = AveragingOperator::diagonal(&entries);
            if validate_averaging(&a, &t)?.pass() {
                found.push(entries);
            }
            // Advance with the last position fastest: the output stays in
            // lexicographic order because candidates are sorted.
            let mut pos = g;
            loop {
                if pos == 0 {
                    break;
                }
                pos -= 1;
                odometer[pos] += 1;
                if odometer[pos] < candidates.len() {
                    break;
                }
                odometer[pos] = 0;
            }
            if odometer.iter().all(|&i| i == 0) {
                break;
            }
        }
    }
    let mut text = String::new();
    for entries in &found {
        let _ = writeln!(text, "diag{}", fmt_vec(entries));
    }
    let _ = writeln!(text, "{} operator(s)", found.len());
    Ok(CmdOut {
        text,
        json: json!({
            "command": "search-averaging-diagonal",
            "count": found.len(),
            "diagonals": found
                .iter()
                .map(|entries| entries.iter().map(format_rat).collect::<Vec<_>>())
                .collect::<Vec<_>>(),
        }),
        code: EXIT_PASS,
    })
}

fn cmd_audit(
    algebra: &Path,
    operator: &Path,
    representation: Option<&PathBuf>,
) -> Result<CmdOut, CliError> {
    let (a, t) = load_base(algebra, operator)?;
    let rep: Option<Representation<Rat>> = match representation {
        None => None,
        Some(path) => Some(load_representation(path, a.dim())?),
    };
    let checks = audit::run_audit(&a, &t, rep.as_ref());
    let failed = checks.iter().any(|c| c.verdict == audit::Verdict::Fail);
    let json_checks: Vec<Value> = checks
        .iter()
        .map(|c| {
            json!({
                "name": c.name,
                "verdict": match c.verdict {
                    audit::Verdict::Pass => "pass",
                    audit::Verdict::Fail => "fail",
                    audit::Verdict::Skipped => "skipped",
                },
                "detail": c.detail,
            })
        })
        .collect();
    Ok(CmdOut {
        text: audit::render_text(&checks),
        json: json!({ "command": "audit", "checks": json_checks }),
        code: if failed { EXIT_FAIL } else { EXIT_PASS },
    })
}

/// Runs one parsed invocation to completion. Never panics on bad input;
/// all failures are encoded in the exit code and report.
pub fn run(cli: Cli) -> CmdOut {
    let mode: InducedMode = cli.mode.into();
    let result = match &cli.command {
        Command::Validate { algebra } => cmd_validate(algebra, cli.convention),
        Command::ValidateOperator { algebra, operator } => {
            cmd_validate_operator(algebra, operator)
        }
        Command::ValidateRep {
            algebra,
            representation,
            operator,
        } => cmd_validate_rep(algebra, representation, operator.as_ref()),
        Command::Induce { algebra, operator } => cmd_induce(algebra, operator, mode),
        Command::Matrix {
            op,
            algebra,
            operator,
            deg,
        } => cmd_matrix(*op, algebra, operator.as_ref(), *deg, mode),
        Command::Cohomology {
            algebra,
            operator,
            complex,
            deg,
        } => cmd_cohomology(algebra, operator, *complex, *deg, mode),
        Command::CheckCocycle {
            algebra,
            operator,
            deformation,
        } => cmd_check_cocycle(algebra, operator, deformation, mode),
        Command::CheckDeformation {
            algebra,
            operator,
            deformation,
        } => cmd_check_deformation(algebra, operator, deformation, mode),
        Command::CheckEquivalence {
            algebra,
            operator,
            deformation,
            other,
            isomorphism,
        } => cmd_check_equivalence(algebra, operator, deformation, other, isomorphism, mode),
        Command::FindTrivializer {
            algebra,
            operator,
            deformation,
        } => cmd_find_trivializer(algebra, operator, deformation, mode),
        Command::Rigidity { algebra, operator } => cmd_rigidity(algebra, operator, mode),
        Command::SearchAveragingDiagonal { algebra, values } => cmd_search(algebra, values),
        Command::Audit {
            algebra,
            operator,
            representation,
        } => cmd_audit(algebra, operator, representation.as_ref()),
    };
    result.unwrap_or_else(|e| CmdOut {
        text: format!("error: {}\n", e.message),
        json: json!({ "error": e.message }),
        code: e.code,
    })
}
