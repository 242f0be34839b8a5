//! Argument handling and output rendering for the `capax` binary.
//!
//! [`run`] is a pure function from an argument vector to an exit code and
//! the text to print, so the whole interface is testable in-process.

use std::ffi::OsString;

use capax::idempotents::bound_report;
use capax::spaces::{
    capacity, dominated_types, homology, homotopy_group, moore_pseudoprojective_form, parse,
    CapacityResult, SpaceExpr,
};
use capax::summands::{count_summands, enumerate_summands, verify_sweep, OracleConfig};
use capax::{fga, AbelianGroup, Cardinal, Error};
use clap::{Parser, Subcommand};
use num_bigint::BigUint;
use serde::Serialize;
use serde_json::{json, Value};

pub const EXIT_OK: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_UNSUPPORTED: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "capax",
    version,
    about = "Exact capacities of Moore and Eilenberg-MacLane spaces"
)]
struct Cli {
    /// Emit a JSON envelope instead of plain text.
    #[arg(long, global = true)]
    json: bool,

    /// Largest group order the brute-force oracle may materialize (1..=128).
    #[arg(long, global = true, env = "CAPAX_ORACLE_CAP", value_name = "N")]
    oracle_cap: Option<u64>,

    /// Treat infinite or unknown answers as failures (exit 2).
    #[arg(long, global = true)]
    require_finite: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Capacity of a space expression.
    Capacity { expr: String },
    /// One representative of every homotopy type the space dominates.
    Dominated { expr: String },
    /// Direct summands of a group literal or JSON relation presentation.
    Summands { group: String },
    /// Reduced integral homology in degrees 1..=d.
    Homology {
        expr: String,
        #[arg(long, default_value_t = 8)]
        max_degree: u32,
    },
    /// Homotopy groups in degrees 1..=d.
    Homotopy {
        expr: String,
        #[arg(long, default_value_t = 8)]
        max_degree: u32,
    },
    /// Rewrite a Moore space as a suspended wedge of pseudo-projective planes.
    PpForm { expr: String },
    /// Idempotent endomorphisms of a group versus the capacity of K(G, 1).
    Idempotents { group: String },
    /// Compare the summand formula with the oracle for every group up to N.
    Verify {
        #[arg(long, default_value_t = 32)]
        max_order: u64,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Capacity { .. } => "capacity",
            Command::Dominated { .. } => "dominated",
            Command::Summands { .. } => "summands",
            Command::Homology { .. } => "homology",
            Command::Homotopy { .. } => "homotopy",
            Command::PpForm { .. } => "pp-form",
            Command::Idempotents { .. } => "idempotents",
            Command::Verify { .. } => "verify",
        }
    }

    fn input(&self) -> String {
        match self {
            Command::Capacity { expr }
            | Command::Dominated { expr }
            | Command::Homology { expr, .. }
            | Command::Homotopy { expr, .. }
            | Command::PpForm { expr } => expr.clone(),
            Command::Summands { group } | Command::Idempotents { group } => group.clone(),
            Command::Verify { max_order } => format!("--max-order {max_order}"),
        }
    }
}

/// The JSON document printed under `--json`. Exactly one of `result` and
/// `error` is present.
#[derive(Debug, Clone, PartialEq, Serialize, serde::Deserialize)]
pub struct OutputEnvelope {
    pub command: String,
    pub input: String,
    pub status: Status,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub result: Option<Value>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<ErrorBody>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Ok,
    Error,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, serde::Deserialize)]
pub struct ErrorBody {
    pub code: String,
    pub message: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub offset: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub exit_code: i32,
    pub output: String,
    /// Plain-text errors and usage messages go to stderr; JSON always to stdout.
    pub stderr: bool,
}

/// A successful command: the JSON payload, its plain-text rendering and
/// the exit code (nonzero only for a failed `verify`).
struct Answer {
    result: Value,
    text: String,
    exit_code: i32,
}

impl Answer {
    fn ok(result: Value, text: String) -> Self {
        Answer {
            result,
            text,
            exit_code: EXIT_OK,
        }
    }
}

enum Failure {
    Core(Error),
    NotFinite(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

impl Failure {
    fn exit_code(&self) -> i32 {
        match self {
            Failure::NotFinite(_) => EXIT_UNSUPPORTED,
            Failure::Core(e) => match e {
                Error::Unsupported(_) | Error::UnsupportedCombination(_) => EXIT_UNSUPPORTED,
                Error::ResourceLimit { .. } | Error::TooMany { .. } => EXIT_RESOURCE,
                _ => EXIT_ERROR,
            },
        }
    }

    fn body(&self) -> ErrorBody {
        match self {
            Failure::NotFinite(message) => ErrorBody {
                code: "not-finite".into(),
                message: message.clone(),
                offset: None,
            },
            Failure::Core(e) => ErrorBody {
                code: e.code().into(),
                message: e.to_string(),
                offset: match e {
                    Error::Parse(p) => Some(p.offset),
                    _ => None,
                },
            },
        }
    }
}

/// Parses `argv` (including the program name) and executes the command.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let argv: Vec<OsString> = argv.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(cli) => cli,
        Err(e) => {
            let exit_code = if e.use_stderr() { EXIT_ERROR } else { EXIT_OK };
            return Outcome {
                exit_code,
                output: e.render().to_string(),
                stderr: e.use_stderr(),
            };
        }
    };
    let command = cli.command.name().to_string();
    let input = cli.command.input();
    let outcome = execute(&cli);
    let (exit_code, envelope, text) = match outcome {
        Ok(a) => (
            a.exit_code,
            OutputEnvelope {
                command,
                input,
                status: Status::Ok,
                result: Some(a.result),
                error: None,
            },
            a.text,
        ),
        Err(f) => {
            let body = f.body();
            let mut text = format!("error [{}]: {}", body.code, body.message);
            if let Some(offset) = body.offset {
                text.push_str(&format!("\n  {input}\n  {}^", " ".repeat(offset)));
            }
            (
                f.exit_code(),
                OutputEnvelope {
                    command,
                    input,
                    status: Status::Error,
                    result: None,
                    error: Some(body),
                },
                text,
            )
        }
    };
    let stderr = !cli.json && envelope.status == Status::Error;
    let output = if cli.json {
        serde_json::to_string(&envelope).expect("envelope serializes")
    } else {
        text
    };
    Outcome {
        exit_code,
        output,
        stderr,
    }
}

fn execute(cli: &Cli) -> Result<Answer, Failure> {
    let config = match cli.oracle_cap {
        Some(cap) => OracleConfig::with_cap(cap)?,
        None => OracleConfig::default(),
    };
    match &cli.command {
        Command::Capacity { expr } => {
            let c = capacity(&parse(expr)?);
            if cli.require_finite && !matches!(c, CapacityResult::Finite(_)) {
                return Err(Failure::NotFinite(format!("capacity of {expr} is {c}")));
            }
            let result = match &c {
                CapacityResult::Unknown { reason, detail } => json!({
                    "capacity": "unknown",
                    "reason": reason.code(),
                    "detail": detail,
                }),
                _ => json!({ "capacity": capacity_json(&c) }),
            };
            let text = match &c {
                CapacityResult::Unknown { reason, detail } => {
                    format!("unknown [{}]: {detail}", reason.code())
                }
                _ => c.to_string(),
            };
            Ok(Answer::ok(result, text))
        }
        Command::Dominated { expr } => {
            let e = parse(expr)?;
            let types: Vec<String> = dominated_types(&e)?
                .iter()
                .map(ToString::to_string)
                .collect();
            let text = types.join("\n");
            Ok(Answer::ok(
                json!({ "count": types.len(), "types": types }),
                text,
            ))
        }
        Command::Summands { group } => {
            let g = group_argument(group)?;
            let count = count_summands(&g);
            if cli.require_finite && !count.is_finite() {
                return Err(Failure::NotFinite(format!(
                    "{g} has infinitely many summands"
                )));
            }
            let classes = match enumerate_summands(&g) {
                Ok(list) => Some(list.iter().map(ToString::to_string).collect::<Vec<_>>()),
                Err(Error::Unsupported(_) | Error::TooMany { .. }) => None,
                Err(e) => return Err(e.into()),
            };
            let mut text = format!("{g}: {count} summands");
            if let Some(list) = &classes {
                for c in list {
                    text.push_str(&format!("\n  {c}"));
                }
            }
            Ok(Answer::ok(
                json!({
                    "group": g.to_string(),
                    "count": cardinal_json(&count),
                    "classes": classes,
                }),
                text,
            ))
        }
        Command::Homology { expr, max_degree } => table(expr, *max_degree, "H", homology),
        Command::Homotopy { expr, max_degree } => table(expr, *max_degree, "pi", homotopy_group),
        Command::PpForm { expr } => {
            let form = moore_pseudoprojective_form(&parse(expr)?)?.to_string();
            Ok(Answer::ok(json!({ "form": form }), form))
        }
        Command::Idempotents { group } => {
            let g = group_argument(group)?;
            let r = bound_report(&g, config)?;
            if cli.require_finite && r.bound_holds().is_none() {
                return Err(Failure::NotFinite(format!(
                    "idempotent count {} or capacity {} is not finite",
                    r.idempotent_count, r.capacity_of_em
                )));
            }
            let witness = r.witness.map(|w| w.to_string());
            let mut text = format!(
                "idempotents of {}: {}\ncapacity of K({}, 1): {}",
                r.group, r.idempotent_count, r.group, r.capacity_of_em
            );
            if let Some(w) = &witness {
                text.push_str(&format!("\nwitness family: {w}"));
            }
            match r.bound_holds() {
                Some(b) => text.push_str(&format!("\nbound holds: {b}")),
                None => text.push_str("\nbound holds: n/a"),
            }
            Ok(Answer::ok(
                json!({
                    "group": r.group.to_string(),
                    "count": cardinal_json(&r.idempotent_count),
                    "em_capacity": capacity_json(&r.capacity_of_em),
                    "bound_holds": r.bound_holds(),
                    "witness": witness,
                }),
                text,
            ))
        }
        Command::Verify { max_order } => {
            let rows = verify_sweep(*max_order, config)?;
            let failed = rows.iter().filter(|r| !r.passed()).count();
            let mut text = String::new();
            for r in &rows {
                text.push_str(&format!(
                    "{} {:>3}  {}  formula={} oracle={}\n",
                    if r.passed() { "PASS" } else { "FAIL" },
                    r.order,
                    r.group,
                    r.formula,
                    r.oracle
                ));
            }
            text.push_str(&format!(
                "checked {} groups of order <= {max_order}: {} passed, {failed} failed",
                rows.len(),
                rows.len() - failed
            ));
            let json_rows: Vec<Value> = rows
                .iter()
                .map(|r| {
                    json!({
                        "group": r.group.to_string(),
                        "order": r.order,
                        "formula": r.formula,
                        "oracle": r.oracle,
                        "pass": r.passed(),
                    })
                })
                .collect();
            Ok(Answer {
                result: json!({
                    "max_order": max_order,
                    "checked": rows.len(),
                    "passed": rows.len() - failed,
                    "failed": failed,
                    "groups": json_rows,
                }),
                text,
                exit_code: if failed == 0 { EXIT_OK } else { EXIT_ERROR },
            })
        }
    }
}

fn table(
    expr: &str,
    max_degree: u32,
    symbol: &str,
    f: impl Fn(&SpaceExpr, u32) -> capax::Result<AbelianGroup>,
) -> Result<Answer, Failure> {
    let e = parse(expr)?;
    let groups = (1..=max_degree)
        .map(|i| f(&e, i))
        .collect::<capax::Result<Vec<_>>>()?;
    let text = groups
        .iter()
        .zip(1..)
        .map(|(g, i)| format!("{symbol}_{i} = {g}"))
        .collect::<Vec<_>>()
        .join("\n");
    let rows: Vec<Value> = groups
        .iter()
        .zip(1..)
        .map(|(g, i): (&AbelianGroup, u32)| json!({ "degree": i, "group": g.to_string() }))
        .collect();
    Ok(Answer::ok(json!({ "groups": rows }), text))
}

/// A group literal, or a relation presentation when the text starts with `{`.
fn group_argument(text: &str) -> capax::Result<AbelianGroup> {
    if text.trim_start().starts_with('{') {
        fga::group_from_presentation(&fga::RelationPresentation::from_json(text)?)
    } else {
        fga::parse_group(text)
    }
}

/// Integers that fit in `u64` become JSON numbers, larger ones strings.
fn big_json(n: &BigUint) -> Value {
    match u64::try_from(n) {
        Ok(v) => json!(v),
        Err(_) => json!(n.to_string()),
    }
}

fn cardinal_json(c: &Cardinal) -> Value {
    match c {
        Cardinal::Finite(n) => big_json(n),
        Cardinal::Infinite => json!("inf"),
    }
}

fn capacity_json(c: &CapacityResult) -> Value {
    match c {
        CapacityResult::Finite(n) => big_json(n),
        CapacityResult::Infinite => json!("inf"),
        CapacityResult::Unknown { reason, .. } => json!({ "unknown": reason.code() }),
    }
}
