//! The `qforms` command line.
//!
//! Exit codes: 0 success, 1 property failure, 2 parse error, 3 mode or
//! configuration error.

use std::collections::BTreeMap;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use crate::calculus::CalculusConfig;
use crate::cyclotomic::CycQ;
use crate::differential::{d, d_pow};
use crate::error::Error;
use crate::forms::Form;
use crate::json::{to_json, to_value};
use crate::parser::{parse, render};
use crate::verify::{run_suite, Suite, SuiteParams};

pub const EXIT_OK: i32 = 0;
pub const EXIT_PROPERTY_FAILURE: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_CONFIG: i32 = 3;

/// Environment variable that overrides `--output`.
pub const OUTPUT_ENV: &str = "QFORMS_OUTPUT";

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "qforms", version, about = "Exact differential forms with d^3 = 0 on the line")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub config: CliConfig,
}

#[derive(Debug, Clone, Args)]
pub struct CliConfig {
    /// xi(x) = alpha * x, a scalar in Q(q) such as `q`, `2`, `1+q`, `-1/2*q`.
    #[arg(long, global = true, default_value = "q", allow_hyphen_values = true)]
    pub alpha: String,
    /// Work on the anyonic line: alpha = q and x^3 = 0.
    #[arg(long, global = true)]
    pub anyonic: bool,
    #[arg(long, global = true, value_enum, default_value = "text")]
    pub output: OutputFormat,
    /// Seed for the randomized suites.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, global = true, default_value_t = 200, value_parser = clap::value_parser!(u64).range(1..))]
    pub samples: u64,
    #[arg(long = "max-degree", global = true, default_value_t = 6, value_parser = clap::value_parser!(u32).range(1..))]
    pub max_degree: u32,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the normal form of an expression.
    Reduce { expr: String },
    /// Apply the exterior differential n times.
    Diff {
        #[arg(short = 'n', default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
        n: u32,
        expr: String,
    },
    /// Split an expression into homogeneous components.
    Grade { expr: String },
    /// Report whether d annihilates the expression.
    Closed { expr: String },
    /// Run a verification suite: assoc, leibniz, d3, prop2, swap or all.
    Check { suite: Suite },
}

impl clap::ValueEnum for Suite {
    fn value_variants<'a>() -> &'a [Self] {
        &[Suite::Assoc, Suite::Leibniz, Suite::D3, Suite::Prop2, Suite::Swap, Suite::All]
    }

    fn to_possible_value(&self) -> Option<clap::builder::PossibleValue> {
        Some(clap::builder::PossibleValue::new(self.name()))
    }
}

struct Failure {
    code: i32,
    msg: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = if e.is_parse_error() { EXIT_PARSE } else { EXIT_CONFIG };
        Failure { code, msg: e.to_string() }
    }
}

fn config_error(msg: impl Into<String>) -> Failure {
    Failure { code: EXIT_CONFIG, msg: msg.into() }
}

/// Reads a scalar literal such as `1+q` or `-1/2*q`.
pub fn parse_scalar(src: &str) -> Result<CycQ, Error> {
    let form = parse(src, &CalculusConfig::new(CycQ::one()))?;
    let grade_zero = form.terms().all(|(m, _)| m.grade() == 0);
    match form.coeff_at(0, 0).as_constant() {
        Some(c) if grade_zero => Ok(c),
        _ => Err(Error::Config(format!("'{src}' is not a scalar in Q(q)"))),
    }
}

fn calculus(cfg: &CliConfig) -> Result<CalculusConfig, Failure> {
    let alpha = parse_scalar(&cfg.alpha)
        .map_err(|e| config_error(format!("invalid --alpha: {e}")))?;
    if cfg.anyonic && alpha != CycQ::q() {
        return Err(config_error(format!(
            "--anyonic fixes alpha = q; conflicting --alpha {}",
            cfg.alpha
        )));
    }
    Ok(CalculusConfig::try_new(alpha, cfg.anyonic)?)
}

fn output_format(flag: OutputFormat, env: Option<&str>) -> Result<OutputFormat, Failure> {
    match env {
        None => Ok(flag),
        Some(v) => match v.trim().to_ascii_lowercase().as_str() {
            "text" => Ok(OutputFormat::Text),
            "json" => Ok(OutputFormat::Json),
            other => Err(config_error(format!("{OUTPUT_ENV} must be 'text' or 'json', got '{other}'"))),
        },
    }
}

fn emit_form(u: &Form, fmt: OutputFormat) -> String {
    match fmt {
        OutputFormat::Text => render(u),
        OutputFormat::Json => to_json(u),
    }
}

fn grade_report(u: &Form, fmt: OutputFormat) -> String {
    let parts: BTreeMap<u32, Form> = u.decompose();
    match fmt {
        OutputFormat::Text => {
            let inner: Vec<String> = parts.iter().map(|(g, f)| format!("{g}: \"{}\"", render(f))).collect();
            format!("{{{}}}", inner.join(", "))
        }
        OutputFormat::Json => {
            let obj: Map<String, Value> = parts.iter().map(|(g, f)| (g.to_string(), to_value(f))).collect();
            Value::Object(obj).to_string()
        }
    }
}

fn execute(cli: &Cli, env_output: Option<&str>, out: &mut dyn Write) -> Result<i32, Failure> {
    let fmt = output_format(cli.config.output, env_output)?;
    let cfg = calculus(&cli.config)?;
    let text = match &cli.command {
        Command::Reduce { expr } => emit_form(&parse(expr, &cfg)?, fmt),
        Command::Diff { n, expr } => emit_form(&d_pow(&parse(expr, &cfg)?, *n, &cfg)?, fmt),
        Command::Grade { expr } => grade_report(&parse(expr, &cfg)?, fmt),
        Command::Closed { expr } => {
            let du = d(&parse(expr, &cfg)?, &cfg)?;
            match fmt {
                OutputFormat::Text => du.is_zero().to_string(),
                OutputFormat::Json => json!({"closed": du.is_zero(), "d": to_value(&du)}).to_string(),
            }
        }
        Command::Check { suite } => {
            let params = SuiteParams {
                seed: cli.config.seed,
                samples: cli.config.samples as usize,
                max_degree: cli.config.max_degree,
            };
            let reports = run_suite(*suite, &cfg, &params);
            let passed = reports.iter().filter(|r| r.passed()).count();
            let all = passed == reports.len();
            let text = match fmt {
                OutputFormat::Text => {
                    let mut lines: Vec<String> = reports.iter().map(|r| r.to_string()).collect();
                    lines.push(format!(
                        "{}: {passed}/{} properties passed (suite {}, seed {}, samples {}, max degree {})",
                        if all { "PASS" } else { "FAIL" },
                        reports.len(),
                        suite.name(),
                        params.seed,
                        params.samples,
                        params.max_degree
                    ));
                    lines.join("\n")
                }
                OutputFormat::Json => {
                    let props: Vec<Value> = reports
                        .iter()
                        .map(|r| {
                            json!({
                                "name": r.name,
                                "passed": r.passed(),
                                "checked": r.checked,
                                "failures": r.failures,
                                "note": r.note,
                                "counterexample": r.counterexample,
                            })
                        })
                        .collect();
                    json!({
                        "suite": suite.name(),
                        "alpha": cfg.alpha().to_string(),
                        "mode": cfg.mode().name(),
                        "seed": params.seed,
                        "samples": params.samples,
                        "max_degree": params.max_degree,
                        "passed": all,
                        "properties": props,
                    })
                    .to_string()
                }
            };
            writeln!(out, "{text}").map_err(|e| config_error(e.to_string()))?;
            return Ok(if all { EXIT_OK } else { EXIT_PROPERTY_FAILURE });
        }
    };
    writeln!(out, "{text}").map_err(|e| config_error(e.to_string()))?;
    Ok(EXIT_OK)
}

/// Runs the CLI on `args` (including the program name) and returns the exit code.
pub fn run<I, T>(args: I, env_output: Option<&str>, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{}", e.render());
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{}", e.render());
                    EXIT_PARSE
                }
            };
        }
    };
    match execute(&cli, env_output, out) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "qforms: {}", f.msg);
            f.code
        }
    }
}
