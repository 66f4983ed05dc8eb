//! Command-line surface: registry validation, single-invariant queries,
//! and the named property suites. Reports are JSON on stdout; exit code 0
//! means success and full agreement, 1 a computation failure, 2 invalid
//! input.

use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use homquot_core::error::Error;
use homquot_core::fixtures::{self, FIXTURE_NAMES};
use homquot_core::report::InvariantReport;
use homquot_core::suite::{compute_report, suite_report, DEFAULT_N_MAX};

#[derive(Parser)]
#[command(name = "homquot", version, about = "Relative homological invariants over prime fields")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct OutputFlags {
    /// Prime modulus; overrides the registry file's field.
    #[arg(long)]
    p: Option<u64>,
    /// Suppress the timing field so repeated runs are byte-identical.
    #[arg(long)]
    no_timing: bool,
    /// Human-oriented table instead of compact JSON.
    #[arg(long)]
    pretty: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Parse a registry file and check every axiom, reporting violations.
    Validate {
        /// Registry JSON path, or a bundled fixture name.
        file: String,
        #[command(flatten)]
        out: OutputFlags,
    },
    /// One invariant for one ordered pair of registered modules.
    #[command(allow_negative_numbers = true)]
    Compute {
        /// ext-lower, ext-upper, tor, bar-tor, stable-hom or verdier-hom.
        kind: String,
        a: String,
        b: String,
        n: i64,
        /// Registry JSON path or bundled fixture name.
        #[arg(default_value = "kt2")]
        file: String,
        /// Compute every independent route and require agreement.
        #[arg(long)]
        cross_check: bool,
        /// Restrict the approximating subcategory to these module names.
        #[arg(long, value_delimiter = ',')]
        x: Option<Vec<String>>,
        #[command(flatten)]
        out: OutputFlags,
    },
    /// A property suite over all ordered pairs of registered modules.
    Suite {
        /// balance, ext-tor-bar, theorem31, syzygy, hereditary or phi.
        name: String,
        /// Registry JSON path or bundled fixture name; all bundled
        /// fixtures when omitted.
        file: Option<String>,
        #[arg(long, default_value_t = DEFAULT_N_MAX)]
        n_max: i64,
        #[command(flatten)]
        out: OutputFlags,
    },
}

fn emit(mut report: InvariantReport, out: &OutputFlags, elapsed_ms: u64) {
    if !out.no_timing {
        report.timing_ms = Some(elapsed_ms);
    }
    if out.pretty {
        println!("{}\n", report.to_table());
    } else {
        println!("{}", report.to_json());
    }
}

fn input_error(e: &Error) -> bool {
    matches!(
        e,
        Error::Parse(_)
            | Error::Io(_)
            | Error::InvalidRegistry(_)
            | Error::NotPrime(_)
            | Error::UnknownObject(_)
    )
}

fn run(cli: Cli) -> Result<bool, Error> {
    match cli.command {
        Command::Validate { file, out } => {
            let start = Instant::now();
            let label = file.clone();
            let report_base = homquot_core::report::Query {
                command: "validate".into(),
                fixture: Some(label),
                p: out.p.unwrap_or(homquot_core::linalg::DEFAULT_P),
                ..Default::default()
            };
            match fixtures::load_path_or_bundled(&file, out.p) {
                Ok(reg) => {
                    let validation = reg.validate();
                    let mut report = InvariantReport::new(homquot_core::report::Query {
                        p: reg.algebra.field.p(),
                        ..report_base
                    });
                    report.dims.insert("modules".into(), reg.modules.len());
                    report.dims.insert("x-objects".into(), reg.x_subcategory()?.objects.len());
                    report.agreement = validation.is_valid();
                    report.failures = validation.problems;
                    let ok = report.agreement;
                    emit(report, &out, start.elapsed().as_millis() as u64);
                    if ok {
                        Ok(true)
                    } else {
                        Err(Error::InvalidRegistry(vec!["see report".into()]))
                    }
                }
                Err(e) => Err(e),
            }
        }
        Command::Compute { kind, a, b, n, file, cross_check, x, out } => {
            let start = Instant::now();
            let reg = fixtures::load_path_or_bundled(&file, out.p)?;
            let mut report = compute_report(&reg, &kind, &a, &b, n, cross_check, x.as_deref())?;
            report.query.fixture = Some(file);
            let ok = report.agreement;
            emit(report, &out, start.elapsed().as_millis() as u64);
            if ok {
                Ok(true)
            } else {
                Err(Error::Computation("route disagreement, see report".into()))
            }
        }
        Command::Suite { name, file, n_max, out } => {
            let targets: Vec<String> = match file {
                Some(f) => vec![f],
                None => FIXTURE_NAMES.iter().map(|s| s.to_string()).collect(),
            };
            let mut all_ok = true;
            for target in targets {
                let start = Instant::now();
                let reg = fixtures::load_path_or_bundled(&target, out.p)?;
                let report = suite_report(&reg, &target, &name, n_max)?;
                all_ok &= report.agreement;
                emit(report, &out, start.elapsed().as_millis() as u64);
            }
            if all_ok {
                Ok(true)
            } else {
                Err(Error::Computation("suite mismatches, see reports".into()))
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(_) => ExitCode::from(0),
        Err(e) => {
            // failures already itemized inside an emitted report are not
            // repeated on stderr
            let already_reported = match &e {
                Error::InvalidRegistry(v) => v.iter().any(|m| m.contains("see report")),
                Error::Computation(msg) => msg.contains("see report"),
                _ => false,
            };
            if !already_reported {
                eprintln!("error: {e}");
            }
            if input_error(&e) {
                ExitCode::from(2)
            } else {
                ExitCode::from(1)
            }
        }
    }
}
