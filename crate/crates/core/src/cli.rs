//! The `hodgeledger` command line.
//!
//! Exit codes: 0 success, 1 a verification failed, 2 usage, parse,
//! evaluation or fixture error. Results go to `stdout`, diagnostics to
//! `stderr`.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::expr::{describe, evaluate, parse, render, Format};
use crate::ledger::{solve_unknowns, Ledger, LedgerError};
use crate::og6::Og6Pipeline;
use crate::report::{Check, VerificationReport};
use crate::spaces::{fixture, FixtureName};

/// Overrides the built-in ledger fixture.
pub const FIXTURES_ENV: &str = "HODGELEDGER_FIXTURES";

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_ERROR: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "hodgeledger",
    version,
    about = "Exact Hodge-class calculus and the OG6 decomposition ledger"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate an expression such as "sym(3, U) + angle(1, W * W)".
    Eval {
        expr: String,
        #[arg(long, value_enum, default_value_t = OutFormat::Json)]
        out: OutFormat,
    },
    /// Run a verification suite.
    Verify {
        #[command(subcommand)]
        target: VerifyTarget,
    },
    /// Inspect the stalk ledger.
    Ledger {
        #[command(subcommand)]
        action: LedgerAction,
    },
    /// Named fixtures.
    Fixtures {
        #[command(subcommand)]
        action: FixturesAction,
    },
}

#[derive(Subcommand, Debug)]
enum VerifyTarget {
    /// Cross-check every assembly path of H*(M~).
    Og6 {
        /// Coefficient of U<2> in H*(N).
        #[arg(long, default_value_t = crate::og6::DEFAULT_HN_COEFF)]
        hn_coeff: u32,
        #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
        out: ReportFormat,
        /// Ledger fixture to use instead of the built-in one.
        #[arg(long)]
        fixtures: Option<PathBuf>,
    },
}

#[derive(Subcommand, Debug)]
enum LedgerAction {
    /// Verify the component table and solve for (r, r24).
    Check {
        #[arg(long)]
        fixtures: Option<PathBuf>,
    },
}

#[derive(Subcommand, Debug)]
enum FixturesAction {
    /// List the named classes with their Betti numbers.
    List,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum OutFormat {
    Json,
    Diamond,
    Betti,
    Epoly,
    Tex,
}

impl From<OutFormat> for Format {
    fn from(f: OutFormat) -> Format {
        match f {
            OutFormat::Json => Format::Json,
            OutFormat::Diamond => Format::Diamond,
            OutFormat::Betti => Format::Betti,
            OutFormat::Epoly => Format::Epoly,
            OutFormat::Tex => Format::Tex,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ReportFormat {
    Json,
    Text,
}

/// Runs the command line with explicit streams and returns the exit code.
/// `env_fixtures` stands in for the value of [`FIXTURES_ENV`].
pub fn run_with_env<I, T>(args: I, env_fixtures: Option<OsString>, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                EXIT_ERROR
            } else {
                let _ = write!(out, "{text}");
                EXIT_OK
            };
        }
    };
    let result = match cli.command {
        Command::Eval { expr, out: format } => cmd_eval(&expr, format.into(), out, err),
        Command::Verify {
            target:
                VerifyTarget::Og6 {
                    hn_coeff,
                    out: format,
                    fixtures,
                },
        } => cmd_verify(hn_coeff, format, fixtures.or(env_fixtures.map(PathBuf::from)), out, err),
        Command::Ledger {
            action: LedgerAction::Check { fixtures },
        } => cmd_ledger(fixtures.or(env_fixtures.map(PathBuf::from)), out, err),
        Command::Fixtures {
            action: FixturesAction::List,
        } => cmd_fixtures(out),
    };
    result.unwrap_or_else(|e| {
        // a closed pipe (`| head`) is not worth a message
        if e.kind() != std::io::ErrorKind::BrokenPipe {
            let _ = writeln!(err, "error: writing output: {e}");
        }
        EXIT_ERROR
    })
}

/// [`run_with_env`] reading [`FIXTURES_ENV`] from the process environment.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    run_with_env(args, std::env::var_os(FIXTURES_ENV), out, err)
}

fn cmd_eval(text: &str, format: Format, out: &mut dyn Write, err: &mut dyn Write) -> std::io::Result<i32> {
    let ast = match parse(text) {
        Ok(ast) => ast,
        Err(e) => {
            writeln!(err, "error: {e}")?;
            writeln!(err, "  {text}")?;
            writeln!(err, "  {}^", " ".repeat(caret_column(text, e.offset())))?;
            return Ok(EXIT_ERROR);
        }
    };
    match evaluate(&ast) {
        Ok(class) => {
            writeln!(out, "{}", render(&class, format))?;
            Ok(EXIT_OK)
        }
        Err(e) => {
            writeln!(err, "error: {e}")?;
            Ok(EXIT_ERROR)
        }
    }
}

/// Display column of a 1-based byte offset.
fn caret_column(text: &str, offset: usize) -> usize {
    let end = offset.saturating_sub(1).min(text.len());
    text.char_indices().take_while(|(i, _)| *i < end).count()
}

fn load_ledger(path: Option<PathBuf>, err: &mut dyn Write) -> std::io::Result<Option<Ledger>> {
    let Some(path) = path else {
        return Ok(Some(Ledger::builtin()));
    };
    match Ledger::load(&path) {
        Ok(l) => Ok(Some(l)),
        Err(e) => {
            writeln!(err, "error: {e}")?;
            Ok(None)
        }
    }
}

fn cmd_verify(
    hn_coeff: u32,
    format: ReportFormat,
    fixtures: Option<PathBuf>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> std::io::Result<i32> {
    let Some(ledger) = load_ledger(fixtures, err)? else {
        return Ok(EXIT_ERROR);
    };
    let report = Og6Pipeline::new().with_hn_coeff(hn_coeff).with_ledger(ledger).verify();
    match format {
        ReportFormat::Json => writeln!(out, "{}", report.to_json())?,
        ReportFormat::Text => write_report_text(&report, out)?,
    }
    Ok(if report.all_passed() { EXIT_OK } else { EXIT_FAIL })
}

fn value_text(v: &serde_json::Value) -> String {
    match crate::HodgeClass::from_json_value(v) {
        Ok(class) => describe(&class),
        Err(_) => match v {
            serde_json::Value::String(s) => s.clone(),
            other => other.to_string(),
        },
    }
}

fn write_check_text(c: &Check, out: &mut dyn Write) -> std::io::Result<()> {
    let is_class = crate::HodgeClass::from_json_value(&c.lhs).is_ok();
    match (c.passed(), is_class) {
        (true, true) => writeln!(out, "PASS {}", c.id),
        (true, false) => {
            let (lhs, rhs) = (value_text(&c.lhs), value_text(&c.rhs));
            if lhs == rhs {
                writeln!(out, "PASS {}: {rhs}", c.id)
            } else {
                writeln!(out, "PASS {}: {lhs} = {rhs}", c.id)
            }
        }
        (false, _) if !c.residual.is_empty() => writeln!(out, "FAIL {}: residual {}", c.id, describe(&c.residual)),
        (false, true) => writeln!(out, "FAIL {}: {}", c.id, value_text(&c.rhs)),
        (false, false) => writeln!(
            out,
            "FAIL {}: expected {}, got {}",
            c.id,
            value_text(&c.lhs),
            value_text(&c.rhs)
        ),
    }
}

fn write_report_text(report: &VerificationReport, out: &mut dyn Write) -> std::io::Result<()> {
    for c in &report.checks {
        write_check_text(c, out)?;
    }
    writeln!(out, "{}/{} checks passed", report.passed_count(), report.checks.len())
}

fn cmd_ledger(fixtures: Option<PathBuf>, out: &mut dyn Write, err: &mut dyn Write) -> std::io::Result<i32> {
    let Some(ledger) = load_ledger(fixtures, err)? else {
        return Ok(EXIT_ERROR);
    };
    let table = ledger.verify_component_table();
    for c in &table.cells {
        let status = if c.pass { "PASS" } else { "FAIL" };
        write!(out, "{status} {}: {} = {}", c.id(), c.computed, c.table)?;
        if let Some(m) = c.monodromy() {
            write!(out, "  [{m}]")?;
        }
        writeln!(out)?;
    }
    writeln!(
        out,
        "{}/{} cells pass under r + r24 = 1",
        table.passed_count(),
        table.cells.len()
    )?;
    match solve_unknowns(&ledger) {
        Ok(sols) => {
            let list: Vec<String> = sols.iter().map(|(r, r24)| format!("(r, r24) = ({r}, {r24})")).collect();
            writeln!(out, "solutions: {}", list.join(", "))?;
            Ok(if table.all_passed() { EXIT_OK } else { EXIT_FAIL })
        }
        Err(e @ (LedgerError::Inconsistent { .. } | LedgerError::Underdetermined(_))) => {
            writeln!(err, "error: {e}")?;
            Ok(EXIT_FAIL)
        }
        Err(e) => {
            writeln!(err, "error: {e}")?;
            Ok(EXIT_ERROR)
        }
    }
}

fn cmd_fixtures(out: &mut dyn Write) -> std::io::Result<i32> {
    for name in FixtureName::ALL {
        let class = fixture(name);
        writeln!(
            out,
            "{:<9} {:<48} betti {}",
            name.as_str(),
            name.description(),
            render(&class, Format::Betti)
        )?;
    }
    Ok(EXIT_OK)
}
