//! Command-line front end: evaluate library functions, run the identity
//! suite and list its cases.

mod config;
mod error;
mod eval;
mod output;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{CommandFactory, FromArgMatches, Parser, Subcommand, ValueEnum};

use foxwright::series::TruncationPolicy;
use foxwright_harness::{run_cases, select, SuiteConfig, Summary};

use config::{Format, RunConfig};
use error::CliError;
use eval::{Function, Params};

#[derive(Debug, Parser)]
#[command(name = "foxwright", version, about = "Fox-Wright, Mathieu-type and Hurwitz-Lerch functions and identity checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Relative tolerance: series truncation for eval, replaces every case's relative tolerance for verify
    #[arg(long, global = true, value_name = "X")]
    rel_tol: Option<f64>,

    /// Absolute tolerance: replaces every case's absolute tolerance for verify
    #[arg(long, global = true, value_name = "X")]
    abs_tol: Option<f64>,

    /// Hard cap on series terms
    #[arg(long, global = true, value_name = "N")]
    max_terms: Option<usize>,

    /// Output format [default: text]
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,

    /// Glob over case ids for verify [default: *]
    #[arg(long, global = true, value_name = "GLOB")]
    filter: Option<String>,

    /// Write the output to a file instead of stdout
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,

    /// JSON file with any of rel_tol, abs_tol, max_terms, format, filter, out; flags win
    #[arg(long, global = true, value_name = "PATH")]
    config: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate one function at name=value parameters
    Eval {
        #[arg(value_enum)]
        function: Function,
        /// Parameters as name=value
        #[arg(value_name = "NAME=VALUE")]
        params: Vec<String>,
    },
    /// Run the identity suite and report every case and grid point
    Verify,
    /// List registered identity cases with anchors and grid sizes
    List,
}

fn functions_help() -> String {
    let mut s = String::from("Functions for eval:\n");
    for f in Function::value_variants() {
        let v = f.to_possible_value().expect("no skipped variants");
        s.push_str(&format!("  {:<15} {}\n", v.get_name(), v.get_help().map(|h| h.to_string()).unwrap_or_default()));
    }
    s.push_str("\nExit codes: 0 ok, 1 not converged or failed identities, 2 usage, 3 domain, 4 i/o");
    s
}

fn parse() -> Cli {
    let matches = Cli::command().after_help(functions_help()).get_matches();
    Cli::from_arg_matches(&matches).unwrap_or_else(|e| e.exit())
}

fn run_config(cli: &Cli) -> Result<RunConfig, CliError> {
    let flags = RunConfig {
        rel_tol: cli.rel_tol,
        abs_tol: cli.abs_tol,
        max_terms: cli.max_terms,
        output_format: cli.format,
        suite_filter: cli.filter.clone(),
        report_path: cli.out.clone(),
    };
    let file = match &cli.config {
        Some(path) => RunConfig::load(path)?,
        None => RunConfig::default(),
    };
    file.merged_under(flags).validate()
}

/// Runs `write` against the report file or stdout.
fn emit(config: &RunConfig, write: impl FnOnce(&mut dyn Write) -> Result<(), CliError>) -> Result<(), CliError> {
    match &config.report_path {
        Some(path) => {
            let file = std::fs::File::create(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
            let mut w = std::io::BufWriter::new(file);
            write(&mut w)?;
            w.flush().map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
        }
        None => {
            let stdout = std::io::stdout();
            let mut lock = stdout.lock();
            write(&mut lock)
        }
    }
}

fn policy(config: &RunConfig) -> TruncationPolicy {
    let mut p = TruncationPolicy::default();
    if let Some(r) = config.rel_tol {
        p = p.with_rel_tol(r);
    }
    if let Some(n) = config.max_terms {
        p = p.with_max_terms(n);
    }
    p
}

fn cmd_eval(function: Function, args: &[String], config: &RunConfig) -> Result<(), CliError> {
    let params = Params::parse(function, args)?;
    let v = eval::evaluate(function, &params, &policy(config))?;
    emit(config, |w| output::write_evaluation(w, &function.name(), &v, config.format()))?;
    if !v.converged {
        return Err(CliError::NotConverged(format!(
            "{} did not converge within {} terms (tail estimate {:e})",
            function.name(),
            v.terms_used,
            v.tail_estimate
        )));
    }
    Ok(())
}

fn cmd_verify(config: &RunConfig) -> Result<(), CliError> {
    let filter = config.suite_filter.as_deref().unwrap_or("*");
    let cases = select(filter).map_err(|e| CliError::Usage(format!("--filter {filter:?}: {e}")))?;
    if cases.is_empty() {
        eprintln!("warning: no case matches {filter:?}");
    }
    let suite = SuiteConfig {
        policy: TruncationPolicy::default().with_max_terms(config.max_terms.unwrap_or(TruncationPolicy::default().max_terms)),
        abs_tol: config.abs_tol,
        rel_tol: config.rel_tol,
    };
    let reports = run_cases(&cases, &suite);
    emit(config, |w| output::write_reports(w, &reports, config.format()))?;
    let summary = Summary::of(&reports);
    // keep machine output on stdout parseable
    if config.report_path.is_none() && config.format() != Format::Text {
        eprintln!("{summary}");
    } else {
        println!("{summary}");
    }
    if summary.failed > 0 {
        return Err(CliError::NotConverged(format!("{} identity checks failed", summary.failed)));
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = parse();
    let result = run_config(&cli).and_then(|config| match &cli.command {
        Command::Eval { function, params } => cmd_eval(*function, params, &config),
        Command::Verify => cmd_verify(&config),
        Command::List => emit(&config, |w| output::write_list(w, &foxwright_harness::registry(), config.format())),
    });
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
