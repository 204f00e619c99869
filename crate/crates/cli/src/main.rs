//! Command-line interface to the krawtchouk library. All output is JSON.
//!
//! Exit codes: 0 on success, 2 for invalid input, 3 when an identity fails or
//! a weight distribution is not realizable.

mod commands;
mod job;
mod json;

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use krawtchouk::oracle::CodeSpec;
use krawtchouk::verify::Suite;
use krawtchouk::SchemeSpec;

use commands::{Method, Output};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error(transparent)]
    Core(#[from] krawtchouk::Error),
    #[error("cannot write {path}: {source}")]
    Write { path: String, source: std::io::Error },
}

impl CliError {
    fn exit_code(&self) -> u8 {
        use krawtchouk::Error as E;
        match self {
            CliError::Core(E::Unrealizable(_) | E::CrossCheck(_) | E::DegenerateForm(_)) => 3,
            CliError::Write { .. } => 1,
            _ => 2,
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "krawtchouk", version, about = "MacWilliams identities on Krawtchouk association schemes")]
struct Cli {
    /// Write the JSON result to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct SchemeArg {
    /// Scheme as JSON, e.g. '{"kind":"hamming","q":2,"n":3}', or a path to a
    /// file containing it.
    #[arg(long = "scheme-json")]
    scheme: String,
}

impl SchemeArg {
    fn spec(&self) -> Result<SchemeSpec, CliError> {
        let text = inline_or_file(&self.scheme)?;
        serde_json::from_str(&text).map_err(|e| CliError::Input(format!("scheme: {e}")))
    }
}

#[derive(Debug, Args)]
struct DistArgs {
    #[command(flatten)]
    scheme: SchemeArg,

    /// Weight distribution, as `[1,0,0,1]` or `1,0,0,1`.
    #[arg(long)]
    weights: String,

    /// Number of codewords; defaults to the sum of the weights.
    #[arg(long = "code-size")]
    code_size: Option<String>,
}

impl DistArgs {
    fn parts(&self) -> Result<(SchemeSpec, Vec<num_bigint::BigInt>, Option<num_bigint::BigInt>), CliError> {
        let size = self.code_size.as_deref().map(json::parse_int).transpose()?;
        Ok((self.scheme.spec()?, json::parse_weights(&self.weights)?, size))
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Scheme parameters and valencies.
    #[command(subcommand)]
    Scheme(SchemeCommand),

    /// Dual weight distribution via the MacWilliams transform.
    Transform {
        #[command(flatten)]
        dist: DistArgs,
        #[arg(long, value_enum, default_value_t = Method::Both)]
        method: Method,
    },

    /// Both moment identities; all phi when --phi is omitted.
    Moments {
        #[command(flatten)]
        dist: DistArgs,
        #[arg(long)]
        phi: Option<usize>,
    },

    /// Weight distribution of a maximal code.
    Maximal {
        #[command(flatten)]
        scheme: SchemeArg,
        /// Minimum distance.
        #[arg(long)]
        d: usize,
        #[arg(long = "code-size")]
        code_size: String,
    },

    /// Oracle-backed verification suites.
    Verify {
        #[command(flatten)]
        scheme: SchemeArg,
        #[arg(long, default_value = "all", value_parser = ["axioms", "eigen", "transform", "moments", "all"])]
        suite: String,
        #[arg(long, default_value_t = 20)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },

    /// Brute-force weight distributions of a code given by generators.
    Code {
        /// `{"scheme": {...}, "generators": [...]}` as JSON or a file path.
        #[arg(long = "code-json")]
        code: String,
    },

    /// Run a command described by a JSON job file.
    Run {
        #[arg(long)]
        job: PathBuf,
    },
}

#[derive(Debug, Subcommand)]
enum SchemeCommand {
    Info(SchemeArg),
    Eigenmatrix(SchemeArg),
}

fn inline_or_file(arg: &str) -> Result<String, CliError> {
    if arg.trim_start().starts_with('{') {
        return Ok(arg.to_string());
    }
    fs::read_to_string(arg).map_err(|e| CliError::Input(format!("cannot read {arg}: {e}")))
}

fn execute(command: Command) -> Result<(Output, Option<String>), CliError> {
    let output = match command {
        Command::Scheme(SchemeCommand::Info(s)) => commands::scheme_info(s.spec()?)?,
        Command::Scheme(SchemeCommand::Eigenmatrix(s)) => commands::scheme_eigenmatrix(s.spec()?)?,
        Command::Transform { dist, method } => {
            let (spec, w, size) = dist.parts()?;
            commands::transform(spec, w, size, method)?
        }
        Command::Moments { dist, phi } => {
            let (spec, w, size) = dist.parts()?;
            commands::moments(spec, w, size, phi)?
        }
        Command::Maximal { scheme, d, code_size } => commands::maximal(scheme.spec()?, d, json::parse_int(&code_size)?)?,
        Command::Verify { scheme, suite, trials, seed } => {
            let suite: Suite = suite.parse()?;
            commands::run_verify(scheme.spec()?, suite, trials, seed)?
        }
        Command::Code { code } => {
            let spec: CodeSpec = serde_json::from_str(&inline_or_file(&code)?)
                .map_err(|e| CliError::Input(format!("code: {e}")))?;
            commands::code(&spec)?
        }
        Command::Run { job } => {
            let text = fs::read_to_string(&job)
                .map_err(|e| CliError::Input(format!("cannot read {}: {e}", job.display())))?;
            let (job, out) = job::parse(&text)?;
            return Ok((job::run(job)?, out));
        }
    };
    Ok((output, None))
}

fn emit(value: &serde_json::Value, out: Option<PathBuf>) -> Result<(), CliError> {
    let text = serde_json::to_string_pretty(value).expect("JSON values serialize");
    match out {
        None => {
            let mut stdout = std::io::stdout().lock();
            match writeln!(stdout, "{text}") {
                Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => {
                    Err(CliError::Write { path: "stdout".into(), source: e })
                }
                _ => Ok(()),
            }
        }
        Some(path) => fs::write(&path, text + "\n")
            .map_err(|source| CliError::Write { path: path.display().to_string(), source }),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = execute(cli.command).and_then(|(output, job_out)| {
        emit(&output.value, cli.out.or(job_out.map(PathBuf::from)))?;
        Ok(output.ok)
    });
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(3),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
