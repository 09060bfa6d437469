use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use bizeta::checks::{self, Ctx, Injection, Limits, RunOptions, Suite};
use bizeta::function::{evaluate, EvalOutput, EvalRequest, FunctionId};
use bizeta::parse::parse_complex;
use bizeta::table::{self, TableFormat};
use bizeta::{params_from_env, CliError};
use bizeta_core::ComplexValue;
use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(name = "bizeta", version, about = "Bilateral zeta functions and generalized multiple sine functions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate one function at one point
    Eval(EvalArgs),
    /// Run identity checks
    Check(CheckArgs),
    /// Tabulate a function along a segment in z
    Table(TableArgs),
}

fn complex(s: &str) -> Result<ComplexValue, String> {
    parse_complex(s)
}

#[derive(Args)]
struct FunctionArgs {
    #[arg(long = "fn", value_enum)]
    function: FunctionId,
    #[arg(long)]
    r: Option<u32>,
    #[arg(long)]
    n: Option<u32>,
    #[arg(long, value_parser = complex, allow_hyphen_values = true)]
    s: Option<ComplexValue>,
    /// Print the analytic logarithm of a sine function instead of its value
    #[arg(long)]
    log: bool,
}

impl FunctionArgs {
    fn request(&self) -> Result<EvalRequest, CliError> {
        let mut req = EvalRequest::new(self.function);
        req.r = self.r;
        req.n = self.n;
        req.s = self.s;
        req.log = self.log;
        req.params = params_from_env()?;
        Ok(req)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ValueFormat {
    Json,
    Text,
}

#[derive(Args)]
struct EvalArgs {
    #[command(flatten)]
    f: FunctionArgs,
    #[arg(long, value_parser = complex, allow_hyphen_values = true)]
    z: Option<ComplexValue>,
    #[arg(long, value_enum, default_value = "json")]
    format: ValueFormat,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ReportFormat {
    Jsonl,
    Pretty,
}

#[derive(Args)]
struct CheckArgs {
    #[arg(long, value_enum, default_value = "all")]
    suite: Suite,
    /// List identity ids instead of running them
    #[arg(long)]
    list: bool,
    /// Run only these identities
    #[arg(long = "id")]
    ids: Vec<String>,
    #[arg(long, default_value_t = 42)]
    seed: u64,
    /// Samples per identity (default: per identity)
    #[arg(long)]
    samples: Option<usize>,
    #[arg(long)]
    r_max: Option<u32>,
    #[arg(long)]
    n_max: Option<u32>,
    /// Override every identity's tolerance
    #[arg(long)]
    tol: Option<f64>,
    #[arg(long, value_enum)]
    inject_sign_flip: Option<Injection>,
    #[arg(long, value_enum, default_value = "jsonl")]
    format: ReportFormat,
    /// Write reports to a file instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct TableArgs {
    #[command(flatten)]
    f: FunctionArgs,
    #[arg(long, value_parser = complex, allow_hyphen_values = true)]
    from: ComplexValue,
    #[arg(long, value_parser = complex, allow_hyphen_values = true)]
    to: ComplexValue,
    #[arg(long, default_value_t = 100)]
    count: usize,
    #[arg(long, value_enum, default_value = "csv")]
    format: TableFormat,
    #[arg(long)]
    out: Option<PathBuf>,
}

fn output(path: &Option<PathBuf>) -> Result<Box<dyn Write>, CliError> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(File::create(p)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn run_eval(a: &EvalArgs) -> Result<ExitCode, CliError> {
    let mut req = a.f.request()?;
    req.z = a.z;
    let v = EvalOutput::from(evaluate(&req)?);
    match a.format {
        ValueFormat::Json => println!("{}", serde_json::to_string(&v)?),
        ValueFormat::Text => println!("{:e} {:e}", v.re, v.im),
    }
    Ok(ExitCode::SUCCESS)
}

fn run_check(a: &CheckArgs) -> Result<ExitCode, CliError> {
    let mut selected = checks::identities_in(a.suite);
    if !a.ids.is_empty() {
        for id in &a.ids {
            if !selected.iter().any(|i| &i.id == id) {
                return Err(CliError::Usage(format!("unknown identity {id:?} in suite {}", a.suite.name())));
            }
        }
        selected.retain(|i| a.ids.iter().any(|id| id == i.id));
    }
    let mut out = output(&a.out)?;
    if a.list {
        for i in &selected {
            writeln!(out, "{}\t{}\t{:e}\t{}", i.id, i.suite.name(), i.tol, i.description)?;
        }
        out.flush()?;
        return Ok(ExitCode::SUCCESS);
    }
    if a.samples == Some(0) {
        return Err(CliError::Usage("--samples must be at least 1".into()));
    }
    if let Some(t) = a.tol {
        if !(t >= 0.0 && t.is_finite()) {
            return Err(CliError::Usage("--tol must be a finite non-negative number".into()));
        }
    }
    let opts = RunOptions {
        seed: a.seed,
        samples: a.samples,
        limits: Limits {
            r_max: a.r_max,
            n_max: a.n_max,
        },
        tol: a.tol,
        ctx: Ctx {
            params: params_from_env()?,
            injection: a.inject_sign_flip,
        },
    };
    let mut failed = 0;
    for identity in &selected {
        let report = checks::run_identity(identity, &opts);
        if !report.passed {
            failed += 1;
        }
        match a.format {
            ReportFormat::Jsonl => writeln!(out, "{}", serde_json::to_string(&report)?)?,
            ReportFormat::Pretty => writeln!(out, "{}", report.pretty())?,
        }
        out.flush()?;
    }
    if a.format == ReportFormat::Pretty {
        writeln!(out, "{} identities, {} passed, {} failed", selected.len(), selected.len() - failed, failed)?;
        out.flush()?;
    }
    Ok(if failed == 0 { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn run_table(a: &TableArgs) -> Result<ExitCode, CliError> {
    let req = a.f.request()?;
    if a.count == 0 {
        return Err(CliError::Usage("--count must be at least 1".into()));
    }
    let rows = table::build(&req, &table::axis(a.from, a.to, a.count))?;
    let mut out = output(&a.out)?;
    table::write(&rows, a.format, &mut out)?;
    out.flush()?;
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Eval(a) => run_eval(a),
        Command::Check(a) => run_check(a),
        Command::Table(a) => run_table(a),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("bizeta: {e}");
            ExitCode::from(2)
        }
    }
}
