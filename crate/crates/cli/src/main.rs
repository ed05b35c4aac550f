use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use num_rational::BigRational;

use superlink::arith::{rf_eval, RatFunc, RatFuncRecord};
use superlink::decomp::{builtin_table, load_table, save_table, table_to_string, DecompTable};
use superlink::engine::{link_polynomial_with, BraidSpec, XiSeries};
use superlink::suites::{run_suite, Suite};
use superlink::superalg::AlgebraKind;
use superlink::{Error, Result};

/// Exact two-variable link polynomials from U_q[gl(m|n)] and U_q[osp(2|2n)].
#[derive(Parser)]
#[command(name = "superlink", version)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(clap::Args)]
struct TableArgs {
    /// `gl:m,n` or `osp:n`
    #[arg(long, required_unless_present = "table")]
    algebra: Option<AlgebraKind>,
    /// `vector`, or `adjoint` for gl:2,1
    #[arg(long, default_value = "vector")]
    family: String,
    /// Read the decomposition table from a JSON file instead.
    #[arg(long, conflicts_with = "algebra")]
    table: Option<PathBuf>,
}

impl TableArgs {
    fn load(&self) -> Result<DecompTable> {
        match (&self.table, self.algebra) {
            (Some(path), _) => load_table(path),
            (None, Some(kind)) => builtin_table(kind, &self.family),
            (None, None) => unreachable!("clap enforces --algebra or --table"),
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Cmd {
    /// Emit a decomposition table as JSON.
    Table {
        #[command(flatten)]
        src: TableArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compute ξ_k.
    Xi {
        #[command(flatten)]
        src: TableArgs,
        #[arg(short = 'k', allow_negative_numbers = true)]
        k: i64,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Link polynomial of the closure of σ_1^{k_1}⋯σ_{M−1}^{k_{M−1}}.
    Link {
        #[command(flatten)]
        src: TableArgs,
        #[arg(long, value_delimiter = ',', allow_negative_numbers = true, required = true)]
        exponents: Vec<i64>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Run the invariant suites and print the report.
    Check {
        #[arg(long, default_value = "all", value_parser = Suite::from_str)]
        suite: Suite,
        /// Keep wall times in the oracle report.
        #[arg(long)]
        timings: bool,
    },
    /// Evaluate a serialised rational function at a point.
    Eval {
        #[arg(long)]
        expr_file: PathBuf,
        #[arg(long, value_parser = parse_rational)]
        q: BigRational,
        #[arg(long, value_parser = parse_rational, allow_negative_numbers = true)]
        alpha: BigRational,
        #[arg(long, default_value_t = 30)]
        digits: usize,
    },
}

fn parse_rational(s: &str) -> std::result::Result<BigRational, String> {
    BigRational::from_str(s.trim()).map_err(|_| format!("expected p/q, got {s:?}"))
}

/// Writes one line to stdout; a closed pipe is not an error.
fn emit(s: &str) {
    let _ = writeln!(std::io::stdout().lock(), "{s}");
}

fn render(x: &RatFunc, format: Format) -> String {
    match format {
        Format::Text => x.to_string(),
        Format::Json => serde_json::to_string_pretty(&x.to_record()).expect("record serialises"),
    }
}

fn read_expr(path: &Path) -> Result<RatFunc> {
    let text = fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    let rec: RatFuncRecord = serde_json::from_str(&text).map_err(|e| Error::SchemaError(e.to_string()))?;
    RatFunc::from_record(&rec)
}

/// Runs a command; `Ok(false)` means the command ran but reported failures.
fn run(cmd: Cmd) -> Result<bool> {
    match cmd {
        Cmd::Table { src, out } => {
            let t = src.load()?;
            match out {
                Some(path) => save_table(&t, &path)?,
                None => emit(&table_to_string(&t)),
            }
        }
        Cmd::Xi { src, k, format } => {
            let s = XiSeries::new(&src.load()?)?;
            emit(&render(&s.xi(k), format));
        }
        Cmd::Link { src, exponents, format } => {
            let s = XiSeries::new(&src.load()?)?;
            let l = link_polynomial_with(&s, &BraidSpec::new(exponents))?;
            emit(&render(&l, format));
        }
        Cmd::Check { suite, timings } => {
            let r = run_suite(suite)?;
            let r = if timings { r } else { r.without_timings() };
            emit(&serde_json::to_string_pretty(&r).expect("report serialises"));
            return Ok(r.passed());
        }
        Cmd::Eval { expr_file, q, alpha, digits } => {
            let x = read_expr(&expr_file)?;
            emit(&rf_eval(&x, &q, &alpha, digits)?.to_string());
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let _ = e.print();
            return ExitCode::from(code as u8);
        }
    };
    match run(cli.cmd) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {}: {e}", e.name());
            ExitCode::from(1)
        }
    }
}
