use clap::{Parser, Subcommand, ValueEnum};
use holtsmark_cli::{
    cmd_eval, cmd_figure, cmd_table, write_figure, write_records, CliError, FigureKind, Format,
};
use holtsmark_core::{Function, MethodId};
use std::io::Write;
use std::process::ExitCode;
use std::str::FromStr;

/// Evaluate the Holtsmark probability density S(β) and field-strength
/// distribution H(β) through independent analytical routes.
#[derive(Parser)]
#[command(name = "holtsmark", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputFormat {
    Csv,
    Json,
}

impl From<OutputFormat> for Format {
    fn from(f: OutputFormat) -> Format {
        match f {
            OutputFormat::Csv => Format::Csv,
            OutputFormat::Json => Format::Json,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Which {
    /// Small-argument Taylor series; order counts the retained terms
    /// n = 0 .. order-1.
    Small,
    /// Large-argument asymptotic expansion; order counts the retained
    /// terms n = 1 .. order (terms with n divisible by 4 vanish).
    Large,
}

fn parse_method(s: &str) -> Result<MethodId, String> {
    MethodId::from_str(s).map_err(|_| {
        format!(
            "unknown method '{s}' (expected one of: {})",
            MethodId::ALL.map(|m| m.as_str()).join(", ")
        )
    })
}

fn parse_function(s: &str) -> Result<Function, String> {
    Function::from_str(s).map_err(|_| format!("unknown function '{s}' (expected S or H)"))
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate one point and print a single record.
    Eval {
        /// Reduced field strength (negative values allowed for S via evenness
        /// with --method auto).
        #[arg(long, allow_hyphen_values = true)]
        beta: f64,
        #[arg(long, default_value = "auto", value_parser = parse_method)]
        method: MethodId,
        #[arg(long, default_value = "S", value_parser = parse_function)]
        function: Function,
        /// Relative truncation tolerance for series methods, absolute
        /// tolerance for quadrature (defaults: 1e-15 / 1e-10).
        #[arg(long)]
        tol: Option<f64>,
        #[arg(long, value_enum, default_value_t = OutputFormat::Csv)]
        format: OutputFormat,
    },
    /// Evaluate an inclusive grid and print one record per point.
    Table {
        #[arg(long)]
        from: f64,
        #[arg(long)]
        to: f64,
        #[arg(long)]
        step: f64,
        #[arg(long, value_parser = parse_function)]
        function: Function,
        #[arg(long, default_value = "auto", value_parser = parse_method)]
        method: MethodId,
        #[arg(long)]
        tol: Option<f64>,
        #[arg(long, value_enum, default_value_t = OutputFormat::Csv)]
        format: OutputFormat,
    },
    /// Emit the truncation-order dataset behind the series figures:
    /// columns beta, one per requested order, and the exact S.
    Figure {
        #[arg(long, value_enum)]
        which: Which,
        /// Comma-separated truncation orders (number of retained terms).
        #[arg(long, value_delimiter = ',', default_value = "4,16,64",
              value_parser = clap::value_parser!(u32).range(1..))]
        orders: Vec<u32>,
        /// Grid start (default: 0 for small, 2 for large).
        #[arg(long)]
        from: Option<f64>,
        /// Grid end (default: 5 for small, 8 for large).
        #[arg(long)]
        to: Option<f64>,
        /// Grid step (default: 0.05 for small, 0.1 for large).
        #[arg(long)]
        step: Option<f64>,
        #[arg(long, value_enum, default_value_t = OutputFormat::Csv)]
        format: OutputFormat,
    },
}

fn run(cli: Cli) -> Result<(), CliError> {
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    match cli.command {
        Command::Eval { beta, method, function, tol, format } => {
            let record = cmd_eval(function, method, beta, tol)?;
            write_records(&mut out, &[record], format.into()).map_err(io_err)?;
        }
        Command::Table { from, to, step, function, method, tol, format } => {
            let records = cmd_table(function, method, from, to, step, tol)?;
            write_records(&mut out, &records, format.into()).map_err(io_err)?;
        }
        Command::Figure { which, orders, from, to, step, format } => {
            let kind = match which {
                Which::Small => FigureKind::Small,
                Which::Large => FigureKind::Large,
            };
            let (d_from, d_to, d_step) = kind.default_range();
            let data = cmd_figure(
                kind,
                &orders,
                from.unwrap_or(d_from),
                to.unwrap_or(d_to),
                step.unwrap_or(d_step),
            )?;
            write_figure(&mut out, &data, format.into()).map_err(io_err)?;
        }
    }
    out.flush().map_err(io_err)?;
    Ok(())
}

fn io_err(e: std::io::Error) -> CliError {
    CliError::Usage(format!("output failed: {e}"))
}

fn main() -> ExitCode {
    let cli = Cli::parse(); // clap exits 2 on parse errors
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Usage(msg)) => {
            eprintln!("holtsmark: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Eval(e)) => {
            eprintln!("holtsmark: {e}");
            ExitCode::from(1)
        }
    }
}
