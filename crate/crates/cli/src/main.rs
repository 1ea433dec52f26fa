//! `algleg`: evaluate the algebraic Legendre families, print octahedral
//! functions, run expansion demos and the Lie-algebra checks.
//!
//! Exit codes: 0 success, 1 failed verification or I/O, 2 usage,
//! 3 domain, 4 configuration.

mod commands;
mod parse;
mod table;

use clap::{Args, Parser, Subcommand, ValueEnum};
use parse::Grid;
use std::process::ExitCode;
use table::Format;

#[derive(Parser, Debug)]
#[command(name = "algleg", version, about = "Algebraic associated Legendre and Ferrers functions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate a family member on a grid of θ or ξ.
    Eval(EvalArgs),
    /// Print r_n^m exactly, with its structure.
    Rnm(RnmArgs),
    /// Tabulate the structure and coefficients of r_n^m over a range.
    Table(TableArgs),
    /// Expand a target function and report coefficients or reconstruction.
    Expand(ExpandArgs),
    /// Verify the so(5) realizations on a window; JSON report.
    Liealg(LiealgArgs),
    /// Compare the Mehler–Dirichlet closed form with quadrature.
    Mehler(MehlerArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    Octahedral,
    Tetra2,
    Tetra3,
    Dihedral,
    Cyclic,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum KindArg {
    #[value(name = "ferrers-P")]
    FerrersP,
    #[value(name = "ferrers-Q")]
    FerrersQ,
    #[value(name = "legendre-P")]
    LegendreP,
    #[value(name = "legendre-Qhat")]
    LegendreQhat,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SignArg {
    #[value(name = "+")]
    Plus,
    #[value(name = "-")]
    Minus,
}

/// The evaluation variable; exactly one must be given.
#[derive(Args, Debug, Clone)]
#[group(required = true, multiple = false)]
pub struct VarArgs {
    /// Circular variable grid, `a:b:n` or comma list.
    #[arg(long, value_parser = Grid::parse, allow_hyphen_values = true)]
    theta: Option<Grid>,
    /// Hyperbolic variable grid.
    #[arg(long, value_parser = Grid::parse, allow_hyphen_values = true)]
    xi: Option<Grid>,
}

#[derive(Args, Debug, Clone, Copy)]
pub struct OutArgs {
    #[arg(long, value_enum, default_value = "csv")]
    format: Format,
}

#[derive(Args, Debug)]
#[command(allow_negative_numbers = true)]
pub struct EvalArgs {
    #[arg(long, value_enum)]
    family: FamilyArg,
    #[arg(long, value_enum, default_value = "ferrers-P")]
    kind: KindArg,
    #[arg(long, default_value_t = 0)]
    n: i64,
    #[arg(long, default_value_t = 0)]
    m: i64,
    /// Dihedral degree offset, or cyclic order.
    #[arg(long, value_parser = parse::real, default_value = "0", allow_hyphen_values = true)]
    alpha: f64,
    /// Sign of the order (for tetra2 `Q̂`: the degree row).
    #[arg(long, value_enum, default_value = "+", allow_hyphen_values = true)]
    order: SignArg,
    #[command(flatten)]
    var: VarArgs,
    /// Add the hypergeometric oracle value and the relative difference.
    #[arg(long)]
    oracle: bool,
    #[command(flatten)]
    out: OutArgs,
}

#[derive(Args, Debug)]
#[command(allow_negative_numbers = true)]
pub struct RnmArgs {
    n: i64,
    m: i64,
    /// Print JSON instead of text.
    #[arg(long)]
    json: bool,
}

#[derive(Args, Debug)]
#[command(allow_negative_numbers = true)]
pub struct TableArgs {
    /// `a:b`
    #[arg(long, value_parser = parse::int_range, default_value = "0:2", allow_hyphen_values = true)]
    n: (i64, i64),
    #[arg(long, value_parser = parse::int_range, default_value = "0:2", allow_hyphen_values = true)]
    m: (i64, i64),
    #[command(flatten)]
    out: OutArgs,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum BasisArg {
    /// Fourth-kind Chebyshev polynomials (α = 1/2 hatted basis).
    W,
    /// Love–Hunter basis P_{ν₀+2n}^μ.
    LoveHunter,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TargetArg {
    One,
    Linear,
    Abs,
    Step,
    /// P_{ν₀}^μ itself (Love–Hunter basis only).
    #[value(name = "self")]
    SelfFn,
}

#[derive(Args, Debug)]
#[command(allow_negative_numbers = true)]
pub struct ExpandArgs {
    #[arg(long, value_enum, default_value = "w")]
    basis: BasisArg,
    #[arg(long, value_enum, default_value = "abs")]
    target: TargetArg,
    #[arg(long = "n-trunc", default_value_t = 16)]
    n_trunc: i64,
    #[arg(long, value_parser = parse::real, default_value = "-1/6", allow_hyphen_values = true)]
    nu0: f64,
    #[arg(long, value_parser = parse::real, default_value = "1/4", allow_hyphen_values = true)]
    mu: f64,
    /// Reconstruction points.
    #[arg(long, value_parser = Grid::parse, default_value = "-1:1:11", allow_hyphen_values = true)]
    z: Grid,
    /// Emit the coefficient table instead of the reconstruction.
    #[arg(long)]
    coefficients: bool,
    #[command(flatten)]
    out: OutArgs,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FormArg {
    #[value(name = "so32A")]
    So32A,
    #[value(name = "so41")]
    So41,
    #[value(name = "so32B")]
    So32B,
    #[value(name = "so5R")]
    So5R,
    All,
}

#[derive(Args, Debug)]
#[command(allow_negative_numbers = true)]
pub struct LiealgArgs {
    /// Base offset ν₀ μ₀, decimals or p/q.
    #[arg(long, num_args = 2, value_parser = parse::real, default_values = ["0", "0"], allow_hyphen_values = true)]
    base: Vec<f64>,
    /// Half-width k of the window [-k, k]².
    #[arg(long, default_value_t = 6)]
    window: i64,
    #[arg(long, default_value_t = 4)]
    margin: i64,
    #[arg(long, value_enum, default_value = "all")]
    form: FormArg,
    /// Use the normalized (twisted) ladders.
    #[arg(long)]
    twisted: bool,
    /// Pass threshold for every residual.
    #[arg(long, default_value_t = 1e-10)]
    tol: f64,
}

#[derive(Args, Debug)]
#[command(allow_negative_numbers = true)]
pub struct MehlerArgs {
    #[arg(long, default_value_t = 0)]
    n: i64,
    #[arg(long, default_value_t = 0)]
    m: i64,
    #[command(flatten)]
    var: VarArgs,
    #[command(flatten)]
    out: OutArgs,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let mut stdout = std::io::stdout().lock();
    let result = match cli.command {
        Command::Eval(a) => commands::eval(a, &mut stdout),
        Command::Rnm(a) => commands::rnm(a, &mut stdout),
        Command::Table(a) => commands::table(a, &mut stdout),
        Command::Expand(a) => commands::expand(a, &mut stdout),
        Command::Liealg(a) => commands::liealg(a, &mut stdout),
        Command::Mehler(a) => commands::mehler(a, &mut stdout),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        // the reader went away, e.g. `| head`
        Err(commands::CliError::Io(e)) if e.kind() == std::io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("algleg: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
