use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use rconvex::bounds::{TheoremId, Variant};
use rconvex::cli::{self, parse_domain, Command, Format, RGrid, RunSpec};
use rconvex::quadrature::QuadratureConfig;

#[derive(Parser)]
#[command(
    name = "rconvex",
    version,
    about = "Hadamard-type bounds for r-convex functions"
)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Check r-convexity of --f on a sample grid.
    Check(Opts),
    /// Evaluate both sides of one bound.
    Verify(Opts),
    /// Evaluate a bound over an r-grid, printed and derived side by side.
    Sweep(Opts),
    /// Seeded counterexample search over generated class members.
    Search(Opts),
    /// The five-term chain for a two-variable function.
    Chain(Opts),
}

#[derive(Args)]
struct Opts {
    #[arg(long, allow_hyphen_values = true)]
    f: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    g: Option<String>,
    /// a,b or a,b,c,d
    #[arg(long, allow_hyphen_values = true)]
    domain: Option<String>,
    /// T1_1, T1_2, T1_3, T2_1, T2_4, T2_7 or CHAIN_1_4
    #[arg(long)]
    theorem: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    r: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    r2: Option<f64>,
    /// lo:hi:n
    #[arg(long = "r-grid", allow_hyphen_values = true)]
    r_grid: Option<String>,
    /// printed or derived
    #[arg(long, default_value = "printed")]
    variant: String,
    #[arg(long, default_value_t = 8)]
    nodes: usize,
    #[arg(long, default_value_t = 4)]
    panels: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// json or csv
    #[arg(long, default_value = "json")]
    format: String,
    /// Corpus size per r value (search).
    #[arg(long, default_value_t = 200)]
    instances: usize,
    /// Grid points per axis (check).
    #[arg(long, default_value_t = 17)]
    points: usize,
    /// Use the joint notion instead of partial maps (check, two variables).
    #[arg(long)]
    joint: bool,
}

fn build(command: Command, o: Opts) -> rconvex::Result<RunSpec> {
    let mut spec = RunSpec::new(command);
    spec.f = o.f;
    spec.g = o.g;
    spec.domain = o.domain.as_deref().map(parse_domain).transpose()?;
    spec.theorem = o
        .theorem
        .as_deref()
        .map(str::parse::<TheoremId>)
        .transpose()?;
    spec.r = o.r;
    spec.r2 = o.r2;
    spec.r_grid = o.r_grid.as_deref().map(str::parse::<RGrid>).transpose()?;
    spec.variant = o.variant.parse::<Variant>()?;
    spec.quadrature = QuadratureConfig::new(o.nodes, o.panels)?;
    spec.seed = o.seed;
    spec.format = o.format.parse::<Format>()?;
    spec.instances = o.instances;
    spec.points = o.points;
    spec.joint = o.joint;
    Ok(spec)
}

fn main() -> ExitCode {
    let parsed = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            let code = if e.use_stderr() {
                cli::EXIT_INPUT
            } else {
                cli::EXIT_OK
            };
            return ExitCode::from(code as u8);
        }
    };
    let (command, opts) = match parsed.command {
        Cmd::Check(o) => (Command::Check, o),
        Cmd::Verify(o) => (Command::Verify, o),
        Cmd::Sweep(o) => (Command::Sweep, o),
        Cmd::Search(o) => (Command::Search, o),
        Cmd::Chain(o) => (Command::Chain, o),
    };
    let outcome = match build(command, opts) {
        Ok(spec) => cli::run(&spec),
        Err(e) => cli::Outcome {
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
            code: cli::EXIT_INPUT,
        },
    };
    let _ = std::io::stdout().write_all(outcome.stdout.as_bytes());
    let _ = std::io::stderr().write_all(outcome.stderr.as_bytes());
    ExitCode::from(outcome.code as u8)
}
