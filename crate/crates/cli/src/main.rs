//! `wgr`: command line access to computations in weighted polynomial rings.
//!
//! Exit codes: 0 success, 1 negative verdict, 2 inconclusive (including
//! genericity failures, retry with another `--seed`), 3 input error.

mod commands;
mod parse;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use wgr_core::hilbert::Convention;
use wgr_core::{Error, OrderKind};

use commands::{Context, Report, EXIT_INPUT};

#[derive(Parser, Debug)]
#[command(name = "wgr", version, about = "Computations in weighted polynomial rings")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Ring as `name:weight` pairs, e.g. `x:2,y:4,z:5`.
    #[arg(long, global = true)]
    ring: Option<String>,

    /// Generators separated by `;`, e.g. `x*y; y*z; x^5`.
    #[arg(long, global = true)]
    ideal: Option<String>,

    /// File whose first line is the ring and whose other lines are generators.
    #[arg(long, global = true, conflicts_with_all = ["ring", "ideal"])]
    input: Option<PathBuf>,

    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// wdeglex, wdegrevlex or lex.
    #[arg(long, global = true, default_value = "wdeglex")]
    order: String,

    /// Variable priority, largest first, e.g. `y,x`.
    #[arg(long = "var-order", global = true)]
    var_order: Option<String>,

    #[arg(long = "max-degree", global = true)]
    max_degree: Option<u64>,

    /// Number of random trials (default 2 for gin and polarize, 32 for tfixed).
    #[arg(long, global = true)]
    trials: Option<usize>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Module {
    /// The ideal `I`.
    Ideal,
    /// The quotient `R/I`.
    Quotient,
}

impl From<Module> for Convention {
    fn from(m: Module) -> Self {
        match m {
            Module::Ideal => Convention::Ideal,
            Module::Quotient => Convention::Quotient,
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Hilbert function on a degree range.
    Hilbert {
        #[arg(long, default_value_t = 0)]
        from: u64,
        #[arg(long, default_value_t = 20)]
        to: u64,
        #[arg(long, value_enum, default_value_t = Module::Ideal)]
        of: Module,
    },
    /// Hilbert series of R/I.
    Series,
    /// Hilbert quasi-polynomial of R/I.
    Quasipoly,
    /// Generic initial ideal.
    Gin,
    /// Initial ideal.
    Initial,
    /// Reduced Gröbner basis.
    Groebner,
    /// Strong stability of a monomial ideal.
    Stable,
    /// Randomized test of fixedness under the triangular group.
    Tfixed,
    /// Depth of R/I.
    Depth,
    /// Weighted regularity of I and R/I.
    Reg,
    /// Graded Betti numbers as (i, j, beta) triples.
    Betti {
        #[arg(long, value_enum, default_value_t = Module::Ideal)]
        of: Module,
    },
    /// Whether a monomial ideal is lexicographic.
    Islex,
    /// Lexicographic ideal with the same Hilbert function.
    Lexify {
        /// Try every variable priority.
        #[arg(long)]
        all_orders: bool,
    },
    /// Complete polarization of a monomial ideal.
    Polarize {
        /// Only polarize, in the extended ring.
        #[arg(long)]
        once: bool,
    },
    /// The gap bound G*(w) of the ring.
    Gapbound,
    /// Frobenius number of the weights.
    Frobenius,
    /// Factor an automorphism into elementary moves.
    DecomposeAut {
        /// Images as `name = expression`, separated by `;`.
        #[arg(long)]
        images: String,
    },
    /// Least degree from which I is generated by one component.
    Stabilization,
}

fn input_error(msg: impl std::fmt::Display) -> (i32, String) {
    (EXIT_INPUT, format!("error: {msg}"))
}

fn lib_error(e: Error) -> (i32, String) {
    (commands::error_code(&e), format!("error: {e}"))
}

fn run(cli: Cli) -> Result<Report, (i32, String)> {
    let (ring_spec, ideal_spec) = match &cli.input {
        Some(path) => {
            let text = std::fs::read_to_string(path).map_err(|e| input_error(format!("{}: {e}", path.display())))?;
            let mut lines = text
                .lines()
                .map(str::trim)
                .filter(|l| !l.is_empty() && !l.starts_with('#'));
            let ring = lines.next().ok_or_else(|| input_error("input file has no ring line"))?;
            (Some(ring.to_string()), Some(lines.collect::<Vec<_>>().join(";")))
        }
        None => (cli.ring.clone(), cli.ideal.clone()),
    };
    let ring_spec = ring_spec.ok_or_else(|| input_error("missing --ring"))?;
    let ring = parse::parse_ring(&ring_spec).map_err(|e| input_error(format!("ring {e}")))?;
    let ideal = ideal_spec
        .map(|s| parse::parse_ideal(&ring, &s))
        .transpose()
        .map_err(|e| input_error(format!("ideal {e}")))?;
    let kind: OrderKind = cli.order.parse().map_err(input_error)?;
    let priority = cli
        .var_order
        .as_ref()
        .map(|s| {
            s.split(',')
                .map(|name| {
                    ring.names()
                        .iter()
                        .position(|x| x == name.trim())
                        .ok_or_else(|| input_error(format!("unknown variable `{}` in --var-order", name.trim())))
                })
                .collect::<Result<Vec<_>, _>>()
        })
        .transpose()?;
    let ctx = Context::new(ring, ideal, kind, priority, cli.seed, cli.trials, cli.max_degree).map_err(lib_error)?;
    let result = match cli.command {
        Command::Hilbert { from, to, of } => commands::hilbert(&ctx, from, to, of.into()),
        Command::Series => commands::series(&ctx),
        Command::Quasipoly => commands::quasipoly(&ctx),
        Command::Gin => commands::gin_cmd(&ctx),
        Command::Initial => commands::initial(&ctx),
        Command::Groebner => commands::groebner(&ctx),
        Command::Stable => commands::stable(&ctx),
        Command::Tfixed => commands::tfixed(&ctx),
        Command::Depth => commands::depth(&ctx),
        Command::Reg => commands::reg(&ctx),
        Command::Betti { of } => commands::betti(&ctx, of.into()),
        Command::Islex => commands::islex(&ctx),
        Command::Lexify { all_orders } => commands::lexify_cmd(&ctx, all_orders),
        Command::Polarize { once } => commands::polarize_cmd(&ctx, once),
        Command::Gapbound => Ok(commands::gapbound(&ctx)),
        Command::Frobenius => commands::frobenius(&ctx),
        Command::DecomposeAut { images } => {
            let images = parse::parse_images(&ctx.ring, &images).map_err(|e| input_error(format!("images {e}")))?;
            commands::decompose(&ctx, images)
        }
        Command::Stabilization => commands::stabilization(&ctx),
    };
    result.map_err(lib_error)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { 0 };
            let _ = e.print();
            return ExitCode::from(code as u8);
        }
    };
    let format = cli.format;
    match run(cli) {
        Ok(report) => {
            match format {
                Format::Json => println!(
                    "{}",
                    serde_json::to_string_pretty(&report.json).expect("plain JSON values")
                ),
                Format::Text => println!("{}", report.text),
            }
            ExitCode::from(report.code as u8)
        }
        Err((code, msg)) => {
            eprintln!("{msg}");
            ExitCode::from(code as u8)
        }
    }
}
