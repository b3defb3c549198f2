//! theta-orbit: command-line front end for theta lifts of nilpotent orbits.

mod commands;
mod config;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

impl std::str::FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        <Format as ValueEnum>::from_str(s, true)
    }
}

#[derive(Debug, Parser)]
#[command(name = "theta-orbit", version, about = "Theta lifts of nilpotent orbits for stable-range dual pairs")]
pub struct Cli {
    /// Worker threads for the engines (default: all cores)
    #[arg(long, global = true, env = "THETA_ORBIT_THREADS")]
    pub threads: Option<usize>,
    /// Seed for randomized sections and Monte Carlo checks
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// Optional key=value config file; flags take precedence
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Largest number of monomials a polynomial product may have
    #[arg(long, global = true)]
    pub monomial_cap: Option<usize>,
    /// Attempts at a generic section before giving up
    #[arg(long, global = true)]
    pub retry_cap: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct PairArgs {
    /// osp, uu or spostar
    #[arg(long)]
    pub pair: Option<String>,
    #[arg(long)]
    pub p: Option<usize>,
    #[arg(long)]
    pub q: Option<usize>,
    #[arg(long)]
    pub m: Option<usize>,
    #[arg(long)]
    pub n: Option<usize>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Signed Young diagrams and their lifts
    Orbits {
        #[command(subcommand)]
        cmd: OrbitsCmd,
    },
    /// Graded decompositions of coordinate rings
    Ring {
        #[command(subcommand)]
        cmd: RingCmd,
    },
    /// Degrees of lifted orbit closures
    Degree(DegreeArgs),
    /// Selberg-type integral: closed form against monomial expansion
    Selberg(SelbergArgs),
    /// Moment-map checks
    Geometry {
        #[command(subcommand)]
        cmd: GeometryCmd,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Member {
    Small,
    Large,
}

#[derive(Debug, Subcommand)]
pub enum OrbitsCmd {
    /// Enumerate the nilpotent orbits of one member of the pair
    List {
        #[command(flatten)]
        pair: PairArgs,
        #[arg(long, value_enum, default_value = "small")]
        member: Member,
    },
    /// Lift an orbit of the smaller member
    Lift {
        #[command(flatten)]
        pair: PairArgs,
        /// Diagram text such as "[(+-)(+)]"
        #[arg(long)]
        diagram: Option<String>,
        /// trivial or regular-hol
        #[arg(long)]
        orbit: Option<String>,
    },
}

#[derive(Debug, Subcommand)]
pub enum RingCmd {
    /// K x K'-decomposition of the coordinate ring of a lifted orbit closure
    Decompose {
        #[command(flatten)]
        pair: PairArgs,
        /// trivial or regular-hol
        #[arg(long)]
        orbit: Option<String>,
        /// Diagram of the orbit to lift (zero or regular holomorphic)
        #[arg(long)]
        diagram: Option<String>,
        /// JSON decomposition of the coordinate ring of the orbit to lift
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long)]
        max_degree: Option<usize>,
    },
    /// Harmonics on one side of W, checked against the complete-intersection series
    Harmonics {
        #[command(flatten)]
        pair: PairArgs,
        #[arg(long, value_enum, default_value = "plus")]
        side: SideArg,
        #[arg(long)]
        max_degree: Option<usize>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SideArg {
    Plus,
    Minus,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Asymptotic,
    Fit,
    Literal,
    Both,
}

#[derive(Debug, Args)]
pub struct DegreeArgs {
    #[command(flatten)]
    pub pair: PairArgs,
    /// Several pairs, e.g. "osp:3,3,1;uu:2,2,1,1"
    #[arg(long)]
    pub grid: Option<String>,
    /// trivial, regular-hol or all
    #[arg(long)]
    pub orbit: Option<String>,
    #[arg(long, value_enum, default_value = "both")]
    pub method: Method,
    /// Largest truncation tried by the Hilbert fit
    #[arg(long)]
    pub fit_max: Option<usize>,
    /// Also estimate the leading-form integral with this many simplex samples
    #[arg(long)]
    pub monte_carlo: Option<usize>,
}

#[derive(Debug, Args)]
pub struct SelbergArgs {
    #[arg(long)]
    pub n: usize,
    /// Positive rational, e.g. 3 or 1/2
    #[arg(long)]
    pub kappa: String,
    /// Use the squared integrand D_n(x^2)^2 and the Pochhammer determinant
    #[arg(long)]
    pub dsquared: bool,
}

#[derive(Debug, Subcommand)]
pub enum GeometryCmd {
    /// Lift through the moment maps and compare with the diagram rule
    CheckLift {
        #[command(flatten)]
        pair: PairArgs,
        #[arg(long)]
        diagram: Option<String>,
        /// Every orbit of the smaller member
        #[arg(long)]
        all: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli) {
        Ok(out) => {
            print!("{}", out.text);
            if !out.text.ends_with('\n') {
                println!();
            }
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(commands::exit_code(&e))
        }
    }
}
