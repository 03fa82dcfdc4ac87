use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use sagbi::lab::commands::{self, exit_code, Output};
use sagbi::{Limits, Result};

/// Exact SAGBI bases, toric ideals, and planar monoids.
#[derive(Parser)]
#[command(name = "sagbilab", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// Emit JSON.
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand)]
enum Command {
    /// SAGBI criterion and completion.
    #[command(subcommand)]
    Sagbi(SagbiCmd),
    /// Subduce a polynomial against a generator file.
    Subduce {
        #[arg(long)]
        gens: PathBuf,
        #[arg(long)]
        poly: String,
        #[arg(long)]
        order: Option<String>,
        #[command(flatten)]
        common: Common,
    },
    /// Toric ideal of an exponent matrix file (one column per line).
    Toric {
        #[arg(long)]
        matrix: PathBuf,
        #[command(flatten)]
        common: Common,
    },
    /// Reduced Gröbner basis of an ideal file.
    Groebner {
        #[arg(long)]
        ideal: PathBuf,
        #[arg(long)]
        order: Option<String>,
        #[command(flatten)]
        common: Common,
    },
    /// Planar monoids.
    #[command(subcommand)]
    Monoid(MonoidCmd),
    /// Reproduce the catalogued examples.
    #[command(subcommand)]
    Paper(PaperCmd),
    /// Draw a monoid as SVG.
    Plot {
        /// Example id such as `E3.7(4,3)`.
        #[arg(long, conflicts_with = "gens")]
        example: Option<String>,
        /// Monoid specification such as `1,0;4,3+m*0,1`.
        #[arg(long)]
        gens: Option<String>,
        #[arg(long, default_value_t = 8)]
        bound: u32,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Subcommand)]
enum SagbiCmd {
    /// Decide whether the generators form a SAGBI basis.
    Check {
        #[arg(long)]
        gens: PathBuf,
        #[arg(long)]
        order: Option<String>,
        #[command(flatten)]
        common: Common,
    },
    /// Complete the generators up to a degree bound.
    Compute {
        #[arg(long)]
        gens: PathBuf,
        #[arg(long = "max-deg", default_value_t = 12)]
        max_deg: u64,
        #[arg(long)]
        order: Option<String>,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Subcommand)]
enum MonoidCmd {
    /// Irreducible elements inside a box.
    Irreducibles {
        #[arg(long)]
        gens: String,
        #[arg(long)]
        bound: u32,
        #[command(flatten)]
        common: Common,
    },
    /// Rays and facet normals of the cone.
    Cone {
        #[arg(long)]
        gens: String,
        #[command(flatten)]
        common: Common,
    },
    /// The monoid of a ray `v1` and progressions `u + m*v2`.
    Construct {
        #[arg(long)]
        v1: String,
        #[arg(long)]
        v2: String,
        #[arg(long)]
        us: String,
        #[arg(long, default_value_t = 10)]
        bound: u32,
        #[arg(long)]
        plot: Option<PathBuf>,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Subcommand)]
enum PaperCmd {
    /// Run an example and compare with its reference data.
    Reproduce {
        #[arg(long, required_unless_present = "all")]
        example: Option<String>,
        #[arg(long, conflicts_with = "example")]
        all: bool,
        #[arg(long = "max-deg")]
        max_deg: Option<u64>,
        /// Include wall-clock seconds.
        #[arg(long)]
        timing: bool,
        #[command(flatten)]
        common: Common,
    },
    /// List the example ids with their default parameters.
    List,
}

fn run(cmd: Command, limits: Limits) -> Result<Output> {
    match cmd {
        Command::Sagbi(SagbiCmd::Check {
            gens,
            order,
            common,
        }) => commands::sagbi_check_cmd(&gens, order.as_deref(), common.json, limits),
        Command::Sagbi(SagbiCmd::Compute {
            gens,
            max_deg,
            order,
            common,
        }) => commands::sagbi_compute_cmd(&gens, max_deg, order.as_deref(), common.json, limits),
        Command::Subduce {
            gens,
            poly,
            order,
            common,
        } => commands::subduce_cmd(&gens, &poly, order.as_deref(), common.json),
        Command::Toric { matrix, common } => commands::toric_cmd(&matrix, common.json, limits),
        Command::Groebner {
            ideal,
            order,
            common,
        } => commands::groebner_cmd(&ideal, order.as_deref(), common.json, limits),
        Command::Monoid(MonoidCmd::Irreducibles {
            gens,
            bound,
            common,
        }) => commands::irreducibles_cmd(&gens, bound, common.json),
        Command::Monoid(MonoidCmd::Cone { gens, common }) => commands::cone_cmd(&gens, common.json),
        Command::Monoid(MonoidCmd::Construct {
            v1,
            v2,
            us,
            bound,
            plot,
            common,
        }) => commands::construct_cmd(&v1, &v2, &us, bound, plot.as_deref(), common.json),
        Command::Paper(PaperCmd::Reproduce {
            example,
            all,
            max_deg,
            timing,
            common,
        }) => commands::reproduce_cmd(
            example.as_deref(),
            all,
            max_deg,
            common.json,
            timing,
            limits,
        ),
        Command::Paper(PaperCmd::List) => Ok(commands::list_cmd()),
        Command::Plot {
            example,
            gens,
            bound,
            out,
        } => commands::plot_cmd(example.as_deref(), gens.as_deref(), bound, &out, limits),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command, Limits::from_env()) {
        Ok(out) => {
            print!("{}", out.text);
            if !out.text.ends_with('\n') {
                println!();
            }
            ExitCode::from(out.code as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e) as u8)
        }
    }
}
