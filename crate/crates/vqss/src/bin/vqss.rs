use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use vqss::cli::{self, Overrides};
use vqss::heatmap::Part;

#[derive(Parser)]
#[command(name = "vqss", about = "Variational steady-state solver for Lindblad systems")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum PartArg {
    Re,
    Im,
}

#[derive(Subcommand)]
enum Command {
    /// Run an experiment from a config file.
    Run {
        config: PathBuf,
        /// Override the config's seed.
        #[arg(long)]
        seed: Option<u64>,
        /// Override the config's output directory.
        #[arg(long)]
        output_dir: Option<PathBuf>,
    },
    /// Compute the exact steady state and check its residual.
    VerifyOracle { config: PathBuf },
    /// Render a density-matrix JSON file as an SVG heatmap.
    Heatmap {
        rho: PathBuf,
        #[arg(long)]
        part: PartArg,
        #[arg(long)]
        out: PathBuf,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match cli.command {
        Command::Run {
            config,
            seed,
            output_dir,
        } => cli::run_experiment(&config, &Overrides { seed, output_dir }),
        Command::VerifyOracle { config } => {
            cli::verify_oracle(&config, &Overrides::default())
        }
        Command::Heatmap { rho, part, out } => {
            let part = match part {
                PartArg::Re => Part::Real,
                PartArg::Im => Part::Imaginary,
            };
            cli::heatmap_command(&rho, part, &out)
        }
    };
    ExitCode::from(code as u8)
}
