use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use hyperent::cli::{self, EnumerateOptions, Filter, Format};
use hyperent::verify::VerifyConfig;
use hyperent::{Method, Result};

#[derive(Parser)]
#[command(
    name = "hyperent",
    version,
    about = "Exact entanglement measures for hypergraph states"
)]
struct Args {
    /// Output format: text, json or tsv
    #[arg(long, global = true, default_value = "text")]
    format: Format,

    /// Weight method: auto, ie, tt or statevector
    #[arg(long, global = true, default_value = "auto")]
    method: Method,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Hamming weight and parity of a hypergraph
    Weight { input: String },
    /// Per-vertex entropic measures and classification
    Entropy {
        input: String,
        #[arg(long)]
        qubit: Option<usize>,
    },
    /// Try to certify that two hypergraph states are not LU equivalent
    Witness {
        first: String,
        second: String,
        #[arg(long)]
        up_to_relabeling: bool,
    },
    /// Tabulate every hypergraph on n vertices (n <= 4), or a random sample
    Enumerate {
        n: usize,
        #[arg(long)]
        filter: Option<Filter>,
        #[arg(long)]
        sample: Option<usize>,
        #[arg(long, default_value_t = 42)]
        seed: u64,
    },
    /// Cross-check every result against the brute-force oracles
    Verify {
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 8)]
        max_n: usize,
        #[arg(long, default_value_t = 250)]
        samples: usize,
    },
}

fn run(args: Args, out: &mut dyn Write) -> Result<i32> {
    let (format, method) = (args.format, args.method);
    match args.command {
        Command::Weight { input } => {
            cli::cmd_weight(out, &cli::load_input(&input)?, method, format)
        }
        Command::Entropy { input, qubit } => {
            cli::cmd_entropy(out, &cli::load_input(&input)?, method, qubit, format)
        }
        Command::Witness {
            first,
            second,
            up_to_relabeling,
        } => {
            let (g, h) = (cli::load_input(&first)?, cli::load_input(&second)?);
            cli::cmd_witness(out, &g, &h, up_to_relabeling, format)
        }
        Command::Enumerate {
            n,
            filter,
            sample,
            seed,
        } => {
            let opts = EnumerateOptions {
                n,
                filter,
                sample,
                seed,
                method,
            };
            cli::cmd_enumerate(out, &opts, format)
        }
        Command::Verify {
            seed,
            max_n,
            samples,
        } => {
            let config = VerifyConfig {
                seed,
                max_n,
                samples,
                ..VerifyConfig::default()
            };
            cli::cmd_verify(out, &config, format)
        }
    }
}

fn main() -> ExitCode {
    let args = Args::parse();
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let code = match run(args, &mut out) {
        Ok(code) => code,
        Err(e) => {
            let _ = out.flush();
            eprintln!("error: {e}");
            cli::exit_code(&e)
        }
    };
    let _ = out.flush();
    ExitCode::from(code as u8)
}
