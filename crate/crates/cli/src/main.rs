//! `gpindex`: Graovac-Pisanski index of connected graphs from the command line.
//!
//! Exit codes: 0 success, 1 parse or I/O error, 2 validation error,
//! 3 routes disagree.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use gpindex_core::automorphisms::DEFAULT_NODE_LIMIT;

#[derive(Parser, Debug)]
#[command(name = "gpindex", version, about = "Graovac-Pisanski index by direct, cut-method and closed-formula routes")]
struct Cli {
    /// Append elapsed wall-clock time to the report.
    #[arg(long, global = true)]
    timing: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Index of a graph given as an edge-list file.
    Compute {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Method::Both)]
        method: Method,
        /// Edge partition (`block: i j k` lines); defaults to the Θ*-partition.
        #[arg(long)]
        partition: Option<PathBuf>,
        /// Print per-orbit values and every quotient term.
        #[arg(long)]
        verbose: bool,
        #[arg(long, default_value_t = DEFAULT_NODE_LIMIT)]
        node_limit: u64,
    },
    /// Index of the zig-zag tubulene ZT(n,h).
    Tubulene {
        n: usize,
        h: usize,
        #[arg(long, value_enum, default_value_t = TubuleneMethod::All)]
        method: TubuleneMethod,
        /// Write the generated graph as a labelled edge list.
        #[arg(long)]
        emit_graph: Option<PathBuf>,
    },
    /// Θ*-classes of a graph, optionally with their quotient graphs.
    Theta {
        file: PathBuf,
        #[arg(long)]
        quotients: bool,
    },
    /// Vertex orbits and automorphism group order.
    Orbits {
        file: PathBuf,
        #[arg(long, default_value_t = DEFAULT_NODE_LIMIT)]
        node_limit: u64,
    },
    /// All routes for 1 <= n <= N_MAX, 2 <= h <= H_MAX, written as CSV.
    Sweep {
        n_max: usize,
        h_max: usize,
        #[arg(long)]
        output: PathBuf,
        /// Skip automorphism enumeration above this many vertices.
        #[arg(long, default_value_t = 120)]
        aut_max_vertices: usize,
        #[arg(long, default_value_t = DEFAULT_NODE_LIMIT)]
        node_limit: u64,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Method {
    Direct,
    Cut,
    Both,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum TubuleneMethod {
    Direct,
    Cut,
    Closed,
    All,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = std::time::Instant::now();
    let result = match cli.command {
        Command::Compute { file, method, partition, verbose, node_limit } => {
            commands::compute(&file, method, partition.as_deref(), verbose, node_limit)
        }
        Command::Tubulene { n, h, method, emit_graph } => commands::tubulene(n, h, method, emit_graph.as_deref()),
        Command::Theta { file, quotients } => commands::theta(&file, quotients),
        Command::Orbits { file, node_limit } => commands::orbits(&file, node_limit),
        Command::Sweep { n_max, h_max, output, aut_max_vertices, node_limit } => {
            commands::sweep(n_max, h_max, &output, aut_max_vertices, node_limit)
        }
    };
    let code = match result {
        Ok(report) => {
            print!("{}", report.text);
            if let Some(message) = &report.diagnostic {
                eprintln!("gpindex: {message}");
            }
            report.code
        }
        Err(failure) => {
            eprintln!("gpindex: {failure}");
            failure.code()
        }
    };
    if cli.timing {
        println!("elapsed_ms={:.3}", start.elapsed().as_secs_f64() * 1e3);
    }
    ExitCode::from(code)
}
