//! `fauxtree` command-line front end.
//!
//! Every command prints its main result to stdout and, with `--out DIR`,
//! writes the same data to files in `DIR`. JSON outputs carry `"schema": 1`
//! and the run configuration (including the seed). The exit code is 2 when a
//! verification fails and 1 on any other error.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use fauxtree::enumerate::CensusMode;
use fauxtree::MatrixKind;
use serde::Serialize;

#[derive(Parser, Debug)]
#[command(name = "fauxtree", version, about = "Spectral faux trees: censuses, constructions and verifications")]
struct Cli {
    #[command(flatten)]
    global: GlobalOpts,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone, Serialize)]
pub struct GlobalOpts {
    /// Directory for output files (created if missing).
    #[arg(long, global = true)]
    #[serde(skip)]
    pub out: Option<PathBuf>,
    /// Worker threads for enumeration (default: all cores).
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    /// Seed for randomized inputs.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Subcommand, Debug, Clone, Serialize)]
#[serde(tag = "command", rename_all = "kebab-case")]
pub enum Command {
    /// Free trees on n vertices as graph6 lines.
    Trees {
        #[arg(long)]
        n: usize,
    },
    /// Group trees and non-trees by characteristic polynomial.
    Census {
        #[arg(long)]
        n: usize,
        #[arg(long, value_parser = parse_kind)]
        matrix: MatrixKind,
        #[arg(long, value_parser = parse_mode, default_value = "brute")]
        mode: CensusMode,
        /// Search every graph instead of the reduced universe.
        #[arg(long)]
        no_prune: bool,
    },
    /// Build (p,q) ornaments of a word and compare direct and transfer polynomials.
    /// Repeat --p/--q to compare several shapes.
    Ornament {
        #[arg(long)]
        word: String,
        #[arg(long, required = true)]
        p: Vec<usize>,
        #[arg(long, required = true)]
        q: Vec<usize>,
        /// Include the 7-entry state column of every subword.
        #[arg(long)]
        states: bool,
    },
    /// Check the intertwiner identities for one (p,q) or a whole range.
    VerifyU {
        #[arg(long, requires = "q")]
        p: Option<usize>,
        #[arg(long, requires = "p")]
        q: Option<usize>,
        #[arg(long, default_value_t = 6)]
        p_max: usize,
        #[arg(long, default_value_t = 8)]
        q_max: usize,
    },
    /// Swap the spider limb of a tree for the six-cycle limb.
    Limbswap {
        /// Tree in graph6.
        #[arg(long, conflicts_with = "random_host")]
        graph6: Option<String>,
        /// Use a random host tree on this many vertices (seeded by --seed).
        #[arg(long)]
        random_host: Option<usize>,
    },
    /// Attach a rooted graph at every vertex of the signless Laplacian base pair.
    Qfamily {
        #[arg(long)]
        graph6: String,
        #[arg(long, default_value_t = 0)]
        root: usize,
    },
}

fn parse_kind(s: &str) -> Result<MatrixKind, String> {
    s.parse().map_err(|e: fauxtree::Error| e.to_string())
}

fn parse_mode(s: &str) -> Result<CensusMode, String> {
    s.parse().map_err(|e: fauxtree::Error| e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(t) = cli.global.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(t).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    }
    match commands::run(&cli.global, &cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(2),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
