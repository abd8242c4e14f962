use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "auslab",
    version,
    about = "Auslander map, pertinency and invariants for the preprojective algebra of the cyclic quiver"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Hilbert series of R, total and matrix valued.
    Hilbert {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        degree: Option<usize>,
        /// Include the matrix-valued series.
        #[arg(long)]
        matrix: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Invariant ring dimensions and structure checks.
    Invariants {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        group: String,
        #[arg(long)]
        degree: Option<usize>,
        #[arg(long)]
        check_presentation: bool,
        #[arg(long)]
        check_free_module: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Identity-component growth, pertinency and the Auslander verdict.
    Auslander {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        group: String,
        #[arg(long)]
        degree: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Verdicts for every subgroup of D_n over a list of n.
    Scan {
        #[arg(long, value_delimiter = ',', required = true)]
        n_list: Vec<usize>,
        /// Scan all subgroups of D_n (the only mode).
        #[arg(long)]
        all_dihedral_subgroups: bool,
        #[arg(long)]
        degree: Option<usize>,
        #[arg(long)]
        out: PathBuf,
    },
    /// Self-checks of one part of the engine.
    Verify {
        #[arg(long, value_enum)]
        suite: Suite,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        degree: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Structure,
    Orbits,
    Relations,
    Smash,
}

impl Suite {
    pub fn name(&self) -> &'static str {
        match self {
            Suite::Structure => "structure",
            Suite::Orbits => "orbits",
            Suite::Relations => "relations",
            Suite::Smash => "smash",
        }
    }
}

impl Command {
    pub fn out_dir(&self) -> Option<&Path> {
        match self {
            Command::Hilbert { out, .. }
            | Command::Invariants { out, .. }
            | Command::Auslander { out, .. }
            | Command::Verify { out, .. } => out.as_deref(),
            Command::Scan { out, .. } => Some(out.as_path()),
        }
    }
}
