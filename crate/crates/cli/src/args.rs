use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(
    name = "rankmetric",
    version,
    about = "Rank-metric codes and linear sets over finite fields"
)]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone, Default)]
pub struct Global {
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    pub workers: Option<usize>,
    /// key=value file; flags take precedence.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    /// Output format (default: text).
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Largest field order for which tables are built.
    #[arg(long, global = true)]
    pub cap: Option<u64>,
    /// Seed for random search modes.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// Stop a distance scan at the first word of rank at most this.
    #[arg(long, global = true)]
    pub early_exit: Option<usize>,
    /// Also write the JSON report here.
    #[arg(long, global = true, value_name = "FILE")]
    pub json: Option<PathBuf>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Text,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Finite field parameters.
    Field {
        #[command(subcommand)]
        cmd: FieldCmd,
    },
    /// Single q-polynomials.
    Linpoly {
        #[command(subcommand)]
        cmd: LinpolyCmd,
    },
    /// Rank-metric codes read from JSON code files.
    Code {
        #[command(subcommand)]
        cmd: CodeCmd,
    },
    /// Linear sets U_f = {(x, f(x))}.
    Subspace {
        #[command(subcommand)]
        cmd: SubspaceCmd,
    },
    /// The trinomial code and its systems.
    Paper {
        #[command(subcommand)]
        cmd: PaperCmd,
    },
    /// Run the acceptance checks.
    Repro(ReproArgs),
}

#[derive(Subcommand, Debug)]
pub enum FieldCmd {
    Info {
        #[arg(long)]
        p: u32,
        #[arg(long, default_value_t = 1)]
        e: u32,
        #[arg(long, default_value_t = 1)]
        n: u32,
        /// Modulus coefficients over F_p, low degree first.
        #[arg(long, value_delimiter = ',')]
        modulus: Option<Vec<u32>>,
    },
}

/// Field as Q^N (e.g. 3^6) or a FieldSpec JSON file.
#[derive(Args, Debug, Clone)]
pub struct FieldSel {
    #[arg(long)]
    pub field: String,
}

#[derive(Subcommand, Debug)]
pub enum LinpolyCmd {
    Rank(PolyArgs),
    Kernel(PolyArgs),
    Adjoint(PolyArgs),
    Compose {
        #[command(flatten)]
        a: PolyArgs,
        /// Right-hand factor g in f ∘ g.
        #[arg(long)]
        with: String,
    },
}

#[derive(Args, Debug, Clone)]
pub struct PolyArgs {
    #[command(flatten)]
    pub field: FieldSel,
    /// Coefficient indices a_0,...,a_{n-1}, inline or as a JSON file.
    #[arg(long)]
    pub coeffs: String,
}

#[derive(Args, Debug, Clone)]
pub struct CodeIn {
    #[arg(long = "in")]
    pub input: PathBuf,
    #[arg(long, default_value = "auto")]
    pub strategy: rankmetric::rdcode::Strategy,
}

#[derive(Subcommand, Debug)]
pub enum CodeCmd {
    Mindist(CodeIn),
    Mrd(CodeIn),
    Dual {
        #[command(flatten)]
        code: CodeIn,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    Adjoint {
        #[command(flatten)]
        code: CodeIn,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    Idealisers(CodeIn),
    Twist {
        #[command(flatten)]
        code: CodeIn,
        #[arg(long)]
        i: usize,
        #[arg(long)]
        j: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args, Debug, Clone)]
pub struct SubspaceArgs {
    #[command(flatten)]
    pub field: FieldSel,
    /// Coefficient indices of f, inline or as a JSON file.
    #[arg(long)]
    pub f: String,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum FamilyName {
    U1,
    U2,
    U3,
    U4,
}

#[derive(Subcommand, Debug)]
pub enum SubspaceCmd {
    Scattered(SubspaceArgs),
    LinearSet(SubspaceArgs),
    Stabiliser(SubspaceArgs),
    Family {
        #[command(flatten)]
        field: FieldSel,
        #[arg(long, value_enum)]
        name: FamilyName,
        #[arg(long, default_value_t = 1)]
        s: usize,
        /// δ for U2 and U3; when omitted, the smallest admissible index giving a
        /// scattered subspace.
        #[arg(long)]
        delta: Option<u64>,
        /// c for U4; the smallest root of x^2 + x - 1 when omitted.
        #[arg(long)]
        c: Option<u64>,
        #[arg(long)]
        stabiliser: bool,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Exhaustive,
    Random,
}

#[derive(Subcommand, Debug)]
pub enum PaperCmd {
    /// Dimension, distance, MRD and idealisers of C, and the match with D.
    VerifyMain {
        #[arg(long)]
        q: u64,
        /// Index among the roots of x^2 + x - 1.
        #[arg(long, default_value_t = 0)]
        root: usize,
    },
    /// Dual word of kernel dimension 4 for even q.
    EvenCex {
        #[arg(long)]
        q: u64,
    },
    /// Solutions of the relation system for the dual code.
    Relscan {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        full_gamma: bool,
    },
    /// Closed-form solutions of the norm equation system.
    Hirschfeld {
        #[arg(long)]
        q: u64,
    },
    /// Search one of the six coefficient patterns (rows 1-6) for MRD members.
    Table1 {
        #[arg(long)]
        row: usize,
        #[arg(long)]
        q: u64,
        #[arg(long, value_enum, default_value = "exhaustive")]
        mode: Mode,
        #[arg(long, default_value_t = 1000)]
        trials: u64,
        #[arg(long)]
        first_k: Option<usize>,
        /// Reject a candidate on a word with kernel at least this.
        #[arg(long, default_value_t = 2)]
        reject_kernel: usize,
    },
    /// Verify one <x, f> with f = a_1 x^q + a_3 x^{q^3} + ... over F_{q^{2n}}.
    Table1Verify {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        q: u64,
        /// Coefficients of x^q, x^{q^3}, ... as element indices.
        #[arg(long)]
        coeffs: String,
    },
}

#[derive(Args, Debug)]
pub struct ReproArgs {
    /// Only run checks for these q.
    #[arg(long, value_delimiter = ',')]
    pub q_set: Option<Vec<u64>>,
    /// Only run these criteria.
    #[arg(long, value_delimiter = ',')]
    pub criteria: Option<Vec<usize>>,
    #[arg(long, default_value_t = 10_000)]
    pub property_cases: usize,
}
