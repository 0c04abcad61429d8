use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "qloc", version, about = "Exact computations with U_q, O_q(SL2), Verma modules and D_q")]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub cmd: Cmd,
}

#[derive(Args, Debug, Clone)]
pub struct Global {
    /// Root datum: A1 or A2.
    #[arg(long = "type", global = true)]
    pub ty: Option<String>,
    /// Truncation depth (Verma modules, braided-commutativity degree).
    #[arg(long, global = true)]
    pub depth: Option<u32>,
    /// Monomial degree window for section computations.
    #[arg(long, global = true)]
    pub window: Option<u32>,
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// Write the JSON report here (`-` for stdout).
    #[arg(long, global = true, value_name = "OUT")]
    pub json: Option<PathBuf>,
    /// Also evaluate scalars at a rational point, e.g. `v=3/2`.
    #[arg(long = "q-eval", global = true, value_name = "v=VALUE")]
    pub q_eval: Option<String>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum Part {
    A,
    B,
}

#[derive(Subcommand, Debug)]
pub enum Cmd {
    /// Defining relations, rewriting confluence and the Hopf axioms.
    VerifyRelations {
        #[arg(long, default_value_t = 200)]
        trials: usize,
        #[arg(long, default_value_t = 50)]
        samples: usize,
    },
    /// Weight-space dimensions of a truncated Verma module.
    Verma {
        /// Highest weight in ω-coordinates, e.g. "3" or "1,0".
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
    },
    /// Central character of λ, compared with that of μ when given.
    Chi {
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long, allow_hyphen_values = true)]
        mu: Option<String>,
    },
    /// χ-based dominance and regularity against the classical criteria.
    Dominance {
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long, default_value_t = 6)]
        bound: u32,
    },
    /// Global sections of the line bundle O_q(n) (A1).
    Sections {
        #[arg(long, allow_hyphen_values = true)]
        lambda: i64,
    },
    /// Graded dimensions of Γ(D^λ) for j ≤ J (A1).
    Nu {
        #[arg(long, allow_hyphen_values = true)]
        lambda: i64,
        #[arg(long, default_value_t = 3)]
        j: u32,
    },
    /// ν_j against the classical reference μ_j(1) (A1).
    MuNu {
        #[arg(long, default_value_t = 0)]
        lambda: i64,
        #[arg(long, default_value_t = 3)]
        j: u32,
    },
    /// Trivializations of V ⊗ O_q(n) and the twisting factor (A1).
    Filt1 {
        /// Dimension of V.
        #[arg(long, default_value_t = 2)]
        dim: u32,
        #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
        n: i64,
    },
    /// Central-character separations for λ and the module V.
    Filt2 {
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        /// Highest weight of V.
        #[arg(long)]
        module: String,
        #[arg(long, value_enum, default_value = "a")]
        part: Part,
    },
    /// The graded ring A = ⊕ V_λ* and braided commutativity.
    Repring {
        #[arg(long)]
        check_braided: bool,
        /// Random pairs (A2).
        #[arg(long, default_value_t = 50)]
        n: usize,
    },
    /// Twisting and torsion on A-modules.
    TwistTest,
    /// Product of expressions in D_q, left to right.
    DqMult {
        #[arg(long = "expr", required = true, allow_hyphen_values = true)]
        exprs: Vec<String>,
    },
    /// Reduction of an expression to D_q^λ.
    Dlambda {
        #[arg(long, allow_hyphen_values = true)]
        lambda: i64,
        #[arg(long, allow_hyphen_values = true)]
        expr: String,
    },
    /// Run the check suite from a config file (defaults when omitted).
    RunSuite {
        #[arg(long)]
        config: Option<PathBuf>,
        #[arg(long)]
        workers: Option<usize>,
    },
}
