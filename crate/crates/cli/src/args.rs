use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Dot,
}

/// Everything that determines one run. Identical configurations produce
/// byte-identical output.
#[derive(Debug, Clone, Parser)]
#[command(name = "weyl", version, about = "Weyl groupoids of higher braiding tensors and abelian chain complexes")]
pub struct RunConfig {
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Largest m tried when solving for a Cartan entry [default: 1000, 64 for search].
    #[arg(long, global = true)]
    pub m_max: Option<u32>,

    /// Object limit for orbit closures [default: 100000, 5000 for search].
    #[arg(long, global = true)]
    pub max_objects: Option<usize>,

    /// Reflection rounds allowed for the real root closure.
    #[arg(long, global = true, default_value_t = weyl_core::rank2::DEFAULT_DEPTH_MAX)]
    pub depth_max: usize,

    /// Seed for randomized runs.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,

    #[command(subcommand)]
    pub command: Command,
}

/// A tensor given as a JSON file or inline JSON.
#[derive(Debug, Clone, Args)]
#[group(required = true, multiple = false)]
pub struct TensorSource {
    #[arg(long)]
    pub tensor: Option<PathBuf>,
    #[arg(long)]
    pub inline: Option<String>,
}

/// A quiddity cycle given directly or extracted from a rank-2 tensor.
#[derive(Debug, Clone, Args)]
#[group(required = true, multiple = false)]
pub struct CycleSource {
    /// Entries separated by commas or spaces, e.g. "1,4,1,2,2,2".
    #[arg(long, allow_hyphen_values = true)]
    pub cycle: Option<String>,
    #[arg(long)]
    pub tensor: Option<PathBuf>,
    #[arg(long)]
    pub inline: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Identity {
    Recursion,
    Divisibility,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Generalized Cartan matrix.
    Cartan(TensorSource),
    /// chi(v_m), chi(w_m), chi(s_m) for a range of m. Directions are 1-based.
    Diagnostics {
        #[command(flatten)]
        source: TensorSource,
        #[arg(long, default_value_t = 1)]
        l: usize,
        #[arg(long, default_value_t = 2)]
        j: usize,
        #[arg(long, default_value_t = 0)]
        from: u64,
        #[arg(long, default_value_t = 3)]
        to: u64,
    },
    /// Reflection rho_l of a tensor.
    Reflect {
        #[command(flatten)]
        source: TensorSource,
        #[arg(long)]
        l: usize,
    },
    /// Reflection closure with the itemized Cartan graph axiom report.
    Orbit(TensorSource),
    /// Labelled Dynkin diagram of a degree-2 tensor.
    Dynkin(TensorSource),
    /// Quiddity cycle of a rank-2 Weyl groupoid.
    Quiddity {
        #[command(flatten)]
        source: TensorSource,
        /// Starting object (0-based, in discovery order).
        #[arg(long, default_value_t = 0)]
        object: usize,
    },
    /// Frieze pattern of a quiddity cycle.
    Frieze(CycleSource),
    /// Polygon triangulation realizing a quiddity cycle.
    Triangulate(CycleSource),
    /// Real roots of every object with the R1-R4 report.
    Roots(TensorSource),
    /// Symbolic certificates for the Rosso polynomials.
    Verify {
        #[arg(value_enum)]
        identity: Identity,
        #[arg(long)]
        degree: usize,
        #[arg(long, default_value_t = 8)]
        upto: u64,
    },
    /// Randomized survey of rank-2 orbits.
    Search {
        #[arg(long, default_value_t = 200)]
        samples: usize,
        #[arg(long, default_value_t = 4)]
        degree: usize,
        #[arg(long, default_value_t = 2)]
        modulus_min: u32,
        #[arg(long, default_value_t = 24)]
        modulus_max: u32,
    },
    /// Abelian bar complexes.
    #[command(subcommand)]
    Complex(ComplexCommand),
}

#[derive(Debug, Clone, Subcommand)]
pub enum ComplexCommand {
    /// Boundary of a chain such as "[a|b] - 2*[a,b||c]".
    Boundary {
        #[arg(long, allow_hyphen_values = true)]
        expr: String,
        #[arg(long, default_value = "Z^6")]
        group: String,
    },
    /// Recompute the tabulated boundaries of small generators.
    VerifyTable,
    /// Check the explicit boundary witnesses for symmetrized-cycle identities.
    Witnesses,
    /// Symmetrized cycle {args}_lambda.
    Symcycle {
        /// Composition, e.g. "2,2".
        #[arg(long)]
        lambda: String,
        /// Arguments, e.g. "a,b" or "(1,0),(0,1)".
        #[arg(long)]
        args: String,
        #[arg(long, default_value = "Z^6")]
        group: String,
    },
    /// Decide whether a chain is a boundary over a finite group.
    Membership {
        #[arg(long)]
        group: String,
        #[arg(long, default_value_t = 1)]
        level: usize,
        #[arg(long, allow_hyphen_values = true)]
        expr: String,
    },
    /// Homology group H^k_n of a finite group.
    Homology {
        #[arg(long)]
        group: String,
        #[arg(long, default_value_t = 1)]
        level: usize,
        #[arg(long)]
        degree: usize,
    },
    /// Check one instance of the form and inverse identities in homology.
    Conjecture {
        #[arg(long)]
        group: String,
        #[arg(long)]
        lambda: String,
        /// Slot receiving the factors (1-based).
        #[arg(long, default_value_t = 1)]
        index: usize,
        #[arg(long)]
        args: String,
        #[arg(long)]
        betas: String,
    },
}
