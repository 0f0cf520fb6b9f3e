use clap::{Parser, Subcommand};

/// Exact computations in the equivariant cohomology of regular nilpotent
/// Hessenberg varieties.
#[derive(Debug, Parser)]
#[command(name = "hesscoh", version)]
pub struct Cli {
    /// Emit one JSON document instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Permutations fixed by the circle action on Hess(N, h).
    FixedPoints {
        /// Hessenberg function, e.g. 2,3,3.
        #[arg(long)]
        h: Option<String>,
        /// List the Peterson fixed points w_A for this n instead.
        #[arg(long)]
        n: Option<usize>,
    },
    /// Restriction of an equivariant Schubert class to a fixed point.
    Billey {
        #[arg(long)]
        cartan: String,
        /// Reduced word (1,2,1), digit string (121), one-line permutation
        /// in type A, or e.
        #[arg(long)]
        v: String,
        /// As for --v; a word given with commas is used as the reduced word.
        #[arg(long)]
        w: String,
        /// Also print the specialization sending every simple root to t.
        #[arg(long)]
        pi: bool,
    },
    /// Peterson Schubert classes.
    #[command(subcommand)]
    Peterson(PetersonCommand),
    /// The polynomials f_{i,j}.
    Fij {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        i: Option<usize>,
        #[arg(long)]
        j: Option<usize>,
        /// Set t = 0.
        #[arg(long = "t0", alias = "ordinary")]
        ordinary: bool,
    },
    /// The generators f_{h(j),j} of the ideal for h.
    Ideal {
        #[arg(long)]
        h: String,
        /// Set t = 0.
        #[arg(long = "t0", alias = "ordinary")]
        ordinary: bool,
    },
    /// Hilbert function of the quotient and the regular-sequence test.
    Hilbert {
        #[arg(long)]
        h: String,
        /// Work in Q[x, t] instead of Q[x].
        #[arg(long)]
        equivariant: bool,
        #[arg(long)]
        max_degree: Option<u32>,
        #[arg(long)]
        allow_large: bool,
    },
    /// All certificates for one Hessenberg function.
    Verify {
        #[arg(long)]
        h: String,
        #[arg(long)]
        equivariant: bool,
        #[arg(long)]
        allow_large: bool,
    },
    /// All certificates for every Hessenberg function of size n.
    VerifyAll {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        equivariant: bool,
        /// Required for n >= 7.
        #[arg(long)]
        allow_large: bool,
    },
    /// Checks of the Peterson presentation, in type A (--n) or any type (--cartan).
    PetersonPresentation {
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        cartan: Option<String>,
    },
    /// The recursion x_0 = 1, x_m = 1 - c / x_{m-1}.
    Cfrac {
        #[arg(long)]
        c: String,
        #[arg(long, default_value_t = 100)]
        m: usize,
    },
}

#[derive(Debug, Subcommand)]
pub enum PetersonCommand {
    /// Restrictions of p_{v_A} to every w_B.
    Class {
        #[arg(long)]
        n: usize,
        /// Subset of [n-1], e.g. 1,3 (empty for the unit).
        #[arg(long = "A", allow_hyphen_values = true)]
        a: String,
    },
    /// Structure constants of p_{s_i} · p_{v_A}.
    Monk {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        i: usize,
        #[arg(long = "A")]
        a: String,
    },
    /// Product of simple classes against p_{v_A}.
    Giambelli {
        #[arg(long)]
        n: usize,
        #[arg(long = "A")]
        a: String,
    },
    /// Peterson classes in any Lie type.
    General {
        #[arg(long)]
        cartan: String,
        /// Subset of the simple roots.
        #[arg(long = "K")]
        k: String,
        /// Also expand p_{s_i} · p_{v_K}.
        #[arg(long)]
        i: Option<usize>,
        /// Largest Weyl group to enumerate.
        #[arg(long)]
        budget: Option<usize>,
    },
}
