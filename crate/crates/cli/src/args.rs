use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use schur_core::cayley::Method;
use schur_core::construct::Rule;

#[derive(Parser, Debug)]
#[command(
    name = "schur",
    version,
    about = "Schur-ring closures and cubic GRRs of dihedral groups"
)]
pub struct Cli {
    /// Output format; `dot` is only valid for `export`, which defaults to it
    #[arg(long, global = true, value_enum)]
    pub output: Option<Format>,

    /// Largest vertex count the automorphism oracle accepts
    #[arg(long, global = true, env = "SCHUR_ORACLE_LIMIT", default_value_t = 64)]
    pub oracle_limit: usize,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Closure,
    Oracle,
    Both,
}

impl From<Mode> for Method {
    fn from(m: Mode) -> Self {
        match m {
            Mode::Closure => Method::Closure,
            Mode::Oracle => Method::Oracle,
            Mode::Both => Method::Both,
        }
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum RuleArg {
    #[value(name = "3r-2s")]
    ThreeRTwoS,
    #[value(name = "3r+s")]
    ThreeRPlusS,
}

impl From<RuleArg> for Rule {
    fn from(r: RuleArg) -> Self {
        match r {
            RuleArg::ThreeRTwoS => Rule::ThreeRTwoS,
            RuleArg::ThreeRPlusS => Rule::ThreeRPlusS,
        }
    }
}

#[derive(Args, Debug, Clone)]
#[group(required = true, multiple = false)]
pub struct GroupArgs {
    /// Dihedral group D_n of order 2n
    #[arg(long, value_name = "N")]
    pub dihedral: Option<u32>,
    /// Cyclic group Z_n
    #[arg(long, value_name = "N")]
    pub cyclic: Option<u32>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Compute the Schur-ring closure <<C>> of a set
    Closure {
        #[command(flatten)]
        group: GroupArgs,
        /// Comma-separated elements, e.g. a,ab,ab^3,b,b^6
        #[arg(long)]
        set: String,
        /// Accepted for symmetry with `export`; the closure never needs a generating set
        #[arg(long)]
        allow_nongenerating: bool,
    },
    /// Check a parameter set (n, r, s, t) and certify its cubic Cayley graph
    Certify {
        #[arg(long)]
        n: u32,
        /// r,s,t
        #[arg(long, value_delimiter = ',', required = true)]
        rst: Vec<u32>,
        #[arg(long, value_enum, default_value = "3r-2s")]
        rule: RuleArg,
        /// Defaults to `both` for n <= 32 and `closure` above
        #[arg(long, value_enum)]
        mode: Option<Mode>,
    },
    /// Print the tabulated (r, s, t) for every prime 7 <= p <= max
    Table {
        #[arg(long, default_value_t = 97)]
        max: u32,
        /// Certify every row by closure
        #[arg(long)]
        certify: bool,
    },
    /// Write a colour graph in Graphviz DOT
    Export {
        #[command(flatten)]
        group: GroupArgs,
        /// Connecting set; each element gets its own colour unless --by-closure
        #[arg(
            long,
            conflicts_with = "partition",
            required_unless_present = "partition"
        )]
        set: Option<String>,
        /// Colour by the basic sets of the closure of --set
        #[arg(long, requires = "set")]
        by_closure: bool,
        /// Basic sets separated by ';', e.g. "1; g,g^5; g^3,g^7; g^2,g^6; g^4"
        #[arg(long)]
        partition: Option<String>,
        #[arg(long)]
        allow_nongenerating: bool,
        /// Write to a file instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Re-run the reference computations and report pass/fail per item
    Reproduce {
        /// Restrict to item groups: closure, schur, certify, inherit, table, oracle
        #[arg(long, value_delimiter = ',')]
        only: Vec<String>,
        /// Skip items whose group D_n has n above this bound
        #[arg(long)]
        max_n: Option<u32>,
    },
}
