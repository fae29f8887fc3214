use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use superskein::algebra::gauge::CommutatorSign;
use superskein::skein::{Mode, Normalization, MAX_HOMFLY_CROSSINGS};

#[derive(Debug, Parser)]
#[command(name = "superskein", version, about = "Exact su(M|N) identities and skein-recursive link invariants")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute one invariant of a braid closure or a PD diagram.
    Invariant {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        run: RunArgs,
        #[arg(long, value_enum, default_value_t = Kind::Homfly)]
        kind: Kind,
    },
    /// Run a verification suite; exits 4 if any check fails.
    Verify {
        #[command(flatten)]
        run: RunArgs,
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
        /// Commutator sign of the field strength used by the field-equation check.
        #[arg(long, value_enum, default_value_t = FieldSign::FromAction)]
        field_sign: FieldSign,
        /// Random samples per randomized algebra check.
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Corpus used by the skein suite (default: the bundled corpus).
        #[arg(long)]
        corpus: Option<PathBuf>,
    },
    /// Compute an invariant for every entry of a JSON-lines corpus.
    Corpus {
        /// Corpus file (default: the bundled corpus).
        file: Option<PathBuf>,
        #[command(flatten)]
        run: RunArgs,
        #[arg(long, value_enum, default_value_t = Kind::Homfly)]
        kind: Kind,
    },
    /// Print α, β, z, t, δ for (M, N) and their ε-expansions.
    Expand {
        #[command(flatten)]
        run: RunArgs,
    },
    /// Dump the skein resolution tree of a diagram.
    Tree {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        run: RunArgs,
    },
}

#[derive(Debug, Args)]
pub struct InputArgs {
    /// Braid word, e.g. "1 -2 1 -2"; the empty word is allowed.
    #[arg(long, conflicts_with = "pd_file")]
    pub braid: Option<String>,
    /// Strand count (default: one more than the largest generator).
    #[arg(long, requires = "braid")]
    pub strands: Option<usize>,
    /// Diagram JSON file.
    #[arg(long)]
    pub pd_file: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct RunArgs {
    #[arg(long = "M")]
    pub m: Option<i64>,
    #[arg(long = "N")]
    pub n: Option<i64>,
    #[arg(long, value_enum, default_value_t = ModeArg::QExact)]
    pub mode: ModeArg,
    /// Default: unit for homfly and jones, paper for w and sl.
    #[arg(long, value_enum)]
    pub normalization: Option<NormArg>,
    /// Series order in ε for paper-literal mode and expansions.
    #[arg(long, default_value_t = 2)]
    pub order: usize,
    #[arg(long, default_value_t = MAX_HOMFLY_CROSSINGS)]
    pub max_crossings: usize,
    #[arg(long, value_enum, default_value_t = Output::Json)]
    pub output: Output,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Homfly,
    W,
    Jones,
    /// W together with the α, β, z parameters it was computed with.
    Sl,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Algebra,
    Skein,
    Perturbative,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FieldSign {
    AsPrinted,
    FromAction,
}

impl From<FieldSign> for CommutatorSign {
    fn from(s: FieldSign) -> Self {
        match s {
            FieldSign::AsPrinted => CommutatorSign::AsPrinted,
            FieldSign::FromAction => CommutatorSign::FromAction,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    QExact,
    PaperLiteral,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::QExact => Mode::QExact,
            ModeArg::PaperLiteral => Mode::PaperLiteral,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum NormArg {
    Unit,
    Paper,
}

impl From<NormArg> for Normalization {
    fn from(n: NormArg) -> Self {
        match n {
            NormArg::Unit => Normalization::Unit,
            NormArg::Paper => Normalization::Paper,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Output {
    Json,
    Table,
}
