use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use tournament_core::analysis::DEFAULT_PRECISION;
use tournament_core::counting::Method;
use tournament_core::sequences::ValidationMode;
use tournament_core::{Kind, LogBase};

#[derive(Debug, Parser)]
#[command(
    name = "tournament",
    version,
    about = "Tournament and Meeussen sequences"
)]
pub struct Cli {
    /// Emit a versioned JSON document instead of plain text.
    #[arg(long, global = true)]
    pub json: bool,

    #[command(subcommand)]
    pub command: Command,
}

/// Where sequences come from: the trailing terms, a file, or standard input.
#[derive(Debug, Args)]
pub struct SequenceInput {
    /// One sequence per non-empty line, terms separated by single spaces.
    #[arg(long, value_name = "PATH", conflicts_with = "terms")]
    pub file: Option<PathBuf>,

    /// Terms of a single sequence. Without terms or --file, reads stdin.
    #[arg(value_name = "TERM")]
    pub terms: Vec<String>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check sequences against the tournament or Meeussen rules.
    Validate {
        #[arg(long, value_enum)]
        kind: KindArg,
        /// Meeussen check: subset-sum counting or inversion of the bijection.
        #[arg(long, value_enum, default_value_t = ModeArg::Dp)]
        mode: ModeArg,
        #[command(flatten)]
        input: SequenceInput,
    },
    /// Map tournament sequences to Meeussen sequences.
    Map {
        #[command(flatten)]
        input: SequenceInput,
    },
    /// Map Meeussen sequences back to tournament sequences.
    Invmap {
        #[command(flatten)]
        input: SequenceInput,
    },
    /// List the candidates of Meeussen sequences.
    Candidates {
        #[command(flatten)]
        input: SequenceInput,
    },
    /// Print every sequence of a given length in lexicographic order.
    Enumerate {
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long)]
        depth: usize,
    },
    /// Count tournament sequences of length n.
    Count {
        #[arg(
            short = 'n',
            value_name = "N",
            required_unless_present = "upto",
            conflicts_with = "upto"
        )]
        n: Option<usize>,
        /// Count every length from 1 to N.
        #[arg(long, value_name = "N")]
        upto: Option<usize>,
        /// With --upto, print "n value" lines.
        #[arg(long, requires = "upto")]
        bfile: bool,
        #[arg(long, value_enum, default_value_t = MethodArg::Fast)]
        method: MethodArg,
    },
    /// Estimate s(n) by sampling random root-to-leaf paths.
    Estimate {
        #[arg(short = 'n', value_name = "N")]
        n: usize,
        #[arg(long, default_value_t = 100_000)]
        samples: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        threads: usize,
    },
    /// Growth constants c(n) for n = 4..N as CSV.
    Growth {
        #[arg(long, value_name = "N")]
        upto: usize,
        /// Base of the logarithm in the (log n)^2 denominator.
        #[arg(long, value_enum, default_value_t = BaseArg::E)]
        base: BaseArg,
        /// Fractional digits per value.
        #[arg(long, default_value_t = 12)]
        digits: usize,
        /// Working precision in bits.
        #[arg(long, default_value_t = DEFAULT_PRECISION)]
        precision: u32,
    },
    /// Recompute s(1..MAX) and compare with the published values.
    OeisCheck {
        #[arg(long, default_value_t = 22, value_parser = clap::value_parser!(u8).range(1..=22))]
        max: u8,
    },
    /// Time each row of the count table up to row N.
    Bench {
        #[arg(long, value_name = "N")]
        upto: usize,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum KindArg {
    Tournament,
    Meeussen,
}

impl From<KindArg> for Kind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::Tournament => Kind::Tournament,
            KindArg::Meeussen => Kind::Meeussen,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum ModeArg {
    Dp,
    Structural,
}

impl From<ModeArg> for ValidationMode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Dp => ValidationMode::Dp,
            ModeArg::Structural => ValidationMode::Structural,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum MethodArg {
    Fast,
    Profile,
    Dfs,
    Poly,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Fast => Method::Fast,
            MethodArg::Profile => Method::Profile,
            MethodArg::Dfs => Method::Dfs,
            MethodArg::Poly => Method::Polynomial,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum BaseArg {
    #[value(name = "2")]
    Two,
    #[value(name = "e")]
    E,
}

impl From<BaseArg> for LogBase {
    fn from(b: BaseArg) -> Self {
        match b {
            BaseArg::Two => LogBase::Two,
            BaseArg::E => LogBase::E,
        }
    }
}
