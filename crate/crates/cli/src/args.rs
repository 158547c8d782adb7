use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "m0chow", version, about = "Relations in the integral Chow ring of M_0(P^r, d), d odd")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,

    /// Worker threads; defaults to the available parallelism.
    #[arg(long, env = "M0CHOW_THREADS", global = true)]
    pub threads: Option<usize>,

    /// Write the output here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    /// Report elapsed time on stderr.
    #[arg(long, global = true)]
    pub timing: bool,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Latex,
    Text,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print the generators of the relation ideal.
    Present(PresentArgs),
    /// Print individual relations alpha_{i,k}^{r,d}.
    Alpha(AlphaArgs),
    /// Run a verification suite.
    Verify(VerifyArgs),
    /// gcd of C(i, a) for 0 < a < i, with its prime-power classification.
    GcdBinomials(GcdArgs),
}

#[derive(Args, Debug)]
pub struct PresentArgs {
    #[arg(long)]
    pub r: Range,
    #[arg(long)]
    pub d: Range,
    /// Include every alpha_{i,k}, not only the reduced set.
    #[arg(long)]
    pub full: bool,
    /// Skip the cross-check against the oracle path.
    #[arg(long)]
    pub no_check: bool,
}

#[derive(Args, Debug)]
pub struct AlphaArgs {
    #[arg(long)]
    pub i: Range,
    #[arg(long)]
    pub k: Range,
    #[arg(long)]
    pub r: Range,
    #[arg(long)]
    pub d: Range,
    #[arg(long)]
    pub no_check: bool,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(value_enum)]
    pub kind: Kind,
    #[arg(long, default_value = "1..3")]
    pub r: Range,
    #[arg(long, default_value = "1..9")]
    pub d: Range,
    /// Envelope indices for the polynomiality-in-d part of `identities`.
    #[arg(long, default_value = "1..3")]
    pub i: Range,
    /// Conjecture: check generation only, not minimality.
    #[arg(long)]
    pub weak: bool,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Cross,
    Identities,
    Reduction,
    Conjecture,
    Rational,
}

impl Kind {
    pub fn name(self) -> &'static str {
        match self {
            Kind::Cross => "cross",
            Kind::Identities => "identities",
            Kind::Reduction => "reduction",
            Kind::Conjecture => "conjecture",
            Kind::Rational => "rational",
        }
    }
}

#[derive(Args, Debug)]
pub struct GcdArgs {
    #[arg(long)]
    pub i: Range,
}

/// A single value `n` or an inclusive range `a..b`.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct Range {
    pub lo: u32,
    pub hi: u32,
}

impl FromStr for Range {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let num = |t: &str| t.trim().parse::<u32>().map_err(|_| format!("not a non-negative integer: {t:?}"));
        let (lo, hi) = match s.split_once("..") {
            Some((a, b)) => (num(a)?, num(b.strip_prefix('=').unwrap_or(b))?),
            None => {
                let n = num(s)?;
                (n, n)
            }
        };
        if lo > hi {
            return Err(format!("empty range {s:?}"));
        }
        Ok(Range { lo, hi })
    }
}

impl Range {
    pub fn values(self) -> Vec<u32> {
        (self.lo..=self.hi).collect()
    }

    pub fn is_single(self) -> bool {
        self.lo == self.hi
    }

    /// The odd values in range. A single even value, or a range with no odd
    /// value, is an error.
    pub fn odd_values(self) -> Result<Vec<u32>, String> {
        if self.is_single() && self.lo.is_multiple_of(2) {
            return Err(format!("degree d = {} is even; only odd d is supported", self.lo));
        }
        let v: Vec<u32> = self.values().into_iter().filter(|d| d % 2 == 1).collect();
        if v.is_empty() {
            return Err(format!("range {}..{} contains no odd degree", self.lo, self.hi));
        }
        Ok(v)
    }
}
