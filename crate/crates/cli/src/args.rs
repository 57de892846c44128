use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "gvbounds", version, about = "Lower bounds, sphere-graph counts and constructions for error-correcting codes")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Best-of table of explicit lower bounds on A(n,d).
    Bounds(BoundsArgs),
    /// Closed-form sphere-graph statistics, cross-checked by brute force.
    Sphere(SphereArgs),
    /// Sparsity condition curves and their threshold.
    Asym(AsymArgs),
    /// Build a code and compare its size with the bounds.
    Construct(ConstructArgs),
    /// Greedy distance-d colouring of the hypercube.
    Color(ColorArgs),
    /// Recompute the minimum distance of a codebook file.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Greedy,
    Hl,
}

/// Inclusive integer range written `a` or `a..b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Span(pub u64, pub u64);

impl Span {
    pub fn single(self) -> Option<u64> {
        (self.0 == self.1).then_some(self.0)
    }
}

pub fn parse_span(s: &str) -> Result<Span, String> {
    let num = |t: &str| t.trim().parse::<u64>().map_err(|_| format!("bad integer {t:?}"));
    let span = match s.split_once("..") {
        Some((a, b)) => Span(num(a)?, num(b.trim_start_matches('='))?),
        None => {
            let v = num(s)?;
            Span(v, v)
        }
    };
    if span.0 > span.1 {
        return Err(format!("empty range {s:?}"));
    }
    Ok(span)
}

/// `a:b:step` over δ.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DeltaRange {
    pub lo: f64,
    pub hi: f64,
    pub step: f64,
}

pub fn parse_delta_range(s: &str) -> Result<DeltaRange, String> {
    let parts: Vec<&str> = s.split(':').collect();
    let [lo, hi, step] = parts[..] else {
        return Err(format!("expected lo:hi:step, got {s:?}"));
    };
    let num = |t: &str| t.trim().parse::<f64>().map_err(|_| format!("bad number {t:?}"));
    let r = DeltaRange {
        lo: num(lo)?,
        hi: num(hi)?,
        step: num(step)?,
    };
    if r.step.is_nan() || r.step <= 0.0 {
        return Err("step must be positive".into());
    }
    Ok(r)
}

#[derive(Args, Debug, Clone)]
pub struct Common {
    /// Output file, written atomically; stdout when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "csv")]
    pub format: Format,
    /// Cap on enumerated words / graph vertices (table points for `bounds`).
    #[arg(long, default_value_t = 1 << 20, value_parser = clap::value_parser!(u64).range(1..))]
    pub budget: u64,
    #[arg(long)]
    pub seed: Option<u64>,
    /// Worker threads; 0 uses every available core.
    #[arg(long, default_value_t = 0)]
    pub threads: usize,
}

#[derive(Args, Debug)]
pub struct CodeArgs {
    /// Length, or an inclusive range `a..b`.
    #[arg(long, value_parser = parse_span)]
    pub n: Span,
    /// Minimum distance (half the Hamming distance for constant weight).
    #[arg(long, value_parser = parse_span)]
    pub d: Span,
    #[arg(long, value_parser = parse_span, default_value = "2")]
    pub q: Span,
    /// Constant weight; unrestricted codes when absent.
    #[arg(long, value_parser = parse_span)]
    pub w: Option<Span>,
}

#[derive(Args, Debug)]
pub struct BoundsArgs {
    #[command(flatten)]
    pub code: CodeArgs,
    /// Emit every applicable bound instead of the winner per point.
    #[arg(long)]
    pub all: bool,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Args, Debug)]
pub struct SphereArgs {
    #[command(flatten)]
    pub code: CodeArgs,
    /// Require the brute-force cross-check; fail with exit 3 when over budget.
    #[arg(long)]
    pub oracle: bool,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Args, Debug)]
pub struct AsymArgs {
    #[arg(long, default_value_t = 1e-6)]
    pub epsilon: f64,
    #[arg(long, default_value_t = 0.999)]
    pub lambda: f64,
    /// Curve range `lo:hi:step` over δ.
    #[arg(long, value_parser = parse_delta_range, default_value = "0.001:0.5:0.001")]
    pub range: DeltaRange,
    #[arg(long, default_value_t = 1e-4)]
    pub grid_step: f64,
    #[arg(long, default_value_t = 1e-9)]
    pub refine_tol: f64,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Args, Debug)]
pub struct ConstructArgs {
    #[command(flatten)]
    pub code: CodeArgs,
    #[arg(long, value_enum, default_value = "greedy")]
    pub method: Method,
    /// Randomized trials per seed for `--method hl`.
    #[arg(long, default_value_t = 32)]
    pub trials: usize,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Args, Debug)]
pub struct ColorArgs {
    #[arg(long)]
    pub n: u64,
    /// Words within this distance get different colours.
    #[arg(long)]
    pub d: u64,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// Codebook file with a `# n= d= ...` header.
    pub file: PathBuf,
    #[command(flatten)]
    pub common: Common,
}
