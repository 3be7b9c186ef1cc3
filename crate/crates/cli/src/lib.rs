//! Command-line front end for `fintopo`.
//!
//! [`run`] parses the arguments, dispatches to the library and writes the
//! report. Exit codes: 0 on success, 1 when the input is well formed but a
//! check fails (the report names a witness), 2 on usage or format errors.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde_json::Value;

mod commands;
pub mod render;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "fintopo",
    version,
    about = "Finite topology, pseudometrics, approximation and propositional logic"
)]
pub struct Cli {
    /// Emit JSON instead of aligned text.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Reports on a finite space.
    #[command(subcommand)]
    Space(SpaceCmd),
    /// Validate generators and metric data.
    #[command(subcommand)]
    Check(CheckCmd),
    /// Properties of maps between spaces.
    #[command(subcommand)]
    Map(MapCmd),
    /// Construct new spaces; prints a space file.
    #[command(subcommand)]
    Build(BuildCmd),
    /// The lattice of opens as a locale.
    #[command(subcommand)]
    Locale(LocaleCmd),
    /// Pseudometric constructions.
    #[command(subcommand)]
    Metric(MetricCmd),
    /// Fixed-point solvers on real vectors.
    #[command(subcommand)]
    Solve(SolveCmd),
    /// Square-root iteration and kernel polynomials.
    #[command(subcommand)]
    Approx(ApproxCmd),
    /// Propositional theories and their Lindenbaum algebras.
    #[command(subcommand)]
    Logic(LogicCmd),
    /// Convergence of filters on a space.
    #[command(subcommand)]
    Filter(FilterCmd),
}

#[derive(Debug, Args)]
pub struct Input {
    /// Input file.
    #[arg(long = "in", value_name = "FILE")]
    pub input: PathBuf,
}

#[derive(Debug, Subcommand)]
pub enum SpaceCmd {
    /// Opens, closure/interior table, separation, specialization order and
    /// neighborhood bases.
    Report {
        #[command(flatten)]
        input: Input,
        /// Print the canonical space file instead of the report.
        #[arg(long)]
        emit: bool,
    },
}

#[derive(Debug, Subcommand)]
pub enum CheckCmd {
    /// Is the family (`points:` and `member:` lines) a base?
    Base(Input),
    /// Topology generated by the family as a subbase.
    Subbase(Input),
    /// Closure operator axioms for a `cl: A -> B` file.
    ClosureOp(Input),
    /// Pseudometric axioms for a CSV distance matrix.
    Pmetric(Input),
    /// Chain axioms for a relation-chain file.
    Chain(Input),
}

#[derive(Debug, Args)]
pub struct MapArgs {
    #[arg(long, value_name = "FILE")]
    pub source: PathBuf,
    #[arg(long, value_name = "FILE")]
    pub target: PathBuf,
    /// `a -> b` lines, one per source point.
    #[arg(long = "map", value_name = "FILE")]
    pub map: PathBuf,
}

#[derive(Debug, Subcommand)]
pub enum MapCmd {
    /// Preimage of every target open, with a witness when one fails.
    Continuity(MapArgs),
    /// Bijective, continuous, and continuous inverse.
    Homeo(MapArgs),
}

#[derive(Debug, Args)]
pub struct TwoSpaces {
    #[arg(long, value_name = "FILE")]
    pub left: PathBuf,
    #[arg(long, value_name = "FILE")]
    pub right: PathBuf,
}

#[derive(Debug, Subcommand)]
pub enum BuildCmd {
    /// Product topology; points are labelled `(a,b)`.
    Product(TwoSpaces),
    /// Subspace topology on the given points.
    Subspace {
        #[command(flatten)]
        input: Input,
        /// Space-separated labels.
        #[arg(long)]
        subset: String,
    },
    /// Disjoint sum; labels must not overlap.
    Sum(TwoSpaces),
    /// Quotient topology by a partition.
    Quotient {
        #[command(flatten)]
        input: Input,
        /// `block:` lines; unlisted points stay alone.
        #[arg(long, value_name = "FILE")]
        partition: PathBuf,
    },
    /// One-point extension of a Hausdorff space.
    Onepoint {
        #[command(flatten)]
        input: Input,
        /// Label of the added point.
        #[arg(long, default_value = "inf")]
        label: String,
    },
    /// Alexandrov topology of a `le: a b` poset file.
    FromPoset(Input),
    /// Topology whose closed sets are the fixed points of a closure file.
    FromClosure(Input),
    /// Scott topology of a poset file.
    Scott(Input),
}

#[derive(Debug, Subcommand)]
pub enum LocaleCmd {
    /// Heyting implication `A → B` and pseudo-complement of `A`.
    Implication {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
    },
    /// Points of the locale of opens and the map from space points.
    Points(Input),
    /// Irreducible closed sets and their generic points.
    Sober(Input),
    /// Open filters against saturated compact sets.
    HofmannMislove(Input),
}

#[derive(Debug, Subcommand)]
pub enum MetricCmd {
    /// Hausdorff distance between two nonempty subsets, both ways.
    Hausdorff {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        c: String,
        #[arg(long)]
        d: String,
    },
    /// Identify points at distance zero.
    Quotient(Input),
    /// Greedy cover by open balls of radius `--eps`.
    Net {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        eps: f64,
    },
    /// Pseudometric of a relation chain.
    Chain(Input),
    /// Rank ultrametric between two subsets.
    Ultrarank {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value = "")]
        a: String,
        #[arg(long, default_value = "")]
        b: String,
    },
}

#[derive(Debug, Subcommand)]
pub enum SolveCmd {
    /// Iterate a built-in map or an affine map `x ↦ Mx + c` to a fixed point.
    Fixpoint {
        /// `cos`, `sin`, `half` or `affine:<a>,<b>` applied per coordinate.
        #[arg(long, conflicts_with = "matrix")]
        function: Option<String>,
        /// CSV matrix `M`.
        #[arg(long, value_name = "FILE")]
        matrix: Option<PathBuf>,
        /// Offset `c` for `--matrix`, space-separated.
        #[arg(long, requires = "matrix")]
        offset: Option<String>,
        /// Start vector, space-separated.
        #[arg(long, default_value = "0")]
        x0: String,
        #[arg(long, default_value = "linf")]
        norm: String,
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
        #[arg(long, default_value_t = 10_000)]
        max_iter: usize,
    },
    /// Stationary distribution of a row-stochastic CSV matrix.
    Pagerank {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
        #[arg(long, default_value_t = 1000)]
        max_iter: usize,
        /// Start distribution, space-separated; uniform by default.
        #[arg(long)]
        start: Option<String>,
    },
}

#[derive(Debug, Subcommand)]
pub enum ApproxCmd {
    /// Iterates `f ← f + (t − f²)/2` on a grid of `[0, 1]`.
    Sqrt {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 11)]
        points: usize,
    },
    /// Kernel polynomial `Pₙf` on a grid, with its sup error.
    Weierstrass {
        /// `abs-half`, `sin-scaled`, `const:<c>` or `poly:<c0>,<c1>,...`.
        #[arg(long)]
        function: String,
        #[arg(long)]
        n: u32,
        #[arg(long, default_value_t = fintopo::approx::DEFAULT_PANELS)]
        panels: usize,
        #[arg(long, default_value_t = 0.1)]
        from: f64,
        #[arg(long, default_value_t = 0.9)]
        to: f64,
        #[arg(long, default_value_t = 81)]
        points: usize,
    },
    /// Kernel mass outside `[−δ, δ]` against its bound.
    KernelRatio {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        delta: f64,
        #[arg(long, default_value_t = fintopo::approx::DEFAULT_PANELS)]
        panels: usize,
    },
}

#[derive(Debug, Subcommand)]
pub enum LogicCmd {
    /// Satisfiability, with a falsifying witness when it fails.
    Consistent(Input),
    /// Model induced by an ultrafilter of the Lindenbaum algebra.
    Model(Input),
    /// Elements, atoms and Boolean laws of the Lindenbaum algebra.
    Algebra(Input),
    /// Ultrafilter representation of the algebra.
    Stone(Input),
}

#[derive(Debug, Args)]
#[group(id = "filter-source", required = true, multiple = false, args = ["kernel", "filter"])]
pub struct FilterArgs {
    #[command(flatten)]
    pub input: Input,
    /// Kernel of the principal filter, space-separated labels.
    #[arg(long)]
    pub kernel: Option<String>,
    /// File with a `kernel:` line.
    #[arg(long, value_name = "FILE")]
    pub filter: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum FilterCmd {
    /// Points the filter converges to.
    Limits(FilterArgs),
    /// Accumulation points.
    Acc(FilterArgs),
    /// Is the filter an ultrafilter?
    Ultra(FilterArgs),
    /// Trace of the filter on a subset.
    Trace {
        #[command(flatten)]
        filter: FilterArgs,
        #[arg(long)]
        subset: String,
    },
}

/// What a command produced.
#[derive(Debug)]
pub struct Outcome {
    pub text: String,
    pub json: Value,
    /// False when a check failed; the report carries the witness.
    pub ok: bool,
}

impl Outcome {
    pub fn ok(text: String, json: Value) -> Self {
        Outcome { text, json, ok: true }
    }

    pub fn verdict(ok: bool, text: String, json: Value) -> Self {
        Outcome { text, json, ok }
    }
}

#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Math(String),
}

impl From<fintopo::Error> for Failure {
    fn from(e: fintopo::Error) -> Self {
        if e.is_usage() {
            Failure::Usage(e.to_string())
        } else {
            Failure::Math(e.to_string())
        }
    }
}

pub type CmdResult = std::result::Result<Outcome, Failure>;

pub(crate) fn read(path: &Path) -> std::result::Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))
}

/// Runs one invocation and returns the exit code.
pub fn run<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{text}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{text}");
                    EXIT_USAGE
                }
            };
        }
    };
    let json = cli.json;
    match commands::dispatch(cli.command) {
        Ok(outcome) => {
            let written = if json {
                serde_json::to_string_pretty(&outcome.json)
                    .map(|s| s + "\n")
                    .unwrap_or_default()
            } else {
                outcome.text
            };
            let _ = out.write_all(written.as_bytes());
            if outcome.ok {
                EXIT_OK
            } else {
                EXIT_FAILED
            }
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Math(msg)) => {
            let _ = writeln!(err, "failed: {msg}");
            EXIT_FAILED
        }
    }
}
