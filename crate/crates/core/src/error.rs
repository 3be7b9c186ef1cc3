use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Errors raised by the library.
///
/// Variants fall in two groups: malformed input (`Format`, `UnknownPoint`,
/// ...) and mathematical failures that carry a witness. [`Error::is_usage`]
/// tells them apart.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("format error: {0}")]
    Format(String),
    #[error("unknown point `{0}`")]
    UnknownPoint(String),
    #[error("duplicate point label `{0}`")]
    DuplicateLabel(String),
    #[error("carrier has {0} points, at most {max} are supported", max = crate::bits::MAX_POINTS)]
    CarrierTooLarge(usize),
    #[error("subset mask {0:#x} is not contained in the carrier")]
    NotSubset(u32),
    #[error("carrier mismatch: {0}")]
    CarrierMismatch(String),

    #[error("not a topology: {0}")]
    NotTopology(String),
    #[error("not a base: point {x} lies in {u} and {v} but no member fits between")]
    InvalidBase { x: String, u: String, v: String },
    #[error("not a base: point {0} is not covered")]
    Uncovered(String),
    #[error("closure axiom `{axiom}` fails at {witness}")]
    ClosureAxiom { axiom: &'static str, witness: String },
    #[error("not a preorder: {0}")]
    NotPreorder(String),
    #[error("not a partial order: {a} and {b} are distinct but equivalent")]
    NotAntisymmetric { a: String, b: String },
    #[error("invalid neighborhood system: {0} is not in its own kernel")]
    InvalidNeighborhood(String),
    #[error("space is not Hausdorff: {a} and {b} cannot be separated")]
    NotHausdorff { a: String, b: String },
    #[error("label `{0}` is already in use")]
    LabelClash(String),
    #[error("invalid map: {0}")]
    InvalidMap(String),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("set {0} is not open")]
    NotOpen(String),

    #[error("improper filter: the base has empty intersection")]
    ImproperFilter,
    #[error("trace is not a filter: the kernel misses {0}")]
    EmptyTrace(String),

    #[error("not a pseudometric: {0}")]
    Pseudometric(String),
    #[error("empty set where a nonempty one is required")]
    EmptySet,
    #[error("invalid relation chain: {0}")]
    Chain(String),
    #[error("matrix is not stochastic: {0}")]
    NotStochastic(String),
    #[error("no convergence after {iterations} iterations: {diagnostic}")]
    NonConvergence {
        iterations: usize,
        diagnostic: String,
        trace: Vec<f64>,
    },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("syntax error at {position}: unexpected {found}")]
    Syntax { position: usize, found: String },
    #[error("theory is inconsistent: the algebra degenerates (top = bottom)")]
    Inconsistent,
    #[error("too large to enumerate: {0}")]
    TooLarge(String),
}

impl Error {
    /// True for malformed input, false for a mathematical failure.
    pub fn is_usage(&self) -> bool {
        matches!(
            self,
            Error::Format(_)
                | Error::UnknownPoint(_)
                | Error::DuplicateLabel(_)
                | Error::CarrierTooLarge(_)
                | Error::NotSubset(_)
                | Error::CarrierMismatch(_)
                | Error::InvalidMap(_)
                | Error::InvalidPartition(_)
                | Error::LabelClash(_)
                | Error::InvalidArgument(_)
                | Error::Syntax { .. }
                | Error::TooLarge(_)
        )
    }
}
