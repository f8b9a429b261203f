use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Errors raised by the library. Every variant except [`Error::Parse`] is a
/// violated precondition of the operation that raised it.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("slope representative must be nonzero")]
    ZeroVector,
    #[error("seminorm must be a norm, got {0}")]
    NotANorm(&'static str),
    #[error("bound not applicable: no multiplicity certificate (Z_x hypothesis) was supplied")]
    HypothesisNotCertified,
    #[error("s(X0) must be a positive integer, got {0}")]
    NonPositiveMinimum(String),
    #[error("torus knot parameters must satisfy p, q >= 2 and gcd(p, q) = 1, got ({0}, {1})")]
    NotTorusKnot(u64, u64),
    #[error("triangle group orders must be >= 1")]
    ZeroOrder,
    #[error("generator index {index} out of range for {count} generators")]
    GeneratorOutOfRange { index: usize, count: usize },
    #[error("representations have different numbers of generators ({0} vs {1})")]
    GeneratorCountMismatch(usize, usize),
    #[error("invalid component index: {0}")]
    InvalidComponent(String),
    #[error("all generator images are central; dihedral test is undefined")]
    CentralImage,
    #[error("orbifold must be closed")]
    NotClosed,
    #[error("orbifold must be hyperbolic")]
    NotHyperbolic,
    #[error("invalid exceptional fiber ({0}, {1}): need gcd = 1 and 0 < beta < alpha")]
    InvalidFiber(i64, i64),
    #[error("invalid orbifold: {0}")]
    InvalidOrbifold(String),
    #[error("cable space type needs n >= 2, got n = {0}")]
    InvalidCable(String),
    #[error("slope {0} is not at distance 1 from the cable fiber slope")]
    NotUnitDistance(String),
    #[error("vertices {0} and {1} are not joined by an edge")]
    NotAdjacent(String, String),
    #[error("malformed partial-edge weight {0}: need 0 <= num <= den, den > 0")]
    BadWeight(String),
    #[error("edge path is not chained: {0}")]
    BrokenPath(String),
    #[error("edge sign must be +1 or -1, got {0}")]
    BadSign(i64),
    #[error("pretzel family needs |n| >= 3, got {0}")]
    FamilyParameter(String),
    #[error("edge-path template needs m >= {min}, got {m}")]
    TemplateParameter { m: String, min: i64 },
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// True for input that does not parse, false for well-formed input that
    /// violates a precondition.
    pub fn is_schema(&self) -> bool {
        matches!(self, Error::Parse(_))
    }
}
