use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid root system {family} with rank {rank}")]
    InvalidRootSystem { family: String, rank: usize },

    #[error("invalid Hermitian family parameters: {0}")]
    InvalidParameters(String),

    #[error("lattice basis is linearly dependent")]
    DependentBasis,

    #[error("lattice rank mismatch: {0} vs {1}")]
    RankMismatch(usize, usize),

    #[error("not a sublattice")]
    NotSublattice,

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("restricted root classification failed for root {0}")]
    Classification(String),

    #[error("r' = {got} out of range 1..={max}")]
    SubtubeOutOfRange { got: usize, max: usize },

    #[error("unsupported group form: {0}")]
    UnsupportedForm(String),

    #[error("operation requires a tube-type model")]
    NonTube,

    #[error("element does not lie in m+ of the model: {0}")]
    NotInModel(String),

    #[error("singular element")]
    Singular,

    #[error("zero element")]
    ZeroElement,

    #[error("rank {got} out of range 0..={max}")]
    RankOutOfRange { got: usize, max: usize },

    #[error("genus must be at least 2, got {0}")]
    InvalidGenus(i64),

    #[error("lambda must be 0 for this query")]
    NonzeroLambda,

    #[error("malformed input: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
