use thiserror::Error;

use crate::linalg::RingSpec;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ring mismatch: {left} vs {right}")]
    RingMismatch { left: RingSpec, right: RingSpec },

    #[error("dimension mismatch in {op}: {left:?} vs {right:?}")]
    DimensionMismatch {
        op: &'static str,
        left: (usize, usize),
        right: (usize, usize),
    },

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("{value} is not an element of {ring}")]
    NotInRing { value: String, ring: RingSpec },

    #[error("{op} requires the integers, got {ring}")]
    RequiresIntegers { op: &'static str, ring: RingSpec },

    #[error("differentials do not compose to zero at degree {degree}")]
    NotAComplex { degree: i64 },

    #[error("chain-map square fails at degree {degree}")]
    NotAChainMap { degree: i64 },

    #[error("shape mismatch: {0}")]
    Shape(String),

    #[error("unknown object `{0}`")]
    UnknownObject(String),

    #[error("axiom failure: {0}")]
    AxiomFailure(String),

    #[error("linear system has no exact solution")]
    NoSolution,

    #[error("matrix is not invertible over {0}")]
    NotInvertible(RingSpec),

    #[error("cokernel has torsion and is not a free module")]
    TorsionCokernel,

    #[error("generator family is empty")]
    EmptyGenerators,

    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("unsupported format version {0}")]
    UnsupportedVersion(u64),

    #[error("line {line}: invariant violation: {cause}")]
    Invalid { line: usize, cause: Box<Error> },
}

impl Error {
    pub(crate) fn shape(msg: impl Into<String>) -> Self {
        Error::Shape(msg.into())
    }
}
