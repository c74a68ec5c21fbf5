use thiserror::Error;

use crate::words::DegreeVector;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty word")]
    EmptyWord,
    #[error("degree vector must be nonzero")]
    ZeroDegree,
    #[error("degree {0} has total degree below 2")]
    DegreeTooSmall(DegreeVector),
    #[error("degree {0} needs at least two nonzero entries")]
    NeedsTwoLetters(DegreeVector),
    #[error("alphabet size must be at least 1")]
    EmptyAlphabet,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("cyclotomic polynomial index must be positive")]
    CyclotomicIndex,
    #[error("form has negative multiplicity for Phi_{0}; it is not a polynomial")]
    NotPolynomial(u64),
    #[error("field context mismatch: {0}")]
    ContextMismatch(String),
    #[error("order of zero is undefined")]
    ZeroOrder,
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("braiding entries must be nonzero (entry q[{0}][{1}])")]
    ZeroEntry(usize, usize),
    #[error("hypothesis violated: P_{0}(q) != 0")]
    NotDegenerate(DegreeVector),
    #[error("hypothesis violated: P_{lower}(q) = 0 for {lower} < {degree}")]
    LowerDegenerate {
        degree: DegreeVector,
        lower: DegreeVector,
    },
    #[error("order of Q_{0}(q) is infinite")]
    InfiniteOrder(DegreeVector),
    #[error("criterion requires q not a root of unity")]
    RootOfUnityMode,
    #[error("degree bound must be at least 2, got {0}")]
    DegreeBound(u32),
    #[error("kernel dimension mismatch at {degree}: formula {formula}, brute force {brute}")]
    KernelMismatch {
        degree: DegreeVector,
        formula: usize,
        brute: usize,
    },
    #[error("invalid input: {0}")]
    Invalid(String),
}
