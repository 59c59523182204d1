use thiserror::Error;

/// Domain errors raised by the exact operations of this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("matrix is singular")]
    Singular,
    #[error("matrix does not have rank one")]
    NotRankOne,
    #[error("matrix is not an idempotent of rank one")]
    NotIdempotentRank1,
    #[error("plane basis is linearly dependent")]
    DependentBasis,
    /// The requested H-class holds no idempotent: the row line annihilates the column line.
    #[error("row and column lines pair to zero")]
    DegeneratePairing,
    #[error("hyperplane has lambda = 0 and cannot be normalized")]
    ZeroLambda,
    #[error("point does not lie on the hyperplane tr(x) = lambda")]
    NotOnHyperplane,
    #[error("hyperplane coefficient matrix is zero")]
    ZeroCoefficientMatrix,
}

pub type Result<T, E = Error> = core::result::Result<T, E>;
