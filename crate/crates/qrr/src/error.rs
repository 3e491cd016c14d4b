use thiserror::Error;

/// Errors surfaced by the series ring and the builders on top of it.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    /// Inversion requires the lowest coefficient to be a unit monomial
    /// `±a^e`; anything else (e.g. `1 + a`) is not invertible in the ring.
    #[error("lowest coefficient is not a unit monomial (got {0}); use cross-multiplication")]
    NotAUnit(String),

    /// Two series have no common guaranteed exponent range to compare.
    #[error("no common guaranteed range: orders {0} and {1}")]
    EmptyOverlap(i64, i64),

    /// Coefficient requested beyond the guaranteed window.
    #[error("exponent {k} outside guaranteed window (order {order})")]
    OutOfRange { k: i64, order: i64 },

    /// Infinite product whose factors do not tend to 1.
    #[error("infinite product does not terminate: modulus q-exponent {0} <= 0")]
    NonTerminating(crate::Rat),

    /// Theta argument pair violates `e_A + e_B = 0` or `p_A + p_B > 0`.
    #[error("invalid theta argument pair: {0}")]
    InvalidTheta(String),

    /// The chosen summation cutoff cannot certify the tail below the order.
    #[error("tail not certified: n_max {n_max} insufficient for order {order}")]
    TailNotCertified { n_max: i64, order: i64 },

    /// Parameters outside an identity's schema.
    #[error("bad parameters: {0}")]
    BadParams(String),
}
