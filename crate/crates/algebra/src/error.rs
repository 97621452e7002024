use thiserror::Error;

#[derive(Debug, Error)]
pub enum AlgebraError {
    /// Requested Taylor expansion order exceeds the configured cap; orders
    /// beyond the cap signal runaway term growth.
    #[error("taylor expansion order {requested} exceeds the configured maximum {max}")]
    TaylorOrderTooLarge { requested: u32, max: u32 },

    /// Factorial moments are defined for orders l ≥ 1 only.
    #[error("factorial moment order must be at least 1")]
    ZeroMomentOrder,

    /// A serialized polynomial could not be decoded.
    #[error("invalid serialized polynomial: {0}")]
    Parse(String),
}
