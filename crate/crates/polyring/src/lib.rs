//! Exact sparse multivariate polynomials over `ℚ`, with the `t_i ↦ i·t`
//! specialization and Hilbert-series bookkeeping.

mod hilbert;
mod poly;
pub mod rational;

pub use hilbert::HilbertSeriesPoly;
pub use poly::{elementary_symmetric, elementary_symmetric_of, Ctx, Polynomial, VariableContext};
pub use rational::{format_rational, parse_rational, rat, ratio, Rational};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PolyError {
    #[error("context mismatch: [{left}] vs [{right}]")]
    ContextMismatch { left: String, right: String },
    #[error("invalid context: {0}")]
    Context(String),
    #[error("out of range: {0}")]
    OutOfRange(String),
    #[error("parse error: {0}")]
    Parse(String),
}
