//! Peterson Schubert calculus by localization: the classes `p_v` are the
//! Schubert classes `σ_v` restricted to the fixed points of the Peterson
//! variety, with every simple root sent to `t`.

mod general;
mod localization;
mod type_a;

pub use general::{ordered_subsets, AsSubset, Expansion, GiambelliGeneral, MonkConstants, PetersonSystem, Subset};
pub use localization::LocalizationElement;
pub use type_a::{GiambelliA, PetersonA};

use billey::BilleyError;
use hessenberg::HessError;
use rootsys::RootError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum PetersonError {
    #[error("localization vectors over different point sets")]
    PointMismatch,
    #[error("cannot add classes of degrees {0} and {1}")]
    DegreeMismatch(u32, u32),
    #[error("bad subset {0}")]
    BadSubset(String),
    #[error("n must be at least 2, got {0}")]
    TooSmall(usize),
    #[error("index {index} out of range 1..={max}")]
    OutOfRange { index: usize, max: usize },
    #[error("restriction matrix is singular at {0}")]
    Singular(String),
    #[error("not in the span: coefficient at {subset} needs a negative power of t (degree {degree})")]
    Residual { subset: String, degree: u32 },
    #[error("unexpected term at {0} in a Monk product")]
    UnexpectedTerm(String),
    #[error(transparent)]
    Root(#[from] RootError),
    #[error(transparent)]
    Billey(#[from] BilleyError),
    #[error(transparent)]
    Hess(#[from] HessError),
}
