//! Presentations of the cohomology of regular nilpotent Hessenberg
//! varieties by the `f_{i,j}`, with exact graded linear algebra for
//! Hilbert functions, ideal membership and regular sequences.

mod certificates;
mod graded;
mod ideal;
mod modular;

pub use certificates::{
    continued_fraction_check, expected_poincare, general_relations, monomial_basis, peterson_presentation_check,
    peterson_presentation_general, restrict_to_point, verify, verify_all, verify_budget, verify_monomial_basis,
    verify_vanishing, weight_context, BasisDegree, ContinuedFraction, GeneralPresentationReport, HessCertificate,
    MonomialBasisCertificate, PetersonPresentationReport, VanishingCertificate, VanishingEntry, VerifyBudget,
};
pub use graded::{
    compare_ideals, graded_pieces, hilbert_function, ideal_contains, is_regular_sequence, monomial_count, monomials,
    table_of, Echelon, GradedPiece, HilbertFunctionTable, IdealComparison, RegularityCertificate,
};
pub use ideal::{
    f_ij, f_table, flag_ideal, g, ideal_for, peterson_quadratics_in_x, peterson_x_ideal, peterson_z_ideal, x_context,
    IdealPresentation, Provenance,
};

use peterson::PetersonError;
use polyring::PolyError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum PresentationError {
    #[error("index out of range: {0}")]
    OutOfRange(String),
    #[error("not a homogeneous polynomial of positive degree: {0}")]
    NotHomogeneous(String),
    #[error("variable context mismatch: {0}")]
    Context(String),
    #[error("{generators} generators in {variables} variables cannot form a regular sequence")]
    TooManyGenerators { generators: usize, variables: usize },
    #[error("degree bound {bound} too small to certify; need {needed}")]
    BoundTooSmall { bound: u32, needed: u32 },
    #[error("recursion divides by zero at m={m}")]
    DivisionByZero { m: usize },
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Peterson(#[from] PetersonError),
}
