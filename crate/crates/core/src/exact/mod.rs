//! Exact scalar, polynomial, matrix and truncated-series arithmetic.
//!
//! Nothing in here touches floating point.

pub mod bipoly;
pub mod matrix;
pub mod rational;
pub mod series;

pub use bipoly::BiPoly;
pub use matrix::{nilpotent_apply, PolyMatrix};
pub use rational::{factorial, format_rational, int, latex_rational, parse_rational, rat, Rational};
pub use series::{ElementaryFn, SeriesScalar};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ExactError {
    #[error("dimension mismatch: {left:?} vs {right:?}")]
    DimensionMismatch {
        left: (usize, usize),
        right: (usize, usize),
    },
    #[error("matrix is {0}x{1}, expected square")]
    NotSquare(usize, usize),
    #[error("rows have different lengths")]
    Ragged,
    #[error("matrix is not nilpotent")]
    NotNilpotent,
    #[error("series has no multiplicative inverse (zero constant term)")]
    NonUnitConstantTerm,
    #[error("composition needs an argument with zero constant term")]
    NonZeroConstantTerm,
    #[error("not exactly divisible by the deformation parameter to power {by}")]
    NotDivisible { by: usize },
}
