//! Exact computer algebra for the Jordanian deformation `U_h(sl(2))`.
//!
//! * [`exact`]: rationals, polynomials in `λ` and `h`, polynomial matrices,
//!   truncated series.
//! * [`verma`]: Verma-module matrix elements from the recursion relations.
//! * [`irrep`]: singular vectors, finite-dimensional irreps in the Verma and
//!   weight bases, Hopf-algebra checks.
//! * [`so4`]: `U_h(so(4))` on tensor products of two irreps.
//! * [`ncseries`]: PBW normal ordering over truncated series, used for the
//!   `e(2)`, `e(3)` and `q`-`e(3)` suites and the momentum-spectrum scan.

pub mod exact;
pub mod export;
pub mod half;
pub mod hopf;
pub mod irrep;
pub mod ncseries;
pub mod oracle;
pub mod par;
pub mod report;
pub mod selftest;
pub mod so4;
pub mod verma;

pub use half::HalfInt;
pub use par::Execution;
pub use report::{Status, VerificationReport};
