//! PBW normal ordering over truncated power series, and the verification
//! suites for `U_h(e(2))`, `U_h(e(3))` and `U_q(e(3))`.

pub mod element;
pub mod presentation;
pub mod rewrite;
pub mod spectrum;
pub mod suites;

pub use element::{check_series, NCElement};
pub use presentation::{Monomial, Poly, Presentation};
pub use rewrite::{rewrite_word, Schedule};
pub use spectrum::{momentum_spectrum, parse_grid, SpectrumClass, SpectrumPoint, SpectrumScan};
pub use suites::{suite_e2, suite_e3, suite_qe3};

use std::sync::Arc;

/// Default truncation order.
pub const DEFAULT_ORDER: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum NcError {
    #[error("{function} needs an argument vanishing at t = 0: {detail}")]
    IllFormedComposition { function: &'static str, detail: String },
    #[error("cannot divide by t^{shift}: only {order} orders are known")]
    OrderExhausted { order: usize, shift: usize },
    #[error("not divisible by t^{power} (a coefficient starts at t^{valuation})")]
    NotDivisible { power: usize, valuation: usize },
    #[error("presentation {presentation} violates Jacobi on generators {triple:?}")]
    Jacobi { presentation: String, triple: (usize, usize, usize) },
    #[error("truncation order must be at least 2, got {0}")]
    OrderTooSmall(usize),
    #[error("omega must be nonzero")]
    ZeroOmega,
}

/// The product `g_{w_0} g_{w_1} …` in normal form, at truncation `order`.
pub fn normal_order(pres: &Arc<Presentation>, word: &[usize], order: usize) -> NCElement {
    let n = pres.len();
    word.iter().fold(NCElement::one(pres, order), |acc, &g| {
        &acc * &NCElement::from_poly(pres, &Poly::from([(Monomial::generator(n, g), crate::exact::int(1))]), order)
    })
}
