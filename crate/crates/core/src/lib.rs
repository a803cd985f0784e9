//! Exact counting of decomposable monic original polynomials over finite
//! fields in the tame case.
//!
//! The symbolic pipeline runs in four stages: ordered factorizations of `n`
//! are refined into pairwise associated sets ([`refine`]), each set becomes a
//! relation graph ([`relgraph`]), graph components are counted as polynomials
//! in `q` ([`count`]), and an inclusion-exclusion over divisor sets produces
//! the total. [`ffpoly`] and [`oracle`] provide concrete arithmetic over prime
//! fields and brute-force ground truth for every symbolic count.

pub mod cli;
pub mod count;
mod error;
pub mod factorization;
pub mod ffpoly;
pub mod oracle;
pub mod qpoly;
pub mod refine;
pub mod relgraph;

pub use error::{Error, Result};
pub use factorization::{Basis, OrderedFactorization};
pub use qpoly::QPolynomial;
