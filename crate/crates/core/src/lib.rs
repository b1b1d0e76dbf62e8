//! Exact computer algebra for Lagrange inversion over Newton-Puiseux
//! branches, and a coefficient-level verifier for the product identity
//! relating the coefficient-extraction exponential
//!
//!   G_e(R) = exp[ - sum_{n,m,j > 0} j (1/m)[z^{me+j}]{R^m}
//!                                     (1/n)[z^{ne-j}]{R^n} q^{n+m} ]
//!
//! to a closed-form product over the e solutions H_i of H^e = q R(H).
//!
//! Everything is exact rational arithmetic over truncated series with
//! explicitly tracked precision; there are no floats and no tolerances.
//! All values are immutable after construction and every operation is a
//! pure function, so concurrent use needs no coordination.

// Convolution recurrences read naturally with index loops; the error type
// carries exact rationals and only travels cold paths.
#![allow(clippy::needless_range_loop, clippy::result_large_err)]

pub mod error;
pub mod identity;
pub mod puiseux;
pub mod rational;
pub mod series;

pub use error::{Error, Result};
pub use identity::{corollary_rhs, lhs_g, rhs_product, verify, VerificationReport};
pub use puiseux::{
    elementary_symmetric, gessel_phi_expansion, log_h_over_q, power_sum, solve_ramified_branch,
    solve_unramified, symmetric_product, vandermonde_product, LaurentPolynomial,
    PuiseuxBranchSet, RSpec,
};
pub use rational::Rat;
pub use series::{LaurentSeries, PowerSeries};
