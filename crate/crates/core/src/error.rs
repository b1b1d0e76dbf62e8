//! Crate-wide error type.
//!
//! Precision errors are the important ones: a read past the tracked
//! truncation bound means the caller planned an insufficient working order,
//! and must never be papered over by returning a fabricated zero.

use crate::rational::Rat;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// A coefficient was requested at or beyond the tracked precision.
    #[error("coefficient of exponent {requested} requested, but the series is only known below exponent {precision}")]
    PrecisionExceeded { requested: i64, precision: i64 },

    /// Inversion (or a negative power) of a series that is zero to its precision.
    #[error("division by a series that is zero to its tracked precision")]
    DivisionByZero,

    /// Composition with an inner series whose constant term is not zero.
    #[error("inner series of a composition must have zero constant term, found {found}")]
    CompositionDomain { found: Rat },

    /// log / rational power of a series that is not a unit with constant term 1.
    #[error("operation requires a series with valuation 0 and constant term 1, found constant term {found}")]
    ConstantTermNotOne { found: Rat },

    /// exp of a series with nonzero constant term is outside the rational field.
    #[error("exponential requires zero constant term, found {found}")]
    ConstantTermNotZero { found: Rat },

    /// Symmetric products over branches need A(0) != 0.
    #[error("operation requires a nonzero constant term")]
    ZeroConstantTerm,

    /// R(0) = 0 is rejected: the branch structure at q = 0 requires r_0 != 0.
    #[error("the constant coefficient r_0 of R must be nonzero")]
    ZeroLeadingCoefficient,

    /// The designated root does not satisfy root^e = r_0.
    #[error("designated root {root} does not satisfy root^{e} = r_0 = {r0}")]
    RootMismatch { root: Rat, e: u32, r0: Rat },

    /// No designated root was supplied and none can be inferred.
    #[error("a designated {e}-th root of r_0 = {r0} is required (pass one explicitly)")]
    RootRequired { r0: Rat, e: u32 },

    /// Malformed rational literal.
    #[error("invalid rational literal {0:?} (expected \"p\" or \"p/q\" with q != 0)")]
    InvalidRational(String),

    /// An internal invariant failed; indicates a bug, not bad input.
    #[error("internal consistency failure: {0}")]
    InternalConsistency(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
