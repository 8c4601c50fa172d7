//! Exact enumeration of positive solutions of the Conway–Coxeter matrix
//! equation through quiddities of 3-periodic polygon dissections.
//!
//! The crate cross-checks three independent routes to the same integer
//! sequences: brute-force enumeration of dissections with surgery-based
//! canonicalization ([`enumerate`], [`surgery`]), fixed-point solving of
//! generating-function equations ([`series`]) and closed-form binomial
//! formulas ([`formulas`]). It also covers the underlying matrix equation
//! ([`matrixeq`]), asymptotic constants ([`asymptotics`]) and blow-ups of
//! toric fans ([`toric`]).
//!
//! Polygons have `n + 2` vertices labeled `0..=n+1` in counterclockwise
//! order; the base edge is `(n+1, 0)`.

pub mod asymptotics;
pub mod enumerate;
pub mod formulas;
pub mod geometry;
pub mod matrixeq;
pub mod series;
pub mod surgery;
pub mod toric;

use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid dissection: {0}")]
    InvalidDissection(String),
    #[error("dissection is not 3-periodic")]
    NotThreePeriodic,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("parse error at column {column}: {message}")]
    Parse { column: usize, message: String },
    #[error("illegal surgery move: {0}")]
    IllegalMove(String),
    #[error("numerical failure: {0}")]
    Numerical(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub use geometry::{Cell, Chord, Dissection, MultiIndex, Quiddity};
