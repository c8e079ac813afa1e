//! Sparse multivariate polynomials over arbitrary-precision rationals.
//!
//! Everything downstream (resultants, Groebner bases, loci) runs on the
//! canonical representation defined here: a polynomial is a map from
//! monomials to nonzero rational coefficients, terms kept sorted in
//! graded-reverse-lex order so that printing and golden files are
//! deterministic. Parameters (`a`, `b`, ...) and Lagrange multipliers are
//! ordinary ring variables.

mod monomial;
mod parse;
mod point;
mod polynomial;
mod varset;

pub use monomial::Monomial;
pub use parse::parse;
pub use point::{evaluate, Coord, Point, Value};
pub use polynomial::{Degree, Polynomial};
pub use varset::VarSet;

use thiserror::Error;

/// Errors raised by polynomial construction and arithmetic.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum PolyError {
    #[error("unknown variable `{name}` at position {pos}")]
    UnknownVariable { name: String, pos: usize },
    #[error("syntax error at position {pos}: {msg}")]
    SyntaxError { pos: usize, msg: String },
    #[error("operands use different variable sets")]
    VarSetMismatch,
    #[error("point does not cover variable `{0}`")]
    MissingCoordinate(String),
    #[error("variable `{0}` is not in the variable set")]
    NoSuchVariable(String),
    #[error("variable `{0}` already present")]
    VariableCollision(String),
    #[error("duplicate variable name `{0}`")]
    DuplicateVariable(String),
}
