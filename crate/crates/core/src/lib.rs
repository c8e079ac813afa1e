//! Exact machinery for discriminants, resultants and boundaries of
//! nonnegativity cones, plus floating-point membership scans.
//!
//! The exact side works over arbitrary-precision rationals: sparse
//! multivariate polynomials ([`poly`]), Sylvester/Macaulay resultants and
//! discriminants ([`resultant`]), closed-form discriminant degree calculus
//! ([`degree`]), and Buchberger-based elimination of critical/KKT systems
//! into parameter loci ([`groebner`], [`locus`]).
//!
//! The numeric side ([`scan`]) estimates minima of forms on spheres,
//! varieties and semialgebraic sets by seeded multistart descent and
//! classifies polynomials against the nonnegativity cone. [`copositive`]
//! specializes both sides to the copositive cone.

pub mod constraint;
pub mod degree;
pub mod groebner;
pub mod locus;
pub mod poly;
pub mod resultant;
pub mod scan;

pub use constraint::ConstraintSet;
pub use poly::{Degree, Monomial, Point, PolyError, Polynomial, Value, VarSet};

/// Library version embedded in CLI artifacts.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
