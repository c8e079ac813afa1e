//! Floating-point membership scans for nonnegativity cones.
//!
//! Everything here is a seeded multistart estimator, not a certificate:
//! minima of forms on spheres and products of spheres, minima over
//! varieties and semialgebraic sets (plain or homogenized to the
//! hemisphere), the classification band around zero, the log barrier, and
//! the concavity probe for the sphere minimum. Per-start RNG streams are
//! derived from (seed, start index), so reports do not depend on the
//! number of worker threads.

mod constrained;
mod descent;
mod float;
mod probe;
mod sphere;

pub use constrained::{classify, constrained_min};
pub use float::FloatPoly;
pub use probe::{barrier_value, concavity_probe, ConcavityReport};
pub use sphere::{product_sphere_min, sphere_min};

use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq)]
pub enum ScanError {
    #[error("input is not a homogeneous form")]
    NotHomogeneous,
    #[error("form degree must be even for sphere scans")]
    OddDegree,
    #[error("variable groups do not match the form's multihomogeneous structure")]
    GroupMismatch,
    #[error("no feasible point found within the start budget")]
    InfeasibleStartBudget,
    #[error("neither compactness nor closedness at infinity is asserted")]
    FlagMissing,
    #[error("sphere minimum {0} is not positive: not an interior point")]
    NotInterior(f64),
    #[error("forms must have equal degree")]
    DegreeMismatch,
    #[error(transparent)]
    Poly(#[from] crate::poly::PolyError),
}

/// Common knobs for a scan. Defaults: 64 starts, gradient tolerance 1e-10,
/// 5000 iterations per start, classification band 1e-4.
#[derive(Debug, Clone, Copy)]
pub struct ScanConfig {
    pub starts: usize,
    pub seed: u64,
    pub grad_tol: f64,
    pub max_iters: usize,
    pub tol_band: f64,
}

impl Default for ScanConfig {
    fn default() -> Self {
        ScanConfig {
            starts: 64,
            seed: 0,
            grad_tol: 1e-10,
            max_iters: 5000,
            tol_band: 1e-4,
        }
    }
}

impl ScanConfig {
    pub fn with_starts(mut self, starts: usize) -> Self {
        self.starts = starts;
        self
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }
}

/// Result of a numerical minimization.
#[derive(Debug, Clone, Serialize)]
pub struct MinReport {
    /// Estimated infimum: the smallest converged local value.
    pub value: f64,
    /// Argmin witness (coordinates in variable order).
    pub witness: Vec<f64>,
    pub starts_used: usize,
    /// Max minus min over the converged local values.
    pub spread: f64,
    /// False when the minimizing sequence drifted to the expanding-box
    /// boundary, i.e. the infimum looks unattained.
    pub attained: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Verdict {
    Interior,
    Boundary,
    Exterior,
}

/// Membership classification determined solely by the scanned value
/// against the band.
#[derive(Debug, Clone, Serialize)]
pub struct Membership {
    pub verdict: Verdict,
    pub margin: f64,
}

impl Membership {
    pub fn from_value(value: f64, tol_band: f64) -> Self {
        let verdict = if value > tol_band {
            Verdict::Interior
        } else if value < -tol_band {
            Verdict::Exterior
        } else {
            Verdict::Boundary
        };
        Membership {
            verdict,
            margin: value,
        }
    }
}

/// Euclidean projection onto the standard simplex {x >= 0, sum x = 1}.
pub fn project_simplex(x: &mut [f64]) {
    let n = x.len();
    let mut sorted: Vec<f64> = x.to_vec();
    sorted.sort_by(|a, b| b.partial_cmp(a).unwrap());
    let mut acc = 0.0;
    let mut theta = 0.0;
    let mut k = 0;
    for (i, &v) in sorted.iter().enumerate() {
        acc += v;
        let t = (acc - 1.0) / (i as f64 + 1.0);
        if v - t > 0.0 {
            theta = t;
            k = i + 1;
        }
    }
    if k == 0 {
        let u = 1.0 / n as f64;
        for v in x.iter_mut() {
            *v = u;
        }
        return;
    }
    for v in x.iter_mut() {
        *v = (*v - theta).max(0.0);
    }
}
