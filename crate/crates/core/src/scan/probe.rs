//! The log barrier on the sphere minimum and its concavity probe.

use num::{BigInt, BigRational};
use serde::Serialize;

use super::sphere::sphere_min;
use super::{ScanConfig, ScanError};
use crate::poly::Polynomial;

/// `-log(min of f on the sphere)`; an error when the minimum is not
/// positive, since the barrier only exists inside the cone.
pub fn barrier_value(f: &Polynomial, cfg: &ScanConfig) -> Result<f64, ScanError> {
    let r = sphere_min(f, cfg)?;
    if r.value <= 0.0 {
        return Err(ScanError::NotInterior(r.value));
    }
    Ok(-r.value.ln())
}

#[derive(Debug, Clone, Serialize)]
pub struct ThetaSample {
    pub theta: f64,
    /// Sphere minimum of the mixture `theta f1 + (1-theta) f2`.
    pub mix_value: f64,
    /// The superadditive bound `theta l1 + (1-theta) l2`.
    pub bound: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct ConcavityReport {
    pub endpoint_values: (f64, f64),
    pub samples: Vec<ThetaSample>,
    /// Largest amount by which a mixture dipped below its bound; the
    /// superadditivity inequality holds when this is within tolerance.
    pub worst_violation: f64,
}

/// Checks superadditivity of the sphere minimum along the segment between
/// two forms of equal degree: mixtures are built exactly at rational
/// theta = i/(num_thetas+1), then scanned.
pub fn concavity_probe(
    f1: &Polynomial,
    f2: &Polynomial,
    num_thetas: usize,
    cfg: &ScanConfig,
) -> Result<ConcavityReport, ScanError> {
    if f1.degree() != f2.degree() {
        return Err(ScanError::DegreeMismatch);
    }
    let l1 = sphere_min(f1, cfg)?.value;
    let l2 = sphere_min(f2, cfg)?.value;
    let mut samples = Vec::with_capacity(num_thetas);
    let mut worst: f64 = 0.0;
    let denom = BigInt::from(num_thetas as i64 + 1);
    for i in 1..=num_thetas {
        let theta = BigRational::new(BigInt::from(i as i64), denom.clone());
        let one_minus = BigRational::from_integer(BigInt::from(1)) - &theta;
        let mix = &f1.scale(&theta) + &f2.scale(&one_minus);
        let mv = sphere_min(&mix, cfg)?.value;
        let tf = i as f64 / (num_thetas as f64 + 1.0);
        let bound = tf * l1 + (1.0 - tf) * l2;
        worst = worst.max(bound - mv);
        samples.push(ThetaSample {
            theta: tf,
            mix_value: mv,
            bound,
        });
    }
    Ok(ConcavityReport {
        endpoint_values: (l1, l2),
        samples,
        worst_violation: worst,
    })
}
