//! Minima of forms on the unit sphere and on products of spheres.

use rayon::prelude::*;

use super::descent::{descend, random_unit, start_rng, Geometry, ProductSphere, Sphere};
use super::float::FloatFn;
use super::{MinReport, ScanConfig, ScanError};
use crate::poly::{Degree, Polynomial};

pub(crate) fn collect_multistart<G: Geometry + Sync>(
    geo: &G,
    func: &FloatFn,
    cfg: &ScanConfig,
    sample: impl Fn(&mut rand_chacha::ChaCha8Rng) -> Vec<f64> + Sync,
) -> MinReport {
    let results: Vec<(f64, Vec<f64>)> = (0..cfg.starts)
        .into_par_iter()
        .map(|s| {
            let mut rng = start_rng(cfg.seed, s);
            let mut x = sample(&mut rng);
            let value = descend(
                geo,
                &|p| func.value(p),
                &|p, out| func.gradient(p, out),
                &mut x,
                cfg.grad_tol,
                cfg.max_iters,
            );
            (value, x)
        })
        .collect();
    let mut best = 0usize;
    let mut lo = f64::INFINITY;
    let mut hi = f64::NEG_INFINITY;
    for (i, (v, _)) in results.iter().enumerate() {
        if *v < lo {
            lo = *v;
            best = i;
        }
        if *v > hi {
            hi = *v;
        }
    }
    MinReport {
        value: results[best].0,
        witness: results[best].1.clone(),
        starts_used: cfg.starts,
        spread: hi - lo,
        attained: true,
    }
}

/// Smallest value of an even-degree form on the unit sphere, by seeded
/// multistart projected gradient descent. Deterministic for a fixed seed
/// and start count, independent of worker threads.
pub fn sphere_min(f: &Polynomial, cfg: &ScanConfig) -> Result<MinReport, ScanError> {
    if !f.is_homogeneous() {
        return Err(ScanError::NotHomogeneous);
    }
    if let Degree::Finite(d) = f.degree() {
        if d % 2 != 0 {
            return Err(ScanError::OddDegree);
        }
    }
    let n = f.vars().len();
    let func = FloatFn::compile(f);
    Ok(collect_multistart(&Sphere, &func, cfg, |rng| {
        random_unit(rng, n)
    }))
}

/// Smallest value of a multihomogeneous form on the product of unit
/// spheres over consecutive variable blocks of the given sizes.
pub fn product_sphere_min(
    f: &Polynomial,
    group_dims: &[usize],
    cfg: &ScanConfig,
) -> Result<MinReport, ScanError> {
    let n = f.vars().len();
    if group_dims.iter().sum::<usize>() != n || group_dims.iter().any(|&g| g == 0) {
        return Err(ScanError::GroupMismatch);
    }
    let mut blocks = Vec::new();
    let mut at = 0;
    for &g in group_dims {
        blocks.push((at..at + g).collect::<Vec<usize>>());
        at += g;
    }
    // Multihomogeneity check: every monomial has one degree per block.
    for block in &blocks {
        let keep = |v: usize| block.contains(&v);
        if !f.is_homogeneous_in(keep) {
            return Err(ScanError::GroupMismatch);
        }
        if let Degree::Finite(d) = f.degree_in(keep) {
            if d % 2 != 0 {
                return Err(ScanError::OddDegree);
            }
        }
    }
    let geo = ProductSphere {
        blocks: blocks.clone(),
    };
    let func = FloatFn::compile(f);
    Ok(collect_multistart(&geo, &func, cfg, move |rng| {
        let mut x = vec![0.0; n];
        for block in &blocks {
            let u = random_unit(rng, block.len());
            for (k, &i) in block.iter().enumerate() {
                x[i] = u[k];
            }
        }
        x
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{parse, VarSet};

    fn vs(names: &[&str]) -> VarSet {
        VarSet::new(names.iter().copied()).unwrap()
    }

    #[test]
    fn norm_fourth_power_is_constant_one() {
        let v = vs(&["x1", "x2"]);
        let f = parse("x1^4+2*x1^2*x2^2+x2^4", &v).unwrap();
        let r = sphere_min(&f, &ScanConfig::default()).unwrap();
        assert!((r.value - 1.0).abs() < 1e-8, "value {}", r.value);
    }

    #[test]
    fn quartic_axis_sum_min_is_half() {
        let v = vs(&["x1", "x2"]);
        let f = parse("x1^4+x2^4", &v).unwrap();
        let r = sphere_min(&f, &ScanConfig::default()).unwrap();
        assert!((r.value - 0.5).abs() < 1e-8, "value {}", r.value);
        // Witness on the sphere, at (+-sqrt(1/2), +-sqrt(1/2)).
        let n: f64 = r.witness.iter().map(|v| v * v).sum::<f64>().sqrt();
        assert!((n - 1.0).abs() < 1e-10);
        assert!((r.witness[0].abs() - 0.5f64.sqrt()).abs() < 1e-6);
    }

    #[test]
    fn odd_degree_rejected() {
        let v = vs(&["x1", "x2"]);
        let f = parse("x1^3+x2^3", &v).unwrap();
        assert!(matches!(
            sphere_min(&f, &ScanConfig::default()),
            Err(ScanError::OddDegree)
        ));
    }

    #[test]
    fn inhomogeneous_rejected() {
        let v = vs(&["x1"]);
        let f = parse("x1^2+1", &v).unwrap();
        assert!(matches!(
            sphere_min(&f, &ScanConfig::default()),
            Err(ScanError::NotHomogeneous)
        ));
    }

    #[test]
    fn product_sphere_constant_product_form() {
        let v = vs(&["x1", "x2", "x3", "y1", "y2", "y3"]);
        let f = parse(
            "x1^2*y1^2+x1^2*y2^2+x1^2*y3^2+x2^2*y1^2+x2^2*y2^2+x2^2*y3^2+x3^2*y1^2+x3^2*y2^2+x3^2*y3^2",
            &v,
        )
        .unwrap();
        let r = product_sphere_min(&f, &[3, 3], &ScanConfig::default()).unwrap();
        assert!((r.value - 1.0).abs() < 1e-8, "value {}", r.value);
    }

    #[test]
    fn group_mismatch_detected() {
        let v = vs(&["x1", "x2", "y1"]);
        let f = parse("x1^2*y1+x2^2*y1", &v).unwrap(); // odd in the y block
        assert!(product_sphere_min(&f, &[2, 1], &ScanConfig::default()).is_err());
        let g = parse("x1^2+y1^2", &v).unwrap(); // not multihomogeneous for blocks (2,1)
        assert!(product_sphere_min(&g, &[2, 1], &ScanConfig::default()).is_err());
    }
}
