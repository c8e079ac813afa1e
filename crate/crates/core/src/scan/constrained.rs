//! Penalty-based minimization over varieties and semialgebraic sets, plain
//! or homogenized to the hemisphere, and the membership classifier.

use rand::Rng;
use rayon::prelude::*;

use super::descent::{descend, random_unit, start_rng, ClampBox, Geometry, Hemisphere};
use super::float::FloatFn;
use super::sphere::sphere_min;
use super::{Membership, MinReport, ScanConfig, ScanError};
use crate::constraint::ConstraintSet;
use crate::poly::{Degree, Polynomial};
use crate::resultant::homogenize_in;

const PENALTY_SCHEDULE: [f64; 3] = [1e2, 1e4, 1e6];
const FEAS_TOL: f64 = 1e-5;

struct PenaltyProblem {
    f: FloatFn,
    eqs: Vec<FloatFn>,
    ineqs: Vec<FloatFn>,
}

impl PenaltyProblem {
    fn compile(f: &Polynomial, eqs: &[Polynomial], ineqs: &[Polynomial]) -> Self {
        PenaltyProblem {
            f: FloatFn::compile(f),
            eqs: eqs.iter().map(FloatFn::compile).collect(),
            ineqs: ineqs.iter().map(FloatFn::compile).collect(),
        }
    }

    fn objective(&self, x: &[f64]) -> f64 {
        self.f.value(x)
    }

    fn penalty_value(&self, x: &[f64], rho: f64) -> f64 {
        let mut v = self.f.value(x);
        for g in &self.eqs {
            let gv = g.value(x);
            v += rho * gv * gv;
        }
        for p in &self.ineqs {
            let pv = p.value(x);
            if pv < 0.0 {
                v += rho * pv * pv;
            }
        }
        v
    }

    fn penalty_grad(&self, x: &[f64], rho: f64, out: &mut [f64]) {
        self.f.gradient(x, out);
        let n = x.len();
        let mut tmp = vec![0.0; n];
        for g in &self.eqs {
            let gv = g.value(x);
            g.gradient(x, &mut tmp);
            for i in 0..n {
                out[i] += 2.0 * rho * gv * tmp[i];
            }
        }
        for p in &self.ineqs {
            let pv = p.value(x);
            if pv < 0.0 {
                p.gradient(x, &mut tmp);
                for i in 0..n {
                    out[i] += 2.0 * rho * pv * tmp[i];
                }
            }
        }
    }

    fn residual(&self, x: &[f64]) -> f64 {
        let mut r: f64 = 0.0;
        for g in &self.eqs {
            r = r.max(g.value(x).abs());
        }
        for p in &self.ineqs {
            r = r.max((-p.value(x)).max(0.0));
        }
        r
    }

    /// Pure feasibility descent (sum of squared violations).
    fn restore<G: Geometry>(&self, geo: &G, x: &mut Vec<f64>, iters: usize) {
        if self.eqs.is_empty() && self.ineqs.is_empty() {
            return;
        }
        let value = |p: &[f64]| -> f64 {
            let mut v = 0.0;
            for g in &self.eqs {
                let gv = g.value(p);
                v += gv * gv;
            }
            for q in &self.ineqs {
                let qv = q.value(p);
                if qv < 0.0 {
                    v += qv * qv;
                }
            }
            v
        };
        let grad = |p: &[f64], out: &mut [f64]| {
            out.iter_mut().for_each(|o| *o = 0.0);
            let n = p.len();
            let mut tmp = vec![0.0; n];
            for g in &self.eqs {
                let gv = g.value(p);
                g.gradient(p, &mut tmp);
                for i in 0..n {
                    out[i] += 2.0 * gv * tmp[i];
                }
            }
            for q in &self.ineqs {
                let qv = q.value(p);
                if qv < 0.0 {
                    q.gradient(p, &mut tmp);
                    for i in 0..n {
                        out[i] += 2.0 * qv * tmp[i];
                    }
                }
            }
        };
        descend(geo, &value, &grad, x, 1e-14, iters);
    }
}

fn penalty_run<G: Geometry>(
    problem: &PenaltyProblem,
    geo: &G,
    mut x: Vec<f64>,
    cfg: &ScanConfig,
) -> (f64, f64, Vec<f64>) {
    for rho in PENALTY_SCHEDULE {
        descend(
            geo,
            &|p| problem.penalty_value(p, rho),
            &|p, out| problem.penalty_grad(p, rho, out),
            &mut x,
            cfg.grad_tol,
            cfg.max_iters / 4,
        );
    }
    problem.restore(geo, &mut x, 400);
    manifold_walk(problem, geo, &mut x, cfg);
    (problem.objective(&x), problem.residual(&x), x)
}

/// Tangential descent of the objective along the feasible set: subtract
/// the constraint normals from the gradient, take an Armijo step, restore
/// feasibility. Escapes the ill-conditioning that freezes plain penalty
/// descent once the penalty weight is large.
fn manifold_walk<G: Geometry>(
    problem: &PenaltyProblem,
    geo: &G,
    x: &mut Vec<f64>,
    cfg: &ScanConfig,
) {
    let n = x.len();
    let mut fx = problem.objective(x);
    let mut grad = vec![0.0; n];
    let mut step: f64 = 1.0;
    for _ in 0..600 {
        problem.f.gradient(x, &mut grad);
        let mut d: Vec<f64> = grad.iter().map(|g| -g).collect();
        // Two passes: active-set membership of inequalities depends on d.
        for _ in 0..2 {
            let mut normals: Vec<Vec<f64>> = Vec::new();
            let mut tmp = vec![0.0; n];
            for g in &problem.eqs {
                g.gradient(x, &mut tmp);
                normals.push(tmp.clone());
            }
            for p in &problem.ineqs {
                if p.value(x) <= 1e-7 {
                    p.gradient(x, &mut tmp);
                    let push: f64 = d.iter().zip(&tmp).map(|(a, b)| a * b).sum();
                    if push < 0.0 {
                        normals.push(tmp.clone());
                    }
                }
            }
            orthonormalize(&mut normals);
            d = grad.iter().map(|g| -g).collect();
            for nvec in &normals {
                let dot: f64 = d.iter().zip(nvec).map(|(a, b)| a * b).sum();
                for (di, ni) in d.iter_mut().zip(nvec) {
                    *di -= dot * ni;
                }
            }
        }
        geo.tangent(x, &mut d);
        let dn = super::descent::norm(&d);
        if dn <= 1e-9 {
            break;
        }
        let mut t = (step * 4.0).min(1.0 / dn.max(1e-12)).min(1e4);
        let mut accepted = false;
        for _ in 0..40 {
            let mut y: Vec<f64> = x.iter().zip(&d).map(|(xi, di)| xi + t * di).collect();
            geo.retract(&mut y);
            problem.restore(geo, &mut y, 80);
            let fy = problem.objective(&y);
            let ry = problem.residual(&y);
            if ry <= FEAS_TOL.max(problem.residual(x) * 1.25) && fy <= fx - 1e-4 * t * dn * dn {
                *x = y;
                fx = fy;
                step = t;
                accepted = true;
                break;
            }
            t *= 0.5;
        }
        if !accepted {
            break;
        }
    }
    problem.restore(geo, x, 400);
}

fn orthonormalize(vecs: &mut Vec<Vec<f64>>) {
    let mut out: Vec<Vec<f64>> = Vec::new();
    for v in vecs.drain(..) {
        let mut w = v;
        for u in &out {
            let dot: f64 = w.iter().zip(u).map(|(a, b)| a * b).sum();
            for (wi, ui) in w.iter_mut().zip(u) {
                *wi -= dot * ui;
            }
        }
        let n = super::descent::norm(&w);
        if n > 1e-10 {
            for wi in w.iter_mut() {
                *wi /= n;
            }
            out.push(w);
        }
    }
    *vecs = out;
}

/// Minimum of `f` over the constraint set.
///
/// Plain mode runs a quadratic-penalty multistart; on non-compact sets an
/// expanding-box schedule detects minimizing sequences that drift to the
/// box boundary and reports `attained = false` instead of a fake minimum.
/// Homogenized mode minimizes the homogenization over the hemisphere
/// `{ |x| = 1, x0 >= 0 }` of the homogenized constraints.
pub fn constrained_min(
    f: &Polynomial,
    constraints: &ConstraintSet,
    homogenized: bool,
    cfg: &ScanConfig,
) -> Result<MinReport, ScanError> {
    if homogenized {
        constrained_min_homogenized(f, constraints, cfg)
    } else {
        constrained_min_plain(f, constraints, cfg)
    }
}

fn constrained_min_plain(
    f: &Polynomial,
    constraints: &ConstraintSet,
    cfg: &ScanConfig,
) -> Result<MinReport, ScanError> {
    let problem = PenaltyProblem::compile(f, &constraints.equalities, &constraints.inequalities);
    let n = f.vars().len();
    let radii: &[f64] = if constraints.compact {
        &[64.0]
    } else {
        &[2.0, 8.0, 32.0, 128.0]
    };
    let mut last: Option<(f64, Vec<f64>, f64)> = None; // value, witness, spread
    let mut attained = true;
    let mut prev: Option<(f64, f64)> = None; // (value, radius) of previous stage
    for (stage, &r) in radii.iter().enumerate() {
        let geo = ClampBox { r };
        let results: Vec<(f64, f64, Vec<f64>)> = (0..cfg.starts)
            .into_par_iter()
            .map(|s| {
                let mut rng = start_rng(cfg.seed.wrapping_add(stage as u64), s);
                let spread = r.min(3.0);
                let x0: Vec<f64> = (0..n).map(|_| rng.gen_range(-spread..spread)).collect();
                penalty_run(&problem, &geo, x0, cfg)
            })
            .collect();
        let feasible: Vec<&(f64, f64, Vec<f64>)> =
            results.iter().filter(|(_, res, _)| *res <= FEAS_TOL).collect();
        if feasible.is_empty() {
            continue;
        }
        let lo = feasible
            .iter()
            .map(|(v, _, _)| *v)
            .fold(f64::INFINITY, f64::min);
        let hi = feasible
            .iter()
            .map(|(v, _, _)| *v)
            .fold(f64::NEG_INFINITY, f64::max);
        let best = feasible
            .iter()
            .min_by(|a, b| a.0.partial_cmp(&b.0).unwrap())
            .unwrap();
        let witness_sup = best.2.iter().fold(0.0f64, |m, &v| m.max(v.abs()));
        let at_boundary = witness_sup >= 0.98 * r;
        // Drift: the minimizer escaped the previous box while improving.
        let drifting = match prev {
            Some((pv, pr)) => witness_sup > pr && best.0 < pv - 1e-9 * (1.0 + pv.abs()),
            None => at_boundary,
        };
        attained = !at_boundary && !drifting;
        last = Some((best.0, best.2.clone(), hi - lo));
        if attained {
            break; // the minimizer settled inside the box
        }
        prev = Some((best.0, r));
        let _ = stage;
    }
    let (value, witness, spread) = last.ok_or(ScanError::InfeasibleStartBudget)?;
    Ok(MinReport {
        value,
        witness,
        starts_used: cfg.starts,
        spread,
        attained,
    })
}

fn constrained_min_homogenized(
    f: &Polynomial,
    constraints: &ConstraintSet,
    cfg: &ScanConfig,
) -> Result<MinReport, ScanError> {
    let all_vars: Vec<usize> = (0..f.vars().len()).collect();
    let (fh, x0_idx) = homogenize_in(f, &all_vars, &fresh_name(f))
        .map_err(|_| ScanError::NotHomogeneous)?;
    let hvars = fh.vars().clone();
    let lift = |p: &Polynomial| -> Polynomial {
        let (ph, _) = homogenize_in(p, &all_vars, hvars.name(x0_idx)).expect("same fresh var");
        ph
    };
    let eqs: Vec<Polynomial> = constraints.equalities.iter().map(&lift).collect();
    let ineqs: Vec<Polynomial> = constraints.inequalities.iter().map(&lift).collect();
    let problem = PenaltyProblem::compile(&fh, &eqs, &ineqs);
    let geo = Hemisphere { nonneg: x0_idx };
    let n = hvars.len();

    let results: Vec<(f64, f64, Vec<f64>)> = (0..cfg.starts)
        .into_par_iter()
        .map(|s| {
            let mut rng = start_rng(cfg.seed, s);
            let mut x0 = random_unit(&mut rng, n);
            x0[x0_idx] = x0[x0_idx].abs();
            penalty_run(&problem, &geo, x0, cfg)
        })
        .collect();
    let feasible: Vec<&(f64, f64, Vec<f64>)> =
        results.iter().filter(|(_, res, _)| *res <= FEAS_TOL).collect();
    if feasible.is_empty() {
        return Err(ScanError::InfeasibleStartBudget);
    }
    let lo = feasible
        .iter()
        .map(|(v, _, _)| *v)
        .fold(f64::INFINITY, f64::min);
    let hi = feasible
        .iter()
        .map(|(v, _, _)| *v)
        .fold(f64::NEG_INFINITY, f64::max);
    let best = feasible
        .iter()
        .min_by(|a, b| a.0.partial_cmp(&b.0).unwrap())
        .unwrap();
    Ok(MinReport {
        value: best.0,
        witness: best.2.clone(),
        starts_used: cfg.starts,
        spread: hi - lo,
        attained: true,
    })
}

fn fresh_name(f: &Polynomial) -> String {
    let mut name = "x0".to_string();
    let mut k = 0;
    while f.vars().index_of(&name).is_some() {
        name = format!("x0_{k}");
        k += 1;
    }
    name
}

/// Membership of `f` in the nonnegativity cone over the constraint set.
///
/// Requires one of the topology flags; compactness selects the plain
/// minimum, closedness at infinity the homogenized one. An empty
/// constraint set is the whole space: the sphere minimum of the form (or
/// of the homogenization) is the classifier.
pub fn classify(
    f: &Polynomial,
    constraints: &ConstraintSet,
    cfg: &ScanConfig,
) -> Result<Membership, ScanError> {
    if !constraints.compact && !constraints.closed_at_infinity {
        return Err(ScanError::FlagMissing);
    }
    let value = if constraints.is_empty() {
        let report = if f.is_homogeneous() {
            sphere_min(f, cfg)?
        } else {
            let all: Vec<usize> = (0..f.vars().len()).collect();
            let (fh, _) = homogenize_in(f, &all, &fresh_name(f))
                .map_err(|_| ScanError::NotHomogeneous)?;
            sphere_min(&fh, cfg)?
        };
        report.value
    } else if constraints.compact {
        constrained_min(f, constraints, false, cfg)?.value
    } else {
        constrained_min(f, constraints, true, cfg)?.value
    };
    Ok(Membership::from_value(value, cfg.tol_band))
}
