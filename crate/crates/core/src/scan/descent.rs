//! Projected gradient descent with Armijo backtracking, shared by the
//! sphere, product-sphere, box and simplex scans.

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

/// Projection onto the feasible manifold plus tangent projection of the
/// gradient at a feasible point.
pub trait Geometry {
    /// Project a point onto the manifold in place.
    fn retract(&self, x: &mut [f64]);
    /// Project the ambient gradient to the tangent/feasible directions.
    fn tangent(&self, x: &[f64], grad: &mut [f64]);
}

/// Unit sphere in all coordinates.
pub struct Sphere;

impl Geometry for Sphere {
    fn retract(&self, x: &mut [f64]) {
        let n = norm(x);
        if n > 0.0 {
            for v in x.iter_mut() {
                *v /= n;
            }
        } else {
            x[0] = 1.0;
        }
    }

    fn tangent(&self, x: &[f64], grad: &mut [f64]) {
        let dot: f64 = x.iter().zip(grad.iter()).map(|(a, b)| a * b).sum();
        for (g, xv) in grad.iter_mut().zip(x.iter()) {
            *g -= dot * xv;
        }
    }
}

/// Hemisphere: unit sphere with one coordinate clamped nonnegative.
pub struct Hemisphere {
    pub nonneg: usize,
}

impl Geometry for Hemisphere {
    fn retract(&self, x: &mut [f64]) {
        if x[self.nonneg] < 0.0 {
            x[self.nonneg] = 0.0;
        }
        Sphere.retract(x);
    }

    fn tangent(&self, x: &[f64], grad: &mut [f64]) {
        Sphere.tangent(x, grad);
    }
}

/// Product of unit spheres over disjoint index blocks.
pub struct ProductSphere {
    pub blocks: Vec<Vec<usize>>,
}

impl Geometry for ProductSphere {
    fn retract(&self, x: &mut [f64]) {
        for block in &self.blocks {
            let n: f64 = block.iter().map(|&i| x[i] * x[i]).sum::<f64>().sqrt();
            if n > 0.0 {
                for &i in block {
                    x[i] /= n;
                }
            } else {
                x[block[0]] = 1.0;
            }
        }
    }

    fn tangent(&self, x: &[f64], grad: &mut [f64]) {
        for block in &self.blocks {
            let dot: f64 = block.iter().map(|&i| x[i] * grad[i]).sum();
            for &i in block {
                grad[i] -= dot * x[i];
            }
        }
    }
}

/// Box [-r, r]^n via clamping; the tangent zeroes gradient components that
/// push outward at the boundary.
pub struct ClampBox {
    pub r: f64,
}

impl Geometry for ClampBox {
    fn retract(&self, x: &mut [f64]) {
        for v in x.iter_mut() {
            *v = v.clamp(-self.r, self.r);
        }
    }

    fn tangent(&self, x: &[f64], grad: &mut [f64]) {
        for (g, &xv) in grad.iter_mut().zip(x.iter()) {
            if (xv >= self.r && *g < 0.0) || (xv <= -self.r && *g > 0.0) {
                *g = 0.0;
            }
        }
    }
}

/// Standard simplex {x >= 0, sum x = 1}.
pub struct Simplex;

impl Geometry for Simplex {
    fn retract(&self, x: &mut [f64]) {
        super::project_simplex(x);
    }

    fn tangent(&self, _x: &[f64], _grad: &mut [f64]) {
        // Descent steps are projected back by `retract`; the raw gradient is
        // a valid direction for projected gradient on a convex set.
    }
}

pub fn norm(x: &[f64]) -> f64 {
    x.iter().map(|v| v * v).sum::<f64>().sqrt()
}

/// One descent run. `eval` returns the objective, `grad_into` fills the
/// ambient gradient. Converges when the projected gradient norm drops
/// below `grad_tol` or the step size underflows.
pub fn descend<G: Geometry>(
    geo: &G,
    eval: &dyn Fn(&[f64]) -> f64,
    grad_into: &dyn Fn(&[f64], &mut [f64]),
    x: &mut Vec<f64>,
    grad_tol: f64,
    max_iters: usize,
) -> f64 {
    let n = x.len();
    geo.retract(x);
    let mut fx = eval(x);
    let mut g = vec![0.0; n];
    let mut trial = vec![0.0; n];
    let mut step: f64 = 1.0;
    for _ in 0..max_iters {
        grad_into(x, &mut g);
        geo.tangent(x, &mut g);
        let gn = norm(&g);
        if gn <= grad_tol {
            break;
        }
        // Armijo backtracking along -g with projection.
        let mut t = (step * 4.0).min(1.0 / gn.max(1e-12)).min(1e6);
        let mut accepted = false;
        for _ in 0..80 {
            for i in 0..n {
                trial[i] = x[i] - t * g[i];
            }
            geo.retract(&mut trial);
            let ft = eval(&trial);
            if ft <= fx - 1e-4 * t * gn * gn {
                x.copy_from_slice(&trial);
                fx = ft;
                step = t;
                accepted = true;
                break;
            }
            t *= 0.5;
        }
        if !accepted {
            break; // no progress at machine precision
        }
    }
    fx
}

/// Uniform point on the unit sphere from the given RNG stream.
pub fn random_unit(rng: &mut ChaCha8Rng, n: usize) -> Vec<f64> {
    loop {
        let v: Vec<f64> = (0..n).map(|_| rng.sample::<f64, _>(StandardNormal)).collect();
        let nm = norm(&v);
        if nm > 1e-12 {
            return v.iter().map(|x| x / nm).collect();
        }
    }
}

/// Deterministic per-start RNG stream.
pub fn start_rng(seed: u64, start: usize) -> ChaCha8Rng {
    use rand::SeedableRng;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(start as u64 + 1);
    rng
}
