use crate::poly::Polynomial;

/// A polynomial compiled to f64 for tight evaluation loops.
#[derive(Debug, Clone)]
pub struct FloatPoly {
    terms: Vec<(f64, Vec<(usize, u32)>)>,
    nvars: usize,
}

impl FloatPoly {
    pub fn compile(p: &Polynomial) -> Self {
        let terms = p
            .terms()
            .map(|(m, c)| {
                let coef = crate::poly::Value::Exact(c.clone()).to_f64();
                let exps: Vec<(usize, u32)> =
                    m.pairs().iter().map(|&(v, e)| (v as usize, e)).collect();
                (coef, exps)
            })
            .collect();
        FloatPoly {
            terms,
            nvars: p.vars().len(),
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn eval(&self, x: &[f64]) -> f64 {
        let mut acc = 0.0;
        for (c, exps) in &self.terms {
            let mut t = *c;
            for &(v, e) in exps {
                t *= powi(x[v], e);
            }
            acc += t;
        }
        acc
    }
}

#[inline]
fn powi(base: f64, e: u32) -> f64 {
    match e {
        0 => 1.0,
        1 => base,
        2 => base * base,
        3 => base * base * base,
        4 => {
            let b2 = base * base;
            b2 * b2
        }
        _ => base.powi(e as i32),
    }
}

/// A function with gradient, both compiled.
#[derive(Debug, Clone)]
pub struct FloatFn {
    pub f: FloatPoly,
    pub grad: Vec<FloatPoly>,
}

impl FloatFn {
    pub fn compile(p: &Polynomial) -> Self {
        let grad = (0..p.vars().len())
            .map(|v| FloatPoly::compile(&p.differentiate(v).expect("var in set")))
            .collect();
        FloatFn {
            f: FloatPoly::compile(p),
            grad,
        }
    }

    pub fn value(&self, x: &[f64]) -> f64 {
        self.f.eval(x)
    }

    pub fn gradient(&self, x: &[f64], out: &mut [f64]) {
        for (g, o) in self.grad.iter().zip(out.iter_mut()) {
            *o = g.eval(x);
        }
    }
}
