use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::bigint::Sign;
use num::{BigInt, BigRational, One, Signed, Zero};

use super::{Monomial, PolyError, VarSet};

/// Total degree with a distinguished value for the zero polynomial.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum Degree {
    NegInfinity,
    Finite(u64),
}

impl Degree {
    pub fn finite(self) -> Option<u64> {
        match self {
            Degree::NegInfinity => None,
            Degree::Finite(d) => Some(d),
        }
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::NegInfinity => write!(f, "-inf"),
            Degree::Finite(d) => write!(f, "{d}"),
        }
    }
}

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// Canonical form: no zero coefficients, terms keyed by monomials in
/// graded-reverse-lex order. Two polynomials over the same variable set are
/// equal iff their term maps are identical.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Polynomial {
    vars: VarSet,
    terms: BTreeMap<Monomial, BigRational>,
}

impl Polynomial {
    pub fn zero(vars: &VarSet) -> Self {
        Polynomial {
            vars: vars.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: &VarSet, c: BigRational) -> Self {
        let mut p = Polynomial::zero(vars);
        if !c.is_zero() {
            p.terms.insert(Monomial::one(), c);
        }
        p
    }

    pub fn constant_i64(vars: &VarSet, c: i64) -> Self {
        Polynomial::constant(vars, BigRational::from_integer(BigInt::from(c)))
    }

    pub fn one(vars: &VarSet) -> Self {
        Polynomial::constant(vars, BigRational::one())
    }

    pub fn variable(vars: &VarSet, idx: usize) -> Self {
        assert!(idx < vars.len(), "variable index out of range");
        let mut p = Polynomial::zero(vars);
        p.terms.insert(Monomial::var(idx, 1), BigRational::one());
        p
    }

    pub fn from_terms(
        vars: &VarSet,
        terms: impl IntoIterator<Item = (Monomial, BigRational)>,
    ) -> Self {
        let mut p = Polynomial::zero(vars);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn monomial_term(vars: &VarSet, m: Monomial, c: BigRational) -> Self {
        let mut p = Polynomial::zero(vars);
        p.add_term(m, c);
        p
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn vars(&self) -> &VarSet {
        &self.vars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    /// Terms in descending grevlex order (printing order).
    pub fn terms_desc(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter().rev()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms.keys().next().unwrap().is_one())
    }

    pub fn constant_value(&self) -> Option<BigRational> {
        if self.is_zero() {
            Some(BigRational::zero())
        } else if self.is_constant() {
            self.terms.values().next().cloned()
        } else {
            None
        }
    }

    pub fn coefficient(&self, m: &Monomial) -> BigRational {
        self.terms.get(m).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn degree(&self) -> Degree {
        self.terms
            .keys()
            .map(|m| m.total_degree())
            .max()
            .map_or(Degree::NegInfinity, Degree::Finite)
    }

    /// Total degree counting only the selected variables.
    pub fn degree_in(&self, keep: impl Fn(usize) -> bool) -> Degree {
        self.terms
            .keys()
            .map(|m| m.degree_in(&keep))
            .max()
            .map_or(Degree::NegInfinity, Degree::Finite)
    }

    pub fn degree_in_var(&self, var: usize) -> Degree {
        self.terms
            .keys()
            .map(|m| m.exponent_of(var) as u64)
            .max()
            .map_or(Degree::NegInfinity, Degree::Finite)
    }

    pub fn uses_var(&self, var: usize) -> bool {
        self.terms.keys().any(|m| m.contains_var(var))
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|m| m.total_degree());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    /// Homogeneous when grading only by the selected variables (parameters
    /// excluded, say).
    pub fn is_homogeneous_in(&self, keep: impl Fn(usize) -> bool) -> bool {
        let mut degs = self.terms.keys().map(|m| m.degree_in(&keep));
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    fn ensure_same_vars(&self, rhs: &Polynomial) -> Result<(), PolyError> {
        if self.vars.same_as(&rhs.vars) {
            Ok(())
        } else {
            Err(PolyError::VarSetMismatch)
        }
    }

    pub fn checked_add(&self, rhs: &Polynomial) -> Result<Polynomial, PolyError> {
        self.ensure_same_vars(rhs)?;
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, rhs: &Polynomial) -> Result<Polynomial, PolyError> {
        self.ensure_same_vars(rhs)?;
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn checked_mul(&self, rhs: &Polynomial) -> Result<Polynomial, PolyError> {
        self.ensure_same_vars(rhs)?;
        let mut out = Polynomial::zero(&self.vars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &BigRational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.vars);
        }
        let terms = self
            .terms
            .iter()
            .map(|(m, k)| (m.clone(), k * c))
            .collect();
        Polynomial {
            vars: self.vars.clone(),
            terms,
        }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &BigRational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.vars);
        }
        let terms = self
            .terms
            .iter()
            .map(|(k, v)| (k.mul(m), v * c))
            .collect();
        Polynomial {
            vars: self.vars.clone(),
            terms,
        }
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut out = Polynomial::one(&self.vars);
        for _ in 0..e {
            out = out.checked_mul(self).expect("same varset");
        }
        out
    }

    /// Formal partial derivative with respect to one variable.
    pub fn differentiate(&self, var: usize) -> Result<Polynomial, PolyError> {
        if var >= self.vars.len() {
            return Err(PolyError::NoSuchVariable(format!("#{var}")));
        }
        let mut out = Polynomial::zero(&self.vars);
        for (m, c) in &self.terms {
            let e = m.exponent_of(var);
            if e == 0 {
                continue;
            }
            let mut pairs: Vec<(u32, u32)> = m
                .pairs()
                .iter()
                .copied()
                .map(|(v, k)| if v as usize == var { (v, k - 1) } else { (v, k) })
                .collect();
            pairs.retain(|&(_, k)| k > 0);
            out.add_term(
                Monomial::from_pairs(pairs),
                c * BigRational::from_integer(BigInt::from(e)),
            );
        }
        Ok(out)
    }

    /// Gradient over the given variables, in their order.
    pub fn gradient(&self, vars: &[usize]) -> Result<Vec<Polynomial>, PolyError> {
        vars.iter().map(|&v| self.differentiate(v)).collect()
    }

    /// Homogenization `x0^d * f(x/x0)` where `x0` is a fresh variable
    /// appended to the variable set. Returns the form together with the
    /// index of the new variable.
    pub fn homogenize(&self, newvar: &str) -> Result<(Polynomial, usize), PolyError> {
        let (vars, idx) = self.vars.with_appended(newvar)?;
        let d = match self.degree() {
            Degree::NegInfinity => {
                return Ok((Polynomial::zero(&vars), idx));
            }
            Degree::Finite(d) => d,
        };
        let mut out = Polynomial::zero(&vars);
        for (m, c) in &self.terms {
            let pad = (d - m.total_degree()) as u32;
            let mut pairs = m.pairs().to_vec();
            if pad > 0 {
                pairs.push((idx as u32, pad));
            }
            out.add_term(Monomial::from_pairs(pairs), c.clone());
        }
        Ok((out, idx))
    }

    /// Sets `var = 1` and removes it from the variable set.
    pub fn dehomogenize(&self, var: usize) -> Result<Polynomial, PolyError> {
        if var >= self.vars.len() {
            return Err(PolyError::NoSuchVariable(format!("#{var}")));
        }
        let vars = self.vars.without(var);
        let remap = |v: usize| if v > var { v - 1 } else { v };
        let mut out = Polynomial::zero(&vars);
        for (m, c) in &self.terms {
            let pairs: Vec<(u32, u32)> = m
                .pairs()
                .iter()
                .copied()
                .filter(|&(v, _)| v as usize != var)
                .map(|(v, e)| (remap(v as usize) as u32, e))
                .collect();
            out.add_term(Monomial::from_pairs(pairs), c.clone());
        }
        Ok(out)
    }

    /// Sets `var = 1` keeping the variable set unchanged.
    pub fn set_var_one(&self, var: usize) -> Polynomial {
        let mut out = Polynomial::zero(&self.vars);
        for (m, c) in &self.terms {
            let pairs: Vec<(u32, u32)> = m
                .pairs()
                .iter()
                .copied()
                .filter(|&(v, _)| v as usize != var)
                .collect();
            out.add_term(Monomial::from_pairs(pairs), c.clone());
        }
        out
    }

    /// Sets `var = 0`: drops every term containing the variable.
    pub fn set_var_zero(&self, var: usize) -> Polynomial {
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| !m.contains_var(var))
            .map(|(m, c)| (m.clone(), c.clone()))
            .collect();
        Polynomial {
            vars: self.vars.clone(),
            terms,
        }
    }

    /// Substitutes every selected variable by its square.
    pub fn square_vars(&self, keep: impl Fn(usize) -> bool) -> Polynomial {
        let mut out = Polynomial::zero(&self.vars);
        for (m, c) in &self.terms {
            let pairs: Vec<(u32, u32)> = m
                .pairs()
                .iter()
                .copied()
                .map(|(v, e)| if keep(v as usize) { (v, 2 * e) } else { (v, e) })
                .collect();
            out.add_term(Monomial::from_pairs(pairs), c.clone());
        }
        out
    }

    /// Rebuilds the polynomial over a different variable set, mapping each
    /// old variable index through `map`.
    pub fn remap_vars(&self, target: &VarSet, map: impl Fn(usize) -> usize) -> Polynomial {
        let mut out = Polynomial::zero(target);
        for (m, c) in &self.terms {
            out.add_term(m.map_vars(&map), c.clone());
        }
        out
    }

    /// Leading term under the canonical grevlex order.
    pub fn leading_term(&self) -> Option<(&Monomial, &BigRational)> {
        self.terms.iter().next_back()
    }

    /// Exact rational evaluation given one value per variable.
    pub fn eval_rational(&self, values: &[BigRational]) -> BigRational {
        assert_eq!(values.len(), self.vars.len(), "coordinate count mismatch");
        let mut acc = BigRational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for &(v, e) in m.pairs() {
                let mut p = BigRational::one();
                let base = &values[v as usize];
                for _ in 0..e {
                    p *= base;
                }
                t *= p;
            }
            acc += t;
        }
        acc
    }

    /// Floating evaluation given one value per variable.
    pub fn eval_f64(&self, values: &[f64]) -> f64 {
        let mut acc = 0.0;
        for (m, c) in &self.terms {
            let mut t = rational_to_f64(c);
            for &(v, e) in m.pairs() {
                t *= values[v as usize].powi(e as i32);
            }
            acc += t;
        }
        acc
    }

    /// Integer content (gcd of numerators over lcm of denominators).
    /// Zero polynomial has content zero.
    pub fn content(&self) -> BigRational {
        let mut num_gcd = BigInt::zero();
        let mut den_lcm = BigInt::one();
        for c in self.terms.values() {
            num_gcd = num::Integer::gcd(&num_gcd, c.numer());
            den_lcm = num::Integer::lcm(&den_lcm, c.denom());
        }
        if num_gcd.is_zero() {
            BigRational::zero()
        } else {
            BigRational::new(num_gcd, den_lcm)
        }
    }

    /// Divides out the content and makes the grevlex-leading coefficient
    /// positive. Coefficients of the result are coprime integers.
    pub fn primitive_part(&self) -> Polynomial {
        if self.is_zero() {
            return self.clone();
        }
        let mut c = self.content();
        if self.leading_term().unwrap().1.numer().sign() == Sign::Minus {
            c = -c;
        }
        self.scale(&c.recip())
    }

    /// Exact polynomial division; `None` when the division is not exact.
    pub fn div_exact(&self, divisor: &Polynomial) -> Option<Polynomial> {
        if divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(self.clone());
        }
        let (dm, dc) = divisor.leading_term().map(|(m, c)| (m.clone(), c.clone()))?;
        let mut rem = self.clone();
        let mut quo = Polynomial::zero(&self.vars);
        while let Some((rm, rc)) = rem.leading_term().map(|(m, c)| (m.clone(), c.clone())) {
            let q = dm.try_div_into(&rm)?;
            let coef = rc / &dc;
            quo.add_term(q.clone(), coef.clone());
            let sub = divisor.mul_monomial(&q, &coef);
            rem = rem.checked_sub(&sub).expect("same varset");
        }
        Some(quo)
    }

    /// Collects coefficients with respect to powers of one variable.
    /// Index `k` of the returned vector is the coefficient of `var^k`
    /// (a polynomial in the remaining variables, same variable set).
    pub fn coefficients_in_var(&self, var: usize) -> Vec<Polynomial> {
        let deg = match self.degree_in_var(var) {
            Degree::NegInfinity => return vec![Polynomial::zero(&self.vars)],
            Degree::Finite(d) => d as usize,
        };
        let mut out = vec![Polynomial::zero(&self.vars); deg + 1];
        for (m, c) in &self.terms {
            let e = m.exponent_of(var) as usize;
            let pairs: Vec<(u32, u32)> = m
                .pairs()
                .iter()
                .copied()
                .filter(|&(v, _)| v as usize != var)
                .collect();
            out[e].add_term(Monomial::from_pairs(pairs), c.clone());
        }
        out
    }
}

pub(crate) fn rational_to_f64(c: &BigRational) -> f64 {
    use num::ToPrimitive;
    c.to_f64().unwrap_or_else(|| {
        // Fall back to a scaled quotient if the parts overflow f64.
        let n = c.numer();
        let d = c.denom();
        let shift = (n.bits().max(d.bits()) as i64 - 900).max(0) as u64;
        let n2 = n >> shift;
        let d2 = d >> shift;
        n2.to_f64().unwrap_or(f64::NAN) / d2.to_f64().unwrap_or(f64::NAN)
    })
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.checked_add(rhs).expect("varset mismatch in +")
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.checked_sub(rhs).expect("varset mismatch in -")
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.checked_mul(rhs).expect("varset mismatch in *")
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(&-BigRational::one())
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms_desc().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, "-")?;
            } else {
                write!(f, "+")?;
            }
            let coef_is_one = abs.is_one();
            if m.is_one() {
                write!(f, "{abs}")?;
            } else {
                if !coef_is_one {
                    write!(f, "{abs}*")?;
                }
                for (j, &(v, e)) in m.pairs().iter().enumerate() {
                    if j > 0 {
                        write!(f, "*")?;
                    }
                    write!(f, "{}", self.vars.name(v as usize))?;
                    if e > 1 {
                        write!(f, "^{e}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse;

    fn vs(names: &[&str]) -> VarSet {
        VarSet::new(names.iter().copied()).unwrap()
    }

    #[test]
    fn additive_inverse_gives_zero() {
        let v = vs(&["x1", "x2"]);
        let f = parse("x1", &v).unwrap();
        let g = parse("-x1", &v).unwrap();
        assert!(f.checked_add(&g).unwrap().is_zero());
    }

    #[test]
    fn difference_of_squares() {
        let v = vs(&["x1", "x2"]);
        let a = parse("x1+x2", &v).unwrap();
        let b = parse("x1-x2", &v).unwrap();
        assert_eq!(a.checked_mul(&b).unwrap(), parse("x1^2-x2^2", &v).unwrap());
    }

    #[test]
    fn scale_by_half() {
        let v = vs(&["x1"]);
        let f = parse("x1^2+1", &v).unwrap();
        let half = BigRational::new(BigInt::from(1), BigInt::from(2));
        assert_eq!(f.scale(&half), parse("1/2*x1^2+1/2", &v).unwrap());
    }

    #[test]
    fn derivative_rules() {
        let v = vs(&["x1", "x2"]);
        let f = parse("x1^3", &v).unwrap();
        assert_eq!(f.differentiate(0).unwrap(), parse("3*x1^2", &v).unwrap());
        let g = parse("x1^2+x2^2", &v).unwrap();
        let grad = g.gradient(&[0, 1]).unwrap();
        assert_eq!(grad[0], parse("2*x1", &v).unwrap());
        assert_eq!(grad[1], parse("2*x2", &v).unwrap());
    }

    #[test]
    fn parameters_are_ring_variables() {
        let v = vs(&["x1", "x2", "a", "b"]);
        let f = parse("a*x1^3+b*x1^2*x2", &v).unwrap();
        let d = f.differentiate(1).unwrap();
        assert_eq!(d, parse("b*x1^2", &v).unwrap());
    }

    #[test]
    fn homogenize_examples() {
        let v = vs(&["x1", "x2"]);
        let f = parse("x1-x2+1", &v).unwrap();
        let (fh, idx) = f.homogenize("x0").unwrap();
        assert_eq!(fh.to_string(), "x1-x2+x0");
        assert_eq!(fh.dehomogenize(idx).unwrap(), f);

        let g = parse("x1^2*x1-x1^2*x2-1", &v).unwrap(); // x1^2(x1-x2)-1
        let (gh, _) = g.homogenize("x0").unwrap();
        assert_eq!(gh, parse("x1^3-x1^2*x2-x0^3", &vs(&["x1", "x2", "x0"])).unwrap());

        let c = parse("5", &v).unwrap();
        let (ch, _) = c.homogenize("x0").unwrap();
        assert_eq!(ch.to_string(), "5");
        assert_eq!(ch.degree(), Degree::Finite(0));
    }

    #[test]
    fn degree_of_zero_is_sentinel() {
        let v = vs(&["x1"]);
        assert_eq!(Polynomial::zero(&v).degree(), Degree::NegInfinity);
        assert!(Degree::NegInfinity < Degree::Finite(0));
    }

    #[test]
    fn primitive_part_normalizes() {
        let v = vs(&["x1", "a"]);
        let f = parse("-4/3*x1^2+2/3*a", &v).unwrap();
        let p = f.primitive_part();
        assert_eq!(p, parse("2*x1^2-a", &v).unwrap());
    }

    #[test]
    fn exact_division() {
        let v = vs(&["x1", "x2"]);
        let a = parse("x1^2-x2^2", &v).unwrap();
        let b = parse("x1-x2", &v).unwrap();
        assert_eq!(a.div_exact(&b).unwrap(), parse("x1+x2", &v).unwrap());
        let c = parse("x1^2+1", &v).unwrap();
        assert!(c.div_exact(&b).is_none());
    }

    #[test]
    fn euler_identity_small() {
        // d*F == sum x_i dF/dx_i for a specific quartic form.
        let v = vs(&["x1", "x2", "x3"]);
        let f = parse("x1^4+2*x1^2*x2^2+x3^4-x1*x2*x3^2", &v).unwrap();
        assert!(f.is_homogeneous());
        let mut acc = Polynomial::zero(&v);
        for i in 0..3 {
            let xi = Polynomial::variable(&v, i);
            acc = &acc + &(&xi * &f.differentiate(i).unwrap());
        }
        assert_eq!(acc, f.scale(&BigRational::from_integer(BigInt::from(4))));
    }
}
