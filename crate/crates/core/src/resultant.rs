//! Exact resultants and discriminants.
//!
//! Sylvester matrices cover two polynomials (and binary forms); the
//! classical Macaulay numerator/denominator construction covers `n` forms
//! in `n` variables at desk scale. Discriminants are resultants of the
//! gradient, with the constant extraneous factor removed by primitive
//! normalization. Membership in the discriminantal variety of several
//! forms is decided through a Groebner basis of the rank-deficiency ideal.

use num::{BigInt, BigRational, One};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::groebner::{buchberger, GroebnerConfig, GroebnerError, Ideal, TermOrder};
use crate::poly::{Degree, Monomial, Polynomial, VarSet};

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum ResultantError {
    #[error("zero polynomial input")]
    ZeroInput,
    #[error("input is not homogeneous in the form variables")]
    NotHomogeneous,
    #[error("number of forms must equal number of form variables")]
    DimensionMismatch,
    #[error("form degree must be at least {min}")]
    DegreeTooSmall { min: u64 },
    #[error("at least one form degree must exceed 1")]
    DegreePreconditionViolated,
    #[error("Macaulay denominator vanished after {0} re-randomizations")]
    DegenerateSpecialization(u32),
    #[error("problem size beyond desk scale: {0}")]
    DimensionTooLarge(String),
    #[error("variable collision while homogenizing")]
    VariableCollision,
    #[error(transparent)]
    Groebner(#[from] GroebnerError),
}

// ---------------------------------------------------------------------------
// Determinants of polynomial matrices (fraction-free Bareiss).

/// Exact determinant of a square matrix of polynomials over one variable
/// set. Divisions in the Bareiss recurrence are exact by construction.
pub fn det_polynomial_matrix(mat: &[Vec<Polynomial>]) -> Polynomial {
    let n = mat.len();
    assert!(n > 0, "empty matrix has no variable set");
    assert!(mat.iter().all(|r| r.len() == n), "matrix must be square");
    let vars = mat[0][0].vars().clone();
    if n == 1 {
        return mat[0][0].clone();
    }
    let mut b: Vec<Vec<Polynomial>> = mat.to_vec();
    let mut sign = 1i32;
    let mut prev = Polynomial::one(&vars);
    for k in 0..n - 1 {
        // Sparsest nonzero pivot in column k keeps intermediate growth down.
        let pivot = (k..n)
            .filter(|&r| !b[r][k].is_zero())
            .min_by_key(|&r| (b[r][k].num_terms(), r));
        let Some(p) = pivot else {
            return Polynomial::zero(&vars);
        };
        if p != k {
            b.swap(p, k);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = &(&b[i][j] * &b[k][k]) - &(&b[i][k] * &b[k][j]);
                b[i][j] = t.div_exact(&prev).expect("Bareiss division is exact");
            }
            b[i][k] = Polynomial::zero(&vars);
        }
        prev = b[k][k].clone();
    }
    let det = b[n - 1][n - 1].clone();
    if sign < 0 {
        det.scale(&-BigRational::one())
    } else {
        det
    }
}

// ---------------------------------------------------------------------------
// Sylvester resultants.

/// Sylvester matrix of `f` and `g` viewed as univariate in one variable,
/// entries polynomial in the remaining variables. Its determinant is the
/// resultant up to the classical sign convention.
#[derive(Debug, Clone)]
pub struct SylvesterMatrix {
    pub entries: Vec<Vec<Polynomial>>,
}

impl SylvesterMatrix {
    pub fn build(f: &Polynomial, g: &Polynomial, var: usize) -> Result<Self, ResultantError> {
        if f.is_zero() || g.is_zero() {
            return Err(ResultantError::ZeroInput);
        }
        let cf = f.coefficients_in_var(var);
        let cg = g.coefficients_in_var(var);
        Ok(SylvesterMatrix {
            entries: sylvester_entries(&cf, &cg, f.vars()),
        })
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn determinant(&self) -> Polynomial {
        det_polynomial_matrix(&self.entries)
    }
}

/// Rows: deg(g) shifts of f's coefficients (descending), then deg(f) of g's.
fn sylvester_entries(cf: &[Polynomial], cg: &[Polynomial], vars: &VarSet) -> Vec<Vec<Polynomial>> {
    let d1 = cf.len() - 1;
    let d2 = cg.len() - 1;
    let n = d1 + d2;
    let zero = Polynomial::zero(vars);
    let mut rows = Vec::with_capacity(n);
    for s in 0..d2 {
        let mut row = vec![zero.clone(); n];
        for (k, c) in cf.iter().rev().enumerate() {
            row[s + k] = c.clone();
        }
        rows.push(row);
    }
    for s in 0..d1 {
        let mut row = vec![zero.clone(); n];
        for (k, c) in cg.iter().rev().enumerate() {
            row[s + k] = c.clone();
        }
        rows.push(row);
    }
    rows
}

/// Resultant of `f` and `g` with respect to `var`: the exact Sylvester
/// determinant. Vanishes iff the two share a root. Degrees are the actual
/// degrees in `var`; a constant input `c` yields `c^deg(other)`.
pub fn sylvester_resultant(
    f: &Polynomial,
    g: &Polynomial,
    var: usize,
) -> Result<Polynomial, ResultantError> {
    if f.is_zero() || g.is_zero() {
        return Err(ResultantError::ZeroInput);
    }
    let d1 = f.degree_in_var(var).finite().unwrap_or(0);
    let d2 = g.degree_in_var(var).finite().unwrap_or(0);
    if d1 == 0 && d2 == 0 {
        return Ok(Polynomial::one(f.vars()));
    }
    if d1 == 0 {
        return Ok(f.pow(d2 as u32));
    }
    if d2 == 0 {
        return Ok(g.pow(d1 as u32));
    }
    let m = SylvesterMatrix::build(f, g, var)?;
    Ok(m.determinant())
}

/// Resultant of two binary forms in `(v1, v2)` with declared degrees equal
/// to their total form degrees. Keeping the full matrix size (zero leading
/// coefficients allowed) detects common roots at infinity, which the plain
/// dehomogenized univariate route misses.
pub fn binary_form_resultant(
    f: &Polynomial,
    g: &Polynomial,
    v1: usize,
    v2: usize,
) -> Result<Polynomial, ResultantError> {
    if f.is_zero() || g.is_zero() {
        return Err(ResultantError::ZeroInput);
    }
    let in_pair = |v: usize| v == v1 || v == v2;
    if !f.is_homogeneous_in(in_pair) || !g.is_homogeneous_in(in_pair) {
        return Err(ResultantError::NotHomogeneous);
    }
    let d1 = f.degree_in(in_pair).finite().unwrap();
    let d2 = g.degree_in(in_pair).finite().unwrap();
    if d1 == 0 && d2 == 0 {
        return Ok(Polynomial::one(f.vars()));
    }
    if d1 == 0 {
        return Ok(f.pow(d2 as u32));
    }
    if d2 == 0 {
        return Ok(g.pow(d1 as u32));
    }
    let cf = binary_coefficients(f, v1, v2, d1);
    let cg = binary_coefficients(g, v1, v2, d2);
    let rows = sylvester_entries(&cf, &cg, f.vars());
    Ok(det_polynomial_matrix(&rows))
}

/// Coefficient of v1^k v2^(d-k), for k = 0..=d, as polynomials in the rest.
fn binary_coefficients(f: &Polynomial, v1: usize, v2: usize, d: u64) -> Vec<Polynomial> {
    let vars = f.vars();
    let mut out = vec![Polynomial::zero(vars); d as usize + 1];
    for (m, c) in f.terms() {
        let k = m.exponent_of(v1) as usize;
        let pairs: Vec<(u32, u32)> = m
            .pairs()
            .iter()
            .copied()
            .filter(|&(v, _)| v as usize != v1 && v as usize != v2)
            .collect();
        out[k].add_term(Monomial::from_pairs(pairs), c.clone());
    }
    out
}

// ---------------------------------------------------------------------------
// Macaulay resultants.

/// Macaulay's numerator matrix and denominator minor for `n` forms in `n`
/// variables at the target degree `sum(d_i - 1) + 1`. The resultant is
/// `det(numerator) / det(denominator)` whenever the denominator does not
/// vanish at the specialization.
#[derive(Debug)]
pub struct MacaulayPair {
    pub numerator: Vec<Vec<Polynomial>>,
    pub denominator: Vec<Vec<Polynomial>>,
    pub target_degree: u64,
}

fn monomials_of_degree(nvars: usize, degree: u64) -> Vec<Vec<u32>> {
    fn rec(nvars: usize, degree: u64, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if nvars == 1 {
            prefix.push(degree as u32);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for e in (0..=degree).rev() {
            prefix.push(e as u32);
            rec(nvars - 1, degree - e, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(nvars, degree, &mut Vec::new(), &mut out);
    out
}

impl MacaulayPair {
    pub fn build(forms: &[Polynomial], form_vars: &[usize]) -> Result<Self, ResultantError> {
        let n = form_vars.len();
        assert!(n >= 2, "Macaulay construction needs at least two forms");
        let vars = forms[0].vars().clone();
        let degrees: Vec<u64> = forms
            .iter()
            .map(|f| f.degree_in(|v| form_vars.contains(&v)).finite().unwrap())
            .collect();
        let target: u64 = degrees.iter().map(|d| d - 1).sum::<u64>() + 1;
        let cols = monomials_of_degree(n, target);
        if cols.len() > 220 {
            return Err(ResultantError::DimensionTooLarge(format!(
                "Macaulay matrix would be {0}x{0}",
                cols.len()
            )));
        }
        let col_index: std::collections::BTreeMap<Vec<u32>, usize> =
            cols.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();

        // Class of a column monomial: least i with x_i^{d_i} dividing it.
        let class_of = |m: &[u32]| -> usize {
            (0..n)
                .find(|&i| m[i] as u64 >= degrees[i])
                .expect("every degree-D monomial is divisible by some x_i^{d_i}")
        };
        // Reduced: divisible by x_i^{d_i} for exactly one i.
        let is_reduced =
            |m: &[u32]| -> bool { (0..n).filter(|&i| m[i] as u64 >= degrees[i]).count() == 1 };

        let zero = Polynomial::zero(&vars);
        let dim = cols.len();
        let mut numerator = vec![vec![zero.clone(); dim]; dim];
        for (r, m) in cols.iter().enumerate() {
            let i = class_of(m);
            let mut shifted = m.clone();
            shifted[i] -= degrees[i] as u32;
            let shift_mon = Monomial::from_pairs(
                shifted
                    .iter()
                    .enumerate()
                    .map(|(k, &e)| (form_vars[k] as u32, e))
                    .collect(),
            );
            let row_poly = forms[i].mul_monomial(&shift_mon, &BigRational::one());
            for (mon, coef) in row_poly.terms() {
                let key: Vec<u32> = form_vars.iter().map(|&v| mon.exponent_of(v)).collect();
                let c = *col_index
                    .get(&key)
                    .expect("row polynomial stays in degree D");
                // Keep parameter monomials: entries are polynomials in the
                // non-form variables.
                let param_pairs: Vec<(u32, u32)> = mon
                    .pairs()
                    .iter()
                    .copied()
                    .filter(|&(v, _)| !form_vars.contains(&(v as usize)))
                    .collect();
                numerator[r][c].add_term(Monomial::from_pairs(param_pairs), coef.clone());
            }
        }

        let keep: Vec<usize> = (0..dim).filter(|&i| !is_reduced(&cols[i])).collect();
        let denominator: Vec<Vec<Polynomial>> = keep
            .iter()
            .map(|&r| keep.iter().map(|&c| numerator[r][c].clone()).collect())
            .collect();

        Ok(MacaulayPair {
            numerator,
            denominator,
            target_degree: target,
        })
    }

    /// `det(numerator) / det(denominator)`; `None` when the denominator
    /// vanishes at this specialization.
    pub fn resultant(&self) -> Option<Polynomial> {
        let vars = self.numerator[0][0].vars().clone();
        let den = if self.denominator.is_empty() {
            Polynomial::one(&vars)
        } else {
            det_polynomial_matrix(&self.denominator)
        };
        if den.is_zero() {
            return None;
        }
        let num = det_polynomial_matrix(&self.numerator);
        num.div_exact(&den)
    }
}

/// Applies the linear substitution `x_i -> sum_j t[i][j] x_j` to the form
/// variables of `f`.
fn substitute_linear(f: &Polynomial, form_vars: &[usize], t: &[Vec<i64>]) -> Polynomial {
    let vars = f.vars();
    let images: Vec<Polynomial> = (0..form_vars.len())
        .map(|i| {
            let mut p = Polynomial::zero(vars);
            for (j, &vj) in form_vars.iter().enumerate() {
                if t[i][j] != 0 {
                    p.add_term(
                        Monomial::var(vj, 1),
                        BigRational::from_integer(BigInt::from(t[i][j])),
                    );
                }
            }
            p
        })
        .collect();
    let mut out = Polynomial::zero(vars);
    for (m, c) in f.terms() {
        let rest: Vec<(u32, u32)> = m
            .pairs()
            .iter()
            .copied()
            .filter(|&(v, _)| !form_vars.contains(&(v as usize)))
            .collect();
        let mut term = Polynomial::monomial_term(vars, Monomial::from_pairs(rest), c.clone());
        for (i, &vi) in form_vars.iter().enumerate() {
            let e = m.exponent_of(vi);
            if e > 0 {
                term = &term * &images[i].pow(e);
            }
        }
        out = &out + &term;
    }
    out
}

/// Random unimodular integer matrix built from shear operations.
fn unimodular(n: usize, seed: u64) -> Vec<Vec<i64>> {
    let mut t: Vec<Vec<i64>> = (0..n)
        .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..2 * n {
        let i = rng.gen_range(0..n);
        let mut j = rng.gen_range(0..n);
        while j == i {
            j = rng.gen_range(0..n);
        }
        let c = [-2i64, -1, 1, 2][rng.gen_range(0..4)];
        for k in 0..n {
            t[i][k] += c * t[j][k];
        }
    }
    t
}

/// Resultant of `n` forms in the `n` form variables via the Macaulay
/// quotient. Desk scale: at most 4 form variables. On a vanishing
/// denominator the system is re-randomized by a unimodular change of the
/// form variables (which leaves the resultant unchanged up to sign) with a
/// budget of 5 retries.
pub fn macaulay_resultant(
    forms: &[Polynomial],
    form_vars: &[usize],
) -> Result<Polynomial, ResultantError> {
    let n = form_vars.len();
    if forms.len() != n || n == 0 {
        return Err(ResultantError::DimensionMismatch);
    }
    if n > 4 {
        return Err(ResultantError::DimensionTooLarge(format!(
            "{n} form variables; the Macaulay route is capped at 4"
        )));
    }
    let in_vars = |v: usize| form_vars.contains(&v);
    for f in forms {
        if f.is_zero() {
            return Err(ResultantError::ZeroInput);
        }
        if !f.is_homogeneous_in(in_vars) {
            return Err(ResultantError::NotHomogeneous);
        }
        if f.degree_in(in_vars) == Degree::Finite(0) {
            return Err(ResultantError::DegreeTooSmall { min: 1 });
        }
    }
    if n == 1 {
        // One form c * x^d in one variable: the resultant is its coefficient.
        let d = forms[0].degree_in(in_vars).finite().unwrap();
        let v = form_vars[0];
        let coefs = forms[0].coefficients_in_var(v);
        return Ok(coefs[d as usize].clone());
    }

    const RETRIES: u32 = 5;
    for attempt in 0..=RETRIES {
        let current: Vec<Polynomial> = if attempt == 0 {
            forms.to_vec()
        } else {
            let t = unimodular(n, attempt as u64);
            forms
                .iter()
                .map(|f| substitute_linear(f, form_vars, &t))
                .collect()
        };
        let pair = MacaulayPair::build(&current, form_vars)?;
        if let Some(res) = pair.resultant() {
            return Ok(res);
        }
    }
    Err(ResultantError::DegenerateSpecialization(RETRIES))
}

// ---------------------------------------------------------------------------
// Discriminants.

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DiscriminantMode {
    /// Input must be homogeneous in the form variables.
    Form,
    /// Input is homogenized in the form variables first.
    Affine,
}

/// Discriminant without normalization: the exact resultant of the gradient
/// under the determinant conventions above. Scaling `f` by `c` scales the
/// result by `c^(n(d-1)^(n-1))`.
pub fn discriminant_raw(
    f: &Polynomial,
    form_vars: &[usize],
    mode: DiscriminantMode,
) -> Result<Polynomial, ResultantError> {
    match mode {
        DiscriminantMode::Form => {
            let in_vars = |v: usize| form_vars.contains(&v);
            if !f.is_homogeneous_in(in_vars) {
                return Err(ResultantError::NotHomogeneous);
            }
            let d = f
                .degree_in(in_vars)
                .finite()
                .ok_or(ResultantError::ZeroInput)?;
            if d < 2 {
                return Err(ResultantError::DegreeTooSmall { min: 2 });
            }
            let grads: Vec<Polynomial> = form_vars
                .iter()
                .map(|&v| f.differentiate(v).expect("var in set"))
                .collect();
            if grads.iter().any(|g| g.is_zero()) {
                // n-1 forms in n variables always share a projective zero.
                return Ok(Polynomial::zero(f.vars()));
            }
            match form_vars.len() {
                1 => {
                    let v = form_vars[0];
                    let e = grads[0].degree_in_var(v).finite().unwrap();
                    Ok(grads[0].coefficients_in_var(v)[e as usize].clone())
                }
                2 => binary_form_resultant(&grads[0], &grads[1], form_vars[0], form_vars[1]),
                _ => macaulay_resultant(&grads, form_vars),
            }
        }
        DiscriminantMode::Affine => {
            let fresh = fresh_var_name(f.vars());
            let (fh, idx) = homogenize_in(f, form_vars, &fresh)?;
            let mut vars2 = form_vars.to_vec();
            vars2.push(idx);
            discriminant_raw(&fh, &vars2, DiscriminantMode::Form)
        }
    }
}

/// Discriminant of a form (or of the homogenization of an affine
/// polynomial), normalized to coprime integer coefficients with a positive
/// leading coefficient. Vanishes iff the gradient has a nonzero complex
/// zero.
pub fn discriminant(
    f: &Polynomial,
    form_vars: &[usize],
    mode: DiscriminantMode,
) -> Result<Polynomial, ResultantError> {
    Ok(discriminant_raw(f, form_vars, mode)?.primitive_part())
}

fn fresh_var_name(vars: &VarSet) -> String {
    if vars.index_of("x0").is_none() {
        return "x0".to_string();
    }
    let mut k = 0;
    loop {
        let cand = format!("x0_{k}");
        if vars.index_of(&cand).is_none() {
            return cand;
        }
        k += 1;
    }
}

/// Homogenizes `f` in the given variables only (other variables act as
/// coefficients), using a fresh variable appended to the set. Returns the
/// form and the new variable's index in the enlarged set.
pub fn homogenize_in(
    f: &Polynomial,
    form_vars: &[usize],
    newvar: &str,
) -> Result<(Polynomial, usize), ResultantError> {
    let in_vars = |v: usize| form_vars.contains(&v);
    let d = match f.degree_in(in_vars) {
        Degree::NegInfinity => 0,
        Degree::Finite(d) => d,
    };
    let (vars2, idx) = f
        .vars()
        .with_appended(newvar)
        .map_err(|_| ResultantError::VariableCollision)?;
    let mut out = Polynomial::zero(&vars2);
    for (m, c) in f.terms() {
        let pad = (d - m.degree_in(in_vars)) as u32;
        let mut pairs = m.pairs().to_vec();
        if pad > 0 {
            pairs.push((idx as u32, pad));
        }
        out.add_term(Monomial::from_pairs(pairs), c.clone());
    }
    Ok((out, idx))
}

// ---------------------------------------------------------------------------
// Membership in the discriminantal variety W(d_0, ..., d_m).

/// Decides whether the system `f_0 = ... = f_m = 0` (forms over all the
/// variables of their set, exact numeric coefficients) has a singular
/// projective solution: the ideal generated by the forms and the
/// (m+1)-minors of their Jacobian has a zero set larger than the origin.
///
/// The test is the pure-power criterion on a grevlex Groebner basis: the
/// variety lies in the origin iff a pure power of every variable appears
/// among the leading terms.
pub fn in_discriminantal_variety(
    forms: &[Polynomial],
    config: &GroebnerConfig,
) -> Result<bool, ResultantError> {
    assert!(!forms.is_empty());
    let vars = forms[0].vars().clone();
    let nvars = vars.len();
    let m = forms.len() - 1;
    assert!(m + 1 <= nvars, "need at most as many forms as variables");
    let mut degrees = Vec::new();
    for f in forms {
        if !f.is_homogeneous() {
            return Err(ResultantError::NotHomogeneous);
        }
        degrees.push(f.degree().finite().ok_or(ResultantError::ZeroInput)?);
    }
    if degrees.iter().all(|&d| d <= 1) {
        return Err(ResultantError::DegreePreconditionViolated);
    }

    // Jacobian rows = variables, columns = forms; adjoin all (m+1)-minors.
    let jac: Vec<Vec<Polynomial>> = (0..nvars)
        .map(|v| forms.iter().map(|f| f.differentiate(v).unwrap()).collect())
        .collect();
    let mut gens: Vec<Polynomial> = forms.to_vec();
    for rows in subsets_of_size(nvars, m + 1) {
        let sub: Vec<Vec<Polynomial>> = rows.iter().map(|&r| jac[r].clone()).collect();
        gens.push(det_polynomial_matrix(&sub));
    }
    gens.retain(|g| !g.is_zero());
    if gens.is_empty() {
        return Ok(true); // zero ideal: the whole space is singular
    }

    let ideal = Ideal::new(gens, TermOrder::GrevLex)?;
    let gb = buchberger(&ideal, config)?;
    let mut covered = vec![false; nvars];
    for g in gb.generators() {
        if let Some((lm, _)) = g.leading_term() {
            if lm.is_one() {
                // Unit ideal: empty variety, not even the origin.
                return Ok(false);
            }
            if let Some(v) = lm.pure_power_var() {
                covered[v] = true;
            }
        }
    }
    Ok(!covered.iter().all(|&c| c))
}

pub(crate) fn subsets_of_size(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse;

    fn vs(names: &[&str]) -> VarSet {
        VarSet::new(names.iter().copied()).unwrap()
    }

    fn matches_up_to_sign(a: &Polynomial, b: &Polynomial) -> bool {
        a == b || *a == b.scale(&-BigRational::one())
    }

    #[test]
    fn resultant_of_shifted_linears_is_two() {
        let v = vs(&["x"]);
        let f = parse("x-1", &v).unwrap();
        let g = parse("x+1", &v).unwrap();
        let r = sylvester_resultant(&f, &g, 0).unwrap();
        assert_eq!(r, parse("2", &v).unwrap());
    }

    #[test]
    fn resultant_with_self_vanishes() {
        let v = vs(&["x", "y"]);
        for src in ["x^2+3*x-1", "x^3-y*x+2", "5*x-7"] {
            let f = parse(src, &v).unwrap();
            let r = sylvester_resultant(&f, &f, 0).unwrap();
            assert!(r.is_zero(), "Res(f,f) != 0 for {src}");
        }
    }

    #[test]
    fn binary_quadratic_resultant_matches_formula() {
        let v = vs(&["x1", "x2", "a", "b", "c", "d", "e", "f"]);
        let f1 = parse("a*x1^2+b*x1*x2+c*x2^2", &v).unwrap();
        let f2 = parse("d*x1^2+e*x1*x2+f*x2^2", &v).unwrap();
        let printed = parse(
            "c^2*d^2-b*c*d*e+a*c*e^2+b^2*d*f-2*a*c*d*f-a*b*e*f+a^2*f^2",
            &v,
        )
        .unwrap();
        let r = binary_form_resultant(&f1, &f2, 0, 1).unwrap();
        assert!(matches_up_to_sign(&r, &printed), "got {r}");
        // Same through the dehomogenized univariate route.
        let r2 = sylvester_resultant(&f1.set_var_one(1), &f2.set_var_one(1), 0).unwrap();
        assert!(matches_up_to_sign(&r2, &printed), "got {r2}");
    }

    #[test]
    fn binary_cubic_discriminant_matches_paper_formula() {
        let v = vs(&["x1", "x2", "a", "b", "c", "d"]);
        let f = parse("a*x1^3+b*x1^2*x2+c*x1*x2^2+d*x2^3", &v).unwrap();
        let disc = discriminant(&f, &[0, 1], DiscriminantMode::Form).unwrap();
        let printed = parse("b^2*c^2-4*a*c^3-4*b^3*d+18*a*b*c*d-27*a^2*d^2", &v)
            .unwrap()
            .primitive_part();
        assert!(matches_up_to_sign(&disc, &printed), "got {disc}");
    }

    #[test]
    fn norm_fourth_power_has_zero_discriminant() {
        let v = vs(&["x1", "x2"]);
        let f = parse("x1^4+2*x1^2*x2^2+x2^4", &v).unwrap();
        let disc = discriminant(&f, &[0, 1], DiscriminantMode::Form).unwrap();
        assert!(disc.is_zero());
    }

    #[test]
    fn macaulay_matches_sylvester_for_two_forms() {
        let v = vs(&["x1", "x2"]);
        let f = parse("3*x1^2+x1*x2-x2^2", &v).unwrap();
        let g = parse("x1^3-2*x2^3+x1*x2^2", &v).unwrap();
        let mac = macaulay_resultant(&[f.clone(), g.clone()], &[0, 1]).unwrap();
        let syl = binary_form_resultant(&f, &g, 0, 1).unwrap();
        assert!(matches_up_to_sign(&mac, &syl));
        assert!(!mac.is_zero());
    }

    #[test]
    fn macaulay_linear_forms_are_determinant() {
        let v = vs(&["x1", "x2", "x3"]);
        let forms = [
            parse("2*x1-x2+x3", &v).unwrap(),
            parse("x1+4*x2-2*x3", &v).unwrap(),
            parse("3*x1+x2+x3", &v).unwrap(),
        ];
        let r = macaulay_resultant(&forms, &[0, 1, 2]).unwrap();
        // det [[2,-1,1],[1,4,-2],[3,1,1]] = 8
        let expected = parse("8", &v).unwrap();
        assert!(matches_up_to_sign(&r, &expected), "got {r}");
    }

    #[test]
    fn macaulay_detects_visibly_singular_system() {
        let v = vs(&["x1", "x2", "x3"]);
        let forms = [
            parse("x1^2", &v).unwrap(),
            parse("x2^2", &v).unwrap(),
            parse("x1^2+x2^2", &v).unwrap(),
        ];
        // Common root (0,0,1).
        let r = macaulay_resultant(&forms, &[0, 1, 2]).unwrap();
        assert!(r.is_zero());
    }

    #[test]
    fn quadratic_form_discriminant_is_determinant_multiple() {
        // f = x'Ax for symbolic symmetric 3x3 A: disc(f) ~ det A.
        let v = vs(&["x1", "x2", "x3", "a11", "a12", "a13", "a22", "a23", "a33"]);
        let f = parse(
            "a11*x1^2+2*a12*x1*x2+2*a13*x1*x3+a22*x2^2+2*a23*x2*x3+a33*x3^2",
            &v,
        )
        .unwrap();
        let disc = discriminant(&f, &[0, 1, 2], DiscriminantMode::Form).unwrap();
        let det = parse(
            "a11*a22*a33-a11*a23^2-a12^2*a33+2*a12*a13*a23-a13^2*a22",
            &v,
        )
        .unwrap()
        .primitive_part();
        assert!(matches_up_to_sign(&disc, &det), "got {disc}");
    }

    #[test]
    fn discriminantal_variety_membership_examples() {
        let cfg = GroebnerConfig::default();
        let v = vs(&["x0", "x1"]);
        let f = parse("x0^2+3*x0*x1", &v).unwrap();
        assert!(in_discriminantal_variety(&[f.clone(), f], &cfg).unwrap());

        let g1 = parse("x0^2+x1^2", &v).unwrap();
        let g2 = parse("x0*x1", &v).unwrap();
        assert!(!in_discriminantal_variety(&[g1, g2], &cfg).unwrap());

        let lin1 = parse("x0", &v).unwrap();
        let lin2 = parse("x1", &v).unwrap();
        assert_eq!(
            in_discriminantal_variety(&[lin1, lin2], &cfg),
            Err(ResultantError::DegreePreconditionViolated)
        );
    }

    #[test]
    fn affine_discriminant_of_univariate_quadratic() {
        let v = vs(&["x", "b", "c"]);
        let f = parse("x^2+b*x+c", &v).unwrap();
        let disc = discriminant(&f, &[0], DiscriminantMode::Affine).unwrap();
        // Homogenized: x^2+b*x*x0+c*x0^2; disc ~ b^2-4c.
        let vv = disc.vars().clone();
        let printed = parse("b^2-4*c", &vv).unwrap();
        assert!(matches_up_to_sign(&disc, &printed), "got {disc}");
    }
}
