//! Closed-form degree calculus for discriminants.
//!
//! Degrees of the discriminant of several forms come from complete
//! symmetric polynomials; degrees in the multihomogeneous setting come from
//! a coefficient of a rational power series, extracted by exact truncated
//! series arithmetic over the integers.

use std::collections::BTreeMap;

use num::{BigInt, One, Zero};
use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum DegreeError {
    #[error("argument list must be nonempty")]
    EmptyList,
    #[error("index {index} out of range for {len} degrees")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("all degrees are 1: the locus is not a hypersurface")]
    AllDegreesOne,
    #[error("degree list longer than the variable count")]
    TooManyForms,
    #[error("degrees must be positive")]
    ZeroDegree,
    #[error("hypersurface condition fails for group {0}")]
    HypersurfaceConditionViolated(usize),
}

/// The variety of tuples of forms (in `num_vars` variables, of the given
/// degrees) whose common zero set has a rank-deficient Jacobian point.
/// Internally `n = num_vars - 1` and `m = degrees.len() - 1`, matching the
/// projective space convention.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiscriminantSpec {
    num_vars: usize,
    degrees: Vec<u64>,
}

impl DiscriminantSpec {
    pub fn new(num_vars: usize, degrees: Vec<u64>) -> Result<Self, DegreeError> {
        if degrees.is_empty() {
            return Err(DegreeError::EmptyList);
        }
        if degrees.iter().any(|&d| d == 0) {
            return Err(DegreeError::ZeroDegree);
        }
        if degrees.len() > num_vars {
            return Err(DegreeError::TooManyForms);
        }
        if degrees.iter().all(|&d| d == 1) {
            return Err(DegreeError::AllDegreesOne);
        }
        Ok(DiscriminantSpec { num_vars, degrees })
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn degrees(&self) -> &[u64] {
        &self.degrees
    }
}

/// k-th complete symmetric polynomial: the sum of all degree-k monomials
/// in the arguments.
pub fn complete_symmetric(k: u64, a: &[BigInt]) -> Result<BigInt, DegreeError> {
    if a.is_empty() {
        return Err(DegreeError::EmptyList);
    }
    // dp[j] = S_j over the prefix processed so far.
    let k = k as usize;
    let mut dp = vec![BigInt::zero(); k + 1];
    dp[0] = BigInt::one();
    for ai in a {
        let mut next = vec![BigInt::zero(); k + 1];
        for j in 0..=k {
            // next[j] = sum_{e=0..j} ai^e * dp[j-e]  (one extra variable)
            let mut pw = BigInt::one();
            for e in 0..=j {
                next[j] += &pw * &dp[j - e];
                pw *= ai;
            }
        }
        dp = next;
    }
    Ok(dp[k].clone())
}

/// Degree of the discriminant of several forms in the coefficients of the
/// k-th form: `prod_{i != k} d_i * S_{n-m}(d_0-1, ..., d_k-1 twice, ..., d_m-1)`.
pub fn disc_degree_in_fk(spec: &DiscriminantSpec, k: usize) -> Result<BigInt, DegreeError> {
    let m = spec.degrees.len() - 1;
    if k > m {
        return Err(DegreeError::IndexOutOfRange {
            index: k,
            len: spec.degrees.len(),
        });
    }
    let n = spec.num_vars - 1;
    let mut prod = BigInt::one();
    for (i, &d) in spec.degrees.iter().enumerate() {
        if i != k {
            prod *= BigInt::from(d);
        }
    }
    // Argument list with d_k - 1 repeated twice.
    let mut args: Vec<BigInt> = Vec::with_capacity(m + 2);
    for (i, &d) in spec.degrees.iter().enumerate() {
        args.push(BigInt::from(d - 1));
        if i == k {
            args.push(BigInt::from(d - 1));
        }
    }
    Ok(prod * complete_symmetric((n - m) as u64, &args)?)
}

/// Total degree of the discriminant of several forms: the sum of the
/// per-form degrees.
pub fn disc_total_degree(spec: &DiscriminantSpec) -> Result<BigInt, DegreeError> {
    let mut total = BigInt::zero();
    for k in 0..spec.degrees.len() {
        total += disc_degree_in_fk(spec, k)?;
    }
    Ok(total)
}

/// Multihomogeneous setting: `r` groups of variables with sizes
/// `group_dims` and per-group degrees `group_degrees`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiHomogSpec {
    group_dims: Vec<usize>,
    group_degrees: Vec<u64>,
}

impl MultiHomogSpec {
    pub fn new(group_dims: Vec<usize>, group_degrees: Vec<u64>) -> Result<Self, DegreeError> {
        if group_dims.is_empty() || group_dims.len() != group_degrees.len() {
            return Err(DegreeError::EmptyList);
        }
        if group_dims.iter().any(|&n| n == 0) || group_degrees.iter().any(|&d| d == 0) {
            return Err(DegreeError::ZeroDegree);
        }
        let total: usize = group_dims.iter().sum::<usize>() - group_dims.len();
        for (i, (&n, &d)) in group_dims.iter().zip(&group_degrees).enumerate() {
            if d == 1 && 2 * (n - 1) > total {
                return Err(DegreeError::HypersurfaceConditionViolated(i));
            }
        }
        Ok(MultiHomogSpec {
            group_dims,
            group_degrees,
        })
    }

    pub fn group_dims(&self) -> &[usize] {
        &self.group_dims
    }

    pub fn group_degrees(&self) -> &[u64] {
        &self.group_degrees
    }
}

/// Truncated multivariate power series over the integers: exponent of
/// `z_i` capped at `caps[i]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Series {
    caps: Vec<u32>,
    coeffs: BTreeMap<Vec<u32>, BigInt>,
}

impl Series {
    pub fn zero(caps: &[u32]) -> Self {
        Series {
            caps: caps.to_vec(),
            coeffs: BTreeMap::new(),
        }
    }

    pub fn constant(caps: &[u32], c: BigInt) -> Self {
        let mut s = Series::zero(caps);
        if !c.is_zero() {
            s.coeffs.insert(vec![0; caps.len()], c);
        }
        s
    }

    pub fn set(&mut self, exps: Vec<u32>, c: BigInt) {
        if exps.iter().zip(&self.caps).any(|(e, cap)| e > cap) {
            return;
        }
        if c.is_zero() {
            self.coeffs.remove(&exps);
        } else {
            self.coeffs.insert(exps, c);
        }
    }

    pub fn coeff(&self, exps: &[u32]) -> BigInt {
        self.coeffs.get(exps).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn add(&self, other: &Series) -> Series {
        let mut out = self.clone();
        for (e, c) in &other.coeffs {
            let v = out.coeff(e) + c;
            out.set(e.clone(), v);
        }
        out
    }

    pub fn mul(&self, other: &Series) -> Series {
        let mut out = Series::zero(&self.caps);
        for (ea, ca) in &self.coeffs {
            'terms: for (eb, cb) in &other.coeffs {
                let mut e = ea.clone();
                for (i, x) in e.iter_mut().enumerate() {
                    *x += eb[i];
                    if *x > self.caps[i] {
                        continue 'terms;
                    }
                }
                let v = out.coeff(&e) + ca * cb;
                out.set(e, v);
            }
        }
        out
    }

    /// Multiplicative inverse; requires constant term 1. Coefficients are
    /// solved degree by degree from `self * inv = 1`.
    pub fn inverse(&self) -> Series {
        assert!(
            self.coeff(&vec![0; self.caps.len()]) == BigInt::one(),
            "series inversion needs constant term 1"
        );
        let mut inv = Series::zero(&self.caps);
        let all: Vec<Vec<u32>> = enumerate_exponents(&self.caps);
        for e in all {
            if e.iter().all(|&x| x == 0) {
                inv.set(e, BigInt::one());
                continue;
            }
            // coeff of z^e in self*inv must be zero:
            // inv[e] = - sum_{0 < f <= e} self[f] * inv[e-f]
            let mut acc = BigInt::zero();
            for (f, cf) in &self.coeffs {
                if f.iter().all(|&x| x == 0) {
                    continue;
                }
                if f.iter().zip(&e).any(|(a, b)| a > b) {
                    continue;
                }
                let rest: Vec<u32> = e.iter().zip(f).map(|(a, b)| a - b).collect();
                acc += cf * inv.coeff(&rest);
            }
            inv.set(e, -acc);
        }
        inv
    }
}

fn enumerate_exponents(caps: &[u32]) -> Vec<Vec<u32>> {
    // Graded enumeration so that inversion sees lower totals first.
    let mut all: Vec<Vec<u32>> = vec![vec![]];
    for &cap in caps {
        let mut next = Vec::new();
        for prefix in &all {
            for e in 0..=cap {
                let mut p = prefix.clone();
                p.push(e);
                next.push(p);
            }
        }
        all = next;
    }
    all.sort_by_key(|e| (e.iter().map(|&x| x as u64).sum::<u64>(), e.clone()));
    all
}

/// The polynomial `prod_j (1+z_j) * (1 - sum_j d_j z_j / (1+z_j))`,
/// cleared of denominators:
/// `prod_j (1+z_j) - sum_j d_j z_j prod_{k != j} (1+z_k)`.
pub fn multihomog_base(spec: &MultiHomogSpec, caps: &[u32]) -> Series {
    let r = spec.group_dims.len();
    let one_plus = |skip: Option<usize>| -> Series {
        let mut acc = Series::constant(caps, BigInt::one());
        for j in 0..r {
            if Some(j) == skip {
                continue;
            }
            let mut factor = Series::constant(caps, BigInt::one());
            let mut e = vec![0u32; r];
            e[j] = 1;
            factor.set(e, BigInt::one());
            acc = acc.mul(&factor);
        }
        acc
    };
    let mut base = one_plus(None);
    for j in 0..r {
        let mut term = one_plus(Some(j));
        let mut scaled = Series::zero(caps);
        for (e, c) in &term.coeffs {
            let mut e2 = e.clone();
            e2[j] += 1;
            scaled.set(e2, c * BigInt::from(spec.group_degrees[j]));
        }
        term = scaled;
        // base -= term
        for (e, c) in &term.coeffs {
            let v = base.coeff(e) - c;
            base.set(e.clone(), v);
        }
    }
    base
}

/// Degree of the multihomogeneous discriminant hypersurface: the
/// coefficient of `z_1^(n_1-1) ... z_r^(n_r-1)` in the expansion of the
/// base polynomial raised to the power -2. Computed by exact series
/// inversion followed by squaring.
pub fn multihomog_disc_degree(spec: &MultiHomogSpec) -> Result<BigInt, DegreeError> {
    let caps: Vec<u32> = spec.group_dims.iter().map(|&n| (n - 1) as u32).collect();
    let base = multihomog_base(spec, &caps);
    let inv = base.inverse();
    let sq = inv.mul(&inv);
    Ok(sq.coeff(&caps))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn complete_symmetric_basics() {
        assert_eq!(complete_symmetric(0, &[big(7), big(9)]).unwrap(), big(1));
        assert_eq!(complete_symmetric(2, &[big(1), big(1)]).unwrap(), big(3));
        // S_3 over four copies of 2: C(6,3) * 8 = 160.
        assert_eq!(
            complete_symmetric(3, &[big(2), big(2), big(2), big(2)]).unwrap(),
            big(160)
        );
        assert!(complete_symmetric(1, &[]).is_err());
    }

    #[test]
    fn degree_in_fk_examples() {
        // num_vars=3, degrees (2,2): each form degree 6, total 12.
        let spec = DiscriminantSpec::new(3, vec![2, 2]).unwrap();
        assert_eq!(disc_degree_in_fk(&spec, 0).unwrap(), big(6));
        assert_eq!(disc_total_degree(&spec).unwrap(), big(12));

        // Single ternary cubic: 3*(3-1)^2 = 12.
        let cubic = DiscriminantSpec::new(3, vec![3]).unwrap();
        assert_eq!(disc_degree_in_fk(&cubic, 0).unwrap(), big(12));

        // Single ternary quartic: 27.
        let quartic = DiscriminantSpec::new(3, vec![4]).unwrap();
        assert_eq!(disc_degree_in_fk(&quartic, 0).unwrap(), big(27));

        // Binary quartic: degree 6.
        let bq = DiscriminantSpec::new(2, vec![4]).unwrap();
        assert_eq!(disc_total_degree(&bq).unwrap(), big(6));

        // m = n: matches the resultant degree 6*(1 + 1/2 + 1/3) = 11.
        let res = DiscriminantSpec::new(3, vec![1, 2, 3]).unwrap();
        assert_eq!(disc_total_degree(&res).unwrap(), big(11));

        assert!(matches!(
            disc_degree_in_fk(&spec, 5),
            Err(DegreeError::IndexOutOfRange { .. })
        ));
        assert_eq!(
            DiscriminantSpec::new(3, vec![1, 1]),
            Err(DegreeError::AllDegreesOne)
        );
    }

    #[test]
    fn equal_degree_closed_forms() {
        fn binom(n: u64, k: u64) -> u64 {
            if k > n {
                return 0;
            }
            let mut r = 1u64;
            for i in 0..k {
                r = r * (n - i) / (i + 1);
            }
            r
        }
        for n in 1..=6usize {
            for m in 0..=n {
                for d in 2..=4u64 {
                    let spec = DiscriminantSpec::new(n + 1, vec![d; m + 1]).unwrap();
                    let per = disc_degree_in_fk(&spec, 0).unwrap();
                    let expect_per = big(
                        (binom((n + 1) as u64, (m + 1) as u64)
                            * d.pow(m as u32)
                            * (d - 1).pow((n - m) as u32)) as i64,
                    );
                    assert_eq!(per, expect_per, "per-form degree n={n} m={m} d={d}");
                    let total = disc_total_degree(&spec).unwrap();
                    let expect_total = big(
                        ((n as u64 + 1)
                            * binom(n as u64, m as u64)
                            * d.pow(m as u32)
                            * (d - 1).pow((n - m) as u32)) as i64,
                    );
                    assert_eq!(total, expect_total, "total degree n={n} m={m} d={d}");
                }
            }
        }
    }

    #[test]
    fn multihomog_single_group_matches_single_form() {
        for n in 2..=6usize {
            for d in 2..=5u64 {
                let spec = MultiHomogSpec::new(vec![n], vec![d]).unwrap();
                let got = multihomog_disc_degree(&spec).unwrap();
                let expect = big((n as u64 * (d - 1).pow((n - 1) as u32)) as i64);
                assert_eq!(got, expect, "n={n} d={d}");
            }
        }
    }

    #[test]
    fn multihomog_bilinear_two_by_two_is_determinant_degree() {
        let spec = MultiHomogSpec::new(vec![2, 2], vec![1, 1]).unwrap();
        assert_eq!(multihomog_disc_degree(&spec).unwrap(), big(2));
    }

    #[test]
    fn multihomog_biquadratic_three_three() {
        let spec = MultiHomogSpec::new(vec![3, 3], vec![2, 2]).unwrap();
        assert_eq!(multihomog_disc_degree(&spec).unwrap(), big(129));
    }

    #[test]
    fn hypersurface_condition_rejected() {
        // r=2, dims (4,2), degrees (1,2): 2*(4-1)=6 > 4+2-2=4.
        assert!(matches!(
            MultiHomogSpec::new(vec![4, 2], vec![1, 2]),
            Err(DegreeError::HypersurfaceConditionViolated(0))
        ));
    }

    #[test]
    fn total_degree_is_symmetric_in_degrees() {
        let a = DiscriminantSpec::new(4, vec![2, 3, 4]).unwrap();
        let b = DiscriminantSpec::new(4, vec![4, 2, 3]).unwrap();
        assert_eq!(disc_total_degree(&a).unwrap(), disc_total_degree(&b).unwrap());
    }
}
