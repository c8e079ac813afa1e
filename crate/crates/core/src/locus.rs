//! Discriminantal loci of parametric families by elimination.
//!
//! A family is a polynomial `f(x; p)` whose coefficients are polynomial in
//! parameters. Critical mode builds the dehomogenized critical system
//! `{g, dg/dx_2, ..., dg/dx_n}`; KKT mode builds the stationarity system
//! with fresh Lagrange multipliers; active-subset mode enumerates the
//! admissible sets of active inequalities. Eliminating the `x` (and
//! multiplier) variables leaves generators of an ideal in the parameter
//! ring: the locus polynomials that the boundary parameters satisfy.

use thiserror::Error;

use crate::constraint::ConstraintSet;
use crate::groebner::{eliminate, eliminate_staged, GroebnerConfig, GroebnerError};
use crate::poly::{PolyError, Polynomial, VarSet};
use crate::resultant::subsets_of_size;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum LocusError {
    #[error("family polynomial is not homogeneous in the x variables")]
    NotHomogeneous,
    #[error("critical mode needs a dehomogenization variable for a homogeneous family")]
    MissingDehomogVar,
    #[error("{active} active inequalities exceed the limit n - m = {limit}")]
    TooManyActive { active: usize, limit: usize },
    #[error("parameter and x variables must be disjoint")]
    OverlappingVariables,
    #[error(transparent)]
    Groebner(#[from] GroebnerError),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilyMode {
    /// Dehomogenize, then `{g, dg/dx_i (i != dehomog var)}`.
    Critical,
    /// Stationarity with multipliers over the equality constraints.
    Kkt,
    /// KKT over every admissible subset of active inequalities.
    ActiveSubset,
}

/// A parametric family `f(x; p)` over a constraint set, with designated
/// x-variables and parameters inside one ring.
#[derive(Debug, Clone)]
pub struct FamilySpec {
    pub f: Polynomial,
    pub constraints: ConstraintSet,
    pub x_vars: Vec<usize>,
    pub params: Vec<usize>,
    pub mode: FamilyMode,
    pub dehomog_var: Option<usize>,
}

impl FamilySpec {
    pub fn validate(&self) -> Result<(), LocusError> {
        if self.x_vars.iter().any(|v| self.params.contains(v)) {
            return Err(LocusError::OverlappingVariables);
        }
        Ok(())
    }
}

/// The critical system of a homogeneous family: `f` with `dehomog_var` set
/// to 1, together with the partials in the remaining x variables. For an
/// affine family the same construction applied to its homogenization gives
/// `{f, df/dx_i for all i}`, which is what this returns.
pub fn critical_system(family: &FamilySpec, dehomog_var: Option<usize>) -> Result<Vec<Polynomial>, LocusError> {
    family.validate()?;
    let f = &family.f;
    let homogeneous = f.is_homogeneous_in(|v| family.x_vars.contains(&v));
    if homogeneous && !f.is_constant() {
        let dv = dehomog_var.ok_or(LocusError::MissingDehomogVar)?;
        let g = f.set_var_one(dv);
        let mut sys = vec![g.clone()];
        for &v in &family.x_vars {
            if v == dv {
                continue;
            }
            sys.push(g.differentiate(v)?);
        }
        sys.retain(|p| !p.is_zero());
        if sys.is_empty() {
            sys.push(Polynomial::zero(f.vars()));
        }
        Ok(sys)
    } else {
        // Affine family: critical zeros of f itself.
        let mut sys = vec![f.clone()];
        for &v in &family.x_vars {
            sys.push(f.differentiate(v)?);
        }
        sys.retain(|p| !p.is_zero());
        Ok(sys)
    }
}

/// A KKT system in an enlarged ring with fresh multipliers.
#[derive(Debug, Clone)]
pub struct KktSystem {
    /// Ring ordered as x variables, multipliers, then parameters.
    pub vars: VarSet,
    pub generators: Vec<Polynomial>,
    /// Indices of x variables and multipliers in the enlarged ring.
    pub eliminable: Vec<usize>,
    /// Indices of the multipliers alone.
    pub multipliers: Vec<usize>,
}

/// Builds the stationarity system for the equalities plus the chosen
/// active inequalities:
/// `{ grad_x f + sum lambda_i grad_x c_i, f, every c_i in the system }`.
///
/// Multipliers are fresh variables placed after the x variables and before
/// the parameters, so plain lex is already an elimination order for them.
pub fn kkt_system(family: &FamilySpec, active: &[usize]) -> Result<KktSystem, LocusError> {
    family.validate()?;
    let n = family.x_vars.len();
    let m = family.constraints.equalities.len();
    if active.len() > n.saturating_sub(m) {
        return Err(LocusError::TooManyActive {
            active: active.len(),
            limit: n.saturating_sub(m),
        });
    }
    let constraints: Vec<&Polynomial> = family
        .constraints
        .equalities
        .iter()
        .chain(active.iter().map(|&j| &family.constraints.inequalities[j]))
        .collect();
    let k = constraints.len();

    // Enlarged ring: x..., lambda..., params... (x indices unchanged).
    let old = family.f.vars();
    let x_count = family.x_vars.len();
    let mut names: Vec<String> = family
        .x_vars
        .iter()
        .map(|&v| old.name(v).to_string())
        .collect();
    let mut lam = 1;
    for _ in 0..k {
        let mut name = format!("lm{lam}");
        while old.index_of(&name).is_some() || names.contains(&name) {
            lam += 1;
            name = format!("lm{lam}");
        }
        names.push(name);
        lam += 1;
    }
    for i in 0..old.len() {
        if !family.x_vars.contains(&i) {
            names.push(old.name(i).to_string());
        }
    }
    let vars = VarSet::new(names)?;
    // Old index -> new index.
    let map = |v: usize| -> usize {
        if let Some(pos) = family.x_vars.iter().position(|&x| x == v) {
            pos
        } else {
            // Non-x variables keep their relative order after the lambdas.
            let before: usize = (0..v).filter(|i| !family.x_vars.contains(i)).count();
            x_count + k + before
        }
    };
    let fx = family.f.remap_vars(&vars, map);
    let cons: Vec<Polynomial> = constraints.iter().map(|c| c.remap_vars(&vars, map)).collect();
    let multipliers: Vec<usize> = (x_count..x_count + k).collect();

    let mut gens = Vec::new();
    for xi in 0..x_count {
        let mut eq = fx.differentiate(xi)?;
        for (li, c) in cons.iter().enumerate() {
            let lambda = Polynomial::variable(&vars, multipliers[li]);
            eq = &eq + &(&lambda * &c.differentiate(xi)?);
        }
        gens.push(eq);
    }
    gens.push(fx);
    gens.extend(cons);
    gens.retain(|g| !g.is_zero());

    let eliminable: Vec<usize> = (0..x_count + k).collect();
    Ok(KktSystem {
        vars,
        generators: gens,
        eliminable,
        multipliers,
    })
}

/// Elimination output for one system of a family.
#[derive(Debug, Clone)]
pub struct LocusSystem {
    /// Active inequality indices for this system (empty in critical/KKT mode).
    pub active: Vec<usize>,
    /// Generators of the elimination ideal, expressed in the family's ring.
    pub generators: Vec<Polynomial>,
    /// The elimination ideal is zero: the positive-dimensional singular
    /// locus signal, a first-class result.
    pub zero_ideal: bool,
    /// The elimination ideal is the unit ideal: an empty locus.
    pub unit_ideal: bool,
}

#[derive(Debug, Clone)]
pub struct LocusReport {
    pub systems: Vec<LocusSystem>,
}

fn finish_system(
    family: &FamilySpec,
    active: Vec<usize>,
    gens_in_param_ring: Vec<Polynomial>,
) -> LocusSystem {
    let zero_ideal = gens_in_param_ring.is_empty();
    let unit_ideal = gens_in_param_ring
        .iter()
        .any(|g| g.is_constant() && !g.is_zero());
    // Re-express in the family's original ring (generators use only params).
    let target = family.f.vars().clone();
    let generators = gens_in_param_ring
        .iter()
        .map(|g| {
            let src = g.vars().clone();
            g.remap_vars(&target, |v| {
                target
                    .index_of(src.name(v))
                    .expect("parameter name exists in the family ring")
            })
        })
        .collect();
    LocusSystem {
        active,
        generators,
        zero_ideal,
        unit_ideal,
    }
}

/// Eliminates the x (and multiplier) variables of every system of the
/// family, returning per-system generators in the parameter ring.
pub fn discriminantal_locus(
    family: &FamilySpec,
    config: &GroebnerConfig,
) -> Result<LocusReport, LocusError> {
    family.validate()?;
    let mut systems = Vec::new();
    match family.mode {
        FamilyMode::Critical => {
            let sys = critical_system(family, family.dehomog_var)?;
            let drop: Vec<usize> = family.x_vars.clone();
            let gens = eliminate(&sys, &drop, config)?;
            systems.push(finish_system(family, Vec::new(), gens));
        }
        FamilyMode::Kkt => {
            let sys = kkt_system(family, &[])?;
            let gens = eliminate_kkt(&sys, config)?;
            systems.push(finish_system(family, Vec::new(), gens));
        }
        FamilyMode::ActiveSubset => {
            let n = family.x_vars.len();
            let m = family.constraints.equalities.len();
            let t = family.constraints.inequalities.len();
            let kmax = n.saturating_sub(m).min(t);
            for k in 0..=kmax {
                for subset in subsets_of_size(t, k) {
                    let sys = kkt_system(family, &subset)?;
                    let gens = eliminate_kkt(&sys, config)?;
                    systems.push(finish_system(family, subset, gens));
                }
            }
        }
    }
    Ok(LocusReport { systems })
}

/// Multipliers first, then the x block: staging keeps the intermediate
/// bases small on KKT systems.
fn eliminate_kkt(sys: &KktSystem, config: &GroebnerConfig) -> Result<Vec<Polynomial>, GroebnerError> {
    let xs: Vec<usize> = sys
        .eliminable
        .iter()
        .copied()
        .filter(|v| !sys.multipliers.contains(v))
        .collect();
    eliminate_staged(
        &sys.generators,
        &[sys.multipliers.clone(), xs],
        config,
    )
}
