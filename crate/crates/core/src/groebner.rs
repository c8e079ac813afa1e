//! Buchberger's algorithm, normal forms and elimination ideals.
//!
//! The engine works on term lists kept sorted under a configurable order
//! (lex, grevlex, or a block elimination order). Pairs are selected by the
//! sugar strategy; both Buchberger criteria prune the queue. Every run is
//! deterministic for a fixed input and order. A pair-processing budget
//! aborts runaway eliminations loudly instead of truncating them.

use std::cmp::Ordering;
use std::collections::BTreeSet;

use num::{BigRational, One, Signed, Zero};
use thiserror::Error;

use crate::poly::{Monomial, Polynomial, VarSet};

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum GroebnerError {
    #[error("empty generator list")]
    EmptyGenerators,
    #[error("generators use different variable sets")]
    VarSetMismatch,
    #[error("pair-processing budget of {0} exceeded")]
    BudgetExceeded(u64),
    #[error("basis is not in Groebner state")]
    NotGroebner,
}

/// Monomial orders understood by the engine.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TermOrder {
    Lex,
    GrevLex,
    /// Elimination order: variables in `front` dominate the rest; grevlex
    /// inside each block.
    Block { front: BTreeSet<usize> },
}

impl TermOrder {
    pub fn block(front: impl IntoIterator<Item = usize>) -> Self {
        TermOrder::Block {
            front: front.into_iter().collect(),
        }
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            TermOrder::Lex => a.cmp_lex(b),
            TermOrder::GrevLex => a.cmp_grevlex(b),
            TermOrder::Block { front } => a
                .cmp_grevlex_in(b, |v| front.contains(&v))
                .then_with(|| a.cmp_grevlex_in(b, |v| !front.contains(&v))),
        }
    }
}

/// Resource limits for a Buchberger run.
#[derive(Debug, Clone, Copy)]
pub struct GroebnerConfig {
    /// Maximum number of S-pairs reduced before giving up.
    pub max_pair_reductions: u64,
}

impl Default for GroebnerConfig {
    fn default() -> Self {
        GroebnerConfig {
            max_pair_reductions: 200_000,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BasisState {
    Raw,
    Groebner,
}

/// A polynomial ideal with an attached term order.
#[derive(Debug, Clone)]
pub struct Ideal {
    generators: Vec<Polynomial>,
    order: TermOrder,
    state: BasisState,
}

impl Ideal {
    pub fn new(generators: Vec<Polynomial>, order: TermOrder) -> Result<Self, GroebnerError> {
        if generators.is_empty() {
            return Err(GroebnerError::EmptyGenerators);
        }
        let vars = generators[0].vars().clone();
        if generators.iter().any(|g| !g.vars().same_as(&vars)) {
            return Err(GroebnerError::VarSetMismatch);
        }
        Ok(Ideal {
            generators,
            order,
            state: BasisState::Raw,
        })
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn order(&self) -> &TermOrder {
        &self.order
    }

    pub fn state(&self) -> BasisState {
        self.state
    }

    pub fn vars(&self) -> &VarSet {
        self.generators[0].vars()
    }
}

/// Leading term of `f` under an arbitrary order (not the canonical one).
pub fn leading_term_under(f: &Polynomial, order: &TermOrder) -> Option<(Monomial, BigRational)> {
    f.terms()
        .max_by(|a, b| order.cmp(a.0, b.0))
        .map(|(m, c)| (m.clone(), c.clone()))
}

// ---------------------------------------------------------------------------
// Engine representation: term lists sorted descending under the run's order.

#[derive(Clone, Debug)]
struct OrdPoly {
    terms: Vec<(Monomial, BigRational)>,
}

impl OrdPoly {
    fn from_poly(p: &Polynomial, order: &TermOrder) -> Self {
        let mut terms: Vec<(Monomial, BigRational)> =
            p.terms().map(|(m, c)| (m.clone(), c.clone())).collect();
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        OrdPoly { terms }
    }

    fn to_poly(&self, vars: &VarSet) -> Polynomial {
        Polynomial::from_terms(vars, self.terms.iter().cloned())
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn lead(&self) -> &(Monomial, BigRational) {
        &self.terms[0]
    }

    fn total_degree(&self) -> u64 {
        self.terms
            .iter()
            .map(|(m, _)| m.total_degree())
            .max()
            .unwrap_or(0)
    }

    /// self - coef * mon * other; both inputs sorted, result sorted.
    fn sub_scaled(
        &self,
        other: &OrdPoly,
        mon: &Monomial,
        coef: &BigRational,
        order: &TermOrder,
    ) -> OrdPoly {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut i = 0;
        let mut j = 0;
        while i < self.terms.len() && j < other.terms.len() {
            let om = other.terms[j].0.mul(mon);
            match order.cmp(&self.terms[i].0, &om) {
                Ordering::Greater => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push((om, -(&other.terms[j].1 * coef)));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = &self.terms[i].1 - &(&other.terms[j].1 * coef);
                    if !c.is_zero() {
                        out.push((om, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        while j < other.terms.len() {
            out.push((other.terms[j].0.mul(mon), -(&other.terms[j].1 * coef)));
            j += 1;
        }
        OrdPoly { terms: out }
    }

    /// Integer-primitive form with positive leading coefficient.
    fn make_primitive(&mut self) {
        if self.terms.is_empty() {
            return;
        }
        let mut num_gcd = num::BigInt::zero();
        let mut den_lcm = num::BigInt::one();
        for (_, c) in &self.terms {
            num_gcd = num::Integer::gcd(&num_gcd, c.numer());
            den_lcm = num::Integer::lcm(&den_lcm, c.denom());
        }
        let mut content = BigRational::new(num_gcd, den_lcm);
        if self.terms[0].1.is_negative() {
            content = -content;
        }
        let inv = content.recip();
        for (_, c) in &mut self.terms {
            *c *= &inv;
        }
    }
}

struct Engine<'a> {
    order: &'a TermOrder,
    basis: Vec<OrdPoly>,
    sugar: Vec<u64>,
}

impl<'a> Engine<'a> {
    /// Fully reduces `work` modulo the basis; the result has no term
    /// divisible by any leading term. `skip` excludes one basis index
    /// (used for tail-reduction of a basis element against the others).
    fn reduce(&self, mut work: OrdPoly, skip: Option<usize>) -> OrdPoly {
        let mut remainder: Vec<(Monomial, BigRational)> = Vec::new();
        'outer: while !work.is_zero() {
            let (lm, lc) = work.lead().clone();
            for (k, g) in self.basis.iter().enumerate() {
                if Some(k) == skip || g.is_zero() {
                    continue;
                }
                let (gm, gc) = g.lead();
                if gm.divides(&lm) {
                    let q = gm.try_div_into(&lm).unwrap();
                    let coef = &lc / gc;
                    work = work.sub_scaled(g, &q, &coef, self.order);
                    continue 'outer;
                }
            }
            // Lead irreducible: move it to the remainder.
            remainder.push((lm, lc));
            work.terms.remove(0);
        }
        OrdPoly { terms: remainder }
    }
}

fn pair_sugar(engine: &Engine, i: usize, j: usize) -> (u64, u64) {
    let (mi, _) = engine.basis[i].lead();
    let (mj, _) = engine.basis[j].lead();
    let lcm = mi.lcm(mj);
    let s = (engine.sugar[i] + lcm.total_degree() - mi.total_degree())
        .max(engine.sugar[j] + lcm.total_degree() - mj.total_degree());
    (s, lcm.total_degree())
}

/// Computes the reduced Groebner basis of `ideal` under its term order.
///
/// The output generators are in integer-primitive form with positive
/// leading coefficients; up to that scaling the basis is the unique
/// reduced one. Fails with `BudgetExceeded` when the pair budget runs
/// out; no partial state is returned.
pub fn buchberger(ideal: &Ideal, config: &GroebnerConfig) -> Result<Ideal, GroebnerError> {
    if ideal.state == BasisState::Groebner {
        return Ok(ideal.clone());
    }
    let vars = ideal.vars().clone();
    let order = ideal.order.clone();

    let mut engine = Engine {
        order: &order,
        basis: Vec::new(),
        sugar: Vec::new(),
    };
    for g in &ideal.generators {
        if g.is_zero() {
            continue;
        }
        let mut op = OrdPoly::from_poly(g, &order);
        op.make_primitive();
        engine.sugar.push(op.total_degree());
        engine.basis.push(op);
    }
    if engine.basis.is_empty() {
        // Zero ideal: keep a single zero generator.
        return Ok(Ideal {
            generators: vec![Polynomial::zero(&vars)],
            order,
            state: BasisState::Groebner,
        });
    }

    // Pending pairs keyed by (sugar, lcm degree, i, j): popping the
    // smallest key is the sugar selection strategy with deterministic ties.
    let mut pending: BTreeSet<(u64, u64, usize, usize)> = BTreeSet::new();
    let mut pending_pairs: BTreeSet<(usize, usize)> = BTreeSet::new();
    fn add_pairs(
        engine: &Engine,
        pending: &mut BTreeSet<(u64, u64, usize, usize)>,
        pending_pairs: &mut BTreeSet<(usize, usize)>,
        t: usize,
    ) {
        for i in 0..t {
            if engine.basis[i].is_zero() {
                continue;
            }
            let (mi, _) = engine.basis[i].lead();
            let (mt, _) = engine.basis[t].lead();
            if mi.is_coprime_with(mt) {
                continue; // product criterion
            }
            let (s, d) = pair_sugar(engine, i, t);
            pending.insert((s, d, i, t));
            pending_pairs.insert((i, t));
        }
    }
    for t in 1..engine.basis.len() {
        add_pairs(&engine, &mut pending, &mut pending_pairs, t);
    }

    let mut reductions: u64 = 0;
    while let Some(&key) = pending.iter().next() {
        pending.remove(&key);
        let (_, _, i, j) = key;
        pending_pairs.remove(&(i, j));
        let (mi, ci) = engine.basis[i].lead().clone();
        let (mj, cj) = engine.basis[j].lead().clone();
        let lcm = mi.lcm(&mj);

        // Chain criterion: a processed k whose lead divides the lcm kills the pair.
        let mut skip = false;
        for k in 0..engine.basis.len() {
            if k == i || k == j {
                continue;
            }
            if engine.basis[k].lead().0.divides(&lcm) {
                let a = (i.min(k), i.max(k));
                let b = (j.min(k), j.max(k));
                if !pending_pairs.contains(&a) && !pending_pairs.contains(&b) {
                    skip = true;
                    break;
                }
            }
        }
        if skip {
            continue;
        }

        reductions += 1;
        if reductions > config.max_pair_reductions {
            return Err(GroebnerError::BudgetExceeded(config.max_pair_reductions));
        }

        // S-polynomial, then full reduction.
        let qi = mi.try_div_into(&lcm).unwrap();
        let qj = mj.try_div_into(&lcm).unwrap();
        let fi = OrdPoly {
            terms: engine.basis[i]
                .terms
                .iter()
                .map(|(m, c)| (m.mul(&qi), c / &ci))
                .collect(),
        };
        let spoly = fi.sub_scaled(&engine.basis[j], &qj, &(BigRational::one() / &cj), &order);
        let mut nf = engine.reduce(spoly, None);
        if nf.is_zero() {
            continue;
        }
        nf.make_primitive();
        let sugar_new = key.0.max(nf.total_degree());
        engine.basis.push(nf);
        engine.sugar.push(sugar_new);
        let t = engine.basis.len() - 1;
        add_pairs(&engine, &mut pending, &mut pending_pairs, t);
    }

    // Minimalize: drop elements whose lead is divisible by another's lead.
    let n = engine.basis.len();
    let mut keep = vec![true; n];
    for a in 0..n {
        for b in 0..n {
            if a == b || !keep[b] {
                continue;
            }
            let (ma, _) = engine.basis[a].lead();
            let (mb, _) = engine.basis[b].lead();
            if mb.divides(ma) && (mb != ma || b < a) {
                keep[a] = false;
                break;
            }
        }
    }
    let minimal: Vec<OrdPoly> = engine
        .basis
        .iter()
        .zip(&keep)
        .filter(|(_, k)| **k)
        .map(|(g, _)| g.clone())
        .collect();

    // Tail-reduce each survivor against the others: reduced basis.
    let reducer = Engine {
        order: &order,
        basis: minimal.clone(),
        sugar: vec![0; minimal.len()],
    };
    let mut reduced: Vec<OrdPoly> = Vec::with_capacity(minimal.len());
    for (k, g) in minimal.iter().enumerate() {
        let mut nf = reducer.reduce(g.clone(), Some(k));
        nf.make_primitive();
        reduced.push(nf);
    }
    reduced.sort_by(|a, b| order.cmp(&a.lead().0, &b.lead().0));

    Ok(Ideal {
        generators: reduced.iter().map(|g| g.to_poly(&vars)).collect(),
        order,
        state: BasisState::Groebner,
    })
}

/// Remainder of `f` modulo a Groebner basis: no term of the result is
/// divisible by any leading term; zero iff `f` lies in the ideal.
pub fn normal_form(f: &Polynomial, basis: &Ideal) -> Result<Polynomial, GroebnerError> {
    if basis.state != BasisState::Groebner {
        return Err(GroebnerError::NotGroebner);
    }
    if !f.vars().same_as(basis.vars()) {
        return Err(GroebnerError::VarSetMismatch);
    }
    let order = basis.order.clone();
    let engine = Engine {
        order: &order,
        basis: basis
            .generators
            .iter()
            .filter(|g| !g.is_zero())
            .map(|g| OrdPoly::from_poly(g, &order))
            .collect(),
        sugar: Vec::new(),
    };
    let nf = engine.reduce(OrdPoly::from_poly(f, &order), None);
    Ok(nf.to_poly(f.vars()))
}

/// Generators of the elimination ideal obtained by dropping the variables
/// in `drop`: a Groebner basis under the block order with the dropped
/// variables dominant, filtered to elements free of them.
///
/// An empty result signals the zero elimination ideal.
pub fn eliminate(
    gens: &[Polynomial],
    drop: &[usize],
    config: &GroebnerConfig,
) -> Result<Vec<Polynomial>, GroebnerError> {
    let order = TermOrder::block(drop.iter().copied());
    let ideal = Ideal::new(gens.to_vec(), order)?;
    let gb = buchberger(&ideal, config)?;
    let dropped: BTreeSet<usize> = drop.iter().copied().collect();
    Ok(gb
        .generators
        .iter()
        .filter(|g| !g.is_zero() && !dropped.iter().any(|&v| g.uses_var(v)))
        .cloned()
        .collect())
}

/// Staged elimination: drops the variable groups one after another.
/// Equivalent to a single `eliminate` on the union of the stages, and
/// frequently much faster for critical/KKT systems.
pub fn eliminate_staged(
    gens: &[Polynomial],
    stages: &[Vec<usize>],
    config: &GroebnerConfig,
) -> Result<Vec<Polynomial>, GroebnerError> {
    let mut current = gens.to_vec();
    for stage in stages {
        if stage.is_empty() {
            continue;
        }
        if current.is_empty() {
            return Ok(Vec::new());
        }
        current = eliminate(&current, stage, config)?;
    }
    Ok(current)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse;

    fn vs(names: &[&str]) -> VarSet {
        VarSet::new(names.iter().copied()).unwrap()
    }

    fn ps(srcs: &[&str], v: &VarSet) -> Vec<Polynomial> {
        srcs.iter().map(|s| parse(s, v).unwrap()).collect()
    }

    #[test]
    fn quadratic_discriminant_appears_in_lex_basis() {
        let v = vs(&["x", "b", "c"]);
        let gens = ps(&["x^2+b*x+c", "2*x+b"], &v);
        let ideal = Ideal::new(gens, TermOrder::Lex).unwrap();
        let gb = buchberger(&ideal, &GroebnerConfig::default()).unwrap();
        let target = parse("b^2-4*c", &v).unwrap();
        assert!(
            gb.generators().iter().any(|g| g == &target),
            "basis: {:?}",
            gb.generators()
                .iter()
                .map(|g| g.to_string())
                .collect::<Vec<_>>()
        );
    }

    #[test]
    fn groebner_basis_is_fixed_point() {
        let v = vs(&["x", "y"]);
        let gens = ps(&["x^2-1", "y-1"], &v);
        let ideal = Ideal::new(gens, TermOrder::Lex).unwrap();
        let gb1 = buchberger(&ideal, &GroebnerConfig::default()).unwrap();
        let again = Ideal::new(gb1.generators().to_vec(), TermOrder::Lex).unwrap();
        let gb2 = buchberger(&again, &GroebnerConfig::default()).unwrap();
        assert_eq!(gb1.generators(), gb2.generators());
    }

    #[test]
    fn unit_ideal_stays_unit() {
        let v = vs(&["x"]);
        let ideal = Ideal::new(ps(&["1"], &v), TermOrder::GrevLex).unwrap();
        let gb = buchberger(&ideal, &GroebnerConfig::default()).unwrap();
        assert_eq!(gb.generators().len(), 1);
        assert_eq!(gb.generators()[0], parse("1", &v).unwrap());
    }

    #[test]
    fn normal_form_examples() {
        let v = vs(&["x", "y"]);
        let g = parse("x^2-1", &v).unwrap();
        let ideal = Ideal::new(vec![g.clone()], TermOrder::Lex).unwrap();
        let gb = buchberger(&ideal, &GroebnerConfig::default()).unwrap();
        assert!(normal_form(&g, &gb).unwrap().is_zero());
        let one = parse("1", &v).unwrap();
        let x_ideal = buchberger(
            &Ideal::new(ps(&["x"], &v), TermOrder::Lex).unwrap(),
            &GroebnerConfig::default(),
        )
        .unwrap();
        assert_eq!(normal_form(&one, &x_ideal).unwrap(), one);
        let f = parse("x^2*y", &v).unwrap();
        assert_eq!(normal_form(&f, &gb).unwrap(), parse("y", &v).unwrap());
    }

    #[test]
    fn normal_form_requires_groebner_state() {
        let v = vs(&["x", "y"]);
        let ideal = Ideal::new(ps(&["x^2-1"], &v), TermOrder::Lex).unwrap();
        let f = parse("x", &v).unwrap();
        assert_eq!(normal_form(&f, &ideal), Err(GroebnerError::NotGroebner));
    }

    #[test]
    fn eliminate_examples() {
        let v = vs(&["x", "b", "c"]);
        let gens = ps(&["x^2+b*x+c", "2*x+b"], &v);
        let out = eliminate(&gens, &[0], &GroebnerConfig::default()).unwrap();
        assert_eq!(out, vec![parse("b^2-4*c", &v).unwrap()]);

        let v2 = vs(&["a", "x", "y"]);
        let gens2 = ps(&["x-a", "y-a"], &v2);
        let out2 = eliminate(&gens2, &[0], &GroebnerConfig::default()).unwrap();
        assert_eq!(out2, vec![parse("x-y", &v2).unwrap()]);

        let v3 = vs(&["x", "b"]);
        let gens3 = ps(&["x^2+1"], &v3);
        let out3 = eliminate(&gens3, &[0], &GroebnerConfig::default()).unwrap();
        assert!(out3.is_empty());
    }

    #[test]
    fn spoly_reduction_and_membership_on_output() {
        // Every S-polynomial of the output reduces to zero, and every input
        // generator reduces to zero against the output basis.
        let v = vs(&["x", "y", "z"]);
        let gens = ps(&["x*y-z", "y^2-1", "x^2*z-y"], &v);
        let ideal = Ideal::new(gens.clone(), TermOrder::GrevLex).unwrap();
        let gb = buchberger(&ideal, &GroebnerConfig::default()).unwrap();
        let order = gb.order().clone();
        let bs = gb.generators();
        for i in 0..bs.len() {
            for j in (i + 1)..bs.len() {
                let (mi, ci) = leading_term_under(&bs[i], &order).unwrap();
                let (mj, cj) = leading_term_under(&bs[j], &order).unwrap();
                let lcm = mi.lcm(&mj);
                let qi = mi.try_div_into(&lcm).unwrap();
                let qj = mj.try_div_into(&lcm).unwrap();
                let s = &bs[i].mul_monomial(&qi, &(BigRational::one() / &ci))
                    - &bs[j].mul_monomial(&qj, &(BigRational::one() / &cj));
                assert!(normal_form(&s, &gb).unwrap().is_zero());
            }
        }
        for g in &gens {
            assert!(normal_form(g, &gb).unwrap().is_zero());
        }
    }

    #[test]
    fn budget_is_enforced() {
        let v = vs(&["x", "y", "z"]);
        let gens = ps(&["x^3*y^2-z", "x*z^2-y^3", "y^4*z-x^2"], &v);
        let ideal = Ideal::new(gens, TermOrder::Lex).unwrap();
        let tiny = GroebnerConfig {
            max_pair_reductions: 1,
        };
        assert!(matches!(
            buchberger(&ideal, &tiny),
            Err(GroebnerError::BudgetExceeded(1))
        ));
    }

    #[test]
    fn staged_elimination_matches_single_block() {
        let v = vs(&["x", "y", "a", "b"]);
        let gens = ps(&["x^2+y^2-1", "x-a*y", "y-b"], &v);
        let single = eliminate(&gens, &[0, 1], &GroebnerConfig::default()).unwrap();
        let staged =
            eliminate_staged(&gens, &[vec![0], vec![1]], &GroebnerConfig::default()).unwrap();
        // Compare as sets of canonical polynomials.
        let mut s1: Vec<String> = single.iter().map(|g| g.to_string()).collect();
        let mut s2: Vec<String> = staged.iter().map(|g| g.to_string()).collect();
        s1.sort();
        s2.sort();
        assert_eq!(s1, s2);
    }
}
