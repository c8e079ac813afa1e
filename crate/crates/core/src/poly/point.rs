use num::BigRational;

use super::polynomial::rational_to_f64;
use super::{PolyError, Polynomial, VarSet};

/// One coordinate of an evaluation point, tagged exact or floating.
#[derive(Clone, Debug, PartialEq)]
pub enum Coord {
    Exact(BigRational),
    Float(f64),
}

/// Evaluation result: exact when every used coordinate is exact.
#[derive(Clone, Debug, PartialEq)]
pub enum Value {
    Exact(BigRational),
    Float(f64),
}

impl Value {
    pub fn to_f64(&self) -> f64 {
        match self {
            Value::Exact(r) => rational_to_f64(r),
            Value::Float(x) => *x,
        }
    }

    pub fn exact(self) -> Option<BigRational> {
        match self {
            Value::Exact(r) => Some(r),
            Value::Float(_) => None,
        }
    }
}

/// A partial assignment of coordinates to the variables of a [`VarSet`].
#[derive(Clone, Debug)]
pub struct Point {
    vars: VarSet,
    coords: Vec<Option<Coord>>,
}

impl Point {
    pub fn new(vars: &VarSet) -> Self {
        Point {
            vars: vars.clone(),
            coords: vec![None; vars.len()],
        }
    }

    pub fn exact(vars: &VarSet, values: impl IntoIterator<Item = BigRational>) -> Self {
        let mut p = Point::new(vars);
        for (i, v) in values.into_iter().enumerate() {
            p.coords[i] = Some(Coord::Exact(v));
        }
        p
    }

    pub fn floats(vars: &VarSet, values: &[f64]) -> Self {
        let mut p = Point::new(vars);
        for (i, &v) in values.iter().enumerate() {
            p.coords[i] = Some(Coord::Float(v));
        }
        p
    }

    pub fn set(&mut self, var: usize, c: Coord) {
        self.coords[var] = Some(c);
    }

    pub fn vars(&self) -> &VarSet {
        &self.vars
    }

    pub fn coord(&self, var: usize) -> Option<&Coord> {
        self.coords.get(var).and_then(|c| c.as_ref())
    }
}

/// Evaluates `f` at `pt`: exact rational when every variable used by `f`
/// has an exact coordinate, floating otherwise.
pub fn evaluate(f: &Polynomial, pt: &Point) -> Result<Value, PolyError> {
    if !f.vars().same_as(pt.vars()) {
        return Err(PolyError::VarSetMismatch);
    }
    let mut used = vec![false; f.vars().len()];
    for (m, _) in f.terms() {
        for &(v, _) in m.pairs() {
            used[v as usize] = true;
        }
    }
    let mut all_exact = true;
    for (i, u) in used.iter().enumerate() {
        if !u {
            continue;
        }
        match pt.coord(i) {
            None => return Err(PolyError::MissingCoordinate(f.vars().name(i).to_string())),
            Some(Coord::Float(_)) => all_exact = false,
            Some(Coord::Exact(_)) => {}
        }
    }
    if all_exact {
        let values: Vec<BigRational> = (0..f.vars().len())
            .map(|i| match pt.coord(i) {
                Some(Coord::Exact(r)) => r.clone(),
                _ => BigRational::from_integer(0.into()),
            })
            .collect();
        Ok(Value::Exact(f.eval_rational(&values)))
    } else {
        let values: Vec<f64> = (0..f.vars().len())
            .map(|i| match pt.coord(i) {
                Some(Coord::Exact(r)) => rational_to_f64(r),
                Some(Coord::Float(x)) => *x,
                None => 0.0,
            })
            .collect();
        Ok(Value::Float(f.eval_f64(&values)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse;
    use num::{BigInt, Zero};

    fn vs(names: &[&str]) -> VarSet {
        VarSet::new(names.iter().copied()).unwrap()
    }

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    #[test]
    fn sum_of_squares_at_3_4() {
        let v = vs(&["x1", "x2"]);
        let f = parse("x1^2+x2^2", &v).unwrap();
        let pt = Point::exact(&v, [q(3), q(4)]);
        assert_eq!(evaluate(&f, &pt).unwrap(), Value::Exact(q(25)));
    }

    #[test]
    fn missing_coordinate_only_matters_when_used() {
        let v = vs(&["x1", "x2"]);
        let f = parse("x1^2", &v).unwrap();
        let mut pt = Point::new(&v);
        pt.set(0, Coord::Exact(q(2)));
        assert_eq!(evaluate(&f, &pt).unwrap(), Value::Exact(q(4)));
        let g = parse("x2", &v).unwrap();
        assert!(matches!(
            evaluate(&g, &pt),
            Err(PolyError::MissingCoordinate(_))
        ));
    }

    #[test]
    fn float_coordinate_switches_to_float_path() {
        let v = vs(&["x1"]);
        let f = parse("x1^2", &v).unwrap();
        let pt = Point::floats(&v, &[1.5]);
        match evaluate(&f, &pt).unwrap() {
            Value::Float(x) => assert!((x - 2.25).abs() < 1e-15),
            other => panic!("expected float, got {other:?}"),
        }
    }

    #[test]
    fn robinson_vanishes_at_ones() {
        // x1^6+x2^6+x3^6 - (x1^2(x2^4+x3^4)+x2^2(x3^4+x1^4)+x3^2(x1^4+x2^4)) + 3x1^2x2^2x3^2
        let v = vs(&["x1", "x2", "x3"]);
        let f = parse(
            "x1^6+x2^6+x3^6-x1^2*x2^4-x1^2*x3^4-x2^2*x3^4-x2^2*x1^4-x3^2*x1^4-x3^2*x2^4+3*x1^2*x2^2*x3^2",
            &v,
        )
        .unwrap();
        let pt = Point::exact(&v, [q(1), q(1), q(1)]);
        assert_eq!(evaluate(&f, &pt).unwrap(), Value::Exact(BigRational::zero()));
    }

    #[test]
    fn horn_family_vanishes_at_window_point() {
        // (x1^2+..+x5^2)^2 - 4(x1^2x2^2+x2^2x3^2+x3^2x4^2+x4^2x5^2+x5^2x1^2) at (1,1,0,0,0).
        let v = vs(&["x1", "x2", "x3", "x4", "x5"]);
        let norm = parse("x1^2+x2^2+x3^2+x4^2+x5^2", &v).unwrap();
        let cyc = parse(
            "x1^2*x2^2+x2^2*x3^2+x3^2*x4^2+x4^2*x5^2+x5^2*x1^2",
            &v,
        )
        .unwrap();
        let f = &(&norm * &norm) - &cyc.scale(&q(4));
        let pt = Point::exact(&v, [q(1), q(1), q(0), q(0), q(0)]);
        assert_eq!(evaluate(&f, &pt).unwrap(), Value::Exact(BigRational::zero()));
    }
}
