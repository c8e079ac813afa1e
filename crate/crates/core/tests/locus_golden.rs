//! Elimination goldens: parametric families whose locus polynomials are
//! known in closed form, compared by exact evaluation ratio at random
//! rational points.

use disclab_core::constraint::ConstraintSet;
use disclab_core::groebner::GroebnerConfig;
use disclab_core::locus::{discriminantal_locus, FamilyMode, FamilySpec};
use disclab_core::poly::{parse, Polynomial, VarSet};
use num::{BigInt, BigRational, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// The printed locus of the quadratic family on the unit circle.
const CIRCLE_QUADRATIC_PHI: &str = "a^6-3*a^4*b^2+3*a^2*b^4-b^6-3*a^4*c^2-21*a^2*b^2*c^2-3*b^4*c^2+3*a^2*c^4-3*b^2*c^4-c^6\
+36*a^3*b*c*d+18*a*b^3*c*d+18*a*b*c^3*d-8*a^4*d^2-20*a^2*b^2*d^2+b^4*d^2-20*a^2*c^2*d^2\
+2*b^2*c^2*d^2+c^4*d^2-16*a*b*c*d^3+16*a^2*d^4+18*a^3*b*c-18*a*b^3*c+36*a*b*c^3-8*a^4*d\
-2*a^2*b^2*d+10*b^4*d-38*a^2*c^2*d+2*b^2*c^2*d-8*c^4*d-24*a*b*c*d^2+32*a^2*d^3-8*b^2*d^3\
+8*c^2*d^3+a^4-2*a^2*b^2+b^4-20*a^2*c^2+20*b^2*c^2-8*c^4+24*a*b*c*d+8*a^2*d^2-32*b^2*d^2\
-8*c^2*d^2+16*d^4+16*a*b*c-8*a^2*d-8*b^2*d-32*c^2*d+32*d^3-16*c^2+16*d^2";

fn q(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Ratio of two polynomials in the parameters at random rational points
/// must be one fixed nonzero rational.
fn assert_proportional(computed: &Polynomial, printed: &Polynomial, params: &[usize], seed: u64) {
    let vars = computed.vars().clone();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut ratio: Option<BigRational> = None;
    let mut checked = 0;
    while checked < 20 {
        let mut values = vec![BigRational::zero(); vars.len()];
        for &p in params {
            values[p] = BigRational::new(
                BigInt::from(rng.gen_range(-30i64..=30)),
                BigInt::from(rng.gen_range(1i64..=7)),
            );
        }
        let pv = printed.eval_rational(&values);
        let cv = computed.eval_rational(&values);
        if pv.is_zero() || cv.is_zero() {
            continue; // need non-vanishing points
        }
        let r = cv / pv;
        match &ratio {
            None => ratio = Some(r),
            Some(r0) => assert_eq!(&r, r0, "ratio drifted at sample {checked}"),
        }
        checked += 1;
    }
    assert!(ratio.is_some());
}

#[test]
fn circle_quadratic_kkt_locus_matches_paper() {
    let v = VarSet::new(["x1", "x2", "a", "b", "c", "d"]).unwrap();
    let f = parse("x1^2+a*x1*x2+b*x1+c*x2+d", &v).unwrap();
    let g = parse("x1^2+x2^2-1", &v).unwrap();
    let fam = FamilySpec {
        f,
        constraints: ConstraintSet::equalities(vec![g]).with_compact(true),
        x_vars: vec![0, 1],
        params: vec![2, 3, 4, 5],
        mode: FamilyMode::Kkt,
        dehomog_var: None,
    };
    let t0 = std::time::Instant::now();
    let report = discriminantal_locus(&fam, &GroebnerConfig::default()).unwrap();
    eprintln!("circle quadratic elimination took {:?}", t0.elapsed());
    assert_eq!(report.systems.len(), 1);
    let sys = &report.systems[0];
    assert!(!sys.zero_ideal && !sys.unit_ideal);
    assert_eq!(sys.generators.len(), 1, "expected a single generator, got {:?}",
        sys.generators.iter().map(|g| g.to_string()).collect::<Vec<_>>());
    let gen = &sys.generators[0];
    assert_eq!(gen.degree().finite(), Some(6));
    let printed = parse(CIRCLE_QUADRATIC_PHI, &v).unwrap();
    assert_proportional(gen, &printed, &[2, 3, 4, 5], 11);
}

/// The printed locus of `x1^4 + a x1^3 x2 + b x1 x2^3 + c` on the circle.
const CIRCLE_QUARTIC_PHI: &str = "4*a^3*b^3+27*a^4*c^2-36*a^3*b*c^2+2*a^2*b^2*c^2-36*a*b^3*c^2+27*b^4*c^2\
-256*a^2*c^4+512*a*b*c^4-256*b^2*c^4+6*a^2*b^2*c-36*a*b^3*c+54*b^4*c-288*a^2*c^3+704*a*b*c^3\
-544*b^2*c^3+27*b^4+192*a*b*c^2-288*b^2*c^2-256*c^4-256*c^3";

#[test]
fn circle_quartic_kkt_locus_matches_paper() {
    let v = VarSet::new(["x1", "x2", "a", "b", "c"]).unwrap();
    let f = parse("x1^4+a*x1^3*x2+b*x1*x2^3+c", &v).unwrap();
    let g = parse("x1^2+x2^2-1", &v).unwrap();
    let fam = FamilySpec {
        f,
        constraints: ConstraintSet::equalities(vec![g]).with_compact(true),
        x_vars: vec![0, 1],
        params: vec![2, 3, 4],
        mode: FamilyMode::Kkt,
        dehomog_var: None,
    };
    let t0 = std::time::Instant::now();
    let report = discriminantal_locus(&fam, &GroebnerConfig::default()).unwrap();
    eprintln!("circle quartic elimination took {:?}", t0.elapsed());
    let sys = &report.systems[0];
    assert!(!sys.zero_ideal && !sys.unit_ideal);
    eprintln!(
        "generators: {:?}",
        sys.generators.iter().map(|g| (g.degree(), g.num_terms())).collect::<Vec<_>>()
    );
    assert_eq!(sys.generators.len(), 1);
    let printed = parse(CIRCLE_QUARTIC_PHI, &v).unwrap();
    assert_proportional(&sys.generators[0], &printed, &[2, 3, 4], 17);
}

/// Constructive spot check, independent of the Groebner route: parameters
/// manufactured so the KKT system has an exact rational solution must lie
/// on the printed curve.
#[test]
fn circle_quadratic_printed_phi_vanishes_on_constructed_kkt_points() {
    let v = VarSet::new(["x1", "x2", "a", "b", "c", "d"]).unwrap();
    let printed = parse(CIRCLE_QUADRATIC_PHI, &v).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..10 {
        // Rational point on the circle from a Pythagorean parametrization.
        let t = q(rng.gen_range(-6i64..=6)) / q(rng.gen_range(1i64..=5));
        let den = q(1) + &t * &t;
        let x1 = (q(1) - &t * &t) / &den;
        let x2 = q(2) * &t / &den;
        let lam = q(rng.gen_range(-4i64..=4)) / q(rng.gen_range(1i64..=3));
        let a = q(rng.gen_range(-5i64..=5));
        // Stationarity: 2x1 + a x2 + b + 2 lam x1 = 0  =>  b
        let b = -(q(2) * &x1 + &a * &x2 + q(2) * &lam * &x1);
        //               a x1 + c + 2 lam x2 = 0        =>  c
        let c = -(&a * &x1 + q(2) * &lam * &x2);
        // f = 0  =>  d
        let d = -(&x1 * &x1 + &a * &x1 * &x2 + &b * &x1 + &c * &x2);
        let vals = vec![x1.clone(), x2.clone(), a, b, c, d];
        assert!(printed.eval_rational(&vals).is_zero(), "phi(a,b,c,d) != 0");
    }
}
