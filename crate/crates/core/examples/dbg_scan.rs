use disclab_core::constraint::ConstraintSet;
use disclab_core::poly::{parse, VarSet};
use disclab_core::scan::{constrained_min, ScanConfig};

fn main() {
    let v = VarSet::new(["x1", "x2"]).unwrap();
    let f = parse("x1+x2", &v).unwrap();
    let g = parse("x1^3+x2^3-1", &v).unwrap();
    let k = ConstraintSet::equalities(vec![g]);
    let r = constrained_min(&f, &k, false, &ScanConfig::default()).unwrap();
    println!("value={} attained={} witness={:?} spread={}", r.value, r.attained, r.witness, r.spread);
}
