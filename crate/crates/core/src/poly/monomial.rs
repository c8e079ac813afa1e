use std::cmp::Ordering;

/// A power product, stored as (variable index, positive exponent) pairs
/// sorted by variable index. Zero exponents are never stored.
///
/// The structural `Ord` is graded reverse lexicographic with respect to the
/// variable indices; polynomials rely on it for canonical term order.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial {
    exps: Vec<(u32, u32)>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial { exps: Vec::new() }
    }

    pub fn var(idx: usize, exp: u32) -> Self {
        if exp == 0 {
            return Monomial::one();
        }
        Monomial {
            exps: vec![(idx as u32, exp)],
        }
    }

    pub fn from_pairs(mut pairs: Vec<(u32, u32)>) -> Self {
        pairs.retain(|&(_, e)| e > 0);
        pairs.sort_unstable_by_key(|&(v, _)| v);
        pairs.dedup_by(|b, a| {
            if a.0 == b.0 {
                a.1 += b.1;
                true
            } else {
                false
            }
        });
        Monomial { exps: pairs }
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn pairs(&self) -> &[(u32, u32)] {
        &self.exps
    }

    pub fn exponent_of(&self, var: usize) -> u32 {
        self.exps
            .iter()
            .find(|&&(v, _)| v as usize == var)
            .map(|&(_, e)| e)
            .unwrap_or(0)
    }

    pub fn total_degree(&self) -> u64 {
        self.exps.iter().map(|&(_, e)| e as u64).sum()
    }

    /// Total degree counting only variables selected by `keep`.
    pub fn degree_in(&self, keep: impl Fn(usize) -> bool) -> u64 {
        self.exps
            .iter()
            .filter(|&&(v, _)| keep(v as usize))
            .map(|&(_, e)| e as u64)
            .sum()
    }

    pub fn contains_var(&self, var: usize) -> bool {
        self.exponent_of(var) > 0
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = Vec::with_capacity(self.exps.len() + other.exps.len());
        let (mut i, mut j) = (0, 0);
        while i < self.exps.len() && j < other.exps.len() {
            match self.exps[i].0.cmp(&other.exps[j].0) {
                Ordering::Less => {
                    out.push(self.exps[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(other.exps[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((self.exps[i].0, self.exps[i].1 + other.exps[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.exps[i..]);
        out.extend_from_slice(&other.exps[j..]);
        Monomial { exps: out }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        let mut j = 0;
        for &(v, e) in &self.exps {
            while j < other.exps.len() && other.exps[j].0 < v {
                j += 1;
            }
            if j >= other.exps.len() || other.exps[j].0 != v || other.exps[j].1 < e {
                return false;
            }
        }
        true
    }

    /// `other / self` when `self` divides `other`.
    pub fn try_div_into(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        let mut out = Vec::with_capacity(other.exps.len());
        for &(v, e) in &other.exps {
            let rem = e - self.exponent_of(v as usize);
            if rem > 0 {
                out.push((v, rem));
            }
        }
        Some(Monomial { exps: out })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut out = Vec::with_capacity(self.exps.len() + other.exps.len());
        let (mut i, mut j) = (0, 0);
        while i < self.exps.len() && j < other.exps.len() {
            match self.exps[i].0.cmp(&other.exps[j].0) {
                Ordering::Less => {
                    out.push(self.exps[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(other.exps[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((self.exps[i].0, self.exps[i].1.max(other.exps[j].1)));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.exps[i..]);
        out.extend_from_slice(&other.exps[j..]);
        Monomial { exps: out }
    }

    pub fn is_coprime_with(&self, other: &Monomial) -> bool {
        let (mut i, mut j) = (0, 0);
        while i < self.exps.len() && j < other.exps.len() {
            match self.exps[i].0.cmp(&other.exps[j].0) {
                Ordering::Less => i += 1,
                Ordering::Greater => j += 1,
                Ordering::Equal => return false,
            }
        }
        true
    }

    /// Is `self` a pure power of a single variable (or 1)?
    pub fn pure_power_var(&self) -> Option<usize> {
        if self.exps.len() == 1 {
            Some(self.exps[0].0 as usize)
        } else {
            None
        }
    }

    pub fn map_vars(&self, f: impl Fn(usize) -> usize) -> Monomial {
        Monomial::from_pairs(
            self.exps
                .iter()
                .map(|&(v, e)| (f(v as usize) as u32, e))
                .collect(),
        )
    }

    /// Graded reverse lex: higher total degree wins; on ties the monomial
    /// with the smaller exponent at the last differing variable is greater.
    pub fn cmp_grevlex(&self, other: &Monomial) -> Ordering {
        match self.total_degree().cmp(&other.total_degree()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        // Walk both exponent lists from the highest variable index down.
        let (mut i, mut j) = (self.exps.len(), other.exps.len());
        loop {
            match (i, j) {
                (0, 0) => return Ordering::Equal,
                (0, _) => return Ordering::Greater, // other has a trailing var, self doesn't
                (_, 0) => return Ordering::Less,
                _ => {}
            }
            let (va, ea) = self.exps[i - 1];
            let (vb, eb) = other.exps[j - 1];
            match va.cmp(&vb) {
                Ordering::Greater => return Ordering::Less, // self has exponent at a later var
                Ordering::Less => return Ordering::Greater,
                Ordering::Equal => match ea.cmp(&eb) {
                    Ordering::Greater => return Ordering::Less,
                    Ordering::Less => return Ordering::Greater,
                    Ordering::Equal => {
                        i -= 1;
                        j -= 1;
                    }
                },
            }
        }
    }

    /// Plain lex on variable indices: earlier variables are greater.
    pub fn cmp_lex(&self, other: &Monomial) -> Ordering {
        let (mut i, mut j) = (0, 0);
        loop {
            match (i < self.exps.len(), j < other.exps.len()) {
                (false, false) => return Ordering::Equal,
                (false, true) => return Ordering::Less,
                (true, false) => return Ordering::Greater,
                (true, true) => {}
            }
            let (va, ea) = self.exps[i];
            let (vb, eb) = other.exps[j];
            match va.cmp(&vb) {
                Ordering::Less => return Ordering::Greater, // self touches an earlier var
                Ordering::Greater => return Ordering::Less,
                Ordering::Equal => match ea.cmp(&eb) {
                    Ordering::Greater => return Ordering::Greater,
                    Ordering::Less => return Ordering::Less,
                    Ordering::Equal => {
                        i += 1;
                        j += 1;
                    }
                },
            }
        }
    }

    /// Grevlex restricted to the variables selected by `keep`.
    pub fn cmp_grevlex_in(&self, other: &Monomial, keep: impl Fn(usize) -> bool) -> Ordering {
        let da = self.degree_in(&keep);
        let db = other.degree_in(&keep);
        match da.cmp(&db) {
            Ordering::Equal => {}
            ord => return ord,
        }
        let mine: Vec<(u32, u32)> = self
            .exps
            .iter()
            .copied()
            .filter(|&(v, _)| keep(v as usize))
            .collect();
        let theirs: Vec<(u32, u32)> = other
            .exps
            .iter()
            .copied()
            .filter(|&(v, _)| keep(v as usize))
            .collect();
        let (mut i, mut j) = (mine.len(), theirs.len());
        loop {
            match (i, j) {
                (0, 0) => return Ordering::Equal,
                (0, _) => return Ordering::Greater,
                (_, 0) => return Ordering::Less,
                _ => {}
            }
            let (va, ea) = mine[i - 1];
            let (vb, eb) = theirs[j - 1];
            match va.cmp(&vb) {
                Ordering::Greater => return Ordering::Less,
                Ordering::Less => return Ordering::Greater,
                Ordering::Equal => match ea.cmp(&eb) {
                    Ordering::Greater => return Ordering::Less,
                    Ordering::Less => return Ordering::Greater,
                    Ordering::Equal => {
                        i -= 1;
                        j -= 1;
                    }
                },
            }
        }
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.cmp_grevlex(other)
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(pairs: &[(u32, u32)]) -> Monomial {
        Monomial::from_pairs(pairs.to_vec())
    }

    #[test]
    fn grevlex_degree_one() {
        // With three variables x0,x1,x2: x0 > x1 > x2 under grevlex.
        let x0 = m(&[(0, 1)]);
        let x1 = m(&[(1, 1)]);
        let x2 = m(&[(2, 1)]);
        assert!(x0 > x1 && x1 > x2);
    }

    #[test]
    fn grevlex_classic_tie() {
        // deg 2 in 3 vars: x0^2 > x0x1 > x1^2 > x0x2 > x1x2 > x2^2.
        let seq = [
            m(&[(0, 2)]),
            m(&[(0, 1), (1, 1)]),
            m(&[(1, 2)]),
            m(&[(0, 1), (2, 1)]),
            m(&[(1, 1), (2, 1)]),
            m(&[(2, 2)]),
        ];
        for w in seq.windows(2) {
            assert!(w[0] > w[1], "{:?} !> {:?}", w[0], w[1]);
        }
    }

    #[test]
    fn lex_orders_x_over_y_powers() {
        // lex: x0 > x1^5.
        assert_eq!(m(&[(0, 1)]).cmp_lex(&m(&[(1, 5)])), Ordering::Greater);
    }

    #[test]
    fn division_and_lcm() {
        let a = m(&[(0, 2), (1, 1)]);
        let b = m(&[(0, 1)]);
        assert!(b.divides(&a));
        assert_eq!(b.try_div_into(&a).unwrap(), m(&[(0, 1), (1, 1)]));
        assert_eq!(a.lcm(&m(&[(1, 3)])), m(&[(0, 2), (1, 3)]));
        assert!(m(&[(0, 1)]).is_coprime_with(&m(&[(1, 2)])));
    }
}
