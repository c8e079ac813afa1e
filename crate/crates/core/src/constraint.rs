use crate::poly::Polynomial;

/// The semialgebraic set `K = { g = 0, p >= 0 }`, with user-asserted
/// topology flags. The flags are assertions, never verified: no algorithm
/// for "closed at infinity" is attempted.
#[derive(Debug, Clone)]
pub struct ConstraintSet {
    /// Equality constraints `g_i(x) = 0`.
    pub equalities: Vec<Polynomial>,
    /// Inequality constraints `p_j(x) >= 0`.
    pub inequalities: Vec<Polynomial>,
    /// Asserted: `K` is compact.
    pub compact: bool,
    /// Asserted: the projectivization of `K` is closed at infinity.
    pub closed_at_infinity: bool,
}

impl ConstraintSet {
    pub fn unconstrained() -> Self {
        ConstraintSet {
            equalities: Vec::new(),
            inequalities: Vec::new(),
            compact: false,
            closed_at_infinity: false,
        }
    }

    pub fn equalities(gs: Vec<Polynomial>) -> Self {
        ConstraintSet {
            equalities: gs,
            inequalities: Vec::new(),
            compact: false,
            closed_at_infinity: false,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.equalities.is_empty() && self.inequalities.is_empty()
    }

    pub fn with_compact(mut self, compact: bool) -> Self {
        self.compact = compact;
        self
    }

    pub fn with_closed_at_infinity(mut self, closed: bool) -> Self {
        self.closed_at_infinity = closed;
        self
    }
}
