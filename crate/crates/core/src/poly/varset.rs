use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use super::PolyError;

/// An ordered, immutable list of variable names shared by polynomials.
///
/// The order is fixed for the lifetime of every polynomial referencing the
/// set; it drives the default graded-reverse-lex term order and printing.
#[derive(Clone)]
pub struct VarSet {
    inner: Arc<Inner>,
}

struct Inner {
    names: Vec<String>,
    index: BTreeMap<String, usize>,
}

impl VarSet {
    pub fn new<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Result<Self, PolyError> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        let mut index = BTreeMap::new();
        for (i, n) in names.iter().enumerate() {
            if index.insert(n.clone(), i).is_some() {
                return Err(PolyError::DuplicateVariable(n.clone()));
            }
        }
        Ok(VarSet {
            inner: Arc::new(Inner { names, index }),
        })
    }

    pub fn len(&self) -> usize {
        self.inner.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.inner.names.is_empty()
    }

    pub fn name(&self, i: usize) -> &str {
        &self.inner.names[i]
    }

    pub fn names(&self) -> &[String] {
        &self.inner.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.inner.index.get(name).copied()
    }

    /// Indices of a comma-separated subset, in the given order.
    pub fn indices_of(&self, names: &[impl AsRef<str>]) -> Result<Vec<usize>, PolyError> {
        names
            .iter()
            .map(|n| {
                self.index_of(n.as_ref())
                    .ok_or_else(|| PolyError::NoSuchVariable(n.as_ref().to_string()))
            })
            .collect()
    }

    /// New set with `name` appended at the end (used by homogenization).
    pub fn with_appended(&self, name: &str) -> Result<(Self, usize), PolyError> {
        if self.index_of(name).is_some() {
            return Err(PolyError::VariableCollision(name.to_string()));
        }
        let mut names = self.inner.names.clone();
        names.push(name.to_string());
        let idx = names.len() - 1;
        Ok((VarSet::new(names)?, idx))
    }

    /// New set with the variable at `idx` removed.
    pub fn without(&self, idx: usize) -> Self {
        let names: Vec<String> = self
            .inner
            .names
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != idx)
            .map(|(_, n)| n.clone())
            .collect();
        VarSet::new(names).expect("removal keeps names unique")
    }

    pub(crate) fn same_as(&self, other: &VarSet) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner) || self.inner.names == other.inner.names
    }
}

impl PartialEq for VarSet {
    fn eq(&self, other: &Self) -> bool {
        self.same_as(other)
    }
}

impl Eq for VarSet {}

impl fmt::Debug for VarSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "VarSet{:?}", self.inner.names)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_duplicates() {
        assert!(matches!(
            VarSet::new(["x1", "x2", "x1"]),
            Err(PolyError::DuplicateVariable(_))
        ));
    }

    #[test]
    fn append_and_remove_round_trip() {
        let vs = VarSet::new(["x1", "x2"]).unwrap();
        let (vs2, idx) = vs.with_appended("x0").unwrap();
        assert_eq!(idx, 2);
        assert_eq!(vs2.len(), 3);
        assert!(vs2.with_appended("x1").is_err());
        let back = vs2.without(idx);
        assert!(back.same_as(&vs));
    }
}
