use std::sync::Arc;

use crate::error::{Error, Result};

/// Ordered variable names for one ring context. Only variables flagged
/// invertible may carry negative exponents.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VarTable {
    names: Vec<String>,
    invertible: Vec<bool>,
}

impl VarTable {
    pub fn new<S: AsRef<str>>(names: &[S]) -> Result<Arc<VarTable>> {
        Self::with_invertible(names, &[] as &[&str])
    }

    pub fn with_invertible<S: AsRef<str>, T: AsRef<str>>(names: &[S], inv: &[T]) -> Result<Arc<VarTable>> {
        let names: Vec<String> = names.iter().map(|s| s.as_ref().to_string()).collect();
        for (i, n) in names.iter().enumerate() {
            if names[..i].contains(n) {
                return Err(Error::DuplicateVariable(n.clone()));
            }
        }
        let mut invertible = vec![false; names.len()];
        for v in inv {
            let idx = names
                .iter()
                .position(|n| n == v.as_ref())
                .ok_or_else(|| Error::UnknownVariable(v.as_ref().to_string()))?;
            invertible[idx] = true;
        }
        Ok(Arc::new(VarTable { names, invertible }))
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn is_invertible(&self, i: usize) -> bool {
        self.invertible[i]
    }

    pub fn index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn require(&self, name: &str) -> Result<usize> {
        self.index(name).ok_or_else(|| Error::UnknownVariable(name.to_string()))
    }

    /// Indices of the named variables, in the given order.
    pub fn indices<S: AsRef<str>>(&self, names: &[S]) -> Result<Vec<usize>> {
        names.iter().map(|n| self.require(n.as_ref())).collect()
    }
}

/// Names `prefix1..prefixN`.
pub fn numbered(prefix: &str, n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("{prefix}{i}")).collect()
}
