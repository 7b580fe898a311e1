use std::fmt;
use std::sync::Arc;

#[derive(Debug, PartialEq, Eq)]
struct RingData {
    names: Vec<String>,
    weights: Option<Vec<u32>>,
}

/// Variable names of a polynomial ring over Q, plus optional grading weights.
///
/// Weights are reporting metadata only; arithmetic never looks at them.
#[derive(Clone, PartialEq, Eq)]
pub struct Ring(Arc<RingData>);

impl Ring {
    pub fn new<S: AsRef<str>>(names: &[S]) -> Self {
        Ring(Arc::new(RingData {
            names: names.iter().map(|s| s.as_ref().to_string()).collect(),
            weights: None,
        }))
    }

    pub fn with_weights(&self, weights: Vec<u32>) -> Self {
        assert_eq!(weights.len(), self.nvars());
        Ring(Arc::new(RingData {
            names: self.0.names.clone(),
            weights: Some(weights),
        }))
    }

    pub fn nvars(&self) -> usize {
        self.0.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.0.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.0.names[i]
    }

    pub fn weights(&self) -> Option<&[u32]> {
        self.0.weights.as_deref()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.0.names.iter().position(|n| n == name)
    }

    /// Ring with the variables of `self` followed by `extra`.
    pub fn extend<S: AsRef<str>>(&self, extra: &[S]) -> Ring {
        let mut names = self.0.names.clone();
        names.extend(extra.iter().map(|s| s.as_ref().to_string()));
        Ring::new(&names)
    }

    pub fn same(&self, other: &Ring) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.names == other.0.names
    }
}

impl fmt::Debug for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q[{}]", self.0.names.join(","))
    }
}
