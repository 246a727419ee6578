//! Carriers: named finite types with labeled elements.
//!
//! A carrier is the `A` in a relation type `A ~ B`. Elements are identified
//! by position; labels are unique display names. An empty carrier (size 0)
//! is legal and every operation must cope with it.

use std::fmt;
use std::sync::Arc;

use crate::error::RelError;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Carrier {
    name: String,
    labels: Vec<String>,
}

impl Carrier {
    /// Build a carrier from explicit labels. Labels must be pairwise distinct.
    pub fn new(
        name: impl Into<String>,
        labels: impl IntoIterator<Item = impl Into<String>>,
    ) -> Result<Arc<Carrier>, RelError> {
        let name = name.into();
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        for (i, l) in labels.iter().enumerate() {
            if labels[..i].contains(l) {
                return Err(RelError::DuplicateLabel { carrier: name, label: l.clone() });
            }
        }
        Ok(Arc::new(Carrier { name, labels }))
    }

    /// Build a carrier of `size` elements labeled `0`, `1`, ….
    pub fn numbered(name: impl Into<String>, size: usize) -> Arc<Carrier> {
        let labels = (0..size).map(|i| i.to_string()).collect();
        Arc::new(Carrier { name: name.into(), labels })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn size(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }
}

impl fmt::Display for Carrier {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (size {})", self.name, self.size())
    }
}

/// Panic unless two carriers are the same type, identifying the operation.
///
/// Type identity is name plus size; a name/size match with different labels
/// indicates two distinct carriers sharing a name, which is itself a bug.
pub fn require_same(op: &str, expected: &Carrier, got: &Carrier) {
    if expected.name() != got.name() || expected.size() != got.size() {
        panic!(
            "{op}: carrier mismatch: expected `{}` (size {}), got `{}` (size {})",
            expected.name(),
            expected.size(),
            got.name(),
            got.size()
        );
    }
    if expected.labels() != got.labels() {
        panic!(
            "{op}: two distinct carriers named `{}` (size {}) have different labels",
            expected.name(),
            expected.size()
        );
    }
}
