//! Three-valued answers for properties that cannot always be decided by
//! exhaustive search.

use std::fmt;

use crate::vector::FVector;

/// Evidence that a property fails.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub description: String,
    pub vectors: Vec<FVector>,
}

impl Witness {
    pub fn new(description: impl Into<String>) -> Self {
        Witness {
            description: description.into(),
            vectors: Vec::new(),
        }
    }

    pub fn with_vectors(description: impl Into<String>, vectors: Vec<FVector>) -> Self {
        Witness {
            description: description.into(),
            vectors,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Status {
    Proven,
    Refuted(Witness),
    Unknown,
}

/// Outcome of a property check together with a description of how much was
/// searched. `Proven` from a bounded search means "proven on that search
/// space"; the bound says which.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PropertyVerdict {
    pub status: Status,
    pub search_bound: String,
}

impl PropertyVerdict {
    pub fn proven(bound: impl Into<String>) -> Self {
        PropertyVerdict {
            status: Status::Proven,
            search_bound: bound.into(),
        }
    }

    pub fn refuted(w: Witness, bound: impl Into<String>) -> Self {
        PropertyVerdict {
            status: Status::Refuted(w),
            search_bound: bound.into(),
        }
    }

    pub fn unknown(bound: impl Into<String>) -> Self {
        PropertyVerdict {
            status: Status::Unknown,
            search_bound: bound.into(),
        }
    }

    pub fn is_proven(&self) -> bool {
        self.status == Status::Proven
    }

    pub fn is_refuted(&self) -> bool {
        matches!(self.status, Status::Refuted(_))
    }

    pub fn witness(&self) -> Option<&Witness> {
        match &self.status {
            Status::Refuted(w) => Some(w),
            _ => None,
        }
    }
}

impl fmt::Display for PropertyVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.status {
            Status::Proven => write!(f, "Proven ({})", self.search_bound),
            Status::Unknown => write!(f, "Unknown ({})", self.search_bound),
            Status::Refuted(w) => {
                write!(f, "Refuted: {}", w.description)?;
                for v in &w.vectors {
                    write!(f, "\n  {v}")?;
                }
                Ok(())
            }
        }
    }
}
