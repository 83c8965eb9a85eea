//! Results of brute-force law checks.

use std::fmt;

use crate::exactla::{format_vector, Scalar};

/// A failed instance of an identity: which law, on which basis indices, and
/// the (nonzero) residual `lhs - rhs`, flattened row-major when it is a matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub law: &'static str,
    pub indices: Vec<usize>,
    pub residual: Vec<Scalar>,
}

impl Violation {
    pub fn new(law: &'static str, indices: Vec<usize>, residual: Vec<Scalar>) -> Self {
        Self {
            law,
            indices,
            residual,
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = self.indices.iter().map(|i| format!("e{}", i + 1)).collect();
        write!(
            f,
            "{} fails at ({}), residual {}",
            self.law,
            names.join(", "),
            format_vector(&self.residual)
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Holds,
    Fails(Violation),
}

impl Verdict {
    pub fn holds(&self) -> bool {
        matches!(self, Verdict::Holds)
    }

    pub fn witness(&self) -> Option<&Violation> {
        match self {
            Verdict::Holds => None,
            Verdict::Fails(v) => Some(v),
        }
    }

    /// Chains two checks, keeping the first failure.
    pub fn and_then(self, next: impl FnOnce() -> Verdict) -> Verdict {
        match self {
            Verdict::Holds => next(),
            failed => failed,
        }
    }

    pub fn into_result<E>(self, err: impl FnOnce(Violation) -> E) -> Result<(), E> {
        match self {
            Verdict::Holds => Ok(()),
            Verdict::Fails(v) => Err(err(v)),
        }
    }
}

impl From<Option<Violation>> for Verdict {
    fn from(v: Option<Violation>) -> Self {
        match v {
            None => Verdict::Holds,
            Some(v) => Verdict::Fails(v),
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Holds => f.write_str("holds"),
            Verdict::Fails(v) => write!(f, "{v}"),
        }
    }
}
