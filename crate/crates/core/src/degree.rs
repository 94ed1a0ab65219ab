use std::fmt;

use serde::{Serialize, Serializer};

/// Degree of a ring element. The zero element has degree `NegInfinity`,
/// which compares below every finite degree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Degree {
    NegInfinity,
    Finite(usize),
}

impl Degree {
    pub fn finite(self) -> Option<usize> {
        match self {
            Degree::NegInfinity => None,
            Degree::Finite(d) => Some(d),
        }
    }

    /// Finite degree as a signed integer; `None` for the zero element.
    pub fn as_i64(self) -> Option<i64> {
        self.finite().map(|d| d as i64)
    }

    pub fn is_neg_infinity(self) -> bool {
        matches!(self, Degree::NegInfinity)
    }
}

impl std::ops::Add for Degree {
    type Output = Degree;
    fn add(self, rhs: Degree) -> Degree {
        match (self, rhs) {
            (Degree::Finite(a), Degree::Finite(b)) => Degree::Finite(a + b),
            _ => Degree::NegInfinity,
        }
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::NegInfinity => write!(f, "-inf"),
            Degree::Finite(d) => write!(f, "{d}"),
        }
    }
}

impl Serialize for Degree {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Degree::NegInfinity => s.serialize_str("-inf"),
            Degree::Finite(d) => s.serialize_u64(*d as u64),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_degree_is_below_everything() {
        assert!(Degree::NegInfinity < Degree::Finite(0));
        assert_eq!(Degree::NegInfinity + Degree::Finite(3), Degree::NegInfinity);
        assert_eq!(Degree::Finite(2) + Degree::Finite(3), Degree::Finite(5));
    }
}
