//! Extended natural numbers for homological dimensions.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

/// A homological dimension: an exact value, an exact infinity, or a lower
/// bound produced by a computation that stopped at its step cap.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", content = "value", rename_all = "snake_case")]
pub enum ExtNat {
    Finite(u64),
    Infinity,
    AtLeast(u64),
}

impl ExtNat {
    pub fn is_exact(self) -> bool {
        !matches!(self, ExtNat::AtLeast(_))
    }

    pub fn is_finite(self) -> bool {
        matches!(self, ExtNat::Finite(_))
    }

    pub fn finite(self) -> Option<u64> {
        match self {
            ExtNat::Finite(v) => Some(v),
            _ => None,
        }
    }

    /// Largest value known to be a lower bound.
    pub fn lower_bound(self) -> u64 {
        match self {
            ExtNat::Finite(v) | ExtNat::AtLeast(v) => v,
            ExtNat::Infinity => u64::MAX,
        }
    }

    /// Maximum of two dimensions, keeping track of bounds.
    pub fn max(self, other: ExtNat) -> ExtNat {
        use ExtNat::*;
        match (self, other) {
            (Infinity, _) | (_, Infinity) => Infinity,
            (Finite(a), Finite(b)) => Finite(a.max(b)),
            (Finite(a), AtLeast(b)) | (AtLeast(b), Finite(a)) | (AtLeast(a), AtLeast(b)) => AtLeast(a.max(b)),
        }
    }

    /// Minimum of two dimensions. The minimum of an exact value `a` and a
    /// bound `>= b` is exact only when `a <= b`.
    pub fn min(self, other: ExtNat) -> ExtNat {
        use ExtNat::*;
        match (self, other) {
            (Infinity, x) | (x, Infinity) => x,
            (Finite(a), Finite(b)) => Finite(a.min(b)),
            (Finite(a), AtLeast(b)) | (AtLeast(b), Finite(a)) => {
                if a <= b {
                    Finite(a)
                } else {
                    AtLeast(b)
                }
            }
            (AtLeast(a), AtLeast(b)) => AtLeast(a.min(b)),
        }
    }

    /// True when a bounded or exact verdict from one computation is
    /// compatible with an exact verdict from another.
    pub fn consistent_with(self, exact: ExtNat) -> bool {
        match (self, exact) {
            (ExtNat::AtLeast(b), ExtNat::Finite(v)) => v >= b,
            (ExtNat::AtLeast(_), ExtNat::Infinity) | (ExtNat::AtLeast(_), ExtNat::AtLeast(_)) => true,
            (ExtNat::Finite(v), ExtNat::AtLeast(b)) => v >= b,
            (a, b) => a == b,
        }
    }

    /// Total order on exact values; `None` when a bound is involved.
    pub fn cmp_exact(self, other: ExtNat) -> Option<Ordering> {
        use ExtNat::*;
        match (self, other) {
            (Finite(a), Finite(b)) => Some(a.cmp(&b)),
            (Finite(_), Infinity) => Some(Ordering::Less),
            (Infinity, Finite(_)) => Some(Ordering::Greater),
            (Infinity, Infinity) => Some(Ordering::Equal),
            _ => None,
        }
    }
}

impl From<u64> for ExtNat {
    fn from(v: u64) -> Self {
        ExtNat::Finite(v)
    }
}

impl fmt::Display for ExtNat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtNat::Finite(v) => write!(f, "{v}"),
            ExtNat::Infinity => f.write_str("inf"),
            ExtNat::AtLeast(v) => write!(f, ">={v}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::ExtNat::*;
    use super::*;

    #[test]
    fn min_max() {
        assert_eq!(Finite(2).min(Infinity), Finite(2));
        assert_eq!(Finite(2).max(Infinity), Infinity);
        assert_eq!(Finite(2).min(AtLeast(5)), Finite(2));
        assert_eq!(Finite(7).min(AtLeast(5)), AtLeast(5));
        assert_eq!(Finite(7).max(AtLeast(5)), AtLeast(7));
    }

    #[test]
    fn display_and_json() {
        assert_eq!(Infinity.to_string(), "inf");
        assert_eq!(AtLeast(4).to_string(), ">=4");
        let s = serde_json::to_string(&Finite(3)).unwrap();
        assert_eq!(s, r#"{"kind":"finite","value":3}"#);
        assert_eq!(serde_json::to_string(&Infinity).unwrap(), r#"{"kind":"infinity"}"#);
        let back: ExtNat = serde_json::from_str(r#"{"kind":"at_least","value":9}"#).unwrap();
        assert_eq!(back, AtLeast(9));
    }

    #[test]
    fn consistency() {
        assert!(AtLeast(3).consistent_with(Finite(3)));
        assert!(!AtLeast(4).consistent_with(Finite(3)));
        assert!(AtLeast(4).consistent_with(Infinity));
        assert!(!Finite(2).consistent_with(Infinity));
    }
}
