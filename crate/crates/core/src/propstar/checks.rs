use std::fmt::Display;

use serde::{Deserialize, Serialize};

use crate::ExtNat;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    /// Matches the independently computed value pinned for a known
    /// discrepancy with a stated figure.
    Documented,
    /// A bounded computation neither confirms nor contradicts the claim.
    Inconclusive,
}

/// One verified claim: what was expected, what was computed, and the verdict.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub claim: String,
    pub expected: String,
    pub computed: String,
    pub status: Status,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl Check {
    pub fn value<T: PartialEq + Display>(claim: impl Into<String>, expected: T, computed: T) -> Check {
        let status = if expected == computed { Status::Pass } else { Status::Fail };
        Check { claim: claim.into(), expected: expected.to_string(), computed: computed.to_string(), status, note: None }
    }

    /// An engine verdict against an exact expectation: truncated verdicts
    /// that do not contradict it are inconclusive rather than failures.
    pub fn bounded(claim: impl Into<String>, expected: ExtNat, computed: ExtNat) -> Check {
        let status = if expected == computed {
            Status::Pass
        } else if !computed.is_exact() && computed.consistent_with(expected) {
            Status::Inconclusive
        } else {
            Status::Fail
        };
        Check { claim: claim.into(), expected: expected.to_string(), computed: computed.to_string(), status, note: None }
    }

    /// A claim whose stated figure `stated` disagrees with the value
    /// `pinned` obtained by independent counting.
    pub fn documented<T: PartialEq + Display>(claim: impl Into<String>, stated: T, pinned: T, computed: T) -> Check {
        let status = if computed == pinned { Status::Documented } else { Status::Fail };
        Check {
            claim: claim.into(),
            expected: pinned.to_string(),
            computed: computed.to_string(),
            status,
            note: Some(format!("stated value {stated}; independent count {pinned}")),
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Check {
        self.note = Some(note.into());
        self
    }

    pub fn failed(&self) -> bool {
        self.status == Status::Fail
    }
}

/// Summary counts over a list of checks.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Tally {
    pub pass: usize,
    pub fail: usize,
    pub documented: usize,
    pub inconclusive: usize,
}

impl Tally {
    pub fn of<'a>(checks: impl IntoIterator<Item = &'a Check>) -> Tally {
        let mut t = Tally::default();
        for c in checks {
            match c.status {
                Status::Pass => t.pass += 1,
                Status::Fail => t.fail += 1,
                Status::Documented => t.documented += 1,
                Status::Inconclusive => t.inconclusive += 1,
            }
        }
        t
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bounded_verdicts() {
        assert_eq!(Check::bounded("x", ExtNat::Finite(3), ExtNat::Finite(3)).status, Status::Pass);
        assert_eq!(Check::bounded("x", ExtNat::Finite(3), ExtNat::AtLeast(2)).status, Status::Inconclusive);
        assert_eq!(Check::bounded("x", ExtNat::Finite(3), ExtNat::AtLeast(5)).status, Status::Fail);
        assert_eq!(Check::bounded("x", ExtNat::Finite(3), ExtNat::Finite(2)).status, Status::Fail);
    }

    #[test]
    fn documented_discrepancy() {
        let c = Check::documented("dim", 10, 9, 9);
        assert_eq!(c.status, Status::Documented);
        assert!(!c.failed());
        assert!(Check::documented("dim", 10, 9, 10).failed());
    }
}
