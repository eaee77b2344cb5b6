use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::KupischError;

/// The indecomposable module `M(vertex, len) = e_vertex A / e_vertex J^len`.
///
/// Values are only meaningful relative to the series that validated them
/// (see [`super::KupischSeries::interval`]).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Interval {
    pub vertex: usize,
    pub len: usize,
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "M({},{})", self.vertex, self.len)
    }
}

impl FromStr for Interval {
    type Err = KupischError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || KupischError::Parse(format!("expected M(i,k), got {s:?}"));
        let body = s.trim().strip_prefix("M(").and_then(|r| r.strip_suffix(')')).ok_or_else(bad)?;
        let (i, k) = body.split_once(',').ok_or_else(bad)?;
        let vertex = i.trim().parse().map_err(|_| bad())?;
        let len = k.trim().parse().map_err(|_| bad())?;
        if len == 0 {
            return Err(bad());
        }
        Ok(Interval { vertex, len })
    }
}

impl Serialize for Interval {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Interval {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}

/// A direct sum of intervals, kept sorted by (vertex, length). The empty
/// list is the zero module.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ModuleList(Vec<Interval>);

impl ModuleList {
    pub fn new(mut entries: Vec<Interval>) -> ModuleList {
        entries.sort();
        ModuleList(entries)
    }

    pub fn zero() -> ModuleList {
        ModuleList(Vec::new())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Interval> {
        self.0.iter()
    }

    pub fn as_slice(&self) -> &[Interval] {
        &self.0
    }

    /// Total length (dimension over the ground field).
    pub fn dim(&self) -> usize {
        self.0.iter().map(|m| m.len).sum()
    }

    /// The basic version: one copy of each isomorphism class.
    pub fn basic(&self) -> ModuleList {
        let mut v = self.0.clone();
        v.dedup();
        ModuleList(v)
    }

    pub fn is_basic(&self) -> bool {
        self.0.windows(2).all(|w| w[0] != w[1])
    }

    pub fn contains(&self, m: &Interval) -> bool {
        self.0.binary_search(m).is_ok()
    }

    pub fn union(&self, other: &ModuleList) -> ModuleList {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        ModuleList::new(v)
    }
}

impl FromIterator<Interval> for ModuleList {
    fn from_iter<T: IntoIterator<Item = Interval>>(iter: T) -> Self {
        ModuleList::new(iter.into_iter().collect())
    }
}

impl<'a> IntoIterator for &'a ModuleList {
    type Item = &'a Interval;
    type IntoIter = std::slice::Iter<'a, Interval>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

impl fmt::Display for ModuleList {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("0");
        }
        for (i, m) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{m}")?;
        }
        Ok(())
    }
}
