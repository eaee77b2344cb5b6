//! Combinatorial calculus of connected Nakayama algebras.
//!
//! A connected Nakayama algebra with `n` simple modules is determined by its
//! orientation (the quiver is a directed line `0 -> 1 -> ... -> n-1` or a
//! directed cycle) and by its Kupisch series `c`, where `c[i]` is the length
//! of the indecomposable projective `e_i A`. Every indecomposable module is an
//! interval `M(i, k) = e_i A / e_i J^k` with top `S_i` and composition factors
//! `S_i, S_{i+1}, ..., S_{i+k-1}`; all homological computations here are
//! exact operations on such intervals.

mod calculus;
mod interval;
mod resolution;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use interval::{Interval, ModuleList};
pub use resolution::{Direction, GorensteinReport, ResolutionReport, ResolutionStep};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum KupischError {
    #[error("empty Kupisch series")]
    EmptySeries,
    #[error("entry c[{index}] = {value} is not positive")]
    NonPositiveEntry { index: usize, value: i64 },
    #[error("c[{index}] = {value} exceeds c[{next}] + 1 = {bound}")]
    SlopeViolation { index: usize, next: usize, value: u64, bound: u64 },
    #[error("a linear series must end in 1, found {last}")]
    LinearTailViolation { last: u64 },
    #[error("c[{index}] = 1 before the end of the series disconnects the quiver")]
    Disconnected { index: usize },
    #[error("the series describes a semisimple algebra")]
    Semisimple,
    #[error("vertex {vertex} out of range for {n} simple modules")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("M({vertex},{len}) is not a module: {reason}")]
    InvalidInterval { vertex: usize, len: usize, reason: &'static str },
    #[error("the zero module has no resolution")]
    ZeroModule,
    #[error("resolution did not close within {cap} steps")]
    StepCapExceeded { cap: usize },
    #[error("tilting index {index} exceeds the dominant dimension {domdim}")]
    IndexExceedsDomdim { index: usize, domdim: u64 },
    #[error("tilting index must be at least 1")]
    ZeroTiltingIndex,
    #[error("the algebra has infinite dominant dimension")]
    InfiniteDomdim,
    #[error("family A_n needs n >= 2, got {0}")]
    FamilyTooSmall(usize),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = KupischError> = std::result::Result<T, E>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Orientation {
    Linear,
    Cyclic,
}

impl fmt::Display for Orientation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Orientation::Linear => "linear",
            Orientation::Cyclic => "cyclic",
        })
    }
}

/// A validated Kupisch series with its CoKupisch series cached.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct KupischSeries {
    orientation: Orientation,
    c: Vec<usize>,
    d: Vec<usize>,
}

impl KupischSeries {
    /// Validates `c` for the given orientation.
    pub fn new(orientation: Orientation, c: &[i64]) -> Result<KupischSeries> {
        if c.is_empty() {
            return Err(KupischError::EmptySeries);
        }
        if let Some((index, &value)) = c.iter().enumerate().find(|(_, &v)| v <= 0) {
            return Err(KupischError::NonPositiveEntry { index, value });
        }
        let c: Vec<usize> = c.iter().map(|&v| v as usize).collect();
        let n = c.len();
        if n == 1 && c[0] == 1 {
            return Err(KupischError::Semisimple);
        }
        let slope_pairs = match orientation {
            Orientation::Linear => n - 1,
            Orientation::Cyclic => n,
        };
        for index in 0..slope_pairs {
            let next = (index + 1) % n;
            if c[index] > c[next] + 1 {
                return Err(KupischError::SlopeViolation { index, next, value: c[index] as u64, bound: c[next] as u64 + 1 });
            }
        }
        match orientation {
            Orientation::Linear => {
                if c[n - 1] != 1 {
                    return Err(KupischError::LinearTailViolation { last: c[n - 1] as u64 });
                }
                if let Some(index) = c[..n - 1].iter().position(|&v| v == 1) {
                    return Err(KupischError::Disconnected { index });
                }
            }
            Orientation::Cyclic => {
                if let Some(index) = c.iter().position(|&v| v == 1) {
                    return Err(KupischError::Disconnected { index });
                }
            }
        }
        let mut k = KupischSeries { orientation, c, d: Vec::new() };
        k.d = (0..n).map(|i| k.cokupisch_at(i)).collect();
        Ok(k)
    }

    pub fn linear(c: &[i64]) -> Result<KupischSeries> {
        KupischSeries::new(Orientation::Linear, c)
    }

    pub fn cyclic(c: &[i64]) -> Result<KupischSeries> {
        KupischSeries::new(Orientation::Cyclic, c)
    }

    // d_i = min { k >= 1 : k >= c_{i-k} }, with c = 0 left of vertex 0 on a line.
    fn cokupisch_at(&self, i: usize) -> usize {
        (1..)
            .find(|&k| match self.shift(i, -(k as i64)) {
                Some(j) => k >= self.c[j],
                None => true,
            })
            .expect("bounded by max c")
    }

    pub fn orientation(&self) -> Orientation {
        self.orientation
    }

    /// Number of simple modules.
    pub fn n(&self) -> usize {
        self.c.len()
    }

    pub fn c(&self) -> &[usize] {
        &self.c
    }

    /// CoKupisch series: lengths of the indecomposable injectives `D(A e_i)`.
    pub fn cokupisch(&self) -> &[usize] {
        &self.d
    }

    /// `dim A`.
    pub fn dim(&self) -> usize {
        self.c.iter().sum()
    }

    pub fn is_cyclic(&self) -> bool {
        self.orientation == Orientation::Cyclic
    }

    /// Vertex `i + delta`, reduced mod `n` on a cycle; `None` off a line.
    pub fn shift(&self, i: usize, delta: i64) -> Option<usize> {
        let n = self.n() as i64;
        let v = i as i64 + delta;
        match self.orientation {
            Orientation::Cyclic => Some(v.rem_euclid(n) as usize),
            Orientation::Linear => (0..n).contains(&v).then_some(v as usize),
        }
    }

    pub(crate) fn check_vertex(&self, vertex: usize) -> Result<()> {
        if vertex < self.n() {
            Ok(())
        } else {
            Err(KupischError::VertexOutOfRange { vertex, n: self.n() })
        }
    }

    /// The interval module `M(vertex, len)`, validated.
    pub fn interval(&self, vertex: usize, len: usize) -> Result<Interval> {
        self.check_vertex(vertex)?;
        if len == 0 {
            return Err(KupischError::InvalidInterval { vertex, len, reason: "length must be positive" });
        }
        if len > self.c[vertex] {
            return Err(KupischError::InvalidInterval { vertex, len, reason: "length exceeds c_i" });
        }
        Ok(Interval { vertex, len })
    }

    /// All indecomposable modules, in canonical order.
    pub fn all_intervals(&self) -> Vec<Interval> {
        (0..self.n()).flat_map(|i| (1..=self.c[i]).map(move |k| Interval { vertex: i, len: k })).collect()
    }
}

impl fmt::Display for KupischSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:", self.orientation)?;
        for (i, c) in self.c.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl FromStr for KupischSeries {
    type Err = KupischError;

    /// Parses `"linear:3,3,3,2,1"` or `"cyclic:2,3"`.
    fn from_str(s: &str) -> Result<Self> {
        let (shape, list) =
            s.trim().split_once(':').ok_or_else(|| KupischError::Parse(format!("expected <linear|cyclic>:<c list>, got {s:?}")))?;
        let orientation = match shape.trim() {
            "linear" => Orientation::Linear,
            "cyclic" => Orientation::Cyclic,
            other => return Err(KupischError::Parse(format!("unknown orientation {other:?}"))),
        };
        let c = list
            .split(',')
            .filter(|t| !t.trim().is_empty())
            .map(|t| t.trim().parse::<i64>().map_err(|_| KupischError::Parse(format!("bad entry {t:?}"))))
            .collect::<Result<Vec<_>>>()?;
        KupischSeries::new(orientation, &c)
    }
}

impl Serialize for KupischSeries {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for KupischSeries {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}

/// `A_n`: the linear series `[3, ..., 3, 2, 1]` of length `n`.
///
/// `n = 2` yields `[2, 1]`, for which the family's counting degenerates.
pub fn family_a(n: usize) -> Result<KupischSeries> {
    if n < 2 {
        return Err(KupischError::FamilyTooSmall(n));
    }
    let mut c = vec![3i64; n];
    c[n - 2] = 2;
    c[n - 1] = 1;
    KupischSeries::linear(&c)
}

/// Every valid series with at most `max_n` vertices and entries at most
/// `max_c`, linear ones first, each group in lexicographic order.
pub fn enumerate_series(max_n: usize, max_c: usize) -> Vec<KupischSeries> {
    fn fill(orientation: Orientation, c: &mut Vec<i64>, n: usize, max_c: i64, out: &mut Vec<KupischSeries>) {
        if c.len() == n {
            if let Ok(k) = KupischSeries::new(orientation, c) {
                out.push(k);
            }
            return;
        }
        for v in 1..=max_c {
            c.push(v);
            fill(orientation, c, n, max_c, out);
            c.pop();
        }
    }
    let mut out = Vec::new();
    for orientation in [Orientation::Linear, Orientation::Cyclic] {
        for n in 1..=max_n {
            fill(orientation, &mut Vec::with_capacity(n), n, max_c as i64, &mut out);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Counts nonzero paths ending at each vertex directly from the path
    /// basis: a path of length t from j is nonzero iff t < c_j.
    fn cokupisch_by_paths(k: &KupischSeries) -> Vec<usize> {
        let n = k.n();
        let mut d = vec![0; n];
        for j in 0..n {
            for t in 0..k.c()[j] {
                let end = match k.orientation() {
                    Orientation::Cyclic => (j + t) % n,
                    Orientation::Linear => j + t,
                };
                d[end] += 1;
            }
        }
        d
    }

    #[test]
    fn validate_examples() {
        let a5 = KupischSeries::linear(&[3, 3, 3, 2, 1]).unwrap();
        assert_eq!(a5.n(), 5);
        assert_eq!(KupischSeries::linear(&[1]), Err(KupischError::Semisimple));
        assert!(matches!(KupischSeries::linear(&[3, 1, 2]), Err(KupischError::SlopeViolation { index: 0, .. })));
        assert_eq!(KupischSeries::linear(&[]), Err(KupischError::EmptySeries));
        assert!(matches!(KupischSeries::linear(&[2, 0]), Err(KupischError::NonPositiveEntry { index: 1, .. })));
        assert!(matches!(KupischSeries::linear(&[3, 2]), Err(KupischError::LinearTailViolation { last: 2 })));
        assert!(matches!(KupischSeries::linear(&[2, 1, 2, 1]), Err(KupischError::Disconnected { index: 1 })));
        assert!(matches!(KupischSeries::cyclic(&[2, 4]), Err(KupischError::SlopeViolation { index: 1, next: 0, .. })));
        assert!(matches!(KupischSeries::cyclic(&[1, 1]), Err(KupischError::Disconnected { .. })));
        assert_eq!(KupischSeries::cyclic(&[1]), Err(KupischError::Semisimple));
    }

    #[test]
    fn cokupisch_examples() {
        assert_eq!(family_a(5).unwrap().cokupisch(), &[1, 2, 3, 3, 3]);
        assert_eq!(KupischSeries::cyclic(&[2, 3]).unwrap().cokupisch(), &[2, 3]);
        assert_eq!(KupischSeries::cyclic(&[2, 2]).unwrap().cokupisch(), &[2, 2]);
    }

    #[test]
    fn cokupisch_matches_path_count_and_permutes_c() {
        for k in enumerate_series(6, 6) {
            assert_eq!(k.cokupisch(), &cokupisch_by_paths(&k)[..], "{k}");
            let mut a = k.c().to_vec();
            let mut b = k.cokupisch().to_vec();
            a.sort();
            b.sort();
            assert_eq!(a, b, "{k}");
        }
    }

    #[test]
    fn family() {
        assert_eq!(family_a(5).unwrap().c(), &[3, 3, 3, 2, 1]);
        assert_eq!(family_a(6).unwrap().c(), &[3, 3, 3, 3, 2, 1]);
        assert_eq!(family_a(3).unwrap().c(), &[3, 2, 1]);
        assert_eq!(family_a(2).unwrap().c(), &[2, 1]);
        assert_eq!(family_a(1), Err(KupischError::FamilyTooSmall(1)));
    }

    #[test]
    fn text_form_round_trip() {
        let k: KupischSeries = "linear:3,3,3,2,1".parse().unwrap();
        assert_eq!(k.to_string(), "linear:3,3,3,2,1");
        let k: KupischSeries = " cyclic: 2, 3 ".parse().unwrap();
        assert_eq!(k.to_string(), "cyclic:2,3");
        assert!("circle:2,3".parse::<KupischSeries>().is_err());
        assert!("linear:3,x".parse::<KupischSeries>().is_err());
        let json = serde_json::to_string(&k).unwrap();
        assert_eq!(json, "\"cyclic:2,3\"");
    }

    #[test]
    fn enumeration_is_exhaustive_for_small_bounds() {
        let all = enumerate_series(3, 3);
        let text: Vec<String> = all.iter().map(|k| k.to_string()).collect();
        assert!(text.contains(&"linear:2,1".to_string()));
        assert!(text.contains(&"linear:3,2,1".to_string()));
        assert!(text.contains(&"linear:2,2,1".to_string()));
        assert!(text.contains(&"cyclic:2".to_string()));
        assert!(text.contains(&"cyclic:3,2,2".to_string()));
        assert!(text.contains(&"cyclic:3,2".to_string()));
        // with max_c >= n, linear series of length n are counted by Catalan numbers
        let linear = |n| all.iter().filter(|k| !k.is_cyclic() && k.n() == n).count();
        assert_eq!((linear(1), linear(2), linear(3)), (0, 1, 2));
    }
}
