//! Property *: whether `End_A(eA + Omega^{-n}(A))` keeps the dominant
//! dimension `n` of `A`. Classification of Nakayama algebras, the family
//! `A_n` and its endomorphism algebras, sweeps over all small Kupisch
//! series, and worked examples.
//!
//! `End_A(I_0 + Omega^{-n}(A))` and `End_A(eA + Omega^{-n}(A))` are Morita
//! equivalent, so the smaller basic module is used throughout.

mod checks;
mod examples;
mod family;
mod suite;
mod sweep;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::endo::{build_endo, EndoError};
use crate::engine::{Engine, Field};
use crate::kupisch::{KupischError, KupischSeries, ModuleList};
use crate::ExtNat;

pub use checks::{Check, Status, Tally};
pub use examples::{counterexample_a6_check, gendo_example_check, ExampleReport};
pub use family::{quiver_one_mod_three, quiver_two_mod_three, verify_family, FamilyVerdict};
pub use suite::{verify_all, Section, SuiteOptions, VerificationReport};
pub use sweep::{theorem_sweep, tilting_sweep, SweepReport, SweepRow, TiltingFailure, TiltingSweepReport};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PropStarError {
    #[error("the algebra is self-injective: its dominant dimension is infinite")]
    InfiniteDomdim,
    #[error("dominant dimension 0: there is no canonical tilting module")]
    ZeroDomdim,
    #[error(transparent)]
    Kupisch(#[from] KupischError),
    #[error(transparent)]
    Endo(#[from] EndoError),
}

pub type Result<T, E = PropStarError> = std::result::Result<T, E>;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Classification {
    pub higher_auslander: bool,
    pub higher_auslander_solberg: bool,
    pub morita_selfdual: bool,
}

fn at_least_two(x: ExtNat) -> bool {
    x.finite().is_some_and(|v| v >= 2)
}

/// `domdim A = gldim A`, finite and at least 2.
pub fn is_higher_auslander(k: &KupischSeries) -> bool {
    let d = k.domdim_algebra();
    at_least_two(d) && d == k.gldim()
}

/// `domdim A = Gorenstein dimension`, finite and at least 2.
pub fn is_higher_auslander_solberg(k: &KupischSeries) -> bool {
    let d = k.domdim_algebra();
    at_least_two(d) && d == k.gorenstein().gorenstein_dim
}

/// Dominant dimension finite and at least 2, with `D(Ae) = eA` as right
/// modules (compared as multisets of intervals).
pub fn is_morita_selfdual(k: &KupischSeries) -> bool {
    at_least_two(k.domdim_algebra()) && k.faithful_module() == k.faithful_dual()
}

pub fn classify(k: &KupischSeries) -> Classification {
    Classification {
        higher_auslander: is_higher_auslander(k),
        higher_auslander_solberg: is_higher_auslander_solberg(k),
        morita_selfdual: is_morita_selfdual(k),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PropertyStarReport {
    pub algebra: KupischSeries,
    /// Dominant dimension of the algebra.
    pub n: u64,
    pub tilting: ModuleList,
    pub endo_dim: usize,
    pub endo_domdim: ExtNat,
    /// `None` when the bounded engine verdict is inconclusive.
    pub has_property_star: Option<bool>,
    pub classification: Classification,
    pub warnings: Vec<String>,
}

/// Builds `B = End_A(eA + Omega^{-n}(A))` for `n = domdim A` and compares
/// the dominant dimension of `B`, computed by the engine, with `n`.
pub fn property_star_check(k: &KupischSeries, field: Field) -> Result<PropertyStarReport> {
    let n = match k.domdim_algebra() {
        ExtNat::Finite(0) => return Err(PropStarError::ZeroDomdim),
        ExtNat::Finite(n) => n,
        _ => return Err(PropStarError::InfiniteDomdim),
    };
    let tilting = k.canonical_tilting(n as usize)?;
    let b = build_endo(k, &tilting, field)?;
    let endo_domdim = Engine::new(b.algebra().clone()).domdim_algebra();
    let has_property_star = match endo_domdim {
        ExtNat::Finite(d) => Some(d == n),
        ExtNat::Infinity => Some(false),
        ExtNat::AtLeast(b) => (b > n).then_some(false),
    };
    let mut warnings = b.warnings().to_vec();
    if has_property_star.is_none() {
        warnings.push(format!("engine step cap reached: dominant dimension of the endomorphism algebra is {endo_domdim}"));
    }
    Ok(PropertyStarReport {
        algebra: k.clone(),
        n,
        tilting,
        endo_dim: b.dim(),
        endo_domdim,
        has_property_star,
        classification: classify(k),
        warnings,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kupisch::family_a;

    fn star(k: &KupischSeries) -> PropertyStarReport {
        property_star_check(k, Field::Rational).unwrap()
    }

    #[test]
    fn family_members() {
        let r = star(&family_a(4).unwrap());
        assert_eq!((r.n, r.endo_domdim, r.has_property_star), (1, ExtNat::Finite(0), Some(false)));
        let r = star(&family_a(5).unwrap());
        assert_eq!((r.n, r.endo_domdim, r.has_property_star), (2, ExtNat::Finite(1), Some(false)));
        let r = star(&family_a(6).unwrap());
        assert_eq!((r.n, r.endo_domdim, r.has_property_star), (3, ExtNat::Finite(3), Some(true)));
        assert!(r.classification.higher_auslander);
    }

    #[test]
    fn classification_examples() {
        let a6 = family_a(6).unwrap();
        assert!(is_higher_auslander(&a6) && is_higher_auslander_solberg(&a6));
        let c45 = KupischSeries::cyclic(&[4, 5]).unwrap();
        assert!(!is_higher_auslander(&c45) && is_higher_auslander_solberg(&c45));
        let c22 = KupischSeries::cyclic(&[2, 2]).unwrap();
        assert_eq!(classify(&c22), Classification::default());
        assert_eq!(property_star_check(&c22, Field::Rational), Err(PropStarError::InfiniteDomdim));
    }
}
