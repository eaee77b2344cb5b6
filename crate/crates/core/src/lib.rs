//! Exact homological invariants of Nakayama algebras and of endomorphism
//! algebras of their canonical tilting modules.

pub mod cli;
pub mod endo;
pub mod engine;
mod extnat;
pub mod kupisch;
pub mod oracle;
pub mod propstar;

pub use extnat::ExtNat;
