//! Finite-model toolkit for orthomodular posets and unsharp residuated posets.
//!
//! Everything here works on explicit finite carriers (at most [`MAX_ELEMENTS`]
//! elements), so every law is decided by exhaustive scan and every verdict
//! comes with a concrete witness:
//!
//! * [`poset`] — bounded posets with an antitone involution, cones, and the
//!   partial meet/join operations induced by the order.
//! * [`omp`] — orthomodularity checks and the subset-valued implication
//!   `x -> y = x' v L(x, y)`, together with its derived laws.
//! * [`urp`] — unsharp residuated structures: a partial commutative monoid
//!   plus a subset-valued implication, validated against the residuation
//!   axioms (R1)–(R4) and the optional divisibility/idempotence properties.
//! * [`functors`] — the constructions in both directions (order meet as
//!   product, implication from the order formula) and round-trip checks.
//! * [`catalog`] — small named families used as fixtures: even-cardinality
//!   set systems, Boolean algebras, the MO(k) family, and a six-element
//!   residuated structure with fully tabulated operations.
//! * [`search`] — exhaustive enumeration of small structures up to
//!   isomorphism and stress checks of the construction theorems.
//!
//! Law checks never short-circuit: each check scans the whole carrier and
//! collects witnesses up to a configurable cap.

// Carriers are bitmask rows indexed by element number; loops over `0..n`
// that index several parallel tables at once stay in index form.
#![allow(clippy::needless_range_loop)]

pub mod catalog;
mod error;
pub mod functors;
pub mod omp;
pub mod poset;
pub mod report;
pub mod search;
pub mod subset;
pub mod urp;

pub use error::Error;
pub use poset::{BoundedInvolutivePoset, ElementId, PosetValidation, RawPoset};
pub use report::{LawCheck, Report, Violation, DEFAULT_WITNESS_CAP};
pub use subset::Subset;
pub use urp::UnsharpResiduatedStructure;

/// Hard cap on carrier size: subsets are stored as one 64-bit word.
pub const MAX_ELEMENTS: usize = 64;

/// A structure produced by the catalog or parsed from a file: either a bare
/// orthomodular-poset candidate or a full residuated structure.
#[derive(Debug, Clone)]
pub enum Structure {
    Omp(BoundedInvolutivePoset),
    Urp(UnsharpResiduatedStructure),
}

impl Structure {
    /// The underlying order structure, whichever variant this is.
    pub fn poset(&self) -> &BoundedInvolutivePoset {
        match self {
            Structure::Omp(p) => p,
            Structure::Urp(s) => &s.poset,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Structure::Omp(_) => "omp",
            Structure::Urp(_) => "urp",
        }
    }
}
