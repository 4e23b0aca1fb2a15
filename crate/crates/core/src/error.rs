use crate::poset::ElementId;
use crate::subset::Subset;

/// Errors raised by structure construction and the partial operations.
///
/// Law *violations* are not errors: checkers report them in a
/// [`crate::report::Report`] with witnesses. `Error` covers structural
/// problems (malformed input, out-of-range indices) and unsatisfied
/// preconditions of operations that cannot produce a meaningful report.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("carrier is empty")]
    EmptyCarrier,

    #[error("carrier has {size} elements; at most {max} are supported", max = crate::MAX_ELEMENTS)]
    CarrierTooLarge { size: usize },

    #[error("{what}: expected {expected} entries, found {found}")]
    DimensionMismatch {
        what: &'static str,
        expected: usize,
        found: usize,
    },

    #[error("element index {index} out of range for carrier of {carrier}")]
    ElementOutOfRange { index: usize, carrier: usize },

    #[error("involution map is not a permutation: {detail}")]
    InvalidInvolution { detail: String },

    #[error("duplicate element label {label:?}")]
    DuplicateLabel { label: String },

    #[error("interval [{lo}, {hi}] requires {lo} <= {hi}")]
    NotComparable { lo: ElementId, hi: ElementId },

    #[error("join of {x} and {y} is undefined (no least upper bound)")]
    UndefinedJoin { x: ElementId, y: ElementId },

    #[error("meet of {x} and {y} is undefined (no greatest lower bound)")]
    UndefinedMeet { x: ElementId, y: ElementId },

    #[error("structure is not orthomodular: {law} fails")]
    NotOrthomodular { law: String },

    #[error("product is not idempotent at {witness}")]
    NotIdempotent { witness: ElementId },

    #[error("meet of {x} and {y} is undefined although {x}' <= {y}")]
    OrthogonalMeetMissing { x: ElementId, y: ElementId },

    #[error(
        "stored implication at ({x}, {y}) is {stored:?} but the order formula gives {derived:?}"
    )]
    ImplicationTableMismatch {
        x: ElementId,
        y: ElementId,
        stored: Subset,
        derived: Subset,
    },

    #[error("order reduct is not orthomodular ({law} fails); input violates the residuation laws")]
    ReductNotOrthomodular { law: String },

    #[error("unknown catalog entry {name:?}")]
    UnknownCatalogEntry { name: String },

    #[error("invalid parameter: {what}")]
    InvalidParameter { what: String },
}
