//! Error type shared by every module of the crate.
//!
//! Errors fall into three classes that the command-line front end maps onto
//! exit codes: input problems (parse and I/O), violated mathematical
//! invariants, and exceeded resource bounds.

use std::fmt;

use crate::index::IndexPair;

/// The group axiom that a candidate operation table violates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axiom {
    /// A table entry is not a valid element index.
    Closure,
    /// No two-sided identity exists.
    Identity,
    /// Some element has no two-sided inverse.
    Inverse,
    /// `(a·b)·c != a·(b·c)` for some triple.
    Associativity,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Axiom::Closure => "closure",
            Axiom::Identity => "identity",
            Axiom::Inverse => "inverse",
            Axiom::Associativity => "associativity",
        };
        f.write_str(name)
    }
}

/// Broad error class, used to pick a process exit code.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorClass {
    /// Malformed input or an I/O failure.
    Input,
    /// A domain invariant does not hold.
    Invariant,
    /// A configured size or search bound was exceeded.
    Bound,
}

/// Errors produced by the library.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// Text input could not be parsed.
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    /// Reading or writing a file failed.
    #[error("i/o error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },

    /// An operation table fails a group axiom; the witness names the offending elements.
    #[error("{name}: {axiom} axiom violated at {witness:?}")]
    AxiomViolation {
        name: String,
        axiom: Axiom,
        witness: Vec<usize>,
    },

    /// A set of elements is not closed under the group operation or inverses.
    #[error("not a subgroup: {0}")]
    NotASubgroup(String),

    /// The set product of two subgroups is not itself a subgroup.
    #[error("set product of subgroups is not closed: {a}·{b} leaves the product")]
    NotASubgroupResult { a: usize, b: usize },

    /// A quotient was requested by a subgroup that is not normal.
    #[error("subgroup is not normal: conjugate of {element} by {by} leaves it")]
    NotNormal { element: usize, by: usize },

    /// A precondition of a construction does not hold.
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),

    /// A map fails the homomorphism property at the given pair.
    #[error("not a homomorphism at ({a}, {b})")]
    NotAHomomorphism { a: usize, b: usize },

    /// Two maps that must share a codomain do not.
    #[error("codomain mismatch between projections")]
    CodomainMismatch,

    /// A map that must be surjective misses the given element.
    #[error("map is not surjective: element {missing} has no preimage")]
    NotSurjective { missing: usize },

    /// A sequence set is not closed under componentwise product.
    #[error("not a group system: product of members {a} and {b} is not a member")]
    NotAGroupSystem { a: usize, b: usize },

    /// An alphabet letter never occurs at its time index.
    #[error("alphabet letter {letter} at time {time} is not realized by any member")]
    UnrealizedLetter { time: i64, letter: usize },

    /// A time index or index pair lies outside the window.
    #[error("out of window: {0}")]
    OutOfWindow(String),

    /// The system is not strongly controllable on its window.
    #[error("system is not strongly controllable on its window")]
    NotControllableOnWindow,

    /// Granule orders do not multiply to the system order.
    #[error("system is not complete on its window: granule product {product} != order {order}")]
    NotComplete { product: usize, order: usize },

    /// A sequence is not a member of the system.
    #[error("sequence is not a member of the system")]
    NotAMember,

    /// The product on triangles depends on the choice of lifts.
    #[error("elementary product at {anchor} depends on the chosen lifts")]
    WellDefinednessFailure { anchor: IndexPair },

    /// A triangle of labels is not realized by any tensor.
    #[error("triangle at {anchor} is not realized")]
    UnrealizedTriangle { anchor: IndexPair },

    /// A projection target is not nested inside its source triangle.
    #[error("shape mismatch: {target} is not nested in {source_anchor}")]
    ShapeMismatch {
        source_anchor: IndexPair,
        target: IndexPair,
    },

    /// Per-time products disagree on a shared position.
    #[error("stitching per-time products disagrees at {0}")]
    InconsistentStitch(IndexPair),

    /// A recovered or reconstructed system differs from the original.
    #[error("recovered system differs from the original: {0}")]
    RecoveryMismatch(String),

    /// A walk is not a filling sequence of the index tensor.
    #[error("invalid filling sequence: {0}")]
    InvalidFilling(String),

    /// A filling sequence has a prefix that is not a union of lower triangles.
    #[error("filling sequence is not normal: prefix of length {prefix} is not a union of lower triangles")]
    NotNormalFilling { prefix: usize },

    /// The system is not a block code on its window.
    #[error("not a block code: {0}")]
    NotABlockCode(String),

    /// A slice of a tensor is not an element of its elementary group.
    #[error("slice at time {0} is not an element of its elementary group")]
    UnrealizedSlice(i64),

    /// Slicewise products disagree on overlapping positions.
    #[error("slicewise products disagree at {0}")]
    OverlapInconsistency(IndexPair),

    /// An elementary system fails the homomorphism condition.
    #[error("homomorphism condition fails: {0}")]
    HomomorphismCondition(String),

    /// No extension matched the requested strategy.
    #[error("no extension found: {0}")]
    NoExtensionFound(String),

    /// A generic invariant check failed.
    #[error("invariant violated: {0}")]
    InvariantViolation(String),

    /// A size or search bound was exceeded.
    #[error("bound exceeded: {what} (limit {limit})")]
    BoundExceeded { what: String, limit: usize },
}

impl Error {
    /// Classifies the error for exit-code selection.
    pub fn class(&self) -> ErrorClass {
        match self {
            Error::Parse { .. } | Error::Io { .. } => ErrorClass::Input,
            Error::BoundExceeded { .. } => ErrorClass::Bound,
            _ => ErrorClass::Invariant,
        }
    }

    /// Process exit code: 1 for input problems, 2 for invariant violations, 3 for bounds.
    pub fn exit_code(&self) -> i32 {
        match self.class() {
            ErrorClass::Input => 1,
            ErrorClass::Invariant => 2,
            ErrorClass::Bound => 3,
        }
    }

    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }
}

/// Result alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
