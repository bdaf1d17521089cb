use thiserror::Error;

/// Contract violations and resource exhaustion reported by the engine.
///
/// Budget exhaustion inside the equality decision procedure is *not* an
/// error (it yields an `Unknown` verdict); [`Error::BudgetExceeded`] is
/// reserved for enumerations that were explicitly capped by the caller.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("variable x{index} out of context of size {context}")]
    VarOutOfContext { index: usize, context: usize },

    #[error("substitution environment has {found} entries, term needs at least {required}")]
    EnvTooShort { required: usize, found: usize },

    #[error("operation {name}/{arity} takes {arity} arguments, got {found}")]
    ArityMismatch {
        name: String,
        arity: usize,
        found: usize,
    },

    #[error("unknown operation {name}/{arity}")]
    UnknownSymbol { name: String, arity: usize },

    #[error("duplicate operation {name}/{arity}")]
    DuplicateSymbol { name: String, arity: usize },

    #[error("invalid operation name {name:?}: {reason}")]
    BadSymbolName { name: String, reason: String },

    #[error("algebras are over different signatures")]
    SignatureMismatch,

    #[error("table for {symbol} has {found} entries, expected {expected}")]
    BadTableLength {
        symbol: String,
        expected: usize,
        found: usize,
    },

    #[error("table entry {value} for {symbol} exceeds carrier size {carrier}")]
    BadTableEntry {
        symbol: String,
        value: usize,
        carrier: usize,
    },

    #[error("empty carrier is not allowed: signature has constant {name}")]
    EmptyCarrierWithConstant { name: String },

    #[error("assignment has {found} values, context needs {expected}")]
    AssignmentLength { expected: usize, found: usize },

    #[error("assignment value {value} exceeds carrier size {carrier}")]
    AssignmentValue { value: usize, carrier: usize },

    #[error("signature morphism needs one term per source symbol: {expected} symbols, {found} terms")]
    MorphismLength { expected: usize, found: usize },

    #[error("morphism image of {symbol} is invalid: {reason}")]
    MorphismImage { symbol: String, reason: String },

    #[error("parallel morphisms disagree on source signature")]
    ParallelSourceMismatch,

    #[error("equation {label:?} is not preserved by the arrow: {detail}")]
    EquationNotPreserved { label: String, detail: String },

    #[error("equation preservation for {label:?} is inconclusive under the given budget: {detail}")]
    EquationPreservationUnknown { label: String, detail: String },

    #[error("{what} exceeded the cap of {limit}")]
    BudgetExceeded { what: String, limit: usize },

    #[error("truncation depth {given} is below the deepest equation (depth {required})")]
    DepthBelowEquations { required: usize, given: usize },

    #[error("not a rig: equation {label:?} fails under assignment {assignment:?}")]
    NotARig {
        label: String,
        assignment: Vec<usize>,
    },

    #[error("unknown catalog entry {name:?}; available: {available}")]
    UnknownCatalogEntry { name: String, available: String },

    #[error("unknown object {name:?} in quiver")]
    UnknownObject { name: String },

    #[error("edges do not compose: {detail}")]
    PathMismatch { detail: String },

    #[error("functor data does not match quiver: {detail}")]
    FunctorMismatch { detail: String },
}

pub type Result<T> = std::result::Result<T, Error>;
