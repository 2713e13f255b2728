use thiserror::Error;

/// Everything that can go wrong while building or analysing an algebra.
///
/// Element witnesses are carrier indices; callers holding the algebra can
/// render them through its labels.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("order relation is not square ({rows} rows, row {row} has {len} entries)")]
    NotSquare { rows: usize, row: usize, len: usize },
    #[error("order is not reflexive at {0}")]
    NotReflexive(usize),
    #[error("order is not antisymmetric at ({0}, {1})")]
    NotAntisymmetric(usize, usize),
    #[error("order is not transitive at ({0}, {1}, {2})")]
    NotTransitive(usize, usize, usize),

    #[error("carrier of {0} elements exceeds the supported maximum of 64")]
    CarrierTooLarge(usize),
    #[error("carrier must not be empty")]
    EmptyCarrier,
    #[error("table `{table}` has {len} entries, expected {expected}")]
    TableShape { table: &'static str, len: usize, expected: usize },
    #[error("table `{table}` holds out-of-range value {value}")]
    TableValue { table: &'static str, value: usize },
    #[error("element index {0} out of range")]
    ElementOutOfRange(usize),
    #[error("duplicate element label `{0}`")]
    DuplicateLabel(String),
    #[error("unknown element label `{0}`")]
    UnknownLabel(String),
    #[error("algebra has no `{0}` table")]
    MissingTable(&'static str),
    #[error("two unit elements {0} and {1}")]
    MultipleUnits(usize, usize),
    #[error("declared unit {declared:?} disagrees with the tables (inferred {inferred:?})")]
    UnitMismatch { declared: usize, inferred: Option<usize> },
    #[error("declared bottom {declared} is not the least element (inferred {inferred:?})")]
    BottomMismatch { declared: usize, inferred: Option<usize> },
    #[error("algebra has no unit element")]
    NotUnital,
    #[error("join of {0} and {1} does not exist")]
    JoinMissing(usize, usize),
    #[error("meet of {0} and {1} does not exist")]
    MeetMissing(usize, usize),

    #[error("set {0:#x} is not an upper set")]
    NotUpperSet(u64),
    #[error("enumeration would exceed the cap of {cap} items")]
    CapExceeded { cap: usize },
    #[error(
        "search emitted more than {cap} algebras ({emitted} kept after {orders_done} of {orders_total} orders)"
    )]
    SearchCapExceeded { cap: usize, emitted: usize, orders_done: usize, orders_total: usize },
    #[error("expected a filter, got {0:#x}")]
    NotAFilter(u64),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("algebra is not a pseudo-hoop")]
    NotAHoop,
    #[error("decomposition failed: {0}")]
    DecompositionFailed(String),
    #[error("theorem violated: {0}")]
    TheoremViolated(String),

    #[error("unknown catalog entry `{0}`")]
    UnknownName(String),
    #[error("catalog entry `{name}` failed validation: {reason}")]
    ValidationFailed { name: String, reason: String },
    #[error("bad predicate: {0}")]
    Predicate(String),
    #[error("bad algebra file: {0}")]
    Format(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
