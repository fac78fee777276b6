use thiserror::Error;

/// Validation and precondition failures.
///
/// Indices always refer to the carrier (points, or frame elements) of the
/// structure being validated. Callers holding external names translate them.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("size mismatch: expected {expected}, found {found}")]
    SizeMismatch { expected: usize, found: usize },

    #[error("index {index} out of range for carrier of size {size}")]
    IndexOutOfRange { index: usize, size: usize },

    #[error("relation is not reflexive at {x}")]
    NotReflexive { x: usize },

    #[error("relation is not transitive: {x} <= {y} <= {z} but not {x} <= {z}")]
    NotTransitive { x: usize, y: usize, z: usize },

    #[error("order is not antisymmetric: {x} and {y} are distinct but equivalent")]
    NotAntisymmetric { x: usize, y: usize },

    #[error("lattice is empty")]
    EmptyLattice,

    #[error("elements {a} and {b} have no meet")]
    MissingMeet { a: usize, b: usize },

    #[error("elements {a} and {b} have no join")]
    MissingJoin { a: usize, b: usize },

    #[error("distributivity fails: {a} meet ({b} join {c}) differs from ({a} meet {b}) join ({a} meet {c})")]
    NotDistributive { a: usize, b: usize, c: usize },

    #[error("topology: empty set absent")]
    EmptyOpenMissing,

    #[error("topology: full carrier absent")]
    FullOpenMissing,

    #[error("topology: union of opens #{a} and #{b} is not open")]
    NotClosedUnderUnion { a: usize, b: usize },

    #[error("topology: intersection of opens #{a} and #{b} is not open")]
    NotClosedUnderIntersection { a: usize, b: usize },

    #[error("not a frame homomorphism: {clause}")]
    NotFrameHom { clause: HomClause },

    #[error("axiom (V) fails: {u} ⊴ {v} and {u2} ⊴ {v2} but their joins are unrelated")]
    AxiomV {
        u: usize,
        v: usize,
        u2: usize,
        v2: usize,
    },

    #[error("nucleus law fails: {law} at {a}")]
    NucleusLaw { law: &'static str, a: usize, b: usize },

    #[error("map is not continuous: preimage of open #{open} is not open")]
    NotContinuous { open: usize },

    #[error("map is not monotone: {x} <= {y} but images are unrelated")]
    NotMonotone { x: usize, y: usize },

    #[error("locale map is not {0} monotone")]
    LocaleMapNotMonotone(&'static str),

    #[error("precondition unmet: {0}")]
    Precondition(String),
}

/// Which preservation clause a candidate frame homomorphism violates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HomClause {
    Bottom,
    Top,
    Meet { a: usize, b: usize },
    Join { a: usize, b: usize },
    Range { a: usize },
}

impl std::fmt::Display for HomClause {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            HomClause::Bottom => write!(f, "bottom not preserved"),
            HomClause::Top => write!(f, "top not preserved"),
            HomClause::Meet { a, b } => write!(f, "meet of {a} and {b} not preserved"),
            HomClause::Join { a, b } => write!(f, "join of {a} and {b} not preserved"),
            HomClause::Range { a } => write!(f, "image of {a} out of range"),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
