use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("mixed fields: {0}")]
    MixedField(String),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("arrangement has no hyperplanes")]
    EmptyArrangement,
    #[error("hyperplanes {0} and {1} coincide")]
    DuplicateHyperplane(usize, usize),
    #[error("base point lies on hyperplane {0}")]
    BasePointOnHyperplane(usize),
    #[error("normal {0} is the zero vector")]
    ZeroNormal(usize),
    #[error("{found} hyperplanes exceeds the limit of {limit}")]
    TooManyHyperplanes { found: usize, limit: usize },
    #[error("more than {0} regions")]
    TooManyRegions(usize),

    #[error("arrangement rank {0} is below two")]
    RankTooLow(usize),
    #[error("hyperplane {0} is not a sink of the induced sub-digraph")]
    NotASink(usize),
    #[error("hyperplane {0} is not in the given class")]
    NotInClass(usize),

    #[error("order is not topological: arc {0} -> {1} goes backwards")]
    NotTopologicallySorted(usize, usize),
    #[error("cutting digraph Q is not acyclic")]
    QNotAcyclic,
    #[error("invalid covering: {0}")]
    InvalidCovering(String),
    #[error("search budget exceeded")]
    BudgetExceeded,
    #[error("map is not order preserving on the cover {0} < {1}")]
    NotOrderPreserving(usize, usize),
    #[error("poset has {0} elements, more than the oracle supports")]
    PosetTooLarge(usize),

    #[error("invalid rank parameter: {0}")]
    InvalidRank(String),
    #[error("scaling property violated: {0}")]
    ScalingPropertyViolated(String),
    #[error("root system axiom violated: {0}")]
    RootAxiomViolated(String),
    #[error("group of order {0} is too large to enumerate")]
    GroupTooLarge(usize),

    #[error("basis is singular or does not span the normals")]
    SingularBasis,
    #[error("invalid supersolvable chain: {0}")]
    ChainInvalid(String),
    #[error("verification failed: {0}")]
    VerificationFailed(String),
}

pub type Result<T> = std::result::Result<T, Error>;
