use thiserror::Error;

/// Everything that can go wrong in this crate.
///
/// Variants whose message says "must not occur" signal that a structural
/// claim checked at runtime was falsified; callers should treat them as a
/// failed verification rather than as bad input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("declared degree {declared} is below the actual degree {actual}")]
    InvalidDeclaredDegree { declared: usize, actual: usize },
    #[error("index out of range: {0}")]
    InvalidIndex(String),
    #[error("polynomial division left a nonzero remainder")]
    NotDivisible,
    #[error("linear system is singular")]
    SingularSystem,
    #[error("polynomial of degree {degree} does not fit composition degree {m}")]
    DegreeOverflow { degree: usize, m: usize },
    #[error("polynomial is not in the domain: {0}")]
    NotInDomain(String),
    #[error("polynomial is not monic")]
    NotMonic,
    #[error("internal construction failed (must not occur): {0}")]
    ConstructionBug(String),
    #[error("three-term recurrence produced an inexact division at n = {0}")]
    RecurrenceViolation(usize),
    #[error("exhaustive oracle refuses n = {n} (limit {limit})")]
    OracleTooLarge { n: usize, limit: usize },
    #[error("spectrum check failed: {0}")]
    SpectrumViolation(String),
    #[error("eigenpolynomial structure check failed: {0}")]
    StructureViolation(String),
    #[error("coefficient system is inconsistent: {0}")]
    SigmaInconsistency(String),
    #[error("theorem check failed: {0}")]
    TheoremCheckFailed(String),
    #[error("interval endpoint {0} is a root")]
    EndpointRoot(String),
    #[error("argument outside the domain: {0}")]
    DomainError(String),
    #[error("evaluation at a pole: {0}")]
    PoleError(String),
    #[error("point lies on the branch cut: {0}")]
    BranchError(String),
    #[error("recurrence value vanished exactly at t = {0}")]
    RatioPole(usize),
}

pub type Result<T> = std::result::Result<T, Error>;
