use std::fmt;

use thiserror::Error;

use crate::algebra::Violation;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed algebra: {0}")]
    Structural(String),
    #[error("{} axiom violation(s); first: {}", .0.len(), .0[0])]
    AxiomViolations(Vec<Violation>),
    /// A checked theorem disagreed with a computed value. Only an
    /// implementation bug can produce this on a validated algebra.
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
    #[error("algebra is not p-semisimple")]
    NotPSemisimple,
    #[error("derivation type {0} is only defined on pseudo-BCK algebras (use force to override)")]
    TypeRequiresPseudoBck(String),
    #[error("{what}: universe size {size} exceeds cap {cap} (raise PBCI_MAX_SIZE)")]
    CapExceeded { what: CapKind, size: usize, cap: usize },
    #[error("deductive system must be both compatible and closed to form a quotient")]
    NotCompatibleOrClosed,
    #[error("relation induced by the deductive system is not a congruence: {0}")]
    CongruenceFailure(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CapKind {
    Universe,
    Derivations,
    DeductiveSystems,
    Search,
}

impl fmt::Display for CapKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CapKind::Universe => "universe",
            CapKind::Derivations => "derivation enumeration",
            CapKind::DeductiveSystems => "deductive-system enumeration",
            CapKind::Search => "model search",
        })
    }
}
