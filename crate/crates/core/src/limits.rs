//! Size caps for the exponential workloads.

use crate::error::{CapKind, Error, Result};

pub const ENV_MAX_SIZE: &str = "PBCI_MAX_SIZE";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest universe accepted by the validator.
    pub universe: usize,
    /// Largest universe for derivation enumeration (n^n candidate maps).
    pub derivations: usize,
    /// Largest universe for brute-force deductive-system enumeration (2^n subsets).
    pub deductive_systems: usize,
    /// Largest universe for model search.
    pub search: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { universe: 64, derivations: 10, deductive_systems: 16, search: 6 }
    }
}

impl Limits {
    /// Every cap set to the same value.
    pub fn uniform(size: usize) -> Self {
        Limits { universe: size, derivations: size, deductive_systems: size, search: size }
    }

    /// Defaults, with every enumeration cap set from `PBCI_MAX_SIZE` when it
    /// is set. The universe cap only ever grows.
    pub fn from_env() -> Result<Self> {
        match std::env::var(ENV_MAX_SIZE) {
            Ok(v) => v
                .trim()
                .parse::<usize>()
                .ok()
                .filter(|&n| n > 0)
                .map(Limits::enumeration)
                .ok_or_else(|| Error::InvalidArgument(format!("{ENV_MAX_SIZE}={v:?} is not a positive integer"))),
            Err(_) => Ok(Limits::default()),
        }
    }

    /// Derivation, deductive-system and search caps set to `size`.
    pub fn enumeration(size: usize) -> Self {
        let universe = Limits::default().universe.max(size);
        Limits { universe, derivations: size, deductive_systems: size, search: size }
    }

    pub fn check(&self, what: CapKind, size: usize) -> Result<()> {
        let cap = match what {
            CapKind::Universe => self.universe,
            CapKind::Derivations => self.derivations,
            CapKind::DeductiveSystems => self.deductive_systems,
            CapKind::Search => self.search,
        };
        if size > cap {
            Err(Error::CapExceeded { what, size, cap })
        } else {
            Ok(())
        }
    }
}
