//! Finite pseudo-BCI algebras: validation, structure, implicative and
//! symmetric derivations, deductive systems, quotients and model search.
//!
//! ```
//! use pbci::{io, validate, DerivationClass, EnumerateOptions, Filter};
//!
//! let text = "pbci 1\nelements: a 1\nunit: 1\narrow:\n1 1\na 1\nsquig: same\n";
//! let a = validate(&io::parse_algebra(text).unwrap()).unwrap();
//! let maps = pbci::enumerate(&a, DerivationClass::IMPLICATIVE_I, Filter::All, &EnumerateOptions::default()).unwrap();
//! assert!(maps.iter().any(|d| d.is_identity()));
//! ```

pub mod algebra;
pub mod deductive;
pub mod derivations;
pub mod error;
pub mod io;
pub mod limits;
pub mod search;

pub use algebra::{validate, validate_with, AlgebraSpec, Element, ElementSet, Op, PseudoBciAlgebra, ValidateOptions};
pub use deductive::{find_isomorphism, DeductiveSystem};
pub use derivations::{enumerate, theorem_suite, DerivationClass, EnumerateOptions, Filter, SelfMap};
pub use error::{CapKind, Error, Result};
pub use limits::Limits;
pub use search::{search, SearchQuery};
