//! Derivation operators: self-maps `d` satisfying a pair of identities that
//! rewrite `d(x->y)` and `d(x~>y)` as a join-like combination of one-sided
//! applications of `d`.
//!
//! | class          | `d(x->y)`             | `d(x~>y)`             |
//! |----------------|-----------------------|-----------------------|
//! | implicative I  | `(x->dy) ∪2 (dx->y)`  | `(x~>dy) ∪1 (dx~>y)`  |
//! | implicative II | `(dx->y) ∪2 (x->dy)`  | `(dx~>y) ∪1 (x~>dy)`  |
//! | implicative III| `(x->dy) ∪1 (dx->y)`  | `(x~>dy) ∪2 (dx~>y)`  |
//! | implicative IV | `(dx->y) ∪1 (x->dy)`  | `(dx~>y) ∪2 (x~>dy)`  |
//! | symmetric I    | `(x->dy) ∪2 (y->dx)`  | `(x~>dy) ∪1 (y~>dx)`  |
//! | symmetric II   | `(dx->y) ∪2 (dy->x)`  | `(dx~>y) ∪1 (dy~>x)`  |
//!
//! Implicative types III and IV are only defined on pseudo-BCK algebras.

mod analysis;
mod enumerate;
pub mod theorems;

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::algebra::{Cup, Element, Op, PseudoBciAlgebra};
use crate::error::{Error, Result};

pub use analysis::{
    compose, map_properties, monoid_report, phi_map, pointwise, MapPropertyRecord, MonoidReport, PhiMap,
};
pub(crate) use enumerate::solve;
pub use enumerate::{enumerate, EnumerateOptions, Filter};
pub use theorems::{theorem_suite, Provenance, TheoremEntry, TheoremReport, TheoremStatus};

/// A total map from the universe to itself; entry `i` is the image of element `i`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SelfMap(Vec<Element>);

impl SelfMap {
    /// Checks that there is one in-range image per element of `a`.
    pub fn new(a: &PseudoBciAlgebra, images: Vec<Element>) -> Result<Self> {
        if images.len() != a.size() {
            return Err(Error::InvalidArgument(format!(
                "map has {} images, algebra has {} elements",
                images.len(),
                a.size()
            )));
        }
        if let Some(e) = images.iter().find(|e| e.index() >= a.size()) {
            return Err(Error::InvalidArgument(format!("image index {} out of range", e.index())));
        }
        Ok(SelfMap(images))
    }

    pub(crate) fn from_images(images: Vec<Element>) -> Self {
        SelfMap(images)
    }

    pub fn identity(n: usize) -> Self {
        SelfMap((0..n).map(Element::new).collect())
    }

    pub fn constant(n: usize, e: Element) -> Self {
        SelfMap(vec![e; n])
    }

    #[inline]
    pub fn apply(&self, x: Element) -> Element {
        self.0[x.index()]
    }

    pub fn images(&self) -> &[Element] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, e)| e.index() == i)
    }

    /// Image names in element order, e.g. `d d d 1 d`.
    pub fn display<'a>(&'a self, a: &'a PseudoBciAlgebra) -> impl fmt::Display + 'a {
        struct Show<'a>(&'a SelfMap, &'a PseudoBciAlgebra);
        impl fmt::Display for Show<'_> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                for (i, e) in self.0 .0.iter().enumerate() {
                    if i > 0 {
                        f.write_str(" ")?;
                    }
                    f.write_str(self.1.name(*e))?;
                }
                Ok(())
            }
        }
        Show(self, a)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Implicative,
    Symmetric,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum DerivationType {
    I,
    II,
    III,
    IV,
}

impl fmt::Display for DerivationType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DerivationType::I => "I",
            DerivationType::II => "II",
            DerivationType::III => "III",
            DerivationType::IV => "IV",
        })
    }
}

impl FromStr for DerivationType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "i" | "1" => Ok(DerivationType::I),
            "ii" | "2" => Ok(DerivationType::II),
            "iii" | "3" => Ok(DerivationType::III),
            "iv" | "4" => Ok(DerivationType::IV),
            _ => Err(Error::InvalidArgument(format!("unknown derivation type {s:?}"))),
        }
    }
}

impl FromStr for Kind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "implicative" => Ok(Kind::Implicative),
            "symmetric" => Ok(Kind::Symmetric),
            _ => Err(Error::InvalidArgument(format!("unknown derivation kind {s:?}"))),
        }
    }
}

/// Kind × type. Symmetric derivations come in types I and II only.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DerivationClass {
    kind: Kind,
    dtype: DerivationType,
}

impl DerivationClass {
    pub const IMPLICATIVE_I: Self = DerivationClass { kind: Kind::Implicative, dtype: DerivationType::I };
    pub const IMPLICATIVE_II: Self = DerivationClass { kind: Kind::Implicative, dtype: DerivationType::II };
    pub const IMPLICATIVE_III: Self = DerivationClass { kind: Kind::Implicative, dtype: DerivationType::III };
    pub const IMPLICATIVE_IV: Self = DerivationClass { kind: Kind::Implicative, dtype: DerivationType::IV };
    pub const SYMMETRIC_I: Self = DerivationClass { kind: Kind::Symmetric, dtype: DerivationType::I };
    pub const SYMMETRIC_II: Self = DerivationClass { kind: Kind::Symmetric, dtype: DerivationType::II };

    pub const ALL: [Self; 6] = [
        Self::IMPLICATIVE_I,
        Self::IMPLICATIVE_II,
        Self::IMPLICATIVE_III,
        Self::IMPLICATIVE_IV,
        Self::SYMMETRIC_I,
        Self::SYMMETRIC_II,
    ];

    pub fn new(kind: Kind, dtype: DerivationType) -> Result<Self> {
        if kind == Kind::Symmetric && matches!(dtype, DerivationType::III | DerivationType::IV) {
            return Err(Error::InvalidArgument(format!("symmetric derivations have no type {dtype}")));
        }
        Ok(DerivationClass { kind, dtype })
    }

    pub fn kind(self) -> Kind {
        self.kind
    }

    pub fn dtype(self) -> DerivationType {
        self.dtype
    }

    pub fn requires_pseudo_bck(self) -> bool {
        matches!(self.dtype, DerivationType::III | DerivationType::IV)
    }

    pub(crate) fn laws(self) -> [Law; 2] {
        use Term::*;
        let (arrow_cup, squig_cup, first, second) = match (self.kind, self.dtype) {
            (Kind::Implicative, DerivationType::I) => (Cup::Two, Cup::One, XDy, DxY),
            (Kind::Implicative, DerivationType::II) => (Cup::Two, Cup::One, DxY, XDy),
            (Kind::Implicative, DerivationType::III) => (Cup::One, Cup::Two, XDy, DxY),
            (Kind::Implicative, DerivationType::IV) => (Cup::One, Cup::Two, DxY, XDy),
            (Kind::Symmetric, DerivationType::I) => (Cup::Two, Cup::One, XDy, YDx),
            (Kind::Symmetric, _) => (Cup::Two, Cup::One, DxY, DyX),
        };
        [
            Law { op: Op::Arrow, rhs: Rhs::Cup(arrow_cup, first, second) },
            Law { op: Op::Squig, rhs: Rhs::Cup(squig_cup, first, second) },
        ]
    }
}

impl fmt::Display for DerivationClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = match self.kind {
            Kind::Implicative => "implicative",
            Kind::Symmetric => "symmetric",
        };
        write!(f, "{kind}-{}", self.dtype)
    }
}

impl Serialize for DerivationClass {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// A one-sided application of `d` inside an identity: `x op dy`, `dx op y`,
/// `y op dx` or `dy op x`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Term {
    XDy,
    DxY,
    YDx,
    DyX,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Rhs {
    Cup(Cup, Term, Term),
    Term(Term),
}

/// The identity `d(x op y) = rhs`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct Law {
    pub op: Op,
    pub rhs: Rhs,
}

impl Law {
    /// `d(x op y) = x op dy`.
    pub const fn right_linear(op: Op) -> Law {
        Law { op, rhs: Rhs::Term(Term::XDy) }
    }

    /// `d(x op y) = dx op y`.
    pub const fn left_linear(op: Op) -> Law {
        Law { op, rhs: Rhs::Term(Term::DxY) }
    }

    #[inline]
    fn term(&self, a: &PseudoBciAlgebra, d: &[Element], t: Term, x: Element, y: Element) -> Element {
        match t {
            Term::XDy => a.apply(self.op, x, d[y.index()]),
            Term::DxY => a.apply(self.op, d[x.index()], y),
            Term::YDx => a.apply(self.op, y, d[x.index()]),
            Term::DyX => a.apply(self.op, d[y.index()], x),
        }
    }

    /// Evaluates the identity at `(x, y)`. Reads `d` at `x`, `y` and `x op y` only.
    #[inline]
    pub fn holds(&self, a: &PseudoBciAlgebra, d: &[Element], x: Element, y: Element) -> bool {
        let lhs = d[a.apply(self.op, x, y).index()];
        let rhs = match self.rhs {
            Rhs::Cup(c, s, t) => a.cup(c, self.term(a, d, s, x, y), self.term(a, d, t, x, y)),
            Rhs::Term(t) => self.term(a, d, t, x, y),
        };
        lhs == rhs
    }

    pub fn holds_everywhere(&self, a: &PseudoBciAlgebra, d: &[Element]) -> bool {
        a.elements().all(|x| a.elements().all(|y| self.holds(a, d, x, y)))
    }
}

fn admit(a: &PseudoBciAlgebra, cls: DerivationClass, force: bool) -> Result<()> {
    if cls.requires_pseudo_bck() && !force && !a.is_pseudo_bck() {
        return Err(Error::TypeRequiresPseudoBck(cls.to_string()));
    }
    Ok(())
}

/// True iff both defining identities of `cls` hold for every ordered pair.
///
/// Types III and IV are rejected on algebras that are not pseudo-BCK unless
/// `force` is set.
pub fn satisfies(a: &PseudoBciAlgebra, d: &SelfMap, cls: DerivationClass, force: bool) -> Result<bool> {
    admit(a, cls, force)?;
    if d.len() != a.size() {
        return Err(Error::InvalidArgument("map and algebra sizes differ".into()));
    }
    Ok(cls.laws().iter().all(|law| law.holds_everywhere(a, d.images())))
}

#[cfg(test)]
pub(crate) mod testing {
    use super::*;

    pub fn map(a: &PseudoBciAlgebra, images: &str) -> SelfMap {
        SelfMap::new(a, images.split_whitespace().map(|n| a.element(n).unwrap()).collect()).unwrap()
    }
}
