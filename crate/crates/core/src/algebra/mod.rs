//! Finite pseudo-BCI algebras given by Cayley tables.
//!
//! An [`AlgebraSpec`] is the raw, symbol-level description read from a file.
//! [`validate`] turns it into a [`PseudoBciAlgebra`]: dense element indices,
//! both operation tables and a precomputed order relation. Everything
//! downstream works on the validated form only.

mod group;
mod structure;
mod validate;

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

pub use group::GroupView;
pub use structure::{Branch, Characterization, ClassificationReport};
pub(crate) use validate::from_tables;
pub use validate::{validate, validate_with, Axiom, ValidateOptions, Violation};

/// An element of a finite algebra, as its index in declaration order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Element(u32);

impl Element {
    pub fn new(index: usize) -> Self {
        Element(index as u32)
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// A set of elements, iterated in declaration order.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ElementSet(BTreeSet<Element>);

impl ElementSet {
    pub fn new() -> Self {
        ElementSet(BTreeSet::new())
    }

    pub fn singleton(e: Element) -> Self {
        ElementSet(BTreeSet::from([e]))
    }

    /// All elements of a universe of size `n`.
    pub fn full(n: usize) -> Self {
        (0..n).map(Element::new).collect()
    }

    /// The set whose members are the set bits of `mask`.
    pub fn from_mask(mask: u64, n: usize) -> Self {
        (0..n).filter(|i| mask >> i & 1 == 1).map(Element::new).collect()
    }

    pub fn insert(&mut self, e: Element) -> bool {
        self.0.insert(e)
    }

    pub fn contains(&self, e: Element) -> bool {
        self.0.contains(&e)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_subset(&self, other: &ElementSet) -> bool {
        self.0.is_subset(&other.0)
    }

    pub fn is_disjoint(&self, other: &ElementSet) -> bool {
        self.0.is_disjoint(&other.0)
    }

    pub fn iter(&self) -> impl Iterator<Item = Element> + '_ {
        self.0.iter().copied()
    }

    pub fn union(&self, other: &ElementSet) -> ElementSet {
        ElementSet(self.0.union(&other.0).copied().collect())
    }
}

impl FromIterator<Element> for ElementSet {
    fn from_iter<I: IntoIterator<Item = Element>>(iter: I) -> Self {
        ElementSet(iter.into_iter().collect())
    }
}

impl<'a> IntoIterator for &'a ElementSet {
    type Item = Element;
    type IntoIter = std::iter::Copied<std::collections::btree_set::Iter<'a, Element>>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter().copied()
    }
}

/// The two binary operations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Op {
    Arrow,
    Squig,
}

impl Op {
    pub const BOTH: [Op; 2] = [Op::Arrow, Op::Squig];

    pub fn other(self) -> Op {
        match self {
            Op::Arrow => Op::Squig,
            Op::Squig => Op::Arrow,
        }
    }
}

impl fmt::Display for Op {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Op::Arrow => "->",
            Op::Squig => "~>",
        })
    }
}

/// Which join-like term: `(x->y)~>y` or `(x~>y)->y`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Cup {
    One,
    Two,
}

/// Symbol-level description of an algebra, before validation.
///
/// `arrow[i][j]` is the symbol for `names[i] -> names[j]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraSpec {
    #[serde(rename = "elements")]
    pub names: Vec<String>,
    pub unit: String,
    pub arrow: Vec<Vec<String>>,
    pub squig: Vec<Vec<String>>,
}

/// A validated finite pseudo-BCI algebra. Immutable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PseudoBciAlgebra {
    names: Vec<String>,
    unit: Element,
    arrow: Vec<Element>,
    squig: Vec<Element>,
    leq: Vec<bool>,
    cross_checks: bool,
}

impl PseudoBciAlgebra {
    pub fn size(&self) -> usize {
        self.names.len()
    }

    pub fn unit(&self) -> Element {
        self.unit
    }

    pub fn elements(&self) -> impl Iterator<Item = Element> + Clone {
        (0..self.size()).map(Element::new)
    }

    pub fn name(&self, e: Element) -> &str {
        &self.names[e.index()]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn element(&self, name: &str) -> Option<Element> {
        self.names.iter().position(|n| n == name).map(Element::new)
    }

    /// Whether the theorem-backed cross-checks run on this algebra.
    pub fn cross_checks(&self) -> bool {
        self.cross_checks
    }

    #[inline]
    pub fn arrow(&self, x: Element, y: Element) -> Element {
        self.arrow[x.index() * self.size() + y.index()]
    }

    #[inline]
    pub fn squig(&self, x: Element, y: Element) -> Element {
        self.squig[x.index() * self.size() + y.index()]
    }

    #[inline]
    pub fn apply(&self, op: Op, x: Element, y: Element) -> Element {
        match op {
            Op::Arrow => self.arrow(x, y),
            Op::Squig => self.squig(x, y),
        }
    }

    /// `x <= y` iff `x -> y = 1`.
    #[inline]
    pub fn leq(&self, x: Element, y: Element) -> bool {
        self.leq[x.index() * self.size() + y.index()]
    }

    /// `x ∪1 y = (x->y)~>y`, `x ∪2 y = (x~>y)->y`.
    #[inline]
    pub fn cup(&self, variant: Cup, x: Element, y: Element) -> Element {
        match variant {
            Cup::One => self.squig(self.arrow(x, y), y),
            Cup::Two => self.arrow(self.squig(x, y), y),
        }
    }

    /// `φ(x) = x ∪1 1 = (x->1)~>1`.
    #[inline]
    pub fn phi(&self, x: Element) -> Element {
        self.cup(Cup::One, x, self.unit)
    }

    /// `x -> 1`, which equals `x ~> 1`.
    #[inline]
    pub fn to_unit(&self, x: Element) -> Element {
        self.arrow(x, self.unit)
    }

    pub fn is_bci(&self) -> bool {
        self.arrow == self.squig
    }

    pub fn is_pseudo_bck(&self) -> bool {
        self.elements().all(|x| self.leq(x, self.unit))
    }

    pub fn names_of(&self, set: &ElementSet) -> Vec<String> {
        set.iter().map(|e| self.name(e).to_owned()).collect()
    }

    /// The symbol-level description of this algebra.
    pub fn to_spec(&self) -> AlgebraSpec {
        let table = |t: &[Element]| {
            self.elements()
                .map(|x| {
                    self.elements()
                        .map(|y| self.names[t[x.index() * self.size() + y.index()].index()].clone())
                        .collect()
                })
                .collect()
        };
        AlgebraSpec {
            names: self.names.clone(),
            unit: self.names[self.unit.index()].clone(),
            arrow: table(&self.arrow),
            squig: table(&self.squig),
        }
    }

    /// Flattened `(arrow, squig)` index tables, arrow first.
    pub fn table_key(&self) -> Vec<u32> {
        self.arrow.iter().chain(&self.squig).map(|e| e.0).collect()
    }

    /// The algebra obtained by restricting both operations to `members`.
    ///
    /// The restriction is re-validated, so callers get a genuine algebra or
    /// an error.
    pub fn restrict(&self, members: &ElementSet) -> crate::Result<PseudoBciAlgebra> {
        if !self.is_subalgebra(members) {
            return Err(crate::Error::InvalidArgument("subset is not a subalgebra".into()));
        }
        let table = |op: Op| {
            members
                .iter()
                .map(|x| members.iter().map(|y| self.name(self.apply(op, x, y)).to_owned()).collect())
                .collect()
        };
        let spec = AlgebraSpec {
            names: self.names_of(members),
            unit: self.name(self.unit).to_owned(),
            arrow: table(Op::Arrow),
            squig: table(Op::Squig),
        };
        validate_with(&spec, &ValidateOptions { cross_checks: self.cross_checks, ..ValidateOptions::default() })
    }
}
