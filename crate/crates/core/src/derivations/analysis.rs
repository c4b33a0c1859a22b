use serde::Serialize;

use super::{satisfies, DerivationClass, SelfMap};
use crate::algebra::{ElementSet, Op, PseudoBciAlgebra};
use crate::error::{Error, Result};

/// Order-theoretic and set-theoretic facts about one self-map.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MapPropertyRecord {
    pub regular: bool,
    pub isotone: bool,
    pub idempotent: bool,
    pub kernel: Vec<String>,
    pub image: Vec<String>,
    pub kernel_is_subalgebra: bool,
    pub kernel_in_bck_part: bool,
    pub image_in_atoms: bool,
    pub maps_bck_into_bck: bool,
    pub maps_atoms_into_atoms: bool,
}

pub(crate) fn kernel(a: &PseudoBciAlgebra, d: &SelfMap) -> ElementSet {
    a.elements().filter(|&x| d.apply(x) == a.unit()).collect()
}

pub(crate) fn image(a: &PseudoBciAlgebra, d: &SelfMap) -> ElementSet {
    a.elements().map(|x| d.apply(x)).collect()
}

pub(crate) fn bck_set(a: &PseudoBciAlgebra) -> ElementSet {
    a.elements().filter(|&x| a.leq(x, a.unit())).collect()
}

pub(crate) fn is_isotone(a: &PseudoBciAlgebra, d: &SelfMap) -> bool {
    a.elements().all(|x| a.elements().all(|y| !a.leq(x, y) || a.leq(d.apply(x), d.apply(y))))
}

pub(crate) fn is_idempotent(d: &SelfMap) -> bool {
    d.images().iter().all(|&y| d.apply(y) == y)
}

pub fn map_properties(a: &PseudoBciAlgebra, d: &SelfMap) -> MapPropertyRecord {
    let ker = kernel(a, d);
    let im = image(a, d);
    let k = bck_set(a);
    let at = a.atom_set();
    let maps_bck_into_bck = k.iter().all(|x| k.contains(d.apply(x)));
    let maps_atoms_into_atoms = at.iter().all(|x| at.contains(d.apply(x)));
    MapPropertyRecord {
        regular: d.apply(a.unit()) == a.unit(),
        isotone: is_isotone(a, d),
        idempotent: is_idempotent(d),
        kernel: a.names_of(&ker),
        image: a.names_of(&im),
        kernel_is_subalgebra: a.is_subalgebra(&ker),
        kernel_in_bck_part: ker.is_subset(&k),
        image_in_atoms: im.is_subset(&at),
        maps_bck_into_bck,
        maps_atoms_into_atoms,
    }
}

/// The map `x -> (x->1)~>1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PhiMap {
    pub map: SelfMap,
    /// Whether it is also an implicative type II derivation.
    pub is_implicative_ii: bool,
}

/// Builds the φ-map. It is always an implicative and a symmetric type I
/// derivation; a failure of either is reported as an internal inconsistency.
pub fn phi_map(a: &PseudoBciAlgebra) -> Result<PhiMap> {
    let map = SelfMap::from_images(a.elements().map(|x| a.phi(x)).collect());
    for cls in [DerivationClass::IMPLICATIVE_I, DerivationClass::SYMMETRIC_I] {
        if !satisfies(a, &map, cls, false)? {
            return Err(Error::InternalInconsistency(format!("phi-map is not {cls}")));
        }
    }
    let is_implicative_ii = satisfies(a, &map, DerivationClass::IMPLICATIVE_II, false)?;
    Ok(PhiMap { map, is_implicative_ii })
}

/// `x -> d1(d2 x)`.
pub fn compose(d1: &SelfMap, d2: &SelfMap) -> SelfMap {
    SelfMap::from_images(d2.images().iter().map(|&y| d1.apply(y)).collect())
}

/// `x -> d1x op d2x`.
pub fn pointwise(a: &PseudoBciAlgebra, op: Op, d1: &SelfMap, d2: &SelfMap) -> SelfMap {
    SelfMap::from_images(a.elements().map(|x| a.apply(op, d1.apply(x), d2.apply(x))).collect())
}

/// Composition structure of a finite list of maps.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MonoidReport {
    /// `[i][j]` is the index of `maps[i] ∘ maps[j]`, or `None` if it is not in the list.
    pub composition_table: Vec<Vec<Option<usize>>>,
    pub closed_under_composition: bool,
    pub commutative: bool,
    pub has_identity: bool,
    pub identity: Option<usize>,
    /// First pair `(i, j)` whose composite falls outside the list.
    pub closure_witness: Option<(usize, usize)>,
    /// First pair `(i, j)` with `maps[i] ∘ maps[j] != maps[j] ∘ maps[i]`.
    pub commutativity_witness: Option<(usize, usize)>,
}

pub fn monoid_report(maps: &[SelfMap]) -> Result<MonoidReport> {
    if maps.is_empty() {
        return Err(Error::InvalidArgument("monoid report needs at least one map".into()));
    }
    for (i, m) in maps.iter().enumerate() {
        if maps[..i].contains(m) {
            return Err(Error::InvalidArgument(format!("map {i} is listed twice")));
        }
    }
    let n = maps.len();
    let mut table = vec![vec![None; n]; n];
    let mut closure_witness = None;
    let mut commutativity_witness = None;
    for i in 0..n {
        for j in 0..n {
            let c = compose(&maps[i], &maps[j]);
            table[i][j] = maps.iter().position(|m| *m == c);
            if table[i][j].is_none() && closure_witness.is_none() {
                closure_witness = Some((i, j));
            }
            if i < j && commutativity_witness.is_none() && c != compose(&maps[j], &maps[i]) {
                commutativity_witness = Some((i, j));
            }
        }
    }
    let identity = maps.iter().position(|m| m.is_identity());
    Ok(MonoidReport {
        composition_table: table,
        closed_under_composition: closure_witness.is_none(),
        commutative: commutativity_witness.is_none(),
        has_identity: identity.is_some(),
        identity,
        closure_witness,
        commutativity_witness,
    })
}

impl SelfMap {
    pub fn kernel(&self, a: &PseudoBciAlgebra) -> ElementSet {
        kernel(a, self)
    }

    pub fn image(&self, a: &PseudoBciAlgebra) -> ElementSet {
        image(a, self)
    }

    /// `d1 <= d2` pointwise.
    pub fn leq(&self, a: &PseudoBciAlgebra, other: &SelfMap) -> bool {
        a.elements().all(|x| a.leq(self.apply(x), other.apply(x)))
    }
}
