//! Atoms, the pseudo-BCK part, branches and classification.

use serde::Serialize;

use super::group::GroupView;
use super::{Cup, Element, ElementSet, Op, PseudoBciAlgebra};
use crate::error::{Error, Result};

/// `V(a) = {x | x <= a}` for an atom `a`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Branch {
    pub atom: Element,
    pub members: ElementSet,
}

/// One equivalent characterization of a property, and whether it held.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Characterization {
    pub id: &'static str,
    pub statement: &'static str,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassificationReport {
    pub is_bci: bool,
    pub is_pseudo_bck: bool,
    pub is_proper: bool,
    pub is_p_semisimple: bool,
    /// Each alternative characterization of p-semisimplicity. All agree with
    /// `is_p_semisimple` on a correct implementation.
    pub p_semisimple_crosscheck: Vec<Characterization>,
    pub is_commutative: bool,
    pub is_branchwise_commutative: bool,
    pub is_medial_arrow: bool,
    pub is_medial_squig: bool,
}

impl PseudoBciAlgebra {
    /// `At(A) = {x | (x->1)->1 = x}`.
    pub(crate) fn atom_set(&self) -> ElementSet {
        self.elements().filter(|&x| self.to_unit(self.to_unit(x)) == x).collect()
    }

    /// The atoms, cross-checked against the alternative characterizations
    /// when cross-checks are on.
    pub fn atoms(&self) -> Result<ElementSet> {
        let atoms = self.atom_set();
        if self.cross_checks {
            for x in self.elements() {
                let expected = atoms.contains(x);
                for (id, holds) in self.atom_characterizations(x) {
                    if holds != expected {
                        return Err(Error::InternalInconsistency(format!(
                            "atom characterization {id} gives {holds} for {}",
                            self.name(x)
                        )));
                    }
                }
            }
        }
        Ok(atoms)
    }

    fn atom_characterizations(&self, a: Element) -> Vec<(&'static str, bool)> {
        let one = self.unit;
        let all = |f: &dyn Fn(Element) -> bool| self.elements().all(f);
        let all2 = |f: &dyn Fn(Element, Element) -> bool| self.elements().all(|x| self.elements().all(|y| f(x, y)));
        vec![
            ("minimal", all(&|x| !self.leq(a, x) || x == a)),
            ("cup-fixed", all(&|x| self.cup(Cup::One, a, x) == a && self.cup(Cup::Two, a, x) == a)),
            ("arrow-reversal", all(&|x| self.arrow(x, a) == self.squig(self.arrow(a, x), one))),
            ("squig-reversal", all(&|x| self.squig(x, a) == self.arrow(self.squig(a, x), one))),
            ("arrow-exchange", all2(&|x, y| self.arrow(x, a) == self.squig(self.arrow(a, y), self.arrow(x, y)))),
            ("squig-exchange", all2(&|x, y| self.squig(x, a) == self.arrow(self.squig(a, y), self.squig(x, y)))),
            (
                "arrow-cup",
                all2(&|x, y| {
                    let xa = self.arrow(x, a);
                    xa == self.arrow(self.squig(xa, y), y)
                }),
            ),
            (
                "squig-cup",
                all2(&|x, y| {
                    let xa = self.squig(x, a);
                    xa == self.squig(self.arrow(xa, y), y)
                }),
            ),
            ("arrow-via-unit", all(&|x| self.arrow(x, a) == self.squig(self.to_unit(a), self.to_unit(x)))),
            ("squig-via-unit", all(&|x| self.squig(x, a) == self.arrow(self.squig(a, one), self.squig(x, one)))),
            ("double-unit", self.squig(self.to_unit(a), one) == a && self.arrow(self.squig(a, one), one) == a),
        ]
    }

    /// `K(A) = {x | x <= 1}`, checked to be closed under both operations.
    pub fn bck_part(&self) -> Result<ElementSet> {
        let k: ElementSet = self.elements().filter(|&x| self.leq(x, self.unit)).collect();
        if !self.is_subalgebra(&k) {
            return Err(Error::InternalInconsistency("pseudo-BCK part is not a subalgebra".into()));
        }
        Ok(k)
    }

    /// True iff `1` is in `set` and `set` is closed under `->` and `~>`.
    pub fn is_subalgebra(&self, set: &ElementSet) -> bool {
        set.contains(self.unit)
            && set.iter().all(|x| set.iter().all(|y| set.contains(self.arrow(x, y)) && set.contains(self.squig(x, y))))
    }

    /// One branch per atom, in atom order. Verified to partition the universe.
    pub fn branches(&self) -> Result<Vec<Branch>> {
        let branches: Vec<Branch> = self
            .atom_set()
            .iter()
            .map(|atom| Branch { atom, members: self.elements().filter(|&x| self.leq(x, atom)).collect() })
            .collect();
        let bad = |msg: &str| Err(Error::InternalInconsistency(format!("branches: {msg}")));
        for (i, b) in branches.iter().enumerate() {
            if branches[i + 1..].iter().any(|c| !b.members.is_disjoint(&c.members)) {
                return bad("two branches overlap");
            }
        }
        if branches.iter().map(|b| b.members.len()).sum::<usize>() != self.size() {
            return bad("branches do not cover the universe");
        }
        if self.cross_checks {
            let owner = self.branch_owners(&branches);
            let v1 = &branches.iter().find(|b| b.atom == self.unit).expect("1 is an atom").members;
            for x in self.elements() {
                for y in self.elements() {
                    let same = owner[x.index()] == owner[y.index()];
                    if self.leq(x, y) && !same {
                        return bad("comparable elements in different branches");
                    }
                    if same != v1.contains(self.arrow(x, y)) || same != v1.contains(self.squig(x, y)) {
                        return bad("same-branch test via x->y in V(1) disagrees");
                    }
                }
            }
        }
        Ok(branches)
    }

    /// For each element, the index of its branch in `branches`.
    pub(crate) fn branch_owners(&self, branches: &[Branch]) -> Vec<usize> {
        let mut owner = vec![usize::MAX; self.size()];
        for (i, b) in branches.iter().enumerate() {
            for x in &b.members {
                owner[x.index()] = i;
            }
        }
        owner
    }

    pub fn is_p_semisimple(&self) -> bool {
        self.elements().all(|x| x == self.unit || !self.leq(x, self.unit))
    }

    /// `y <= x` implies `x ∪1 y = x ∪2 y = x`.
    pub fn is_commutative(&self) -> bool {
        self.elements().all(|x| {
            self.elements().all(|y| !self.leq(y, x) || (self.cup(Cup::One, x, y) == x && self.cup(Cup::Two, x, y) == x))
        })
    }

    fn is_medial(&self, outer: Op) -> bool {
        let inner = outer.other();
        let els: Vec<_> = self.elements().collect();
        els.iter().all(|&u| {
            els.iter().all(|&v| {
                els.iter().all(|&x| {
                    els.iter().all(|&y| {
                        self.apply(outer, self.apply(inner, u, v), self.apply(inner, x, y))
                            == self.apply(outer, self.apply(inner, u, x), self.apply(inner, v, y))
                    })
                })
            })
        })
    }

    /// `(u~>v)->(x~>y) = (u~>x)->(v~>y)`.
    pub fn is_medial_arrow(&self) -> bool {
        self.is_medial(Op::Arrow)
    }

    /// `(u->v)~>(x->y) = (u->x)~>(v->y)`.
    pub fn is_medial_squig(&self) -> bool {
        self.is_medial(Op::Squig)
    }

    fn p_semisimple_characterizations(&self) -> Vec<Characterization> {
        let one = self.unit;
        let all = |f: &dyn Fn(Element) -> bool| self.elements().all(f);
        let all2 = |f: &dyn Fn(Element, Element) -> bool| self.elements().all(|x| self.elements().all(|y| f(x, y)));
        let c = |id, statement, holds| Characterization { id, statement, holds };
        vec![
            c("trivial-bck-part", "x <= 1 implies x = 1", all(&|x| x == one || !self.leq(x, one))),
            c("order-discrete", "x <= y implies x = y", all2(&|x, y| !self.leq(x, y) || x == y)),
            c(
                "cup-left-projection",
                "(x->y)~>y = (x~>y)->y = x",
                all2(&|x, y| self.cup(Cup::One, x, y) == x && self.cup(Cup::Two, x, y) == x),
            ),
            c(
                "double-unit",
                "(x->1)~>1 = (x~>1)->1 = x",
                all(&|x| self.phi(x) == x && self.cup(Cup::Two, x, one) == x),
            ),
            c(
                "product-symmetry",
                "(x->1)~>y = (y~>1)->x",
                all2(&|x, y| self.squig(self.to_unit(x), y) == self.arrow(self.squig(y, one), x)),
            ),
            c(
                "arrow-cancellation",
                "x->a = y->a implies x = y",
                all2(&|x, y| x == y || all(&|t| self.arrow(x, t) != self.arrow(y, t))),
            ),
            c(
                "squig-cancellation",
                "x~>a = y~>a implies x = y",
                all2(&|x, y| x == y || all(&|t| self.squig(x, t) != self.squig(y, t))),
            ),
            c("all-atoms", "At(A) = A", self.atom_set().len() == self.size()),
            c(
                "group",
                "(A, (x->1)~>y, x->1, 1) is a group with x->y = y·x⁻¹ and x~>y = x⁻¹·y",
                GroupView::build(self).law_failure(self).is_none(),
            ),
        ]
    }

    pub fn classify(&self) -> Result<ClassificationReport> {
        let is_bci = self.is_bci();
        let is_pseudo_bck = self.is_pseudo_bck();
        let is_p_semisimple = self.is_p_semisimple();
        let crosscheck = self.p_semisimple_characterizations();
        let is_commutative = self.is_commutative();
        let branches = self.branches()?;
        let owner = self.branch_owners(&branches);
        let is_branchwise_commutative = self.elements().all(|x| {
            self.elements().filter(|y| owner[y.index()] == owner[x.index()]).all(|y| {
                self.cup(Cup::One, x, y) == self.cup(Cup::One, y, x)
                    && self.cup(Cup::Two, x, y) == self.cup(Cup::Two, y, x)
            })
        });
        let report = ClassificationReport {
            is_bci,
            is_pseudo_bck,
            is_proper: !is_bci && !is_pseudo_bck,
            is_p_semisimple,
            p_semisimple_crosscheck: crosscheck,
            is_commutative,
            is_branchwise_commutative,
            is_medial_arrow: self.is_medial_arrow(),
            is_medial_squig: self.is_medial_squig(),
        };
        if self.cross_checks {
            if let Some(c) = report.p_semisimple_crosscheck.iter().find(|c| c.holds != is_p_semisimple) {
                return Err(Error::InternalInconsistency(format!(
                    "p-semisimple characterization {} gives {} but K(A) = {{1}} gives {}",
                    c.id, c.holds, is_p_semisimple
                )));
            }
            if is_commutative != is_branchwise_commutative {
                return Err(Error::InternalInconsistency(format!(
                    "commutative ({is_commutative}) disagrees with branchwise commutative ({is_branchwise_commutative})"
                )));
            }
            if is_p_semisimple && !is_commutative {
                return Err(Error::InternalInconsistency("p-semisimple algebra is not commutative".into()));
            }
        }
        Ok(report)
    }
}

#[cfg(test)]
mod tests {
    use super::super::testing::*;
    use super::*;

    #[test]
    fn atoms_of_fixtures() {
        let a = fixture("proper5");
        assert_eq!(a.atoms().unwrap(), set(&a, "d 1"));
        let g = fixture("group6");
        assert_eq!(g.atoms().unwrap(), ElementSet::full(6));
        let t = trivial();
        assert_eq!(t.atoms().unwrap(), ElementSet::singleton(t.unit()));
    }

    #[test]
    fn bck_parts() {
        let a = fixture("proper5");
        assert_eq!(a.bck_part().unwrap(), set(&a, "a b c 1"));
        let g = fixture("group6");
        assert_eq!(g.bck_part().unwrap(), ElementSet::singleton(g.unit()));
        let b = fixture("bck5");
        assert_eq!(b.bck_part().unwrap(), ElementSet::full(5));
    }

    #[test]
    fn branches_of_fixtures() {
        let a = fixture("proper5");
        let bs = a.branches().unwrap();
        assert_eq!(bs.len(), 2);
        assert_eq!((bs[0].atom, &bs[0].members), (el(&a, "d"), &set(&a, "d")));
        assert_eq!((bs[1].atom, &bs[1].members), (el(&a, "1"), &set(&a, "a b c 1")));

        let g = fixture("group6");
        let bs = g.branches().unwrap();
        assert_eq!(bs.len(), 6);
        assert!(bs.iter().all(|b| b.members == ElementSet::singleton(b.atom)));

        let t = trivial();
        assert_eq!(t.branches().unwrap().len(), 1);
    }

    #[test]
    fn classification() {
        let g = fixture("group6").classify().unwrap();
        assert!(g.is_p_semisimple && !g.is_bci && !g.is_pseudo_bck && g.is_proper);
        assert_eq!(g.p_semisimple_crosscheck.len(), 9);
        assert!(g.p_semisimple_crosscheck.iter().all(|c| c.holds));

        let a = fixture("proper5").classify().unwrap();
        assert!(!a.is_p_semisimple && !a.is_commutative && a.is_proper);
        assert!(a.p_semisimple_crosscheck.iter().all(|c| !c.holds));

        let b = fixture("bck5").classify().unwrap();
        assert!(b.is_pseudo_bck && !b.is_proper);

        let c = fixture("cyclic3").classify().unwrap();
        assert!(c.is_bci && c.is_p_semisimple && c.is_medial_arrow && c.is_medial_squig);
    }

    #[test]
    fn subalgebras() {
        let a = fixture("proper5");
        assert!(a.is_subalgebra(&set(&a, "d 1")));
        assert!(a.is_subalgebra(&set(&a, "1")));
        assert!(a.is_subalgebra(&set(&a, "c 1")));
        assert!(!a.is_subalgebra(&set(&a, "a b 1")));
        assert!(!a.is_subalgebra(&set(&a, "a b")));
    }
}
