//! Deductive systems, invariance under self-maps, and quotients.

use serde::Serialize;

use crate::algebra::from_tables;
use crate::algebra::{Element, ElementSet, Op, PseudoBciAlgebra};
use crate::derivations::SelfMap;
use crate::error::{CapKind, Error, Result};
use crate::limits::Limits;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DeductiveSystem {
    #[serde(skip)]
    pub members: ElementSet,
    /// `x->y ∈ D` iff `x~>y ∈ D`.
    pub compatible: bool,
    /// Closed under both operations.
    pub closed: bool,
}

impl PseudoBciAlgebra {
    /// Contains 1 and is closed under modus ponens for `op`.
    pub(crate) fn is_ds_for(&self, set: &ElementSet, op: Op) -> bool {
        set.contains(self.unit())
            && set.iter().all(|x| self.elements().all(|y| !set.contains(self.apply(op, x, y)) || set.contains(y)))
    }

    pub fn is_deductive_system(&self, set: &ElementSet) -> bool {
        self.is_ds_for(set, Op::Arrow)
    }

    pub fn is_compatible(&self, set: &ElementSet) -> bool {
        self.elements()
            .all(|x| self.elements().all(|y| set.contains(self.arrow(x, y)) == set.contains(self.squig(x, y))))
    }

    fn describe(&self, members: ElementSet) -> DeductiveSystem {
        DeductiveSystem { compatible: self.is_compatible(&members), closed: self.is_subalgebra(&members), members }
    }

    /// Every deductive system, by brute force over subsets containing 1.
    /// Sorted by size, then by member indices.
    pub fn deductive_systems(&self, limits: &Limits) -> Result<Vec<DeductiveSystem>> {
        let n = self.size();
        limits.check(CapKind::DeductiveSystems, n)?;
        if n > 63 {
            return Err(Error::CapExceeded { what: CapKind::DeductiveSystems, size: n, cap: 63 });
        }
        let unit_bit = 1u64 << self.unit().index();
        let mut found = Vec::new();
        for mask in 0..(1u64 << n) {
            if mask & unit_bit == 0 {
                continue;
            }
            let set = ElementSet::from_mask(mask, n);
            let arrow = self.is_ds_for(&set, Op::Arrow);
            if self.cross_checks() && arrow != self.is_ds_for(&set, Op::Squig) {
                return Err(Error::InternalInconsistency(format!(
                    "{:?} is a deductive system for one arrow only",
                    self.names_of(&set)
                )));
            }
            if arrow {
                found.push(set);
            }
        }
        found.sort_by(|x, y| x.len().cmp(&y.len()).then_with(|| x.cmp(y)));
        Ok(found.into_iter().map(|s| self.describe(s)).collect())
    }

    /// Least deductive system containing `generators`.
    pub fn generated_ds(&self, generators: &ElementSet) -> DeductiveSystem {
        let mut set = generators.clone();
        set.insert(self.unit());
        loop {
            let mut grew = false;
            let snapshot: Vec<Element> = set.iter().collect();
            for &x in &snapshot {
                for y in self.elements() {
                    if !set.contains(y) && set.contains(self.arrow(x, y)) {
                        set.insert(y);
                        grew = true;
                    }
                }
            }
            if !grew {
                break;
            }
        }
        self.describe(set)
    }

    /// `d(D) ⊆ D`.
    pub fn is_invariant(&self, set: &ElementSet, d: &SelfMap) -> bool {
        set.iter().all(|x| set.contains(d.apply(x)))
    }

    /// `A/D` for a closed compatible deductive system `D`, with
    /// `x ~ y` iff `x->y ∈ D` and `y->x ∈ D`.
    ///
    /// Classes are ordered by their first member and named `[x]` after the
    /// lexicographically least member name.
    pub fn quotient(&self, set: &ElementSet) -> Result<PseudoBciAlgebra> {
        if !self.is_deductive_system(set) {
            return Err(Error::InvalidArgument(format!("{:?} is not a deductive system", self.names_of(set))));
        }
        if !self.is_compatible(set) || !self.is_subalgebra(set) {
            return Err(Error::NotCompatibleOrClosed);
        }
        let related = |x: Element, y: Element| set.contains(self.arrow(x, y)) && set.contains(self.arrow(y, x));
        let names = |x: Element, y: Element| format!("({}, {})", self.name(x), self.name(y));
        for x in self.elements() {
            for y in self.elements() {
                if related(x, y) != (set.contains(self.squig(x, y)) && set.contains(self.squig(y, x))) {
                    return Err(Error::CongruenceFailure(format!(
                        "arrow and squig relations differ at {}",
                        names(x, y)
                    )));
                }
                for z in self.elements() {
                    if related(x, y) && related(y, z) && !related(x, z) {
                        return Err(Error::CongruenceFailure(format!(
                            "not transitive at {}, {}",
                            names(x, y),
                            self.name(z)
                        )));
                    }
                }
            }
        }
        let mut class_of = vec![usize::MAX; self.size()];
        let mut reps: Vec<Element> = Vec::new();
        for x in self.elements() {
            if class_of[x.index()] == usize::MAX {
                let id = reps.len();
                reps.push(x);
                for y in self.elements() {
                    if related(x, y) {
                        class_of[y.index()] = id;
                    }
                }
            }
        }
        let k = reps.len();
        let mut tables = [vec![Element::new(0); k * k], vec![Element::new(0); k * k]];
        for (t, op) in Op::BOTH.iter().enumerate() {
            for (i, &x) in reps.iter().enumerate() {
                for (j, &y) in reps.iter().enumerate() {
                    tables[t][i * k + j] = Element::new(class_of[self.apply(*op, x, y).index()]);
                }
            }
            for x in self.elements() {
                for y in self.elements() {
                    let want = class_of[self.apply(*op, x, y).index()];
                    let got = tables[t][class_of[x.index()] * k + class_of[y.index()]].index();
                    if want != got {
                        return Err(Error::CongruenceFailure(format!("{op} is not well defined at {}", names(x, y))));
                    }
                }
            }
        }
        let [arrow, squig] = tables;
        let unit = Element::new(class_of[self.unit().index()]);
        let class_names = (0..k)
            .map(|c| {
                let least = self.elements().filter(|x| class_of[x.index()] == c).map(|x| self.name(x)).min();
                format!("[{}]", least.expect("classes are non-empty"))
            })
            .collect();
        from_tables(class_names, unit, arrow, squig, self.cross_checks())
            .map_err(|e| Error::InternalInconsistency(format!("quotient of a valid algebra failed validation: {e}")))
    }
}

/// A bijection `f` with `f(1) = 1` and `f(x op y) = f(x) op f(y)` for both
/// operations, as target images in source order.
pub fn find_isomorphism(a: &PseudoBciAlgebra, b: &PseudoBciAlgebra) -> Option<Vec<Element>> {
    if a.size() != b.size() {
        return None;
    }
    let n = a.size();
    let mut f: Vec<Option<Element>> = vec![None; n];
    let mut used = vec![false; n];
    f[a.unit().index()] = Some(b.unit());
    used[b.unit().index()] = true;
    fn consistent(a: &PseudoBciAlgebra, b: &PseudoBciAlgebra, f: &[Option<Element>]) -> bool {
        for x in a.elements() {
            let Some(fx) = f[x.index()] else { continue };
            for y in a.elements() {
                let Some(fy) = f[y.index()] else { continue };
                for op in Op::BOTH {
                    if let Some(fz) = f[a.apply(op, x, y).index()] {
                        if fz != b.apply(op, fx, fy) {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }
    fn go(
        a: &PseudoBciAlgebra,
        b: &PseudoBciAlgebra,
        f: &mut Vec<Option<Element>>,
        used: &mut Vec<bool>,
        next: usize,
    ) -> bool {
        if next == f.len() {
            return true;
        }
        if f[next].is_some() {
            return go(a, b, f, used, next + 1);
        }
        for t in b.elements() {
            if used[t.index()] {
                continue;
            }
            f[next] = Some(t);
            used[t.index()] = true;
            if consistent(a, b, f) && go(a, b, f, used, next + 1) {
                return true;
            }
            used[t.index()] = false;
        }
        f[next] = None;
        false
    }
    if go(a, b, &mut f, &mut used, 0) {
        Some(f.into_iter().map(|e| e.expect("total")).collect())
    } else {
        None
    }
}
