use rayon::prelude::*;

use super::{admit, DerivationClass, Law, SelfMap};
use crate::algebra::{Element, PseudoBciAlgebra};
use crate::error::{CapKind, Result};
use crate::limits::Limits;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Filter {
    All,
    /// Only maps with `d1 = 1`.
    Regular,
}

#[derive(Debug, Clone, Copy, Default)]
pub struct EnumerateOptions {
    /// Allow types III and IV on algebras that are not pseudo-BCK.
    pub force: bool,
    pub limits: Limits,
}

/// Every map in `cls`, sorted lexicographically by image indices.
pub fn enumerate(
    a: &PseudoBciAlgebra,
    cls: DerivationClass,
    filter: Filter,
    opts: &EnumerateOptions,
) -> Result<Vec<SelfMap>> {
    admit(a, cls, opts.force)?;
    opts.limits.check(CapKind::Derivations, a.size())?;
    Ok(solve(a, &cls.laws(), filter == Filter::Regular))
}

/// Backtracking search for all maps satisfying every law at every pair.
///
/// Images are assigned in element order. An instance `(law, x, y)` reads `d`
/// at `x`, `y` and `x op y` only, so it is checked as soon as the largest of
/// those three indices has been assigned.
pub(crate) fn solve(a: &PseudoBciAlgebra, laws: &[Law], regular: bool) -> Vec<SelfMap> {
    let n = a.size();
    let mut buckets: Vec<Vec<(usize, Element, Element)>> = vec![Vec::new(); n];
    for (li, law) in laws.iter().enumerate() {
        for x in a.elements() {
            for y in a.elements() {
                let z = a.apply(law.op, x, y);
                let level = x.index().max(y.index()).max(z.index());
                buckets[level].push((li, x, y));
            }
        }
    }
    let unit = a.unit().index();
    let domain = |k: usize| -> Vec<usize> {
        if regular && k == unit {
            vec![unit]
        } else {
            (0..n).collect()
        }
    };
    let search = Search { a, laws, buckets: &buckets, domain: &domain, n };

    let mut out: Vec<SelfMap> = domain(0)
        .into_par_iter()
        .flat_map_iter(|v| {
            let mut d = vec![Element::new(0); n];
            let mut found = Vec::new();
            d[0] = Element::new(v);
            if search.consistent(&d, 0) {
                search.extend(&mut d, 1, &mut found);
            }
            found
        })
        .collect();
    out.sort();
    out
}

struct Search<'a, F> {
    a: &'a PseudoBciAlgebra,
    laws: &'a [Law],
    buckets: &'a [Vec<(usize, Element, Element)>],
    domain: &'a F,
    n: usize,
}

impl<F: Fn(usize) -> Vec<usize>> Search<'_, F> {
    fn consistent(&self, d: &[Element], level: usize) -> bool {
        self.buckets[level].iter().all(|&(li, x, y)| self.laws[li].holds(self.a, d, x, y))
    }

    fn extend(&self, d: &mut Vec<Element>, level: usize, found: &mut Vec<SelfMap>) {
        if level == self.n {
            found.push(SelfMap::from_images(d.clone()));
            return;
        }
        for v in (self.domain)(level) {
            d[level] = Element::new(v);
            if self.consistent(d, level) {
                self.extend(d, level + 1, found);
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::testing::{fixture, trivial};
    use crate::derivations::testing::map;
    use crate::error::Error;

    fn names(a: &PseudoBciAlgebra, maps: &[SelfMap]) -> Vec<String> {
        maps.iter().map(|m| m.display(a).to_string()).collect()
    }

    #[test]
    fn proper5_classes() {
        let a = fixture("proper5");
        let o = EnumerateOptions::default();
        let all = |c| names(&a, &enumerate(&a, c, Filter::All, &o).unwrap());
        let d = ["a b c d 1", "d d d 1 d", "1 1 1 d 1"];
        assert_eq!(all(DerivationClass::IMPLICATIVE_I), d);
        assert_eq!(all(DerivationClass::IMPLICATIVE_II), d);
        assert_eq!(all(DerivationClass::SYMMETRIC_I), [d[1], d[2]]);
        assert_eq!(all(DerivationClass::SYMMETRIC_II), [d[1]]);
        let reg = names(&a, &enumerate(&a, DerivationClass::IMPLICATIVE_II, Filter::Regular, &o).unwrap());
        assert_eq!(reg, [d[0], d[2]]);
    }

    #[test]
    fn found_maps_satisfy_laws() {
        let a = fixture("bck5");
        for cls in DerivationClass::ALL {
            for m in enumerate(&a, cls, Filter::All, &EnumerateOptions::default()).unwrap() {
                assert!(crate::derivations::satisfies(&a, &m, cls, false).unwrap());
            }
        }
    }

    #[test]
    fn trivial_algebra_has_identity_only() {
        let a = trivial();
        let got = enumerate(&a, DerivationClass::SYMMETRIC_II, Filter::All, &EnumerateOptions::default()).unwrap();
        assert_eq!(got, vec![map(&a, "1")]);
    }

    #[test]
    fn cap_and_type_gate() {
        let a = fixture("proper5");
        let o = EnumerateOptions { force: false, limits: Limits::uniform(4) };
        assert!(matches!(
            enumerate(&a, DerivationClass::IMPLICATIVE_I, Filter::All, &o),
            Err(Error::CapExceeded { what: CapKind::Derivations, size: 5, cap: 4 })
        ));
        assert!(matches!(
            enumerate(&a, DerivationClass::IMPLICATIVE_III, Filter::All, &EnumerateOptions::default()),
            Err(Error::TypeRequiresPseudoBck(_))
        ));
    }
}
