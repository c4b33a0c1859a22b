use super::{Element, PseudoBciAlgebra};
use crate::error::{Error, Result};

/// The group carried by a p-semisimple algebra:
/// `x·y = (x->1)~>y`, `x⁻¹ = x->1`, identity `1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupView {
    n: usize,
    product: Vec<Element>,
    inverse: Vec<Element>,
    identity: Element,
}

impl GroupView {
    /// Builds the product table without checking anything.
    pub(crate) fn build(a: &PseudoBciAlgebra) -> Self {
        let n = a.size();
        let mut product = Vec::with_capacity(n * n);
        for x in a.elements() {
            for y in a.elements() {
                product.push(a.squig(a.to_unit(x), y));
            }
        }
        GroupView { n, product, inverse: a.elements().map(|x| a.to_unit(x)).collect(), identity: a.unit() }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn product(&self, x: Element, y: Element) -> Element {
        self.product[x.index() * self.n + y.index()]
    }

    pub fn inverse(&self, x: Element) -> Element {
        self.inverse[x.index()]
    }

    pub fn identity(&self) -> Element {
        self.identity
    }

    fn elements(&self) -> impl Iterator<Item = Element> + Clone {
        (0..self.n).map(Element::new)
    }

    /// Smallest `k >= 1` with `x^k = 1`.
    pub fn order(&self, x: Element) -> usize {
        let mut p = x;
        let mut k = 1;
        while p != self.identity {
            p = self.product(p, x);
            k += 1;
            if k > self.n {
                break;
            }
        }
        k
    }

    /// First failing group law or reconstruction identity, if any.
    pub(crate) fn law_failure(&self, a: &PseudoBciAlgebra) -> Option<String> {
        let e = self.identity;
        let name = |x: Element| a.name(x).to_owned();
        for x in self.elements() {
            if self.product(e, x) != x || self.product(x, e) != x {
                return Some(format!("1 is not an identity for {}", name(x)));
            }
            let inv = self.inverse(x);
            if inv != a.squig(x, a.unit()) {
                return Some(format!("x->1 != x~>1 at {}", name(x)));
            }
            if self.product(x, inv) != e || self.product(inv, x) != e {
                return Some(format!("x->1 is not an inverse of {}", name(x)));
            }
            for y in self.elements() {
                let xy = self.product(x, y);
                if xy != a.arrow(a.squig(y, a.unit()), x) {
                    return Some(format!("(x->1)~>y != (y~>1)->x at ({}, {})", name(x), name(y)));
                }
                if a.arrow(x, y) != self.product(y, inv) {
                    return Some(format!("x->y != y·x⁻¹ at ({}, {})", name(x), name(y)));
                }
                if a.squig(x, y) != self.product(inv, y) {
                    return Some(format!("x~>y != x⁻¹·y at ({}, {})", name(x), name(y)));
                }
                for z in self.elements() {
                    if self.product(xy, z) != self.product(x, self.product(y, z)) {
                        return Some(format!("product not associative at ({}, {}, {})", name(x), name(y), name(z)));
                    }
                }
            }
        }
        None
    }
}

impl PseudoBciAlgebra {
    /// The group structure of a p-semisimple algebra, with every group law
    /// and both reconstruction identities verified.
    pub fn group_view(&self) -> Result<GroupView> {
        if !self.elements().all(|x| x == self.unit || !self.leq(x, self.unit)) {
            return Err(Error::NotPSemisimple);
        }
        let g = GroupView::build(self);
        match g.law_failure(self) {
            Some(msg) => Err(Error::InternalInconsistency(format!("group view of p-semisimple algebra: {msg}"))),
            None => Ok(g),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::super::testing::*;
    use super::*;

    #[test]
    fn cyclic_group_of_order_three() {
        let a = fixture("cyclic3");
        let g = a.group_view().unwrap();
        assert_eq!(g.size(), 3);
        assert!(a.elements().any(|x| g.order(x) == 3));
        // abelian
        for x in a.elements() {
            for y in a.elements() {
                assert_eq!(g.product(x, y), g.product(y, x));
            }
        }
    }

    #[test]
    fn order_six_group_has_one_inverse_pair() {
        let a = fixture("group6");
        let g = a.group_view().unwrap();
        let pairs: Vec<_> = a
            .elements()
            .filter(|&x| g.inverse(x) != x && x < g.inverse(x))
            .map(|x| (a.name(x).to_owned(), a.name(g.inverse(x)).to_owned()))
            .collect();
        assert_eq!(pairs, vec![("c".to_owned(), "d".to_owned())]);
        // non-abelian
        assert!(a.elements().any(|x| a.elements().any(|y| g.product(x, y) != g.product(y, x))));
    }

    #[test]
    fn not_p_semisimple() {
        assert_eq!(fixture("proper5").group_view(), Err(Error::NotPSemisimple));
    }
}
