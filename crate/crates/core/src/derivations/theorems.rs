//! Catalogued statements about derivations, checked exhaustively on one algebra.
//!
//! Every entry is a theorem about all pseudo-BCI algebras (or all algebras in
//! a stated class), so on a validated input a failure can only come from a bug.
//! Entries whose global hypothesis does not hold are reported as skipped, as
//! are entries whose quantifiers range over nothing.

use serde::Serialize;

use super::analysis::{bck_set, compose, is_idempotent, kernel, pointwise};
use super::{solve, DerivationClass, Law, SelfMap};
use crate::algebra::{Cup, Element, ElementSet, Op, PseudoBciAlgebra};
use crate::error::{CapKind, Result};
use crate::limits::Limits;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Provenance {
    /// Stated with a proof.
    Proved,
    /// Stated without proof; checked empirically only.
    Asserted,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "lowercase")]
pub enum TheoremStatus {
    Passed,
    Failed { witness: String },
    Skipped { reason: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TheoremEntry {
    pub id: &'static str,
    pub statement: &'static str,
    pub provenance: Provenance,
    pub applicable: bool,
    pub passed: bool,
    #[serde(flatten)]
    pub status: TheoremStatus,
    /// Number of quantifier instances checked.
    pub instances: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TheoremReport {
    pub entries: Vec<TheoremEntry>,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
}

impl TheoremReport {
    pub fn all_passed(&self) -> bool {
        self.failed == 0
    }

    pub fn failures(&self) -> impl Iterator<Item = &TheoremEntry> {
        self.entries.iter().filter(|e| matches!(e.status, TheoremStatus::Failed { .. }))
    }
}

/// Counts instances and keeps the first counterexample.
#[derive(Default)]
struct Probe {
    instances: usize,
    failure: Option<String>,
}

impl Probe {
    fn check(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        self.instances += 1;
        if !ok && self.failure.is_none() {
            self.failure = Some(witness());
        }
    }
}

struct Suite<'a> {
    a: &'a PseudoBciAlgebra,
    els: Vec<Element>,
    one: Element,
    k: ElementSet,
    at: ElementSet,
    phi: SelfMap,
    ds: Vec<ElementSet>,
    idop_i: Vec<SelfMap>,
    idop_ii: Vec<SelfMap>,
    idop: Vec<SelfMap>,
    ridop_ii: Vec<SelfMap>,
    sdop_i: Vec<SelfMap>,
    sdop_ii: Vec<SelfMap>,
    /// Types III and IV, only on pseudo-BCK inputs.
    idop_iii_iv: Option<(Vec<SelfMap>, Vec<SelfMap>)>,
    p_semisimple: bool,
    entries: Vec<TheoremEntry>,
}

fn union(x: &[SelfMap], y: &[SelfMap]) -> Vec<SelfMap> {
    let mut v: Vec<SelfMap> = x.iter().chain(y).cloned().collect();
    v.sort();
    v.dedup();
    v
}

fn intersect(x: &[SelfMap], y: &[SelfMap]) -> Vec<SelfMap> {
    x.iter().filter(|m| y.contains(m)).cloned().collect()
}

fn regular_of(a: &PseudoBciAlgebra, maps: &[SelfMap]) -> Vec<SelfMap> {
    maps.iter().filter(|d| d.apply(a.unit()) == a.unit()).cloned().collect()
}

fn regular_type_ii(a: &PseudoBciAlgebra) -> Vec<SelfMap> {
    solve(a, &DerivationClass::IMPLICATIVE_II.laws(), true)
}

impl<'a> Suite<'a> {
    fn n(&self, x: Element) -> &str {
        self.a.name(x)
    }

    fn m(&self, d: &SelfMap) -> String {
        format!("[{}]", d.display(self.a))
    }

    fn names(&self, set: &[SelfMap]) -> String {
        let parts: Vec<String> = set.iter().map(|d| self.m(d)).collect();
        format!("{{{}}}", parts.join(", "))
    }

    fn record(&mut self, id: &'static str, statement: &'static str, provenance: Provenance, probe: Probe) {
        let status = match probe.failure {
            Some(witness) => TheoremStatus::Failed { witness },
            None if probe.instances == 0 => TheoremStatus::Skipped { reason: "no instances".into() },
            None => TheoremStatus::Passed,
        };
        self.entries.push(TheoremEntry {
            id,
            statement,
            provenance,
            applicable: true,
            passed: status == TheoremStatus::Passed,
            status,
            instances: probe.instances,
        });
    }

    fn skip(&mut self, id: &'static str, statement: &'static str, provenance: Provenance, reason: &str) {
        self.entries.push(TheoremEntry {
            id,
            statement,
            provenance,
            applicable: false,
            passed: false,
            status: TheoremStatus::Skipped { reason: reason.into() },
            instances: 0,
        });
    }

    fn when(
        &mut self,
        cond: bool,
        reason: &str,
        id: &'static str,
        statement: &'static str,
        body: impl FnOnce(&Self, &mut Probe),
    ) {
        if cond {
            let mut p = Probe::default();
            body(self, &mut p);
            self.record(id, statement, Provenance::Proved, p);
        } else {
            self.skip(id, statement, Provenance::Proved, reason);
        }
    }

    fn always(&mut self, id: &'static str, statement: &'static str, body: impl FnOnce(&Self, &mut Probe)) {
        self.when(true, "", id, statement, body)
    }

    fn product(&self, x: Element, y: Element) -> Element {
        self.a.squig(self.a.to_unit(x), y)
    }

    fn pairs(&self) -> impl Iterator<Item = (Element, Element)> + '_ {
        self.els.iter().flat_map(move |&x| self.els.iter().map(move |&y| (x, y)))
    }

    fn invariant_everywhere(&self, d: &SelfMap) -> bool {
        self.ds.iter().all(|s| self.a.is_invariant(s, d))
    }
}

/// Runs every catalogued statement on `a`.
pub fn theorem_suite(a: &PseudoBciAlgebra, limits: &Limits) -> Result<TheoremReport> {
    limits.check(CapKind::Derivations, a.size())?;
    let ds = a.deductive_systems(limits)?.into_iter().map(|d| d.members).collect();
    let idop_i = solve(a, &DerivationClass::IMPLICATIVE_I.laws(), false);
    let idop_ii = solve(a, &DerivationClass::IMPLICATIVE_II.laws(), false);
    let idop = intersect(&idop_i, &idop_ii);
    let ridop_ii = regular_of(a, &idop_ii);
    let sdop_i = solve(a, &DerivationClass::SYMMETRIC_I.laws(), false);
    let sdop_ii = solve(a, &DerivationClass::SYMMETRIC_II.laws(), false);
    let idop_iii_iv = a.is_pseudo_bck().then(|| {
        (
            solve(a, &DerivationClass::IMPLICATIVE_III.laws(), false),
            solve(a, &DerivationClass::IMPLICATIVE_IV.laws(), false),
        )
    });
    let mut s = Suite {
        a,
        els: a.elements().collect(),
        one: a.unit(),
        k: bck_set(a),
        at: a.atom_set(),
        phi: SelfMap::from_images(a.elements().map(|x| a.phi(x)).collect()),
        ds,
        idop_i,
        idop_ii,
        idop,
        ridop_ii,
        sdop_i,
        sdop_ii,
        idop_iii_iv,
        p_semisimple: a.is_p_semisimple(),
        entries: Vec::new(),
    };
    preliminaries(&mut s);
    implicative(&mut s);
    invariance(&mut s);
    p_semisimple(&mut s)?;
    symmetric(&mut s);
    types_iii_iv(&mut s);

    let count = |f: fn(&TheoremStatus) -> bool| s.entries.iter().filter(|e| f(&e.status)).count();
    let passed = count(|t| matches!(t, TheoremStatus::Passed));
    let failed = count(|t| matches!(t, TheoremStatus::Failed { .. }));
    let skipped = count(|t| matches!(t, TheoremStatus::Skipped { .. }));
    Ok(TheoremReport { entries: s.entries, passed, failed, skipped })
}

fn preliminaries(s: &mut Suite) {
    s.always(
        "cup-laws",
        "1 ∪ x = 1; x <= y iff x ∪ y = y; x ∪ x = x; x <= x ∪ y; x1 <= x2 implies x1 ∪ y <= x2 ∪ y; \
         (x ∪1 y)->y = x->y and (x ∪2 y)~>y = x~>y; on p-semisimple algebras x ∪ 1 = x",
        |s, p| {
            let a = s.a;
            let ps = s.p_semisimple;
            for (x, y) in s.pairs() {
                for c in [Cup::One, Cup::Two] {
                    let j = a.cup(c, x, y);
                    p.check(a.cup(c, s.one, x) == s.one, || format!("1 ∪ {} != 1", s.n(x)));
                    p.check(a.leq(x, y) == (j == y), || format!("order vs cup at ({}, {})", s.n(x), s.n(y)));
                    p.check(a.cup(c, x, x) == x, || format!("{} ∪ itself", s.n(x)));
                    p.check(a.leq(x, j), || format!("{} not below {} ∪ {}", s.n(x), s.n(x), s.n(y)));
                    if ps {
                        p.check(a.cup(c, x, s.one) == x, || format!("{} ∪ 1 != {}", s.n(x), s.n(x)));
                    }
                    for &z in &s.els {
                        if a.leq(x, z) {
                            p.check(a.leq(j, a.cup(c, z, y)), || {
                                format!("monotonicity at ({}, {}, {})", s.n(x), s.n(z), s.n(y))
                            });
                        }
                    }
                }
                p.check(a.arrow(a.cup(Cup::One, x, y), y) == a.arrow(x, y), || {
                    format!("(x ∪1 y)->y at ({}, {})", s.n(x), s.n(y))
                });
                p.check(a.squig(a.cup(Cup::Two, x, y), y) == a.squig(x, y), || {
                    format!("(x ∪2 y)~>y at ({}, {})", s.n(x), s.n(y))
                });
            }
        },
    );
    s.always("atom-closure", "a atom implies x->a and x~>a are atoms", |s, p| {
        for a in s.at.iter() {
            for &x in &s.els {
                p.check(s.at.contains(s.a.arrow(x, a)) && s.at.contains(s.a.squig(x, a)), || {
                    format!("x={}, a={}", s.n(x), s.n(a))
                });
            }
        }
    });
    s.always(
        "phi-atom-properties",
        "φx is an atom; φx->x and φx~>x lie in K(A); x in K(A) implies φx = 1",
        |s, p| {
            let a = s.a;
            for &x in &s.els {
                let f = s.phi.apply(x);
                p.check(s.at.contains(f), || format!("φ{} not an atom", s.n(x)));
                p.check(s.k.contains(a.arrow(f, x)) && s.k.contains(a.squig(f, x)), || {
                    format!("φx->x outside K(A) at {}", s.n(x))
                });
                if s.k.contains(x) {
                    p.check(f == s.one, || format!("φ{} != 1", s.n(x)));
                }
                p.check(f == a.cup(Cup::Two, x, s.one) && f == a.arrow(a.squig(x, s.one), s.one), || {
                    format!("φ forms disagree at {}", s.n(x))
                });
            }
        },
    );
}

fn implicative(s: &mut Suite) {
    s.always("implicative-i-cup-absorption", "d in IDOP(I) implies dx = dx ∪1 x = dx ∪2 x", |s, p| {
        for d in &s.idop_i {
            for &x in &s.els {
                let dx = d.apply(x);
                p.check(s.a.cup(Cup::One, dx, x) == dx && s.a.cup(Cup::Two, dx, x) == dx, || {
                    format!("d={}, x={}", s.m(d), s.n(x))
                });
            }
        }
    });
    s.always(
        "implicative-ii-cup-iff-regular",
        "d in IDOP(II): (for all x, dx = x ∪1 dx = x ∪2 dx) iff d1 = 1",
        |s, p| {
            for d in &s.idop_ii {
                let absorbs = s.els.iter().all(|&x| {
                    let dx = d.apply(x);
                    s.a.cup(Cup::One, x, dx) == dx && s.a.cup(Cup::Two, x, dx) == dx
                });
                p.check(absorbs == (d.apply(s.one) == s.one), || format!("d={}", s.m(d)));
            }
        },
    );
    s.always("phi-map-type-i", "d_φ is an implicative and a symmetric type I derivation", |s, p| {
        p.check(s.idop_i.contains(&s.phi), || format!("d_φ={} not in IDOP(I)", s.m(&s.phi)));
        p.check(s.sdop_i.contains(&s.phi), || format!("d_φ={} not in SDOP(I)", s.m(&s.phi)));
    });
    let commutative = s.a.is_commutative();
    s.when(
        commutative,
        "algebra is not commutative",
        "phi-map-in-idop-when-commutative",
        "A commutative implies d_φ in IDOP(A)",
        |s, p| {
            p.check(s.idop.contains(&s.phi), || format!("d_φ={}", s.m(&s.phi)));
        },
    );
    s.always(
        "regular-type-ii-properties",
        "d in RIDOP(II): x <= dx; dx->y <= dx->dy <= x->dy = d(x->y) (and for ~>); Ker(d) is a subalgebra \
         inside K(A); d(K(A)) ⊆ K(A); φx and dx share a branch; φx->dx, φx~>dx in K(A)",
        |s, p| {
            let a = s.a;
            for d in &s.ridop_ii {
                let w = |x: Element| format!("d={}, x={}", s.m(d), s.n(x));
                for &x in &s.els {
                    let dx = d.apply(x);
                    p.check(a.leq(x, dx), || w(x));
                    for &y in &s.els {
                        let dy = d.apply(y);
                        for op in Op::BOTH {
                            let chain = a.leq(a.apply(op, dx, y), a.apply(op, dx, dy))
                                && a.leq(a.apply(op, dx, dy), a.apply(op, x, dy))
                                && a.apply(op, x, dy) == d.apply(a.apply(op, x, y));
                            p.check(chain, || format!("{}, y={}, op {op}", w(x), s.n(y)));
                        }
                    }
                    let f = s.phi.apply(x);
                    p.check(s.k.contains(a.arrow(f, dx)) && s.k.contains(a.squig(f, dx)), || w(x));
                    p.check(a.phi(dx) == f, || format!("x, dx in different branches: {}", w(x)));
                }
                let ker = kernel(a, d);
                p.check(a.is_subalgebra(&ker), || format!("Ker {} not a subalgebra", s.m(d)));
                p.check(ker.is_subset(&s.k), || format!("Ker {} not in K(A)", s.m(d)));
                p.check(s.k.iter().all(|x| s.k.contains(d.apply(x))), || format!("d={} leaves K(A)", s.m(d)));
            }
        },
    );
    s.always("regular-type-ii-isotone", "d in RIDOP(II) is isotone", |s, p| {
        for d in &s.ridop_ii {
            for (x, y) in s.pairs() {
                if s.a.leq(x, y) {
                    p.check(s.a.leq(d.apply(x), d.apply(y)), || {
                        format!(
                            "d={}: {} <= {} but d{} = {} is not below d{} = {}",
                            s.m(d),
                            s.n(x),
                            s.n(y),
                            s.n(x),
                            s.n(d.apply(x)),
                            s.n(y),
                            s.n(d.apply(y))
                        )
                    });
                }
            }
        }
    });
    s.always(
        "idempotent-upper-bound-absorbs",
        "d1, d2 in RIDOP(II), d2 idempotent, d1 <= d2 implies d2∘d1 = d2",
        |s, p| {
            for d1 in &s.ridop_ii {
                for d2 in &s.ridop_ii {
                    if is_idempotent(d2) && d1.leq(s.a, d2) {
                        p.check(compose(d2, d1) == *d2, || format!("d1={}, d2={}", s.m(d1), s.m(d2)));
                    }
                }
            }
        },
    );
    s.always("kernel-bck-part-iff-phi", "d in RIDOP(II): Ker(d) = K(A) iff d = d_φ", |s, p| {
        for d in &s.ridop_ii {
            p.check((kernel(s.a, d) == s.k) == (*d == s.phi), || format!("d={}", s.m(d)));
        }
    });
    s.always("kernel-bck-part-idempotent", "d in RIDOP(II) with Ker(d) = K(A) is idempotent", |s, p| {
        for d in s.ridop_ii.iter().filter(|d| kernel(s.a, d) == s.k) {
            p.check(is_idempotent(d), || format!("d={}", s.m(d)));
        }
    });
    s.always(
        "kernel-bck-part-absorbs",
        "d1, d2 in RIDOP(II), d1 <= d2, Ker(d1) = K(A) implies d2∘d1 = d2",
        |s, p| {
            for d1 in s.ridop_ii.iter().filter(|d| kernel(s.a, d) == s.k) {
                for d2 in s.ridop_ii.iter().filter(|d2| d1.leq(s.a, d2)) {
                    p.check(compose(d2, d1) == *d2, || format!("d1={}, d2={}", s.m(d1), s.m(d2)));
                }
            }
        },
    );
    s.always(
        "bounded-below-forces-pseudo-bck",
        "d in IDOP(A) with some a <= dx for all x implies d regular and A pseudo-BCK",
        |s, p| {
            for d in &s.idop {
                if let Some(&lb) = s.els.iter().find(|&&b| s.els.iter().all(|&x| s.a.leq(b, d.apply(x)))) {
                    p.check(d.apply(s.one) == s.one && s.a.is_pseudo_bck(), || format!("d={}, a={}", s.m(d), s.n(lb)));
                }
            }
        },
    );
    s.always(
        "type-i-unit-image",
        "d in IDOP(I): d1 is an atom; da = (a->1)->d1 = (a->1)~>d1 = a·d1 for atoms a; d(dx->x) = d(dx~>x) = 1",
        |s, p| {
            let a = s.a;
            for d in &s.idop_i {
                let d1 = d.apply(s.one);
                p.check(s.at.contains(d1), || format!("d={}", s.m(d)));
                for t in s.at.iter() {
                    let da = d.apply(t);
                    let ok =
                        da == a.arrow(a.to_unit(t), d1) && da == a.squig(a.to_unit(t), d1) && da == s.product(t, d1);
                    p.check(ok, || format!("d={}, a={}", s.m(d), s.n(t)));
                }
                for &x in &s.els {
                    let dx = d.apply(x);
                    p.check(d.apply(a.arrow(dx, x)) == s.one && d.apply(a.squig(dx, x)) == s.one, || {
                        format!("d={}, x={}", s.m(d), s.n(x))
                    });
                }
            }
        },
    );
    s.always(
        "type-ii-unit-image",
        "d in IDOP(II): d1->x <= dx and d1~>x <= dx; da = d1->a = d1~>a = d1·a for atoms a",
        |s, p| {
            let a = s.a;
            for d in &s.idop_ii {
                let d1 = d.apply(s.one);
                for &x in &s.els {
                    let dx = d.apply(x);
                    p.check(a.leq(a.arrow(d1, x), dx) && a.leq(a.squig(d1, x), dx), || {
                        format!("d={}, x={}", s.m(d), s.n(x))
                    });
                }
                for t in s.at.iter() {
                    let da = d.apply(t);
                    let ok = da == a.arrow(d1, t) && da == a.squig(d1, t) && da == s.product(d1, t);
                    p.check(ok, || format!("d={}, a={}", s.m(d), s.n(t)));
                }
            }
        },
    );
    s.always(
        "atoms-preserved",
        "d in IDOP(I) ∪ IDOP(II): d(At(A)) ⊆ At(A); d1 in K(A) implies d1 = 1; d(a·b) = da·(d1->1)·db for atoms; \
         d restricted to At(A) is the identity iff d1 = 1",
        |s, p| {
            let a = s.a;
            for d in union(&s.idop_i, &s.idop_ii) {
                let d1 = d.apply(s.one);
                p.check(s.at.iter().all(|t| s.at.contains(d.apply(t))), || format!("d={}", s.m(&d)));
                if s.k.contains(d1) {
                    p.check(d1 == s.one, || format!("d={}", s.m(&d)));
                }
                for (x, y) in s.at.iter().flat_map(|x| s.at.iter().map(move |y| (x, y))) {
                    let lhs = d.apply(s.product(x, y));
                    let rhs = s.product(s.product(d.apply(x), a.to_unit(d1)), d.apply(y));
                    p.check(lhs == rhs, || format!("d={}, a={}, b={}", s.m(&d), s.n(x), s.n(y)));
                }
                let fixes = s.at.iter().all(|t| d.apply(t) == t);
                p.check(fixes == (d1 == s.one), || format!("d={}", s.m(&d)));
            }
        },
    );
    s.always(
        "atom-image-linear",
        "d in IDOP(I) with Im(d) ⊆ At(A) implies d(x->y) = x->dy and d(x~>y) = x~>dy",
        |s, p| {
            for d in s.idop_i.iter().filter(|d| d.image(s.a).is_subset(&s.at)) {
                for op in Op::BOTH {
                    p.check(Law::right_linear(op).holds_everywhere(s.a, d.images()), || {
                        format!("d={}, op {op}", s.m(d))
                    });
                }
            }
        },
    );
    s.always(
        "regular-type-ii-linear-characterization",
        "d in RIDOP(II) iff d1 = 1, d(x->y) = x->dy and d(x~>y) = x~>dy",
        |s, p| {
            let linear = solve(s.a, &[Law::right_linear(Op::Arrow), Law::right_linear(Op::Squig)], true);
            p.check(linear == s.ridop_ii, || {
                format!("RIDOP(II)={}, linear={}", s.names(&s.ridop_ii), s.names(&linear))
            });
            p.check(regular_type_ii(s.a) == s.ridop_ii, || "regular enumeration disagrees".into());
        },
    );
    s.always(
        "regular-left-linear-is-identity",
        "d in RIDOP(I) ∪ RIDOP(II) with d(x->y) = dx->y for all x, y (or the ~> form) is the identity",
        |s, p| {
            for d in regular_of(s.a, &union(&s.idop_i, &s.idop_ii)) {
                for op in Op::BOTH {
                    if Law::left_linear(op).holds_everywhere(s.a, d.images()) {
                        p.check(d.is_identity(), || format!("d={}, op {op}", s.m(&d)));
                    }
                }
            }
        },
    );
}

fn invariance(s: &mut Suite) {
    s.always(
        "invariance-forces-regular",
        "d in IDOP(I) ∪ IDOP(II) leaving every deductive system invariant is regular",
        |s, p| {
            for d in union(&s.idop_i, &s.idop_ii) {
                if s.invariant_everywhere(&d) {
                    p.check(d.apply(s.one) == s.one, || format!("d={}", s.m(&d)));
                }
            }
        },
    );
    s.always(
        "regular-type-ii-iff-invariant",
        "d in IDOP(II): d in RIDOP(II) iff every deductive system is d-invariant",
        |s, p| {
            for d in &s.idop_ii {
                p.check((d.apply(s.one) == s.one) == s.invariant_everywhere(d), || format!("d={}", s.m(d)));
            }
        },
    );
    s.always(
        "bck-part-closed-compatible-invariant",
        "K(A) is a closed compatible deductive system, invariant under every d in RIDOP(II)",
        |s, p| {
            let a = s.a;
            p.check(a.is_deductive_system(&s.k), || "K(A) is not a deductive system".into());
            p.check(a.is_compatible(&s.k), || "K(A) is not compatible".into());
            p.check(a.is_subalgebra(&s.k), || "K(A) is not closed".into());
            for d in &s.ridop_ii {
                p.check(a.is_invariant(&s.k, d), || format!("d={}", s.m(d)));
            }
        },
    );
}

fn p_semisimple(s: &mut Suite) -> Result<()> {
    s.always(
        "p-semisimple-three-way",
        "A p-semisimple iff Ker(d) = {1} for all d in RIDOP(II) iff RIDOP(II) = {Id}",
        |s, p| {
            let a = s.a;
            let kernels_trivial = s.ridop_ii.iter().all(|d| kernel(a, d) == ElementSet::singleton(s.one));
            let only_identity = s.ridop_ii == vec![SelfMap::identity(a.size())];
            p.check(s.p_semisimple == kernels_trivial && kernels_trivial == only_identity, || {
                format!(
                    "p-semisimple={}, trivial kernels={}, RIDOP(II)={}",
                    s.p_semisimple,
                    kernels_trivial,
                    s.names(&s.ridop_ii)
                )
            });
        },
    );
    let at_algebra = s.a.restrict(&s.at);
    s.always(
        "atoms-subalgebra-regular-type-ii-trivial",
        "At(A) is a p-semisimple subalgebra and RIDOP(II)(At(A)) = {Id}",
        |_, p| match &at_algebra {
            Ok(b) => {
                p.check(b.is_p_semisimple(), || "At(A) is not p-semisimple".into());
                let r = regular_type_ii(b);
                p.check(r == vec![SelfMap::identity(b.size())], || format!("RIDOP(II)(At(A)) has {} maps", r.len()));
            }
            Err(e) => p.check(false, || format!("At(A) is not a subalgebra: {e}")),
        },
    );
    let quotient = s.a.quotient(&s.k);
    s.always("bck-quotient-regular-type-ii-trivial", "A/K(A) is p-semisimple and RIDOP(II)(A/K(A)) = {Id}", |_, p| {
        match &quotient {
            Ok(q) => {
                p.check(q.is_p_semisimple(), || "A/K(A) is not p-semisimple".into());
                let r = regular_type_ii(q);
                p.check(r == vec![SelfMap::identity(q.size())], || format!("RIDOP(II)(A/K(A)) has {} maps", r.len()));
            }
            Err(e) => p.check(false, || format!("quotient by K(A) failed: {e}")),
        }
    });
    let medial = s.a.is_medial_arrow() || s.a.is_medial_squig();
    s.when(
        medial,
        "algebra is not medial",
        "medial-implies-p-semisimple-bci",
        "a ->medial or ~>medial algebra is a p-semisimple BCI-algebra",
        |s, p| {
            p.check(s.p_semisimple && s.a.is_bci(), || {
                format!("p-semisimple={}, bci={}", s.p_semisimple, s.a.is_bci())
            });
        },
    );

    let ps = s.p_semisimple;
    let reason = "algebra is not p-semisimple";
    s.when(
        ps,
        reason,
        "p-semisimple-composition-closed",
        "on p-semisimple A, IDOP(I) and IDOP(II) are closed under composition",
        |s, p| {
            for set in [&s.idop_i, &s.idop_ii] {
                for d1 in set {
                    for d2 in set {
                        p.check(set.contains(&compose(d1, d2)), || format!("d1={}, d2={}", s.m(d1), s.m(d2)));
                    }
                }
            }
        },
    );
    s.when(
        ps,
        reason,
        "p-semisimple-idop-commutes",
        "on p-semisimple A, d1∘d2 = d2∘d1 for d1, d2 in IDOP(A)",
        |s, p| {
            for d1 in &s.idop {
                for d2 in &s.idop {
                    p.check(compose(d1, d2) == compose(d2, d1), || format!("d1={}, d2={}", s.m(d1), s.m(d2)));
                }
            }
        },
    );
    let monoid = super::monoid_report(&s.idop);
    s.when(
        ps,
        reason,
        "p-semisimple-commutative-monoid",
        "on p-semisimple A, (IDOP(A), ∘, Id) is a commutative monoid",
        |_, p| match &monoid {
            Ok(r) => p.check(r.closed_under_composition && r.commutative && r.has_identity, || {
                format!(
                    "closed={}, commutative={}, identity={}",
                    r.closed_under_composition, r.commutative, r.has_identity
                )
            }),
            Err(e) => p.check(false, || e.to_string()),
        },
    );
    s.when(
        ps,
        reason,
        "p-semisimple-pointwise-commute",
        "on p-semisimple A, for d1, d2 in IDOP(A): d1 op d2 = d2 op d1 = the constant map at (d1∘d2)(1), for both operations",
        |s, p| {
            for d1 in &s.idop {
                for d2 in &s.idop {
                    let c = compose(d1, d2).apply(s.one);
                    let constant = SelfMap::constant(s.a.size(), c);
                    for op in Op::BOTH {
                        let l = pointwise(s.a, op, d1, d2);
                        let r = pointwise(s.a, op, d2, d1);
                        p.check(l == r && l == constant, || {
                            format!("d1={}, d2={}, op {op}: {} vs {}", s.m(d1), s.m(d2), s.m(&l), s.m(&r))
                        });
                    }
                }
            }
        },
    );
    Ok(())
}

fn symmetric(s: &mut Suite) {
    s.always(
        "symmetric-i-facts",
        "d in SDOP(I): d1 = x->dx = x~>dx; dx = dx ∪1 d1 = dx ∪2 d1; if d is regular: x <= dx, dx is an atom, \
         dx = dx ∪1 y = dx ∪2 y",
        |s, p| {
            let a = s.a;
            for d in &s.sdop_i {
                let d1 = d.apply(s.one);
                let regular = d1 == s.one;
                for &x in &s.els {
                    let dx = d.apply(x);
                    let w = || format!("d={}, x={}", s.m(d), s.n(x));
                    p.check(a.arrow(x, dx) == d1 && a.squig(x, dx) == d1, w);
                    p.check(a.cup(Cup::One, dx, d1) == dx && a.cup(Cup::Two, dx, d1) == dx, w);
                    if regular {
                        p.check(a.leq(x, dx) && s.at.contains(dx), w);
                        for &y in &s.els {
                            p.check(a.cup(Cup::One, dx, y) == dx && a.cup(Cup::Two, dx, y) == dx, || {
                                format!("d={}, x={}, y={}", s.m(d), s.n(x), s.n(y))
                            });
                        }
                    }
                }
            }
        },
    );
    s.always(
        "symmetric-ii-facts",
        "d in SDOP(II): d1 = dx->x = dx~>x; dx = φ(dx ∪1 x) = φ(dx ∪2 x); dx = dx ∪1 x = dx ∪2 x; dx is an atom; \
         regular implies d = Id",
        |s, p| {
            let a = s.a;
            for d in &s.sdop_ii {
                let d1 = d.apply(s.one);
                for &x in &s.els {
                    let dx = d.apply(x);
                    let w = || format!("d={}, x={}", s.m(d), s.n(x));
                    p.check(a.arrow(dx, x) == d1 && a.squig(dx, x) == d1, w);
                    let (j1, j2) = (a.cup(Cup::One, dx, x), a.cup(Cup::Two, dx, x));
                    p.check(a.phi(j1) == dx && a.phi(j2) == dx, w);
                    p.check(j1 == dx && j2 == dx, w);
                    p.check(s.at.contains(dx), w);
                }
                if d1 == s.one {
                    p.check(d.is_identity(), || format!("d={}", s.m(d)));
                }
            }
        },
    );
    s.always(
        "symmetric-ii-atom-images",
        "d in SDOP(II): Im(d) ⊆ At(A); dx = dx ∪1 y = dx ∪2 y; x->dy and x~>dy are atoms",
        |s, p| {
            let a = s.a;
            for d in &s.sdop_ii {
                p.check(d.image(a).is_subset(&s.at), || format!("d={}", s.m(d)));
                for (x, y) in s.pairs() {
                    let dx = d.apply(x);
                    let dy = d.apply(y);
                    let ok = a.cup(Cup::One, dx, y) == dx
                        && a.cup(Cup::Two, dx, y) == dx
                        && s.at.contains(a.arrow(x, dy))
                        && s.at.contains(a.squig(x, dy));
                    p.check(ok, || format!("d={}, x={}, y={}", s.m(d), s.n(x), s.n(y)));
                }
            }
        },
    );
    s.always(
        "symmetric-product-on-atoms",
        "d in SDOP(I) ∪ SDOP(II), x, y atoms: d(x·y) = dx·y = x·dy with x·y = (x->1)~>y",
        |s, p| {
            for d in union(&s.sdop_i, &s.sdop_ii) {
                for x in s.at.iter() {
                    for y in s.at.iter() {
                        let lhs = d.apply(s.product(x, y));
                        let ok = lhs == s.product(d.apply(x), y) && lhs == s.product(x, d.apply(y));
                        p.check(ok, || format!("d={}, x={}, y={}", s.m(&d), s.n(x), s.n(y)));
                    }
                }
            }
        },
    );
    let ps = s.p_semisimple;
    let reason = "algebra is not p-semisimple";
    s.when(
        ps,
        reason,
        "p-semisimple-symmetric-ii-facts",
        "on p-semisimple A, d in SDOP(II): d(x->y) = dx->y, d(x~>y) = dx~>y; x->dx = y->dy = dy->y and \
         x~>dx = y~>dy = dy~>y",
        |s, p| {
            let a = s.a;
            for d in &s.sdop_ii {
                for op in Op::BOTH {
                    p.check(Law::left_linear(op).holds_everywhere(a, d.images()), || format!("d={}, op {op}", s.m(d)));
                }
                for (x, y) in s.pairs() {
                    let (dx, dy) = (d.apply(x), d.apply(y));
                    for op in Op::BOTH {
                        let ok = a.apply(op, x, dx) == a.apply(op, y, dy) && a.apply(op, x, dx) == a.apply(op, dy, y);
                        p.check(ok, || format!("d={}, x={}, y={}, op {op}", s.m(d), s.n(x), s.n(y)));
                    }
                }
            }
        },
    );
    s.when(
        ps,
        reason,
        "p-semisimple-symmetric-ii-equals-implicative-ii",
        "on p-semisimple A, SDOP(II) = IDOP(II)",
        |s, p| {
            p.check(s.sdop_ii == s.idop_ii, || {
                format!("SDOP(II)={}, IDOP(II)={}", s.names(&s.sdop_ii), s.names(&s.idop_ii))
            });
        },
    );
    let ps_bci = ps && s.a.is_bci();
    s.when(
        ps_bci,
        "algebra is not a p-semisimple BCI-algebra",
        "p-semisimple-bci-symmetric-i-equals-implicative-i",
        "on p-semisimple BCI-algebras, SDOP(I) = IDOP(I)",
        |s, p| {
            p.check(s.sdop_i == s.idop_i, || format!("SDOP(I)={}, IDOP(I)={}", s.names(&s.sdop_i), s.names(&s.idop_i)));
        },
    );
    s.always(
        "symmetric-regular-iff-invariant",
        "d in SDOP(I) ∪ SDOP(II): d regular iff every deductive system is d-invariant",
        |s, p| {
            for d in union(&s.sdop_i, &s.sdop_ii) {
                p.check((d.apply(s.one) == s.one) == s.invariant_everywhere(&d), || format!("d={}", s.m(&d)));
            }
        },
    );
}

fn types_iii_iv(s: &mut Suite) {
    let id = "pseudo-bck-type-iii-iv-cup-absorption";
    let statement = "on pseudo-BCK A: d in IDOP(III) implies dx = dx ∪1 x = dx ∪2 x; \
                     d in IDOP(IV): (for all x, dx = x ∪1 dx = x ∪2 dx) iff d1 = 1";
    let Some((iii, iv)) = s.idop_iii_iv.clone() else {
        s.skip(id, statement, Provenance::Asserted, "algebra is not pseudo-BCK");
        return;
    };
    let a = s.a;
    let mut p = Probe::default();
    for d in &iii {
        for &x in &s.els {
            let dx = d.apply(x);
            p.check(a.cup(Cup::One, dx, x) == dx && a.cup(Cup::Two, dx, x) == dx, || {
                format!("type III d={}, x={}", s.m(d), s.n(x))
            });
        }
    }
    for d in &iv {
        let absorbs = s.els.iter().all(|&x| {
            let dx = d.apply(x);
            a.cup(Cup::One, x, dx) == dx && a.cup(Cup::Two, x, dx) == dx
        });
        p.check(absorbs == (d.apply(s.one) == s.one), || format!("type IV d={}", s.m(d)));
    }
    s.record(id, statement, Provenance::Asserted, p);
}
