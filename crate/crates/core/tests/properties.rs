use std::collections::BTreeSet;
use std::sync::OnceLock;

use pbci::io::{analyze, parse_algebra, render_report, write_algebra, Format};
use pbci::search::{search_algebras, SearchQuery};
use pbci::{
    enumerate, find_isomorphism, theorem_suite, validate, AlgebraSpec, DerivationClass, Element, ElementSet,
    EnumerateOptions, Error, Filter, Limits, PseudoBciAlgebra,
};
use proptest::prelude::*;

mod common;

use common::{fixture, Raw, FIXTURES};

/// Every algebra with at most four elements, then the fixtures.
fn pool() -> &'static [AlgebraSpec] {
    static POOL: OnceLock<Vec<AlgebraSpec>> = OnceLock::new();
    POOL.get_or_init(|| {
        let mut v: Vec<AlgebraSpec> = (1..=4)
            .flat_map(|n| search_algebras(&SearchQuery::new(n), &Limits::default()).unwrap())
            .map(|a| a.to_spec())
            .collect();
        v.extend(FIXTURES.iter().map(|f| fixture(f)));
        v
    })
}

/// Reorders the elements by `order` and renames element `i` to `names[i]`.
fn relabel(s: &AlgebraSpec, order: &[usize], names: &[String]) -> AlgebraSpec {
    let pos = |sym: &str| s.names.iter().position(|n| n == sym).unwrap();
    let new_name = |sym: &str| names[pos(sym)].clone();
    let table = |t: &Vec<Vec<String>>| -> Vec<Vec<String>> {
        order.iter().map(|&i| order.iter().map(|&j| new_name(&t[i][j])).collect()).collect()
    };
    AlgebraSpec {
        names: order.iter().map(|&i| names[i].clone()).collect(),
        unit: new_name(&s.unit),
        arrow: table(&s.arrow),
        squig: table(&s.squig),
    }
}

fn relabelled() -> impl Strategy<Value = (AlgebraSpec, AlgebraSpec)> {
    (0..pool().len()).prop_flat_map(|i| {
        let s = pool()[i].clone();
        let n = s.names.len();
        let order = Just((0..n).collect::<Vec<usize>>()).prop_shuffle();
        let names = proptest::collection::btree_set("[a-z][a-z0-9_]{0,3}", n)
            .prop_map(|set| set.into_iter().collect::<Vec<String>>())
            .prop_shuffle();
        (Just(s), order, names).prop_map(|(s, order, names)| {
            let t = relabel(&s, &order, &names);
            (s, t)
        })
    })
}

fn images(d: &pbci::SelfMap) -> Vec<usize> {
    d.images().iter().map(|e| e.index()).collect()
}

/// `f[x]` is the index in `b` of the image of element `x` of `a`.
fn transport(f: &[Element], d: &[usize]) -> Vec<usize> {
    let mut out = vec![0; d.len()];
    for (x, &dx) in d.iter().enumerate() {
        out[f[x].index()] = f[dx].index();
    }
    out
}

fn subsets(a: &PseudoBciAlgebra) -> impl Iterator<Item = ElementSet> + '_ {
    let n = a.size();
    (0..1u64 << n).map(move |m| ElementSet::from_mask(m, n))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn text_round_trip((_, s) in relabelled()) {
        prop_assert_eq!(parse_algebra(&write_algebra(&s)).unwrap(), s);
    }

    #[test]
    fn relabelling_gives_an_isomorphic_algebra((s, t) in relabelled()) {
        let a = validate(&s).unwrap();
        let b = validate(&t).unwrap();
        let f = find_isomorphism(&a, &b);
        prop_assert!(f.is_some());
        prop_assert_eq!(a.classify().unwrap(), b.classify().unwrap());
        prop_assert_eq!(a.atoms().unwrap().len(), b.atoms().unwrap().len());
        prop_assert_eq!(a.bck_part().unwrap().len(), b.bck_part().unwrap().len());
    }

    #[test]
    fn derivation_classes_are_transported((s, t) in relabelled()) {
        let a = validate(&s).unwrap();
        let b = validate(&t).unwrap();
        let f = find_isomorphism(&a, &b).unwrap();
        let opts = EnumerateOptions { force: true, limits: Limits::default() };
        for cls in DerivationClass::ALL {
            let from_a: BTreeSet<Vec<usize>> =
                enumerate(&a, cls, Filter::All, &opts).unwrap().iter().map(|d| transport(&f, &images(d))).collect();
            let from_b: BTreeSet<Vec<usize>> = enumerate(&b, cls, Filter::All, &opts).unwrap().iter().map(images).collect();
            prop_assert_eq!(from_a, from_b, "{}", cls);
        }
    }

    #[test]
    fn order_is_read_off_either_table((_, t) in relabelled()) {
        let a = validate(&t).unwrap();
        let raw = Raw::from_spec(&t);
        for x in a.elements() {
            for y in a.elements() {
                let by_arrow = raw.ar(x.index(), y.index()) == raw.unit;
                prop_assert_eq!(by_arrow, raw.sq(x.index(), y.index()) == raw.unit);
                prop_assert_eq!(by_arrow, a.leq(x, y));
            }
        }
    }

    #[test]
    fn deductive_systems_are_exactly_the_closed_subsets((_, t) in relabelled()) {
        let a = validate(&t).unwrap();
        let raw = Raw::from_spec(&t);
        let listed: BTreeSet<ElementSet> =
            a.deductive_systems(&Limits::default()).unwrap().into_iter().map(|d| d.members).collect();
        for set in subsets(&a) {
            let has = |i: usize| set.contains(Element::new(i));
            let mp = |tab: &Vec<Vec<usize>>| {
                (0..raw.n).all(|x| (0..raw.n).all(|y| !(has(x) && has(tab[x][y])) || has(y)))
            };
            let ds = has(raw.unit) && mp(&raw.arrow);
            prop_assert_eq!(ds, has(raw.unit) && mp(&raw.squig));
            prop_assert_eq!(ds, listed.contains(&set));
            if ds {
                prop_assert_eq!(&a.generated_ds(&set).members, &set);
            }
        }
        prop_assert!(listed.contains(&a.bck_part().unwrap()));
    }

    #[test]
    fn branches_partition_the_algebra((_, t) in relabelled()) {
        let a = validate(&t).unwrap();
        let atoms = a.atoms().unwrap();
        let branches = a.branches().unwrap();
        prop_assert_eq!(branches.len(), atoms.len());
        let mut seen = ElementSet::new();
        for b in &branches {
            prop_assert!(atoms.contains(b.atom));
            prop_assert!(b.members.is_disjoint(&seen));
            seen = seen.union(&b.members);
        }
        prop_assert_eq!(seen, ElementSet::full(a.size()));
    }

    #[test]
    fn quotients_by_unit_and_bck_part((_, t) in relabelled()) {
        let a = validate(&t).unwrap();
        let one = ElementSet::singleton(a.unit());
        let q = a.quotient(&one).unwrap();
        prop_assert!(find_isomorphism(&a, &q).is_some());
        let k = a.quotient(&a.bck_part().unwrap()).unwrap();
        prop_assert!(k.is_p_semisimple());
        prop_assert_eq!(k.size(), a.atoms().unwrap().len());
    }

    #[test]
    fn theorem_suite_fails_only_the_isotone_claim((_, t) in relabelled()) {
        let a = validate(&t).unwrap();
        let r = theorem_suite(&a, &Limits::default()).unwrap();
        for e in r.failures() {
            prop_assert_eq!(e.id, "regular-type-ii-isotone");
        }
    }

    #[test]
    fn json_report_is_deterministic((_, t) in relabelled()) {
        let a = validate(&t).unwrap();
        let once = render_report(&analyze(&a, &Limits::default()).unwrap(), Format::Json);
        let again = render_report(&analyze(&a, &Limits::default()).unwrap(), Format::Json);
        prop_assert_eq!(once, again);
    }

    #[test]
    fn validator_agrees_with_axiom_oracle(
        arrow in proptest::collection::vec(0..3usize, 9),
        squig in proptest::collection::vec(0..3usize, 9),
        identity_unit_rows in any::<bool>(),
    ) {
        let n = 3;
        let mut raw = Raw {
            n,
            unit: 2,
            arrow: arrow.chunks(n).map(<[usize]>::to_vec).collect(),
            squig: squig.chunks(n).map(<[usize]>::to_vec).collect(),
        };
        if identity_unit_rows {
            raw.arrow[2] = vec![0, 1, 2];
            raw.squig[2] = vec![0, 1, 2];
        }
        let names = ["a", "b", "1"];
        let sym = |t: &Vec<Vec<usize>>| t.iter().map(|r| r.iter().map(|&i| names[i].to_string()).collect()).collect();
        let spec = AlgebraSpec {
            names: names.iter().map(|s| s.to_string()).collect(),
            unit: "1".into(),
            arrow: sym(&raw.arrow),
            squig: sym(&raw.squig),
        };
        match validate(&spec) {
            Ok(_) => prop_assert!(raw.is_algebra()),
            Err(Error::AxiomViolations(v)) => {
                prop_assert!(!raw.is_algebra());
                prop_assert!(!v.is_empty());
            }
            Err(e) => prop_assert!(false, "unexpected {e:?}"),
        }
    }
}
