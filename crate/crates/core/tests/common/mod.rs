#![allow(dead_code)]

use std::collections::BTreeSet;

use pbci::{io, AlgebraSpec};

pub struct Raw {
    pub n: usize,
    pub unit: usize,
    pub arrow: Vec<Vec<usize>>,
    pub squig: Vec<Vec<usize>>,
}

impl Raw {
    pub fn from_spec(s: &AlgebraSpec) -> Raw {
        let idx = |sym: &String| s.names.iter().position(|n| n == sym).unwrap();
        let table = |t: &Vec<Vec<String>>| t.iter().map(|row| row.iter().map(idx).collect()).collect();
        Raw { n: s.names.len(), unit: idx(&s.unit), arrow: table(&s.arrow), squig: table(&s.squig) }
    }

    pub fn ar(&self, x: usize, y: usize) -> usize {
        self.arrow[x][y]
    }

    pub fn sq(&self, x: usize, y: usize) -> usize {
        self.squig[x][y]
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.ar(x, y) == self.unit
    }

    /// `(x->y)~>y`
    pub fn cup1(&self, x: usize, y: usize) -> usize {
        self.sq(self.ar(x, y), y)
    }

    /// `(x~>y)->y`
    pub fn cup2(&self, x: usize, y: usize) -> usize {
        self.ar(self.sq(x, y), y)
    }

    pub fn is_algebra(&self) -> bool {
        let (n, u) = (self.n, self.unit);
        for x in 0..n {
            if self.ar(u, x) != x || self.sq(u, x) != x {
                return false;
            }
            for y in 0..n {
                if x != y && self.ar(x, y) == u && self.ar(y, x) == u {
                    return false;
                }
                for z in 0..n {
                    if self.sq(self.ar(x, y), self.sq(self.ar(y, z), self.ar(x, z))) != u
                        || self.ar(self.sq(x, y), self.ar(self.sq(y, z), self.sq(x, z))) != u
                    {
                        return false;
                    }
                }
            }
        }
        true
    }

    pub fn is_pseudo_bck(&self) -> bool {
        (0..self.n).all(|x| self.ar(x, self.unit) == self.unit)
    }

    /// Both defining identities of the named class at every pair.
    pub fn in_class(&self, class: &str, d: &[usize]) -> bool {
        let n = self.n;
        (0..n).all(|x| {
            (0..n).all(|y| {
                let (a1, a2, s1, s2) = match class {
                    "implicative-I" => (self.ar(x, d[y]), self.ar(d[x], y), self.sq(x, d[y]), self.sq(d[x], y)),
                    "implicative-II" => (self.ar(d[x], y), self.ar(x, d[y]), self.sq(d[x], y), self.sq(x, d[y])),
                    "implicative-III" => (self.ar(x, d[y]), self.ar(d[x], y), self.sq(x, d[y]), self.sq(d[x], y)),
                    "implicative-IV" => (self.ar(d[x], y), self.ar(x, d[y]), self.sq(d[x], y), self.sq(x, d[y])),
                    "symmetric-I" => (self.ar(x, d[y]), self.ar(y, d[x]), self.sq(x, d[y]), self.sq(y, d[x])),
                    "symmetric-II" => (self.ar(d[x], y), self.ar(d[y], x), self.sq(d[x], y), self.sq(d[y], x)),
                    other => panic!("{other}"),
                };
                let types_i_ii = !class.ends_with("III") && !class.ends_with("IV");
                let (want_arrow, want_squig) = if types_i_ii {
                    (self.cup2(a1, a2), self.cup1(s1, s2))
                } else {
                    (self.cup1(a1, a2), self.cup2(s1, s2))
                };
                d[self.ar(x, y)] == want_arrow && d[self.sq(x, y)] == want_squig
            })
        })
    }

    pub fn all_maps(&self) -> impl Iterator<Item = Vec<usize>> + '_ {
        let n = self.n;
        (0..n.pow(n as u32)).map(move |mut code| {
            let mut d = vec![0; n];
            for slot in d.iter_mut().rev() {
                *slot = code % n;
                code /= n;
            }
            d
        })
    }
}

pub const FIXTURES: [&str; 5] = ["proper5", "group6", "proper6", "cyclic3", "bck5"];

pub fn fixture_dir() -> String {
    concat!(env!("CARGO_MANIFEST_DIR"), "/../core/fixtures").to_owned()
}

pub fn fixture(name: &str) -> AlgebraSpec {
    let path = format!("{}/{name}.pbci", fixture_dir());
    io::parse_algebra(&std::fs::read_to_string(path).unwrap()).unwrap()
}

/// `(arrow, squig)` as index tables.
pub type TablePair = (Vec<Vec<usize>>, Vec<Vec<usize>>);

fn tables_of(n: usize, code: usize, unit: usize, free: usize) -> Vec<Vec<usize>> {
    let mut t = vec![vec![0; n]; n];
    let mut c = code;
    for (x, row) in t.iter_mut().enumerate() {
        for (y, cell) in row.iter_mut().enumerate() {
            if x == unit && free < n * n {
                *cell = y;
            } else {
                *cell = c % n;
                c /= n;
            }
        }
    }
    t
}

/// Every algebra on `a, …, 1` with unit last: all table pairs for `n = 2`,
/// and for `n = 3` all pairs whose unit rows are the identity.
pub fn brute_force_search(n: usize) -> BTreeSet<TablePair> {
    let unit = n - 1;
    let free = if n <= 2 { n * n } else { n * n - n };
    let count = n.pow(free as u32);
    let tables: Vec<Vec<Vec<usize>>> = (0..count).map(|c| tables_of(n, c, unit, free)).collect();
    let mut out = BTreeSet::new();
    for arrow in &tables {
        for squig in &tables {
            let raw = Raw { n, unit, arrow: arrow.clone(), squig: squig.clone() };
            if raw.is_algebra() {
                out.insert((raw.arrow, raw.squig));
            }
        }
    }
    out
}
