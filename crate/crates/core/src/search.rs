//! Backtracking generation of finite pseudo-BCI algebras.
//!
//! Elements are named `a`, `b`, … with the unit `1` last. Unit rows are the
//! identity, the diagonal is the unit, and `x->y = 1` iff `x~>y = 1`; all
//! three hold in every pseudo-BCI algebra, so forcing them loses nothing.
//! The unit column goes first, then the square on the first `k` elements for
//! growing `k`, each arrow cell followed by its squig cell. Every axiom
//! instance, and every instance of a handful of order laws that all
//! pseudo-BCI algebras satisfy, is tested as soon as the cells it reads are
//! known.
//!
//! Required `p_semisimple`, `bci` and `pseudo_bck` restrict the cell values
//! directly; every predicate is still evaluated on the finished algebra.

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{from_tables, AlgebraSpec, Element, PseudoBciAlgebra};
use crate::error::{CapKind, Error, Result};
use crate::limits::Limits;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Predicate {
    PSemisimple,
    Commutative,
    Proper,
    PseudoBck,
    Bci,
    MedialArrow,
    MedialSquig,
}

impl Predicate {
    pub const ALL: [Predicate; 7] = [
        Predicate::PSemisimple,
        Predicate::Commutative,
        Predicate::Proper,
        Predicate::PseudoBck,
        Predicate::Bci,
        Predicate::MedialArrow,
        Predicate::MedialSquig,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Predicate::PSemisimple => "p_semisimple",
            Predicate::Commutative => "commutative",
            Predicate::Proper => "proper",
            Predicate::PseudoBck => "pseudo_bck",
            Predicate::Bci => "bci",
            Predicate::MedialArrow => "medial_arrow",
            Predicate::MedialSquig => "medial_squig",
        }
    }

    pub fn eval(self, a: &PseudoBciAlgebra) -> bool {
        match self {
            Predicate::PSemisimple => a.is_p_semisimple(),
            Predicate::Commutative => a.is_commutative(),
            Predicate::Proper => !a.is_bci() && !a.is_pseudo_bck(),
            Predicate::PseudoBck => a.is_pseudo_bck(),
            Predicate::Bci => a.is_bci(),
            Predicate::MedialArrow => a.is_medial_arrow(),
            Predicate::MedialSquig => a.is_medial_squig(),
        }
    }
}

impl fmt::Display for Predicate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Predicate {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.trim().replace('-', "_").to_ascii_lowercase();
        Predicate::ALL
            .into_iter()
            .find(|p| p.name() == key)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown predicate {s:?}")))
    }
}

/// A predicate with its required truth value: `bci`, `bci=false` or `!bci`.
pub fn parse_requirement(s: &str) -> Result<(Predicate, bool)> {
    let s = s.trim();
    if let Some(rest) = s.strip_prefix('!') {
        return Ok((rest.parse()?, false));
    }
    match s.split_once('=') {
        Some((name, value)) => {
            let want = match value.trim() {
                "true" | "1" | "yes" => true,
                "false" | "0" | "no" => false,
                other => return Err(Error::InvalidArgument(format!("bad truth value {other:?}"))),
            };
            Ok((name.parse()?, want))
        }
        None => Ok((s.parse()?, true)),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchQuery {
    pub size: usize,
    pub predicates: Vec<(Predicate, bool)>,
    /// `None` returns everything found.
    pub limit: Option<usize>,
    pub modulo_iso: bool,
    pub cross_checks: bool,
}

impl SearchQuery {
    pub fn new(size: usize) -> Self {
        SearchQuery { size, predicates: Vec::new(), limit: None, modulo_iso: false, cross_checks: true }
    }
}

/// Names used for generated algebras of size `n`.
pub fn element_names(n: usize) -> Vec<String> {
    let mut names: Vec<String> = (0..n - 1)
        .map(|i| {
            let letter = char::from(b'a' + (i % 26) as u8);
            if i < 26 {
                letter.to_string()
            } else {
                format!("{letter}{}", i / 26)
            }
        })
        .collect();
    names.push("1".into());
    names
}

/// Matching algebras in order of their flattened `(arrow, squig)` tables.
pub fn search(q: &SearchQuery, limits: &Limits) -> Result<Vec<AlgebraSpec>> {
    Ok(search_algebras(q, limits)?.iter().map(PseudoBciAlgebra::to_spec).collect())
}

pub fn search_algebras(q: &SearchQuery, limits: &Limits) -> Result<Vec<PseudoBciAlgebra>> {
    if q.size == 0 {
        return Err(Error::InvalidArgument("search size must be at least 1".into()));
    }
    limits.check(CapKind::Search, q.size)?;
    let n = q.size;
    let names = element_names(n);
    let unit = n - 1;

    let mut found: Vec<PseudoBciAlgebra> = Tables::solve(n, Shape::from_query(q))
        .into_iter()
        .map(|(arrow, squig)| {
            let el = |t: Vec<u8>| t.into_iter().map(|v| Element::new(v as usize)).collect();
            from_tables(names.clone(), Element::new(unit), el(arrow), el(squig), q.cross_checks).map_err(|e| match e {
                Error::AxiomViolations(v) => {
                    Error::InternalInconsistency(format!("search produced tables violating {}", v[0]))
                }
                e => e,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    found.retain(|a| q.predicates.iter().all(|&(p, want)| p.eval(a) == want));
    if q.modulo_iso {
        found.retain(|a| canonical_key(a) == a.table_key());
    }
    found.sort_by_cached_key(|a| a.table_key());
    if let Some(limit) = q.limit {
        found.truncate(limit);
    }
    Ok(found)
}

/// Least `table_key` over relabelings that fix the unit.
pub fn canonical_key(a: &PseudoBciAlgebra) -> Vec<u32> {
    let n = a.size();
    let u = a.unit().index();
    let others: Vec<usize> = (0..n).filter(|&i| i != u).collect();
    let mut best: Option<Vec<u32>> = None;
    for perm in others.iter().copied().permutations(others.len()) {
        // f maps old index to new index
        let mut f = vec![u; n];
        for (&old, &new) in others.iter().zip(&perm) {
            f[old] = new;
        }
        let mut inv = vec![u; n];
        for (old, &new) in f.iter().enumerate() {
            inv[new] = old;
        }
        let mut key = Vec::with_capacity(2 * n * n);
        for t in [0, 1] {
            for i in 0..n {
                for j in 0..n {
                    let (x, y) = (Element::new(inv[i]), Element::new(inv[j]));
                    let v = if t == 0 { a.arrow(x, y) } else { a.squig(x, y) };
                    key.push(f[v.index()] as u32);
                }
            }
        }
        if best.as_ref().is_none_or(|b| key < *b) {
            best = Some(key);
        }
    }
    best.expect("at least one permutation")
}

const FREE: u8 = u8::MAX;

/// Restrictions implied by required predicates, applied while assigning.
#[derive(Clone, Copy, Default)]
struct Shape {
    discrete: bool,
    bci: bool,
    bck: bool,
}

impl Shape {
    fn from_query(q: &SearchQuery) -> Self {
        let wants = |p: Predicate| q.predicates.contains(&(p, true));
        Shape { discrete: wants(Predicate::PSemisimple), bci: wants(Predicate::Bci), bck: wants(Predicate::PseudoBck) }
    }
}

#[derive(Clone)]
struct Tables {
    n: usize,
    shape: Shape,
    arrow: Vec<u8>,
    squig: Vec<u8>,
}

#[derive(Clone, Copy)]
enum Cell {
    Arrow(usize),
    Squig(usize),
}

impl Tables {
    fn forced(n: usize, shape: Shape) -> Self {
        let unit = (n - 1) as u8;
        let mut t = Tables { n, shape, arrow: vec![FREE; n * n], squig: vec![FREE; n * n] };
        for x in 0..n {
            for y in 0..n {
                let v = if x == n - 1 {
                    y as u8
                } else if x == y || (shape.bck && y == n - 1) {
                    unit
                } else {
                    continue;
                };
                t.arrow[x * n + y] = v;
                t.squig[x * n + y] = v;
            }
        }
        t
    }

    /// Free cells: the unit column first, then the block on `{0..=k}` for
    /// growing `k`.
    fn cells(&self) -> Vec<Cell> {
        let n = self.n;
        let mut order: Vec<usize> = (0..n * n).collect();
        order.sort_by_key(|&i| (i % n != n - 1, (i / n).max(i % n), i));
        order.into_iter().filter(|&i| self.arrow[i] == FREE).flat_map(|i| [Cell::Arrow(i), Cell::Squig(i)]).collect()
    }

    fn get(t: &[u8], n: usize, x: u8, y: u8) -> Option<u8> {
        match t[x as usize * n + y as usize] {
            FREE => None,
            v => Some(v),
        }
    }

    /// No fully determined instance of an axiom, or of one of the order
    /// laws every pseudo-BCI algebra satisfies, fails.
    fn consistent(&self) -> bool {
        let n = self.n;
        let u = (n - 1) as u8;
        let ar = |x: u8, y: u8| Self::get(&self.arrow, n, x, y);
        let sq = |x: u8, y: u8| Self::get(&self.squig, n, x, y);
        let le = |p: Option<u8>, q: Option<u8>| p.zip(q).and_then(|(p, q)| ar(p, q)).map(|v| v == u);
        let top = Some(u);
        for x in 0..n as u8 {
            if let (Some(p), Some(q)) = (ar(x, u), sq(x, u)) {
                if p != q {
                    return false;
                }
            }
            // for an atom x: y->x = (x->y)->1 and y~>x = (x~>y)~>1
            if ar(x, u).and_then(|p| ar(p, u)) == Some(x) {
                for y in 0..n as u8 {
                    let same = |p: Option<u8>, q: Option<u8>| p.zip(q).is_none_or(|(p, q)| p == q);
                    if !same(ar(y, x), ar(x, y).and_then(|v| ar(v, u)))
                        || !same(sq(y, x), sq(x, y).and_then(|v| sq(v, u)))
                    {
                        return false;
                    }
                }
            }
            for y in 0..n as u8 {
                let (xy, sxy) = (ar(x, y), sq(x, y));
                if x < y && xy == top && ar(y, x) == top {
                    return false;
                }
                // x <= (x->y)~>y and x <= (x~>y)->y
                if le(Some(x), xy.and_then(|v| sq(v, y))) == Some(false)
                    || le(Some(x), sxy.and_then(|v| ar(v, y))) == Some(false)
                {
                    return false;
                }
                // (x->y)->1 = (x->1)~>(y->1), (x~>y)~>1 = (x~>1)->(y~>1)
                let same = |p: Option<u8>, q: Option<u8>| p.zip(q).is_none_or(|(p, q)| p == q);
                let lhs = xy.and_then(|v| ar(v, u));
                let rhs = ar(x, u).zip(ar(y, u)).and_then(|(p, q)| sq(p, q));
                let slhs = sxy.and_then(|v| sq(v, u));
                let srhs = sq(x, u).zip(sq(y, u)).and_then(|(p, q)| ar(p, q));
                if !same(lhs, rhs) || !same(slhs, srhs) {
                    return false;
                }
                for z in 0..n as u8 {
                    let (yz, xz, syz, sxz) = (ar(y, z), ar(x, z), sq(y, z), sq(x, z));
                    let t1 = yz.zip(xz).and_then(|(p, q)| sq(p, q)).zip(xy).and_then(|(w, v)| sq(v, w));
                    let t2 = syz.zip(sxz).and_then(|(p, q)| ar(p, q)).zip(sxy).and_then(|(w, v)| ar(v, w));
                    if t1.is_some_and(|v| v != u) || t2.is_some_and(|v| v != u) {
                        return false;
                    }
                    // x->(y~>z) = y~>(x->z)
                    if let (Some(l), Some(r)) = (syz.and_then(|v| ar(x, v)), xz.and_then(|v| sq(y, v))) {
                        if l != r {
                            return false;
                        }
                    }
                    // x <= y->z iff y <= x~>z
                    if let (Some(l), Some(r)) = (le(Some(x), yz), le(Some(y), sxz)) {
                        if l != r {
                            return false;
                        }
                    }
                    if xy == top {
                        let (zx, zy, szx, szy) = (ar(z, x), ar(z, y), sq(z, x), sq(z, y));
                        if (yz == top && xz.is_some_and(|v| v != u))
                            || le(yz, xz) == Some(false)
                            || le(syz, sxz) == Some(false)
                            || le(zx, zy) == Some(false)
                            || le(szx, szy) == Some(false)
                        {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    fn choices(&self, cell: Cell) -> Vec<u8> {
        let unit = (self.n - 1) as u8;
        match cell {
            Cell::Arrow(_) if self.shape.discrete => (0..unit).collect(),
            Cell::Arrow(_) => (0..self.n as u8).collect(),
            Cell::Squig(i) if self.arrow[i] == unit || i % self.n == self.n - 1 || self.shape.bci => {
                vec![self.arrow[i]]
            }
            Cell::Squig(_) => (0..unit).collect(),
        }
    }

    fn set(&mut self, cell: Cell, v: u8) {
        match cell {
            Cell::Arrow(i) => self.arrow[i] = v,
            Cell::Squig(i) => self.squig[i] = v,
        }
    }

    fn extend(&mut self, cells: &[Cell], out: &mut Vec<(Vec<u8>, Vec<u8>)>) {
        let Some((&cell, rest)) = cells.split_first() else {
            out.push((self.arrow.clone(), self.squig.clone()));
            return;
        };
        for v in self.choices(cell) {
            self.set(cell, v);
            if self.consistent() {
                self.extend(rest, out);
            }
        }
        self.set(cell, FREE);
    }

    /// Every table pair satisfying the axioms, split across workers on the
    /// first free cell.
    fn solve(n: usize, shape: Shape) -> Vec<(Vec<u8>, Vec<u8>)> {
        let start = Tables::forced(n, shape);
        let cells = start.cells();
        let Some((&first, rest)) = cells.split_first() else {
            return if start.consistent() { vec![(start.arrow, start.squig)] } else { Vec::new() };
        };
        start
            .choices(first)
            .into_par_iter()
            .flat_map_iter(|v| {
                let mut t = start.clone();
                t.set(first, v);
                let mut out = Vec::new();
                if t.consistent() {
                    t.extend(rest, &mut out);
                }
                out
            })
            .collect()
    }
}
