use std::collections::HashMap;
use std::fmt;

use serde::Serialize;

use super::{AlgebraSpec, Element, PseudoBciAlgebra};
use crate::error::{CapKind, Error, Result};
use crate::limits::Limits;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ValidateOptions {
    pub limits: Limits,
    /// Run the theorem-backed sanity checks after the axioms pass.
    pub cross_checks: bool,
}

impl Default for ValidateOptions {
    fn default() -> Self {
        ValidateOptions { limits: Limits::default(), cross_checks: true }
    }
}

/// The defining axioms of a pseudo-BCI algebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Axiom {
    /// `(x->y) ~> ((y->z) ~> (x->z)) = 1`
    ArrowTransitivity,
    /// `(x~>y) -> ((y~>z) -> (x~>z)) = 1`
    SquigTransitivity,
    /// `1 -> x = x`
    ArrowUnit,
    /// `1 ~> x = x`
    SquigUnit,
    /// `x->y = 1` and `y->x = 1` imply `x = y`
    Antisymmetry,
}

impl Axiom {
    pub fn formula(self) -> &'static str {
        match self {
            Axiom::ArrowTransitivity => "(x->y)~>((y->z)~>(x->z)) = 1",
            Axiom::SquigTransitivity => "(x~>y)->((y~>z)->(x~>z)) = 1",
            Axiom::ArrowUnit => "1->x = x",
            Axiom::SquigUnit => "1~>x = x",
            Axiom::Antisymmetry => "x->y = 1 and y->x = 1 imply x = y",
        }
    }

    fn variables(self) -> &'static [&'static str] {
        match self {
            Axiom::ArrowTransitivity | Axiom::SquigTransitivity => &["x", "y", "z"],
            Axiom::ArrowUnit | Axiom::SquigUnit => &["x"],
            Axiom::Antisymmetry => &["x", "y"],
        }
    }
}

/// One failing instance of an axiom.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub axiom: Axiom,
    /// Element names bound to the axiom's variables, in order.
    pub witness: Vec<String>,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} fails at ", self.axiom.formula())?;
        for (i, (var, val)) in self.axiom.variables().iter().zip(&self.witness).enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{var}={val}")?;
        }
        Ok(())
    }
}

pub fn validate(spec: &AlgebraSpec) -> Result<PseudoBciAlgebra> {
    validate_with(spec, &ValidateOptions::default())
}

/// Checks structure and every axiom instance, reporting all violations.
pub fn validate_with(spec: &AlgebraSpec, opts: &ValidateOptions) -> Result<PseudoBciAlgebra> {
    let n = spec.names.len();
    if n == 0 {
        return Err(Error::Structural("universe is empty".into()));
    }
    opts.limits.check(CapKind::Universe, n)?;

    let mut index = HashMap::with_capacity(n);
    for (i, name) in spec.names.iter().enumerate() {
        if name.is_empty() || name.chars().any(|c| c.is_whitespace() || c == '#' || c == '=' || c == ',') {
            return Err(Error::Structural(format!("invalid element name {name:?}")));
        }
        if index.insert(name.as_str(), Element::new(i)).is_some() {
            return Err(Error::Structural(format!("element {name:?} declared twice")));
        }
    }
    let unit = *index
        .get(spec.unit.as_str())
        .ok_or_else(|| Error::Structural(format!("unit {:?} is not a declared element", spec.unit)))?;

    let flatten = |label: &str, table: &[Vec<String>]| -> Result<Vec<Element>> {
        if table.len() != n {
            return Err(Error::Structural(format!("{label} table has {} rows, expected {n}", table.len())));
        }
        let mut flat = Vec::with_capacity(n * n);
        for (r, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(Error::Structural(format!(
                    "{label} table row {} has {} entries, expected {n}",
                    r + 1,
                    row.len()
                )));
            }
            for sym in row {
                let e = index
                    .get(sym.as_str())
                    .ok_or_else(|| Error::Structural(format!("{label} table uses undeclared symbol {sym:?}")))?;
                flat.push(*e);
            }
        }
        Ok(flat)
    };
    let arrow = flatten("arrow", &spec.arrow)?;
    let squig = flatten("squig", &spec.squig)?;

    from_tables(spec.names.clone(), unit, arrow, squig, opts.cross_checks)
}

/// Validates index-level tables. Used by the validator front end and by
/// constructions (quotients, restrictions, search) that already hold indices.
pub(crate) fn from_tables(
    names: Vec<String>,
    unit: Element,
    arrow: Vec<Element>,
    squig: Vec<Element>,
    cross_checks: bool,
) -> Result<PseudoBciAlgebra> {
    let n = names.len();
    let at = |t: &[Element], x: usize, y: usize| t[x * n + y].index();
    let u = unit.index();
    let mut violations = Vec::new();
    let witness = |xs: &[usize]| xs.iter().map(|&i| names[i].clone()).collect::<Vec<_>>();

    for x in 0..n {
        for y in 0..n {
            let xy = at(&arrow, x, y);
            let sxy = at(&squig, x, y);
            for z in 0..n {
                let inner = at(&squig, at(&arrow, y, z), at(&arrow, x, z));
                if at(&squig, xy, inner) != u {
                    violations.push(Violation { axiom: Axiom::ArrowTransitivity, witness: witness(&[x, y, z]) });
                }
                let inner = at(&arrow, at(&squig, y, z), at(&squig, x, z));
                if at(&arrow, sxy, inner) != u {
                    violations.push(Violation { axiom: Axiom::SquigTransitivity, witness: witness(&[x, y, z]) });
                }
            }
        }
    }
    for x in 0..n {
        if at(&arrow, u, x) != x {
            violations.push(Violation { axiom: Axiom::ArrowUnit, witness: witness(&[x]) });
        }
        if at(&squig, u, x) != x {
            violations.push(Violation { axiom: Axiom::SquigUnit, witness: witness(&[x]) });
        }
    }
    for x in 0..n {
        for y in x + 1..n {
            if at(&arrow, x, y) == u && at(&arrow, y, x) == u {
                violations.push(Violation { axiom: Axiom::Antisymmetry, witness: witness(&[x, y]) });
            }
        }
    }
    violations.sort_by_key(|a| a.axiom);
    if !violations.is_empty() {
        return Err(Error::AxiomViolations(violations));
    }

    let leq = arrow.iter().map(|&e| e == unit).collect();
    let algebra = PseudoBciAlgebra { names, unit, arrow, squig, leq, cross_checks };
    if cross_checks {
        sanity_suite(&algebra).map_err(Error::InternalInconsistency)?;
    }
    Ok(algebra)
}

/// Universal consequences of the axioms, checked over every tuple.
/// A failure here means the axiom checker above is wrong.
pub(crate) fn sanity_suite(a: &PseudoBciAlgebra) -> std::result::Result<(), String> {
    let one = a.unit();
    let fail = |item: &str, xs: &[Element]| {
        let names: Vec<_> = xs.iter().map(|&e| a.name(e)).collect();
        Err(format!("derived law `{item}` fails at ({})", names.join(", ")))
    };
    for x in a.elements() {
        if a.arrow(x, x) != one || a.squig(x, x) != one {
            return fail("x->x = x~>x = 1", &[x]);
        }
        if a.leq(one, x) && x != one {
            return fail("1 <= x implies x = 1", &[x]);
        }
        if a.arrow(x, one) != a.squig(x, one) {
            return fail("x->1 = x~>1", &[x]);
        }
        for y in a.elements() {
            let (xy, sxy) = (a.arrow(x, y), a.squig(x, y));
            if !a.leq(x, a.squig(xy, y)) || !a.leq(x, a.arrow(sxy, y)) {
                return fail("x <= (x->y)~>y and x <= (x~>y)->y", &[x, y]);
            }
            if (xy == one) != (sxy == one) {
                return fail("x->y = 1 iff x~>y = 1", &[x, y]);
            }
            if a.to_unit(xy) != a.squig(a.to_unit(x), a.to_unit(y)) {
                return fail("(x->y)->1 = (x->1)~>(y->1)", &[x, y]);
            }
            if a.squig(sxy, one) != a.arrow(a.squig(x, one), a.squig(y, one)) {
                return fail("(x~>y)~>1 = (x~>1)->(y~>1)", &[x, y]);
            }
            for z in a.elements() {
                if a.leq(x, a.arrow(y, z)) != a.leq(y, a.squig(x, z)) {
                    return fail("x <= y->z iff y <= x~>z", &[x, y, z]);
                }
                if a.leq(x, y) {
                    if !a.leq(a.arrow(y, z), a.arrow(x, z)) || !a.leq(a.squig(y, z), a.squig(x, z)) {
                        return fail("x <= y implies y->z <= x->z and y~>z <= x~>z", &[x, y, z]);
                    }
                    if !a.leq(a.arrow(z, x), a.arrow(z, y)) || !a.leq(a.squig(z, x), a.squig(z, y)) {
                        return fail("x <= y implies z->x <= z->y and z~>x <= z~>y", &[x, y, z]);
                    }
                    if a.leq(y, z) && !a.leq(x, z) {
                        return fail("x <= y and y <= z imply x <= z", &[x, y, z]);
                    }
                }
                if !a.leq(xy, a.arrow(a.arrow(z, x), a.arrow(z, y)))
                    || !a.leq(sxy, a.squig(a.squig(z, x), a.squig(z, y)))
                {
                    return fail("x->y <= (z->x)->(z->y) and x~>y <= (z~>x)~>(z~>y)", &[x, y, z]);
                }
                if a.arrow(x, a.squig(y, z)) != a.squig(y, a.arrow(x, z)) {
                    return fail("x->(y~>z) = y~>(x->z)", &[x, y, z]);
                }
            }
        }
    }
    Ok(())
}
