use std::fmt::Write as _;

use serde::Serialize;

use crate::algebra::{AlgebraSpec, ClassificationReport, PseudoBciAlgebra};
use crate::derivations::{
    map_properties, monoid_report, phi_map, solve, theorem_suite, DerivationClass, MapPropertyRecord, MonoidReport,
    SelfMap, TheoremReport, TheoremStatus,
};
use crate::error::{CapKind, Result};
use crate::limits::Limits;

pub const TOOL_VERSION: &str = concat!("pbci ", env!("CARGO_PKG_VERSION"));

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BranchRecord {
    pub atom: String,
    pub members: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DsRecord {
    pub members: Vec<String>,
    pub compatible: bool,
    pub closed: bool,
    pub is_bck_part: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DerivationRecord {
    /// `d1`, `d2`, … in lexicographic order of images across every class.
    pub label: String,
    pub images: Vec<String>,
    pub properties: MapPropertyRecord,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassDerivations {
    pub class: String,
    pub maps: Vec<String>,
    pub regular: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MonoidRecord {
    /// Labels of `IDOP(A)`, the maps of both implicative types I and II.
    pub maps: Vec<String>,
    #[serde(flatten)]
    pub report: MonoidReport,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AnalysisReport {
    pub tool: &'static str,
    pub algebra: AlgebraSpec,
    pub size: usize,
    pub classification: ClassificationReport,
    pub atoms: Vec<String>,
    pub bck_part: Vec<String>,
    pub branches: Vec<BranchRecord>,
    pub deductive_systems: Vec<DsRecord>,
    pub phi_map: String,
    pub derivations: Vec<DerivationRecord>,
    pub classes: Vec<ClassDerivations>,
    pub monoid: Option<MonoidRecord>,
    pub theorems: TheoremReport,
}

/// Everything the library can say about `a`. Types III and IV are included
/// only on pseudo-BCK algebras.
pub fn analyze(a: &PseudoBciAlgebra, limits: &Limits) -> Result<AnalysisReport> {
    limits.check(CapKind::Derivations, a.size())?;
    let classification = a.classify()?;
    let atoms = a.atoms()?;
    let k = a.bck_part()?;
    let branches = a
        .branches()?
        .into_iter()
        .map(|b| BranchRecord { atom: a.name(b.atom).to_owned(), members: a.names_of(&b.members) })
        .collect();
    let deductive_systems = a
        .deductive_systems(limits)?
        .into_iter()
        .map(|d| DsRecord {
            members: a.names_of(&d.members),
            compatible: d.compatible,
            closed: d.closed,
            is_bck_part: d.members == k,
        })
        .collect();

    let classes: Vec<DerivationClass> =
        DerivationClass::ALL.into_iter().filter(|c| !c.requires_pseudo_bck() || a.is_pseudo_bck()).collect();
    let found: Vec<Vec<SelfMap>> = classes.iter().map(|c| solve(a, &c.laws(), false)).collect();
    let mut all: Vec<SelfMap> = found.iter().flatten().cloned().collect();
    all.sort();
    all.dedup();
    let label = |d: &SelfMap| format!("d{}", all.binary_search(d).expect("listed") + 1);
    let derivations = all
        .iter()
        .map(|d| DerivationRecord {
            label: label(d),
            images: d.images().iter().map(|&e| a.name(e).to_owned()).collect(),
            properties: map_properties(a, d),
        })
        .collect();
    let class_records = classes
        .iter()
        .zip(&found)
        .map(|(c, maps)| ClassDerivations {
            class: c.to_string(),
            maps: maps.iter().map(label).collect(),
            regular: maps.iter().filter(|d| d.apply(a.unit()) == a.unit()).map(label).collect(),
        })
        .collect();

    let idop: Vec<SelfMap> = found[0].iter().filter(|d| found[1].contains(d)).cloned().collect();
    let monoid = if idop.is_empty() {
        None
    } else {
        Some(MonoidRecord { maps: idop.iter().map(label).collect(), report: monoid_report(&idop)? })
    };
    let phi = phi_map(a)?;

    Ok(AnalysisReport {
        tool: TOOL_VERSION,
        algebra: a.to_spec(),
        size: a.size(),
        classification,
        atoms: a.names_of(&atoms),
        bck_part: a.names_of(&k),
        branches,
        deductive_systems,
        phi_map: label(&phi.map),
        derivations,
        classes: class_records,
        monoid,
        theorems: theorem_suite(a, limits)?,
    })
}

pub fn render_report(r: &AnalysisReport, format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(r).expect("report serializes");
            s.push('\n');
            s
        }
        Format::Text => render_text(r),
    }
}

fn kind_of(c: &ClassificationReport) -> &'static str {
    match (c.is_bci, c.is_pseudo_bck) {
        (true, true) => "BCK-algebra",
        (true, false) => "BCI-algebra",
        (false, true) => "pseudo-BCK algebra",
        (false, false) => "proper pseudo-BCI algebra",
    }
}

fn braces(v: &[String]) -> String {
    format!("{{{}}}", v.join(", "))
}

fn render_text(r: &AnalysisReport) -> String {
    let mut s = String::new();
    let c = &r.classification;
    let _ = writeln!(s, "{}: {} elements ({}), unit {}", kind_of(c), r.size, r.algebra.names.join(" "), r.algebra.unit);
    let flag = |b: bool| if b { "yes" } else { "no" };
    let _ = writeln!(
        s,
        "p-semisimple: {}  commutative: {}  medial: {}/{}",
        flag(c.is_p_semisimple),
        flag(c.is_commutative),
        flag(c.is_medial_arrow),
        flag(c.is_medial_squig)
    );
    let _ = writeln!(s, "At(A) = {}", braces(&r.atoms));
    let _ = writeln!(s, "K(A) = {}", braces(&r.bck_part));
    for b in &r.branches {
        let _ = writeln!(s, "  branch of {}: {}", b.atom, braces(&b.members));
    }
    let _ = writeln!(s, "deductive systems:");
    for d in &r.deductive_systems {
        let mut tags = Vec::new();
        if d.compatible {
            tags.push("compatible");
        }
        if d.closed {
            tags.push("closed");
        }
        if d.is_bck_part {
            tags.push("K(A)");
        }
        let _ = writeln!(s, "  {} {}", braces(&d.members), tags.join(" "));
    }
    let _ = writeln!(s, "derivations:");
    for d in &r.derivations {
        let p = &d.properties;
        let mut tags = vec![if p.regular { "regular" } else { "not regular" }];
        if p.isotone {
            tags.push("isotone");
        }
        if p.idempotent {
            tags.push("idempotent");
        }
        let _ = writeln!(s, "  {} = {}  {}; Ker = {}", d.label, d.images.join(" "), tags.join(", "), braces(&p.kernel));
    }
    let _ = writeln!(s, "  d_φ = {}", r.phi_map);
    for c in &r.classes {
        let _ = writeln!(s, "  {}: {} regular {}", c.class, braces(&c.maps), braces(&c.regular));
    }
    if let Some(m) = &r.monoid {
        let _ = writeln!(s, "IDOP(A) = {} under composition:", braces(&m.maps));
        for (i, row) in m.report.composition_table.iter().enumerate() {
            let cells: Vec<&str> = row.iter().map(|c| c.map_or("-", |j| m.maps[j].as_str())).collect();
            let _ = writeln!(s, "  {} ∘ _ : {}", m.maps[i], cells.join(" "));
        }
        let _ = writeln!(
            s,
            "  closed: {}  commutative: {}  identity: {}",
            flag(m.report.closed_under_composition),
            flag(m.report.commutative),
            flag(m.report.has_identity)
        );
    }
    let t = &r.theorems;
    let _ = writeln!(s, "theorems: {} passed, {} failed, {} skipped", t.passed, t.failed, t.skipped);
    for e in &t.entries {
        if let TheoremStatus::Failed { witness } = &e.status {
            let _ = writeln!(s, "  FAILED {}: {}", e.id, witness);
        }
    }
    s
}
