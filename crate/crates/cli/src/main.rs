use std::fmt::Write as _;
use std::io::Read as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use pbci::derivations::{map_properties, satisfies, DerivationType, Kind, TheoremReport, TheoremStatus};
use pbci::io::{self, Format, ParseError};
use pbci::search::parse_requirement;
use pbci::{
    AlgebraSpec, DerivationClass, ElementSet, EnumerateOptions, Error, Filter, Limits, PseudoBciAlgebra, SearchQuery,
    ValidateOptions,
};

#[derive(Parser)]
#[command(name = "pbci", version, about = "Finite pseudo-BCI algebras: derivations, deductive systems, model search")]
struct Cli {
    /// Skip the theorem-backed consistency checks run during validation.
    #[arg(long, global = true)]
    no_cross_checks: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    Implicative,
    Symmetric,
}

#[derive(Clone, Copy, ValueEnum)]
enum TypeArg {
    I,
    Ii,
    Iii,
    Iv,
}

#[derive(Subcommand)]
enum Command {
    /// Validate and classify every algebra in FILE.
    Check { file: PathBuf },
    /// Full analysis report.
    Analyze {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Enumerate one derivation class.
    Derivations {
        file: PathBuf,
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long = "type", value_enum)]
        dtype: TypeArg,
        /// Only maps with d1 = 1.
        #[arg(long)]
        regular: bool,
        /// Allow types III and IV on algebras that are not pseudo-BCK.
        #[arg(long)]
        force: bool,
    },
    /// List the deductive systems.
    Ds { file: PathBuf },
    /// Quotient by the pseudo-BCK part or by a listed subset.
    Quotient {
        file: PathBuf,
        /// Only `K` is accepted.
        #[arg(long, conflicts_with = "by_file", required_unless_present = "by_file")]
        by: Option<String>,
        /// File holding the element names of the subset.
        #[arg(long)]
        by_file: Option<PathBuf>,
    },
    /// Property record and class memberships of one self-map.
    Map {
        file: PathBuf,
        /// Images in element order, or `x=y` pairs separated by commas.
        #[arg(long)]
        map: String,
    },
    /// Run the theorem suite on every algebra in FILE.
    Verify {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Generate algebras of a given size.
    Search {
        #[arg(long)]
        size: usize,
        /// Required property: `NAME`, `!NAME` or `NAME=false`. Repeatable.
        #[arg(long = "pred")]
        predicates: Vec<String>,
        #[arg(long)]
        limit: Option<usize>,
        #[arg(long)]
        modulo_iso: bool,
    },
}

/// Exit status 1: violations or theorem failures. Exit status 2: bad input.
enum Failure {
    Failed(String),
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::AxiomViolations(_) | Error::InternalInconsistency(_) => Failure::Failed(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

impl From<ParseError> for Failure {
    fn from(e: ParseError) -> Self {
        Failure::Usage(format!("parse error: {e}"))
    }
}

type Outcome = Result<String, Failure>;

struct Ctx {
    limits: Limits,
    cross_checks: bool,
}

impl Ctx {
    fn read(&self, path: &Path) -> Result<String, Failure> {
        let mut text = String::new();
        let res = if path == Path::new("-") {
            std::io::stdin().read_to_string(&mut text).map(|_| ())
        } else {
            std::fs::read_to_string(path).map(|t| text = t)
        };
        res.map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
        Ok(text)
    }

    fn specs(&self, path: &Path) -> Result<Vec<AlgebraSpec>, Failure> {
        let specs = io::parse_algebras(&self.read(path)?)?;
        if specs.is_empty() {
            return Err(Failure::Usage(format!("{}: no algebra found", path.display())));
        }
        Ok(specs)
    }

    fn validate(&self, spec: &AlgebraSpec) -> Result<PseudoBciAlgebra, Error> {
        pbci::validate_with(spec, &ValidateOptions { limits: self.limits, cross_checks: self.cross_checks })
    }

    fn single(&self, path: &Path) -> Result<PseudoBciAlgebra, Failure> {
        let specs = self.specs(path)?;
        if specs.len() > 1 {
            return Err(Failure::Usage(format!("{}: expected one algebra, found {}", path.display(), specs.len())));
        }
        self.validate(&specs[0]).map_err(|e| match e {
            Error::AxiomViolations(vs) => {
                let lines: Vec<String> = vs.iter().map(|v| format!("violation: {v}")).collect();
                Failure::Failed(format!("not a pseudo-BCI algebra\n{}", lines.join("\n")))
            }
            other => other.into(),
        })
    }
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn braces(a: &PseudoBciAlgebra, s: &ElementSet) -> String {
    format!("{{{}}}", a.names_of(s).join(", "))
}

fn check(ctx: &Ctx, file: &Path) -> Outcome {
    let specs = ctx.specs(file)?;
    let mut out = String::new();
    let mut failed = false;
    for (i, spec) in specs.iter().enumerate() {
        if specs.len() > 1 {
            let _ = writeln!(out, "## algebra {}", i + 1);
        }
        let a = match ctx.validate(spec) {
            Ok(a) => a,
            Err(Error::AxiomViolations(vs)) => {
                failed = true;
                let _ = writeln!(out, "invalid: {} axiom violation(s)", vs.len());
                for v in &vs {
                    let _ = writeln!(out, "  {v}");
                }
                continue;
            }
            Err(e) => return Err(e.into()),
        };
        let c = a.classify()?;
        let kind = match (c.is_bci, c.is_pseudo_bck) {
            (true, true) => "BCK-algebra",
            (true, false) => "BCI-algebra",
            (false, true) => "pseudo-BCK algebra",
            (false, false) => "proper pseudo-BCI algebra",
        };
        let _ = writeln!(out, "valid: {kind}, {} elements", a.size());
        let _ = writeln!(out, "p-semisimple: {}", yes(c.is_p_semisimple));
        for ch in &c.p_semisimple_crosscheck {
            let _ = writeln!(out, "  {:<22} {:<5} {}", ch.id, ch.holds, ch.statement);
        }
        let _ = writeln!(out, "commutative: {}", yes(c.is_commutative));
        let _ = writeln!(out, "medial: arrow {} squig {}", yes(c.is_medial_arrow), yes(c.is_medial_squig));
        let _ = writeln!(out, "At(A) = {}", braces(&a, &a.atoms()?));
        let _ = writeln!(out, "K(A) = {}", braces(&a, &a.bck_part()?));
    }
    if failed {
        Err(Failure::Failed(out.trim_end().to_owned()))
    } else {
        Ok(out)
    }
}

fn derivations(ctx: &Ctx, file: &Path, kind: KindArg, dtype: TypeArg, regular: bool, force: bool) -> Outcome {
    let a = ctx.single(file)?;
    let kind = match kind {
        KindArg::Implicative => Kind::Implicative,
        KindArg::Symmetric => Kind::Symmetric,
    };
    let dtype = match dtype {
        TypeArg::I => DerivationType::I,
        TypeArg::Ii => DerivationType::II,
        TypeArg::Iii => DerivationType::III,
        TypeArg::Iv => DerivationType::IV,
    };
    let cls = DerivationClass::new(kind, dtype)?;
    let filter = if regular { Filter::Regular } else { Filter::All };
    let maps = pbci::enumerate(&a, cls, filter, &EnumerateOptions { force, limits: ctx.limits })?;
    let mut out = String::new();
    if cls.requires_pseudo_bck() && !a.is_pseudo_bck() {
        let _ = writeln!(out, "note: {cls} is defined for pseudo-BCK algebras only; this algebra is not one");
    }
    let _ = writeln!(out, "{cls}{}: {} map(s)", if regular { " (regular)" } else { "" }, maps.len());
    for (i, d) in maps.iter().enumerate() {
        let tag = if d.apply(a.unit()) == a.unit() { "" } else { "  not regular" };
        let _ = writeln!(out, "d{} = {}{tag}", i + 1, d.display(&a));
    }
    Ok(out)
}

fn ds(ctx: &Ctx, file: &Path) -> Outcome {
    let a = ctx.single(file)?;
    let k = a.bck_part()?;
    let mut out = String::new();
    for d in a.deductive_systems(&ctx.limits)? {
        let mut tags = Vec::new();
        if d.compatible {
            tags.push("compatible");
        }
        if d.closed {
            tags.push("closed");
        }
        if d.members == k {
            tags.push("K(A)");
        }
        let line = format!("{} {}", braces(&a, &d.members), tags.join(" "));
        let _ = writeln!(out, "{}", line.trim_end());
    }
    Ok(out)
}

fn quotient(ctx: &Ctx, file: &Path, by: Option<&str>, by_file: Option<&Path>) -> Outcome {
    let a = ctx.single(file)?;
    let set = match (by, by_file) {
        (Some("K"), None) => a.bck_part()?,
        (Some(other), None) => return Err(Failure::Usage(format!("--by accepts only K, got {other:?}"))),
        (None, Some(path)) => {
            let text = ctx.read(path)?;
            let mut set = ElementSet::new();
            for name in text.split(|c: char| c.is_whitespace() || c == ',').filter(|s| !s.is_empty()) {
                let e = a.element(name).ok_or_else(|| Failure::Usage(format!("unknown element `{name}`")))?;
                set.insert(e);
            }
            set
        }
        _ => return Err(Failure::Usage("give exactly one of --by and --by-file".into())),
    };
    let q = a.quotient(&set)?;
    Ok(io::write_algebra(&q.to_spec()))
}

fn map(ctx: &Ctx, file: &Path, spec: &str) -> Outcome {
    let a = ctx.single(file)?;
    let d = io::parse_selfmap(spec, &a)?;
    let p = map_properties(&a, &d);
    let mut out = String::new();
    let set = |v: &[String]| format!("{{{}}}", v.join(", "));
    let _ = writeln!(out, "map: {}", d.display(&a));
    let _ = writeln!(out, "regular: {}", yes(p.regular));
    let _ = writeln!(out, "isotone: {}", yes(p.isotone));
    let _ = writeln!(out, "idempotent: {}", yes(p.idempotent));
    let _ = writeln!(out, "Ker(d) = {}", set(&p.kernel));
    let _ = writeln!(out, "Im(d) = {}", set(&p.image));
    let _ = writeln!(out, "kernel is a subalgebra: {}", yes(p.kernel_is_subalgebra));
    let _ = writeln!(out, "kernel inside K(A): {}", yes(p.kernel_in_bck_part));
    let _ = writeln!(out, "image inside At(A): {}", yes(p.image_in_atoms));
    let _ = writeln!(out, "d(K(A)) inside K(A): {}", yes(p.maps_bck_into_bck));
    let _ = writeln!(out, "d(At(A)) inside At(A): {}", yes(p.maps_atoms_into_atoms));
    let classes: Vec<String> = DerivationClass::ALL
        .into_iter()
        .filter(|c| !c.requires_pseudo_bck() || a.is_pseudo_bck())
        .filter_map(|c| match satisfies(&a, &d, c, false) {
            Ok(true) => Some(Ok(c.to_string())),
            Ok(false) => None,
            Err(e) => Some(Err(e)),
        })
        .collect::<Result<_, _>>()?;
    let _ = writeln!(out, "classes: {}", if classes.is_empty() { "none".into() } else { classes.join(" ") });
    Ok(out)
}

fn render_theorems(out: &mut String, r: &TheoremReport) {
    for e in &r.entries {
        let _ = match &e.status {
            TheoremStatus::Passed => writeln!(out, "pass  {} ({} instances)", e.id, e.instances),
            TheoremStatus::Failed { witness } => writeln!(out, "FAIL  {}: {}", e.id, witness),
            TheoremStatus::Skipped { reason } => writeln!(out, "skip  {}: {}", e.id, reason),
        };
    }
    let _ = writeln!(out, "{} passed, {} failed, {} skipped", r.passed, r.failed, r.skipped);
}

fn verify(ctx: &Ctx, file: &Path, json: bool) -> Outcome {
    let specs = ctx.specs(file)?;
    let mut reports = Vec::with_capacity(specs.len());
    for spec in &specs {
        let a = ctx.validate(spec)?;
        reports.push(pbci::theorem_suite(&a, &ctx.limits)?);
    }
    let failed = reports.iter().any(|r| !r.all_passed());
    let out = if json {
        let mut s = if reports.len() == 1 {
            serde_json::to_string_pretty(&reports[0])
        } else {
            serde_json::to_string_pretty(&reports)
        }
        .expect("report serializes");
        s.push('\n');
        s
    } else {
        let mut s = String::new();
        for (i, r) in reports.iter().enumerate() {
            if reports.len() > 1 {
                let _ = writeln!(s, "## algebra {}", i + 1);
            }
            render_theorems(&mut s, r);
        }
        if reports.len() > 1 {
            let bad = reports.iter().filter(|r| !r.all_passed()).count();
            let _ = writeln!(s, "{} algebra(s), {} with failures", reports.len(), bad);
        }
        s
    };
    if failed {
        Err(Failure::Failed(out.trim_end().to_owned()))
    } else {
        Ok(out)
    }
}

fn search(ctx: &Ctx, size: usize, predicates: &[String], limit: Option<usize>, modulo_iso: bool) -> Outcome {
    let predicates = predicates.iter().map(|p| parse_requirement(p)).collect::<Result<Vec<_>, _>>()?;
    let q = SearchQuery { size, predicates, limit, modulo_iso, cross_checks: ctx.cross_checks };
    let found = pbci::search(&q, &ctx.limits)?;
    let blocks: Vec<String> = found.iter().map(io::write_algebra).collect();
    eprintln!("{} algebra(s)", found.len());
    Ok(blocks.join("\n"))
}

fn run(cli: Cli) -> Outcome {
    let ctx = Ctx { limits: Limits::from_env()?, cross_checks: !cli.no_cross_checks };
    match &cli.command {
        Command::Check { file } => check(&ctx, file),
        Command::Analyze { file, json } => {
            let a = ctx.single(file)?;
            let r = io::analyze(&a, &ctx.limits)?;
            Ok(io::render_report(&r, if *json { Format::Json } else { Format::Text }))
        }
        Command::Derivations { file, kind, dtype, regular, force } => {
            derivations(&ctx, file, *kind, *dtype, *regular, *force)
        }
        Command::Ds { file } => ds(&ctx, file),
        Command::Quotient { file, by, by_file } => quotient(&ctx, file, by.as_deref(), by_file.as_deref()),
        Command::Map { file, map: spec } => map(&ctx, file, spec),
        Command::Verify { file, json } => verify(&ctx, file, *json),
        Command::Search { size, predicates, limit, modulo_iso } => search(&ctx, *size, predicates, *limit, *modulo_iso),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Failed(msg)) => {
            println!("{msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
