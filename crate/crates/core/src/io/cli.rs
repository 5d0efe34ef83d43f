//! The `homhopf` command line.
//!
//! Exit status: 0 when every requested check passes, 1 when a check fails
//! or a construction is rejected, 2 on usage, parse or validation errors.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::double::{double_report, drinfeld_double_with_limit, dual_algebra, dual_report, DEFAULT_DIMENSION_LIMIT};
use crate::error::{Error, Result};
use crate::hom::{
    check_hom_algebra, check_hom_bialgebra, check_hom_coalgebra, check_hom_hopf, check_quasitriangular, yau_twist,
};
use crate::io::catalog::{catalog, catalog_get};
use crate::io::convert::*;
use crate::io::format::{parse_file, serialize, write_file, Document, StructureFile};
use crate::modules::{
    check_bimodule_hom_algebra, check_comodule, check_module, check_module_hom_algebra, check_right_module_hom_algebra,
    check_yetter_drinfeld,
};
use crate::report::AxiomReport;
use crate::smash::{diagonal_crossed_product, lr_smash, right_smash_product, smash_product, two_sided_smash};
use crate::twisted::{check_lr_data, check_twisting_map, lr_twisted_tensor_product, twisted_tensor_product, TwistingMap};

#[derive(Parser, Debug)]
#[command(name = "homhopf", version, about = "Exact checks and constructions for Hom-Hopf algebras")]
struct Cli {
    /// Worker threads for check sweeps.
    #[arg(long, global = true, env = "HOMHOPF_JOBS")]
    jobs: Option<usize>,
    /// Report format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Suite {
    Algebra,
    Coalgebra,
    Bialgebra,
    Hopf,
    Qt,
    Module,
    Yd,
    All,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum ProductKind {
    Tensor,
    Twisted,
    LrTwisted,
    SmashLeft,
    SmashRight,
    TwoSided,
    LrSmash,
    Diagonal,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check every structure in a file (or `file#name`, or a catalog name).
    Check {
        input: String,
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
    },
    /// Yau-twist a structure along an endomorphism given by its `alpha` block.
    Twist {
        input: String,
        #[arg(long)]
        endo: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Build a product algebra.
    Product {
        #[arg(long, value_enum)]
        kind: ProductKind,
        #[arg(required = true)]
        inputs: Vec<String>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// The dual `H*_{p,q}` as a bimodule Hom-algebra.
    Dual {
        input: String,
        #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
        p: i32,
        #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
        q: i32,
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[arg(long)]
        verify: bool,
    },
    /// The Drinfeld double with its R-matrix.
    Double {
        input: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[arg(long)]
        verify: bool,
        /// Largest accepted `dim H`.
        #[arg(long, default_value_t = DEFAULT_DIMENSION_LIMIT)]
        limit: usize,
    },
    /// List the built-in structures, or write them to a directory.
    Catalog {
        #[arg(long)]
        export: Option<PathBuf>,
    },
}

/// What a command produced.
struct Outcome {
    reports: Vec<(String, AxiomReport)>,
    messages: Vec<String>,
    /// A document to print when no output path was given.
    stdout_doc: Option<Document>,
}

impl Outcome {
    fn new() -> Outcome {
        Outcome { reports: Vec::new(), messages: Vec::new(), stdout_doc: None }
    }

    fn passed(&self) -> bool {
        self.reports.iter().all(|(_, r)| r.passed())
    }
}

/// Runs the CLI on `args` (including the program name) and returns the exit
/// status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { write!(out, "{text}") } else { write!(err, "{text}") };
            return code;
        }
    };
    let format = cli.format;
    let result = match cli.jobs {
        Some(0) => {
            let _ = writeln!(err, "error: --jobs must be at least 1");
            return 2;
        }
        Some(n) => match rayon::ThreadPoolBuilder::new().num_threads(n).build() {
            Ok(pool) => pool.install(|| execute(cli.command)),
            Err(e) => {
                let _ = writeln!(err, "error: {e}");
                return 2;
            }
        },
        None => execute(cli.command),
    };
    match result {
        Ok(outcome) => {
            emit(&outcome, format, out);
            if outcome.passed() {
                0
            } else {
                if let Some((name, r)) = outcome.reports.iter().find(|(_, r)| !r.passed()) {
                    let _ = writeln!(err, "first failure in {name}: {}", r.first_failure_summary());
                }
                1
            }
        }
        Err(e) => {
            let (code, report) = classify(e, err);
            if let Some(r) = report {
                let outcome = Outcome { reports: vec![(r.subject.clone(), r)], messages: vec![], stdout_doc: None };
                emit(&outcome, format, out);
            }
            code
        }
    }
}

fn classify(e: Error, err: &mut dyn Write) -> (i32, Option<AxiomReport>) {
    let _ = writeln!(err, "error: {e}");
    match e {
        Error::Parse { .. }
        | Error::Validation(_)
        | Error::UnknownStructure(_)
        | Error::Io(_)
        | Error::MissingData(_)
        | Error::DimensionTooLarge { .. } => {
            (2, None)
        }
        other => (1, carried_report(other)),
    }
}

fn carried_report(e: Error) -> Option<AxiomReport> {
    match e {
        Error::PrerequisiteFailed { report, .. }
        | Error::NotAnEndomorphism { report }
        | Error::IncompatibleEndomorphisms { report }
        | Error::BraidConditionFailed { report }
        | Error::UnitalActionMissing { report }
        | Error::TwistorCheckFailed { report }
        | Error::CompatibilityFailed { report }
        | Error::QtCheckFailed { report } => Some(*report),
        _ => None,
    }
}

fn emit(o: &Outcome, format: Format, out: &mut dyn Write) {
    match format {
        Format::Text => {
            for m in &o.messages {
                let _ = writeln!(out, "{m}");
            }
            for (name, r) in &o.reports {
                let _ = writeln!(out, "== {name}");
                let _ = write!(out, "{}", r.render_text());
            }
            if !o.reports.is_empty() {
                let _ = writeln!(out, "result: {}", if o.passed() { "PASS" } else { "FAIL" });
            }
            if let Some(d) = &o.stdout_doc {
                let _ = write!(out, "{}", serialize(d));
            }
        }
        Format::Json => {
            let reports: Vec<Value> = o
                .reports
                .iter()
                .map(|(name, r)| {
                    let mut v = r.to_json();
                    v["structure"] = json!(name);
                    v
                })
                .collect();
            let mut v = json!({ "passed": o.passed(), "reports": reports, "messages": o.messages });
            if let Some(d) = &o.stdout_doc {
                v["document"] = serde_json::from_str(&serialize(d)).expect("serialized documents are JSON");
            }
            let _ = writeln!(out, "{}", serde_json::to_string_pretty(&v).expect("JSON"));
        }
    }
}

/// A loaded input: its document and the selected structure.
struct Input {
    doc: Document,
    name: Option<String>,
}

impl Input {
    fn selected(&self) -> Result<&StructureFile> {
        match &self.name {
            Some(n) => self.doc.get(n).ok_or_else(|| Error::UnknownStructure(n.clone())),
            None => self.doc.structures.last().ok_or_else(|| Error::Validation(vec!["empty document".into()])),
        }
    }
}

/// `path`, `path#name`, or a catalog name.
fn load(spec: &str) -> Result<Input> {
    let (path, name) = match spec.rsplit_once('#') {
        Some((p, n)) => (p, Some(n.to_string())),
        None => (spec, None),
    };
    if Path::new(path).exists() {
        let doc = parse_file(Path::new(path))?;
        return Ok(Input { doc, name });
    }
    match catalog_get(path) {
        Ok(h) => Ok(Input { doc: Document::single(hopf_to_file(path, &h)), name: Some(path.to_string()) }),
        Err(_) => Err(Error::Io(std::io::Error::new(std::io::ErrorKind::NotFound, format!("{path}: no such file or catalog entry")))),
    }
}

fn finish(doc: Document, output: Option<PathBuf>, outcome: &mut Outcome, print_if_absent: bool) -> Result<()> {
    match output {
        Some(p) => {
            write_file(&doc, &p)?;
            outcome.messages.push(format!("wrote {}", p.display()));
        }
        None if print_if_absent => outcome.stdout_doc = Some(doc),
        None => {}
    }
    Ok(())
}

fn execute(cmd: Command) -> Result<Outcome> {
    let mut o = Outcome::new();
    match cmd {
        Command::Check { input, suite } => {
            let inp = load(&input)?;
            let targets: Vec<&StructureFile> = match &inp.name {
                Some(_) => vec![inp.selected()?],
                None => inp.doc.structures.iter().collect(),
            };
            for s in targets {
                for r in check_structure(&inp.doc, s, suite)? {
                    o.reports.push((s.name.clone(), r));
                }
            }
            if o.reports.is_empty() {
                return Err(Error::Validation(vec![format!("no structure in `{input}` supports this suite")]));
            }
        }
        Command::Twist { input, endo, output } => {
            let inp = load(&input)?;
            let s = inp.selected()?;
            let e = load(&endo)?;
            let b = e.selected()?.alpha.clone().ok_or_else(|| Error::Validation(vec!["endomorphism file has no `alpha`".into()]))?;
            let name = format!("{}-twisted", s.name);
            let twisted = match kind(s)? {
                Kind::Hopf => hopf_to_file(&name, &yau_twist(&file_hopf(s)?, &b)?),
                Kind::Bialgebra => bialgebra_to_file(&name, &yau_twist(&file_bialgebra(s)?, &b)?),
                Kind::Algebra => algebra_to_file(&name, &yau_twist(&file_algebra(s)?, &b)?),
                Kind::Coalgebra => {
                    let c = yau_twist(&file_coalgebra(s)?, &b)?;
                    let mut f = StructureFile::empty(&name, c.field(), c.dim());
                    f.delta = Some(c.delta().clone());
                    f.alpha = Some(c.alpha().clone());
                    f.counit = c.counit().map(<[_]>::to_vec);
                    f
                }
                k => return Err(Error::Validation(vec![format!("cannot twist a {}", k.as_str())])),
            };
            finish(Document::single(twisted), output, &mut o, true)?;
        }
        Command::Product { kind: k, inputs, output } => {
            let (name, product) = build_product(k, &inputs)?;
            finish(Document::single(algebra_to_file(&name, &product)), output, &mut o, true)?;
        }
        Command::Dual { input, p, q, output, verify } => {
            let inp = load(&input)?;
            let s = inp.selected()?;
            let h = Arc::new(file_hopf(s)?);
            let d = dual_algebra(h.clone(), p, q)?;
            if verify {
                o.reports.push((format!("{}-dual", s.name), dual_report(&d)?));
            }
            let doc = Document {
                structures: vec![
                    hopf_to_file(&s.name, &h),
                    bimodule_algebra_to_file(&format!("{}-dual", s.name), &s.name, d.bimodule_algebra()),
                ],
            };
            finish(doc, output, &mut o, !verify)?;
        }
        Command::Double { input, output, verify, limit } => {
            let inp = load(&input)?;
            let s = inp.selected()?;
            let h = Arc::new(file_hopf(s)?);
            let d = drinfeld_double_with_limit(h, limit)?;
            let name = format!("D({})", s.name);
            if verify {
                o.reports.push((name.clone(), double_report(&d)?));
            }
            let mut f = hopf_to_file(&name, d.hopf());
            f.r_matrix = Some(r_matrix_block(d.r_matrix()));
            finish(Document::single(f), output, &mut o, !verify)?;
        }
        Command::Catalog { export } => {
            for (name, h) in catalog() {
                o.messages.push(format!("{name}\tdim {}\tover {}", h.dim(), h.field().name()));
                if let Some(dir) = &export {
                    std::fs::create_dir_all(dir)?;
                    write_file(&Document::single(hopf_to_file(name, &h)), &dir.join(format!("{name}.json")))?;
                }
            }
        }
    }
    Ok(o)
}

/// Turns report-carrying errors into their (failing) report.
fn as_report(r: Result<AxiomReport>) -> Result<AxiomReport> {
    match r {
        Ok(r) => Ok(r),
        Err(e) => match e {
            Error::PrerequisiteFailed { report, .. } | Error::CompatibilityFailed { report } => Ok(*report),
            other => Err(other),
        },
    }
}

fn check_structure(doc: &Document, s: &StructureFile, suite: Suite) -> Result<Vec<AxiomReport>> {
    use Suite::*;
    let k = kind(s)?;
    let wants = |x: Suite| suite == x || suite == All;
    let mut out = Vec::new();
    let algebraic = matches!(k, Kind::Algebra | Kind::Bialgebra | Kind::Hopf);
    let coalgebraic = matches!(k, Kind::Coalgebra | Kind::Bialgebra | Kind::Hopf);
    match suite {
        Algebra if algebraic => out.push(check_hom_algebra(&file_algebra(s)?)),
        Coalgebra if coalgebraic => out.push(check_hom_coalgebra(&file_coalgebra(s)?)),
        Bialgebra if matches!(k, Kind::Bialgebra | Kind::Hopf) => out.push(as_report(check_hom_bialgebra(&file_bialgebra(s)?))?),
        _ => {}
    }
    if suite == All {
        match k {
            Kind::Algebra => out.push(check_hom_algebra(&file_algebra(s)?)),
            Kind::Coalgebra => out.push(check_hom_coalgebra(&file_coalgebra(s)?)),
            Kind::Bialgebra => out.push(as_report(check_hom_bialgebra(&file_bialgebra(s)?))?),
            _ => {}
        }
    }
    if wants(Hopf) && k == Kind::Hopf {
        out.push(as_report(check_hom_hopf(&file_hopf(s)?))?);
    }
    if wants(Qt) && s.r_matrix.is_some() && matches!(k, Kind::Bialgebra | Kind::Hopf) {
        out.push(check_quasitriangular(&file_bialgebra(s)?, &file_r_matrix(s)?)?);
    }
    if wants(Module) {
        match k {
            Kind::LeftModule => out.push(check_module(&file_left_module(doc, s)?)),
            Kind::RightModule => out.push(check_module(&file_right_module(doc, s)?)),
            Kind::Comodule => out.push(check_comodule(&file_comodule(doc, s)?)),
            Kind::LeftModuleAlgebra => out.push(as_report(check_module_hom_algebra(&file_left_module_algebra(doc, s)?))?),
            Kind::RightModuleAlgebra => {
                out.push(as_report(check_right_module_hom_algebra(&file_right_module_algebra(doc, s)?))?)
            }
            Kind::BimoduleAlgebra => out.push(as_report(check_bimodule_hom_algebra(&file_bimodule_algebra(doc, s)?))?),
            _ => {}
        }
    }
    if wants(Yd) && k == Kind::YetterDrinfeld {
        out.push(as_report(check_yetter_drinfeld(&file_yd(doc, s)?))?);
    }
    if suite == All {
        match k {
            Kind::Twisting => out.push(check_twisting_map(&file_twisting(doc, s)?)),
            Kind::LRData => out.push(check_lr_data(&file_lr_data(doc, s)?)),
            _ => {}
        }
    }
    Ok(out)
}

fn expect_inputs(inputs: &[String], n: usize, kind: &str) -> Result<()> {
    if inputs.len() != n {
        return Err(Error::Validation(vec![format!("--kind {kind} takes {n} input(s), got {}", inputs.len())]));
    }
    Ok(())
}

fn build_product(k: ProductKind, inputs: &[String]) -> Result<(String, crate::hom::HomAlgebra)> {
    let loaded: Vec<Input> = inputs.iter().map(|i| load(i)).collect::<Result<_>>()?;
    let sel = |i: usize| loaded[i].selected();
    Ok(match k {
        ProductKind::Tensor => {
            expect_inputs(inputs, 2, "tensor")?;
            let (a, b) = (file_algebra(sel(0)?)?, file_algebra(sel(1)?)?);
            let t = TwistingMap::flip(a, b);
            (format!("{}*{}", sel(0)?.name, sel(1)?.name), twisted_tensor_product(&t)?)
        }
        ProductKind::Twisted => {
            expect_inputs(inputs, 1, "twisted")?;
            let t = file_twisting(&loaded[0].doc, sel(0)?)?;
            (format!("{}-product", sel(0)?.name), twisted_tensor_product(&t)?)
        }
        ProductKind::LrTwisted => {
            expect_inputs(inputs, 1, "lr-twisted")?;
            let d = file_lr_data(&loaded[0].doc, sel(0)?)?;
            (format!("{}-product", sel(0)?.name), lr_twisted_tensor_product(&d)?)
        }
        ProductKind::SmashLeft => {
            expect_inputs(inputs, 1, "smash-left")?;
            let x = file_left_module_algebra(&loaded[0].doc, sel(0)?)?;
            (format!("{}#H", sel(0)?.name), smash_product(&x)?)
        }
        ProductKind::SmashRight => {
            expect_inputs(inputs, 1, "smash-right")?;
            let x = file_right_module_algebra(&loaded[0].doc, sel(0)?)?;
            (format!("H#{}", sel(0)?.name), right_smash_product(&x)?)
        }
        ProductKind::TwoSided => {
            expect_inputs(inputs, 2, "two-sided")?;
            let a = left_side(&loaded[0].doc, sel(0)?)?;
            let c = right_side(&loaded[1].doc, sel(1)?)?;
            (format!("{}#H#{}", sel(0)?.name, sel(1)?.name), two_sided_smash(&a, &c)?)
        }
        ProductKind::LrSmash => {
            expect_inputs(inputs, 1, "lr-smash")?;
            let x = file_bimodule_algebra(&loaded[0].doc, sel(0)?)?;
            (format!("{}-lr-smash", sel(0)?.name), lr_smash(&x)?.1)
        }
        ProductKind::Diagonal => {
            expect_inputs(inputs, 2, "diagonal")?;
            let x = file_bimodule_algebra(&loaded[0].doc, sel(0)?)?;
            let h = file_hopf(sel(1)?)?;
            (format!("{}-diagonal-{}", sel(0)?.name, sel(1)?.name), diagonal_crossed_product(&x, &h)?.1)
        }
    })
}

/// A left module algebra, also read from a bimodule algebra.
fn left_side(doc: &Document, s: &StructureFile) -> Result<crate::modules::LeftModuleAlgebra> {
    match kind(s)? {
        Kind::BimoduleAlgebra => Ok(file_bimodule_algebra(doc, s)?.left_module_algebra()),
        _ => file_left_module_algebra(doc, s),
    }
}

fn right_side(doc: &Document, s: &StructureFile) -> Result<crate::modules::RightModuleAlgebra> {
    match kind(s)? {
        Kind::BimoduleAlgebra => Ok(file_bimodule_algebra(doc, s)?.right_module_algebra()),
        _ => file_right_module_algebra(doc, s),
    }
}
