//! The structure file format.
//!
//! A document is a JSON object `{"structures": [...]}`. Each structure has a
//! `name`, a `field` (`"rational"` or `{"prime": p}`), a `dim`, and any of the
//! blocks below; what a structure is follows from which blocks are present.
//!
//! | block          | shape                      | meaning                               |
//! |----------------|----------------------------|---------------------------------------|
//! | `mu`           | `dim x dim²`               | multiplication                        |
//! | `delta`        | `dim² x dim`               | comultiplication                      |
//! | `alpha`        | `dim x dim`                | structure map                         |
//! | `unit`         | `dim`                      | unit vector                           |
//! | `counit`       | `dim`                      | counit covector                       |
//! | `antipode`     | `dim x dim`                | antipode                              |
//! | `r_matrix`     | `dim x dim`                | coefficients of `R = Σ rᵢⱼ eᵢ⊗eⱼ`      |
//! | `base`         | name                       | the Hom-bialgebra acting or coacting  |
//! | `action`       | `dim x (dim_base · dim)`   | left action `h⊗m ↦ h·m`               |
//! | `right_action` | `dim x (dim · dim_base)`   | right action `m⊗h ↦ m·h`              |
//! | `coaction`     | `(dim · dim_base) x dim`   | right coaction `m ↦ m₍₀₎⊗m₍₁₎`        |
//! | `factors`      | `[A, B]`                   | the two algebras of twisting data     |
//! | `twisting`     | `dim x dim`, `dim = nA·nB` | `R: B⊗A → A⊗B`                        |
//! | `q`            | `dim x dim`                | `Q: A⊗B → A⊗B` of L-R data            |
//! | `unital`       | bool                       | whether unit axioms are claimed       |
//!
//! Matrices are lists of rows. Scalars are integers or strings `"a"`,
//! `"a/b"`. Names in `base` and `factors` resolve first within the document
//! and then in the catalog.

use std::fmt::Write as _;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::de::{self, Deserializer};
use serde::Deserialize;

use crate::error::{Error, Result};
use crate::io::catalog::catalog_get;
use crate::linalg::{Field, LinMap, Scalar};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureFile {
    pub name: String,
    pub field: Field,
    pub dim: usize,
    pub base: Option<String>,
    pub factors: Option<Vec<String>>,
    pub mu: Option<LinMap>,
    pub delta: Option<LinMap>,
    pub alpha: Option<LinMap>,
    pub unit: Option<Vec<Scalar>>,
    pub counit: Option<Vec<Scalar>>,
    pub antipode: Option<LinMap>,
    pub r_matrix: Option<LinMap>,
    pub action: Option<LinMap>,
    pub right_action: Option<LinMap>,
    pub coaction: Option<LinMap>,
    pub twisting: Option<LinMap>,
    pub q: Option<LinMap>,
    pub unital: Option<bool>,
}

impl StructureFile {
    pub fn empty(name: impl Into<String>, field: Field, dim: usize) -> StructureFile {
        StructureFile {
            name: name.into(),
            field,
            dim,
            base: None,
            factors: None,
            mu: None,
            delta: None,
            alpha: None,
            unit: None,
            counit: None,
            antipode: None,
            r_matrix: None,
            action: None,
            right_action: None,
            coaction: None,
            twisting: None,
            q: None,
            unital: None,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Document {
    pub structures: Vec<StructureFile>,
}

impl Document {
    pub fn single(s: StructureFile) -> Document {
        Document { structures: vec![s] }
    }

    pub fn get(&self, name: &str) -> Option<&StructureFile> {
        self.structures.iter().find(|s| s.name == name)
    }

    /// The dimension of a named structure, from the document or the
    /// catalog.
    pub fn resolve_dim(&self, name: &str) -> Option<usize> {
        self.get(name).map(|s| s.dim).or_else(|| catalog_get(name).ok().map(|h| h.dim()))
    }

    /// Every invariant the format itself imposes; all violations at once.
    pub fn validate(&self) -> Result<()> {
        let mut errs = Vec::new();
        for (i, s) in self.structures.iter().enumerate() {
            if self.structures[..i].iter().any(|t| t.name == s.name) {
                errs.push(format!("duplicate structure name `{}`", s.name));
            }
            validate_structure(self, s, &mut errs);
        }
        if errs.is_empty() {
            Ok(())
        } else {
            Err(Error::Validation(errs))
        }
    }
}

fn validate_structure(doc: &Document, s: &StructureFile, errs: &mut Vec<String>) {
    let n = s.dim;
    let mut shape = |block: &str, m: &Option<LinMap>, rows: usize, cols: usize| {
        if let Some(m) = m {
            if m.rows() != rows || m.cols() != cols {
                errs.push(format!("{}: `{block}` is {}x{}, expected {rows}x{cols}", s.name, m.rows(), m.cols()));
            }
        }
    };
    let nb = s.base.as_ref().and_then(|b| doc.resolve_dim(b));
    let on_base = s.base.is_some();
    shape("mu", &s.mu, n, n * n);
    shape("delta", &s.delta, n * n, n);
    shape("alpha", &s.alpha, n, n);
    shape("antipode", &s.antipode, n, n);
    shape("r_matrix", &s.r_matrix, n, n);
    shape("twisting", &s.twisting, n, n);
    shape("q", &s.q, n, n);
    if let Some(nb) = nb {
        shape("action", &s.action, n, nb * n);
        shape("right_action", &s.right_action, n, n * nb);
        shape("coaction", &s.coaction, n * nb, n);
    }
    for (block, v) in [("unit", &s.unit), ("counit", &s.counit)] {
        if let Some(v) = v {
            if v.len() != n {
                errs.push(format!("{}: `{block}` has length {}, expected {n}", s.name, v.len()));
            }
        }
    }
    if let Some(b) = &s.base {
        if nb.is_none() {
            errs.push(format!("{}: unknown base `{b}`", s.name));
        }
    }
    if !on_base && (s.action.is_some() || s.right_action.is_some() || s.coaction.is_some()) {
        errs.push(format!("{}: actions and coactions need a `base`", s.name));
    }
    match &s.factors {
        Some(f) if f.len() != 2 => errs.push(format!("{}: `factors` must name exactly two algebras", s.name)),
        Some(f) => match (doc.resolve_dim(&f[0]), doc.resolve_dim(&f[1])) {
            (Some(a), Some(b)) if a * b != n => {
                errs.push(format!("{}: factors have dimensions {a} and {b} but dim is {n}", s.name))
            }
            (Some(_), Some(_)) => {}
            _ => errs.push(format!("{}: unknown factor in {:?}", s.name, f)),
        },
        None if s.twisting.is_some() || s.q.is_some() => errs.push(format!("{}: twisting data needs `factors`", s.name)),
        None => {}
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDocument {
    structures: Vec<RawStructure>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawStructure {
    name: String,
    field: RawField,
    dim: usize,
    base: Option<String>,
    factors: Option<Vec<String>>,
    mu: Option<Vec<Vec<RawScalar>>>,
    delta: Option<Vec<Vec<RawScalar>>>,
    alpha: Option<Vec<Vec<RawScalar>>>,
    unit: Option<Vec<RawScalar>>,
    counit: Option<Vec<RawScalar>>,
    antipode: Option<Vec<Vec<RawScalar>>>,
    r_matrix: Option<Vec<Vec<RawScalar>>>,
    action: Option<Vec<Vec<RawScalar>>>,
    right_action: Option<Vec<Vec<RawScalar>>>,
    coaction: Option<Vec<Vec<RawScalar>>>,
    twisting: Option<Vec<Vec<RawScalar>>>,
    q: Option<Vec<Vec<RawScalar>>>,
    unital: Option<bool>,
}

struct RawField(Field);

impl<'de> Deserialize<'de> for RawField {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Spec {
            Name(String),
            Prime { prime: u64 },
        }
        match Spec::deserialize(d)? {
            Spec::Name(s) if s == "rational" => Ok(RawField(Field::Rational)),
            Spec::Name(s) => Err(de::Error::custom(format!("unknown field `{s}`, expected \"rational\" or {{\"prime\": p}}"))),
            Spec::Prime { prime } => Field::prime(prime).map(RawField).map_err(de::Error::custom),
        }
    }
}

/// A scalar before it is placed in a field; the denominator is nonzero.
struct RawScalar {
    num: BigInt,
    den: BigInt,
}

impl<'de> Deserialize<'de> for RawScalar {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        struct V;
        impl de::Visitor<'_> for V {
            type Value = RawScalar;
            fn expecting(&self, f: &mut std::fmt::Formatter) -> std::fmt::Result {
                f.write_str("an integer or a string \"a\" or \"a/b\"")
            }
            fn visit_i64<E: de::Error>(self, v: i64) -> std::result::Result<RawScalar, E> {
                Ok(RawScalar { num: v.into(), den: 1.into() })
            }
            fn visit_u64<E: de::Error>(self, v: u64) -> std::result::Result<RawScalar, E> {
                Ok(RawScalar { num: v.into(), den: 1.into() })
            }
            fn visit_str<E: de::Error>(self, v: &str) -> std::result::Result<RawScalar, E> {
                parse_scalar(v).map_err(E::custom)
            }
        }
        d.deserialize_any(V)
    }
}

fn parse_scalar(s: &str) -> std::result::Result<RawScalar, String> {
    let int = |t: &str| BigInt::from_str(t.trim()).map_err(|_| format!("`{s}` is not a scalar"));
    let (num, den) = match s.split_once('/') {
        Some((a, b)) => (int(a)?, int(b)?),
        None => (int(s)?, BigInt::from(1)),
    };
    if den == BigInt::from(0) {
        return Err(format!("`{s}` has a zero denominator"));
    }
    Ok(RawScalar { num, den })
}

fn to_scalar(field: Field, r: &RawScalar, name: &str, errs: &mut Vec<String>) -> Scalar {
    match field.fraction(r.num.clone(), r.den.clone()) {
        Ok(s) => s,
        Err(_) => {
            errs.push(format!("{name}: {}/{} is undefined over {}", r.num, r.den, field.name()));
            field.zero()
        }
    }
}

fn to_matrix(field: Field, rows: &[Vec<RawScalar>], name: &str, block: &str, errs: &mut Vec<String>) -> Option<LinMap> {
    let width = rows.first().map_or(0, Vec::len);
    if rows.iter().any(|r| r.len() != width) {
        errs.push(format!("{name}: rows of `{block}` have different lengths"));
        return None;
    }
    let rows = rows.iter().map(|r| r.iter().map(|x| to_scalar(field, x, name, errs)).collect()).collect();
    LinMap::from_rows(field, rows).ok()
}

fn convert(raw: RawStructure, errs: &mut Vec<String>) -> StructureFile {
    let f = raw.field.0;
    let name = raw.name;
    let mut m = |block: &str, v: Option<Vec<Vec<RawScalar>>>| v.and_then(|rows| to_matrix(f, &rows, &name, block, errs));
    let mu = m("mu", raw.mu);
    let delta = m("delta", raw.delta);
    let alpha = m("alpha", raw.alpha);
    let antipode = m("antipode", raw.antipode);
    let r_matrix = m("r_matrix", raw.r_matrix);
    let action = m("action", raw.action);
    let right_action = m("right_action", raw.right_action);
    let coaction = m("coaction", raw.coaction);
    let twisting = m("twisting", raw.twisting);
    let q = m("q", raw.q);
    let mut v = |v: Option<Vec<RawScalar>>| v.map(|xs| xs.iter().map(|x| to_scalar(f, x, &name, errs)).collect());
    let unit = v(raw.unit);
    let counit = v(raw.counit);
    StructureFile {
        name,
        field: f,
        dim: raw.dim,
        base: raw.base,
        factors: raw.factors,
        mu,
        delta,
        alpha,
        unit,
        counit,
        antipode,
        r_matrix,
        action,
        right_action,
        coaction,
        twisting,
        q,
        unital: raw.unital,
    }
}

/// Parses and validates a document.
pub fn parse_str(text: &str) -> Result<Document> {
    let raw: RawDocument = serde_json::from_str(text)
        .map_err(|e| Error::Parse { line: e.line(), column: e.column(), message: strip_position(&e.to_string()) })?;
    let mut errs = Vec::new();
    let structures = raw.structures.into_iter().map(|s| convert(s, &mut errs)).collect();
    if !errs.is_empty() {
        return Err(Error::Validation(errs));
    }
    let doc = Document { structures };
    doc.validate()?;
    Ok(doc)
}

fn strip_position(msg: &str) -> String {
    match msg.rfind(" at line ") {
        Some(i) => msg[..i].to_string(),
        None => msg.to_string(),
    }
}

pub fn parse_file(path: &std::path::Path) -> Result<Document> {
    parse_str(&std::fs::read_to_string(path)?)
}

/// Deterministic rendering: keys in the fixed order of the table above,
/// one matrix row per line.
pub fn serialize(doc: &Document) -> String {
    let mut out = String::from("{\n  \"structures\": [");
    for (i, s) in doc.structures.iter().enumerate() {
        out.push_str(if i == 0 { "\n" } else { ",\n" });
        write_structure(&mut out, s);
    }
    out.push_str(if doc.structures.is_empty() { "]\n}\n" } else { "\n  ]\n}\n" });
    out
}

pub fn write_file(doc: &Document, path: &std::path::Path) -> Result<()> {
    Ok(std::fs::write(path, serialize(doc))?)
}

fn scalar_json(x: &Scalar) -> String {
    let s = x.to_string();
    if s.contains('/') || s.len() > 18 {
        format!("\"{s}\"")
    } else {
        s
    }
}

fn vector_json(v: &[Scalar]) -> String {
    let parts: Vec<String> = v.iter().map(scalar_json).collect();
    format!("[{}]", parts.join(", "))
}

fn write_structure(out: &mut String, s: &StructureFile) {
    let mut fields: Vec<(&str, String)> = vec![
        ("name", serde_json::to_string(&s.name).expect("string")),
        (
            "field",
            match s.field {
                Field::Rational => "\"rational\"".into(),
                Field::Prime(p) => format!("{{\"prime\": {p}}}"),
            },
        ),
        ("dim", s.dim.to_string()),
    ];
    if let Some(b) = &s.base {
        fields.push(("base", serde_json::to_string(b).expect("string")));
    }
    if let Some(f) = &s.factors {
        fields.push(("factors", serde_json::to_string(f).expect("strings")));
    }
    let matrix = |m: &LinMap| {
        let rows: Vec<String> = (0..m.rows()).map(|r| format!("        {}", vector_json(m.row(r)))).collect();
        if rows.is_empty() {
            "[]".to_string()
        } else {
            format!("[\n{}\n      ]", rows.join(",\n"))
        }
    };
    let blocks: [(&str, &Option<LinMap>); 3] = [("mu", &s.mu), ("delta", &s.delta), ("alpha", &s.alpha)];
    for (k, m) in blocks {
        if let Some(m) = m {
            fields.push((k, matrix(m)));
        }
    }
    if let Some(u) = &s.unit {
        fields.push(("unit", vector_json(u)));
    }
    if let Some(e) = &s.counit {
        fields.push(("counit", vector_json(e)));
    }
    let blocks: [(&str, &Option<LinMap>); 7] = [
        ("antipode", &s.antipode),
        ("r_matrix", &s.r_matrix),
        ("action", &s.action),
        ("right_action", &s.right_action),
        ("coaction", &s.coaction),
        ("twisting", &s.twisting),
        ("q", &s.q),
    ];
    for (k, m) in blocks {
        if let Some(m) = m {
            fields.push((k, matrix(m)));
        }
    }
    if let Some(u) = s.unital {
        fields.push(("unital", u.to_string()));
    }
    out.push_str("    {\n");
    for (i, (k, v)) in fields.iter().enumerate() {
        let _ = write!(out, "      \"{k}\": {v}");
        out.push_str(if i + 1 < fields.len() { ",\n" } else { "\n" });
    }
    out.push_str("    }");
}
