//! Axiom reports and the basis-tuple check engine.
//!
//! Every identity is a pair of pipelines `V_0 ⊗ ... ⊗ V_{k-1} -> W`. By
//! multilinearity it holds iff both sides agree on every basis tuple, so the
//! engine sweeps the tuples in lexicographic order (in parallel) and records
//! the first one where they differ.

use std::fmt::{self, Write as _};

use rayon::prelude::*;
use serde_json::{json, Value};

use crate::linalg::{Field, LinMap, Tensor};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Group {
    /// A defining axiom of the structure.
    Axiom,
    /// An identity that follows from the axioms; a failure means the input
    /// is inconsistent or the checker is wrong.
    Derived,
    /// Agreement between two independent computations of the same object.
    Consistency,
    /// Extra sub-identities reported for information.
    Diagnostic,
}

impl Group {
    pub fn as_str(self) -> &'static str {
        match self {
            Group::Axiom => "axiom",
            Group::Derived => "derived",
            Group::Consistency => "consistency",
            Group::Diagnostic => "diagnostic",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub tuple: Vec<usize>,
    pub lhs: Tensor,
    pub rhs: Tensor,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomEntry {
    pub id: String,
    pub group: Group,
    /// Number of basis tuples in the checked domain.
    pub tuples: usize,
    pub witness: Option<Witness>,
    pub note: Option<String>,
}

impl AxiomEntry {
    pub fn passed(&self) -> bool {
        self.witness.is_none() && self.note.is_none()
    }

    /// A failure that is not tied to a basis tuple (shape mismatch, a
    /// construction that could not be formed).
    pub fn failed_with(id: &str, group: Group, note: impl Into<String>) -> AxiomEntry {
        AxiomEntry { id: id.to_string(), group, tuples: 0, witness: None, note: Some(note.into()) }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AxiomReport {
    pub subject: String,
    pub entries: Vec<AxiomEntry>,
}

fn unflatten(dims: &[usize], mut flat: usize) -> Vec<usize> {
    let mut idx = vec![0; dims.len()];
    for (slot, d) in idx.iter_mut().zip(dims).rev() {
        *slot = flat % d;
        flat /= d;
    }
    idx
}

/// Sweeps all basis tuples of `dims` and returns the first where the two
/// pipelines disagree.
pub fn find_witness<L, R>(field: Field, dims: &[usize], lhs: L, rhs: R) -> Option<Witness>
where
    L: Fn(Tensor) -> Tensor + Sync,
    R: Fn(Tensor) -> Tensor + Sync,
{
    let total: usize = dims.iter().product();
    let eval = |flat: usize| {
        let idx = unflatten(dims, flat);
        let t = Tensor::basis(field, dims, &idx);
        (lhs(t.clone()), rhs(t))
    };
    let first = (0..total).into_par_iter().find_first(|&flat| {
        let (l, r) = eval(flat);
        l != r
    })?;
    let (lhs, rhs) = eval(first);
    Some(Witness { tuple: unflatten(dims, first), lhs, rhs })
}

impl AxiomReport {
    pub fn new(subject: impl Into<String>) -> AxiomReport {
        AxiomReport { subject: subject.into(), entries: Vec::new() }
    }

    /// Checks `lhs = rhs` on every basis tuple of `dims`.
    pub fn identity<L, R>(&mut self, id: &str, group: Group, field: Field, dims: &[usize], lhs: L, rhs: R) -> bool
    where
        L: Fn(Tensor) -> Tensor + Sync,
        R: Fn(Tensor) -> Tensor + Sync,
    {
        let witness = find_witness(field, dims, lhs, rhs);
        let ok = witness.is_none();
        self.entries.push(AxiomEntry { id: id.to_string(), group, tuples: dims.iter().product(), witness, note: None });
        ok
    }

    /// Checks two matrices for equality column by column.
    pub fn maps_equal(&mut self, id: &str, group: Group, a: &LinMap, b: &LinMap) -> bool {
        if a.rows() != b.rows() || a.cols() != b.cols() {
            self.entries.push(AxiomEntry::failed_with(
                id,
                group,
                format!("shape {}x{} vs {}x{}", a.rows(), a.cols(), b.rows(), b.cols()),
            ));
            return false;
        }
        self.identity(id, group, a.field(), &[a.cols()], |t| t.map(0, a), |t| t.map(0, b))
    }

    /// Checks two tensors of the same shape for equality. The witness tuple
    /// is empty.
    pub fn tensors_equal(&mut self, id: &str, group: Group, a: &Tensor, b: &Tensor) -> bool {
        let witness = (a != b).then(|| Witness { tuple: Vec::new(), lhs: a.clone(), rhs: b.clone() });
        let ok = witness.is_none();
        self.entries.push(AxiomEntry { id: id.to_string(), group, tuples: 1, witness, note: None });
        ok
    }

    pub fn push(&mut self, entry: AxiomEntry) {
        self.entries.push(entry);
    }

    /// Appends another report's entries, prefixing their ids.
    pub fn absorb(&mut self, prefix: &str, other: AxiomReport) {
        for mut e in other.entries {
            if !prefix.is_empty() {
                e.id = format!("{prefix}.{}", e.id);
            }
            self.entries.push(e);
        }
    }

    pub fn passed(&self) -> bool {
        self.entries.iter().all(AxiomEntry::passed)
    }

    pub fn group_passed(&self, group: Group) -> bool {
        self.entries.iter().filter(|e| e.group == group).all(AxiomEntry::passed)
    }

    pub fn get(&self, id: &str) -> Option<&AxiomEntry> {
        self.entries.iter().find(|e| e.id == id)
    }

    /// Whether the entry exists and passed.
    pub fn holds(&self, id: &str) -> bool {
        self.get(id).is_some_and(AxiomEntry::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &AxiomEntry> {
        self.entries.iter().filter(|e| !e.passed())
    }

    pub fn first_failure(&self) -> Option<&AxiomEntry> {
        self.failures().next()
    }

    pub fn first_failure_summary(&self) -> String {
        match self.first_failure() {
            None => "no failures".to_string(),
            Some(e) => match (&e.witness, &e.note) {
                (Some(w), _) => format!("{} at basis tuple {:?}", e.id, w.tuple),
                (None, Some(n)) => format!("{}: {n}", e.id),
                (None, None) => e.id.clone(),
            },
        }
    }

    pub fn to_json(&self) -> Value {
        let entries: Vec<Value> = self
            .entries
            .iter()
            .map(|e| {
                let mut v = json!({
                    "id": e.id,
                    "group": e.group.as_str(),
                    "status": if e.passed() { "pass" } else { "fail" },
                    "tuples": e.tuples,
                });
                if let Some(w) = &e.witness {
                    v["witness"] = json!({
                        "tuple": w.tuple,
                        "lhs": tensor_json(&w.lhs),
                        "rhs": tensor_json(&w.rhs),
                    });
                }
                if let Some(n) = &e.note {
                    v["note"] = json!(n);
                }
                v
            })
            .collect();
        json!({
            "subject": self.subject,
            "passed": self.passed(),
            "entries": entries,
        })
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{}: {}", self.subject, if self.passed() { "PASS" } else { "FAIL" });
        for e in &self.entries {
            let status = if e.passed() { "pass" } else { "FAIL" };
            let _ = writeln!(out, "  [{status}] {} ({}, {} tuples)", e.id, e.group.as_str(), e.tuples);
            if let Some(w) = &e.witness {
                let _ = writeln!(out, "      witness {:?}", w.tuple);
                let _ = writeln!(out, "      lhs = {}", TensorDisplay(&w.lhs));
                let _ = writeln!(out, "      rhs = {}", TensorDisplay(&w.rhs));
            }
            if let Some(n) = &e.note {
                let _ = writeln!(out, "      {n}");
            }
        }
        out
    }
}

fn tensor_json(t: &Tensor) -> Value {
    let terms: Vec<Value> = t.nonzeros().iter().map(|(i, v)| json!([t.unflatten(*i), v.to_string()])).collect();
    json!({ "dims": t.dims(), "terms": terms })
}

struct TensorDisplay<'a>(&'a Tensor);

impl fmt::Display for TensorDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let t = self.0;
        if t.is_zero() {
            return f.write_str("0");
        }
        for (n, (i, v)) in t.nonzeros().iter().enumerate() {
            if n > 0 {
                f.write_str(" + ")?;
            }
            let idx: Vec<String> = t.unflatten(*i).iter().map(usize::to_string).collect();
            write!(f, "({v})e[{}]", idx.join(","))?;
        }
        Ok(())
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render_text())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn witness_is_first_failing_tuple() {
        let q = Field::Rational;
        let swap = LinMap::from_i64_rows(q, &[&[0, 1], &[1, 0]]);
        let mut r = AxiomReport::new("t");
        assert!(!r.identity("swap", Group::Axiom, q, &[2, 2], |t| t, |t| t.map(1, &swap)));
        let w = r.entries[0].witness.as_ref().unwrap();
        assert_eq!(w.tuple, vec![0, 0]);
        assert_ne!(w.lhs, w.rhs);
        assert!(r.identity("id", Group::Axiom, q, &[2, 2], |t| t.map(0, &swap).map(0, &swap), |t| t));
        assert!(!r.passed());
        assert!(r.holds("id"));
    }

    #[test]
    fn json_is_stable() {
        let q = Field::Rational;
        let mut r = AxiomReport::new("t");
        r.maps_equal("eq", Group::Consistency, &LinMap::identity(q, 2), &LinMap::zeros(q, 2, 2));
        let s = serde_json::to_string(&r.to_json()).unwrap();
        assert!(s.starts_with("{\"subject\":\"t\",\"passed\":false"));
        assert!(s.contains("\"tuple\":[0]"));
    }
}
