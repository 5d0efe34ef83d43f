//! Yau twisting: `μ ↦ β∘μ`, `Δ ↦ Δ∘β`, `α ↦ β∘α` along an endomorphism `β`
//! commuting with `α`.

use crate::error::{Error, Result};
use crate::hom::algebra::{check_endo_shape, HomAlgebra};
use crate::hom::bialgebra::HomBialgebra;
use crate::hom::coalgebra::HomCoalgebra;
use crate::hom::hopf::HomHopfAlgebra;
use crate::linalg::LinMap;
use crate::report::{AxiomReport, Group};

/// Structures that can be twisted along one of their endomorphisms.
pub trait YauTwist: Sized {
    /// Checks that `endo` commutes with every structure map present.
    fn endomorphism_report(&self, endo: &LinMap) -> AxiomReport;

    /// Twists without checking.
    fn twist_unchecked(&self, endo: &LinMap) -> Result<Self>;
}

/// Twists `x` along `endo` after verifying that `endo` is an endomorphism.
pub fn yau_twist<T: YauTwist>(x: &T, endo: &LinMap) -> Result<T> {
    let r = x.endomorphism_report(endo);
    if !r.passed() {
        return Err(Error::NotAnEndomorphism { report: Box::new(r) });
    }
    x.twist_unchecked(endo)
}

fn algebra_endo_entries(r: &mut AxiomReport, a: &HomAlgebra, b: &LinMap) {
    let (f, n, mu, al) = (a.field(), a.dim(), a.mu(), a.alpha());
    r.identity("endo-alpha", Group::Axiom, f, &[n], |t| t.map(0, al).map(0, b), |t| t.map(0, b).map(0, al));
    r.identity("endo-mult", Group::Axiom, f, &[n, n], |t| t.merge(0, mu).map(0, b), |t| t.map(0, b).map(1, b).merge(0, mu));
    if let Some(u) = a.unit_tensor() {
        r.tensors_equal("endo-unit", Group::Axiom, &u.map(0, b), &u);
    }
}

fn coalgebra_endo_entries(r: &mut AxiomReport, c: &HomCoalgebra, b: &LinMap, with_alpha: bool) {
    let (f, n, d, al) = (c.field(), c.dim(), c.delta(), c.alpha());
    if with_alpha {
        r.identity("endo-alpha", Group::Axiom, f, &[n], |t| t.map(0, al).map(0, b), |t| t.map(0, b).map(0, al));
    }
    r.identity(
        "endo-comult",
        Group::Axiom,
        f,
        &[n],
        |t| t.map(0, b).split(0, d, n, n),
        |t| t.split(0, d, n, n).map(0, b).map(1, b),
    );
    if let Some(e) = c.counit_map() {
        r.identity("endo-counit", Group::Axiom, f, &[n], |t| t.map(0, b).eval(0, &e), |t| t.eval(0, &e));
    }
}

fn shape_report(subject: &str, n: usize, endo: &LinMap) -> Option<AxiomReport> {
    check_endo_shape(endo, n, "endomorphism").err().map(|e| {
        let mut r = AxiomReport::new(subject);
        r.push(crate::report::AxiomEntry::failed_with("endo-shape", Group::Axiom, e.to_string()));
        r
    })
}

impl YauTwist for HomAlgebra {
    fn endomorphism_report(&self, endo: &LinMap) -> AxiomReport {
        if let Some(r) = shape_report("algebra-endomorphism", self.dim(), endo) {
            return r;
        }
        let mut r = AxiomReport::new("algebra-endomorphism");
        algebra_endo_entries(&mut r, self, endo);
        r
    }

    fn twist_unchecked(&self, endo: &LinMap) -> Result<HomAlgebra> {
        HomAlgebra::from_maps(endo.compose(self.mu())?, endo.compose(self.alpha())?, self.unit().map(<[_]>::to_vec))
    }
}

impl YauTwist for HomCoalgebra {
    fn endomorphism_report(&self, endo: &LinMap) -> AxiomReport {
        if let Some(r) = shape_report("coalgebra-endomorphism", self.dim(), endo) {
            return r;
        }
        let mut r = AxiomReport::new("coalgebra-endomorphism");
        coalgebra_endo_entries(&mut r, self, endo, true);
        r
    }

    fn twist_unchecked(&self, endo: &LinMap) -> Result<HomCoalgebra> {
        HomCoalgebra::from_maps(self.delta().compose(endo)?, endo.compose(self.alpha())?, self.counit().map(<[_]>::to_vec))
    }
}

impl YauTwist for HomBialgebra {
    fn endomorphism_report(&self, endo: &LinMap) -> AxiomReport {
        if let Some(r) = shape_report("bialgebra-endomorphism", self.dim(), endo) {
            return r;
        }
        let mut r = AxiomReport::new("bialgebra-endomorphism");
        algebra_endo_entries(&mut r, self.algebra(), endo);
        coalgebra_endo_entries(&mut r, self.coalgebra(), endo, false);
        r
    }

    fn twist_unchecked(&self, endo: &LinMap) -> Result<HomBialgebra> {
        HomBialgebra::new(self.algebra().twist_unchecked(endo)?, self.coalgebra().twist_unchecked(endo)?)
    }
}

impl YauTwist for HomHopfAlgebra {
    fn endomorphism_report(&self, endo: &LinMap) -> AxiomReport {
        let mut r = self.bialgebra().endomorphism_report(endo);
        if r.passed() {
            let (f, n, s) = (self.field(), self.dim(), self.antipode());
            r.identity("endo-antipode", Group::Axiom, f, &[n], |t| t.map(0, s).map(0, endo), |t| t.map(0, endo).map(0, s));
        }
        r.subject = "hopf-endomorphism".into();
        r
    }

    fn twist_unchecked(&self, endo: &LinMap) -> Result<HomHopfAlgebra> {
        HomHopfAlgebra::new(self.bialgebra().twist_unchecked(endo)?, self.antipode().clone())
    }
}
