use std::sync::Arc;

use crate::error::{Error, Result};
use crate::hom::{check_endo_shape, HomCoalgebra};
use crate::linalg::{Field, LinMap, Tensor};
use crate::report::{AxiomEntry, AxiomReport, Group};

/// A right comodule `(M, α_M)`; the coaction is the `(dim M · dim C) x dim M`
/// matrix of `m ↦ m₍₀₎ ⊗ m₍₁₎`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RightComodule {
    over: Arc<HomCoalgebra>,
    alpha: LinMap,
    coaction: LinMap,
    counital: bool,
}

impl RightComodule {
    pub fn new(over: Arc<HomCoalgebra>, alpha: LinMap, coaction: LinMap, counital: bool) -> Result<RightComodule> {
        let m = alpha.rows();
        check_endo_shape(&alpha, m, "comodule structure map")?;
        if coaction.cols() != m || coaction.rows() != m * over.dim() {
            return Err(Error::DimensionMismatch {
                what: "coaction".into(),
                expected: m * m * over.dim(),
                found: coaction.rows() * coaction.cols(),
            });
        }
        if alpha.field() != over.field() || coaction.field() != over.field() {
            return Err(Error::FieldMismatch);
        }
        Ok(RightComodule { over, alpha, coaction, counital })
    }

    /// `C` coacting on itself through `Δ`.
    pub fn regular(over: Arc<HomCoalgebra>) -> RightComodule {
        let alpha = over.alpha().clone();
        let coaction = over.delta().clone();
        let counital = over.counit().is_some();
        RightComodule { over, alpha, coaction, counital }
    }

    pub fn over(&self) -> &HomCoalgebra {
        &self.over
    }

    pub fn over_arc(&self) -> &Arc<HomCoalgebra> {
        &self.over
    }

    pub fn field(&self) -> Field {
        self.alpha.field()
    }

    pub fn dim(&self) -> usize {
        self.alpha.rows()
    }

    pub fn alpha(&self) -> &LinMap {
        &self.alpha
    }

    pub fn coaction(&self) -> &LinMap {
        &self.coaction
    }

    pub fn is_counital(&self) -> bool {
        self.counital
    }

    pub fn with_counital(mut self, counital: bool) -> RightComodule {
        self.counital = counital;
        self
    }

    /// `ρ(v)` for a tensor whose leg `leg` lives in `M`.
    pub fn coact(&self, t: &Tensor, leg: usize) -> Tensor {
        t.split(leg, &self.coaction, self.dim(), self.over.dim())
    }
}

/// `(α_M⊗α_C)∘ρ = ρ∘α_M`, `(α_M⊗Δ)∘ρ = (ρ⊗α_C)∘ρ` and, when flagged,
/// `ε(m₍₁₎)m₍₀₎ = α_M(m)`.
pub fn check_comodule(c: &RightComodule) -> AxiomReport {
    let mut r = AxiomReport::new("right-comodule");
    comodule_entries(&mut r, c);
    r
}

pub(crate) fn comodule_entries(r: &mut AxiomReport, c: &RightComodule) {
    let h = c.over();
    let (f, nm, nc) = (c.field(), c.dim(), h.dim());
    let (rho, am, ac, d) = (c.coaction(), c.alpha(), h.alpha(), h.delta());
    r.identity(
        "rightcom1",
        Group::Axiom,
        f,
        &[nm],
        |t| t.split(0, rho, nm, nc).map(0, am).map(1, ac),
        |t| t.map(0, am).split(0, rho, nm, nc),
    );
    r.identity(
        "rightcom2",
        Group::Axiom,
        f,
        &[nm],
        |t| t.split(0, rho, nm, nc).map(0, am).split(1, d, nc, nc),
        |t| t.split(0, rho, nm, nc).split(0, rho, nm, nc).map(2, ac),
    );
    if c.is_counital() {
        match h.counit_map() {
            Some(e) => {
                r.identity("counital", Group::Axiom, f, &[nm], |t| t.split(0, rho, nm, nc).eval(1, &e), |t| t.map(0, am));
            }
            None => r.push(AxiomEntry::failed_with("counital", Group::Axiom, "coalgebra has no counit")),
        }
    }
}

/// Whether `f: M → N` commutes with the structure maps and coactions.
pub fn comodule_morphism_report(m: &RightComodule, n: &RightComodule, f: &LinMap) -> AxiomReport {
    let mut r = AxiomReport::new("comodule-morphism");
    if f.rows() != n.dim() || f.cols() != m.dim() || m.over() != n.over() {
        r.push(AxiomEntry::failed_with("shape", Group::Axiom, "map or base coalgebra does not match"));
        return r;
    }
    let (fld, nm, nc) = (m.field(), m.dim(), m.over().dim());
    r.maps_equal("morphism-alpha", Group::Axiom, &n.alpha().compose(f).expect("shape"), &f.compose(m.alpha()).expect("shape"));
    r.identity(
        "morphism-coaction",
        Group::Axiom,
        fld,
        &[nm],
        |t| t.map(0, f).split(0, n.coaction(), n.dim(), nc),
        |t| t.split(0, m.coaction(), nm, nc).map(0, f),
    );
    r
}

/// The coaction `m ↦ α_M(m) ⊗ 1` on a counital, unital base.
pub fn trivial_coaction(alpha_m: &LinMap, unit: &Tensor) -> LinMap {
    let nm = alpha_m.rows();
    crate::linalg::matrix_of(alpha_m.field(), &[nm], nm * unit.len(), |t| t.map(0, alpha_m).tensor(unit).flatten())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::io::catalog::catalog_get;

    #[test]
    fn regular_and_swapped_coactions() {
        let h = catalog_get("h4-sweedler-twisted").unwrap();
        let c = Arc::new(h.coalgebra().clone());
        assert!(check_comodule(&RightComodule::regular(c.clone())).passed());
        let flip = crate::linalg::LinMap::permutation(h.field(), &(0..16).map(|i| (i % 4) * 4 + i / 4).collect::<Vec<_>>());
        let swapped = RightComodule::new(c, h.alpha().clone(), flip.compose(h.delta()).unwrap(), true).unwrap();
        let r = check_comodule(&swapped);
        assert!(!r.passed());
    }

    #[test]
    fn trivial_coaction_with_structure_map() {
        let h = catalog_get("h4-sweedler-twisted").unwrap();
        let c = Arc::new(h.coalgebra().clone());
        let am = LinMap::identity(h.field(), 2);
        let rho = trivial_coaction(&am, &h.unit_tensor());
        let m = RightComodule::new(c, am, rho, true).unwrap();
        assert!(check_comodule(&m).passed());
    }
}
