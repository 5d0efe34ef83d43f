use crate::error::{Error, Result};
use crate::hom::algebra::{algebra_entries, HomAlgebra};
use crate::hom::coalgebra::{coalgebra_entries, HomCoalgebra};
use crate::linalg::{Field, LinMap, Scalar, Tensor};
use crate::report::{AxiomReport, Group};

/// A Hom-algebra and a Hom-coalgebra on one carrier sharing the structure
/// map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomBialgebra {
    algebra: HomAlgebra,
    coalgebra: HomCoalgebra,
}

impl HomBialgebra {
    pub fn new(algebra: HomAlgebra, coalgebra: HomCoalgebra) -> Result<HomBialgebra> {
        if algebra.dim() != coalgebra.dim() {
            return Err(Error::DimensionMismatch { what: "coalgebra carrier".into(), expected: algebra.dim(), found: coalgebra.dim() });
        }
        if algebra.field() != coalgebra.field() {
            return Err(Error::FieldMismatch);
        }
        if algebra.alpha() != coalgebra.alpha() {
            return Err(Error::Validation(vec!["algebra and coalgebra structure maps differ".into()]));
        }
        Ok(HomBialgebra { algebra, coalgebra })
    }

    pub fn from_maps(
        mu: LinMap,
        delta: LinMap,
        alpha: LinMap,
        unit: Option<Vec<Scalar>>,
        counit: Option<Vec<Scalar>>,
    ) -> Result<HomBialgebra> {
        HomBialgebra::new(HomAlgebra::from_maps(mu, alpha.clone(), unit)?, HomCoalgebra::from_maps(delta, alpha, counit)?)
    }

    pub fn algebra(&self) -> &HomAlgebra {
        &self.algebra
    }

    pub fn coalgebra(&self) -> &HomCoalgebra {
        &self.coalgebra
    }

    pub fn field(&self) -> Field {
        self.algebra.field()
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn mu(&self) -> &LinMap {
        self.algebra.mu()
    }

    pub fn delta(&self) -> &LinMap {
        self.coalgebra.delta()
    }

    pub fn alpha(&self) -> &LinMap {
        self.algebra.alpha()
    }

    pub fn unit(&self) -> Option<&[Scalar]> {
        self.algebra.unit()
    }

    pub fn counit(&self) -> Option<&[Scalar]> {
        self.coalgebra.counit()
    }

    pub fn unit_tensor(&self) -> Option<Tensor> {
        self.algebra.unit_tensor()
    }

    pub fn counit_map(&self) -> Option<LinMap> {
        self.coalgebra.counit_map()
    }

    pub fn alpha_pow(&self, k: i32) -> Result<LinMap> {
        self.algebra.alpha_pow(k)
    }
}

/// Every algebra, coalgebra and compatibility entry, without short-circuit.
pub fn bialgebra_report(h: &HomBialgebra) -> AxiomReport {
    let mut r = AxiomReport::new("hom-bialgebra");
    algebra_entries(&mut r, h.algebra());
    coalgebra_entries(&mut r, h.coalgebra());
    compatibility_entries(&mut r, h);
    r
}

/// `Δ(h₁)⊗α(h₂) = α(h₁)⊗Δ(h₂)`, `Δ(hh') = h₁h'₁⊗h₂h'₂`, `Δ(α(h)) = α(h₁)⊗α(h₂)`.
///
/// Fails with `PrerequisiteFailed` (carrying the complete report) when the
/// algebra or coalgebra axioms fail.
pub fn check_hom_bialgebra(h: &HomBialgebra) -> Result<AxiomReport> {
    let r = bialgebra_report(h);
    let prerequisites = r.entries.iter().filter(|e| !e.id.starts_with("hombia")).all(|e| e.passed());
    if !prerequisites {
        return Err(Error::prerequisite("hom-algebra/hom-coalgebra", r));
    }
    Ok(r)
}

fn compatibility_entries(r: &mut AxiomReport, h: &HomBialgebra) {
    let (f, n) = (h.field(), h.dim());
    let (mu, d, al) = (h.mu(), h.delta(), h.alpha());
    r.identity(
        "hombia1",
        Group::Axiom,
        f,
        &[n],
        |t| t.split(0, d, n, n).split(0, d, n, n).map(2, al),
        |t| t.split(0, d, n, n).map(0, al).split(1, d, n, n),
    );
    r.identity(
        "hombia2",
        Group::Axiom,
        f,
        &[n, n],
        |t| t.merge(0, mu).split(0, d, n, n),
        |t| t.split(0, d, n, n).split(2, d, n, n).permute(&[0, 2, 1, 3]).merge(0, mu).merge(1, mu),
    );
    r.identity(
        "hombia3",
        Group::Axiom,
        f,
        &[n],
        |t| t.map(0, al).split(0, d, n, n),
        |t| t.split(0, d, n, n).map(0, al).map(1, al),
    );
}

/// The reindexing identities obtained by iterating (hombia1): five-leg
/// `h₁⊗h₂₁₁⊗h₂₁₂₁⊗h₂₁₂₂⊗h₂₂ = h₁⊗α(h₂₁)⊗α(h₂₂₁)⊗h₂₂₂₁⊗α⁻²(h₂₂₂₂)` and
/// four-leg `h₁₁⊗h₁₂₁⊗h₁₂₂⊗h₂ = α(h₁)⊗α(h₂₁)⊗h₂₂₁⊗α⁻²(h₂₂₂)`.
pub fn check_reindexing(h: &HomBialgebra) -> Result<AxiomReport> {
    let (f, n) = (h.field(), h.dim());
    let (d, al) = (h.delta(), h.alpha());
    let inv2 = h.alpha_pow(-2)?;
    let mut r = AxiomReport::new("reindexing");
    r.identity(
        "gaga1",
        Group::Derived,
        f,
        &[n],
        |t| t.split(0, d, n, n).split(1, d, n, n).split(1, d, n, n).split(2, d, n, n),
        |t| {
            t.split(0, d, n, n)
                .split(1, d, n, n)
                .split(2, d, n, n)
                .split(3, d, n, n)
                .map(1, al)
                .map(2, al)
                .map(4, &inv2)
        },
    );
    r.identity(
        "gaga2",
        Group::Derived,
        f,
        &[n],
        |t| t.split(0, d, n, n).split(0, d, n, n).split(1, d, n, n),
        |t| t.split(0, d, n, n).split(1, d, n, n).split(2, d, n, n).map(0, al).map(1, al).map(3, &inv2),
    );
    Ok(r)
}
