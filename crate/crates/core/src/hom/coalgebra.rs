use crate::error::{Error, Result};
use crate::hom::algebra::{alpha_pow, check_endo_shape, check_vector};
use crate::linalg::{CoTensor, Field, LinMap, Scalar, Tensor};
use crate::report::{AxiomReport, Group};

/// A Hom-coassociative coalgebra `(C, Δ, α)`, optionally counital.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomCoalgebra {
    delta: CoTensor,
    alpha: LinMap,
    counit: Option<Vec<Scalar>>,
}

impl HomCoalgebra {
    pub fn new(delta: CoTensor, alpha: LinMap, counit: Option<Vec<Scalar>>) -> Result<HomCoalgebra> {
        let n = delta.dim();
        let field = delta.map().field();
        check_endo_shape(&alpha, n, "structure map")?;
        if alpha.field() != field {
            return Err(Error::FieldMismatch);
        }
        if let Some(e) = &counit {
            check_vector(e, n, field, "counit")?;
        }
        Ok(HomCoalgebra { delta, alpha, counit })
    }

    /// From the `n² x n` matrix of `Δ`.
    pub fn from_maps(delta: LinMap, alpha: LinMap, counit: Option<Vec<Scalar>>) -> Result<HomCoalgebra> {
        HomCoalgebra::new(CoTensor::from_map(delta)?, alpha, counit)
    }

    pub fn field(&self) -> Field {
        self.alpha.field()
    }

    pub fn dim(&self) -> usize {
        self.delta.dim()
    }

    pub fn co_tensor(&self) -> &CoTensor {
        &self.delta
    }

    pub fn delta(&self) -> &LinMap {
        self.delta.map()
    }

    pub fn alpha(&self) -> &LinMap {
        &self.alpha
    }

    pub fn counit(&self) -> Option<&[Scalar]> {
        self.counit.as_deref()
    }

    /// The counit as a `1 x n` functional.
    pub fn counit_map(&self) -> Option<LinMap> {
        self.counit.as_ref().map(|e| LinMap::from_rows(self.field(), vec![e.clone()]).expect("one row"))
    }

    pub fn require_counit(&self) -> Result<LinMap> {
        self.counit_map().ok_or_else(|| Error::MissingData("counit".into()))
    }

    pub fn alpha_pow(&self, k: i32) -> Result<LinMap> {
        alpha_pow(&self.alpha, k)
    }

    /// `Δ(x)` as a two-leg tensor.
    pub fn comultiply(&self, x: &[Scalar]) -> Result<Tensor> {
        self.delta.contract(x)
    }

    pub fn without_counit(&self) -> HomCoalgebra {
        HomCoalgebra { counit: None, ..self.clone() }
    }
}

/// Comultiplicativity, Hom-coassociativity and, when a counit is present,
/// `ε∘α = ε` and `ε(c₁)c₂ = c₁ε(c₂) = α(c)`.
pub fn check_hom_coalgebra(c: &HomCoalgebra) -> AxiomReport {
    let mut r = AxiomReport::new("hom-coalgebra");
    coalgebra_entries(&mut r, c);
    r
}

pub(crate) fn coalgebra_entries(r: &mut AxiomReport, c: &HomCoalgebra) {
    let (f, n) = (c.field(), c.dim());
    let (d, al) = (c.delta(), c.alpha());
    r.identity("comult", Group::Axiom, f, &[n], |t| t.split(0, d, n, n).map(0, al).map(1, al), |t| t.map(0, al).split(0, d, n, n));
    r.identity(
        "coassoc",
        Group::Axiom,
        f,
        &[n],
        |t| t.split(0, d, n, n).split(0, d, n, n).map(2, al),
        |t| t.split(0, d, n, n).map(0, al).split(1, d, n, n),
    );
    if let Some(e) = c.counit_map() {
        r.identity("counit-alpha", Group::Axiom, f, &[n], |t| t.map(0, al).eval(0, &e), |t| t.eval(0, &e));
        r.identity("counit1", Group::Axiom, f, &[n], |t| t.split(0, d, n, n).eval(0, &e), |t| t.map(0, al));
        r.identity("counit2", Group::Axiom, f, &[n], |t| t.split(0, d, n, n).eval(1, &e), |t| t.map(0, al));
    }
}
