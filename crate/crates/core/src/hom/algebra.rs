use crate::error::{Error, Result};
use crate::linalg::{Field, LinMap, MulTensor, Scalar, Tensor};
use crate::report::{AxiomReport, Group};

/// A Hom-associative algebra `(A, μ, α)`, optionally unital.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomAlgebra {
    mu: MulTensor,
    alpha: LinMap,
    unit: Option<Vec<Scalar>>,
}

impl HomAlgebra {
    pub fn new(mu: MulTensor, alpha: LinMap, unit: Option<Vec<Scalar>>) -> Result<HomAlgebra> {
        let n = mu.dim();
        let field = mu.map().field();
        check_endo_shape(&alpha, n, "structure map")?;
        if alpha.field() != field {
            return Err(Error::FieldMismatch);
        }
        if let Some(u) = &unit {
            check_vector(u, n, field, "unit")?;
        }
        Ok(HomAlgebra { mu, alpha, unit })
    }

    /// From the `n x n²` matrix of `μ`.
    pub fn from_maps(mu: LinMap, alpha: LinMap, unit: Option<Vec<Scalar>>) -> Result<HomAlgebra> {
        HomAlgebra::new(MulTensor::from_map(mu)?, alpha, unit)
    }

    pub fn field(&self) -> Field {
        self.alpha.field()
    }

    pub fn dim(&self) -> usize {
        self.mu.dim()
    }

    pub fn mul_tensor(&self) -> &MulTensor {
        &self.mu
    }

    pub fn mu(&self) -> &LinMap {
        self.mu.map()
    }

    pub fn alpha(&self) -> &LinMap {
        &self.alpha
    }

    pub fn unit(&self) -> Option<&[Scalar]> {
        self.unit.as_deref()
    }

    pub fn unit_tensor(&self) -> Option<Tensor> {
        self.unit.as_ref().map(|u| Tensor::from_dense(self.field(), &[self.dim()], u).expect("unit length checked"))
    }

    pub fn require_unit(&self) -> Result<Tensor> {
        self.unit_tensor().ok_or_else(|| Error::MissingData("unit".into()))
    }

    /// `α^k`; negative powers need a bijective structure map.
    pub fn alpha_pow(&self, k: i32) -> Result<LinMap> {
        alpha_pow(&self.alpha, k)
    }

    /// `α^{-1}` when it exists.
    pub fn alpha_inv(&self) -> Result<LinMap> {
        self.alpha_pow(-1)
    }

    /// The product of two vectors.
    pub fn multiply(&self, x: &[Scalar], y: &[Scalar]) -> Result<Vec<Scalar>> {
        self.mu.contract(x, y)
    }

    pub fn without_unit(&self) -> HomAlgebra {
        HomAlgebra { unit: None, ..self.clone() }
    }
}

pub(crate) fn alpha_pow(alpha: &LinMap, k: i32) -> Result<LinMap> {
    alpha.power(k).map_err(|e| match e {
        Error::SingularMap => Error::NonBijective("structure map".into()),
        other => other,
    })
}

pub(crate) fn check_endo_shape(m: &LinMap, n: usize, what: &str) -> Result<()> {
    if m.rows() != n {
        return Err(Error::DimensionMismatch { what: format!("{what} rows"), expected: n, found: m.rows() });
    }
    if m.cols() != n {
        return Err(Error::DimensionMismatch { what: format!("{what} columns"), expected: n, found: m.cols() });
    }
    Ok(())
}

pub(crate) fn check_vector(v: &[Scalar], n: usize, field: Field, what: &str) -> Result<()> {
    if v.len() != n {
        return Err(Error::DimensionMismatch { what: what.into(), expected: n, found: v.len() });
    }
    if v.iter().any(|s| s.field() != field) {
        return Err(Error::FieldMismatch);
    }
    Ok(())
}

/// Multiplicativity, Hom-associativity and, when a unit is present,
/// `α(1) = 1` and `1a = a1 = α(a)`.
pub fn check_hom_algebra(a: &HomAlgebra) -> AxiomReport {
    let mut r = AxiomReport::new("hom-algebra");
    algebra_entries(&mut r, a);
    r
}

pub(crate) fn algebra_entries(r: &mut AxiomReport, a: &HomAlgebra) {
    let (f, n) = (a.field(), a.dim());
    let (mu, al) = (a.mu(), a.alpha());
    r.identity("mult", Group::Axiom, f, &[n, n], |t| t.merge(0, mu).map(0, al), |t| t.map(0, al).map(1, al).merge(0, mu));
    r.identity(
        "assoc",
        Group::Axiom,
        f,
        &[n, n, n],
        |t| t.merge(1, mu).map(0, al).merge(0, mu),
        |t| t.merge(0, mu).map(1, al).merge(0, mu),
    );
    if let Some(u) = a.unit_tensor() {
        r.tensors_equal("unit-alpha", Group::Axiom, &u.map(0, al), &u);
        r.identity("unit1", Group::Axiom, f, &[n], |t| u.tensor(&t).merge(0, mu), |t| t.map(0, al));
        r.identity("unit2", Group::Axiom, f, &[n], |t| t.tensor(&u).merge(0, mu), |t| t.map(0, al));
    }
}

/// `(ab)(cd) = α(a)(α⁻¹(bc)d)` on all basis quadruples; needs bijective α.
pub fn check_four_element(a: &HomAlgebra) -> Result<AxiomReport> {
    let inv = a.alpha_inv()?;
    let (f, n, mu, al) = (a.field(), a.dim(), a.mu(), a.alpha());
    let mut r = AxiomReport::new("four-element");
    r.identity(
        "4elem",
        Group::Derived,
        f,
        &[n, n, n, n],
        |t| t.merge(2, mu).merge(0, mu).merge(0, mu),
        |t| t.merge(1, mu).map(1, &inv).merge(1, mu).map(0, al).merge(0, mu),
    );
    Ok(r)
}
