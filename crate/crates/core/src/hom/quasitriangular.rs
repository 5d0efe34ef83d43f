use crate::error::{Error, Result};
use crate::hom::bialgebra::HomBialgebra;
use crate::linalg::Tensor;
use crate::report::{AxiomReport, Group};

/// Checks `R ∈ H⊗H` against
/// `(Δ⊗α)(R) = α(R¹)⊗α(r¹)⊗R²r²`, `(α⊗Δ)(R) = R¹r¹⊗α(r²)⊗α(R²)`,
/// `Δ^cop(h)R = RΔ(h)` and `(α⊗α)(R) = R`. Here `r` is a second copy of `R`.
pub fn check_quasitriangular(h: &HomBialgebra, r: &Tensor) -> Result<AxiomReport> {
    let n = h.dim();
    if h.unit().is_none() || h.counit().is_none() {
        return Err(Error::MissingData("quasitriangularity needs a unit and a counit".into()));
    }
    if r.dims() != [n, n] {
        return Err(Error::DimensionMismatch { what: "R-matrix".into(), expected: n * n, found: r.len() });
    }
    let (f, mu, d, al) = (h.field(), h.mu(), h.delta(), h.alpha());
    let rr = r.tensor(r);
    let mut rep = AxiomReport::new("quasitriangular");
    rep.tensors_equal(
        "homQT1",
        Group::Axiom,
        &r.split(0, d, n, n).map(2, al),
        &rr.permute(&[0, 2, 1, 3]).map(0, al).map(1, al).merge(2, mu),
    );
    rep.tensors_equal(
        "homQT2",
        Group::Axiom,
        &r.map(0, al).split(1, d, n, n),
        &rr.permute(&[0, 2, 3, 1]).merge(0, mu).map(1, al).map(2, al),
    );
    rep.identity(
        "homQT3",
        Group::Axiom,
        f,
        &[n],
        |t| t.split(0, d, n, n).permute(&[1, 0]).tensor(r).permute(&[0, 2, 1, 3]).merge(0, mu).merge(1, mu),
        |t| r.tensor(&t.split(0, d, n, n)).permute(&[0, 2, 1, 3]).merge(0, mu).merge(1, mu),
    );
    rep.tensors_equal("alpha-invariance", Group::Axiom, &r.map(0, al).map(1, al), r);
    Ok(rep)
}
