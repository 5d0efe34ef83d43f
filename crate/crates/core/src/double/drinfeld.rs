//! The Drinfeld double `D(H) = H*⋈H`.

use std::sync::Arc;

use crate::double::dual::{dual_algebra, DualAlgebra};
use crate::error::{Error, Result};
use crate::hom::{check_four_element, check_hom_hopf, check_quasitriangular, HomBialgebra, HomHopfAlgebra};
use crate::linalg::{invert_linear_map, matrix_of, LinMap, Tensor};
use crate::report::{AxiomReport, Group};
use crate::smash::diagonal_crossed_product;
use crate::twisted::TwistingMap;

/// Largest `dim H` accepted by [`drinfeld_double`].
pub const DEFAULT_DIMENSION_LIMIT: usize = 8;

/// `D(H)` with its R-matrix, the dual it is built from and the twisting map
/// of the diagonal crossed product.
#[derive(Clone, Debug)]
pub struct DrinfeldDouble {
    base: Arc<HomHopfAlgebra>,
    dual: DualAlgebra,
    twisting: TwistingMap,
    hopf: HomHopfAlgebra,
    r: Tensor,
}

impl DrinfeldDouble {
    pub fn base(&self) -> &HomHopfAlgebra {
        &self.base
    }

    pub fn base_arc(&self) -> &Arc<HomHopfAlgebra> {
        &self.base
    }

    pub fn dual(&self) -> &DualAlgebra {
        &self.dual
    }

    pub fn twisting(&self) -> &TwistingMap {
        &self.twisting
    }

    pub fn hopf(&self) -> &HomHopfAlgebra {
        &self.hopf
    }

    pub fn r_matrix(&self) -> &Tensor {
        &self.r
    }

    pub fn dim(&self) -> usize {
        self.hopf.dim()
    }
}

/// `(f⋈h)(f'⋈h') = f•[(α⁻³(h₁)⇀α*²(f'))↼α⁻³(S⁻¹(h₂₂))]⋈α⁻²(h₂₁)h'`.
pub fn double_product_direct(h: &HomHopfAlgebra, dual: &DualAlgebra) -> Result<LinMap> {
    let n = h.dim();
    let (inv2, inv3) = (h.alpha_pow(-2)?, h.alpha_pow(-3)?);
    let a2t = h.alpha_pow(2)?.transpose();
    let (s_inv, d) = (h.antipode_inv()?, h.delta());
    Ok(matrix_of(h.field(), &[n, n, n, n], n * n, |t| {
        t.split(1, d, n, n)
            .split(2, d, n, n)
            .map(4, &a2t)
            .map(1, &inv3)
            .permute(&[0, 1, 4, 3, 2, 5])
            .merge(1, dual.left())
            .map(2, s_inv)
            .map(2, &inv3)
            .merge(1, dual.right())
            .merge(0, dual.algebra().mu())
            .map(1, &inv2)
            .merge(1, h.mu())
            .flatten()
    }))
}

/// `Δ(f⋈h) = (f₂∘α⁻²⋈h₁)⊗(f₁∘α⁻²⋈h₂)`.
pub fn double_delta(h: &HomHopfAlgebra) -> Result<LinMap> {
    let n = h.dim();
    let inv2t = h.alpha_pow(-2)?.transpose();
    let mu_dual = h.mu().transpose();
    Ok(matrix_of(h.field(), &[n, n], n.pow(4), |t| {
        t.split(0, &mu_dual, n, n)
            .split(2, h.delta(), n, n)
            .map(0, &inv2t)
            .map(1, &inv2t)
            .permute(&[1, 2, 0, 3])
            .flatten()
    }))
}

/// `ε(f⋈h) = f(1)ε(h)`.
pub fn double_counit(h: &HomHopfAlgebra) -> Vec<crate::linalg::Scalar> {
    let (u, e) = (h.unit(), h.counit());
    u.iter().flat_map(|a| e.iter().map(move |b| a * b)).collect()
}

/// `S(f⋈h) = (ε⋈S(α⁻¹(h)))(f∘α∘S⁻¹⋈1)` under the product `mu`.
pub fn double_antipode(h: &HomHopfAlgebra, mu: &LinMap) -> Result<LinMap> {
    let n = h.dim();
    let f = h.field();
    let phi = h.alpha().compose(h.antipode_inv()?)?.transpose();
    let a_inv = h.alpha_inv()?;
    let eps = Tensor::from_dense(f, &[n], h.counit())?;
    let u = h.unit_tensor();
    Ok(matrix_of(f, &[n, n], n * n, |t| {
        let x = t.map(0, &phi).map(1, a_inv).map(1, h.antipode());
        eps.tensor(&x).tensor(&u).permute(&[0, 2, 1, 3]).reshape(&[n * n, n * n]).merge(0, mu).flatten()
    }))
}

/// `Σₖ (ε⋈α⁻¹(e'ₖ))⊗(e'ᵏ⋈1)` for the dual bases `e'ₖ = Σᵢ Pᵢₖ eᵢ`.
pub fn r_matrix_in_basis(h: &HomHopfAlgebra, basis: &LinMap) -> Result<Tensor> {
    let n = h.dim();
    let f = h.field();
    let inv = invert_linear_map(basis).map_err(|_| Error::NonBijective("dual basis change".into()))?;
    let eps = Tensor::from_dense(f, &[n], h.counit())?;
    let u = h.unit_tensor();
    let mut r = Tensor::zero(f, &[n, n, n, n]);
    for k in 0..n {
        let ek = Tensor::from_dense(f, &[n], &basis.column(k))?.map(0, h.alpha_inv()?);
        let dk = Tensor::from_dense(f, &[n], inv.row(k))?;
        r = r.add(&eps.tensor(&ek).tensor(&dk).tensor(&u));
    }
    Ok(r.reshape(&[n * n, n * n]))
}

/// The R-matrix in the standard dual bases.
pub fn r_matrix(h: &HomHopfAlgebra) -> Result<Tensor> {
    r_matrix_in_basis(h, &LinMap::identity(h.field(), h.dim()))
}

pub fn drinfeld_double(h: Arc<HomHopfAlgebra>) -> Result<DrinfeldDouble> {
    drinfeld_double_with_limit(h, DEFAULT_DIMENSION_LIMIT)
}

pub fn drinfeld_double_with_limit(h: Arc<HomHopfAlgebra>, limit: usize) -> Result<DrinfeldDouble> {
    if h.dim() > limit {
        return Err(Error::DimensionTooLarge { dim: h.dim(), limit });
    }
    h.alpha_inv().map_err(|_| Error::NonBijective("structure map".into()))?;
    h.antipode_inv().map_err(|_| Error::NonBijective("antipode".into()))?;
    let dual = dual_algebra(h.clone(), 0, 0)?;
    let (twisting, product) = diagonal_crossed_product(dual.bimodule_algebra(), &h)?;
    let unit = product.unit().ok_or_else(|| Error::MissingData("unit of the diagonal product".into()))?.to_vec();
    let bialgebra = HomBialgebra::from_maps(
        product.mu().clone(),
        double_delta(&h)?,
        product.alpha().clone(),
        Some(unit),
        Some(double_counit(&h)),
    )?;
    let antipode = double_antipode(&h, product.mu())?;
    let hopf = HomHopfAlgebra::new(bialgebra, antipode)?;
    let r = r_matrix(&h)?;
    Ok(DrinfeldDouble { base: h, dual, twisting, hopf, r })
}

/// `Δ^cop(x)R` and `RΔ(x)` for `x ∈ D(H)`.
fn qt3_sides(d: &HomHopfAlgebra, r: &Tensor, x: Tensor) -> (Tensor, Tensor) {
    let (n, mu, delta) = (d.dim(), d.mu(), d.delta());
    let lhs = x.split(0, delta, n, n).permute(&[1, 0]).tensor(r).permute(&[0, 2, 1, 3]).merge(0, mu).merge(1, mu);
    let rhs = r.tensor(&x.split(0, delta, n, n)).permute(&[0, 2, 1, 3]).merge(0, mu).merge(1, mu);
    (lhs, rhs)
}

/// Hopf and quasitriangular suites of `D(H)`, the product against the
/// direct formula, `(4elem)` on `H`, and the two generating families of
/// `(homQT3)` as diagnostics.
pub fn double_report(d: &DrinfeldDouble) -> Result<AxiomReport> {
    let h = d.base();
    let (f, n) = (h.field(), h.dim());
    let mut rep = AxiomReport::new(format!("drinfeld-double(dim {})", n * n));
    rep.maps_equal("product-paths", Group::Consistency, &double_product_direct(h, &d.dual)?, d.hopf.mu());
    rep.absorb("", check_hom_hopf(&d.hopf)?);
    rep.absorb("", check_quasitriangular(d.hopf.bialgebra(), &d.r)?);
    let mut four = check_four_element(h.algebra())?;
    for e in &mut four.entries {
        e.group = Group::Derived;
    }
    rep.absorb("H", four);
    let eps = Tensor::from_dense(f, &[n], h.counit())?;
    let u = h.unit_tensor();
    rep.identity(
        "homQT3-eps-h",
        Group::Diagnostic,
        f,
        &[n],
        |t| qt3_sides(&d.hopf, &d.r, eps.tensor(&t).reshape(&[n * n])).0,
        |t| qt3_sides(&d.hopf, &d.r, eps.tensor(&t).reshape(&[n * n])).1,
    );
    rep.identity(
        "homQT3-f-1",
        Group::Diagnostic,
        f,
        &[n],
        |t| qt3_sides(&d.hopf, &d.r, t.tensor(&u).reshape(&[n * n])).0,
        |t| qt3_sides(&d.hopf, &d.r, t.tensor(&u).reshape(&[n * n])).1,
    );
    Ok(rep)
}
