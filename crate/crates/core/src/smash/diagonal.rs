//! The diagonal crossed product `D⋈H = D⊗_P H` with
//! `P(h⊗d) = (α_H⁻³(h₁)·α_D⁻²(d))·α_H⁻³(S⁻¹((h₂)₂)) ⊗ α_H⁻²((h₂)₁)`.

use crate::error::{Error, Result};
use crate::hom::{yau_twist, HomAlgebra, HomHopfAlgebra, YauTwist};
use crate::linalg::{kron, matrix_of, LinMap};
use crate::modules::{twist_bimodule_algebra, unit_compatibility_report, BimoduleAlgebra};
use crate::report::{AxiomReport, Group};
use crate::smash::lr_smash::{invert_q, lr_smash_data};
use crate::twisted::iterated::regroup;
use crate::twisted::{check_twisting_map, factorization_report, twisted_tensor_product, TwistingMap};

/// `P` by its closed form.
pub fn diagonal_twisting_map(x: &BimoduleAlgebra, h: &HomHopfAlgebra) -> Result<LinMap> {
    let s_inv = h.antipode_inv()?;
    let (f, nh, nd) = (h.field(), h.dim(), x.algebra().dim());
    let (inv2, inv3, d_inv2) = (h.alpha_pow(-2)?, h.alpha_pow(-3)?, x.algebra().alpha_pow(-2)?);
    let d = h.delta();
    Ok(matrix_of(f, &[nh, nd], nd * nh, |t| {
        t.split(0, d, nh, nh)
            .split(1, d, nh, nh)
            .map(0, &inv3)
            .map(3, &d_inv2)
            .permute(&[0, 3, 2, 1])
            .merge(0, x.left())
            .map(1, s_inv)
            .map(1, &inv3)
            .merge(0, x.right())
            .map(1, &inv2)
            .flatten()
    }))
}

/// The twisting map, the product and a report: `P` against `Q⁻¹∘R`, the
/// twisting-map check, `Q: D⊗_P H ≅ D♮H`, and unitality.
pub struct DiagonalProduct {
    pub twisting: TwistingMap,
    pub product: HomAlgebra,
    pub report: AxiomReport,
}

pub fn diagonal_report(x: &BimoduleAlgebra, h: &HomHopfAlgebra) -> Result<DiagonalProduct> {
    invert_q(x, h)?;
    let data = lr_smash_data(x)?;
    let p = diagonal_twisting_map(x, h)?;
    let (p_factor, factor) = factorization_report(&data)?;
    let mut rep = AxiomReport::new("diagonal-crossed-product");
    rep.maps_equal("P-closed-form", Group::Consistency, &p, p_factor.map());
    rep.absorb("", factor);
    let unit_compat = x.algebra().unit().is_some() && unit_compatibility_report(x).passed();
    let t = TwistingMap::new(x.algebra().clone(), h.algebra().clone(), p, unit_compat)?;
    rep.absorb("twisting", regroup(check_twisting_map(&t), Group::Derived));
    if !rep.passed() {
        return Err(Error::prerequisite("diagonal crossed product", rep));
    }
    let product = twisted_tensor_product(&t)?;
    Ok(DiagonalProduct { twisting: t, product, report: rep })
}

/// `D⋈H`, unital with `1_D⋈1_H` when `h·1_D = 1_D·h = ε(h)1_D`.
pub fn diagonal_crossed_product(x: &BimoduleAlgebra, h: &HomHopfAlgebra) -> Result<(TwistingMap, HomAlgebra)> {
    let d = diagonal_report(x, h)?;
    Ok((d.twisting, d.product))
}

/// `(D⋈H)_{α_D⊗α_H}` against `D_{α_D}⋈H_{α_H}` for classical `D`, `H`.
pub fn diagonal_twisting_principle(
    x: &BimoduleAlgebra,
    h: &HomHopfAlgebra,
    alpha_h: &LinMap,
    alpha_d: &LinMap,
) -> Result<AxiomReport> {
    let twisted_x = twist_bimodule_algebra(x, alpha_h, alpha_d)?;
    let twisted_h = yau_twist(h, alpha_h)?;
    let mut rep = AxiomReport::new("diagonal-twisting-principle");
    let (_, classical) = diagonal_crossed_product(x, h)?;
    let endo = kron(alpha_d, alpha_h);
    rep.absorb("endo", regroup(classical.endomorphism_report(&endo), Group::Derived));
    let left = classical.twist_unchecked(&endo)?;
    let (_, right) = diagonal_crossed_product(&twisted_x, &twisted_h)?;
    rep.maps_equal("coincide-mu", Group::Derived, left.mu(), right.mu());
    rep.maps_equal("coincide-alpha", Group::Derived, left.alpha(), right.alpha());
    Ok(rep)
}

/// `(D♮H)_{α_D⊗α_H}` against `D_{α_D}♮H_{α_H}` for classical `D`, `H`.
pub fn lr_smash_twisting_principle(x: &BimoduleAlgebra, alpha_h: &LinMap, alpha_d: &LinMap) -> Result<AxiomReport> {
    let twisted_x = twist_bimodule_algebra(x, alpha_h, alpha_d)?;
    let mut rep = AxiomReport::new("lr-smash-twisting-principle");
    let (_, classical) = crate::smash::lr_smash(x)?;
    let endo = kron(alpha_d, alpha_h);
    rep.absorb("endo", regroup(classical.endomorphism_report(&endo), Group::Derived));
    let left = classical.twist_unchecked(&endo)?;
    let (_, right) = crate::smash::lr_smash(&twisted_x)?;
    rep.maps_equal("coincide-mu", Group::Derived, left.mu(), right.mu());
    rep.maps_equal("coincide-alpha", Group::Derived, left.alpha(), right.alpha());
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::sync::Arc;
    use crate::double::dual_algebra;
    use crate::hom::check_hom_algebra;
    use crate::io::catalog::{alpha_minus, catalog_get, sweedler_h4};

    #[test]
    fn dual_diagonal_over_twisted_sweedler_is_unital() {
        let h = Arc::new(catalog_get("h4-sweedler-twisted").unwrap());
        let d = dual_algebra(h.clone(), 0, 0).unwrap();
        let dp = diagonal_report(d.bimodule_algebra(), &h).unwrap();
        assert!(dp.report.passed(), "{}", dp.report);
        assert!(check_hom_algebra(&dp.product).passed());
        let unit = dp.product.unit().expect("unital");
        let expect = kron(&LinMap::from_columns(h.field(), 4, vec![h.counit().to_vec()]).unwrap(), &LinMap::from_columns(h.field(), 4, vec![h.unit().to_vec()]).unwrap());
        assert_eq!(unit, expect.column(0).as_slice());
    }

    #[test]
    fn classical_diagonal_formula() {
        // (d⋈h)(d'⋈h') = d(h₁·d'·S⁻¹(h₃)) ⋈ h₂h' for α = id.
        let h = sweedler_h4();
        let d = dual_algebra(Arc::new(h.clone()), 0, 0).unwrap();
        let x = d.bimodule_algebra();
        let (_, prod) = diagonal_crossed_product(x, &h).unwrap();
        let (n, f) = (4, h.field());
        let s_inv = h.antipode_inv().unwrap();
        let dd = h.delta();
        let expect = matrix_of(f, &[n, n, n, n], n * n, |t| {
            t.split(1, dd, n, n)
                .split(2, dd, n, n)
                .permute(&[0, 1, 4, 3, 2, 5])
                .map(3, s_inv)
                .merge(1, x.left())
                .merge(1, x.right())
                .merge(0, x.algebra().mu())
                .merge(1, h.mu())
                .flatten()
        });
        assert_eq!(prod.mu(), &expect);
    }

    #[test]
    fn twisting_principles_on_sweedler() {
        let h = sweedler_h4();
        let d = dual_algebra(Arc::new(h.clone()), 0, 0).unwrap();
        let am = alpha_minus();
        let beta = am.transpose();
        let r = diagonal_twisting_principle(d.bimodule_algebra(), &h, &am, &beta).unwrap();
        assert!(r.passed(), "{r}");
        let r = lr_smash_twisting_principle(d.bimodule_algebra(), &am, &beta).unwrap();
        assert!(r.passed(), "{r}");
    }
}
