//! `H*` with `(f•g)(h) = f(α⁻²(h₁))g(α⁻²(h₂))`, `β(f) = f∘α⁻¹` and the
//! actions `(h⇀f)(h') = f(α⁻²(h')α^p(h))`, `(f↼h)(h') = f(α^q(h)α⁻²(h'))`.
//!
//! Functionals are column vectors in the dual basis `eⁱ`, so `f∘φ` is
//! `φᵀ f`.

use std::sync::Arc;

use crate::error::Result;
use crate::hom::{HomAlgebra, HomHopfAlgebra};
use crate::linalg::{kron, LinMap};
use crate::modules::{bimodule_algebra_report, unit_compatibility_report, BimoduleAlgebra};
use crate::report::{AxiomReport, Group};

/// `H*_{p,q}` as an `H`-bimodule Hom-algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualAlgebra {
    base: Arc<HomHopfAlgebra>,
    p: i32,
    q: i32,
    structure: BimoduleAlgebra,
}

impl DualAlgebra {
    pub fn base(&self) -> &HomHopfAlgebra {
        &self.base
    }

    pub fn base_arc(&self) -> &Arc<HomHopfAlgebra> {
        &self.base
    }

    pub fn p(&self) -> i32 {
        self.p
    }

    pub fn q(&self) -> i32 {
        self.q
    }

    pub fn algebra(&self) -> &HomAlgebra {
        self.structure.algebra()
    }

    pub fn beta(&self) -> &LinMap {
        self.structure.algebra().alpha()
    }

    /// `h⊗f ↦ h⇀f`.
    pub fn left(&self) -> &LinMap {
        self.structure.left()
    }

    /// `f⊗h ↦ f↼h`.
    pub fn right(&self) -> &LinMap {
        self.structure.right()
    }

    pub fn bimodule_algebra(&self) -> &BimoduleAlgebra {
        &self.structure
    }
}

/// `β: f ↦ f∘α⁻¹` as a matrix.
pub fn beta(h: &HomHopfAlgebra) -> Result<LinMap> {
    Ok(h.alpha_inv()?.transpose())
}

/// `μ*` with `(f•g) = (f⊗g)∘(α⁻²⊗α⁻²)∘Δ`.
pub fn dual_mu(h: &HomHopfAlgebra) -> Result<LinMap> {
    let inv2 = h.alpha_pow(-2)?;
    Ok(kron(&inv2, &inv2).compose(h.delta())?.transpose())
}

/// `H*_{p,q}`; the unit is `ε_H`.
pub fn dual_algebra(h: Arc<HomHopfAlgebra>, p: i32, q: i32) -> Result<DualAlgebra> {
    let n = h.dim();
    let f = h.field();
    let inv2 = h.alpha_pow(-2)?;
    let mu = h.mu();
    // (h⇀f)_k = Σ_i f_i [μ(α⁻²⊗α^p)]_{i,(k,h)}
    let left_kernel = mu.compose(&kron(&inv2, &h.alpha_pow(p)?))?;
    let left = LinMap::from_fn(f, n, n * n, |k, c| left_kernel.get(c % n, k * n + c / n).clone());
    // (f↼h)_k = Σ_i f_i [μ(α^q⊗α⁻²)]_{i,(h,k)}
    let right_kernel = mu.compose(&kron(&h.alpha_pow(q)?, &inv2))?;
    let right = LinMap::from_fn(f, n, n * n, |k, c| right_kernel.get(c / n, (c % n) * n + k).clone());
    let algebra = HomAlgebra::from_maps(dual_mu(&h)?, beta(&h)?, Some(h.counit().to_vec()))?;
    let structure = BimoduleAlgebra::new(Arc::new(h.bialgebra().clone()), algebra, left, right, true)?;
    Ok(DualAlgebra { base: h, p, q, structure })
}

/// The bimodule Hom-algebra checks plus `β⁻¹ = αᵀ`, `1⇀f = f↼1 = β(f)`
/// and `h⇀ε = ε↼h = ε(h)ε`.
pub fn dual_report(d: &DualAlgebra) -> Result<AxiomReport> {
    let mut r = bimodule_algebra_report(&d.structure)?;
    r.subject = format!("dual-algebra({},{})", d.p, d.q);
    let h = d.base();
    let n = h.dim();
    let f = h.field();
    r.maps_equal("beta-inverse", Group::Derived, &d.beta().compose(&h.alpha().transpose())?, &LinMap::identity(f, n));
    let u = h.unit_tensor();
    let b = d.beta();
    r.identity("unit-left-beta", Group::Derived, f, &[n], |t| u.tensor(&t).merge(0, d.left()), |t| t.map(0, b));
    r.identity("unit-right-beta", Group::Derived, f, &[n], |t| t.tensor(&u).merge(0, d.right()), |t| t.map(0, b));
    let mut eps = unit_compatibility_report(&d.structure);
    for e in &mut eps.entries {
        e.group = Group::Derived;
    }
    r.absorb("", eps);
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::io::catalog::catalog_get;

    #[test]
    fn twisted_sweedler_dual_passes_for_two_parameter_pairs() {
        let h = Arc::new(catalog_get("h4-sweedler-twisted").unwrap());
        for (p, q) in [(0, 0), (1, -1)] {
            let d = dual_algebra(h.clone(), p, q).unwrap();
            let r = dual_report(&d).unwrap();
            assert!(r.passed(), "{r}");
        }
    }

    #[test]
    fn classical_dual_is_the_ordinary_dual() {
        let h = Arc::new(catalog_get("z2-group").unwrap());
        let d = dual_algebra(h.clone(), 3, -2).unwrap();
        // k[Z2]* is the algebra of functions: e^i e^j = δ_ij e^i.
        let f = h.field();
        for i in 0..2 {
            for j in 0..2 {
                for k in 0..2 {
                    let expect = if i == j && j == k { f.one() } else { f.zero() };
                    assert_eq!(d.algebra().mu().get(k, i * 2 + j), &expect);
                }
            }
        }
        // (g⇀e^i)(g') = e^i(g'g)
        for g in 0..2 {
            for i in 0..2 {
                for k in 0..2 {
                    let expect = if (k + g) % 2 == i { f.one() } else { f.zero() };
                    assert_eq!(d.left().get(k, g * 2 + i), &expect);
                }
            }
        }
    }
}
