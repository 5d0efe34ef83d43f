//! Right `H`-comodules as left `H*`-modules and back, through a pair of
//! dual bases.

use std::sync::Arc;

use crate::double::dual::DualAlgebra;
use crate::error::{Error, Result};
use crate::linalg::{invert_linear_map, LinMap, Scalar};
use crate::modules::{LeftModule, RightComodule};

/// `f·m = f(m₍₁₎)m₍₀₎`.
pub fn comodule_to_module(c: &RightComodule, dual: &DualAlgebra) -> Result<LeftModule> {
    let h = dual.base();
    if c.over() != h.coalgebra() {
        return Err(Error::BaseMismatch("comodule is over a different Hom-coalgebra".into()));
    }
    let (n, nm) = (h.dim(), c.dim());
    let rho = c.coaction();
    let action = LinMap::from_fn(h.field(), nm, n * nm, |a, col| rho.get(a * n + col / nm, col % nm).clone());
    LeftModule::new(Arc::new(dual.algebra().clone()), c.alpha().clone(), action, true)
}

/// `m ↦ Σᵢ eⁱ·m ⊗ eᵢ` in the standard dual bases.
pub fn module_to_comodule(m: &LeftModule, dual: &DualAlgebra) -> Result<RightComodule> {
    module_to_comodule_in_basis(m, dual, &LinMap::identity(dual.base().field(), dual.base().dim()))
}

/// The same coaction computed from the dual bases `e'ₖ = Σᵢ Pᵢₖ eᵢ`,
/// `e'ᵏ = Σᵢ (P⁻¹)ₖᵢ eⁱ`.
pub fn module_to_comodule_in_basis(m: &LeftModule, dual: &DualAlgebra, basis: &LinMap) -> Result<RightComodule> {
    let h = dual.base();
    if m.over() != dual.algebra() {
        return Err(Error::BaseMismatch("module is not over the dual algebra".into()));
    }
    let (f, n, nm) = (h.field(), h.dim(), m.dim());
    let inv = invert_linear_map(basis).map_err(|_| Error::NonBijective("dual basis change".into()))?;
    let act = m.action();
    let mut rho = LinMap::zeros(f, nm * n, nm);
    for j in 0..nm {
        for k in 0..n {
            // e'ᵏ·e_j
            let mut v = vec![f.zero(); nm];
            for i in 0..n {
                let c = inv.get(k, i);
                if c.is_zero() {
                    continue;
                }
                for (a, x) in v.iter_mut().enumerate() {
                    *x = &*x + &(c * act.get(a, i * nm + j));
                }
            }
            for (a, x) in v.iter().enumerate() {
                for i in 0..n {
                    let p = basis.get(i, k);
                    if x.is_zero() || p.is_zero() {
                        continue;
                    }
                    let cur: Scalar = rho.get(a * n + i, j) + &(x * p);
                    rho.set(a * n + i, j, cur);
                }
            }
        }
    }
    RightComodule::new(Arc::new(h.coalgebra().clone()), m.alpha().clone(), rho, true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::double::dual_algebra;
    use crate::io::catalog::catalog_get;
    use crate::modules::{check_comodule, check_module, trivial_coaction};

    #[test]
    fn regular_comodule_round_trips() {
        let h = Arc::new(catalog_get("h4-sweedler-twisted").unwrap());
        let d = dual_algebra(h.clone(), 0, 0).unwrap();
        let c = RightComodule::regular(Arc::new(h.coalgebra().clone()));
        let m = comodule_to_module(&c, &d).unwrap();
        assert!(check_module(&m).passed());
        // f·h = f(h₂)h₁
        let f = h.field();
        for i in 0..4 {
            for j in 0..4 {
                let expect: Vec<_> = (0..4)
                    .map(|a| (0..4).fold(f.zero(), |s, b| if b == i { &s + h.delta().get(a * 4 + b, j) } else { s }))
                    .collect();
                let got: Vec<_> = (0..4).map(|a| m.action().get(a, i * 4 + j).clone()).collect();
                assert_eq!(got, expect);
            }
        }
        let back = module_to_comodule(&m, &d).unwrap();
        assert_eq!(back, c);
    }

    #[test]
    fn trivial_comodule_acts_by_evaluation_at_one() {
        let h = Arc::new(catalog_get("h4-sweedler-twisted").unwrap());
        let d = dual_algebra(h.clone(), 0, 0).unwrap();
        let f = h.field();
        let id = LinMap::identity(f, 1);
        let c = RightComodule::new(Arc::new(h.coalgebra().clone()), id.clone(), trivial_coaction(&id, &h.unit_tensor()), true).unwrap();
        assert!(check_comodule(&c).passed());
        let m = comodule_to_module(&c, &d).unwrap();
        assert_eq!(m.action().row(0), h.unit());
    }

    #[test]
    fn coaction_is_independent_of_the_dual_basis() {
        let h = Arc::new(catalog_get("h4-sweedler-twisted").unwrap());
        let d = dual_algebra(h.clone(), 0, 0).unwrap();
        let m = LeftModule::regular(Arc::new(d.algebra().clone()));
        let base = module_to_comodule(&m, &d).unwrap();
        assert!(check_comodule(&base).passed());
        let f = h.field();
        let perm = LinMap::permutation(f, &[2, 0, 3, 1]);
        let tri = LinMap::from_i64_rows(f, &[&[1, 2, 0, -1], &[0, 1, 3, 0], &[0, 0, 1, 5], &[0, 0, 0, 1]]);
        for p in [perm, tri] {
            assert_eq!(module_to_comodule_in_basis(&m, &d, &p).unwrap(), base);
        }
    }
}
