//! `A#H`, `H#C` and `A#H#C` through the twisting maps
//! `R₁(h⊗a) = α_H⁻²(h₁)·α_A⁻¹(a) ⊗ α_H⁻¹(h₂)` and
//! `R₂(c⊗h) = α_H⁻¹(h₁) ⊗ α_C⁻¹(c)·α_H⁻²(h₂)`.

use crate::error::{Error, Result};
use crate::hom::HomAlgebra;
use crate::linalg::{matrix_of, LinMap};
use crate::modules::{check_module_hom_algebra, check_right_module_hom_algebra, LeftModuleAlgebra, RightModuleAlgebra};
use crate::report::AxiomReport;
use crate::twisted::{check_twisting_map, iterated_report, twisted_tensor_product, Bracketings, TwistingMap};
use crate::twisted::twisting::require_algebra;

fn passed(r: AxiomReport, what: &str) -> Result<()> {
    if r.passed() {
        Ok(())
    } else {
        Err(Error::prerequisite(what, r))
    }
}

/// Flags a twisting map as unital when its unit conditions hold.
pub(crate) fn unital_if_possible(t: TwistingMap) -> TwistingMap {
    let candidate = t.clone().with_unital(true);
    let r = check_twisting_map(&candidate);
    let unit_ok = r.entries.iter().filter(|e| e.id.starts_with("unital")).all(|e| e.passed());
    if unit_ok {
        candidate
    } else {
        t.with_unital(false)
    }
}

pub(crate) fn left_smash_map(x: &LeftModuleAlgebra) -> Result<LinMap> {
    let h = x.base();
    let (f, nh, na) = (h.field(), h.dim(), x.algebra().dim());
    let (inv1, inv2, a_inv) = (h.alpha_pow(-1)?, h.alpha_pow(-2)?, x.algebra().alpha_inv()?);
    Ok(matrix_of(f, &[nh, na], na * nh, |t| {
        t.split(0, h.delta(), nh, nh).map(0, &inv2).map(2, &a_inv).permute(&[0, 2, 1]).merge(0, x.action()).map(1, &inv1).flatten()
    }))
}

pub(crate) fn right_smash_map(x: &RightModuleAlgebra) -> Result<LinMap> {
    let h = x.base();
    let (f, nh, nc) = (h.field(), h.dim(), x.algebra().dim());
    let (inv1, inv2, c_inv) = (h.alpha_pow(-1)?, h.alpha_pow(-2)?, x.algebra().alpha_inv()?);
    Ok(matrix_of(f, &[nc, nh], nh * nc, |t| {
        t.split(1, h.delta(), nh, nh).map(1, &inv1).map(2, &inv2).map(0, &c_inv).permute(&[1, 0, 2]).merge(1, x.action()).flatten()
    }))
}

fn require_left(x: &LeftModuleAlgebra) -> Result<()> {
    require_algebra(x.algebra(), "module algebra")?;
    passed(check_module_hom_algebra(x)?, "left module Hom-algebra")
}

fn require_right(x: &RightModuleAlgebra) -> Result<()> {
    require_algebra(x.algebra(), "module algebra")?;
    passed(check_right_module_hom_algebra(x)?, "right module Hom-algebra")
}

/// `R₁: H⊗A → A⊗H`.
pub fn left_smash_twisting(x: &LeftModuleAlgebra) -> Result<TwistingMap> {
    let r = left_smash_map(x)?;
    Ok(unital_if_possible(TwistingMap::new(x.algebra().clone(), x.base().algebra().clone(), r, false)?))
}

/// `R₂: C⊗H → H⊗C`.
pub fn right_smash_twisting(x: &RightModuleAlgebra) -> Result<TwistingMap> {
    let r = right_smash_map(x)?;
    Ok(unital_if_possible(TwistingMap::new(x.base().algebra().clone(), x.algebra().clone(), r, false)?))
}

/// `A#H`: `(a#h)(a'#h') = a(α_H⁻²(h₁)·α_A⁻¹(a')) # α_H⁻¹(h₂)h'`.
pub fn smash_product(x: &LeftModuleAlgebra) -> Result<HomAlgebra> {
    x.base().alpha_pow(-1)?;
    x.algebra().alpha_inv()?;
    require_left(x)?;
    twisted_tensor_product(&left_smash_twisting(x)?)
}

/// `H#C`: `(h#c)(h'#c') = hα_H⁻¹(h'₁) # (α_C⁻¹(c)·α_H⁻²(h'₂))c'`.
pub fn right_smash_product(x: &RightModuleAlgebra) -> Result<HomAlgebra> {
    x.base().alpha_pow(-1)?;
    x.algebra().alpha_inv()?;
    require_right(x)?;
    twisted_tensor_product(&right_smash_twisting(x)?)
}

/// `(R₁, R₂, R₃ = flip)` for `A#H#C`.
pub fn two_sided_twisting(a: &LeftModuleAlgebra, c: &RightModuleAlgebra) -> Result<[TwistingMap; 3]> {
    if a.base() != c.base() {
        return Err(Error::BaseMismatch("A and C must be over the same Hom-bialgebra".into()));
    }
    a.base().alpha_pow(-1)?;
    a.algebra().alpha_inv()?;
    c.algebra().alpha_inv()?;
    require_left(a)?;
    require_right(c)?;
    let r3 = TwistingMap::flip(a.algebra().clone(), c.algebra().clone());
    Ok([left_smash_twisting(a)?, right_smash_twisting(c)?, r3])
}

/// Both bracketings of `A#H#C` and the report comparing them.
pub fn two_sided_report(a: &LeftModuleAlgebra, c: &RightModuleAlgebra) -> Result<Bracketings> {
    let [r1, r2, r3] = two_sided_twisting(a, c)?;
    iterated_report(&r1, &r2, &r3)
}

/// `A#H#C` with
/// `(a#h#c)(a'#h'#c') = a(α_H⁻²(h₁)·α_A⁻¹(a')) # α_H⁻¹(h₂h'₁) # (α_C⁻¹(c)·α_H⁻²(h'₂))c'`.
pub fn two_sided_smash(a: &LeftModuleAlgebra, c: &RightModuleAlgebra) -> Result<HomAlgebra> {
    let b = two_sided_report(a, c)?;
    passed(b.report, "bracketings")?;
    Ok(b.left)
}
