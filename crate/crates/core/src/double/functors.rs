//! The functors `F: YD → D(H)-modules` and `G: D(H)-modules → YD`.

use std::sync::Arc;

use crate::double::drinfeld::DrinfeldDouble;
use crate::double::duality::{comodule_to_module, module_to_comodule};
use crate::error::{Error, Result};
use crate::linalg::{matrix_of, LinMap};
use crate::modules::{check_module, check_yetter_drinfeld, module_morphism_report, yd_morphism_report, LeftModule, YDModule};
use crate::report::{AxiomEntry, AxiomReport, Group};
use crate::smash::{decompose, induce_report};

fn pairing(f: crate::linalg::Field, n: usize) -> LinMap {
    LinMap::from_fn(f, 1, n * n, |_, c| if c / n == c % n { f.one() } else { f.zero() })
}

/// `(f⋈h)·m = ⟨f, (α⁻¹(h)·α_M⁻¹(m))₍₁₎⟩(α⁻¹(h)·α_M⁻¹(m))₍₀₎`.
fn f_action(y: &YDModule, d: &DrinfeldDouble) -> Result<LinMap> {
    let h = d.base();
    let (n, nm) = (h.dim(), y.dim());
    let (a_inv, m_inv) = (h.alpha_inv()?, y.alpha_inv()?);
    let pair = pairing(h.field(), n);
    Ok(matrix_of(h.field(), &[n, n, nm], nm, |t| {
        t.map(1, a_inv)
            .map(2, &m_inv)
            .merge(1, y.action())
            .split(1, y.coaction(), nm, n)
            .permute(&[1, 0, 2])
            .merge(1, &pair)
            .reshape(&[nm])
    }))
}

/// `F(M)` without the YD prerequisite: the module check of the output, and
/// agreement with the module induced from `M` as an `H*`- and `H`-module.
pub fn functor_f_report(y: &YDModule, d: &DrinfeldDouble) -> Result<(LeftModule, AxiomReport)> {
    if y.hopf() != d.base() {
        return Err(Error::BaseMismatch("YD module is over a different Hom-Hopf algebra".into()));
    }
    let over = Arc::new(d.hopf().algebra().clone());
    let module = LeftModule::new(over, y.alpha().clone(), f_action(y, d)?, true)?;
    let mut rep = AxiomReport::new("functor-f");
    rep.absorb("", check_module(&module));
    let dual_module = comodule_to_module(y.comodule(), d.dual())?;
    let (induced, _) = induce_report(d.twisting(), &dual_module, y.module())?;
    rep.maps_equal("induced-action", Group::Consistency, induced.action(), module.action());
    Ok((module, rep))
}

/// `F(M)`; requires `M` to be Yetter-Drinfeld.
pub fn functor_f(y: &YDModule, d: &DrinfeldDouble) -> Result<LeftModule> {
    let yd = check_yetter_drinfeld(y)?;
    if !yd.passed() {
        return Err(Error::prerequisite("Yetter-Drinfeld", yd));
    }
    let (module, rep) = functor_f_report(y, d)?;
    if !rep.passed() {
        return Err(Error::prerequisite("functor F", rep));
    }
    Ok(module)
}

/// `h·m = (ε⋈h)·m` and `m ↦ (eⁱ⋈1)·m ⊗ eᵢ`, with the YD report of the
/// result and the compatibility of the two restricted actions.
pub fn functor_g_report(m: &LeftModule, d: &DrinfeldDouble) -> Result<(YDModule, AxiomReport)> {
    if m.over() != d.hopf().algebra() {
        return Err(Error::BaseMismatch("module is not over D(H)".into()));
    }
    m.alpha_inv()?;
    let mut rep = AxiomReport::new("functor-g");
    rep.absorb("module", check_module(m));
    let (md, mh) = decompose(d.twisting(), m)?;
    let (_, compat) = induce_report(d.twisting(), &md, &mh)?;
    rep.absorb("", compat.entries.into_iter().filter(|e| e.id == "compatib1").fold(AxiomReport::new(""), |mut r, e| {
        r.push(e);
        r
    }));
    let coaction = module_to_comodule(&md, d.dual())?;
    let y = YDModule::new(d.base_arc().clone(), m.alpha().clone(), mh.action().clone(), coaction.coaction().clone())?;
    match check_yetter_drinfeld(&y) {
        Ok(r) => rep.absorb("yd", r),
        Err(Error::PrerequisiteFailed { report, .. }) => rep.absorb("yd", *report),
        Err(e) => return Err(e),
    }
    Ok((y, rep))
}

/// `G(M)`; requires `M` to be a module over `D(H)`.
pub fn functor_g(m: &LeftModule, d: &DrinfeldDouble) -> Result<YDModule> {
    let (y, rep) = functor_g_report(m, d)?;
    if !rep.passed() {
        return Err(Error::prerequisite("functor G", rep));
    }
    Ok(y)
}

/// For a YD morphism `φ: M → N`, that `φ` is also a module morphism
/// `F(M) → F(N)`.
pub fn functor_f_morphism_report(m: &YDModule, n: &YDModule, phi: &LinMap, d: &DrinfeldDouble) -> Result<AxiomReport> {
    let mut rep = AxiomReport::new("functor-f-morphism");
    let yd = yd_morphism_report(m, n, phi);
    let yd_ok = yd.passed();
    rep.absorb("yd", yd);
    let (fm, fn_) = (functor_f(m, d)?, functor_f(n, d)?);
    let module = module_morphism_report(&fm, &fn_, phi);
    if yd_ok {
        let mut module = module;
        for e in &mut module.entries {
            e.group = Group::Derived;
        }
        rep.absorb("double", module);
    } else {
        rep.push(AxiomEntry::failed_with("double", Group::Diagnostic, "not a YD morphism"));
    }
    Ok(rep)
}
