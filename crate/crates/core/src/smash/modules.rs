//! Modules over `A⊗_R B` as pairs of compatible `A`- and `B`-actions.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::hom::HomHopfAlgebra;
use crate::linalg::{matrix_of, LinMap};
use crate::modules::{check_module, BimoduleAlgebra, LeftModule};
use crate::report::{AxiomReport, Group};
use crate::smash::diagonal::diagonal_report;
use crate::twisted::{twisted_tensor_product, TwistingMap};

fn require_inputs(t: &TwistingMap, ma: &LeftModule, mb: &LeftModule) -> Result<()> {
    if !t.is_unital() {
        return Err(Error::Validation(vec!["twisting map must be unital".into()]));
    }
    if !ma.is_unital() || !mb.is_unital() {
        return Err(Error::Validation(vec!["both modules must be unital".into()]));
    }
    if ma.over() != t.a() || mb.over() != t.b() {
        return Err(Error::BaseMismatch("modules must be over the two factors".into()));
    }
    if ma.alpha() != mb.alpha() {
        return Err(Error::Validation(vec!["the two modules must share carrier and structure map".into()]));
    }
    t.a().alpha_inv()?;
    t.b().alpha_inv()?;
    ma.alpha_inv()?;
    Ok(())
}

/// `(a⊗b)·m = a·(α_B⁻¹(b)·α_M⁻¹(m))`.
fn induced_action(t: &TwistingMap, ma: &LeftModule, mb: &LeftModule) -> Result<LinMap> {
    let (na, nb, nm) = (t.a().dim(), t.b().dim(), ma.dim());
    let (b_inv, m_inv) = (t.b().alpha_inv()?, ma.alpha_inv()?);
    Ok(matrix_of(t.field(), &[na, nb, nm], nm, |x| {
        x.map(1, &b_inv).map(2, &m_inv).merge(1, mb.action()).merge(0, ma.action()).flatten()
    }))
}

/// Both module reports, `α_B(b)·(a·m) = α_A(a_R)·(b_R·m)`, and the module
/// check of the induced action, together with the induced module.
pub fn induce_report(t: &TwistingMap, ma: &LeftModule, mb: &LeftModule) -> Result<(LeftModule, AxiomReport)> {
    require_inputs(t, ma, mb)?;
    let (f, na, nb, nm) = (t.field(), t.a().dim(), t.b().dim(), ma.dim());
    let mut rep = AxiomReport::new("induced-module");
    rep.absorb("A", check_module(ma));
    rep.absorb("B", check_module(mb));
    let (aa, ab, r) = (t.a().alpha(), t.b().alpha(), t.map());
    rep.identity(
        "compatib1",
        Group::Axiom,
        f,
        &[nb, na, nm],
        |x| x.merge(1, ma.action()).map(0, ab).merge(0, mb.action()),
        |x| x.map2(0, r, na, nb).merge(1, mb.action()).map(0, aa).merge(0, ma.action()),
    );
    let product = Arc::new(twisted_tensor_product(t)?);
    let module = LeftModule::new(product, ma.alpha().clone(), induced_action(t, ma, mb)?, true)?;
    rep.absorb("induced", check_module(&module));
    Ok((module, rep))
}

/// The unital `A⊗_R B`-module built from compatible actions.
pub fn induce_module_over_twisted(t: &TwistingMap, ma: &LeftModule, mb: &LeftModule) -> Result<LeftModule> {
    let (module, rep) = induce_report(t, ma, mb)?;
    let one_sided_ok = rep.entries.iter().filter(|e| e.id.starts_with("A.") || e.id.starts_with("B.")).all(|e| e.passed());
    if !one_sided_ok {
        return Err(Error::prerequisite("one-sided modules", rep));
    }
    if !rep.holds("compatib1") {
        return Err(Error::CompatibilityFailed { report: Box::new(rep) });
    }
    Ok(module)
}

/// `a·m = (a⊗1)·m` and `b·m = (1⊗b)·m`.
pub fn decompose(t: &TwistingMap, m: &LeftModule) -> Result<(LeftModule, LeftModule)> {
    let (a, b) = (t.a(), t.b());
    let (ua, ub) = (a.require_unit()?, b.require_unit()?);
    if m.over().dim() != a.dim() * b.dim() {
        return Err(Error::BaseMismatch("module is not over A⊗B".into()));
    }
    let (na, nb, nm) = (a.dim(), b.dim(), m.dim());
    let act_a = matrix_of(t.field(), &[na, nm], nm, |x| {
        ub.tensor(&x).permute(&[1, 0, 2]).reshape(&[na * nb, nm]).merge(0, m.action()).flatten()
    });
    let act_b = matrix_of(t.field(), &[nb, nm], nm, |x| ua.tensor(&x).reshape(&[na * nb, nm]).merge(0, m.action()).flatten());
    Ok((
        LeftModule::new(Arc::new(a.clone()), m.alpha().clone(), act_a, true)?,
        LeftModule::new(Arc::new(b.clone()), m.alpha().clone(), act_b, true)?,
    ))
}

/// A module over `D⋈H` from a `D`-module and an `H`-module on one carrier;
/// the report also carries the diagonal product's own checks.
pub fn module_over_diagonal(
    x: &BimoduleAlgebra,
    h: &HomHopfAlgebra,
    md: &LeftModule,
    mh: &LeftModule,
) -> Result<(LeftModule, AxiomReport)> {
    let dp = diagonal_report(x, h)?;
    let (module, rep) = induce_report(&dp.twisting, md, mh)?;
    let mut out = AxiomReport::new("diagonal-module");
    out.absorb("diagonal", regroup_diag(dp.report));
    out.absorb("", rep);
    Ok((module, out))
}

fn regroup_diag(mut r: AxiomReport) -> AxiomReport {
    for e in &mut r.entries {
        e.group = Group::Consistency;
    }
    r
}
