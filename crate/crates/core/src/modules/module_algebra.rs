//! Module Hom-algebras over a Hom-bialgebra and the twisting procedures
//! that produce them from classical data.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::hom::{check_hom_algebra, yau_twist, HomAlgebra, HomBialgebra, YauTwist};
use crate::linalg::{LinMap, Tensor};
use crate::modules::module::{bimodule_report, check_module, Bimodule, LeftModule, RightModule};
use crate::report::{AxiomEntry, AxiomReport, Group};

/// A Hom-algebra `A` with a left action of a Hom-bialgebra `H`, as the
/// `dim A x (dim H · dim A)` matrix of `h ⊗ a ↦ h·a`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeftModuleAlgebra {
    base: Arc<HomBialgebra>,
    algebra: HomAlgebra,
    action: LeftModule,
}

/// A Hom-algebra `C` with a right action `c ⊗ h ↦ c·h`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RightModuleAlgebra {
    base: Arc<HomBialgebra>,
    algebra: HomAlgebra,
    action: RightModule,
}

/// A Hom-algebra `D` with both actions; the actions share `α_D`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BimoduleAlgebra {
    base: Arc<HomBialgebra>,
    algebra: HomAlgebra,
    bimodule: Bimodule,
}

fn base_algebra(base: &HomBialgebra) -> Arc<HomAlgebra> {
    Arc::new(base.algebra().clone())
}

impl LeftModuleAlgebra {
    /// `unital` flags `1_H·a = α_A(a)`.
    pub fn new(base: Arc<HomBialgebra>, algebra: HomAlgebra, action: LinMap, unital: bool) -> Result<LeftModuleAlgebra> {
        let m = LeftModule::new(base_algebra(&base), algebra.alpha().clone(), action, unital)?;
        Ok(LeftModuleAlgebra { base, algebra, action: m })
    }

    pub fn base(&self) -> &HomBialgebra {
        &self.base
    }

    pub fn base_arc(&self) -> &Arc<HomBialgebra> {
        &self.base
    }

    pub fn algebra(&self) -> &HomAlgebra {
        &self.algebra
    }

    pub fn module(&self) -> &LeftModule {
        &self.action
    }

    pub fn action(&self) -> &LinMap {
        self.action.action()
    }
}

impl RightModuleAlgebra {
    pub fn new(base: Arc<HomBialgebra>, algebra: HomAlgebra, action: LinMap, unital: bool) -> Result<RightModuleAlgebra> {
        let m = RightModule::new(base_algebra(&base), algebra.alpha().clone(), action, unital)?;
        Ok(RightModuleAlgebra { base, algebra, action: m })
    }

    pub fn base(&self) -> &HomBialgebra {
        &self.base
    }

    pub fn base_arc(&self) -> &Arc<HomBialgebra> {
        &self.base
    }

    pub fn algebra(&self) -> &HomAlgebra {
        &self.algebra
    }

    pub fn module(&self) -> &RightModule {
        &self.action
    }

    pub fn action(&self) -> &LinMap {
        self.action.action()
    }
}

impl BimoduleAlgebra {
    /// `unital` flags `1_H·d = d·1_H = α_D(d)`.
    pub fn new(base: Arc<HomBialgebra>, algebra: HomAlgebra, left: LinMap, right: LinMap, unital: bool) -> Result<BimoduleAlgebra> {
        let over = base_algebra(&base);
        let alpha = algebra.alpha().clone();
        let bimodule = Bimodule::new(
            LeftModule::new(over.clone(), alpha.clone(), left, unital)?,
            RightModule::new(over, alpha, right, unital)?,
        )?;
        Ok(BimoduleAlgebra { base, algebra, bimodule })
    }

    pub fn from_sides(left: &LeftModuleAlgebra, right: &RightModuleAlgebra) -> Result<BimoduleAlgebra> {
        if left.base() != right.base() || left.algebra() != right.algebra() {
            return Err(Error::BaseMismatch("left and right module algebras differ".into()));
        }
        let bimodule = Bimodule::new(left.module().clone(), right.module().clone())?;
        Ok(BimoduleAlgebra { base: left.base.clone(), algebra: left.algebra.clone(), bimodule })
    }

    pub fn base(&self) -> &HomBialgebra {
        &self.base
    }

    pub fn base_arc(&self) -> &Arc<HomBialgebra> {
        &self.base
    }

    pub fn algebra(&self) -> &HomAlgebra {
        &self.algebra
    }

    pub fn bimodule(&self) -> &Bimodule {
        &self.bimodule
    }

    pub fn left(&self) -> &LinMap {
        self.bimodule.left().action()
    }

    pub fn right(&self) -> &LinMap {
        self.bimodule.right().action()
    }

    pub fn is_unital(&self) -> bool {
        self.bimodule.left().is_unital() && self.bimodule.right().is_unital()
    }

    pub fn left_module_algebra(&self) -> LeftModuleAlgebra {
        LeftModuleAlgebra { base: self.base.clone(), algebra: self.algebra.clone(), action: self.bimodule.left().clone() }
    }

    pub fn right_module_algebra(&self) -> RightModuleAlgebra {
        RightModuleAlgebra { base: self.base.clone(), algebra: self.algebra.clone(), action: self.bimodule.right().clone() }
    }
}

fn left_compat(r: &mut AxiomReport, x: &LeftModuleAlgebra) -> Result<()> {
    let h = x.base();
    let (f, nh, na) = (h.field(), h.dim(), x.algebra().dim());
    let (act, mu, d) = (x.action(), x.algebra().mu(), h.delta());
    let a2 = h.alpha().power(2)?;
    r.identity(
        "modalgcompat",
        Group::Axiom,
        f,
        &[nh, na, na],
        |t| t.merge(1, mu).map(0, &a2).merge(0, act),
        |t| t.split(0, d, nh, nh).permute(&[0, 2, 1, 3]).merge(0, act).merge(1, act).merge(0, mu),
    );
    Ok(())
}

fn right_compat(r: &mut AxiomReport, x: &RightModuleAlgebra) -> Result<()> {
    let h = x.base();
    let (f, nh, nc) = (h.field(), h.dim(), x.algebra().dim());
    let (act, mu, d) = (x.action(), x.algebra().mu(), h.delta());
    let a2 = h.alpha().power(2)?;
    r.identity(
        "rightmodalgcompat",
        Group::Axiom,
        f,
        &[nc, nc, nh],
        |t| t.merge(0, mu).map(1, &a2).merge(0, act),
        |t| t.split(2, d, nh, nh).permute(&[0, 2, 1, 3]).merge(0, act).merge(1, act).merge(0, mu),
    );
    Ok(())
}

fn require(r: AxiomReport, what: &str) -> Result<AxiomReport> {
    if r.passed() {
        Ok(r)
    } else {
        Err(Error::prerequisite(what, r))
    }
}

/// `α_H²(h)·(aa') = (h₁·a)(h₂·a')` on all basis triples, after the module
/// check.
pub fn check_module_hom_algebra(x: &LeftModuleAlgebra) -> Result<AxiomReport> {
    let mut r = require(check_module(x.module()), "left module")?;
    r.subject = "left-module-hom-algebra".into();
    left_compat(&mut r, x)?;
    Ok(r)
}

/// `(cc')·α_H²(h) = (c·h₁)(c'·h₂)` on all basis triples, after the module
/// check.
pub fn check_right_module_hom_algebra(x: &RightModuleAlgebra) -> Result<AxiomReport> {
    let mut r = require(check_module(x.module()), "right module")?;
    r.subject = "right-module-hom-algebra".into();
    right_compat(&mut r, x)?;
    Ok(r)
}

/// Hom-associativity of `D`, both module-algebra conditions and the
/// bimodule law. Runs every check.
pub fn bimodule_algebra_report(x: &BimoduleAlgebra) -> Result<AxiomReport> {
    let mut r = AxiomReport::new("bimodule-hom-algebra");
    r.absorb("algebra", check_hom_algebra(x.algebra()));
    r.absorb("", bimodule_report(x.bimodule()));
    left_compat(&mut r, &x.left_module_algebra())?;
    right_compat(&mut r, &x.right_module_algebra())?;
    Ok(r)
}

/// Like [`bimodule_algebra_report`], but fails when anything fails.
pub fn check_bimodule_hom_algebra(x: &BimoduleAlgebra) -> Result<AxiomReport> {
    require(bimodule_algebra_report(x)?, "bimodule Hom-algebra")
}

/// `h·1_D = 1_D·h = ε(h)1_D`, the hypothesis for a unital diagonal product.
pub fn unit_compatibility_report(x: &BimoduleAlgebra) -> AxiomReport {
    let mut r = AxiomReport::new("unit-compatibility");
    let h = x.base();
    let (Some(u), Some(e)) = (x.algebra().unit_tensor(), h.counit_map()) else {
        r.push(AxiomEntry::failed_with("unit-compat", Group::Axiom, "needs a unit on D and a counit on H"));
        return r;
    };
    let (f, nh) = (h.field(), h.dim());
    r.identity("left-unit-compat", Group::Axiom, f, &[nh], |t| t.tensor(&u).merge(0, x.left()), |t| t.eval(0, &e).tensor(&u));
    r.identity("right-unit-compat", Group::Axiom, f, &[nh], |t| u.tensor(&t).merge(0, x.right()), |t| t.eval(0, &e).tensor(&u));
    r
}

// Twisting classical data.

fn classical_entry(r: &mut AxiomReport, id: &str, alpha: &LinMap) {
    if !alpha.is_identity() {
        r.push(AxiomEntry::failed_with(id, Group::Axiom, "input structure map is not the identity"));
    }
}

fn left_action_compat(r: &mut AxiomReport, id: &str, nh: usize, act: &LinMap, ah: &LinMap, aa: &LinMap) {
    let f = act.field();
    let na = aa.rows();
    r.identity(id, Group::Axiom, f, &[nh, na], |t| t.merge(0, act).map(0, aa), |t| t.map(0, ah).map(1, aa).merge(0, act));
}

fn right_action_compat(r: &mut AxiomReport, id: &str, nh: usize, act: &LinMap, ah: &LinMap, aa: &LinMap) {
    let f = act.field();
    let na = aa.rows();
    r.identity(id, Group::Axiom, f, &[na, nh], |t| t.merge(0, act).map(0, aa), |t| t.map(0, aa).map(1, ah).merge(0, act));
}

fn incompatible(r: AxiomReport) -> Result<()> {
    if r.passed() {
        Ok(())
    } else {
        Err(Error::IncompatibleEndomorphisms { report: Box::new(r) })
    }
}

fn endo_report(x: &impl YauTwist, endo: &LinMap, prefix: &str, r: &mut AxiomReport) {
    r.absorb(prefix, x.endomorphism_report(endo));
}

/// From a classical left `H`-module algebra `A`, a bialgebra endomorphism
/// `α_H` and an algebra endomorphism `α_A` with `α_A(h·a) = α_H(h)·α_A(a)`:
/// the `H_{α_H}`-module Hom-algebra `A_{α_A}` with `h▷a = α_A(h·a)`.
pub fn twist_left_module_algebra(x: &LeftModuleAlgebra, alpha_h: &LinMap, alpha_a: &LinMap) -> Result<LeftModuleAlgebra> {
    let mut r = AxiomReport::new("twist-compatibility");
    classical_entry(&mut r, "classical-base", x.base().alpha());
    classical_entry(&mut r, "classical-algebra", x.algebra().alpha());
    endo_report(x.base(), alpha_h, "base", &mut r);
    endo_report(x.algebra(), alpha_a, "algebra", &mut r);
    if r.passed() {
        left_action_compat(&mut r, "action-compat", x.base().dim(), x.action(), alpha_h, alpha_a);
    }
    incompatible(r)?;
    let base = Arc::new(yau_twist(x.base(), alpha_h)?);
    let algebra = yau_twist(x.algebra(), alpha_a)?;
    LeftModuleAlgebra::new(base, algebra, alpha_a.compose(x.action())?, x.module().is_unital())
}

/// The right-handed analogue of [`twist_left_module_algebra`].
pub fn twist_right_module_algebra(x: &RightModuleAlgebra, alpha_h: &LinMap, alpha_c: &LinMap) -> Result<RightModuleAlgebra> {
    let mut r = AxiomReport::new("twist-compatibility");
    classical_entry(&mut r, "classical-base", x.base().alpha());
    classical_entry(&mut r, "classical-algebra", x.algebra().alpha());
    endo_report(x.base(), alpha_h, "base", &mut r);
    endo_report(x.algebra(), alpha_c, "algebra", &mut r);
    if r.passed() {
        right_action_compat(&mut r, "action-compat", x.base().dim(), x.action(), alpha_h, alpha_c);
    }
    incompatible(r)?;
    let base = Arc::new(yau_twist(x.base(), alpha_h)?);
    let algebra = yau_twist(x.algebra(), alpha_c)?;
    RightModuleAlgebra::new(base, algebra, alpha_c.compose(x.action())?, x.module().is_unital())
}

/// From a classical bimodule `M` over `A`, an algebra endomorphism `α_A`
/// and `α_M` compatible with both actions: the bimodule over `A_{α_A}` with
/// actions `a▷m = α_M(a·m)` and `m◁a = α_M(m·a)`.
pub fn twist_bimodule(b: &Bimodule, alpha_a: &LinMap, alpha_m: &LinMap) -> Result<Bimodule> {
    let a = b.over();
    let mut r = AxiomReport::new("twist-compatibility");
    classical_entry(&mut r, "classical-algebra", a.alpha());
    classical_entry(&mut r, "classical-module", b.alpha());
    endo_report(a, alpha_a, "algebra", &mut r);
    if alpha_m.rows() != b.dim() || alpha_m.cols() != b.dim() {
        r.push(AxiomEntry::failed_with("module-endo-shape", Group::Axiom, "α_M has the wrong size"));
    }
    if r.passed() {
        left_action_compat(&mut r, "left-compat", a.dim(), b.left().action(), alpha_a, alpha_m);
        right_action_compat(&mut r, "right-compat", a.dim(), b.right().action(), alpha_a, alpha_m);
    }
    incompatible(r)?;
    let over = Arc::new(yau_twist(a, alpha_a)?);
    let left = LeftModule::new(over.clone(), alpha_m.clone(), alpha_m.compose(b.left().action())?, false)?;
    let right = RightModule::new(over, alpha_m.clone(), alpha_m.compose(b.right().action())?, false)?;
    Bimodule::new(left, right)
}

/// From a classical `H`-bimodule algebra `D`: the `H_{α_H}`-bimodule
/// Hom-algebra `D_{α_D}` with `h▷d = α_D(h·d)`, `d◁h = α_D(d·h)`.
pub fn twist_bimodule_algebra(x: &BimoduleAlgebra, alpha_h: &LinMap, alpha_d: &LinMap) -> Result<BimoduleAlgebra> {
    let mut r = AxiomReport::new("twist-compatibility");
    classical_entry(&mut r, "classical-base", x.base().alpha());
    classical_entry(&mut r, "classical-algebra", x.algebra().alpha());
    endo_report(x.base(), alpha_h, "base", &mut r);
    endo_report(x.algebra(), alpha_d, "algebra", &mut r);
    if r.passed() {
        let nh = x.base().dim();
        left_action_compat(&mut r, "left-compat", nh, x.left(), alpha_h, alpha_d);
        right_action_compat(&mut r, "right-compat", nh, x.right(), alpha_h, alpha_d);
    }
    incompatible(r)?;
    let base = Arc::new(yau_twist(x.base(), alpha_h)?);
    let algebra = yau_twist(x.algebra(), alpha_d)?;
    BimoduleAlgebra::new(base, algebra, alpha_d.compose(x.left())?, alpha_d.compose(x.right())?, x.is_unital())
}

/// The trivial action `h·a = ε(h)α_A(a)`, a left module Hom-algebra
/// whenever `ε∘α_H = ε`.
pub fn trivial_left_action(h: &HomBialgebra, a: &HomAlgebra) -> Result<LinMap> {
    let e = h.counit_map().ok_or_else(|| Error::MissingData("counit".into()))?;
    let (nh, na) = (h.dim(), a.dim());
    Ok(crate::linalg::matrix_of(h.field(), &[nh, na], na, |t: Tensor| t.eval(0, &e).map(0, a.alpha())))
}

/// The trivial right action `c·h = ε(h)α_C(c)`.
pub fn trivial_right_action(h: &HomBialgebra, c: &HomAlgebra) -> Result<LinMap> {
    let e = h.counit_map().ok_or_else(|| Error::MissingData("counit".into()))?;
    let (nh, nc) = (h.dim(), c.dim());
    Ok(crate::linalg::matrix_of(h.field(), &[nc, nh], nc, |t: Tensor| t.eval(1, &e).map(0, c.alpha())))
}
