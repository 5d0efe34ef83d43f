use std::sync::Arc;

use crate::error::{Error, Result};
use crate::hom::HomHopfAlgebra;
use crate::linalg::{kron, matrix_of, Field, LinMap};
use crate::modules::comodule::{comodule_entries, comodule_morphism_report, RightComodule};
use crate::modules::module::{check_module, module_morphism_report, tensor_of_modules, LeftModule};
use crate::report::{AxiomEntry, AxiomReport, Group};

/// A left-right Yetter-Drinfeld module: a unital left module and a counital
/// right comodule over the same Hom-Hopf algebra, on one carrier.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct YDModule {
    hopf: Arc<HomHopfAlgebra>,
    module: LeftModule,
    comodule: RightComodule,
}

impl YDModule {
    pub fn new(hopf: Arc<HomHopfAlgebra>, alpha: LinMap, action: LinMap, coaction: LinMap) -> Result<YDModule> {
        let module = LeftModule::new(Arc::new(hopf.algebra().clone()), alpha.clone(), action, true)?;
        let comodule = RightComodule::new(Arc::new(hopf.coalgebra().clone()), alpha, coaction, true)?;
        Ok(YDModule { hopf, module, comodule })
    }

    pub fn hopf(&self) -> &HomHopfAlgebra {
        &self.hopf
    }

    pub fn hopf_arc(&self) -> &Arc<HomHopfAlgebra> {
        &self.hopf
    }

    pub fn module(&self) -> &LeftModule {
        &self.module
    }

    pub fn comodule(&self) -> &RightComodule {
        &self.comodule
    }

    pub fn field(&self) -> Field {
        self.hopf.field()
    }

    pub fn dim(&self) -> usize {
        self.module.dim()
    }

    pub fn alpha(&self) -> &LinMap {
        self.module.alpha()
    }

    pub fn action(&self) -> &LinMap {
        self.module.action()
    }

    pub fn coaction(&self) -> &LinMap {
        self.comodule.coaction()
    }

    pub fn alpha_inv(&self) -> Result<LinMap> {
        self.module.alpha_inv()
    }
}

/// `(k, id)` with `h·λ = ε(h)λ` and `λ ↦ λ ⊗ 1`.
pub fn unit_object(hopf: Arc<HomHopfAlgebra>) -> Result<YDModule> {
    let action = hopf.counit_map();
    let coaction = LinMap::from_columns(hopf.field(), hopf.dim(), vec![hopf.unit().to_vec()])?;
    YDModule::new(hopf.clone(), LinMap::identity(hopf.field(), 1), action, coaction)
}

/// The full YD report: module, comodule, (YDlr), the equivalent form
/// (echivYDlr), and a consistency entry comparing the two. Errors only on
/// non-bijective structure maps or antipode.
pub fn yd_report(y: &YDModule) -> Result<AxiomReport> {
    let h = y.hopf();
    let ah_inv = h.alpha_inv()?;
    let s_inv = h.antipode_inv()?;
    y.alpha_inv()?;
    let (f, nh, nm) = (h.field(), h.dim(), y.dim());
    let (mu, d, ah, act, rho) = (h.mu(), h.delta(), h.alpha(), y.action(), y.coaction());
    let ah2 = h.alpha_pow(2)?;
    let ah_inv2 = h.alpha_pow(-2)?;
    let mut r = check_module(y.module());
    r.subject = "yetter-drinfeld".into();
    comodule_entries(&mut r, y.comodule());
    let structures_ok = r.passed();
    let ydlr = r.identity(
        "YDlr",
        Group::Axiom,
        f,
        &[nh, nm],
        |t| {
            t.split(0, d, nh, nh)
                .split(2, rho, nm, nh)
                .permute(&[0, 2, 1, 3])
                .map(0, ah)
                .merge(0, act)
                .map(1, &ah2)
                .map(2, ah)
                .merge(1, mu)
        },
        |t| t.split(0, d, nh, nh).permute(&[1, 2, 0]).merge(0, act).split(0, rho, nm, nh).map(2, &ah2).merge(1, mu),
    );
    let echiv = r.identity(
        "echivYDlr",
        Group::Axiom,
        f,
        &[nh, nm],
        |t| t.merge(0, act).split(0, rho, nm, nh),
        |t| {
            t.split(0, d, nh, nh)
                .split(1, d, nh, nh)
                .split(3, rho, nm, nh)
                .permute(&[1, 3, 2, 4, 0])
                .map(0, &ah_inv)
                .merge(0, act)
                .map(1, &ah_inv2)
                .map(2, &ah_inv)
                .merge(1, mu)
                .map(2, s_inv)
                .merge(1, mu)
        },
    );
    if structures_ok && ydlr != echiv {
        r.push(AxiomEntry::failed_with(
            "ydlr-equivalence",
            Group::Consistency,
            format!("YDlr {} but echivYDlr {}", status(ydlr), status(echiv)),
        ));
    } else if structures_ok {
        r.push(AxiomEntry { id: "ydlr-equivalence".into(), group: Group::Consistency, tuples: 1, witness: None, note: None });
    }
    Ok(r)
}

fn status(ok: bool) -> &'static str {
    if ok {
        "holds"
    } else {
        "fails"
    }
}

/// The YD check. Fails with `PrerequisiteFailed` (carrying the full report,
/// including YDlr) when the module or comodule axioms fail.
pub fn check_yetter_drinfeld(y: &YDModule) -> Result<AxiomReport> {
    let r = yd_report(y)?;
    let structures_ok = r.entries.iter().filter(|e| !e.id.contains("YDlr") && e.id != "ydlr-equivalence").all(|e| e.passed());
    if !structures_ok {
        return Err(Error::prerequisite("module/comodule", r));
    }
    Ok(r)
}

/// `M ⊗̂ N`: `h·(m⊗n) = h₁·m ⊗ h₂·n`, `m⊗n ↦ (m₍₀₎⊗n₍₀₎) ⊗ α_H⁻²(n₍₁₎m₍₁₎)`.
pub fn yd_tensor(m: &YDModule, n: &YDModule) -> Result<YDModule> {
    if m.hopf() != n.hopf() {
        return Err(Error::BaseMismatch("YD modules over different Hom-Hopf algebras".into()));
    }
    let h = m.hopf();
    let module = tensor_of_modules(h.bialgebra(), m.module(), n.module())?;
    let (nh, nm, nn) = (h.dim(), m.dim(), n.dim());
    let inv2 = h.alpha_pow(-2)?;
    let coaction = matrix_of(h.field(), &[nm, nn], nm * nn * nh, |t| {
        t.split(0, m.coaction(), nm, nh)
            .split(2, n.coaction(), nn, nh)
            .permute(&[0, 2, 3, 1])
            .merge(2, h.mu())
            .map(2, &inv2)
    });
    YDModule::new(m.hopf_arc().clone(), kron(m.alpha(), n.alpha()), module.action().clone(), coaction)
}

/// Module and comodule morphism conditions for `f: M → N`.
pub fn yd_morphism_report(m: &YDModule, n: &YDModule, f: &LinMap) -> AxiomReport {
    let mut r = AxiomReport::new("yd-morphism");
    r.absorb("module", module_morphism_report(m.module(), n.module(), f));
    r.absorb("comodule", comodule_morphism_report(m.comodule(), n.comodule(), f));
    r
}
