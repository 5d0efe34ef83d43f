//! Between structure files and the algebraic types.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::hom::{HomAlgebra, HomBialgebra, HomCoalgebra, HomHopfAlgebra};
use crate::io::catalog::catalog_get;
use crate::io::format::{Document, StructureFile};
use crate::linalg::{LinMap, Tensor};
use crate::modules::{
    BimoduleAlgebra, LeftModule, LeftModuleAlgebra, RightComodule, RightModule, RightModuleAlgebra, YDModule,
};
use crate::twisted::{LRData, TwistingMap};

/// What a structure is, read off its blocks.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    Endomorphism,
    Algebra,
    Coalgebra,
    Bialgebra,
    Hopf,
    LeftModule,
    RightModule,
    Comodule,
    YetterDrinfeld,
    LeftModuleAlgebra,
    RightModuleAlgebra,
    BimoduleAlgebra,
    Twisting,
    LRData,
}

impl Kind {
    pub fn as_str(self) -> &'static str {
        match self {
            Kind::Endomorphism => "endomorphism",
            Kind::Algebra => "algebra",
            Kind::Coalgebra => "coalgebra",
            Kind::Bialgebra => "bialgebra",
            Kind::Hopf => "hopf",
            Kind::LeftModule => "left-module",
            Kind::RightModule => "right-module",
            Kind::Comodule => "comodule",
            Kind::YetterDrinfeld => "yetter-drinfeld",
            Kind::LeftModuleAlgebra => "left-module-algebra",
            Kind::RightModuleAlgebra => "right-module-algebra",
            Kind::BimoduleAlgebra => "bimodule-algebra",
            Kind::Twisting => "twisting",
            Kind::LRData => "lr-data",
        }
    }
}

pub fn kind(s: &StructureFile) -> Result<Kind> {
    if s.factors.is_some() {
        return match (&s.twisting, &s.q) {
            (Some(_), Some(_)) => Ok(Kind::LRData),
            (Some(_), None) => Ok(Kind::Twisting),
            _ => Err(missing(s, "twisting")),
        };
    }
    if s.base.is_some() {
        let (l, r, c) = (s.action.is_some(), s.right_action.is_some(), s.coaction.is_some());
        return match (s.mu.is_some(), l, r, c) {
            (true, true, true, _) => Ok(Kind::BimoduleAlgebra),
            (true, true, false, _) => Ok(Kind::LeftModuleAlgebra),
            (true, false, true, _) => Ok(Kind::RightModuleAlgebra),
            (false, true, false, true) => Ok(Kind::YetterDrinfeld),
            (false, true, false, false) => Ok(Kind::LeftModule),
            (false, false, true, false) => Ok(Kind::RightModule),
            (false, false, false, true) => Ok(Kind::Comodule),
            _ => Err(Error::Validation(vec![format!("{}: unsupported combination of blocks", s.name)])),
        };
    }
    let hopf = s.antipode.is_some() && s.unit.is_some() && s.counit.is_some();
    match (s.mu.is_some(), s.delta.is_some()) {
        (true, true) if hopf => Ok(Kind::Hopf),
        (true, true) => Ok(Kind::Bialgebra),
        (true, false) => Ok(Kind::Algebra),
        (false, true) => Ok(Kind::Coalgebra),
        (false, false) if s.alpha.is_some() => Ok(Kind::Endomorphism),
        _ => Err(missing(s, "mu, delta or alpha")),
    }
}

fn missing(s: &StructureFile, what: &str) -> Error {
    Error::Validation(vec![format!("{}: missing `{what}`", s.name)])
}

fn req<'a, T>(s: &StructureFile, v: &'a Option<T>, what: &str) -> Result<&'a T> {
    v.as_ref().ok_or_else(|| missing(s, what))
}

pub fn file_algebra(s: &StructureFile) -> Result<HomAlgebra> {
    HomAlgebra::from_maps(req(s, &s.mu, "mu")?.clone(), req(s, &s.alpha, "alpha")?.clone(), s.unit.clone())
}

pub fn file_coalgebra(s: &StructureFile) -> Result<HomCoalgebra> {
    HomCoalgebra::from_maps(req(s, &s.delta, "delta")?.clone(), req(s, &s.alpha, "alpha")?.clone(), s.counit.clone())
}

pub fn file_bialgebra(s: &StructureFile) -> Result<HomBialgebra> {
    HomBialgebra::new(file_algebra(s)?, file_coalgebra(s)?)
}

pub fn file_hopf(s: &StructureFile) -> Result<HomHopfAlgebra> {
    HomHopfAlgebra::new(file_bialgebra(s)?, req(s, &s.antipode, "antipode")?.clone())
}

/// `R` as a tensor in `H⊗H`.
pub fn file_r_matrix(s: &StructureFile) -> Result<Tensor> {
    let r = req(s, &s.r_matrix, "r_matrix")?;
    Tensor::from_dense(s.field, &[s.dim, s.dim], r.entries())
}

fn lookup<'a>(doc: &'a Document, name: &str) -> Result<Option<&'a StructureFile>> {
    match doc.get(name) {
        Some(s) => Ok(Some(s)),
        None => catalog_get(name).map(|_| None),
    }
}

pub fn resolve_hopf(doc: &Document, name: &str) -> Result<HomHopfAlgebra> {
    match lookup(doc, name)? {
        Some(s) => file_hopf(s),
        None => catalog_get(name),
    }
}

pub fn resolve_bialgebra(doc: &Document, name: &str) -> Result<HomBialgebra> {
    match lookup(doc, name)? {
        Some(s) => file_bialgebra(s),
        None => Ok(catalog_get(name)?.bialgebra().clone()),
    }
}

pub fn resolve_algebra(doc: &Document, name: &str) -> Result<HomAlgebra> {
    match lookup(doc, name)? {
        Some(s) => file_algebra(s),
        None => Ok(catalog_get(name)?.algebra().clone()),
    }
}

fn base_name(s: &StructureFile) -> Result<&str> {
    Ok(req(s, &s.base, "base")?.as_str())
}

fn identity_or(s: &StructureFile) -> LinMap {
    s.alpha.clone().unwrap_or_else(|| LinMap::identity(s.field, s.dim))
}

pub fn file_left_module(doc: &Document, s: &StructureFile) -> Result<LeftModule> {
    let a = resolve_algebra(doc, base_name(s)?)?;
    let unital = s.unital.unwrap_or(a.unit().is_some());
    LeftModule::new(Arc::new(a), identity_or(s), req(s, &s.action, "action")?.clone(), unital)
}

pub fn file_right_module(doc: &Document, s: &StructureFile) -> Result<RightModule> {
    let a = resolve_algebra(doc, base_name(s)?)?;
    let unital = s.unital.unwrap_or(a.unit().is_some());
    RightModule::new(Arc::new(a), identity_or(s), req(s, &s.right_action, "right_action")?.clone(), unital)
}

pub fn file_comodule(doc: &Document, s: &StructureFile) -> Result<RightComodule> {
    let b = resolve_bialgebra(doc, base_name(s)?)?;
    let counital = s.unital.unwrap_or(b.counit().is_some());
    RightComodule::new(Arc::new(b.coalgebra().clone()), identity_or(s), req(s, &s.coaction, "coaction")?.clone(), counital)
}

pub fn file_yd(doc: &Document, s: &StructureFile) -> Result<YDModule> {
    let h = resolve_hopf(doc, base_name(s)?)?;
    YDModule::new(Arc::new(h), identity_or(s), req(s, &s.action, "action")?.clone(), req(s, &s.coaction, "coaction")?.clone())
}

fn module_algebra_parts(doc: &Document, s: &StructureFile) -> Result<(Arc<HomBialgebra>, HomAlgebra, bool)> {
    let b = resolve_bialgebra(doc, base_name(s)?)?;
    let a = file_algebra(s)?;
    let unital = s.unital.unwrap_or(a.unit().is_some() && b.unit().is_some());
    Ok((Arc::new(b), a, unital))
}

pub fn file_left_module_algebra(doc: &Document, s: &StructureFile) -> Result<LeftModuleAlgebra> {
    let (b, a, unital) = module_algebra_parts(doc, s)?;
    LeftModuleAlgebra::new(b, a, req(s, &s.action, "action")?.clone(), unital)
}

pub fn file_right_module_algebra(doc: &Document, s: &StructureFile) -> Result<RightModuleAlgebra> {
    let (b, a, unital) = module_algebra_parts(doc, s)?;
    RightModuleAlgebra::new(b, a, req(s, &s.right_action, "right_action")?.clone(), unital)
}

pub fn file_bimodule_algebra(doc: &Document, s: &StructureFile) -> Result<BimoduleAlgebra> {
    let (b, a, unital) = module_algebra_parts(doc, s)?;
    BimoduleAlgebra::new(b, a, req(s, &s.action, "action")?.clone(), req(s, &s.right_action, "right_action")?.clone(), unital)
}

fn factor_algebras(doc: &Document, s: &StructureFile) -> Result<(HomAlgebra, HomAlgebra)> {
    let f = req(s, &s.factors, "factors")?;
    Ok((resolve_algebra(doc, &f[0])?, resolve_algebra(doc, &f[1])?))
}

pub fn file_twisting(doc: &Document, s: &StructureFile) -> Result<TwistingMap> {
    let (a, b) = factor_algebras(doc, s)?;
    let unital = s.unital.unwrap_or(a.unit().is_some() && b.unit().is_some());
    TwistingMap::new(a, b, req(s, &s.twisting, "twisting")?.clone(), unital)
}

pub fn file_lr_data(doc: &Document, s: &StructureFile) -> Result<LRData> {
    let (a, b) = factor_algebras(doc, s)?;
    LRData::new(a, b, req(s, &s.twisting, "twisting")?.clone(), req(s, &s.q, "q")?.clone())
}

pub fn algebra_to_file(name: &str, a: &HomAlgebra) -> StructureFile {
    let mut s = StructureFile::empty(name, a.field(), a.dim());
    s.mu = Some(a.mu().clone());
    s.alpha = Some(a.alpha().clone());
    s.unit = a.unit().map(<[_]>::to_vec);
    s
}

pub fn bialgebra_to_file(name: &str, h: &HomBialgebra) -> StructureFile {
    let mut s = algebra_to_file(name, h.algebra());
    s.delta = Some(h.delta().clone());
    s.counit = h.counit().map(<[_]>::to_vec);
    s
}

pub fn hopf_to_file(name: &str, h: &HomHopfAlgebra) -> StructureFile {
    let mut s = bialgebra_to_file(name, h.bialgebra());
    s.antipode = Some(h.antipode().clone());
    s
}

pub fn bimodule_algebra_to_file(name: &str, base: &str, x: &BimoduleAlgebra) -> StructureFile {
    let mut s = algebra_to_file(name, x.algebra());
    s.base = Some(base.to_string());
    s.action = Some(x.left().clone());
    s.right_action = Some(x.right().clone());
    s.unital = Some(x.is_unital());
    s
}

pub fn left_module_to_file(name: &str, base: &str, m: &LeftModule) -> StructureFile {
    let mut s = StructureFile::empty(name, m.field(), m.dim());
    s.base = Some(base.to_string());
    s.alpha = Some(m.alpha().clone());
    s.action = Some(m.action().clone());
    s.unital = Some(m.is_unital());
    s
}

/// `R` as its coefficient matrix.
pub fn r_matrix_block(r: &Tensor) -> LinMap {
    let d = r.dims();
    let dense = r.to_dense();
    LinMap::from_fn(r.field(), d[0], d[1], |i, j| dense[i * d[1] + j].clone())
}
