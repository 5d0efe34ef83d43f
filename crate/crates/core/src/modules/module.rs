use std::sync::Arc;

use crate::error::{Error, Result};
use crate::hom::{check_endo_shape, HomAlgebra, HomBialgebra};
use crate::linalg::{kron, matrix_of, Field, LinMap};
use crate::report::{AxiomReport, Group};

/// A left module `(M, α_M)` over a Hom-algebra; the action is the
/// `dim M x (dim A · dim M)` matrix of `a ⊗ m ↦ a·m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeftModule {
    over: Arc<HomAlgebra>,
    alpha: LinMap,
    action: LinMap,
    unital: bool,
}

/// A right module; the action is the matrix of `m ⊗ a ↦ m·a`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RightModule {
    over: Arc<HomAlgebra>,
    alpha: LinMap,
    action: LinMap,
    unital: bool,
}

fn validate(over: &HomAlgebra, alpha: &LinMap, action: &LinMap, what: &str) -> Result<usize> {
    let m = alpha.rows();
    check_endo_shape(alpha, m, &format!("{what} structure map"))?;
    if action.rows() != m || action.cols() != m * over.dim() {
        return Err(Error::DimensionMismatch { what: format!("{what} action"), expected: m * m * over.dim(), found: action.rows() * action.cols() });
    }
    if alpha.field() != over.field() || action.field() != over.field() {
        return Err(Error::FieldMismatch);
    }
    Ok(m)
}

macro_rules! module_common {
    ($t:ident, $what:literal) => {
        impl $t {
            pub fn new(over: Arc<HomAlgebra>, alpha: LinMap, action: LinMap, unital: bool) -> Result<$t> {
                validate(&over, &alpha, &action, $what)?;
                Ok($t { over, alpha, action, unital })
            }

            pub fn over(&self) -> &HomAlgebra {
                &self.over
            }

            pub fn over_arc(&self) -> &Arc<HomAlgebra> {
                &self.over
            }

            pub fn field(&self) -> Field {
                self.alpha.field()
            }

            pub fn dim(&self) -> usize {
                self.alpha.rows()
            }

            pub fn alpha(&self) -> &LinMap {
                &self.alpha
            }

            pub fn action(&self) -> &LinMap {
                &self.action
            }

            pub fn is_unital(&self) -> bool {
                self.unital
            }

            pub fn with_unital(mut self, unital: bool) -> $t {
                self.unital = unital;
                self
            }

            pub fn alpha_inv(&self) -> Result<LinMap> {
                self.alpha.power(-1).map_err(|_| Error::NonBijective(concat!($what, " structure map").into()))
            }

            /// The algebra itself acting by multiplication.
            pub fn regular(over: Arc<HomAlgebra>) -> $t {
                let alpha = over.alpha().clone();
                let action = over.mu().clone();
                let unital = over.unit().is_some();
                $t { over, alpha, action, unital }
            }
        }
    };
}

module_common!(LeftModule, "left module");
module_common!(RightModule, "right module");

/// Is implemented by both one-sided module kinds.
pub trait ModuleAxioms {
    fn module_report(&self) -> AxiomReport;
}

/// `α_M(a·m) = α_A(a)·α_M(m)`, `α_A(a)·(a'·m) = (aa')·α_M(m)` and, when
/// flagged unital, `1·m = α_M(m)`; mirrored for right modules.
pub fn check_module<M: ModuleAxioms>(m: &M) -> AxiomReport {
    m.module_report()
}

impl ModuleAxioms for LeftModule {
    fn module_report(&self) -> AxiomReport {
        let mut r = AxiomReport::new("left-module");
        left_entries(&mut r, self);
        r
    }
}

impl ModuleAxioms for RightModule {
    fn module_report(&self) -> AxiomReport {
        let mut r = AxiomReport::new("right-module");
        right_entries(&mut r, self);
        r
    }
}

fn left_entries(r: &mut AxiomReport, m: &LeftModule) {
    let a = m.over();
    let (f, na, nm) = (m.field(), a.dim(), m.dim());
    let (act, am, aa, mu) = (m.action(), m.alpha(), a.alpha(), a.mu());
    r.identity("hommod1", Group::Axiom, f, &[na, nm], |t| t.merge(0, act).map(0, am), |t| t.map(0, aa).map(1, am).merge(0, act));
    r.identity(
        "hommod2",
        Group::Axiom,
        f,
        &[na, na, nm],
        |t| t.merge(1, act).map(0, aa).merge(0, act),
        |t| t.merge(0, mu).map(1, am).merge(0, act),
    );
    if m.is_unital() {
        match a.unit_tensor() {
            Some(u) => {
                r.identity("unital", Group::Axiom, f, &[nm], |t| u.tensor(&t).merge(0, act), |t| t.map(0, am));
            }
            None => r.push(crate::report::AxiomEntry::failed_with("unital", Group::Axiom, "algebra has no unit")),
        }
    }
}

fn right_entries(r: &mut AxiomReport, m: &RightModule) {
    let a = m.over();
    let (f, na, nm) = (m.field(), a.dim(), m.dim());
    let (act, am, aa, mu) = (m.action(), m.alpha(), a.alpha(), a.mu());
    r.identity(
        "righthommod1",
        Group::Axiom,
        f,
        &[nm, na],
        |t| t.merge(0, act).map(0, am),
        |t| t.map(0, am).map(1, aa).merge(0, act),
    );
    r.identity(
        "righthommod2",
        Group::Axiom,
        f,
        &[nm, na, na],
        |t| t.merge(0, act).map(1, aa).merge(0, act),
        |t| t.merge(1, mu).map(0, am).merge(0, act),
    );
    if m.is_unital() {
        match a.unit_tensor() {
            Some(u) => {
                r.identity("right-unital", Group::Axiom, f, &[nm], |t| t.tensor(&u).merge(0, act), |t| t.map(0, am));
            }
            None => r.push(crate::report::AxiomEntry::failed_with("right-unital", Group::Axiom, "algebra has no unit")),
        }
    }
}

/// A left and a right module on one carrier with a shared structure map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bimodule {
    left: LeftModule,
    right: RightModule,
}

impl Bimodule {
    pub fn new(left: LeftModule, right: RightModule) -> Result<Bimodule> {
        if left.over() != right.over() {
            return Err(Error::BaseMismatch("left and right actions are over different algebras".into()));
        }
        if left.alpha() != right.alpha() {
            return Err(Error::Validation(vec!["left and right structure maps differ".into()]));
        }
        Ok(Bimodule { left, right })
    }

    /// Raw data: the algebra, `α_M`, and both action matrices.
    pub fn from_actions(over: Arc<HomAlgebra>, alpha: LinMap, left: LinMap, right: LinMap) -> Result<Bimodule> {
        Bimodule::new(LeftModule::new(over.clone(), alpha.clone(), left, false)?, RightModule::new(over, alpha, right, false)?)
    }

    pub fn regular(over: Arc<HomAlgebra>) -> Bimodule {
        Bimodule { left: LeftModule::regular(over.clone()), right: RightModule::regular(over) }
    }

    pub fn left(&self) -> &LeftModule {
        &self.left
    }

    pub fn right(&self) -> &RightModule {
        &self.right
    }

    pub fn over(&self) -> &HomAlgebra {
        self.left.over()
    }

    pub fn dim(&self) -> usize {
        self.left.dim()
    }

    pub fn alpha(&self) -> &LinMap {
        self.left.alpha()
    }
}

/// Both one-sided module reports followed by the bimodule law, without
/// short-circuit.
pub fn bimodule_report(b: &Bimodule) -> AxiomReport {
    let mut r = AxiomReport::new("bimodule");
    left_entries(&mut r, b.left());
    right_entries(&mut r, b.right());
    bimodule_law(&mut r, b);
    r
}

fn bimodule_law(r: &mut AxiomReport, b: &Bimodule) {
    let a = b.over();
    let (f, na, nm) = (a.field(), a.dim(), b.dim());
    let (l, rt, aa) = (b.left().action(), b.right().action(), a.alpha());
    r.identity(
        "hombimodule",
        Group::Axiom,
        f,
        &[na, nm, na],
        |t| t.merge(1, rt).map(0, aa).merge(0, l),
        |t| t.merge(0, l).map(1, aa).merge(0, rt),
    );
}

/// `α_A(a)·(m·a') = (a·m)·α_A(a')`, after both one-sided checks.
pub fn check_bimodule(b: &Bimodule) -> Result<AxiomReport> {
    let r = bimodule_report(b);
    let one_sided = r.entries.iter().filter(|e| e.id != "hombimodule").all(|e| e.passed());
    if !one_sided {
        return Err(Error::prerequisite("one-sided modules", r));
    }
    Ok(r)
}

/// `A ⊕ M` with `(a, m)(a', m') = (aa', m·a' + a·m')` and structure map
/// `α_A ⊕ α_M`. Basis: that of `A` followed by that of `M`. No unit is
/// attached.
pub fn split_null_extension(b: &Bimodule) -> Result<HomAlgebra> {
    let a = b.over();
    let (field, na, nm) = (a.field(), a.dim(), b.dim());
    let n = na + nm;
    let (mu, l, rt) = (a.mu(), b.left().action(), b.right().action());
    let mut prod = LinMap::zeros(field, n, n * n);
    for x in 0..n {
        for y in 0..n {
            let col = x * n + y;
            match (x < na, y < na) {
                (true, true) => {
                    for (k, v) in mu.column_nonzeros(x * na + y) {
                        prod.set(*k, col, v.clone());
                    }
                }
                (true, false) => {
                    for (k, v) in l.column_nonzeros(x * nm + (y - na)) {
                        prod.set(na + k, col, v.clone());
                    }
                }
                (false, true) => {
                    for (k, v) in rt.column_nonzeros((x - na) * na + y) {
                        prod.set(na + k, col, v.clone());
                    }
                }
                (false, false) => {}
            }
        }
    }
    let alpha = LinMap::from_fn(field, n, n, |r, c| match (r < na, c < na) {
        (true, true) => a.alpha().get(r, c).clone(),
        (false, false) => b.alpha().get(r - na, c - na).clone(),
        _ => field.zero(),
    });
    HomAlgebra::from_maps(prod, alpha, None)
}

/// `h·(m⊗n) = h₁·m ⊗ h₂·n` with structure map `α_M ⊗ α_N`.
pub fn tensor_of_modules(h: &HomBialgebra, m: &LeftModule, n: &LeftModule) -> Result<LeftModule> {
    if m.over() != h.algebra() || n.over() != h.algebra() {
        return Err(Error::BaseMismatch("modules must be over the given Hom-bialgebra".into()));
    }
    let (nh, nm, nn) = (h.dim(), m.dim(), n.dim());
    let d = h.delta();
    let action = matrix_of(h.field(), &[nh, nm, nn], nm * nn, |t| {
        t.split(0, d, nh, nh).permute(&[0, 2, 1, 3]).merge(0, m.action()).merge(1, n.action())
    });
    LeftModule::new(m.over_arc().clone(), kron(m.alpha(), n.alpha()), action, m.is_unital() && n.is_unital())
}

/// The one-dimensional module `h·λ = ε(h)λ` with identity structure map.
pub fn trivial_module(h: &HomBialgebra) -> Result<LeftModule> {
    let e = h.counit_map().ok_or_else(|| Error::MissingData("counit".into()))?;
    LeftModule::new(Arc::new(h.algebra().clone()), LinMap::identity(h.field(), 1), e, true)
}

/// Whether `f: M → N` commutes with the structure maps and the actions.
pub fn module_morphism_report(m: &LeftModule, n: &LeftModule, f: &LinMap) -> AxiomReport {
    let mut r = AxiomReport::new("module-morphism");
    if f.rows() != n.dim() || f.cols() != m.dim() || m.over() != n.over() {
        r.push(crate::report::AxiomEntry::failed_with("shape", Group::Axiom, "map or base algebra does not match"));
        return r;
    }
    let (fld, na, nm) = (m.field(), m.over().dim(), m.dim());
    r.maps_equal("morphism-alpha", Group::Axiom, &n.alpha().compose(f).expect("shape"), &f.compose(m.alpha()).expect("shape"));
    r.identity("morphism-action", Group::Axiom, fld, &[na, nm], |t| t.merge(0, m.action()).map(0, f), |t| t.map(1, f).merge(0, n.action()));
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::io::catalog::catalog_get;

    #[test]
    fn regular_bimodule_of_twisted_sweedler() {
        let h = catalog_get("h4-sweedler-twisted").unwrap();
        let a = Arc::new(h.algebra().clone());
        let b = Bimodule::regular(a);
        let r = check_bimodule(&b).unwrap();
        assert!(r.passed(), "{r}");
        assert!(check_hom_algebra_ok(&split_null_extension(&b).unwrap()));
    }

    fn check_hom_algebra_ok(a: &HomAlgebra) -> bool {
        crate::hom::check_hom_algebra(a).passed()
    }

    #[test]
    fn identity_structure_map_breaks_hommod1() {
        let h = catalog_get("h4-sweedler-twisted").unwrap();
        let a = Arc::new(h.algebra().clone());
        let m = LeftModule::new(a.clone(), LinMap::identity(a.field(), 4), a.mu().clone(), true).unwrap();
        assert!(!check_module(&m).holds("hommod1"));
    }

    #[test]
    fn trivial_tensor_regular() {
        let h = catalog_get("h4-sweedler-twisted").unwrap();
        let a = Arc::new(h.algebra().clone());
        let k = trivial_module(h.bialgebra()).unwrap();
        assert!(check_module(&k).passed());
        let reg = LeftModule::regular(a);
        let t = tensor_of_modules(h.bialgebra(), &k, &reg).unwrap();
        assert_eq!(t.dim(), 4);
        assert!(check_module(&t).passed());
        let rr = tensor_of_modules(h.bialgebra(), &reg, &reg).unwrap();
        assert_eq!(rr.dim(), 16);
        assert!(check_module(&rr).passed());
    }

    #[test]
    fn tensor_refuses_foreign_module() {
        let h = catalog_get("h4-sweedler-twisted").unwrap();
        let other = catalog_get("h4-sweedler").unwrap();
        let m = LeftModule::regular(Arc::new(other.algebra().clone()));
        assert!(tensor_of_modules(h.bialgebra(), &m, &m).is_err());
    }
}
