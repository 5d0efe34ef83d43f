//! Braidings: the one of the YD category, and the prebraiding of modules
//! over a quasitriangular Hom-bialgebra.

use crate::error::{Error, Result};
use crate::hom::{check_quasitriangular, HomBialgebra};
use crate::linalg::{kron, kron_all, matrix_of, LinMap, Tensor};
use crate::modules::module::{module_morphism_report, tensor_of_modules, LeftModule};
use crate::modules::yd::{check_yetter_drinfeld, yd_morphism_report, yd_tensor, YDModule};
use crate::report::{AxiomReport, Group};

/// `c_{M,N}` together with its inverse.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Braiding {
    /// `M⊗N → N⊗M`.
    pub c: LinMap,
    /// `N⊗M → M⊗N`.
    pub c_inv: LinMap,
}

fn yd_ok(y: &YDModule) -> Result<()> {
    let r = check_yetter_drinfeld(y)?;
    if !r.passed() {
        return Err(Error::prerequisite("Yetter-Drinfeld", r));
    }
    Ok(())
}

/// `c(m⊗n) = α_N⁻¹(n₍₀₎) ⊗ α_M⁻¹(α_H⁻¹(n₍₁₎)·m)` and
/// `c⁻¹(n⊗m) = α_M⁻¹(α_H⁻¹(S(n₍₁₎))·m) ⊗ α_N⁻¹(n₍₀₎)`.
pub fn yd_braiding(m: &YDModule, n: &YDModule) -> Result<Braiding> {
    yd_ok(m)?;
    yd_ok(n)?;
    braiding_unchecked(m, n)
}

pub(crate) fn braiding_unchecked(m: &YDModule, n: &YDModule) -> Result<Braiding> {
    let h = m.hopf();
    let (f, nh, nm, nn) = (h.field(), h.dim(), m.dim(), n.dim());
    let (ah_inv, am_inv, an_inv) = (h.alpha_inv()?, m.alpha_inv()?, n.alpha_inv()?);
    let s = h.antipode();
    let c = matrix_of(f, &[nm, nn], nn * nm, |t| {
        t.split(1, n.coaction(), nn, nh)
            .permute(&[1, 2, 0])
            .map(0, &an_inv)
            .map(1, ah_inv)
            .merge(1, m.action())
            .map(1, &am_inv)
    });
    let c_inv = matrix_of(f, &[nn, nm], nm * nn, |t| {
        t.split(0, n.coaction(), nn, nh)
            .map(1, s)
            .map(1, ah_inv)
            .merge(1, m.action())
            .map(1, &am_inv)
            .map(0, &an_inv)
            .permute(&[1, 0])
    });
    Ok(Braiding { c, c_inv })
}

/// `a_{M,N,P} = α_M⁻¹ ⊗ id ⊗ α_P` on the flat basis of `M⊗N⊗P`.
pub fn associator(m: &YDModule, n: &YDModule, p: &YDModule) -> Result<LinMap> {
    Ok(kron_all(&[&m.alpha_inv()?, &LinMap::identity(m.field(), n.dim()), p.alpha()]))
}

/// `l_M(λ⊗m) = λα_M⁻¹(m)`; on the flat basis `k⊗M = M` this is `α_M⁻¹`.
pub fn left_unitor(m: &YDModule) -> Result<LinMap> {
    m.alpha_inv()
}

/// `r_M(m⊗λ) = λα_M⁻¹(m)`.
pub fn right_unitor(m: &YDModule) -> Result<LinMap> {
    m.alpha_inv()
}

fn compose(maps: &[&LinMap]) -> LinMap {
    let mut acc = maps[0].clone();
    for m in &maps[1..] {
        acc = acc.compose(m).expect("composable maps");
    }
    acc
}

/// Inverse pair, morphism property, and the categorical identities
/// instantiated on `M`, `N`, `P`: both hexagons, the triangle, and the unit
/// constraints being morphisms.
pub fn braiding_report(m: &YDModule, n: &YDModule, p: &YDModule) -> Result<AxiomReport> {
    yd_ok(m)?;
    yd_ok(n)?;
    yd_ok(p)?;
    let f = m.field();
    let id = |k: usize| LinMap::identity(f, k);
    let (dm, dn, dp) = (m.dim(), n.dim(), p.dim());
    let mut r = AxiomReport::new("yd-braiding");

    let b = braiding_unchecked(m, n)?;
    r.maps_equal("c-cinv", Group::Axiom, &b.c.compose(&b.c_inv)?, &id(dm * dn));
    r.maps_equal("cinv-c", Group::Axiom, &b.c_inv.compose(&b.c)?, &id(dm * dn));
    let mn = yd_tensor(m, n)?;
    let nm = yd_tensor(n, m)?;
    r.absorb("c-morphism", yd_morphism_report(&mn, &nm, &b.c));

    // (M⊗N)⊗P → N⊗(P⊗M)
    let np = yd_tensor(n, p)?;
    let c_m_np = braiding_unchecked(m, &np)?.c;
    let c_mp = braiding_unchecked(m, p)?.c;
    let lhs = compose(&[&associator(n, p, m)?, &c_m_np, &associator(m, n, p)?]);
    let rhs = compose(&[&kron(&id(dn), &c_mp), &associator(n, m, p)?, &kron(&b.c, &id(dp))]);
    r.maps_equal("hexagon1", Group::Axiom, &lhs, &rhs);

    // M⊗(N⊗P) → (P⊗M)⊗N
    let mn_p = braiding_unchecked(&mn, p)?.c;
    let c_np = braiding_unchecked(n, p)?.c;
    let a_inv = |x: &YDModule, y: &YDModule, z: &YDModule| -> Result<LinMap> {
        Ok(kron_all(&[x.alpha(), &id(y.dim()), &z.alpha_inv()?]))
    };
    let lhs = compose(&[&a_inv(p, m, n)?, &mn_p, &a_inv(m, n, p)?]);
    let rhs = compose(&[&kron(&c_mp, &id(dn)), &a_inv(m, p, n)?, &kron(&id(dm), &c_np)]);
    r.maps_equal("hexagon2", Group::Axiom, &lhs, &rhs);

    // The unit object and its constraints.
    let k = crate::modules::yd::unit_object(m.hopf_arc().clone())?;
    let km = yd_tensor(&k, m)?;
    let mk = yd_tensor(m, &k)?;
    r.absorb("l-morphism", yd_morphism_report(&km, m, &left_unitor(m)?));
    r.absorb("r-morphism", yd_morphism_report(&mk, m, &right_unitor(m)?));
    let tri_lhs = kron(&id(dm), &left_unitor(n)?).compose(&associator(m, &k, n)?)?;
    let tri_rhs = kron(&right_unitor(m)?, &id(dn));
    r.maps_equal("triangle", Group::Axiom, &tri_lhs, &tri_rhs);
    Ok(r)
}

/// `c_{M',N'} ∘ (f⊗g) = (g⊗f) ∘ c_{M,N}` for YD morphisms `f: M → M'`,
/// `g: N → N'`.
pub fn braiding_naturality(
    (m, m2, f): (&YDModule, &YDModule, &LinMap),
    (n, n2, g): (&YDModule, &YDModule, &LinMap),
) -> Result<AxiomReport> {
    let mut r = AxiomReport::new("braiding-naturality");
    r.absorb("f", yd_morphism_report(m, m2, f));
    r.absorb("g", yd_morphism_report(n, n2, g));
    let c = braiding_unchecked(m, n)?.c;
    let c2 = braiding_unchecked(m2, n2)?.c;
    r.maps_equal("naturality", Group::Axiom, &c2.compose(&kron(f, g))?, &kron(g, f).compose(&c)?);
    Ok(r)
}

/// `c(m⊗n) = α_N⁻¹(R²·n) ⊗ α_M⁻¹(R¹·m)` for modules over a quasitriangular
/// Hom-bialgebra.
pub fn qt_module_braiding(h: &HomBialgebra, r: &Tensor, m: &LeftModule, n: &LeftModule) -> Result<LinMap> {
    let qt = check_quasitriangular(h, r)?;
    if !qt.passed() {
        return Err(Error::QtCheckFailed { report: Box::new(qt) });
    }
    if !m.is_unital() || !n.is_unital() {
        return Err(Error::Validation(vec!["modules must be unital".into()]));
    }
    if m.over() != h.algebra() || n.over() != h.algebra() {
        return Err(Error::BaseMismatch("modules must be over the given Hom-bialgebra".into()));
    }
    let (am_inv, an_inv) = (m.alpha_inv()?, n.alpha_inv()?);
    let (nm, nn) = (m.dim(), n.dim());
    Ok(matrix_of(h.field(), &[nm, nn], nn * nm, |t| {
        r.tensor(&t).permute(&[1, 3, 0, 2]).merge(0, n.action()).merge(1, m.action()).map(0, &an_inv).map(1, &am_inv)
    }))
}

/// The prebraiding as a module morphism `M⊗N → N⊗M`, with naturality
/// against the supplied module morphisms `f: M → M'`, `g: N → N'` if given.
pub fn qt_braiding_report(
    h: &HomBialgebra,
    r: &Tensor,
    m: &LeftModule,
    n: &LeftModule,
    naturality: Option<((&LeftModule, &LinMap), (&LeftModule, &LinMap))>,
) -> Result<AxiomReport> {
    let c = qt_module_braiding(h, r, m, n)?;
    let mut rep = AxiomReport::new("qt-braiding");
    let mn = tensor_of_modules(h, m, n)?;
    let nm = tensor_of_modules(h, n, m)?;
    rep.absorb("c-morphism", module_morphism_report(&mn, &nm, &c));
    if let Some(((m2, f), (n2, g))) = naturality {
        rep.absorb("f", module_morphism_report(m, m2, f));
        rep.absorb("g", module_morphism_report(n, n2, g));
        let c2 = qt_module_braiding(h, r, m2, n2)?;
        rep.maps_equal("naturality", Group::Axiom, &c2.compose(&kron(f, g))?, &kron(g, f).compose(&c)?);
    }
    Ok(rep)
}
