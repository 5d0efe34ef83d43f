use crate::error::{Error, Result};
use crate::hom::algebra::{check_endo_shape, check_four_element, HomAlgebra};
use crate::hom::bialgebra::{bialgebra_report, check_reindexing, HomBialgebra};
use crate::hom::coalgebra::HomCoalgebra;
use crate::linalg::{invert_linear_map, Field, LinMap, Scalar, Tensor};
use crate::report::{AxiomEntry, AxiomReport, Group};

/// A unital, counital Hom-bialgebra with an antipode. The inverses of `α`
/// and `S` are computed once at construction when they exist.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomHopfAlgebra {
    bialgebra: HomBialgebra,
    antipode: LinMap,
    alpha_inv: Option<LinMap>,
    s_inv: Option<LinMap>,
}

impl HomHopfAlgebra {
    pub fn new(bialgebra: HomBialgebra, antipode: LinMap) -> Result<HomHopfAlgebra> {
        if bialgebra.unit().is_none() {
            return Err(Error::MissingData("unit".into()));
        }
        if bialgebra.counit().is_none() {
            return Err(Error::MissingData("counit".into()));
        }
        check_endo_shape(&antipode, bialgebra.dim(), "antipode")?;
        if antipode.field() != bialgebra.field() {
            return Err(Error::FieldMismatch);
        }
        let alpha_inv = invert_linear_map(bialgebra.alpha()).ok();
        let s_inv = invert_linear_map(&antipode).ok();
        Ok(HomHopfAlgebra { bialgebra, antipode, alpha_inv, s_inv })
    }

    pub fn from_maps(
        mu: LinMap,
        delta: LinMap,
        alpha: LinMap,
        unit: Vec<Scalar>,
        counit: Vec<Scalar>,
        antipode: LinMap,
    ) -> Result<HomHopfAlgebra> {
        HomHopfAlgebra::new(HomBialgebra::from_maps(mu, delta, alpha, Some(unit), Some(counit))?, antipode)
    }

    pub fn bialgebra(&self) -> &HomBialgebra {
        &self.bialgebra
    }

    pub fn algebra(&self) -> &HomAlgebra {
        self.bialgebra.algebra()
    }

    pub fn coalgebra(&self) -> &HomCoalgebra {
        self.bialgebra.coalgebra()
    }

    pub fn field(&self) -> Field {
        self.bialgebra.field()
    }

    pub fn dim(&self) -> usize {
        self.bialgebra.dim()
    }

    pub fn mu(&self) -> &LinMap {
        self.bialgebra.mu()
    }

    pub fn delta(&self) -> &LinMap {
        self.bialgebra.delta()
    }

    pub fn alpha(&self) -> &LinMap {
        self.bialgebra.alpha()
    }

    pub fn antipode(&self) -> &LinMap {
        &self.antipode
    }

    pub fn unit(&self) -> &[Scalar] {
        self.bialgebra.unit().expect("checked at construction")
    }

    pub fn counit(&self) -> &[Scalar] {
        self.bialgebra.counit().expect("checked at construction")
    }

    pub fn unit_tensor(&self) -> Tensor {
        self.bialgebra.unit_tensor().expect("checked at construction")
    }

    pub fn counit_map(&self) -> LinMap {
        self.bialgebra.counit_map().expect("checked at construction")
    }

    pub fn alpha_inv(&self) -> Result<&LinMap> {
        self.alpha_inv.as_ref().ok_or_else(|| Error::NonBijective("structure map".into()))
    }

    pub fn antipode_inv(&self) -> Result<&LinMap> {
        self.s_inv.as_ref().ok_or_else(|| Error::NonBijective("antipode".into()))
    }

    /// `α^k` for any integer `k`.
    pub fn alpha_pow(&self, k: i32) -> Result<LinMap> {
        if k >= 0 {
            return self.alpha().power(k);
        }
        self.alpha_inv()?.power(-k)
    }
}

/// Every entry of the Hopf suite, without short-circuit: bialgebra axioms,
/// Hopf axioms, and the derived identities.
pub fn hopf_report(h: &HomHopfAlgebra) -> AxiomReport {
    hopf_report_with(h).0
}

fn hopf_report_with(h: &HomHopfAlgebra) -> (AxiomReport, bool) {
    let mut r = bialgebra_report(h.bialgebra());
    let bialgebra_ok = r.passed();
    r.subject = "hom-hopf".into();
    hopf_entries(&mut r, h);
    derived_entries(&mut r, h);
    (r, bialgebra_ok)
}

/// The Hopf axioms `Δ(1)=1⊗1`, `ε(hh')=ε(h)ε(h')`, `ε(1)=1`,
/// `S(h₁)h₂ = h₁S(h₂) = ε(h)1` and `S∘α = α∘S`, plus the derived identities
/// (reported in [`Group::Derived`]).
pub fn check_hom_hopf(h: &HomHopfAlgebra) -> Result<AxiomReport> {
    h.alpha_inv()?;
    let (r, bialgebra_ok) = hopf_report_with(h);
    if !bialgebra_ok {
        return Err(Error::prerequisite("hom-bialgebra", r));
    }
    Ok(r)
}

fn hopf_entries(r: &mut AxiomReport, h: &HomHopfAlgebra) {
    let (f, n) = (h.field(), h.dim());
    let (mu, d, al, s) = (h.mu(), h.delta(), h.alpha(), h.antipode());
    let u = h.unit_tensor();
    let e = h.counit_map();
    let unit_times = |t: Tensor| t.eval(0, &e).tensor(&u);
    r.tensors_equal("delta-unit", Group::Axiom, &u.split(0, d, n, n), &u.tensor(&u));
    r.identity("counit-mult", Group::Axiom, f, &[n, n], |t| t.merge(0, mu).eval(0, &e), |t| t.eval(0, &e).eval(0, &e));
    r.tensors_equal("counit-unit", Group::Axiom, &u.eval(0, &e), &Tensor::unit(f));
    r.identity("ant-left", Group::Axiom, f, &[n], |t| t.split(0, d, n, n).map(0, s).merge(0, mu), unit_times);
    r.identity("ant-right", Group::Axiom, f, &[n], |t| t.split(0, d, n, n).map(1, s).merge(0, mu), unit_times);
    r.identity("suplant", Group::Axiom, f, &[n], |t| t.map(0, al).map(0, s), |t| t.map(0, s).map(0, al));
}

fn derived_entries(r: &mut AxiomReport, h: &HomHopfAlgebra) {
    let (f, n) = (h.field(), h.dim());
    let (mu, d, s) = (h.mu(), h.delta(), h.antipode());
    let u = h.unit_tensor();
    let e = h.counit_map();
    let unit_times = |t: Tensor| t.eval(0, &e).tensor(&u);
    r.tensors_equal("antunit", Group::Derived, &u.map(0, s), &u);
    r.identity("antcounit", Group::Derived, f, &[n], |t| t.map(0, s).eval(0, &e), |t| t.eval(0, &e));
    r.identity(
        "antialg",
        Group::Derived,
        f,
        &[n, n],
        |t| t.merge(0, mu).map(0, s),
        |t| t.map(0, s).map(1, s).permute(&[1, 0]).merge(0, mu),
    );
    r.identity(
        "anticoalg",
        Group::Derived,
        f,
        &[n],
        |t| t.map(0, s).split(0, d, n, n),
        |t| t.split(0, d, n, n).map(0, s).map(1, s).permute(&[1, 0]),
    );
    match h.antipode_inv() {
        Ok(si) => {
            r.identity(
                "invant-left",
                Group::Derived,
                f,
                &[n],
                |t| t.split(0, d, n, n).map(1, si).permute(&[1, 0]).merge(0, mu),
                unit_times,
            );
            r.identity(
                "invant-right",
                Group::Derived,
                f,
                &[n],
                |t| t.split(0, d, n, n).map(0, si).permute(&[1, 0]).merge(0, mu),
                unit_times,
            );
        }
        Err(_) => r.push(AxiomEntry::failed_with("invant", Group::Derived, "antipode is not invertible")),
    }
    match (check_reindexing(h.bialgebra()), check_four_element(h.algebra())) {
        (Ok(a), Ok(b)) => {
            r.absorb("", a);
            r.absorb("", b);
        }
        _ => r.push(AxiomEntry::failed_with("gaga1", Group::Derived, "structure map is not invertible")),
    }
}
