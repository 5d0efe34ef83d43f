use crate::error::{Error, Result};
use crate::hom::{check_hom_algebra, HomAlgebra};
use crate::linalg::{kron, matrix_of, Field, LinMap, Scalar};
use crate::report::{AxiomEntry, AxiomReport, Group};

/// `R: B⊗A → A⊗B`, stored as an `(nA·nB) x (nB·nA)` matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwistingMap {
    a: HomAlgebra,
    b: HomAlgebra,
    r: LinMap,
    unital: bool,
}

impl TwistingMap {
    pub fn new(a: HomAlgebra, b: HomAlgebra, r: LinMap, unital: bool) -> Result<TwistingMap> {
        let n = a.dim() * b.dim();
        if r.rows() != n || r.cols() != n {
            return Err(Error::DimensionMismatch { what: "twisting map".into(), expected: n * n, found: r.rows() * r.cols() });
        }
        if a.field() != b.field() || r.field() != a.field() {
            return Err(Error::FieldMismatch);
        }
        Ok(TwistingMap { a, b, r, unital })
    }

    /// `b⊗a ↦ a⊗b`.
    pub fn flip(a: HomAlgebra, b: HomAlgebra) -> TwistingMap {
        let r = flip_map(a.field(), b.dim(), a.dim());
        let unital = a.unit().is_some() && b.unit().is_some();
        TwistingMap { a, b, r, unital }
    }

    pub fn a(&self) -> &HomAlgebra {
        &self.a
    }

    pub fn b(&self) -> &HomAlgebra {
        &self.b
    }

    pub fn map(&self) -> &LinMap {
        &self.r
    }

    pub fn field(&self) -> Field {
        self.a.field()
    }

    pub fn is_unital(&self) -> bool {
        self.unital
    }

    pub fn with_unital(mut self, unital: bool) -> TwistingMap {
        self.unital = unital;
        self
    }
}

/// The flip `X⊗Y → Y⊗X` for `dim X = nx`, `dim Y = ny`.
pub fn flip_map(field: Field, nx: usize, ny: usize) -> LinMap {
    let perm: Vec<usize> = (0..nx * ny).map(|j| (j % ny) * nx + j / ny).collect();
    LinMap::permutation(field, &perm)
}

/// `(homsweed0)–(homsweed2)` for `R` under the given ids.
pub(crate) fn sweed_entries(rep: &mut AxiomReport, a: &HomAlgebra, b: &HomAlgebra, r: &LinMap, ids: [&str; 3]) {
    let (f, na, nb) = (a.field(), a.dim(), b.dim());
    let (aa, ab, ma, mb) = (a.alpha(), b.alpha(), a.mu(), b.mu());
    rep.identity(
        ids[0],
        Group::Axiom,
        f,
        &[nb, na],
        |t| t.map2(0, r, na, nb).map(0, aa).map(1, ab),
        |t| t.map(0, ab).map(1, aa).map2(0, r, na, nb),
    );
    rep.identity(
        ids[1],
        Group::Axiom,
        f,
        &[nb, na, na],
        |t| t.merge(1, ma).map(0, ab).map2(0, r, na, nb),
        |t| t.map2(0, r, na, nb).map2(1, r, na, nb).merge(0, ma).map(1, ab),
    );
    rep.identity(
        ids[2],
        Group::Axiom,
        f,
        &[nb, nb, na],
        |t| t.merge(0, mb).map(1, aa).map2(0, r, na, nb),
        |t| t.map2(1, r, na, nb).map2(0, r, na, nb).map(0, aa).merge(1, mb),
    );
}

/// `(homsweed0)–(homsweed2)` and, for a unital map, `R(1⊗a) = a⊗1` and
/// `R(b⊗1) = 1⊗b`.
pub fn check_twisting_map(t: &TwistingMap) -> AxiomReport {
    let mut rep = AxiomReport::new("twisting-map");
    sweed_entries(&mut rep, &t.a, &t.b, &t.r, ["homsweed0", "homsweed1", "homsweed2"]);
    if t.unital {
        let (f, na, nb, r) = (t.field(), t.a.dim(), t.b.dim(), &t.r);
        match (t.a.unit_tensor(), t.b.unit_tensor()) {
            (Some(ua), Some(ub)) => {
                rep.identity("unital-left", Group::Axiom, f, &[na], |x| ub.tensor(&x).map2(0, r, na, nb), |x| x.tensor(&ub));
                rep.identity("unital-right", Group::Axiom, f, &[nb], |x| x.tensor(&ua).map2(0, r, na, nb), |x| ua.tensor(&x));
            }
            _ => rep.push(AxiomEntry::failed_with("unital", Group::Axiom, "algebras lack a unit")),
        }
    }
    rep
}

pub(crate) fn require_algebra(a: &HomAlgebra, what: &str) -> Result<()> {
    let r = check_hom_algebra(a);
    if !r.passed() {
        return Err(Error::prerequisite(what, r));
    }
    Ok(())
}

pub(crate) fn kron_unit(a: &HomAlgebra, b: &HomAlgebra) -> Option<Vec<Scalar>> {
    let (ua, ub) = (a.unit_tensor()?, b.unit_tensor()?);
    Some(ua.tensor(&ub).flatten().to_dense())
}

/// The multiplication `(a⊗b)(a'⊗b') = aa'_R ⊗ b_R b'`.
pub(crate) fn twisted_mu(a: &HomAlgebra, b: &HomAlgebra, r: &LinMap) -> LinMap {
    let (na, nb) = (a.dim(), b.dim());
    matrix_of(a.field(), &[na, nb, na, nb], na * nb, |t| t.map2(1, r, na, nb).merge(0, a.mu()).merge(1, b.mu()).flatten())
}

/// `A ⊗_R B` with structure map `α_A⊗α_B`; unital with `1⊗1` when `R` is.
pub fn twisted_tensor_product(t: &TwistingMap) -> Result<HomAlgebra> {
    require_algebra(&t.a, "algebra A")?;
    require_algebra(&t.b, "algebra B")?;
    let rep = check_twisting_map(t);
    if !rep.passed() {
        return Err(Error::prerequisite("twisting map", rep));
    }
    let unit = if t.unital { kron_unit(&t.a, &t.b) } else { None };
    HomAlgebra::from_maps(twisted_mu(&t.a, &t.b, &t.r), kron(t.a.alpha(), t.b.alpha()), unit)
}

/// `(a⊗1)(1⊗b) = α_A(a)⊗α_B(b)` in a unital twisted product.
pub fn abtwist_report(t: &TwistingMap, product: &HomAlgebra) -> Result<AxiomReport> {
    let (ua, ub) = (t.a.require_unit()?, t.b.require_unit()?);
    let (f, na, nb, mu) = (t.field(), t.a.dim(), t.b.dim(), product.mu());
    let (aa, ab) = (t.a.alpha(), t.b.alpha());
    let mut rep = AxiomReport::new("abtwist");
    rep.identity(
        "abtwist",
        Group::Derived,
        f,
        &[na, nb],
        |x| x.tensor(&ub).tensor(&ua).permute(&[0, 2, 3, 1]).reshape(&[na * nb, na * nb]).merge(0, mu),
        |x| x.map(0, aa).map(1, ab).flatten(),
    );
    Ok(rep)
}
