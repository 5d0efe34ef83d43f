use crate::error::{Error, Result};
use crate::hom::{HomAlgebra, YauTwist};
use crate::linalg::{invert_linear_map, kron, matrix_of, LinMap, Scalar};
use crate::report::{AxiomEntry, AxiomReport, Group};
use crate::twisted::iterated::{braid_entry, iterated_twisted_product, regroup};
use crate::twisted::twisting::{
    check_twisting_map, flip_map, kron_unit, require_algebra, sweed_entries, twisted_mu, twisted_tensor_product,
    TwistingMap,
};

/// `R: B⊗A → A⊗B` and `Q: A⊗B → A⊗B`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LRData {
    a: HomAlgebra,
    b: HomAlgebra,
    r: LinMap,
    q: LinMap,
}

impl LRData {
    pub fn new(a: HomAlgebra, b: HomAlgebra, r: LinMap, q: LinMap) -> Result<LRData> {
        let n = a.dim() * b.dim();
        for (what, m) in [("R", &r), ("Q", &q)] {
            if m.rows() != n || m.cols() != n {
                return Err(Error::DimensionMismatch { what: what.into(), expected: n * n, found: m.rows() * m.cols() });
            }
            if m.field() != a.field() {
                return Err(Error::FieldMismatch);
            }
        }
        if a.field() != b.field() {
            return Err(Error::FieldMismatch);
        }
        Ok(LRData { a, b, r, q })
    }

    /// `Q = id`, so the product is `A ⊗_R B`.
    pub fn from_twisting(t: &TwistingMap) -> LRData {
        let n = t.a().dim() * t.b().dim();
        LRData { a: t.a().clone(), b: t.b().clone(), r: t.map().clone(), q: LinMap::identity(t.field(), n) }
    }

    pub fn a(&self) -> &HomAlgebra {
        &self.a
    }

    pub fn b(&self) -> &HomAlgebra {
        &self.b
    }

    pub fn r(&self) -> &LinMap {
        &self.r
    }

    pub fn q(&self) -> &LinMap {
        &self.q
    }

    /// `R` as a (non-unital) twisting map.
    pub fn r_twisting(&self) -> TwistingMap {
        TwistingMap::new(self.a.clone(), self.b.clone(), self.r.clone(), false).expect("shape checked")
    }

    /// The same `Q` with `R` replaced by the flip.
    pub fn with_flip(&self) -> LRData {
        LRData { r: flip_map(self.a.field(), self.b.dim(), self.a.dim()), ..self.clone() }
    }

    /// The same `R` with `Q = id`.
    pub fn with_identity_q(&self) -> LRData {
        LRData { q: LinMap::identity(self.a.field(), self.q.rows()), ..self.clone() }
    }
}

/// `(lrhom1)–(lrhom8)`.
pub fn check_lr_data(d: &LRData) -> AxiomReport {
    let mut rep = AxiomReport::new("lr-data");
    let (f, na, nb) = (d.a.field(), d.a.dim(), d.b.dim());
    let (aa, ab, ma, mb, q, r) = (d.a.alpha(), d.b.alpha(), d.a.mu(), d.b.mu(), &d.q, &d.r);
    sweed_entries(&mut rep, &d.a, &d.b, r, ["lrhom1", "lrhom3", "lrhom4"]);
    rep.identity(
        "lrhom2",
        Group::Axiom,
        f,
        &[na, nb],
        |t| t.map2(0, q, na, nb).map(0, aa).map(1, ab),
        |t| t.map(0, aa).map(1, ab).map2(0, q, na, nb),
    );
    rep.identity(
        "lrhom5",
        Group::Axiom,
        f,
        &[na, na, nb],
        |t| t.merge(0, ma).map(1, ab).map2(0, q, na, nb),
        |t| {
            t.map2(1, q, na, nb)
                .permute(&[0, 2, 1])
                .map2(0, q, na, nb)
                .permute(&[0, 2, 1])
                .merge(0, ma)
                .map(1, ab)
        },
    );
    rep.identity(
        "lrhom6",
        Group::Axiom,
        f,
        &[na, nb, nb],
        |t| t.merge(1, mb).map(0, aa).map2(0, q, na, nb),
        |t| {
            t.map2(0, q, na, nb)
                .permute(&[0, 2, 1])
                .map2(0, q, na, nb)
                .permute(&[0, 2, 1])
                .map(0, aa)
                .merge(1, mb)
        },
    );
    rep.identity(
        "lrhom7",
        Group::Axiom,
        f,
        &[nb, na, nb],
        |t| t.map2(0, r, na, nb).permute(&[0, 2, 1]).map2(0, q, na, nb).permute(&[2, 0, 1]),
        |t| t.map2(1, q, na, nb).map2(0, r, na, nb).permute(&[1, 0, 2]),
    );
    rep.identity(
        "lrhom8",
        Group::Axiom,
        f,
        &[na, nb, na],
        |t| t.permute(&[1, 0, 2]).map2(0, r, na, nb).permute(&[0, 2, 1]).map2(1, q, na, nb).permute(&[0, 2, 1]),
        |t| t.permute(&[0, 2, 1]).map2(1, q, na, nb).permute(&[2, 0, 1]).map2(0, r, na, nb),
    );
    rep
}

/// `(a⊗b)(a'⊗b') = a_Q a'_R ⊗ b_R b'_Q`.
pub(crate) fn lr_mu(d: &LRData) -> LinMap {
    let (na, nb) = (d.a.dim(), d.b.dim());
    matrix_of(d.a.field(), &[na, nb, na, nb], na * nb, |t| {
        t.map2(1, &d.r, na, nb)
            .permute(&[0, 3, 1, 2])
            .map2(0, &d.q, na, nb)
            .permute(&[0, 2, 3, 1])
            .merge(0, d.a.mu())
            .merge(1, d.b.mu())
            .flatten()
    })
}

/// Keeps `unit` only if it is a unit for `(μ, α)`.
pub(crate) fn unit_if_valid(mu: &LinMap, alpha: &LinMap, unit: Option<Vec<Scalar>>) -> Result<HomAlgebra> {
    if unit.is_some() {
        let candidate = HomAlgebra::from_maps(mu.clone(), alpha.clone(), unit)?;
        let u = candidate.unit_tensor().expect("unit present");
        let n = candidate.dim();
        let mut r = AxiomReport::new("unit");
        r.tensors_equal("unit-alpha", Group::Axiom, &u.map(0, alpha), &u);
        r.identity("unit1", Group::Axiom, mu.field(), &[n], |t| u.tensor(&t).merge(0, mu), |t| t.map(0, alpha));
        r.identity("unit2", Group::Axiom, mu.field(), &[n], |t| t.tensor(&u).merge(0, mu), |t| t.map(0, alpha));
        if r.passed() {
            return Ok(candidate);
        }
    }
    HomAlgebra::from_maps(mu.clone(), alpha.clone(), None)
}

/// `A _Q⊗_R B` with structure map `α_A⊗α_B`; unital with `1⊗1` when that is
/// a unit.
pub fn lr_twisted_tensor_product(d: &LRData) -> Result<HomAlgebra> {
    require_algebra(&d.a, "algebra A")?;
    require_algebra(&d.b, "algebra B")?;
    let rep = check_lr_data(d);
    if !rep.passed() {
        return Err(Error::prerequisite("L-R data", rep));
    }
    lr_product_unchecked(d)
}

pub(crate) fn lr_product_unchecked(d: &LRData) -> Result<HomAlgebra> {
    unit_if_valid(&lr_mu(d), &kron(d.a.alpha(), d.b.alpha()), kron_unit(&d.a, &d.b))
}

/// `P = Q⁻¹∘R`, its twisting-map check, and `Q: A⊗_P B → A _Q⊗_R B`
/// commuting with structure maps and multiplicative.
pub fn factorization_report(d: &LRData) -> Result<(TwistingMap, AxiomReport)> {
    d.a.alpha_inv()?;
    d.b.alpha_inv()?;
    let q_inv = invert_linear_map(&d.q).map_err(|e| match e {
        Error::SingularMap => Error::SingularQ,
        other => other,
    })?;
    let pre = check_lr_data(d);
    if !pre.passed() {
        return Err(Error::prerequisite("L-R data", pre));
    }
    let p = TwistingMap::new(d.a.clone(), d.b.clone(), q_inv.compose(&d.r)?, false)?;
    let mut rep = AxiomReport::new("q-factorization");
    rep.absorb("P", regroup(check_twisting_map(&p), Group::Derived));
    let alpha = kron(d.a.alpha(), d.b.alpha());
    rep.maps_equal("iso-alpha", Group::Derived, &d.q.compose(&alpha)?, &alpha.compose(&d.q)?);
    let mu_p = twisted_mu(&d.a, &d.b, p.map());
    let mu_lr = lr_mu(d);
    rep.maps_equal("iso-mult", Group::Derived, &d.q.compose(&mu_p)?, &mu_lr.compose(&kron(&d.q, &d.q))?);
    Ok((p, rep))
}

/// `(P, Q)` with `A ⊗_P B ≅ A _Q⊗_R B` through `Q`.
pub fn factor_through_q(d: &LRData) -> Result<(TwistingMap, LinMap)> {
    let (p, rep) = factorization_report(d)?;
    if !rep.passed() {
        return Err(Error::prerequisite("Q-factorization", rep));
    }
    Ok((p, d.q.clone()))
}

/// `R(b⊗(a⊗c)) = (a_{R1}⊗c)⊗b_{R1}` and `Q((a⊗c)⊗b) = (a⊗c_{R2})⊗b_{R2}` on
/// `(A⊗C, B)`, with the regrouping `a⊗b⊗c ↦ (a⊗c)⊗b`.
pub struct Regrouping {
    pub data: LRData,
    pub iso: LinMap,
    pub report: AxiomReport,
}

pub fn regroup_report(r1: &TwistingMap, r2: &TwistingMap, r3: &TwistingMap) -> Result<Regrouping> {
    let (a, b, c) = (r1.a(), r1.b(), r2.b());
    let (f, na, nb, nc) = (a.field(), a.dim(), b.dim(), c.dim());
    if r3.a() != a || r3.b() != c || r2.a() != b {
        return Err(Error::BaseMismatch("R1: B⊗A→A⊗B, R2: C⊗B→B⊗C, R3: C⊗A→A⊗C must share A, B, C".into()));
    }
    if r3.map() != &flip_map(f, nc, na) {
        return Err(Error::Validation(vec!["R3 must be the flip".into()]));
    }
    let mut rep = AxiomReport::new("regroup");
    if !braid_entry(&mut rep, r1, r2, r3) {
        return Err(Error::BraidConditionFailed { report: Box::new(rep) });
    }
    let ac = twisted_tensor_product(&TwistingMap::flip(a.clone(), c.clone()))?;
    let r = matrix_of(f, &[nb, na, nc], na * nc * nb, |t| t.map2(0, r1.map(), na, nb).permute(&[0, 2, 1]).flatten());
    let q = matrix_of(f, &[na, nc, nb], na * nc * nb, |t| t.map2(1, r2.map(), nb, nc).permute(&[0, 2, 1]).flatten());
    let data = LRData::new(ac, b.clone(), r, q)?;
    rep.absorb("lr", regroup(check_lr_data(&data), Group::Derived));
    let iso = matrix_of(f, &[na, nb, nc], na * nb * nc, |t| t.permute(&[0, 2, 1]).flatten());
    let iterated = iterated_twisted_product(r1, r2, r3)?;
    let lr = lr_product_unchecked(&data)?;
    let n = na * nb * nc;
    let lr_after_iso = matrix_of(f, &[n, n], n, |t| t.map(0, &iso).map(1, &iso).merge(0, lr.mu()).flatten());
    rep.maps_equal("iso-mult", Group::Derived, &iso.compose(iterated.mu())?, &lr_after_iso);
    rep.maps_equal("iso-alpha", Group::Derived, &iso.compose(iterated.alpha())?, &lr.alpha().compose(&iso)?);
    Ok(Regrouping { data, iso, report: rep })
}

/// The `L-R` data on `(A⊗C, B)` and the regrouping isomorphism.
pub fn regroup_ac(r1: &TwistingMap, r2: &TwistingMap, r3: &TwistingMap) -> Result<(LRData, LinMap)> {
    let g = regroup_report(r1, r2, r3)?;
    if !g.report.passed() {
        return Err(Error::prerequisite("regrouping", g.report));
    }
    Ok((g.data, g.iso))
}

/// Compatibility of `α_A`, `α_B` with `R`, `Q` and the algebra structures.
pub fn lr_endomorphism_report(d: &LRData, alpha_a: &LinMap, alpha_b: &LinMap) -> AxiomReport {
    let mut rep = AxiomReport::new("lr-endomorphisms");
    rep.absorb("A", d.a.endomorphism_report(alpha_a));
    rep.absorb("B", d.b.endomorphism_report(alpha_b));
    if !rep.passed() {
        return rep;
    }
    let ab = kron(alpha_a, alpha_b);
    let ba = kron(alpha_b, alpha_a);
    rep.maps_equal("R-compat", Group::Axiom, &ab.compose(&d.r).expect("shape"), &d.r.compose(&ba).expect("shape"));
    rep.maps_equal("Q-compat", Group::Axiom, &ab.compose(&d.q).expect("shape"), &d.q.compose(&ab).expect("shape"));
    rep
}

/// `A_{α_A} _Q⊗_R B_{α_B}` from classical `L-R` data and algebra maps
/// `α_A`, `α_B`.
pub fn twist_lr_product(d: &LRData, alpha_a: &LinMap, alpha_b: &LinMap) -> Result<LRData> {
    let mut rep = lr_endomorphism_report(d, alpha_a, alpha_b);
    for (what, alg) in [("A", &d.a), ("B", &d.b)] {
        if !alg.alpha().is_identity() {
            rep.push(AxiomEntry::failed_with(&format!("{what}-classical"), Group::Axiom, "structure map is not the identity"));
        }
    }
    if !rep.passed() {
        return Err(Error::IncompatibleEndomorphisms { report: Box::new(rep) });
    }
    Ok(LRData { a: d.a.twist_unchecked(alpha_a)?, b: d.b.twist_unchecked(alpha_b)?, r: d.r.clone(), q: d.q.clone() })
}

/// `A_{α_A} _Q⊗_R B_{α_B}` against `(A _Q⊗_R B)_{α_A⊗α_B}`.
pub fn twist_lr_coincidence(d: &LRData, alpha_a: &LinMap, alpha_b: &LinMap) -> Result<AxiomReport> {
    let twisted = twist_lr_product(d, alpha_a, alpha_b)?;
    let mut rep = AxiomReport::new("lr-twist");
    rep.absorb("lr", regroup(check_lr_data(&twisted), Group::Derived));
    let left = lr_twisted_tensor_product(&twisted)?;
    let right = lr_twisted_tensor_product(d)?.twist_unchecked(&kron(alpha_a, alpha_b))?;
    rep.maps_equal("coincide-mu", Group::Derived, left.mu(), right.mu());
    rep.maps_equal("coincide-alpha", Group::Derived, left.alpha(), right.alpha());
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::io::catalog::catalog_get;

    fn h4() -> HomAlgebra {
        catalog_get("h4-sweedler-twisted").unwrap().algebra().clone()
    }

    #[test]
    fn identity_q_reduces_to_the_twisting_check() {
        let a = h4();
        let t = TwistingMap::flip(a.clone(), a.clone());
        let d = LRData::from_twisting(&t);
        assert!(check_lr_data(&d).passed());
        let lr = lr_twisted_tensor_product(&d).unwrap();
        let tw = twisted_tensor_product(&t).unwrap();
        assert_eq!(lr, tw);
        let (p, iso) = factor_through_q(&d).unwrap();
        assert_eq!(p.map(), t.map());
        assert!(iso.is_identity());
    }

    #[test]
    fn zero_q_is_singular() {
        let a = h4();
        let d = LRData::new(a.clone(), a.clone(), flip_map(a.field(), 4, 4), LinMap::zeros(a.field(), 16, 16)).unwrap();
        assert!(matches!(factor_through_q(&d), Err(Error::SingularQ)));
    }

    #[test]
    fn transposed_q_is_rejected() {
        let a = h4();
        let f = a.field();
        let mut perm: Vec<usize> = (0..16).collect();
        perm.swap(1, 4);
        let bad = LRData::new(a.clone(), a, flip_map(f, 4, 4), LinMap::permutation(f, &perm)).unwrap();
        assert!(!check_lr_data(&bad).passed());
        assert!(matches!(lr_twisted_tensor_product(&bad), Err(Error::PrerequisiteFailed { .. })));
    }

    #[test]
    fn all_flips_regroup_a_triple_product() {
        let a = h4();
        let t = TwistingMap::flip(a.clone(), a.clone());
        let (d, iso) = regroup_ac(&t, &t, &t).unwrap();
        assert!(check_lr_data(&d).passed());
        assert_eq!(iso.rows(), 64);
    }
}
