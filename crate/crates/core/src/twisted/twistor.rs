use crate::error::{Error, Result};
use crate::hom::HomAlgebra;
use crate::linalg::{kron, matrix_of, LinMap};
use crate::report::{AxiomReport, Group};
use crate::twisted::iterated::regroup;
use crate::twisted::lr::{check_lr_data, lr_product_unchecked, unit_if_valid, LRData};
use crate::twisted::twisting::{kron_unit, twisted_mu};

/// `T: D⊗D → D⊗D`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwistorMap {
    d: HomAlgebra,
    t: LinMap,
}

impl TwistorMap {
    pub fn new(d: HomAlgebra, t: LinMap) -> Result<TwistorMap> {
        let n = d.dim() * d.dim();
        if t.rows() != n || t.cols() != n {
            return Err(Error::DimensionMismatch { what: "twistor".into(), expected: n * n, found: t.rows() * t.cols() });
        }
        if t.field() != d.field() {
            return Err(Error::FieldMismatch);
        }
        Ok(TwistorMap { d, t })
    }

    pub fn algebra(&self) -> &HomAlgebra {
        &self.d
    }

    pub fn map(&self) -> &LinMap {
        &self.t
    }
}

/// `(multtwistor)` and `(homtwistor1)–(homtwistor3)`, with
/// `T13(d⊗d'⊗d'') = d^T⊗d'⊗d''_T`.
pub fn check_twistor(tw: &TwistorMap) -> AxiomReport {
    let (f, n, mu, al, t) = (tw.d.field(), tw.d.dim(), tw.d.mu(), tw.d.alpha(), &tw.t);
    let t13 = |x: crate::linalg::Tensor| x.permute(&[0, 2, 1]).map2(0, t, n, n).permute(&[0, 2, 1]);
    let mut rep = AxiomReport::new("twistor");
    rep.identity(
        "multtwistor",
        Group::Axiom,
        f,
        &[n, n],
        |x| x.map2(0, t, n, n).map(0, al).map(1, al),
        |x| x.map(0, al).map(1, al).map2(0, t, n, n),
    );
    rep.identity(
        "homtwistor1",
        Group::Axiom,
        f,
        &[n, n, n],
        |x| x.merge(1, mu).map(0, al).map2(0, t, n, n),
        |x| t13(x.map2(0, t, n, n)).map(0, al).merge(1, mu),
    );
    rep.identity(
        "homtwistor2",
        Group::Axiom,
        f,
        &[n, n, n],
        |x| x.merge(0, mu).map(1, al).map2(0, t, n, n),
        |x| t13(x.map2(1, t, n, n)).merge(0, mu).map(1, al),
    );
    rep.identity(
        "homtwistor3",
        Group::Axiom,
        f,
        &[n, n, n],
        |x| x.map2(1, t, n, n).map2(0, t, n, n),
        |x| x.map2(0, t, n, n).map2(1, t, n, n),
    );
    rep
}

/// `D^T = (D, μ∘T, α)`; keeps the unit of `D` when it remains one.
pub fn apply_twistor(tw: &TwistorMap) -> Result<HomAlgebra> {
    let rep = check_twistor(tw);
    if !rep.passed() {
        return Err(Error::TwistorCheckFailed { report: Box::new(rep) });
    }
    apply_unchecked(tw)
}

fn apply_unchecked(tw: &TwistorMap) -> Result<HomAlgebra> {
    unit_if_valid(&tw.d.mu().compose(&tw.t)?, tw.d.alpha(), tw.d.unit().map(<[_]>::to_vec))
}

/// The twistors `T` on `A⊗B`, `U` on `A⊗_R B` and `V` on `A _Q⊗ B`:
/// `T = (a_Q⊗b_R)⊗(a'_R⊗b'_Q)`, `U = (a_Q⊗b)⊗(a'⊗b'_Q)`, `V = (a⊗b_R)⊗(a'_R⊗b')`.
pub fn lr_twistors(d: &LRData) -> Result<(TwistorMap, TwistorMap, TwistorMap)> {
    let (a, b) = (d.a(), d.b());
    let (f, na, nb) = (a.field(), a.dim(), b.dim());
    let (r, q) = (d.r(), d.q());
    let dims = [na, nb, na, nb];
    let n2 = na * nb * na * nb;
    let t = matrix_of(f, &dims, n2, |x| {
        x.map2(1, r, na, nb).permute(&[0, 3, 1, 2]).map2(0, q, na, nb).permute(&[0, 3, 2, 1]).flatten()
    });
    let u = matrix_of(f, &dims, n2, |x| x.permute(&[0, 3, 1, 2]).map2(0, q, na, nb).permute(&[0, 2, 3, 1]).flatten());
    let v = matrix_of(f, &dims, n2, |x| x.map2(1, r, na, nb).permute(&[0, 2, 1, 3]).flatten());
    let alpha = kron(a.alpha(), b.alpha());
    let unit = kron_unit(a, b);
    let plain = unit_if_valid(&twisted_mu(a, b, &crate::twisted::twisting::flip_map(f, nb, na)), &alpha, unit.clone())?;
    let r_only = unit_if_valid(&twisted_mu(a, b, r), &alpha, unit)?;
    let q_only = lr_product_unchecked(&d.with_flip())?;
    Ok((TwistorMap::new(plain, t)?, TwistorMap::new(r_only, u)?, TwistorMap::new(q_only, v)?))
}

/// Checks that `T`, `U`, `V` are twistors and that
/// `A _Q⊗_R B = (A⊗B)^T = (A⊗_R B)^U = (A _Q⊗ B)^V`.
pub fn lr_twistor_report(d: &LRData) -> Result<AxiomReport> {
    let pre = check_lr_data(d);
    if !pre.passed() {
        return Err(Error::prerequisite("L-R data", pre));
    }
    let (t, u, v) = lr_twistors(d)?;
    let lr = lr_product_unchecked(d)?;
    let mut rep = AxiomReport::new("lr-twistors");
    for (name, tw) in [("T", &t), ("U", &u), ("V", &v)] {
        rep.absorb(name, regroup(check_twistor(tw), Group::Derived));
        let twisted = apply_unchecked(tw)?;
        rep.maps_equal(&format!("{name}-product"), Group::Derived, twisted.mu(), lr.mu());
    }
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::io::catalog::catalog_get;

    #[test]
    fn identity_twistor_changes_nothing() {
        let a = catalog_get("h4-sweedler-twisted").unwrap().algebra().clone();
        let tw = TwistorMap::new(a.clone(), LinMap::identity(a.field(), 16)).unwrap();
        assert!(check_twistor(&tw).passed());
        assert_eq!(apply_twistor(&tw).unwrap(), a);
    }

    #[test]
    fn swap_fails_homtwistor3_family() {
        let a = catalog_get("h4-sweedler-twisted").unwrap().algebra().clone();
        let f = a.field();
        let mut perm: Vec<usize> = (0..16).collect();
        perm.swap(0, 5);
        let tw = TwistorMap::new(a, LinMap::permutation(f, &perm)).unwrap();
        assert!(matches!(apply_twistor(&tw), Err(Error::TwistorCheckFailed { .. })));
    }
}
