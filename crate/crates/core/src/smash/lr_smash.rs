//! The L-R-smash product `D♮H` with
//! `R(h⊗d) = α_H⁻²(h₁)·α_D⁻¹(d) ⊗ α_H⁻¹(h₂)` and
//! `Q(d⊗h) = α_D⁻¹(d)·α_H⁻²(h₂) ⊗ α_H⁻¹(h₁)`.

use crate::error::{Error, Result};
use crate::hom::{HomAlgebra, HomHopfAlgebra};
use crate::linalg::{invert_linear_map, matrix_of, LinMap};
use crate::modules::{check_bimodule_hom_algebra, check_module, BimoduleAlgebra};
use crate::report::{AxiomEntry, AxiomReport, Group};
use crate::smash::smash::left_smash_map;
use crate::twisted::iterated::regroup;
use crate::twisted::{check_lr_data, LRData};
use crate::twisted::lr::lr_product_unchecked;

pub(crate) fn require_bimodule_algebra(x: &BimoduleAlgebra) -> Result<()> {
    x.base().alpha_pow(-1)?;
    x.algebra().alpha_inv()?;
    check_bimodule_hom_algebra(x)?;
    Ok(())
}

pub(crate) fn q_map(x: &BimoduleAlgebra) -> Result<LinMap> {
    let h = x.base();
    let (f, nh, nd) = (h.field(), h.dim(), x.algebra().dim());
    let (inv1, inv2, d_inv) = (h.alpha_pow(-1)?, h.alpha_pow(-2)?, x.algebra().alpha_inv()?);
    Ok(matrix_of(f, &[nd, nh], nd * nh, |t| {
        t.split(1, h.delta(), nh, nh).map(0, &d_inv).map(2, &inv2).permute(&[0, 2, 1]).merge(0, x.right()).map(1, &inv1).flatten()
    }))
}

/// `(R, Q)` of `D♮H`.
pub fn lr_smash_data(x: &BimoduleAlgebra) -> Result<LRData> {
    require_bimodule_algebra(x)?;
    LRData::new(x.algebra().clone(), x.base().algebra().clone(), left_smash_map(&x.left_module_algebra())?, q_map(x)?)
}

/// `(d♮h)(d'♮h') = [α_D⁻¹(d)·α_H⁻²(h'₂)][α_H⁻²(h₁)·α_D⁻¹(d')] ♮ α_H⁻¹(h₂h'₁)`,
/// evaluated directly.
pub fn lr_smash_direct(x: &BimoduleAlgebra) -> Result<LinMap> {
    let h = x.base();
    let (f, nh, nd) = (h.field(), h.dim(), x.algebra().dim());
    let (inv1, inv2, d_inv) = (h.alpha_pow(-1)?, h.alpha_pow(-2)?, x.algebra().alpha_inv()?);
    let d = h.delta();
    Ok(matrix_of(f, &[nd, nh, nd, nh], nd * nh, |t| {
        t.split(3, d, nh, nh)
            .split(1, d, nh, nh)
            .permute(&[0, 5, 1, 3, 2, 4])
            .map(0, &d_inv)
            .map(1, &inv2)
            .merge(0, x.right())
            .map(1, &inv2)
            .map(2, &d_inv)
            .merge(1, x.left())
            .merge(0, x.algebra().mu())
            .merge(1, h.mu())
            .map(1, &inv1)
            .flatten()
    }))
}

/// The data, the product, and a report with the L-R checks and the
/// comparison against [`lr_smash_direct`].
pub fn lr_smash_report(x: &BimoduleAlgebra) -> Result<(LRData, HomAlgebra, AxiomReport)> {
    let data = lr_smash_data(x)?;
    let mut rep = AxiomReport::new("lr-smash");
    rep.absorb("lr", regroup(check_lr_data(&data), Group::Derived));
    let product = lr_product_unchecked(&data)?;
    rep.maps_equal("direct-formula", Group::Consistency, product.mu(), &lr_smash_direct(x)?);
    Ok((data, product, rep))
}

/// `D♮H = D _Q⊗_R H` with structure map `α_D⊗α_H`.
pub fn lr_smash(x: &BimoduleAlgebra) -> Result<(LRData, HomAlgebra)> {
    let (data, product, rep) = lr_smash_report(x)?;
    if !rep.passed() {
        return Err(Error::prerequisite("L-R-smash", rep));
    }
    Ok((data, product))
}

fn require_hopf_base(x: &BimoduleAlgebra, h: &HomHopfAlgebra) -> Result<()> {
    if x.base() != h.bialgebra() {
        return Err(Error::BaseMismatch("bimodule algebra is over a different Hom-bialgebra".into()));
    }
    Ok(())
}

/// `Q⁻¹(d⊗h) = α_D⁻¹(d)·α_H⁻²(S⁻¹(h₂)) ⊗ α_H⁻¹(h₁)`.
pub fn q_inverse_closed_form(x: &BimoduleAlgebra, h: &HomHopfAlgebra) -> Result<LinMap> {
    require_hopf_base(x, h)?;
    let s_inv = h.antipode_inv()?;
    let (f, nh, nd) = (h.field(), h.dim(), x.algebra().dim());
    let (inv1, inv2, d_inv) = (h.alpha_pow(-1)?, h.alpha_pow(-2)?, x.algebra().alpha_inv()?);
    Ok(matrix_of(f, &[nd, nh], nd * nh, |t| {
        t.split(1, h.delta(), nh, nh)
            .map(0, &d_inv)
            .map(2, s_inv)
            .map(2, &inv2)
            .permute(&[0, 2, 1])
            .merge(0, x.right())
            .map(1, &inv1)
            .flatten()
    }))
}

/// `1_H·d = d·1_H = α_D(d)`.
pub fn unit_action_report(x: &BimoduleAlgebra, h: &HomHopfAlgebra) -> AxiomReport {
    let mut r = AxiomReport::new("unit-action");
    let (f, nd, u, al) = (h.field(), x.algebra().dim(), h.unit_tensor(), x.algebra().alpha());
    if !x.is_unital() {
        r.push(AxiomEntry::failed_with("unitaction", Group::Axiom, "actions are not flagged unital"));
        return r;
    }
    r.identity("unitaction-left", Group::Axiom, f, &[nd], |t| u.tensor(&t).merge(0, x.left()), |t| t.map(0, al));
    r.identity("unitaction-right", Group::Axiom, f, &[nd], |t| t.tensor(&u).merge(0, x.right()), |t| t.map(0, al));
    r
}

/// The closed form of `Q⁻¹` with a report on both compositions with `Q`
/// and on agreement with the matrix inverse. Only the right module
/// structure is required; a failing `(unitaction)` shows up in the report.
pub fn invert_q_report(x: &BimoduleAlgebra, h: &HomHopfAlgebra) -> Result<(LinMap, AxiomReport)> {
    require_hopf_base(x, h)?;
    x.algebra().alpha_inv()?;
    h.alpha_inv()?;
    let right = check_module(x.bimodule().right());
    if !right.passed() {
        return Err(Error::prerequisite("right module", right));
    }
    let q = q_map(x)?;
    let closed = q_inverse_closed_form(x, h)?;
    let id = LinMap::identity(h.field(), q.rows());
    let mut r = unit_action_report(x, h);
    r.subject = "q-inverse".into();
    for e in &mut r.entries {
        e.group = Group::Diagnostic;
    }
    r.maps_equal("qinv-q", Group::Derived, &closed.compose(&q)?, &id);
    r.maps_equal("q-qinv", Group::Derived, &q.compose(&closed)?, &id);
    match invert_linear_map(&q) {
        Ok(inv) => {
            r.maps_equal("matches-inverse", Group::Consistency, &closed, &inv);
        }
        Err(_) => r.push(AxiomEntry::failed_with("matches-inverse", Group::Consistency, "Q is singular")),
    }
    Ok((closed, r))
}

/// `Q⁻¹` by the closed form, after checking `(unitaction)`.
pub fn invert_q(x: &BimoduleAlgebra, h: &HomHopfAlgebra) -> Result<LinMap> {
    let unit = unit_action_report(x, h);
    if !unit.passed() {
        return Err(Error::UnitalActionMissing { report: Box::new(unit) });
    }
    let (closed, r) = invert_q_report(x, h)?;
    if !r.passed() {
        return Err(Error::prerequisite("closed-form inverse", r));
    }
    Ok(closed)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::double::dual_algebra;
    use crate::hom::check_hom_algebra;
    use crate::io::catalog::catalog_get;
    use std::sync::Arc;

    #[test]
    fn dual_lr_smash_over_twisted_sweedler() {
        let h = Arc::new(catalog_get("h4-sweedler-twisted").unwrap());
        let d = dual_algebra(h.clone(), 0, 0).unwrap();
        let (data, product, rep) = lr_smash_report(d.bimodule_algebra()).unwrap();
        assert!(rep.passed(), "{rep}");
        assert_eq!(product.dim(), 16);
        assert!(check_hom_algebra(&product).passed());
        assert_eq!(product.alpha(), &crate::linalg::kron(d.beta(), h.alpha()));
        let (closed, r) = invert_q_report(d.bimodule_algebra(), &h).unwrap();
        assert!(r.passed(), "{r}");
        assert_eq!(closed, invert_linear_map(data.q()).unwrap());
    }

    #[test]
    fn classical_regular_group_algebra_inverse() {
        let h = Arc::new(catalog_get("z2-group").unwrap());
        let base = Arc::new(h.bialgebra().clone());
        let reg = BimoduleAlgebra::new(base, h.algebra().clone(), h.mu().clone(), h.mu().clone(), true).unwrap();
        let closed = invert_q(&reg, &h).unwrap();
        assert_eq!(closed, invert_linear_map(&q_map(&reg).unwrap()).unwrap());
    }

    #[test]
    fn broken_unit_action_is_reported() {
        let h = Arc::new(catalog_get("h4-sweedler-twisted").unwrap());
        let d = dual_algebra(h.clone(), 0, 0).unwrap();
        let x = d.bimodule_algebra();
        let f = h.field();
        // Scale the right action of 1_H on e^0.
        let right = x.right().with_entry(0, 0, f.from_i64(2));
        let bad = BimoduleAlgebra::new(Arc::new(h.bialgebra().clone()), x.algebra().clone(), x.left().clone(), right, true).unwrap();
        assert!(matches!(invert_q(&bad, &h), Err(Error::UnitalActionMissing { .. })));
    }

    #[test]
    fn classical_lr_smash_formula() {
        // (d♮h)(d'♮h') = (d·h'₂)(h₁·d')♮h₂h'₁ for α = id.
        let h = crate::io::catalog::sweedler_h4();
        let d = dual_algebra(Arc::new(h.clone()), 0, 0).unwrap();
        let x = d.bimodule_algebra();
        let (_, prod) = lr_smash(x).unwrap();
        let (n, f, dd) = (4, h.field(), h.delta());
        let expect = matrix_of(f, &[n, n, n, n], n * n, |t| {
            t.split(1, dd, n, n)
                .split(4, dd, n, n)
                .permute(&[0, 5, 1, 3, 2, 4])
                .merge(0, x.right())
                .merge(1, x.left())
                .merge(0, x.algebra().mu())
                .merge(1, h.mu())
                .flatten()
        });
        assert_eq!(prod.mu(), &expect);
    }

    #[test]
    fn transposed_q_breaks_lrhom7() {
        let h = Arc::new(catalog_get("h4-sweedler-twisted").unwrap());
        let d = dual_algebra(h.clone(), 0, 0).unwrap();
        let data = lr_smash_data(d.bimodule_algebra()).unwrap();
        assert!(check_lr_data(&data).passed());
        let n = data.q().rows();
        let f = h.field();
        let found = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).find_map(|(i, j)| {
            let mut perm: Vec<usize> = (0..n).collect();
            perm.swap(i, j);
            let q = LinMap::permutation(f, &perm).compose(data.q()).unwrap();
            let bad = LRData::new(data.a().clone(), data.b().clone(), data.r().clone(), q).ok()?;
            let rep = check_lr_data(&bad);
            rep.get("lrhom7").filter(|e| !e.passed()).and_then(|e| e.witness.clone())
        });
        let w = found.expect("some transposition breaks lrhom7");
        assert_ne!(w.lhs, w.rhs);
    }
}
