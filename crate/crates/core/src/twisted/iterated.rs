//! Iterated twisted products `A ⊗_{R1} B ⊗_{R2} C` with `R1: B⊗A → A⊗B`,
//! `R2: C⊗B → B⊗C`, `R3: C⊗A → A⊗C`.

use crate::error::{Error, Result};
use crate::hom::HomAlgebra;
use crate::linalg::{matrix_of, LinMap};
use crate::report::{AxiomReport, Group};
use crate::twisted::twisting::{check_twisting_map, twisted_tensor_product, TwistingMap};

fn same_bases(r1: &TwistingMap, r2: &TwistingMap, r3: &TwistingMap) -> Result<()> {
    if r1.a() != r3.a() || r1.b() != r2.a() || r2.b() != r3.b() {
        return Err(Error::BaseMismatch("R1: B⊗A→A⊗B, R2: C⊗B→B⊗C, R3: C⊗A→A⊗C must share A, B, C".into()));
    }
    Ok(())
}

fn require_twisting(rep: &mut AxiomReport, r1: &TwistingMap, r2: &TwistingMap, r3: &TwistingMap) -> Result<()> {
    let mut pre = AxiomReport::new("iterated-twisted-product");
    pre.absorb("R1", check_twisting_map(r1));
    pre.absorb("R2", check_twisting_map(r2));
    pre.absorb("R3", check_twisting_map(r3));
    if !pre.passed() {
        return Err(Error::prerequisite("twisting maps", pre));
    }
    rep.absorb("", pre);
    Ok(())
}

/// `(id_A⊗R2)(R3⊗id_B)(id_C⊗R1) = (R1⊗id_C)(id_B⊗R3)(R2⊗id_A)` on `C⊗B⊗A`.
pub(crate) fn braid_entry(rep: &mut AxiomReport, r1: &TwistingMap, r2: &TwistingMap, r3: &TwistingMap) -> bool {
    let (na, nb, nc) = (r1.a().dim(), r1.b().dim(), r2.b().dim());
    let (m1, m2, m3) = (r1.map(), r2.map(), r3.map());
    rep.identity(
        "hombraid",
        Group::Axiom,
        r1.field(),
        &[nc, nb, na],
        |t| t.map2(1, m1, na, nb).map2(0, m3, na, nc).map2(1, m2, nb, nc),
        |t| t.map2(0, m2, nb, nc).map2(1, m3, na, nc).map2(0, m1, na, nb),
    )
}

/// `P1 = (id_A⊗R2)(R3⊗id_B): C⊗(A⊗B) → (A⊗B)⊗C`.
pub fn p1_map(r2: &TwistingMap, r3: &TwistingMap) -> LinMap {
    let (na, nb, nc) = (r3.a().dim(), r2.a().dim(), r2.b().dim());
    matrix_of(r2.field(), &[nc, na, nb], na * nb * nc, |t| t.map2(0, r3.map(), na, nc).map2(1, r2.map(), nb, nc).flatten())
}

/// `P2 = (R1⊗id_C)(id_B⊗R3): (B⊗C)⊗A → A⊗(B⊗C)`.
pub fn p2_map(r1: &TwistingMap, r3: &TwistingMap) -> LinMap {
    let (na, nb, nc) = (r1.a().dim(), r1.b().dim(), r3.b().dim());
    matrix_of(r1.field(), &[nb, nc, na], na * nb * nc, |t| t.map2(1, r3.map(), na, nc).map2(0, r1.map(), na, nb).flatten())
}

/// Both bracketings, each built from verified twisting maps.
pub struct Bracketings {
    pub left: HomAlgebra,
    pub right: HomAlgebra,
    pub report: AxiomReport,
}

/// Runs the twisting checks on `R1, R2, R3`, `(hombraid)`, the twisting
/// checks on `P1` and `P2`, and compares the two bracketings.
pub fn iterated_report(r1: &TwistingMap, r2: &TwistingMap, r3: &TwistingMap) -> Result<Bracketings> {
    same_bases(r1, r2, r3)?;
    let mut rep = AxiomReport::new("iterated-twisted-product");
    require_twisting(&mut rep, r1, r2, r3)?;
    if !braid_entry(&mut rep, r1, r2, r3) {
        return Err(Error::BraidConditionFailed { report: Box::new(rep) });
    }
    let ab = twisted_tensor_product(r1)?;
    let bc = twisted_tensor_product(r2)?;
    let unital = r1.is_unital() && r2.is_unital() && r3.is_unital();
    let p1 = TwistingMap::new(ab.clone(), r2.b().clone(), p1_map(r2, r3), unital)?;
    let p2 = TwistingMap::new(r1.a().clone(), bc.clone(), p2_map(r1, r3), unital)?;
    rep.absorb("P1", regroup(check_twisting_map(&p1), Group::Derived));
    rep.absorb("P2", regroup(check_twisting_map(&p2), Group::Derived));
    if !rep.passed() {
        return Err(Error::prerequisite("P1/P2 twisting maps", rep));
    }
    let left = twisted_tensor_product(&p1)?;
    let right = twisted_tensor_product(&p2)?;
    rep.maps_equal("bracketing-mu", Group::Derived, left.mu(), right.mu());
    rep.maps_equal("bracketing-alpha", Group::Derived, left.alpha(), right.alpha());
    Ok(Bracketings { left, right, report: rep })
}

pub(crate) fn regroup(mut r: AxiomReport, group: Group) -> AxiomReport {
    for e in &mut r.entries {
        e.group = group;
    }
    r
}

/// `A ⊗_{R1} B ⊗_{R2} C`, after checking that both bracketings agree.
pub fn iterated_twisted_product(r1: &TwistingMap, r2: &TwistingMap, r3: &TwistingMap) -> Result<HomAlgebra> {
    let b = iterated_report(r1, r2, r3)?;
    if !b.report.passed() {
        return Err(Error::prerequisite("bracketings", b.report));
    }
    Ok(b.left)
}
