//! Built-in example structures.

use crate::error::{Error, Result};
use crate::hom::{yau_twist, HomHopfAlgebra};
use crate::linalg::{Field, LinMap, Scalar};

/// Catalog names, in listing order.
pub const NAMES: [&str; 5] = ["z2-group", "z3-gf7-frobenius", "h4-sweedler", "h4-sweedler-twisted", "z3-gf7-group"];

/// Looks up a catalog entry by name.
pub fn catalog_get(name: &str) -> Result<HomHopfAlgebra> {
    match name {
        "z2-group" => Ok(group_algebra(Field::Rational, 2)),
        "z3-gf7-group" => Ok(group_algebra(Field::Prime(7), 3)),
        "z3-gf7-frobenius" => z3_gf7_frobenius(),
        "h4-sweedler" => Ok(sweedler_h4()),
        "h4-sweedler-twisted" => yau_twist(&sweedler_h4(), &alpha_minus()),
        _ => Err(Error::UnknownStructure(name.to_string())),
    }
}

/// Every entry with its name.
pub fn catalog() -> Vec<(&'static str, HomHopfAlgebra)> {
    NAMES.iter().map(|&n| (n, catalog_get(n).expect("catalog entries are well formed"))).collect()
}

/// The group algebra `k[Z_n]` with basis `g^0, ..., g^{n-1}` and `α = id`.
pub fn group_algebra(field: Field, n: usize) -> HomHopfAlgebra {
    let one = |b: bool| if b { field.one() } else { field.zero() };
    let mu = LinMap::from_fn(field, n, n * n, |k, c| one((c / n + c % n) % n == k));
    let delta = LinMap::from_fn(field, n * n, n, |r, c| one(r == c * n + c));
    let s = LinMap::from_fn(field, n, n, |r, c| one((r + c) % n == 0));
    let mut unit = vec![field.zero(); n];
    unit[0] = field.one();
    HomHopfAlgebra::from_maps(mu, delta, LinMap::identity(field, n), unit, vec![field.one(); n], s)
        .expect("group algebra data is consistent")
}

/// `k[Z_3]` over GF(7), Yau-twisted by the Hopf automorphism `g ↦ g²`.
pub fn z3_gf7_frobenius() -> Result<HomHopfAlgebra> {
    let f7 = Field::Prime(7);
    let tau = LinMap::permutation(f7, &[0, 2, 1]);
    yau_twist(&group_algebra(f7, 3), &tau)
}

/// Sweedler's four-dimensional Hopf algebra over Q with basis `1, g, x, gx`,
/// `g² = 1`, `x² = 0`, `xg = -gx`, `Δ(x) = x⊗1 + g⊗x`, `S(x) = -gx`.
pub fn sweedler_h4() -> HomHopfAlgebra {
    let q = Field::Rational;
    let n = 4;
    // (i, j, k, c): e_i e_j = c e_k
    let table: [(usize, usize, usize, i64); 12] = [
        (0, 0, 0, 1),
        (0, 1, 1, 1),
        (0, 2, 2, 1),
        (0, 3, 3, 1),
        (1, 0, 1, 1),
        (1, 1, 0, 1),
        (1, 2, 3, 1),
        (1, 3, 2, 1),
        (2, 0, 2, 1),
        (2, 1, 3, -1),
        (3, 0, 3, 1),
        (3, 1, 2, -1),
    ];
    let mut mu = LinMap::zeros(q, n, n * n);
    for (i, j, k, c) in table {
        mu.set(k, i * n + j, q.from_i64(c));
    }
    // (i, j, k): Δ(e_i) contains e_j ⊗ e_k
    let cotable: [(usize, usize, usize); 6] = [(0, 0, 0), (1, 1, 1), (2, 2, 0), (2, 1, 2), (3, 3, 1), (3, 0, 3)];
    let mut delta = LinMap::zeros(q, n * n, n);
    for (i, j, k) in cotable {
        delta.set(j * n + k, i, q.one());
    }
    let s = LinMap::from_i64_rows(q, &[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 0, 1], &[0, 0, -1, 0]]);
    let unit: Vec<Scalar> = [1, 0, 0, 0].iter().map(|&v| q.from_i64(v)).collect();
    let counit: Vec<Scalar> = [1, 1, 0, 0].iter().map(|&v| q.from_i64(v)).collect();
    HomHopfAlgebra::from_maps(mu, delta, LinMap::identity(q, n), unit, counit, s).expect("Sweedler data is consistent")
}

/// The Hopf automorphism `x ↦ -x` of Sweedler's algebra.
pub fn alpha_minus() -> LinMap {
    let q = Field::Rational;
    LinMap::diagonal(q, &[q.one(), q.one(), q.from_i64(-1), q.from_i64(-1)])
}
