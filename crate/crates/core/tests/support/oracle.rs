//! Explicit-sum evaluation of axiom sides on basis tuples.
//!
//! Vectors are sparse maps from multi-indices to coefficients and every
//! structure map is applied by summing over its matrix entries, so nothing
//! here goes through the library's tensor contraction code.

use std::collections::BTreeMap;

use homhopf::linalg::{Field, LinMap, Scalar};

#[derive(Clone, Debug)]
pub struct Ev {
    field: Field,
    dims: Vec<usize>,
    terms: BTreeMap<Vec<usize>, Scalar>,
}

fn flat(dims: &[usize], idx: &[usize]) -> usize {
    idx.iter().zip(dims).fold(0, |acc, (&i, &d)| acc * d + i)
}

fn unflat(dims: &[usize], mut k: usize) -> Vec<usize> {
    let mut out = vec![0; dims.len()];
    for (slot, &d) in out.iter_mut().zip(dims).rev() {
        *slot = k % d;
        k /= d;
    }
    out
}

impl Ev {
    pub fn basis(field: Field, dims: &[usize], tuple: &[usize]) -> Ev {
        let mut terms = BTreeMap::new();
        terms.insert(tuple.to_vec(), field.one());
        Ev { field, dims: dims.to_vec(), terms }
    }

    pub fn from_dense(field: Field, dims: &[usize], values: &[Scalar]) -> Ev {
        let terms = values
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(|(k, v)| (unflat(dims, k), v.clone()))
            .collect();
        Ev { field, dims: dims.to_vec(), terms }
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    /// Applies `m` to legs `leg..leg + width`, producing legs of sizes `out`.
    pub fn apply(self, leg: usize, width: usize, m: &LinMap, out: &[usize]) -> Ev {
        let in_dims = &self.dims[leg..leg + width];
        assert_eq!(m.cols(), in_dims.iter().product::<usize>(), "map input size");
        assert_eq!(m.rows(), out.iter().product::<usize>(), "map output size");
        let mut dims = self.dims[..leg].to_vec();
        dims.extend_from_slice(out);
        dims.extend_from_slice(&self.dims[leg + width..]);
        let mut terms: BTreeMap<Vec<usize>, Scalar> = BTreeMap::new();
        for (idx, c) in &self.terms {
            let col = flat(in_dims, &idx[leg..leg + width]);
            for row in 0..m.rows() {
                let v = m.get(row, col);
                if v.is_zero() {
                    continue;
                }
                let mut key = idx[..leg].to_vec();
                key.extend(unflat(out, row));
                key.extend_from_slice(&idx[leg + width..]);
                let add = c * v;
                let slot = terms.entry(key).or_insert_with(|| self.field.zero());
                *slot += &add;
            }
        }
        terms.retain(|_, v| !v.is_zero());
        Ev { field: self.field, dims, terms }
    }

    pub fn map(self, leg: usize, m: &LinMap) -> Ev {
        let r = m.rows();
        self.apply(leg, 1, m, &[r])
    }

    pub fn merge(self, leg: usize, m: &LinMap) -> Ev {
        let r = m.rows();
        self.apply(leg, 2, m, &[r])
    }

    pub fn split(self, leg: usize, m: &LinMap, d0: usize, d1: usize) -> Ev {
        self.apply(leg, 1, m, &[d0, d1])
    }

    pub fn map2(self, leg: usize, m: &LinMap, d0: usize, d1: usize) -> Ev {
        self.apply(leg, 2, m, &[d0, d1])
    }

    /// New leg `k` is old leg `perm[k]`.
    pub fn permute(self, perm: &[usize]) -> Ev {
        let dims = perm.iter().map(|&p| self.dims[p]).collect();
        let terms = self.terms.into_iter().map(|(idx, v)| (perm.iter().map(|&p| idx[p]).collect(), v)).collect();
        Ev { field: self.field, dims, terms }
    }

    pub fn tensor(&self, other: &Ev) -> Ev {
        let mut dims = self.dims.clone();
        dims.extend_from_slice(&other.dims);
        let mut terms = BTreeMap::new();
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                let mut k = a.clone();
                k.extend_from_slice(b);
                terms.insert(k, x * y);
            }
        }
        Ev { field: self.field, dims, terms }
    }

    pub fn dense(&self) -> Vec<Scalar> {
        let n: usize = self.dims.iter().product();
        let mut out = vec![self.field.zero(); n];
        for (idx, v) in &self.terms {
            out[flat(&self.dims, idx)] = v.clone();
        }
        out
    }
}

/// Both sides of an identity as dense vectors.
pub type Sides = (Vec<Scalar>, Vec<Scalar>);

fn sides(l: Ev, r: Ev) -> Sides {
    (l.dense(), r.dense())
}

/// Structure data of a pair of Hom-algebras with `R: B⊗A → A⊗B` and
/// optionally `Q: A⊗B → A⊗B`.
pub struct Pair<'a> {
    pub field: Field,
    pub na: usize,
    pub nb: usize,
    pub mu_a: &'a LinMap,
    pub mu_b: &'a LinMap,
    pub alpha_a: &'a LinMap,
    pub alpha_b: &'a LinMap,
    pub r: &'a LinMap,
    pub q: Option<&'a LinMap>,
}

impl Pair<'_> {
    fn q(&self) -> &LinMap {
        self.q.expect("Q present")
    }

    fn at(&self, dims: &[usize], t: &[usize]) -> Ev {
        Ev::basis(self.field, dims, t)
    }

    /// `(α_A⊗α_B)∘R = R∘(α_B⊗α_A)` on `b⊗a`.
    pub fn sweed0(&self, t: &[usize]) -> Sides {
        let (na, nb) = (self.na, self.nb);
        let x = self.at(&[nb, na], t);
        let l = x.clone().map2(0, self.r, na, nb).map(0, self.alpha_a).map(1, self.alpha_b);
        let r = x.map(0, self.alpha_b).map(1, self.alpha_a).map2(0, self.r, na, nb);
        sides(l, r)
    }

    /// `R(b⊗aa') = a_R a'_R ⊗ α_B(b_{RR})` on `b⊗a⊗a'`.
    pub fn sweed1(&self, t: &[usize]) -> Sides {
        let (na, nb) = (self.na, self.nb);
        let x = self.at(&[nb, na, na], t);
        let l = x.clone().merge(1, self.mu_a).map(0, self.alpha_b).map2(0, self.r, na, nb);
        let r = x.map2(0, self.r, na, nb).map2(1, self.r, na, nb).merge(0, self.mu_a).map(1, self.alpha_b);
        sides(l, r)
    }

    /// `R(bb'⊗a) = α_A(a_{RR}) ⊗ b_R b'_R` on `b⊗b'⊗a`.
    pub fn sweed2(&self, t: &[usize]) -> Sides {
        let (na, nb) = (self.na, self.nb);
        let x = self.at(&[nb, nb, na], t);
        let l = x.clone().merge(0, self.mu_b).map(1, self.alpha_a).map2(0, self.r, na, nb);
        let r = x.map2(1, self.r, na, nb).map2(0, self.r, na, nb).map(0, self.alpha_a).merge(1, self.mu_b);
        sides(l, r)
    }

    /// `(α_A⊗α_B)∘Q = Q∘(α_A⊗α_B)`.
    pub fn lr2(&self, t: &[usize]) -> Sides {
        let (na, nb, q) = (self.na, self.nb, self.q());
        let x = self.at(&[na, nb], t);
        let l = x.clone().map2(0, q, na, nb).map(0, self.alpha_a).map(1, self.alpha_b);
        let r = x.map(0, self.alpha_a).map(1, self.alpha_b).map2(0, q, na, nb);
        sides(l, r)
    }

    /// `Q(aa'⊗b) = a_Q a'_Q ⊗ α_B(b_{QQ})` on `a⊗a'⊗b`.
    pub fn lr5(&self, t: &[usize]) -> Sides {
        let (na, nb, q) = (self.na, self.nb, self.q());
        let x = self.at(&[na, na, nb], t);
        let l = x.clone().merge(0, self.mu_a).map(1, self.alpha_b).map2(0, q, na, nb);
        let r = x
            .map2(1, q, na, nb)
            .permute(&[0, 2, 1])
            .map2(0, q, na, nb)
            .permute(&[0, 2, 1])
            .merge(0, self.mu_a)
            .map(1, self.alpha_b);
        sides(l, r)
    }

    /// `Q(a⊗bb') = α_A(a_{QQ}) ⊗ b_Q b'_Q` on `a⊗b⊗b'`.
    pub fn lr6(&self, t: &[usize]) -> Sides {
        let (na, nb, q) = (self.na, self.nb, self.q());
        let x = self.at(&[na, nb, nb], t);
        let l = x.clone().merge(1, self.mu_b).map(0, self.alpha_a).map2(0, q, na, nb);
        let r = x
            .map2(0, q, na, nb)
            .permute(&[0, 2, 1])
            .map2(0, q, na, nb)
            .permute(&[0, 2, 1])
            .map(0, self.alpha_a)
            .merge(1, self.mu_b);
        sides(l, r)
    }

    /// `Q` and `R` commute on `b⊗a⊗b'`.
    pub fn lr7(&self, t: &[usize]) -> Sides {
        let (na, nb, q, r) = (self.na, self.nb, self.q(), self.r);
        let x = self.at(&[nb, na, nb], t);
        let l = x.clone().map2(0, r, na, nb).permute(&[0, 2, 1]).map2(0, q, na, nb).permute(&[2, 0, 1]);
        let rr = x.map2(1, q, na, nb).map2(0, r, na, nb).permute(&[1, 0, 2]);
        sides(l, rr)
    }

    /// The mixed condition on `a⊗b⊗a'`.
    pub fn lr8(&self, t: &[usize]) -> Sides {
        let (na, nb, q, r) = (self.na, self.nb, self.q(), self.r);
        let x = self.at(&[na, nb, na], t);
        let l = x
            .clone()
            .permute(&[1, 0, 2])
            .map2(0, r, na, nb)
            .permute(&[0, 2, 1])
            .map2(1, q, na, nb)
            .permute(&[0, 2, 1]);
        let rr = x.permute(&[0, 2, 1]).map2(1, q, na, nb).permute(&[2, 0, 1]).map2(0, r, na, nb);
        sides(l, rr)
    }
}

/// Data of a Hom-bialgebra with an element `R ∈ H⊗H`.
pub struct Qt<'a> {
    pub field: Field,
    pub n: usize,
    pub mu: &'a LinMap,
    pub delta: &'a LinMap,
    pub alpha: &'a LinMap,
    pub r: &'a [Scalar],
}

impl Qt<'_> {
    fn r(&self) -> Ev {
        Ev::from_dense(self.field, &[self.n, self.n], self.r)
    }

    /// `(Δ⊗α)(R) = α(R¹)⊗α(r¹)⊗R²r²`.
    pub fn qt1(&self) -> Sides {
        let (n, r) = (self.n, self.r());
        let l = r.clone().split(0, self.delta, n, n).map(2, self.alpha);
        let rhs = r.tensor(&r).permute(&[0, 2, 1, 3]).map(0, self.alpha).map(1, self.alpha).merge(2, self.mu);
        sides(l, rhs)
    }

    /// `(α⊗Δ)(R) = R¹r¹⊗α(r²)⊗α(R²)`.
    pub fn qt2(&self) -> Sides {
        let (n, r) = (self.n, self.r());
        let l = r.clone().map(0, self.alpha).split(1, self.delta, n, n);
        let rhs = r.tensor(&r).permute(&[0, 2, 3, 1]).merge(0, self.mu).map(1, self.alpha).map(2, self.alpha);
        sides(l, rhs)
    }

    /// `Δ^cop(h)R = RΔ(h)` at a basis element.
    pub fn qt3(&self, t: &[usize]) -> Sides {
        let (n, r) = (self.n, self.r());
        let d = Ev::basis(self.field, &[n], t).split(0, self.delta, n, n);
        let l = d.clone().permute(&[1, 0]).tensor(&r).permute(&[0, 2, 1, 3]).merge(0, self.mu).merge(1, self.mu);
        let rhs = r.tensor(&d).permute(&[0, 2, 1, 3]).merge(0, self.mu).merge(1, self.mu);
        sides(l, rhs)
    }
}

/// A left module and right comodule on one carrier over a Hom-Hopf algebra.
pub struct Yd<'a> {
    pub field: Field,
    pub nh: usize,
    pub nm: usize,
    pub mu: &'a LinMap,
    pub delta: &'a LinMap,
    pub alpha: &'a LinMap,
    pub alpha2: &'a LinMap,
    pub action: &'a LinMap,
    pub coaction: &'a LinMap,
}

impl Yd<'_> {
    /// `α(h₁)·m₀ ⊗ α²(h₂)α(m₁) = (h₂·m)₀ ⊗ (h₂·m)₁α²(h₁)` on `h⊗m`.
    pub fn ydlr(&self, t: &[usize]) -> Sides {
        let (nh, nm) = (self.nh, self.nm);
        let x = Ev::basis(self.field, &[nh, nm], t);
        let l = x
            .clone()
            .split(0, self.delta, nh, nh)
            .split(2, self.coaction, nm, nh)
            .permute(&[0, 2, 1, 3])
            .map(0, self.alpha)
            .merge(0, self.action)
            .map(1, self.alpha2)
            .map(2, self.alpha)
            .merge(1, self.mu);
        let r = x
            .split(0, self.delta, nh, nh)
            .permute(&[1, 2, 0])
            .merge(0, self.action)
            .split(0, self.coaction, nm, nh)
            .map(2, self.alpha2)
            .merge(1, self.mu);
        sides(l, r)
    }
}
