//! Sparse multi-leg tensors and order-3 structure tensors.
//!
//! A [`Tensor`] is an element of `V_0 ⊗ V_1 ⊗ ... ⊗ V_{k-1}`; leg `i` has
//! dimension `dims[i]` and the flat index is lexicographic. Sweedler-notation
//! formulas are evaluated by pushing a basis tensor through a pipeline of
//! leg operations: apply a map to a run of legs, permute legs, take outer
//! products.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::linalg::matrix::LinMap;
use crate::linalg::scalar::{Field, Scalar};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tensor {
    field: Field,
    dims: Vec<usize>,
    // Sorted by flat index, no explicit zeros.
    entries: Vec<(usize, Scalar)>,
}

fn product(dims: &[usize]) -> usize {
    dims.iter().product()
}

impl Tensor {
    pub fn zero(field: Field, dims: &[usize]) -> Tensor {
        Tensor { field, dims: dims.to_vec(), entries: Vec::new() }
    }

    /// The scalar `1` as a tensor with no legs.
    pub fn unit(field: Field) -> Tensor {
        Tensor { field, dims: Vec::new(), entries: vec![(0, field.one())] }
    }

    /// `e_{idx[0]} ⊗ ... ⊗ e_{idx[k-1]}`.
    pub fn basis(field: Field, dims: &[usize], idx: &[usize]) -> Tensor {
        assert_eq!(dims.len(), idx.len(), "basis tuple arity");
        let flat = idx.iter().zip(dims).fold(0, |acc, (&i, &d)| {
            assert!(i < d, "basis index out of range");
            acc * d + i
        });
        Tensor { field, dims: dims.to_vec(), entries: vec![(flat, field.one())] }
    }

    pub fn from_dense(field: Field, dims: &[usize], values: &[Scalar]) -> Result<Tensor> {
        if values.len() != product(dims) {
            return Err(Error::DimensionMismatch { what: "tensor data".into(), expected: product(dims), found: values.len() });
        }
        let entries = values.iter().enumerate().filter(|(_, v)| !v.is_zero()).map(|(i, v)| (i, v.clone())).collect();
        Ok(Tensor { field, dims: dims.to_vec(), entries })
    }

    fn from_map(field: Field, dims: Vec<usize>, acc: BTreeMap<usize, Scalar>) -> Tensor {
        let entries = acc.into_iter().filter(|(_, v)| !v.is_zero()).collect();
        Tensor { field, dims, entries }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn len(&self) -> usize {
        product(&self.dims)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn nonzeros(&self) -> &[(usize, Scalar)] {
        &self.entries
    }

    pub fn to_dense(&self) -> Vec<Scalar> {
        let mut out = vec![self.field.zero(); self.len()];
        for (i, v) in &self.entries {
            out[*i] = v.clone();
        }
        out
    }

    /// Splits a flat index into per-leg indices.
    pub fn unflatten(&self, mut flat: usize) -> Vec<usize> {
        let mut idx = vec![0; self.dims.len()];
        for (slot, d) in idx.iter_mut().zip(&self.dims).rev() {
            *slot = flat % d;
            flat /= d;
        }
        idx
    }

    /// Reinterprets the legs with new dimensions of the same total size.
    pub fn reshape(mut self, dims: &[usize]) -> Tensor {
        assert_eq!(product(dims), self.len(), "reshape must preserve size");
        self.dims = dims.to_vec();
        self
    }

    pub fn scale(&self, s: &Scalar) -> Tensor {
        if s.is_zero() {
            return Tensor::zero(self.field, &self.dims);
        }
        Tensor { field: self.field, dims: self.dims.clone(), entries: self.entries.iter().map(|(i, v)| (*i, v * s)).collect() }
    }

    pub fn add(&self, other: &Tensor) -> Tensor {
        assert_eq!(self.dims, other.dims, "adding tensors of different shape");
        let mut acc: BTreeMap<usize, Scalar> = self.entries.iter().cloned().collect();
        for (i, v) in &other.entries {
            acc.entry(*i).and_modify(|x| *x += v).or_insert_with(|| v.clone());
        }
        Tensor::from_map(self.field, self.dims.clone(), acc)
    }

    pub fn sub(&self, other: &Tensor) -> Tensor {
        self.add(&other.scale(&self.field.from_i64(-1)))
    }

    /// Applies `map` to legs `start..start + arity`, replacing them with legs
    /// of dimensions `out_dims` (whose product must equal `map.rows()`).
    pub fn apply(&self, start: usize, arity: usize, map: &LinMap, out_dims: &[usize]) -> Tensor {
        let end = start + arity;
        assert!(end <= self.dims.len(), "leg range out of bounds");
        let in_size = product(&self.dims[start..end]);
        let out_size = product(out_dims);
        assert_eq!(map.cols(), in_size, "map input dimension");
        assert_eq!(map.rows(), out_size, "map output dimension");
        let suffix = product(&self.dims[end..]);
        let mut dims = self.dims[..start].to_vec();
        dims.extend_from_slice(out_dims);
        dims.extend_from_slice(&self.dims[end..]);
        let mut acc: BTreeMap<usize, Scalar> = BTreeMap::new();
        for (flat, v) in &self.entries {
            let suf = flat % suffix;
            let mid = (flat / suffix) % in_size;
            let pre = flat / (suffix * in_size);
            for (r, a) in map.column_nonzeros(mid) {
                let key = (pre * out_size + r) * suffix + suf;
                let term = a * v;
                acc.entry(key).and_modify(|x| *x += &term).or_insert(term);
            }
        }
        Tensor::from_map(self.field, dims, acc)
    }

    /// Applies a square-or-rectangular map to a single leg.
    pub fn map(&self, leg: usize, map: &LinMap) -> Tensor {
        self.apply(leg, 1, map, &[map.rows()])
    }

    /// Merges legs `leg` and `leg + 1` through a bilinear map (a multiplication
    /// or an action) with a single output leg.
    pub fn merge(&self, leg: usize, map: &LinMap) -> Tensor {
        self.apply(leg, 2, map, &[map.rows()])
    }

    /// Splits leg `leg` into two legs of dims `(d0, d1)` through `map`
    /// (a comultiplication or a coaction).
    pub fn split(&self, leg: usize, map: &LinMap, d0: usize, d1: usize) -> Tensor {
        self.apply(leg, 1, map, &[d0, d1])
    }

    /// Applies a map `V_a ⊗ V_b -> W_a ⊗ W_b` on legs `leg, leg + 1`.
    pub fn map2(&self, leg: usize, map: &LinMap, d0: usize, d1: usize) -> Tensor {
        self.apply(leg, 2, map, &[d0, d1])
    }

    /// Pairs leg `leg` with a functional (a `1 x d` map), removing the leg.
    pub fn eval(&self, leg: usize, functional: &LinMap) -> Tensor {
        assert_eq!(functional.rows(), 1, "functional must have one row");
        self.apply(leg, 1, functional, &[])
    }

    /// Reorders legs: new leg `k` is old leg `perm[k]`.
    pub fn permute(&self, perm: &[usize]) -> Tensor {
        assert_eq!(perm.len(), self.dims.len(), "permutation arity");
        let dims: Vec<usize> = perm.iter().map(|&p| self.dims[p]).collect();
        let mut entries: Vec<(usize, Scalar)> = self
            .entries
            .iter()
            .map(|(flat, v)| {
                let old = self.unflatten(*flat);
                let new = perm.iter().zip(&dims).fold(0, |acc, (&p, &d)| acc * d + old[p]);
                (new, v.clone())
            })
            .collect();
        entries.sort_by_key(|(i, _)| *i);
        Tensor { field: self.field, dims, entries }
    }

    /// Outer product `self ⊗ other`.
    pub fn tensor(&self, other: &Tensor) -> Tensor {
        let n = other.len();
        let mut dims = self.dims.clone();
        dims.extend_from_slice(&other.dims);
        let mut entries = Vec::with_capacity(self.entries.len() * other.entries.len());
        for (i, a) in &self.entries {
            for (j, b) in &other.entries {
                entries.push((i * n + j, a * b));
            }
        }
        Tensor { field: self.field, dims, entries }
    }

    /// Collapses all legs into one.
    pub fn flatten(self) -> Tensor {
        let n = self.len();
        self.reshape(&[n])
    }

    /// The value of a leg-free tensor.
    pub fn scalar(&self) -> Scalar {
        assert!(self.dims.iter().all(|&d| d == 1), "tensor is not a scalar");
        self.entries.first().map_or_else(|| self.field.zero(), |(_, v)| v.clone())
    }
}

/// Builds the matrix of a linear map `V_in -> V_out` from a pipeline that
/// sends each input basis tensor to its image.
pub fn matrix_of(field: Field, in_dims: &[usize], out_size: usize, f: impl Fn(Tensor) -> Tensor) -> LinMap {
    let n = product(in_dims);
    let mut m_cols = Vec::with_capacity(n);
    let idx_of = |mut flat: usize| {
        let mut idx = vec![0; in_dims.len()];
        for (slot, d) in idx.iter_mut().zip(in_dims).rev() {
            *slot = flat % d;
            flat /= d;
        }
        idx
    };
    for c in 0..n {
        let image = f(Tensor::basis(field, in_dims, &idx_of(c)));
        assert_eq!(image.len(), out_size, "pipeline output size");
        m_cols.push(image.to_dense());
    }
    LinMap::from_columns(field, out_size, m_cols).expect("consistent columns")
}

/// Multiplication structure constants: `c[i][j][k]` is the coefficient of
/// `e_k` in `e_i e_j`. Stored as the `dim x dim²` matrix of `μ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MulTensor {
    dim: usize,
    map: LinMap,
}

impl MulTensor {
    pub fn from_map(map: LinMap) -> Result<MulTensor> {
        let dim = map.rows();
        if map.cols() != dim * dim {
            return Err(Error::DimensionMismatch { what: "multiplication tensor".into(), expected: dim * dim, found: map.cols() });
        }
        Ok(MulTensor { dim, map })
    }

    /// From nested constants `c[i][j][k]`.
    pub fn from_constants(field: Field, c: &[Vec<Vec<Scalar>>]) -> Result<MulTensor> {
        let n = c.len();
        let mut m = LinMap::zeros(field, n, n * n);
        for (i, ci) in c.iter().enumerate() {
            check_len(ci.len(), n, "multiplication tensor")?;
            for (j, cij) in ci.iter().enumerate() {
                check_len(cij.len(), n, "multiplication tensor")?;
                for (k, v) in cij.iter().enumerate() {
                    m.set(k, i * n + j, v.clone());
                }
            }
        }
        MulTensor::from_map(m)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn map(&self) -> &LinMap {
        &self.map
    }

    pub fn constant(&self, i: usize, j: usize, k: usize) -> &Scalar {
        self.map.get(k, i * self.dim + j)
    }

    pub fn constants(&self) -> Vec<Vec<Vec<Scalar>>> {
        let n = self.dim;
        (0..n).map(|i| (0..n).map(|j| (0..n).map(|k| self.constant(i, j, k).clone()).collect()).collect()).collect()
    }

    /// `μ(x ⊗ y)` for arbitrary vectors by bilinearity.
    pub fn contract(&self, x: &[Scalar], y: &[Scalar]) -> Result<Vec<Scalar>> {
        check_len(x.len(), self.dim, "left factor")?;
        check_len(y.len(), self.dim, "right factor")?;
        let field = self.map.field();
        let xt = Tensor::from_dense(field, &[self.dim], x)?;
        let yt = Tensor::from_dense(field, &[self.dim], y)?;
        Ok(xt.tensor(&yt).merge(0, &self.map).to_dense())
    }
}

/// Comultiplication structure constants: `d[i][j][k]` is the coefficient of
/// `e_j ⊗ e_k` in `Δ(e_i)`. Stored as the `dim² x dim` matrix of `Δ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoTensor {
    dim: usize,
    map: LinMap,
}

impl CoTensor {
    pub fn from_map(map: LinMap) -> Result<CoTensor> {
        let dim = map.cols();
        if map.rows() != dim * dim {
            return Err(Error::DimensionMismatch { what: "comultiplication tensor".into(), expected: dim * dim, found: map.rows() });
        }
        Ok(CoTensor { dim, map })
    }

    pub fn from_constants(field: Field, d: &[Vec<Vec<Scalar>>]) -> Result<CoTensor> {
        let n = d.len();
        let mut m = LinMap::zeros(field, n * n, n);
        for (i, di) in d.iter().enumerate() {
            check_len(di.len(), n, "comultiplication tensor")?;
            for (j, dij) in di.iter().enumerate() {
                check_len(dij.len(), n, "comultiplication tensor")?;
                for (k, v) in dij.iter().enumerate() {
                    m.set(j * n + k, i, v.clone());
                }
            }
        }
        CoTensor::from_map(m)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn map(&self) -> &LinMap {
        &self.map
    }

    pub fn constant(&self, i: usize, j: usize, k: usize) -> &Scalar {
        self.map.get(j * self.dim + k, i)
    }

    pub fn constants(&self) -> Vec<Vec<Vec<Scalar>>> {
        let n = self.dim;
        (0..n).map(|i| (0..n).map(|j| (0..n).map(|k| self.constant(i, j, k).clone()).collect()).collect()).collect()
    }

    /// `Δ(x)` as a two-leg tensor.
    pub fn contract(&self, x: &[Scalar]) -> Result<Tensor> {
        check_len(x.len(), self.dim, "vector")?;
        let xt = Tensor::from_dense(self.map.field(), &[self.dim], x)?;
        Ok(xt.split(0, &self.map, self.dim, self.dim))
    }
}

fn check_len(found: usize, expected: usize, what: &str) -> Result<()> {
    if found != expected {
        return Err(Error::DimensionMismatch { what: what.into(), expected, found });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z2_mul(field: Field) -> MulTensor {
        // basis {1, g}, g² = 1
        let (o, z) = (field.one(), field.zero());
        let c = vec![
            vec![vec![o.clone(), z.clone()], vec![z.clone(), o.clone()]],
            vec![vec![z.clone(), o.clone()], vec![o.clone(), z.clone()]],
        ];
        MulTensor::from_constants(field, &c).unwrap()
    }

    #[test]
    fn group_law_of_z2() {
        let q = Field::Rational;
        let mu = z2_mul(q);
        let g = vec![q.zero(), q.one()];
        assert_eq!(mu.contract(&g, &g).unwrap(), vec![q.one(), q.zero()]);
    }

    #[test]
    fn grouplike_coproduct() {
        let q = Field::Rational;
        let (o, z) = (q.one(), q.zero());
        let d = vec![
            vec![vec![o.clone(), z.clone()], vec![z.clone(), z.clone()]],
            vec![vec![z.clone(), z.clone()], vec![z.clone(), o.clone()]],
        ];
        let delta = CoTensor::from_constants(q, &d).unwrap();
        let img = delta.contract(&[z.clone(), o.clone()]).unwrap();
        assert_eq!(img, Tensor::basis(q, &[2, 2], &[1, 1]));
    }

    #[test]
    fn contract_rejects_bad_dimensions() {
        let q = Field::Rational;
        let mu = z2_mul(q);
        assert!(mu.contract(&[q.one()], &[q.one(), q.one()]).is_err());
    }

    #[test]
    fn permute_and_apply() {
        let q = Field::Rational;
        let t = Tensor::basis(q, &[2, 3], &[1, 2]);
        let p = t.permute(&[1, 0]);
        assert_eq!(p, Tensor::basis(q, &[3, 2], &[2, 1]));
        let swap = LinMap::from_i64_rows(q, &[&[0, 1], &[1, 0]]);
        assert_eq!(t.map(0, &swap), Tensor::basis(q, &[2, 3], &[0, 2]));
    }
}
