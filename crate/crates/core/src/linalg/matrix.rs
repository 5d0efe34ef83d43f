//! Dense exact matrices.
//!
//! A `LinMap` with `rows x cols` entries represents a linear map from a
//! `cols`-dimensional space to a `rows`-dimensional one: column `j` is the
//! image of the basis vector `e_j`. Tensor-product spaces use the
//! lexicographic basis ordering `(i, j) -> i * dim_second + j` everywhere.

use std::fmt;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::linalg::scalar::{Field, Scalar};

pub struct LinMap {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
    // Nonzero (row, value) pairs per column, built on first use.
    columns: OnceLock<Vec<Vec<(usize, Scalar)>>>,
}

impl Clone for LinMap {
    fn clone(&self) -> Self {
        LinMap::from_vec(self.field, self.rows, self.cols, self.data.clone())
    }
}

impl PartialEq for LinMap {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.rows == other.rows && self.cols == other.cols && self.data == other.data
    }
}

impl Eq for LinMap {}

impl fmt::Debug for LinMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "LinMap {}x{} over {}", self.rows, self.cols, self.field)?;
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self.get(r, c).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl LinMap {
    fn from_vec(field: Field, rows: usize, cols: usize, data: Vec<Scalar>) -> LinMap {
        debug_assert_eq!(data.len(), rows * cols);
        LinMap { field, rows, cols, data, columns: OnceLock::new() }
    }

    pub fn zeros(field: Field, rows: usize, cols: usize) -> LinMap {
        LinMap::from_vec(field, rows, cols, vec![field.zero(); rows * cols])
    }

    pub fn identity(field: Field, n: usize) -> LinMap {
        let mut m = LinMap::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = field.one();
        }
        m
    }

    pub fn diagonal(field: Field, diag: &[Scalar]) -> LinMap {
        let n = diag.len();
        let mut m = LinMap::zeros(field, n, n);
        for (i, d) in diag.iter().enumerate() {
            m.data[i * n + i] = d.clone();
        }
        m
    }

    /// Builds a matrix from row-major rows, checking shape and field.
    pub fn from_rows(field: Field, rows: Vec<Vec<Scalar>>) -> Result<LinMap> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            if row.len() != c {
                return Err(Error::DimensionMismatch { what: "matrix row".into(), expected: c, found: row.len() });
            }
            for s in row {
                if s.field() != field {
                    return Err(Error::FieldMismatch);
                }
                data.push(s);
            }
        }
        Ok(LinMap::from_vec(field, r, c, data))
    }

    pub fn from_i64_rows(field: Field, rows: &[&[i64]]) -> LinMap {
        let rows = rows.iter().map(|r| r.iter().map(|&x| field.from_i64(x)).collect()).collect();
        LinMap::from_rows(field, rows).expect("rectangular integer matrix")
    }

    /// Builds a matrix column by column from the images of the basis vectors.
    pub fn from_columns(field: Field, rows: usize, columns: Vec<Vec<Scalar>>) -> Result<LinMap> {
        let cols = columns.len();
        let mut m = LinMap::zeros(field, rows, cols);
        for (j, col) in columns.into_iter().enumerate() {
            if col.len() != rows {
                return Err(Error::DimensionMismatch { what: "matrix column".into(), expected: rows, found: col.len() });
            }
            for (i, s) in col.into_iter().enumerate() {
                m.data[i * cols + j] = s;
            }
        }
        Ok(m)
    }

    /// Builds a matrix from a function of `(row, col)`.
    pub fn from_fn(field: Field, rows: usize, cols: usize, f: impl Fn(usize, usize) -> Scalar) -> LinMap {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        LinMap::from_vec(field, rows, cols, data)
    }

    /// The permutation matrix sending `e_j` to `e_{perm[j]}`.
    pub fn permutation(field: Field, perm: &[usize]) -> LinMap {
        let n = perm.len();
        let mut m = LinMap::zeros(field, n, n);
        for (j, &i) in perm.iter().enumerate() {
            m.data[i * n + j] = field.one();
        }
        m
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: Scalar) {
        assert_eq!(value.field(), self.field, "entry over a different field");
        self.data[r * self.cols + c] = value;
        self.columns = OnceLock::new();
    }

    /// Returns a copy with one entry replaced.
    pub fn with_entry(&self, r: usize, c: usize, value: Scalar) -> LinMap {
        let mut data = self.data.clone();
        data[r * self.cols + c] = value;
        LinMap::from_vec(self.field, self.rows, self.cols, data)
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    pub fn column(&self, c: usize) -> Vec<Scalar> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    /// Nonzero entries of column `c` as `(row, value)` pairs.
    pub fn column_nonzeros(&self, c: usize) -> &[(usize, Scalar)] {
        let columns = self.columns.get_or_init(|| {
            (0..self.cols)
                .map(|c| {
                    (0..self.rows)
                        .filter_map(|r| {
                            let v = self.get(r, c);
                            (!v.is_zero()).then(|| (r, v.clone()))
                        })
                        .collect()
                })
                .collect()
        });
        &columns[c]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|r| (0..self.cols).all(|c| if r == c { self.get(r, c).is_one() } else { self.get(r, c).is_zero() }))
    }

    pub fn transpose(&self) -> LinMap {
        LinMap::from_fn(self.field, self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    pub fn scale(&self, s: &Scalar) -> LinMap {
        LinMap::from_vec(self.field, self.rows, self.cols, self.data.iter().map(|x| x * s).collect())
    }

    pub fn add(&self, other: &LinMap) -> Result<LinMap> {
        self.same_shape(other)?;
        Ok(LinMap::from_vec(self.field, self.rows, self.cols, self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect()))
    }

    pub fn sub(&self, other: &LinMap) -> Result<LinMap> {
        self.same_shape(other)?;
        Ok(LinMap::from_vec(self.field, self.rows, self.cols, self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect()))
    }

    fn same_shape(&self, other: &LinMap) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch { what: "matrix shape".into(), expected: self.rows * self.cols, found: other.rows * other.cols });
        }
        Ok(())
    }

    /// `self ∘ inner`: apply `inner` first.
    pub fn compose(&self, inner: &LinMap) -> Result<LinMap> {
        if self.field != inner.field {
            return Err(Error::FieldMismatch);
        }
        if self.cols != inner.rows {
            return Err(Error::DimensionMismatch { what: "composition inner dimension".into(), expected: self.cols, found: inner.rows });
        }
        let mut out = LinMap::zeros(self.field, self.rows, inner.cols);
        for j in 0..inner.cols {
            for (k, b) in inner.column_nonzeros(j) {
                for (i, a) in self.column_nonzeros(*k) {
                    out.data[i * inner.cols + j] += &(a * b);
                }
            }
        }
        Ok(out)
    }

    pub fn apply(&self, v: &[Scalar]) -> Result<Vec<Scalar>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch { what: "vector".into(), expected: self.cols, found: v.len() });
        }
        let mut out = vec![self.field.zero(); self.rows];
        for (j, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (i, a) in self.column_nonzeros(j) {
                out[*i] += &(a * x);
            }
        }
        Ok(out)
    }

    /// `self^k` for square maps, using the inverse for negative exponents.
    pub fn power(&self, k: i32) -> Result<LinMap> {
        if !self.is_square() {
            return Err(Error::NotSquare { rows: self.rows, cols: self.cols });
        }
        let base = if k < 0 { invert_linear_map(self)? } else { self.clone() };
        let mut acc = LinMap::identity(self.field, self.rows);
        for _ in 0..k.unsigned_abs() {
            acc = acc.compose(&base)?;
        }
        Ok(acc)
    }

    /// Reduces every entry of a rational matrix modulo `p`.
    pub fn reduce_mod(&self, p: u64) -> Result<LinMap> {
        let field = Field::prime(p)?;
        let data = self.data.iter().map(|s| s.reduce_mod(p)).collect::<Result<Vec<_>>>()?;
        Ok(LinMap::from_vec(field, self.rows, self.cols, data))
    }

    pub fn rank(&self) -> usize {
        let (_, rank) = row_reduce(self.clone());
        rank
    }
}

/// Kronecker product: `(f ⊗ g)(e_i ⊗ e_j) = f(e_i) ⊗ g(e_j)` with the
/// lexicographic ordering `(i, j) -> i * dim + j` on both sides.
pub fn kron(f: &LinMap, g: &LinMap) -> LinMap {
    assert_eq!(f.field, g.field, "kron over different fields");
    let rows = f.rows * g.rows;
    let cols = f.cols * g.cols;
    let mut out = LinMap::zeros(f.field, rows, cols);
    for fc in 0..f.cols {
        for (fr, a) in f.column_nonzeros(fc) {
            for gc in 0..g.cols {
                for (gr, b) in g.column_nonzeros(gc) {
                    out.data[(fr * g.rows + gr) * cols + fc * g.cols + gc] = a * b;
                }
            }
        }
    }
    out
}

/// Kronecker product of a list of maps, associated to the left.
pub fn kron_all(maps: &[&LinMap]) -> LinMap {
    let (first, rest) = maps.split_first().expect("at least one factor");
    rest.iter().fold((*first).clone(), |acc, m| kron(&acc, m))
}

/// Reduced row echelon form of `m` and its rank.
fn row_reduce(mut m: LinMap) -> (LinMap, usize) {
    let (rows, cols) = (m.rows, m.cols);
    let mut rank = 0;
    for c in 0..cols {
        let Some(pivot) = (rank..rows).find(|&r| !m.data[r * cols + c].is_zero()) else {
            continue;
        };
        for k in 0..cols {
            m.data.swap(pivot * cols + k, rank * cols + k);
        }
        let inv = m.data[rank * cols + c].inverse().expect("nonzero pivot");
        for k in 0..cols {
            m.data[rank * cols + k] = &m.data[rank * cols + k] * &inv;
        }
        for r in 0..rows {
            if r == rank || m.data[r * cols + c].is_zero() {
                continue;
            }
            let factor = m.data[r * cols + c].clone();
            for k in 0..cols {
                let delta = &factor * &m.data[rank * cols + k];
                m.data[r * cols + k] = &m.data[r * cols + k] - &delta;
            }
        }
        rank += 1;
        if rank == rows {
            break;
        }
    }
    m.columns = OnceLock::new();
    (m, rank)
}

/// Exact inverse by Gauss-Jordan elimination on `[m | I]`.
pub fn invert_linear_map(m: &LinMap) -> Result<LinMap> {
    if !m.is_square() {
        return Err(Error::NotSquare { rows: m.rows, cols: m.cols });
    }
    let n = m.rows;
    let field = m.field;
    let augmented = LinMap::from_fn(field, n, 2 * n, |r, c| {
        if c < n {
            m.get(r, c).clone()
        } else if c - n == r {
            field.one()
        } else {
            field.zero()
        }
    });
    let (reduced, _) = row_reduce(augmented);
    for i in 0..n {
        if !reduced.get(i, i).is_one() {
            return Err(Error::SingularMap);
        }
    }
    Ok(LinMap::from_fn(field, n, n, |r, c| reduced.get(r, n + c).clone()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Field {
        Field::Rational
    }

    #[test]
    fn identity_inverts_to_itself() {
        let id = LinMap::identity(q(), 3);
        assert_eq!(invert_linear_map(&id).unwrap(), id);
    }

    #[test]
    fn swap_is_an_involution() {
        let swap = LinMap::from_i64_rows(q(), &[&[0, 1], &[1, 0]]);
        assert_eq!(invert_linear_map(&swap).unwrap(), swap);
    }

    #[test]
    fn sign_flip_of_h4_inverts_to_itself() {
        let alpha = LinMap::from_i64_rows(q(), &[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, -1, 0], &[0, 0, 0, -1]]);
        assert_eq!(invert_linear_map(&alpha).unwrap(), alpha);
    }

    #[test]
    fn singular_matrix_rejected() {
        let m = LinMap::from_i64_rows(q(), &[&[1, 2], &[2, 4]]);
        assert!(matches!(invert_linear_map(&m), Err(Error::SingularMap)));
        assert_eq!(m.rank(), 1);
        assert!(matches!(invert_linear_map(&LinMap::zeros(q(), 2, 3)), Err(Error::NotSquare { .. })));
    }

    #[test]
    fn kron_of_identities() {
        let k = kron(&LinMap::identity(q(), 2), &LinMap::identity(q(), 3));
        assert_eq!(k, LinMap::identity(q(), 6));
    }

    #[test]
    fn kron_sign_pattern() {
        let d = LinMap::from_i64_rows(q(), &[&[1, 0], &[0, -1]]);
        let expect = LinMap::from_i64_rows(q(), &[&[1, 0, 0, 0], &[0, -1, 0, 0], &[0, 0, -1, 0], &[0, 0, 0, 1]]);
        assert_eq!(kron(&d, &d), expect);
    }

    #[test]
    fn compose_checks_inner_dimension() {
        let a = LinMap::zeros(q(), 2, 3);
        assert!(a.compose(&LinMap::zeros(q(), 2, 2)).is_err());
    }

    #[test]
    fn power_uses_inverse_for_negative_exponents() {
        let m = LinMap::from_i64_rows(q(), &[&[1, 1], &[0, 1]]);
        let back = m.power(-2).unwrap().compose(&m.power(2).unwrap()).unwrap();
        assert!(back.is_identity());
    }
}
