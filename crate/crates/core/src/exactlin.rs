//! Exact rational linear algebra.
//!
//! Everything in the crate reduces to linear algebra over ℚ: balanced tensor
//! products are quotients of Kronecker products, hom spaces are kernels, and
//! every comparison of maps is an exact matrix equality.  Subspaces are kept
//! in reduced row-echelon form so that two subspaces are equal exactly when
//! their stored bases are equal.
//!
//! Tensor index convention: the basis vector `e_i ⊗ f_j` of `V ⊗ W` has index
//! `i * dim(W) + j`.  Every tensor construction in the crate uses it.

use std::fmt;
use std::ops::{Index, IndexMut, Mul};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::de::{self, Deserializer};
use serde::ser::{SerializeSeq, Serializer};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Arbitrary precision rational number; always stored in lowest terms.
pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Parses `"p/q"` or `"p"`.
pub fn parse_rational(s: &str) -> std::result::Result<Rational, String> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| format!("malformed rational {s:?}"))?;
    let den: BigInt = den.parse().map_err(|_| format!("malformed rational {s:?}"))?;
    if den.is_zero() {
        return Err(format!("zero denominator in {s:?}"));
    }
    Ok(Rational::new(num, den))
}

/// Formats as `"p/q"`, or `"p"` when the denominator is one.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn zero_vec(n: usize) -> Vec<Rational> {
    vec![Rational::zero(); n]
}

pub fn unit_vec(n: usize, i: usize) -> Vec<Rational> {
    let mut v = zero_vec(n);
    v[i] = Rational::one();
    v
}

pub fn is_zero_vec(v: &[Rational]) -> bool {
    v.iter().all(Zero::is_zero)
}

pub fn add_vec(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub_vec(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn scale_vec(s: &Rational, v: &[Rational]) -> Vec<Rational> {
    v.iter().map(|x| s * x).collect()
}

/// `acc += s * v`
pub fn axpy(acc: &mut [Rational], s: &Rational, v: &[Rational]) {
    if s.is_zero() {
        return;
    }
    for (a, x) in acc.iter_mut().zip(v) {
        if !x.is_zero() {
            *a += s * x;
        }
    }
}

/// Kronecker product of two coordinate vectors.
pub fn kron_vec(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut out = zero_vec(a.len() * b.len());
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i * b.len() + j] = x * y;
            }
        }
    }
    out
}

/// Applies `f` (of shape `d_out × d_in`) to one tensor mode of `v`, where `v`
/// has shape `before × d_in × after` in row-major order.
pub fn apply_mode(v: &[Rational], before: usize, d_in: usize, after: usize, f: &Matrix) -> Vec<Rational> {
    assert_eq!(f.cols(), d_in, "mode map has wrong input dimension");
    assert_eq!(v.len(), before * d_in * after, "vector does not match mode shape");
    let d_out = f.rows();
    let mut out = zero_vec(before * d_out * after);
    for b in 0..before {
        for s in 0..d_in {
            for a in 0..after {
                let x = &v[(b * d_in + s) * after + a];
                if x.is_zero() {
                    continue;
                }
                for r in 0..d_out {
                    let c = &f[(r, s)];
                    if !c.is_zero() {
                        out[(b * d_out + r) * after + a] += c * x;
                    }
                }
            }
        }
    }
    out
}

// ---------------------------------------------------------------------------
// Dense matrices

/// Dense row-major matrix of rationals.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: zero_vec(rows * cols),
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::one();
        }
        m
    }

    pub fn from_vec(rows: usize, cols: usize, data: Vec<Rational>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(Matrix { rows, cols, data })
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::DimensionMismatch("ragged matrix rows".into()));
        }
        Ok(Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    /// Small-integer convenience constructor, mostly for tests and fixtures.
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect())
            .expect("rows of equal length")
    }

    /// Builds a matrix whose columns are the given vectors.
    pub fn from_columns(rows: usize, columns: &[Vec<Rational>]) -> Self {
        let mut m = Self::zeros(rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows, "column length");
            for (i, x) in col.iter().enumerate() {
                if !x.is_zero() {
                    m[(i, j)] = x.clone();
                }
            }
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn data(&self) -> &[Rational] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Rational> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<Rational>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        is_zero_vec(&self.data)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.cols, "matrix-vector dimension mismatch");
        let mut out = zero_vec(self.rows);
        for (j, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (i, o) in out.iter_mut().enumerate() {
                let a = &self.data[i * self.cols + j];
                if !a.is_zero() {
                    *o += a * x;
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: add_vec(&self.data, &other.data),
        }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: sub_vec(&self.data, &other.data),
        }
    }

    pub fn scale(&self, s: &Rational) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: scale_vec(s, &self.data),
        }
    }

    /// `self += s * other`
    pub fn add_scaled(&mut self, s: &Rational, other: &Matrix) {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        axpy(&mut self.data, s, &other.data);
    }

    pub fn hstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.rows, other.rows);
        Self::from_fn(self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols {
                self[(i, j)].clone()
            } else {
                other[(i, j - self.cols)].clone()
            }
        })
    }

    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Matrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn block_diag(blocks: &[&Matrix]) -> Matrix {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut m = Matrix::zeros(rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            m.set_block(r0, c0, b);
            r0 += b.rows;
            c0 += b.cols;
        }
        m
    }

    pub fn set_block(&mut self, r0: usize, c0: usize, b: &Matrix) {
        for i in 0..b.rows {
            for j in 0..b.cols {
                self[(r0 + i, c0 + j)] = b[(i, j)].clone();
            }
        }
    }

    pub fn block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Matrix {
        Matrix::from_fn(rows, cols, |i, j| self[(r0 + i, c0 + j)].clone())
    }

    /// Row-major flattening, the coordinate vector used for spaces of maps.
    pub fn vectorize(&self) -> Vec<Rational> {
        self.data.clone()
    }

    pub fn unvectorize(rows: usize, cols: usize, v: &[Rational]) -> Matrix {
        assert_eq!(v.len(), rows * cols);
        Matrix {
            rows,
            cols,
            data: v.to_vec(),
        }
    }

    pub fn rank(&self) -> usize {
        rref(self).1.len()
    }

    pub fn trace(&self) -> Rational {
        (0..self.rows.min(self.cols)).map(|i| self[(i, i)].clone()).sum()
    }

    /// Inverse of a square matrix, if it exists.
    pub fn inverse(&self) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        solve_right(self, &Matrix::identity(self.rows)).ok().flatten()
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = Rational;
    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

impl Mul for &Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        assert_eq!(
            self.cols, rhs.rows,
            "matrix product dimension mismatch ({}x{} * {}x{})",
            self.rows, self.cols, rhs.rows, rhs.cols
        );
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self.data[i * self.cols + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs.data[k * rhs.cols + j];
                    if !b.is_zero() {
                        out.data[i * rhs.cols + j] += a * b;
                    }
                }
            }
        }
        out
    }
}

impl Mul for Matrix {
    type Output = Matrix;
    fn mul(self, rhs: Matrix) -> Matrix {
        &self * &rhs
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(format_rational).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl Serialize for Matrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        // A matrix with zero rows would lose its column count, so the shape
        // travels with the entries.
        let mut seq = s.serialize_seq(Some(self.rows))?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(format_rational).collect();
            seq.serialize_element(&row)?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for Matrix {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let rows: Vec<Vec<String>> = Vec::deserialize(d)?;
        let parsed = rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|x| parse_rational(x))
                    .collect::<std::result::Result<Vec<_>, _>>()
            })
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(de::Error::custom)?;
        Matrix::from_rows(parsed).map_err(de::Error::custom)
    }
}

/// Kronecker product with the crate-wide index ordering `(i, j) ↦ i·dim₂ + j`.
pub fn kron(a: &Matrix, b: &Matrix) -> Matrix {
    let mut m = Matrix::zeros(a.rows * b.rows, a.cols * b.cols);
    for i in 0..a.rows {
        for j in 0..a.cols {
            let x = &a[(i, j)];
            if x.is_zero() {
                continue;
            }
            for k in 0..b.rows {
                for l in 0..b.cols {
                    let y = &b[(k, l)];
                    if !y.is_zero() {
                        m[(i * b.rows + k, j * b.cols + l)] = x * y;
                    }
                }
            }
        }
    }
    m
}

// ---------------------------------------------------------------------------
// Sparse echelon engine

/// Sparse vector: strictly increasing indices, no explicit zeros.
pub type SparseVec = Vec<(usize, Rational)>;

pub fn sparse_from_dense(v: &[Rational]) -> SparseVec {
    v.iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(i, x)| (i, x.clone()))
        .collect()
}

pub fn sparse_to_dense(n: usize, v: &SparseVec) -> Vec<Rational> {
    let mut out = zero_vec(n);
    for (i, x) in v {
        out[*i] = x.clone();
    }
    out
}

/// `a + s * b`, merged.
fn sparse_axpy(a: &SparseVec, s: &Rational, b: &SparseVec) -> SparseVec {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let take_a = j >= b.len() || (i < a.len() && a[i].0 < b[j].0);
        let take_b = i >= a.len() || (j < b.len() && b[j].0 < a[i].0);
        if take_a {
            out.push(a[i].clone());
            i += 1;
        } else if take_b {
            out.push((b[j].0, s * &b[j].1));
            j += 1;
        } else {
            let x = &a[i].1 + s * &b[j].1;
            if !x.is_zero() {
                out.push((a[i].0, x));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Incremental row echelon builder over sparse rows.
///
/// Rows are normalised so that their leading entry is one; no two rows share
/// a leading column.  `finish` back-substitutes into reduced form.
#[derive(Clone, Debug)]
pub struct EchelonBuilder {
    ncols: usize,
    rows: Vec<SparseVec>,
    pivot_row: Vec<Option<usize>>,
}

impl EchelonBuilder {
    pub fn new(ncols: usize) -> Self {
        EchelonBuilder {
            ncols,
            rows: Vec::new(),
            pivot_row: vec![None; ncols],
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Inserts a vector, returning whether it was independent of the rows so far.
    pub fn insert(&mut self, mut v: SparseVec) -> bool {
        loop {
            let Some((lead, coef)) = v.first().cloned() else {
                return false;
            };
            match self.pivot_row[lead] {
                Some(r) => v = sparse_axpy(&v, &(-coef), &self.rows[r]),
                None => {
                    let inv = coef.recip();
                    for (_, x) in v.iter_mut() {
                        *x *= &inv;
                    }
                    self.pivot_row[lead] = Some(self.rows.len());
                    self.rows.push(v);
                    return true;
                }
            }
        }
    }

    pub fn insert_dense(&mut self, v: &[Rational]) -> bool {
        assert_eq!(v.len(), self.ncols);
        self.insert(sparse_from_dense(v))
    }

    /// Reduced rows sorted by pivot column, together with the pivots.
    pub fn finish(self) -> (Vec<SparseVec>, Vec<usize>) {
        let EchelonBuilder {
            mut rows, pivot_row, ..
        } = self;
        let mut order: Vec<(usize, usize)> = pivot_row
            .iter()
            .enumerate()
            .filter_map(|(c, r)| r.map(|r| (c, r)))
            .collect();
        order.sort_unstable();
        let is_pivot: Vec<Option<usize>> = pivot_row;
        // Rows with larger pivots are reduced first; eliminating their pivot
        // column from a row never reintroduces another pivot column.
        for &(pc, r) in order.iter().rev() {
            let targets: Vec<(usize, Rational)> = rows[r]
                .iter()
                .filter(|(c, _)| *c != pc && is_pivot[*c].is_some())
                .cloned()
                .collect();
            for (c, coef) in targets {
                let q = is_pivot[c].expect("pivot column");
                let reduced = sparse_axpy(&rows[r], &(-coef), &rows[q]);
                rows[r] = reduced;
            }
        }
        let pivots: Vec<usize> = order.iter().map(|&(c, _)| c).collect();
        let mut taken: Vec<Option<SparseVec>> = rows.into_iter().map(Some).collect();
        let sorted = order
            .iter()
            .map(|&(_, r)| taken[r].take().expect("each row used once"))
            .collect();
        (sorted, pivots)
    }
}

/// Reduced row-echelon form and pivot columns.
pub fn rref(m: &Matrix) -> (Matrix, Vec<usize>) {
    let mut b = EchelonBuilder::new(m.cols);
    for i in 0..m.rows {
        b.insert_dense(m.row(i));
    }
    let (rows, pivots) = b.finish();
    let mut out = Matrix::zeros(m.rows, m.cols);
    for (i, r) in rows.iter().enumerate() {
        for (j, x) in r {
            out[(i, *j)] = x.clone();
        }
    }
    (out, pivots)
}

// ---------------------------------------------------------------------------
// Subspaces and quotients

/// Linear subspace of ℚ^n with its canonical (RREF) basis.
#[derive(Clone, PartialEq, Eq)]
pub struct Subspace {
    ambient_dim: usize,
    rows: Vec<SparseVec>,
    pivots: Vec<usize>,
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subspace(dim {} in {}) ", self.dim(), self.ambient_dim)?;
        fmt::Debug::fmt(&self.basis(), f)
    }
}

impl Subspace {
    pub fn zero(n: usize) -> Self {
        Subspace {
            ambient_dim: n,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(n: usize) -> Self {
        Self::from_builder({
            let mut b = EchelonBuilder::new(n);
            for i in 0..n {
                b.insert(vec![(i, Rational::one())]);
            }
            b
        })
    }

    pub fn from_builder(b: EchelonBuilder) -> Self {
        let n = b.ncols;
        let (rows, pivots) = b.finish();
        Subspace {
            ambient_dim: n,
            rows,
            pivots,
        }
    }

    pub fn span<'a>(n: usize, vectors: impl IntoIterator<Item = &'a Vec<Rational>>) -> Self {
        let mut b = EchelonBuilder::new(n);
        for v in vectors {
            b.insert_dense(v);
        }
        Self::from_builder(b)
    }

    pub fn span_sparse(n: usize, vectors: impl IntoIterator<Item = SparseVec>) -> Self {
        let mut b = EchelonBuilder::new(n);
        for v in vectors {
            b.insert(v);
        }
        Self::from_builder(b)
    }

    /// Row space of a matrix.
    pub fn row_space(m: &Matrix) -> Self {
        let mut b = EchelonBuilder::new(m.cols());
        for i in 0..m.rows() {
            b.insert_dense(m.row(i));
        }
        Self::from_builder(b)
    }

    /// Column space of a matrix.
    pub fn column_space(m: &Matrix) -> Self {
        let mut b = EchelonBuilder::new(m.rows());
        for j in 0..m.cols() {
            b.insert_dense(&m.column(j));
        }
        Self::from_builder(b)
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.ambient_dim
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn sparse_rows(&self) -> &[SparseVec] {
        &self.rows
    }

    /// Basis as the rows of a matrix (RREF).
    pub fn basis(&self) -> Matrix {
        let mut m = Matrix::zeros(self.dim(), self.ambient_dim);
        for (i, r) in self.rows.iter().enumerate() {
            for (j, x) in r {
                m[(i, *j)] = x.clone();
            }
        }
        m
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Rational> {
        sparse_to_dense(self.ambient_dim, &self.rows[i])
    }

    pub fn basis_vectors(&self) -> Vec<Vec<Rational>> {
        (0..self.dim()).map(|i| self.basis_vector(i)).collect()
    }

    /// Residual of `v` after eliminating the pivot columns.
    pub fn reduce(&self, v: &[Rational]) -> Vec<Rational> {
        let mut out = v.to_vec();
        for (r, &p) in self.rows.iter().zip(&self.pivots) {
            let c = out[p].clone();
            if c.is_zero() {
                continue;
            }
            for (j, x) in r {
                out[*j] -= &c * x;
            }
        }
        out
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        assert_eq!(v.len(), self.ambient_dim, "vector length vs ambient dimension");
        is_zero_vec(&self.reduce(v))
    }

    /// Coordinates with respect to the RREF basis, if `v` lies in the subspace.
    pub fn coordinates(&self, v: &[Rational]) -> Option<Vec<Rational>> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    /// Vector with the given coordinates.
    pub fn combine(&self, coords: &[Rational]) -> Vec<Rational> {
        assert_eq!(coords.len(), self.dim());
        let mut out = zero_vec(self.ambient_dim);
        for (c, r) in coords.iter().zip(&self.rows) {
            if c.is_zero() {
                continue;
            }
            for (j, x) in r {
                out[*j] += c * x;
            }
        }
        out
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.ambient_dim == other.ambient_dim && (0..self.dim()).all(|i| other.contains(&self.basis_vector(i)))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient_dim, other.ambient_dim);
        Subspace::span_sparse(self.ambient_dim, self.rows.iter().chain(other.rows.iter()).cloned())
    }

    /// Image of the subspace under a linear map.
    pub fn image(&self, m: &Matrix) -> Subspace {
        assert_eq!(m.cols(), self.ambient_dim);
        let imgs: Vec<Vec<Rational>> = (0..self.dim()).map(|i| m.mul_vec(&self.basis_vector(i))).collect();
        Subspace::span(m.rows(), &imgs)
    }
}

/// `{v : m·v = 0}`.
pub fn kernel_basis(m: &Matrix) -> Subspace {
    let (r, pivots) = rref(m);
    kernel_from_rref(m.cols(), &r, &pivots)
}

fn kernel_from_rref(ncols: usize, r: &Matrix, pivots: &[usize]) -> Subspace {
    let mut is_pivot = vec![false; ncols];
    for &p in pivots {
        is_pivot[p] = true;
    }
    let mut vecs = Vec::new();
    for f in (0..ncols).filter(|&c| !is_pivot[c]) {
        let mut v: SparseVec = Vec::new();
        for (i, &p) in pivots.iter().enumerate() {
            let x = &r[(i, f)];
            if !x.is_zero() {
                v.push((p, -x.clone()));
            }
        }
        v.push((f, Rational::one()));
        v.sort_by_key(|(i, _)| *i);
        vecs.push(v);
    }
    Subspace::span_sparse(ncols, vecs)
}

/// Kernel of the linear map whose action on the `k`-th unknown is `columns[k]`.
///
/// Convenient for linear systems assembled one unknown at a time: each column
/// is the (vectorised) effect of setting that unknown to one.
pub fn kernel_of_columns(nrows: usize, columns: &[Vec<Rational>]) -> Subspace {
    for col in columns {
        assert_eq!(col.len(), nrows, "column length");
    }
    kernel_of_sparse_columns(nrows, columns.iter().map(|c| sparse_from_dense(c)).collect())
}

/// Sparse variant of [`kernel_of_columns`].
pub fn kernel_of_sparse_columns(nrows: usize, columns: Vec<SparseVec>) -> Subspace {
    let n = columns.len();
    let mut rows: Vec<SparseVec> = vec![Vec::new(); nrows];
    for (k, col) in columns.into_iter().enumerate() {
        for (i, x) in col {
            if !x.is_zero() {
                rows[i].push((k, x));
            }
        }
    }
    let mut b = EchelonBuilder::new(n);
    for r in rows {
        if !r.is_empty() {
            b.insert(r);
        }
    }
    let (reduced, pivots) = b.finish();
    let mut is_pivot = vec![false; n];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let mut vecs = Vec::new();
    for f in (0..n).filter(|&c| !is_pivot[c]) {
        let mut v: SparseVec = Vec::new();
        for (row, &p) in reduced.iter().zip(&pivots) {
            if let Ok(pos) = row.binary_search_by_key(&f, |(i, _)| *i) {
                v.push((p, -row[pos].1.clone()));
            }
        }
        v.push((f, Rational::one()));
        v.sort_by_key(|(i, _)| *i);
        vecs.push(v);
    }
    Subspace::span_sparse(n, vecs)
}

/// Sorts a list of (index, value) pairs and merges duplicates, dropping zeros.
pub fn sparse_normalize(mut v: Vec<(usize, Rational)>) -> SparseVec {
    v.sort_by_key(|(i, _)| *i);
    let mut out: SparseVec = Vec::with_capacity(v.len());
    for (i, x) in v {
        match out.last_mut() {
            Some((j, y)) if *j == i => *y += x,
            _ => out.push((i, x)),
        }
    }
    out.retain(|(_, x)| !x.is_zero());
    out
}

/// Some `X` with `a·X = b`, free variables set to zero; `None` if inconsistent.
pub fn solve_right(a: &Matrix, b: &Matrix) -> Result<Option<Matrix>> {
    if a.rows() != b.rows() {
        return Err(Error::DimensionMismatch(format!(
            "solve_right: a has {} rows, b has {}",
            a.rows(),
            b.rows()
        )));
    }
    let aug = a.hstack(b);
    let (r, pivots) = rref(&aug);
    if pivots.iter().any(|&p| p >= a.cols()) {
        return Ok(None);
    }
    let mut x = Matrix::zeros(a.cols(), b.cols());
    for (i, &p) in pivots.iter().enumerate() {
        for k in 0..b.cols() {
            x[(p, k)] = r[(i, a.cols() + k)].clone();
        }
    }
    Ok(Some(x))
}

/// Solves `Σ_k x_k · columns[k] = target`, columns given as dense vectors.
pub fn solve_columns(columns: &[Vec<Rational>], target: &[Rational]) -> Option<Vec<Rational>> {
    let a = Matrix::from_columns(target.len(), columns);
    let b = Matrix::from_columns(target.len(), std::slice::from_ref(&target.to_vec()));
    solve_right(&a, &b).ok().flatten().map(|x| x.column(0))
}

/// Quotient `ℚ^n / W` with canonical coordinates.
///
/// Quotient coordinates are indexed by the non-pivot columns of `W`'s RREF
/// basis; the section sends a quotient basis vector to the corresponding
/// ambient unit vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientSpace {
    ambient_dim: usize,
    kernel: Subspace,
    free: Vec<usize>,
    free_index: Vec<Option<usize>>,
}

impl QuotientSpace {
    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.free.len()
    }

    pub fn kernel(&self) -> &Subspace {
        &self.kernel
    }

    /// Ambient index of the section image of quotient basis vector `i`.
    pub fn free_columns(&self) -> &[usize] {
        &self.free
    }

    pub fn project(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.ambient_dim, "projection input length");
        let mut out: Vec<Rational> = self.free.iter().map(|&f| v[f].clone()).collect();
        for (row, &p) in self.kernel.rows.iter().zip(&self.kernel.pivots) {
            let c = &v[p];
            if c.is_zero() {
                continue;
            }
            for (j, x) in row {
                if let Some(k) = self.free_index[*j] {
                    out[k] -= c * x;
                }
            }
        }
        out
    }

    pub fn lift(&self, q: &[Rational]) -> Vec<Rational> {
        assert_eq!(q.len(), self.dim());
        let mut out = zero_vec(self.ambient_dim);
        for (x, &f) in q.iter().zip(&self.free) {
            out[f] = x.clone();
        }
        out
    }

    pub fn projection(&self) -> Matrix {
        let cols: Vec<Vec<Rational>> = (0..self.ambient_dim)
            .map(|j| self.project(&unit_vec(self.ambient_dim, j)))
            .collect();
        Matrix::from_columns(self.dim(), &cols)
    }

    pub fn section(&self) -> Matrix {
        let mut m = Matrix::zeros(self.ambient_dim, self.dim());
        for (k, &f) in self.free.iter().enumerate() {
            m[(f, k)] = Rational::one();
        }
        m
    }
}

impl QuotientSpace {
    /// Projection of the ambient unit vector `e_j`, sparse.
    pub fn projection_column(&self, j: usize) -> SparseVec {
        if let Some(k) = self.free_index[j] {
            return vec![(k, Rational::one())];
        }
        let r = self
            .kernel
            .pivots
            .binary_search(&j)
            .expect("non-free column is a pivot");
        self.kernel.rows[r]
            .iter()
            .filter_map(|(c, x)| self.free_index[*c].map(|k| (k, -x.clone())))
            .collect()
    }
}

/// A space of linear maps `ℚ^cols → ℚ^rows`, stored as a subspace of
/// row-major vectorised matrices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MapSpace {
    rows: usize,
    cols: usize,
    space: Subspace,
}

impl MapSpace {
    pub fn new(rows: usize, cols: usize, space: Subspace) -> Self {
        assert_eq!(space.ambient_dim(), rows * cols, "map space shape");
        MapSpace { rows, cols, space }
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        Self::new(rows, cols, Subspace::zero(rows * cols))
    }

    pub fn spanned_by(rows: usize, cols: usize, maps: &[Matrix]) -> Self {
        let vecs: Vec<Vec<Rational>> = maps
            .iter()
            .map(|m| {
                assert_eq!((m.rows(), m.cols()), (rows, cols), "map shape");
                m.vectorize()
            })
            .collect();
        Self::new(rows, cols, Subspace::span(rows * cols, &vecs))
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn subspace(&self) -> &Subspace {
        &self.space
    }

    pub fn basis(&self, i: usize) -> Matrix {
        Matrix::unvectorize(self.rows, self.cols, &self.space.basis_vector(i))
    }

    pub fn basis_maps(&self) -> Vec<Matrix> {
        (0..self.dim()).map(|i| self.basis(i)).collect()
    }

    pub fn contains(&self, m: &Matrix) -> bool {
        (m.rows(), m.cols()) == (self.rows, self.cols) && self.space.contains(m.data())
    }

    pub fn coordinates(&self, m: &Matrix) -> Option<Vec<Rational>> {
        if (m.rows(), m.cols()) != (self.rows, self.cols) {
            return None;
        }
        self.space.coordinates(m.data())
    }

    pub fn combine(&self, coords: &[Rational]) -> Matrix {
        Matrix::unvectorize(self.rows, self.cols, &self.space.combine(coords))
    }

    /// Maps given by coordinate vectors of a subspace of this space.
    pub fn restrict(&self, coords: &Subspace) -> MapSpace {
        let maps: Vec<Matrix> = coords.basis_vectors().iter().map(|c| self.combine(c)).collect();
        MapSpace::spanned_by(self.rows, self.cols, &maps)
    }
}

pub fn quotient_space(ambient_dim: usize, w: &Subspace) -> Result<QuotientSpace> {
    if w.ambient_dim != ambient_dim {
        return Err(Error::DimensionMismatch(format!(
            "subspace of ℚ^{} used as kernel in ℚ^{}",
            w.ambient_dim, ambient_dim
        )));
    }
    let mut free_index = vec![None; ambient_dim];
    let mut is_pivot = vec![false; ambient_dim];
    for &p in &w.pivots {
        is_pivot[p] = true;
    }
    let free: Vec<usize> = (0..ambient_dim).filter(|&c| !is_pivot[c]).collect();
    for (k, &f) in free.iter().enumerate() {
        free_index[f] = Some(k);
    }
    Ok(QuotientSpace {
        ambient_dim,
        kernel: w.clone(),
        free,
        free_index,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(rows: &[&[i64]]) -> Matrix {
        Matrix::from_i64(rows)
    }

    #[test]
    fn rref_identity_and_zero() {
        let id = Matrix::identity(2);
        assert_eq!(rref(&id), (id.clone(), vec![0, 1]));
        let z = Matrix::zeros(2, 3);
        assert_eq!(rref(&z), (z.clone(), vec![]));
    }

    #[test]
    fn rref_rank_one() {
        let (r, p) = rref(&m(&[&[2, 4], &[1, 2]]));
        assert_eq!(r, m(&[&[1, 2], &[0, 0]]));
        assert_eq!(p, vec![0]);
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(kernel_basis(&Matrix::identity(3)).dim(), 0);
        assert!(kernel_basis(&Matrix::zeros(2, 2)).is_full());
        let k = kernel_basis(&m(&[&[1, 2]]));
        assert_eq!(k.dim(), 1);
        // span{(-2, 1)} normalised so the leading entry is one
        assert_eq!(k.basis_vector(0), vec![rat(1), ratio(-1, 2)]);
        assert!(k.contains(&[rat(-2), rat(1)]));
    }

    #[test]
    fn solve_examples() {
        let b = m(&[&[3, 1], &[-2, 5]]);
        assert_eq!(solve_right(&Matrix::identity(2), &b).unwrap(), Some(b));
        let x = solve_right(&m(&[&[1, 1]]), &m(&[&[1]])).unwrap();
        assert_eq!(x, Some(m(&[&[1], &[0]])));
        assert_eq!(solve_right(&m(&[&[0]]), &m(&[&[1]])).unwrap(), None);
        assert!(solve_right(&m(&[&[1]]), &m(&[&[1], &[1]])).is_err());
    }

    #[test]
    fn quotient_examples() {
        let q = quotient_space(3, &Subspace::zero(3)).unwrap();
        assert_eq!(q.dim(), 3);
        assert_eq!(q.projection(), Matrix::identity(3));
        assert_eq!(quotient_space(3, &Subspace::full(3)).unwrap().dim(), 0);

        let w = Subspace::span(2, &[vec![rat(1), rat(1)]]);
        let q = quotient_space(2, &w).unwrap();
        assert_eq!(q.dim(), 1);
        let a = q.project(&[rat(1), rat(0)]);
        let b = q.project(&[rat(0), rat(1)]);
        assert_eq!(a, scale_vec(&rat(-1), &b));
        assert_eq!(&q.projection() * &q.section(), Matrix::identity(1));
        assert!(is_zero_vec(&q.project(&[rat(1), rat(1)])));
        assert!(quotient_space(3, &w).is_err());
    }

    #[test]
    fn kron_examples() {
        assert_eq!(kron(&Matrix::identity(2), &Matrix::identity(3)), Matrix::identity(6));
        assert!(kron(&m(&[&[1, 2], &[3, 4]]), &Matrix::zeros(2, 2)).is_zero());
        assert_eq!(kron(&m(&[&[2]]), &Matrix::identity(2)), m(&[&[2, 0], &[0, 2]]));
    }

    #[test]
    fn rational_text_format() {
        assert_eq!(parse_rational("3/6").unwrap(), ratio(1, 2));
        assert_eq!(parse_rational("-4").unwrap(), rat(-4));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
        assert_eq!(format_rational(&ratio(-2, 4)), "-1/2");
        assert_eq!(format_rational(&rat(7)), "7");
    }

    #[test]
    fn apply_mode_matches_kron() {
        let f = m(&[&[1, 2], &[0, 1], &[3, 0]]);
        let v: Vec<Rational> = (0..8).map(|i| rat(i - 3)).collect();
        // shape 2 x 2 x 2, apply f to the middle mode
        let direct = kron(&kron(&Matrix::identity(2), &f), &Matrix::identity(2)).mul_vec(&v);
        assert_eq!(apply_mode(&v, 2, 2, 2, &f), direct);
    }

    fn small_matrix(max: usize) -> impl Strategy<Value = Matrix> {
        (1..=max, 1..=max).prop_flat_map(|(r, c)| {
            proptest::collection::vec(-3i64..=3, r * c)
                .prop_map(move |v| Matrix::from_vec(r, c, v.into_iter().map(rat).collect()).unwrap())
        })
    }

    fn sized_matrix(r: usize, c: usize) -> impl Strategy<Value = Matrix> {
        proptest::collection::vec(-3i64..=3, r * c)
            .prop_map(move |v| Matrix::from_vec(r, c, v.into_iter().map(rat).collect()).unwrap())
    }

    fn composable_quadruple() -> impl Strategy<Value = (Matrix, Matrix, Matrix, Matrix)> {
        (1..=3usize, 1..=3usize, 1..=3usize, 1..=3usize, 1..=3usize, 1..=3usize).prop_flat_map(|(p, q, r, s, t, u)| {
            (
                sized_matrix(p, q),
                sized_matrix(s, t),
                sized_matrix(q, r),
                sized_matrix(t, u),
            )
        })
    }

    proptest! {
        #[test]
        fn rref_is_idempotent_and_preserves_rank(a in small_matrix(5)) {
            let (r, p) = rref(&a);
            prop_assert_eq!(rref(&r), (r.clone(), p.clone()));
            prop_assert_eq!(Subspace::row_space(&a), Subspace::row_space(&r));
        }

        #[test]
        fn kernel_vectors_are_annihilated(a in small_matrix(5)) {
            let k = kernel_basis(&a);
            prop_assert_eq!(k.dim() + a.rank(), a.cols());
            for v in k.basis_vectors() {
                prop_assert!(is_zero_vec(&a.mul_vec(&v)));
            }
            prop_assert_eq!(kernel_of_columns(a.rows(), &(0..a.cols()).map(|j| a.column(j)).collect::<Vec<_>>()), k);
        }

        #[test]
        fn quotient_invariants(a in small_matrix(4)) {
            let w = Subspace::row_space(&a);
            let q = quotient_space(a.cols(), &w).unwrap();
            prop_assert_eq!(q.dim() + w.dim(), a.cols());
            prop_assert_eq!(&q.projection() * &q.section(), Matrix::identity(q.dim()));
            for v in w.basis_vectors() {
                prop_assert!(is_zero_vec(&q.project(&v)));
            }
        }

        #[test]
        fn kron_mixed_product((a, b, c, d) in composable_quadruple()) {
            prop_assert_eq!(&kron(&a, &b) * &kron(&c, &d), kron(&(&a * &c), &(&b * &d)));
        }

        #[test]
        fn kron_is_associative(a in small_matrix(2), b in small_matrix(2), c in small_matrix(2)) {
            prop_assert_eq!(kron(&kron(&a, &b), &c), kron(&a, &kron(&b, &c)));
        }
    }
}
