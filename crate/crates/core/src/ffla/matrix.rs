use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};

use super::PrimeField;

/// A dense matrix over `F_p`, stored row-major, acting on column vectors.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: PrimeField,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

/// Reduced row echelon form together with rank and pivot columns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rref {
    pub form: Matrix,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

/// `F_p^n / W` presented by a projection onto coordinates of the quotient and
/// a section choosing representatives: `projection · section = 1` and
/// `ker(projection) = W`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quotient {
    pub projection: Matrix,
    pub section: Matrix,
}

impl Matrix {
    pub fn zeros(field: PrimeField, rows: usize, cols: usize) -> Self {
        Matrix {
            field,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(field: PrimeField, n: usize) -> Self {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1 % field.p();
        }
        m
    }

    /// Builds a matrix from row-major data, reducing every entry mod `p`.
    pub fn from_flat(field: PrimeField, rows: usize, cols: usize, data: Vec<u32>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::dimension(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        let data = data.into_iter().map(|x| x % field.p()).collect();
        Ok(Matrix { field, rows, cols, data })
    }

    /// Builds a `rows x cols` matrix from nested rows of integers. Empty
    /// input needs explicit shape, hence the extra arguments.
    pub fn from_rows(field: PrimeField, rows: usize, cols: usize, entries: &[Vec<i64>]) -> Result<Self> {
        if entries.len() != rows || entries.iter().any(|r| r.len() != cols) {
            return Err(Error::dimension(format!("expected a {rows}x{cols} matrix")));
        }
        let data = entries.iter().flatten().map(|&x| field.reduce(x)).collect();
        Ok(Matrix { field, rows, cols, data })
    }

    pub fn from_columns(field: PrimeField, rows: usize, columns: &[Vec<u32>]) -> Self {
        let mut m = Matrix::zeros(field, rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            assert_eq!(c.len(), rows, "column length");
            for (i, &x) in c.iter().enumerate() {
                m.data[i * m.cols + j] = x % field.p();
            }
        }
        m
    }

    pub fn column_vector(field: PrimeField, v: &[u32]) -> Self {
        Matrix::from_columns(field, v.len(), &[v.to_vec()])
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Row-major entries.
    pub fn data(&self) -> &[u32] {
        &self.data
    }

    pub fn get(&self, r: usize, c: usize) -> u32 {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, x: u32) {
        self.data[r * self.cols + c] = x % self.field.p();
    }

    pub fn row(&self, r: usize) -> &[u32] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<u32> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub fn columns(&self) -> Vec<Vec<u32>> {
        (0..self.cols).map(|c| self.column(c)).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<u32>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn is_identity(&self) -> bool {
        *self == Matrix::identity(self.field, self.rows)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.data[c * self.rows + r] = self.get(r, c);
            }
        }
        t
    }

    fn same_field(&self, other: &Matrix) -> Result<()> {
        if self.field != other.field {
            return Err(Error::dimension(format!("fields {} and {} differ", self.field, other.field)));
        }
        Ok(())
    }

    pub fn checked_mul(&self, other: &Matrix) -> Result<Matrix> {
        self.same_field(other)?;
        if self.cols != other.rows {
            return Err(Error::dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let p = u64::from(self.field.p());
        let mut out = vec![0u64; self.rows * other.cols];
        for r in 0..self.rows {
            let acc = &mut out[r * other.cols..(r + 1) * other.cols];
            for k in 0..self.cols {
                let a = u64::from(self.get(r, k));
                if a == 0 {
                    continue;
                }
                for (o, &b) in acc.iter_mut().zip(other.row(k)) {
                    *o = (*o + a * u64::from(b)) % p;
                }
            }
        }
        Ok(Matrix {
            field: self.field,
            rows: self.rows,
            cols: other.cols,
            data: out.into_iter().map(|x| x as u32).collect(),
        })
    }

    pub fn checked_add(&self, other: &Matrix) -> Result<Matrix> {
        self.same_field(other)?;
        if self.shape() != other.shape() {
            return Err(Error::dimension(format!(
                "cannot add {}x{} and {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let f = self.field;
        let data = self.data.iter().zip(&other.data).map(|(&a, &b)| f.add(a, b)).collect();
        Ok(Matrix { data, ..*self })
    }

    pub fn scale(&self, s: u32) -> Matrix {
        let f = self.field;
        let data = self.data.iter().map(|&a| f.mul(a, s)).collect();
        Matrix { data, ..*self }
    }

    pub fn apply(&self, v: &[u32]) -> Vec<u32> {
        assert_eq!(v.len(), self.cols, "vector length");
        let f = self.field;
        (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .fold(0, |acc, (&a, &b)| f.add(acc, f.mul(a, b)))
            })
            .collect()
    }

    pub fn pow(&self, e: u32) -> Matrix {
        assert!(self.is_square());
        (0..e).fold(Matrix::identity(self.field, self.rows), |acc, _| &acc * self)
    }

    /// Row reduction with the first nonzero entry of each column as pivot.
    pub fn rref(&self) -> Rref {
        let (form, pivots) = reduce(self.clone(), self.cols);
        Rref {
            rank: pivots.len(),
            form,
            pivots,
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    pub fn nullity(&self) -> usize {
        self.cols - self.rank()
    }

    pub fn is_injective(&self) -> bool {
        self.rank() == self.cols
    }

    pub fn is_surjective(&self) -> bool {
        self.rank() == self.rows
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.is_injective()
    }

    /// Some `x` with `self · x = b`, or `None` when `b` is not in the image.
    pub fn solve(&self, b: &[u32]) -> Result<Option<Vec<u32>>> {
        if b.len() != self.rows {
            return Err(Error::dimension(format!(
                "right-hand side of length {} for {} rows",
                b.len(),
                self.rows
            )));
        }
        let augmented = self.hstack(&Matrix::column_vector(self.field, b))?;
        let (form, pivots) = reduce(augmented, self.cols + 1);
        if pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![0; self.cols];
        for (r, &c) in pivots.iter().enumerate() {
            x[c] = form.get(r, self.cols);
        }
        Ok(Some(x))
    }

    /// Columns form a basis of the null space, one per free column.
    pub fn kernel_basis(&self) -> Matrix {
        let Rref { form, pivots, .. } = self.rref();
        let f = self.field;
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let columns: Vec<Vec<u32>> = free
            .iter()
            .map(|&j| {
                let mut v = vec![0; self.cols];
                v[j] = 1;
                for (r, &c) in pivots.iter().enumerate() {
                    v[c] = f.neg(form.get(r, j));
                }
                v
            })
            .collect();
        Matrix::from_columns(f, self.cols, &columns)
    }

    /// The pivot columns of `self`, a basis of its column space.
    pub fn image_basis(&self) -> Matrix {
        self.select_columns(&self.rref().pivots)
    }

    pub fn select_columns(&self, idx: &[usize]) -> Matrix {
        let columns: Vec<Vec<u32>> = idx.iter().map(|&j| self.column(j)).collect();
        Matrix::from_columns(self.field, self.rows, &columns)
    }

    pub fn select_rows(&self, idx: &[usize]) -> Matrix {
        let data = idx.iter().flat_map(|&r| self.row(r).iter().copied()).collect();
        Matrix {
            field: self.field,
            rows: idx.len(),
            cols: self.cols,
            data,
        }
    }

    /// Quotient of `F_p^n` by the span of the columns of `w`.
    pub fn quotient_basis(field: PrimeField, n: usize, w: &Matrix) -> Result<Quotient> {
        if w.rows != n {
            return Err(Error::dimension(format!("subspace in F^{} of F^{n}", w.rows)));
        }
        let k = w.cols;
        let (_, pivots) = reduce(w.hstack(&Matrix::identity(field, n))?, k + n);
        let sub: Vec<usize> = pivots.iter().copied().filter(|&c| c < k).collect();
        let complement: Vec<usize> = pivots.iter().filter(|&&c| c >= k).map(|&c| c - k).collect();
        let section = Matrix::identity(field, n).select_columns(&complement);
        let basis = w.select_columns(&sub).hstack(&section)?;
        let inverse = basis.inverse().expect("extended basis is invertible");
        let rows: Vec<usize> = (sub.len()..n).collect();
        Ok(Quotient {
            projection: inverse.select_rows(&rows),
            section,
        })
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        self.left_inverse()
    }

    /// `L` with `L · self = 1`, for injective `self`.
    pub fn left_inverse(&self) -> Option<Matrix> {
        let n = self.rows;
        let augmented = self.hstack(&Matrix::identity(self.field, n)).ok()?;
        let (form, pivots) = reduce(augmented, self.cols);
        if pivots.len() != self.cols {
            return None;
        }
        let mut l = Matrix::zeros(self.field, self.cols, n);
        for r in 0..self.cols {
            for c in 0..n {
                l.data[r * n + c] = form.get(r, self.cols + c);
            }
        }
        Some(l)
    }

    pub fn kron(&self, other: &Matrix) -> Matrix {
        let f = self.field;
        let (r2, c2) = other.shape();
        let mut out = Matrix::zeros(f, self.rows * r2, self.cols * c2);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a == 0 {
                    continue;
                }
                for k in 0..r2 {
                    for l in 0..c2 {
                        out.data[(i * r2 + k) * out.cols + j * c2 + l] = f.mul(a, other.get(k, l));
                    }
                }
            }
        }
        out
    }

    /// Block diagonal `[[self, 0], [0, other]]`.
    pub fn direct_sum(&self, other: &Matrix) -> Matrix {
        let mut out = Matrix::zeros(self.field, self.rows + other.rows, self.cols + other.cols);
        out.paste(0, 0, self);
        out.paste(self.rows, self.cols, other);
        out
    }

    pub fn block_diagonal(field: PrimeField, blocks: &[Matrix]) -> Matrix {
        blocks
            .iter()
            .fold(Matrix::zeros(field, 0, 0), |acc, b| acc.direct_sum(b))
    }

    pub fn hstack(&self, other: &Matrix) -> Result<Matrix> {
        self.same_field(other)?;
        if self.rows != other.rows {
            return Err(Error::dimension("hstack of matrices with different row counts"));
        }
        let mut out = Matrix::zeros(self.field, self.rows, self.cols + other.cols);
        out.paste(0, 0, self);
        out.paste(0, self.cols, other);
        Ok(out)
    }

    pub fn vstack(&self, other: &Matrix) -> Result<Matrix> {
        self.same_field(other)?;
        if self.cols != other.cols {
            return Err(Error::dimension("vstack of matrices with different column counts"));
        }
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Ok(Matrix {
            field: self.field,
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        })
    }

    /// Concatenates blocks side by side; `rows` fixes the shape when empty.
    pub fn hconcat(field: PrimeField, rows: usize, blocks: &[Matrix]) -> Matrix {
        blocks
            .iter()
            .fold(Matrix::zeros(field, rows, 0), |acc, b| acc.hstack(b).expect("row counts agree"))
    }

    pub fn vconcat(field: PrimeField, cols: usize, blocks: &[Matrix]) -> Matrix {
        blocks
            .iter()
            .fold(Matrix::zeros(field, 0, cols), |acc, b| acc.vstack(b).expect("column counts agree"))
    }

    fn paste(&mut self, r0: usize, c0: usize, block: &Matrix) {
        for r in 0..block.rows {
            for c in 0..block.cols {
                self.data[(r0 + r) * self.cols + c0 + c] = block.get(r, c);
            }
        }
    }

    /// The row-major entries as one column vector.
    pub fn flatten(&self) -> Vec<u32> {
        self.data.clone()
    }

    /// Inverse of [`Matrix::flatten`].
    pub fn unflatten(field: PrimeField, rows: usize, cols: usize, v: &[u32]) -> Matrix {
        Matrix::from_flat(field, rows, cols, v.to_vec()).expect("length matches shape")
    }
}

/// Gauss-Jordan elimination, choosing pivots only among the first `limit`
/// columns. Returns the reduced matrix and its pivot columns.
fn reduce(mut m: Matrix, limit: usize) -> (Matrix, Vec<usize>) {
    let f = m.field;
    let cols = m.cols;
    let mut pivots = Vec::new();
    let mut row = 0;
    for c in 0..limit.min(cols) {
        if row == m.rows {
            break;
        }
        let Some(pr) = (row..m.rows).find(|&r| m.data[r * cols + c] != 0) else {
            continue;
        };
        if pr != row {
            for k in 0..cols {
                m.data.swap(pr * cols + k, row * cols + k);
            }
        }
        let inv = f.inv(m.data[row * cols + c]).expect("pivot is nonzero");
        for k in 0..cols {
            m.data[row * cols + k] = f.mul(m.data[row * cols + k], inv);
        }
        for r in 0..m.rows {
            let factor = m.data[r * cols + c];
            if r == row || factor == 0 {
                continue;
            }
            for k in 0..cols {
                let sub = f.mul(factor, m.data[row * cols + k]);
                m.data[r * cols + k] = f.sub(m.data[r * cols + k], sub);
            }
        }
        pivots.push(c);
        row += 1;
    }
    (m, pivots)
}

impl Mul for &Matrix {
    type Output = Matrix;

    /// Panics on shape mismatch; see [`Matrix::checked_mul`].
    fn mul(self, rhs: &Matrix) -> Matrix {
        self.checked_mul(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Add for &Matrix {
    type Output = Matrix;

    fn add(self, rhs: &Matrix) -> Matrix {
        self.checked_add(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Neg for &Matrix {
    type Output = Matrix;

    fn neg(self) -> Matrix {
        self.scale(self.field.neg(1 % self.field.p()))
    }
}

impl Sub for &Matrix {
    type Output = Matrix;

    fn sub(self, rhs: &Matrix) -> Matrix {
        self + &(-rhs)
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}{:?}", self.field, self.to_rows())
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(u32::to_string).collect();
            writeln!(f, "[{}]", row.join(" "))?;
        }
        Ok(())
    }
}
