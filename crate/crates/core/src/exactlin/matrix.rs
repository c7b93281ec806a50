use std::fmt;

use num::BigRational;

use super::arith::{self, Arith, Fp, Q};
use super::field::{Field, Scalar};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
enum Data {
    Fp(Vec<u32>),
    Q(Vec<BigRational>),
}

impl From<Vec<u32>> for Data {
    fn from(v: Vec<u32>) -> Data {
        Data::Fp(v)
    }
}

impl From<Vec<BigRational>> for Data {
    fn from(v: Vec<BigRational>) -> Data {
        Data::Q(v)
    }
}

/// Run `$body` with `$ar` bound to the arithmetic of `$m` and `$v` to its entries.
macro_rules! dispatch {
    ($m:expr, $ar:ident, $v:ident => $body:expr) => {
        match &$m.data {
            Data::Fp($v) => {
                let $ar = Fp($m.field.characteristic());
                $body
            }
            Data::Q($v) => {
                let $ar = Q;
                $body
            }
        }
    };
}

/// Binary variant; callers must have checked that both fields agree.
macro_rules! dispatch2 {
    ($a:expr, $b:expr, $ar:ident, $x:ident, $y:ident => $body:expr) => {
        match (&$a.data, &$b.data) {
            (Data::Fp($x), Data::Fp($y)) => {
                let $ar = Fp($a.field.characteristic());
                $body
            }
            (Data::Q($x), Data::Q($y)) => {
                let $ar = Q;
                $body
            }
            _ => unreachable!("field tags checked by caller"),
        }
    };
}

/// Dense matrix over an exact field, stored row-major.
///
/// Morphisms act on column vectors, so a map `k^n -> k^m` is an `m×n` matrix and
/// composition is the matrix product.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Data,
}

/// Reduced row-echelon form together with its pivot columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    pub reduced: Matrix,
    pub pivots: Vec<usize>,
}

impl Rref {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

impl Matrix {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Matrix {
        Matrix::from_i64_fn(field, rows, cols, |_, _| 0)
    }

    pub fn identity(field: Field, n: usize) -> Matrix {
        Matrix::from_i64_fn(field, n, n, |i, j| (i == j) as i64)
    }

    pub fn from_i64_fn(field: Field, rows: usize, cols: usize, f: impl Fn(usize, usize) -> i64) -> Matrix {
        let idx = (0..rows * cols).map(|k| (k / cols.max(1), k % cols.max(1)));
        let data = if field.is_rational() {
            Data::Q(idx.map(|(i, j)| Q.from_i64(f(i, j))).collect())
        } else {
            let ar = Fp(field.characteristic());
            Data::Fp(idx.map(|(i, j)| ar.from_i64(f(i, j))).collect())
        };
        Matrix { field, rows, cols, data }
    }

    /// Build from integer rows; every row must have `cols` entries.
    pub fn from_i64_rows(field: Field, rows: usize, cols: usize, entries: &[Vec<i64>]) -> Result<Matrix> {
        if entries.len() != rows || entries.iter().any(|r| r.len() != cols) {
            return Err(Error::ShapeError(format!(
                "expected {rows}×{cols} entries"
            )));
        }
        Ok(Matrix::from_i64_fn(field, rows, cols, |i, j| entries[i][j]))
    }

    /// Convenience constructor for non-empty literal matrices.
    pub fn from_rows(field: Field, entries: &[&[i64]]) -> Matrix {
        let rows = entries.len();
        let cols = entries.first().map_or(0, |r| r.len());
        let owned: Vec<Vec<i64>> = entries.iter().map(|r| r.to_vec()).collect();
        Matrix::from_i64_rows(field, rows, cols, &owned).expect("ragged literal matrix")
    }

    /// Build from scalars in row-major order. Scalars must already live in `field`
    /// (residues reduced, or rationals for characteristic 0).
    pub fn from_scalars(field: Field, rows: usize, cols: usize, entries: Vec<Scalar>) -> Result<Matrix> {
        if entries.len() != rows * cols {
            return Err(Error::ShapeError(format!(
                "{} entries for a {rows}×{cols} matrix",
                entries.len()
            )));
        }
        let data = if field.is_rational() {
            let mut v = Vec::with_capacity(entries.len());
            for s in entries {
                match s {
                    Scalar::Rational(q) => v.push(q),
                    Scalar::Residue(r) => {
                        return Err(Error::FieldMismatch(format!("residue {r}"), field.to_string()))
                    }
                }
            }
            Data::Q(v)
        } else {
            let mut v = Vec::with_capacity(entries.len());
            for s in entries {
                match s {
                    Scalar::Residue(r) if (r as u64) < field.characteristic() => v.push(r),
                    other => {
                        return Err(Error::FieldMismatch(other.to_string(), field.to_string()))
                    }
                }
            }
            Data::Fp(v)
        };
        Ok(Matrix { field, rows, cols, data })
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

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn entry(&self, i: usize, j: usize) -> Scalar {
        assert!(i < self.rows && j < self.cols, "entry ({i},{j}) out of bounds");
        let k = i * self.cols + j;
        match &self.data {
            Data::Fp(v) => Scalar::Residue(v[k]),
            Data::Q(v) => Scalar::Rational(v[k].clone()),
        }
    }

    /// Entries as nested rows, for serialization and display.
    pub fn to_rows(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.entry(i, j)).collect())
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        dispatch!(self, ar, v => v.iter().all(|x| ar.is_zero(x)))
    }

    fn check_field(&self, other: &Matrix) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch(self.field.to_string(), other.field.to_string()));
        }
        Ok(())
    }

    fn with_data(&self, rows: usize, cols: usize, data: Data) -> Matrix {
        Matrix { field: self.field, rows, cols, data }
    }

    pub fn transpose(&self) -> Matrix {
        let (r, c) = (self.rows, self.cols);
        let data = dispatch!(self, _ar, v => {
            let mut out = Vec::with_capacity(v.len());
            for j in 0..c {
                for i in 0..r {
                    out.push(v[i * c + j].clone());
                }
            }
            Data::from(out)
        });
        self.with_data(c, r, data)
    }

    pub fn mul(&self, rhs: &Matrix) -> Result<Matrix> {
        self.check_field(rhs)?;
        if self.cols != rhs.rows {
            return Err(Error::ShapeError(format!(
                "cannot multiply {}×{} by {}×{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let data = dispatch2!(self, rhs, ar, x, y =>
            Data::from(arith::mul(ar, x, y, self.rows, self.cols, rhs.cols)));
        Ok(self.with_data(self.rows, rhs.cols, data))
    }

    fn zip_with(&self, rhs: &Matrix, sub: bool) -> Result<Matrix> {
        self.check_field(rhs)?;
        if self.shape() != rhs.shape() {
            return Err(Error::ShapeError(format!(
                "shape {:?} vs {:?}",
                self.shape(),
                rhs.shape()
            )));
        }
        let data = dispatch2!(self, rhs, ar, x, y => Data::from(
            x.iter()
                .zip(y.iter())
                .map(|(a, b)| if sub { ar.sub(a, b) } else { ar.add(a, b) })
                .collect::<Vec<_>>()
        ));
        Ok(self.with_data(self.rows, self.cols, data))
    }

    pub fn add(&self, rhs: &Matrix) -> Result<Matrix> {
        self.zip_with(rhs, false)
    }

    pub fn sub(&self, rhs: &Matrix) -> Result<Matrix> {
        self.zip_with(rhs, true)
    }

    pub fn neg(&self) -> Matrix {
        self.scale(-1)
    }

    pub fn scale(&self, k: i64) -> Matrix {
        let data = dispatch!(self, ar, v => {
            let f = ar.from_i64(k);
            Data::from(v.iter().map(|x| ar.mul(x, &f)).collect::<Vec<_>>())
        });
        self.with_data(self.rows, self.cols, data)
    }

    /// `[self | rhs]`.
    pub fn hstack(&self, rhs: &Matrix) -> Result<Matrix> {
        self.check_field(rhs)?;
        if self.rows != rhs.rows {
            return Err(Error::ShapeError(format!(
                "hstack of {} and {} rows",
                self.rows, rhs.rows
            )));
        }
        let (a, b) = (self.cols, rhs.cols);
        let data = dispatch2!(self, rhs, _ar, x, y => {
            let mut out = Vec::with_capacity(self.rows * (a + b));
            for i in 0..self.rows {
                out.extend(x[i * a..(i + 1) * a].iter().cloned());
                out.extend(y[i * b..(i + 1) * b].iter().cloned());
            }
            Data::from(out)
        });
        Ok(self.with_data(self.rows, a + b, data))
    }

    /// `[self ; rhs]`.
    pub fn vstack(&self, rhs: &Matrix) -> Result<Matrix> {
        self.check_field(rhs)?;
        if self.cols != rhs.cols {
            return Err(Error::ShapeError(format!(
                "vstack of {} and {} columns",
                self.cols, rhs.cols
            )));
        }
        let data = dispatch2!(self, rhs, _ar, x, y => {
            let mut out = x.clone();
            out.extend(y.iter().cloned());
            Data::from(out)
        });
        Ok(self.with_data(self.rows + rhs.rows, self.cols, data))
    }

    /// Block-diagonal `[[self, 0], [0, rhs]]`.
    pub fn direct_sum(&self, rhs: &Matrix) -> Result<Matrix> {
        self.check_field(rhs)?;
        let top = self.hstack(&Matrix::zeros(self.field, self.rows, rhs.cols))?;
        let bottom = Matrix::zeros(self.field, rhs.rows, self.cols).hstack(rhs)?;
        top.vstack(&bottom)
    }

    pub fn select_rows(&self, idx: &[usize]) -> Matrix {
        assert!(idx.iter().all(|&i| i < self.rows), "row index out of bounds");
        let c = self.cols;
        let data = dispatch!(self, _ar, v => Data::from(
            idx.iter()
                .flat_map(|&i| v[i * c..(i + 1) * c].iter().cloned())
                .collect::<Vec<_>>()
        ));
        self.with_data(idx.len(), c, data)
    }

    pub fn select_cols(&self, idx: &[usize]) -> Matrix {
        self.transpose().select_rows(idx).transpose()
    }

    /// Rows `start..end`.
    pub fn row_block(&self, start: usize, end: usize) -> Matrix {
        self.select_rows(&(start..end).collect::<Vec<_>>())
    }

    /// Columns `start..end`.
    pub fn col_block(&self, start: usize, end: usize) -> Matrix {
        self.select_cols(&(start..end).collect::<Vec<_>>())
    }

    pub fn rref(&self) -> Rref {
        let (rows, cols) = self.shape();
        let (data, pivots) = dispatch!(self, ar, v => {
            let mut w = v.clone();
            let piv = arith::rref(ar, &mut w, rows, cols);
            (Data::from(w), piv)
        });
        Rref {
            reduced: self.with_data(rows, cols, data),
            pivots,
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank()
    }

    /// Canonical kernel basis as columns: one vector per free column (in increasing
    /// order) with that free variable set to 1 and the others to 0.
    pub fn kernel_basis(&self) -> Matrix {
        let Rref { reduced, pivots } = self.rref();
        let cols = self.cols;
        let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
        let data = dispatch!(reduced, ar, r => {
            let mut out = vec![ar.zero(); cols * free.len()];
            for (k, &fc) in free.iter().enumerate() {
                out[fc * free.len() + k] = ar.one();
                for (i, &pc) in pivots.iter().enumerate() {
                    out[pc * free.len() + k] = ar.neg(&r[i * cols + fc]);
                }
            }
            Data::from(out)
        });
        self.with_data(cols, free.len(), data)
    }

    /// Canonical basis of the column span: the nonzero rows of `rref(selfᵀ)`, as columns.
    pub fn image_basis(&self) -> Matrix {
        let t = self.transpose().rref();
        let rank = t.rank();
        t.reduced.row_block(0, rank).transpose()
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        let sol = solve_right(self, &Matrix::identity(self.field, self.rows)).ok()??;
        (self.rank() == self.rows).then_some(sol)
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, row) in self.to_rows().iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for (j, x) in row.iter().enumerate() {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

/// Solve `a · X = b`; returns the particular solution with free variables set to 0.
pub fn solve_right(a: &Matrix, b: &Matrix) -> Result<Option<Matrix>> {
    a.check_field(b)?;
    if a.rows != b.rows {
        return Err(Error::ShapeError(format!(
            "solve: {} rows vs {} rows",
            a.rows, b.rows
        )));
    }
    let aug = a.hstack(b)?;
    let Rref { reduced, pivots } = aug.rref();
    if pivots.iter().any(|&p| p >= a.cols) {
        return Ok(None);
    }
    let (n, m, w) = (a.cols, b.cols, aug.cols);
    let data = dispatch!(reduced, ar, r => {
        let mut out = vec![ar.zero(); n * m];
        for (i, &pc) in pivots.iter().enumerate() {
            for j in 0..m {
                out[pc * m + j] = r[i * w + n + j].clone();
            }
        }
        Data::from(out)
    });
    Ok(Some(a.with_data(n, m, data)))
}

/// Find `G` with `G · v = w`, or `None` when `ker v ⊄ ker w`.
pub fn solve_left(v: &Matrix, w: &Matrix) -> Result<Option<Matrix>> {
    v.check_field(w)?;
    if v.cols != w.cols {
        return Err(Error::ShapeError(format!(
            "solve_left: {} columns vs {} columns",
            v.cols, w.cols
        )));
    }
    Ok(solve_right(&v.transpose(), &w.transpose())?.map(|g| g.transpose()))
}
